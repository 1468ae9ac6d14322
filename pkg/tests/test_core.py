import pytest

from twistwidth import (
    AxiomViolationError,
    DeltaMatroid,
    EmptyFamilyError,
    GroundSetError,
    validate,
)


def fam(d):
    return sorted(sorted(f) for f in d.feasible_sets())


class TestValidate:
    def test_four_point_family_is_valid(self):
        d = validate("ab", ["", "a", "b", "ab"])
        assert fam(d) == [[], ["a"], ["a", "b"], ["b"]]

    def test_axiom_violation_carries_witness(self):
        with pytest.raises(AxiomViolationError) as err:
            validate("xyz", ["", "x", "y", "xyz"])
        w = err.value
        assert w.u in w.x ^ w.y

    def test_rank_zero_singleton(self):
        d = validate("a", [""])
        assert fam(d) == [[]]

    def test_empty_family_rejected(self):
        with pytest.raises(EmptyFamilyError):
            validate("ab", [])

    def test_empty_ground_set_accepted(self):
        d = validate("", [""])
        assert d.width() == 0

    def test_duplicate_labels_rejected(self):
        with pytest.raises(GroundSetError):
            validate("aa", ["a"])

    def test_unknown_element_rejected(self):
        with pytest.raises(GroundSetError):
            validate("ab", ["c"])


class TestTwist:
    def test_empty_twist_is_identity(self, cat):
        d1 = cat[0]
        assert d1.twist([]) == d1

    def test_twist_of_odd_triangle_by_one_element(self, cat):
        twisted = cat[2].twist("a")
        assert fam(twisted) == [["a"], ["a", "b", "c"], ["b"], ["c"]]

    def test_twist_is_involution(self, cat):
        d2 = cat[1]
        assert d2.twist("ab").twist("ab") == d2

    def test_twist_outside_ground_set(self, cat):
        with pytest.raises(GroundSetError):
            cat[0].twist(["z"])


class TestDual:
    def test_dual_of_singleton(self):
        d = validate("a", [""])
        assert fam(d.dual()) == [["a"]]

    def test_self_dual_four_point_family(self, cat):
        assert cat[0].dual() == cat[0]

    def test_dual_involution(self, cat):
        d5 = cat[4]
        assert d5.dual().dual() == d5


class TestLoopsColoops:
    def test_loop(self):
        d = validate("ab", ["a"])
        assert d.is_loop("b") and not d.is_loop("a")

    def test_coloop_false_when_empty_feasible(self, cat):
        assert not cat[0].is_coloop("a")

    def test_coloop(self):
        d = validate("ab", ["a", "ab"])
        assert d.is_coloop("a")


class TestMinors:
    def test_delete(self, cat):
        assert fam(cat[1].delete("c")) == [[], ["a"], ["b"]]

    def test_contract(self, cat):
        assert fam(cat[3].contract("a")) == [["b"], ["b", "c"], ["c"]]

    def test_loop_contract_equals_delete(self):
        d = validate("ab", ["a"])
        assert d.contract("b") == d.delete("b")
        assert fam(d.contract("b")) == [["a"]]

    def test_coloop_delete_equals_contract(self):
        d = validate("ab", ["a", "ab"])
        assert d.delete("a") == d.contract("a")

    def test_trivial_minor(self, cat):
        assert cat[2].minor([], []) == cat[2]

    def test_minor_by_deletion_set(self, cat):
        assert fam(cat[4].minor(delete="c")) == [[], ["a"], ["a", "b"]]

    def test_minor_orders_agree(self, cat):
        d4 = cat[3]
        via_delete_first = d4.delete("a").contract("b")
        via_contract_first = d4.contract("b").delete("a")
        assert via_delete_first == via_contract_first
        assert d4.minor(delete="a", contract="b") == via_delete_first

    def test_overlapping_minor_sets_rejected(self, cat):
        with pytest.raises(GroundSetError):
            cat[1].minor(delete="a", contract="a")


class TestRestrict:
    def test_restrict_drops_outside_sets(self, cat):
        assert fam(cat[1].restrict("ab")) == [[], ["a"], ["b"]]

    def test_restrict_to_ground_set(self, cat):
        assert cat[2].restrict("abc") == cat[2]

    def test_restrict_odd_triangle(self, cat):
        assert fam(cat[2].restrict("ab")) == [[], ["a", "b"]]

    def test_restrict_keeps_only_subsets_when_empty_feasible(self, cat):
        d5 = cat[4]
        expected = [f for f in d5.feasible_sets() if f <= {"a", "b"}]
        assert sorted(map(sorted, expected)) == fam(d5.restrict("ab"))


class TestWidthRhoParity:
    def test_width_of_four_point_family(self, cat):
        assert cat[0].width() == 2

    def test_width_of_matroid_is_zero(self):
        assert validate("ab", ["a", "b"]).width() == 0

    def test_widths_across_catalog(self, cat):
        assert [d.width() for d in cat] == [2, 3, 2, 3, 2]

    def test_rho_of_feasible_set_is_full(self, cat):
        assert cat[2].rho("ab") == 3

    def test_rho_of_empty_set(self, cat):
        d2 = cat[1]
        assert d2.rho([]) == d2.n - d2.min_feasible_size()

    def test_rho_singleton(self, cat):
        assert cat[0].rho("a") == 2

    def test_rho_bounds(self, dms_by_n):
        # rho can drop below the minimum feasible size (family {{e1}} on
        # three elements has rho({e2,e3}) = 0), so only 0 <= rho <= n holds
        for d in dms_by_n[3]:
            for a in range(d.full_mask + 1):
                r = d.rho(a)
                assert 0 <= r <= d.n
                assert (r == d.n) == (a in set(d.masks))
            assert d.rho([]) == d.n - d.min_feasible_size()

    def test_is_even(self, cat):
        assert cat[2].is_even()
        assert not cat[0].is_even()
        assert validate("ab", ["a", "b"]).is_even()


class TestExhaustiveIdentities:
    def test_twist_closure_and_involution(self, dms_by_n):
        for n in (1, 2, 3):
            for d in dms_by_n[n]:
                for a in range(d.full_mask + 1):
                    t = d.twist(a)
                    DeltaMatroid(t.labels, t.masks)  # axiom re-check
                    assert t.twist(a) == d

    def test_contract_is_twisted_delete(self, dms_by_n):
        for n in (1, 2, 3):
            for d in dms_by_n[n]:
                for e in d.labels:
                    assert d.contract(e) == d.twist([e]).delete(e)
                    assert d.delete(e) == d.twist([e]).contract(e)

    def test_width_invariant_under_dual(self, dms_by_n):
        for d in dms_by_n[3]:
            assert d.dual().width() == d.width()
