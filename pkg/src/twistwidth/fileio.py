"""Line-oriented text format for delta-matroids.

One ``elements:`` line declaring the ground set (order defines bit
positions), then one ``feasible:`` line per feasible set. ``#`` starts a
comment, blank lines are ignored. Canonical output lists feasible lines in
ascending bitmask order with elements in ground order.
"""

from __future__ import annotations

from .core import DeltaMatroid, validate


class ParseError(ValueError):
    """Malformed input text; carries a 1-based line number."""

    def __init__(self, line_no: int, message: str):
        self.line_no = line_no
        super().__init__(f"line {line_no}: {message}")


def parse(text: str) -> DeltaMatroid:
    """Parse and validate a delta-matroid document.

    Raises ParseError for format problems and AxiomViolationError (with
    its witness triple) when the family fails symmetric exchange.
    """
    labels = None
    families: list[frozenset[str]] = []
    seen: set[frozenset[str]] = set()
    elements_line = 0
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("elements:"):
            if labels is not None:
                raise ParseError(
                    line_no,
                    f"duplicate elements line (first at line {elements_line})",
                )
            labels = tuple(line[len("elements:"):].split())
            elements_line = line_no
            if len(set(labels)) != len(labels):
                raise ParseError(line_no, "element labels must be distinct")
        elif line.startswith("feasible:"):
            if labels is None:
                raise ParseError(line_no, "feasible line before elements line")
            members = line[len("feasible:"):].split()
            for e in members:
                if e not in labels:
                    raise ParseError(line_no, f"unknown element {e!r}")
            fset = frozenset(members)
            if fset in seen:
                raise ParseError(
                    line_no, f"duplicate feasible set {sorted(fset)}"
                )
            seen.add(fset)
            families.append(fset)
        else:
            raise ParseError(
                line_no, f"expected 'elements:' or 'feasible:', got {line!r}"
            )
    if labels is None:
        raise ParseError(1, "missing elements line")
    if not families:
        raise ParseError(1, "at least one feasible line is required")
    return validate(labels, families)


def serialize(d: DeltaMatroid) -> str:
    """Canonical text form; ``parse(serialize(d)) == d``."""
    lines = ["elements: " + " ".join(d.labels) if d.labels else "elements:"]
    for m in d.masks:
        members = [e for i, e in enumerate(d.labels) if m >> i & 1]
        lines.append("feasible: " + " ".join(members) if members else "feasible:")
    return "\n".join(lines) + "\n"
