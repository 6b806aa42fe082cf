"""Square-tiled-surface view of cover pairs.

A pair (alpha, beta) is the same thing as a surface glued from d unit
squares: h = beta sends each square to its right neighbor, v = alpha to
its upper neighbor.  The commutator's nontrivial cycles are the cone
points; cycles of h are horizontal annuli, and consecutive annuli weld
into a common cylinder exactly when no cone point sits on the interface
circle, i.e. when h(v(i)) = v(h(i)) for every square i of the lower
annulus.

Two self-maps of the set of surfaces generate the relevant symmetry:
U fixes h and composes v with it (the pair map (alpha, beta) ->
(alpha beta, beta)), R quarter-turns the square lattice (the pair map
(alpha, beta) -> (beta^-1, alpha)); R^2 inverts both permutations.

Convention note: h = beta, v = alpha is forced by the worked cylinder
examples; with it, a one-cylinder surface is one whose beta is a single
d-cycle.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .covers import CoverClass
from .perms import (
    Perm,
    classify_group,
    compose,
    cycle_string,
    cycle_type,
    cycles,
    commutator,
    inverse,
    is_transitive,
)


@dataclass(frozen=True)
class SquareTiledSurface:
    """d unit squares labeled 1..d with right-neighbor permutation h and
    up-neighbor permutation v (0-based tuples internally, like Perm)."""

    v: Perm
    h: Perm

    def __post_init__(self):
        if len(self.v) != len(self.h):
            raise ValueError("v and h must have the same degree")
        if not is_transitive([self.v, self.h], len(self.v)):
            raise ValueError("surface is not connected")

    @property
    def degree(self) -> int:
        return len(self.h)

    @classmethod
    def from_pair(cls, cover: CoverClass) -> "SquareTiledSurface":
        return cls(v=cover.alpha, h=cover.beta)

    def to_pair(self) -> CoverClass:
        return CoverClass.from_pair(self.v, self.h)

    def __str__(self) -> str:
        return f"(v={cycle_string(self.v)}, h={cycle_string(self.h)})"


def singularities(s: SquareTiledSurface) -> list[int]:
    """Cone angles as multiples of 2*pi, one entry per nontrivial
    commutator cycle, descending.  A length-l cycle is a cone point of
    angle 2*pi*l; regular points are omitted."""
    return [l for l in cycle_type(commutator(s.v, s.h)) if l >= 2]


def singular_squares(s: SquareTiledSurface) -> frozenset[int]:
    """1-based labels of squares moved by the commutator (the support of
    the cone points)."""
    c = commutator(s.v, s.h)
    return frozenset(i + 1 for i in range(len(c)) if c[i] != i)


def cylinders(s: SquareTiledSurface) -> list[tuple[int, int]]:
    """(circumference, height) of the horizontal cylinders, ordered by
    their smallest square label.

    Height counts merged annuli; the interface above an annulus is
    smooth (so the next annulus joins the same cylinder) iff
    h(v(i)) = v(h(i)) for every i on it."""
    return [(len(rows[0]), len(rows)) for rows in _cylinder_rows(s)]


def _annulus_merges_up(s: SquareTiledSurface, annulus: Sequence[int]) -> bool:
    return all(s.h[s.v[i]] == s.v[s.h[i]] for i in annulus)


def _cylinder_rows(s: SquareTiledSurface) -> list[list[tuple[int, ...]]]:
    """Cylinders as lists of annuli (bottom first), each annulus a tuple
    of 0-based squares in h-order; cylinders sorted by smallest label."""
    annuli = cycles(s.h)  # includes fixed points as 1-cycles
    index = {}
    for n, cyc in enumerate(annuli):
        for i in cyc:
            index[i] = n
    # annulus -> annulus above it within the same cylinder; v restricted
    # to a smooth interface is a bijection of annuli, so this map is
    # injective and its components are simple chains or simple loops
    # (loops happen when the vertical direction closes up, e.g. on an
    # unramified torus cover)
    up = {}
    for n, cyc in enumerate(annuli):
        if _annulus_merges_up(s, cyc):
            up[n] = index[s.v[cyc[0]]]
    merged_into = set(up.values())
    assigned = [False] * len(annuli)
    stacks: list[list[int]] = []
    for n in range(len(annuli)):  # chains, from their bottoms
        if assigned[n] or n in merged_into:
            continue
        chain = [n]
        assigned[n] = True
        while chain[-1] in up:
            m = up[chain[-1]]
            chain.append(m)
            assigned[m] = True
        stacks.append(chain)
    for n in range(len(annuli)):  # what remains are loops
        if assigned[n]:
            continue
        loop = [n]
        assigned[n] = True
        m = up[n]
        while m != n:
            loop.append(m)
            assigned[m] = True
            m = up[m]
        low = min(range(len(loop)), key=lambda i: min(annuli[loop[i]]))
        stacks.append(loop[low:] + loop[:low])
    out = []
    for chain in stacks:
        stack = [annuli[m] for m in chain]
        if len({len(a) for a in stack}) != 1:
            raise RuntimeError("merged annuli of unequal circumference")
        out.append(stack)
    out.sort(key=lambda st: min(min(a) for a in st))
    return out


def act_U(s: SquareTiledSurface) -> SquareTiledSurface:
    """Horizontal shear: v becomes v*h, h is unchanged (so cylinder
    circumferences are preserved)."""
    return SquareTiledSurface(v=compose(s.v, s.h), h=s.h)


def act_R(s: SquareTiledSurface) -> SquareTiledSurface:
    """Quarter turn: the pair (v, h) becomes (h^-1, v); applying it
    twice inverts both permutations."""
    return SquareTiledSurface(v=inverse(s.h), h=s.v)


def ur_orbits(classes: Sequence[CoverClass]) -> list[tuple[int, ...]]:
    """Orbits of the <U, R> action on a list of cover classes, as sorted
    index tuples (sorted by smallest member)."""
    position = {(c.alpha, c.beta): i for i, c in enumerate(classes)}
    seen = [False] * len(classes)
    orbits = []
    for start in range(len(classes)):
        if seen[start]:
            continue
        block = []
        todo = [start]
        seen[start] = True
        while todo:
            i = todo.pop()
            block.append(i)
            surf = SquareTiledSurface.from_pair(classes[i])
            for image in (act_U(surf), act_R(surf)):
                c = image.to_pair()
                j = position.get((c.alpha, c.beta))
                if j is None:
                    raise KeyError(
                        f"image {c} of class {classes[i]} is not in the list"
                    )
                if not seen[j]:
                    seen[j] = True
                    todo.append(j)
        orbits.append(tuple(sorted(block)))
    orbits.sort(key=lambda b: b[0])
    return orbits


def weierstrass_parity(cover: CoverClass) -> int:
    """Number of integer Weierstrass points of a genus-2 one-point cover
    with branching (3, 1^(d-3)): 1 when the pair generates the full
    symmetric group, 3 when it generates the alternating group."""
    nontrivial = tuple(l for l in cover.commutator_type if l >= 2)
    if nontrivial != (3,):
        raise ValueError(
            "parity invariant is defined for the (3, 1^(d-3)) family only"
        )
    kind = classify_group([cover.alpha, cover.beta], len(cover.alpha))
    if kind == "symmetric":
        return 1
    if kind == "alternating":
        return 3
    raise ValueError("pair generates neither S_d nor A_d")


# ---------------------------------------------------------------------------
# rendering


def render_ascii(
    s: SquareTiledSurface, mark: Optional[Iterable[int]] = None
) -> str:
    """Cylinder-by-cylinder grid of labeled squares, top annulus first;
    squares in `mark` (default: the commutator support) get a '*'."""
    marked = singular_squares(s) if mark is None else {int(i) for i in mark}
    width = max(len(str(s.degree)) + 1, 3)
    blocks = []
    for stack in _cylinder_rows(s):
        lines = []
        rule = "+" + ("-" * width + "+") * len(stack[0])
        lines.append(rule)
        for annulus in reversed(stack):  # top row printed first
            cells = []
            for i in annulus:
                label = str(i + 1) + ("*" if i + 1 in marked else "")
                cells.append(label.center(width))
            lines.append("|" + "|".join(cells) + "|")
            lines.append(rule)
        blocks.append("\n".join(lines))
    return "\n\n".join(blocks) + "\n"


def render_svg(
    s: SquareTiledSurface, mark: Optional[Iterable[int]] = None
) -> str:
    """SVG 1.1 document with one rectangle per square, cylinders stacked
    with a gap, cone-point squares dotted."""
    marked = singular_squares(s) if mark is None else {int(i) for i in mark}
    unit, gap, pad = 40, 20, 10
    rows = _cylinder_rows(s)
    height = pad * 2 + sum(len(st) * unit for st in rows) + gap * (len(rows) - 1)
    width = pad * 2 + max(len(st[0]) for st in rows) * unit
    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{width}" height="{height}">',
        '<g font-family="monospace" font-size="14" text-anchor="middle">',
    ]
    y = pad
    for stack in rows:
        for r, annulus in enumerate(reversed(stack)):
            for c, i in enumerate(annulus):
                x = pad + c * unit
                parts.append(
                    f'<rect x="{x}" y="{y + r * unit}" width="{unit}" '
                    f'height="{unit}" fill="white" stroke="black"/>'
                )
                parts.append(
                    f'<text x="{x + unit // 2}" y="{y + r * unit + unit // 2 + 5}">'
                    f"{i + 1}</text>"
                )
                if i + 1 in marked:
                    parts.append(
                        f'<circle cx="{x + 6}" cy="{y + r * unit + 6}" r="3" '
                        f'fill="black"/>'
                    )
        y += len(stack) * unit + gap
    parts.append("</g>")
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def render(
    s: SquareTiledSurface,
    format: str = "ascii",
    mark: Optional[Iterable[int]] = None,
) -> str:
    if format == "ascii":
        return render_ascii(s, mark)
    if format == "svg":
        return render_svg(s, mark)
    raise ValueError(f"unknown format {format!r}")
