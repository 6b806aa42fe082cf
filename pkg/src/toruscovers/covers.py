"""Enumeration of covers of an elliptic curve branched over one point.

A degree-d cover branched over a single point with local monodromy in the
conjugacy class sigma is encoded by a pair (alpha, beta) of permutations
whose commutator lies in sigma and which generate a transitive subgroup of
S_d.  Two pairs give the same cover iff they are simultaneously conjugate,
so the objects enumerated here are conjugation classes of such pairs.

The enumeration fixes beta to one canonical representative per cycle type
and walks the solution set for alpha in cosets: alpha solves
``alpha beta alpha^-1 = gamma beta`` for exactly one gamma in sigma's
class, and for fixed gamma the solutions form one left coset of the
centralizer of beta.  Classes with beta fixed correspond to orbits of that
centralizer acting on alpha by conjugation.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from math import factorial
from typing import Iterator, Optional, Sequence

from .perms import (
    Partition,
    Perm,
    centralizer_elements,
    centralizer_gens,
    centralizer_order,
    class_elements,
    classify_group,
    compose,
    conjugate,
    conjugating_element,
    cycle_string,
    cycle_type,
    identity,
    inverse,
    is_transitive,
    parse_cycles,
    partition_sign,
    partitions,
    type_rep,
    type_weight,
)

DEFAULT_MAX_DEGREE = 9

# centralizers up to this order are materialized once per cycle type; the
# minimum-in-orbit search then scans them with early abort, which beats a
# breadth-first orbit walk except when the centralizer is huge
_MATERIALIZE_LIMIT = 60_000


class CapacityError(RuntimeError):
    """Raised when a request exceeds the configured brute-force bounds."""


class ConsistencyError(RuntimeError):
    """Raised when an internal cross-check fails (should never happen)."""


# ---------------------------------------------------------------------------
# ramification profiles


@dataclass(frozen=True)
class RamificationProfile:
    """Cycle type of the branch-point monodromy, as a full partition of d
    (descending, trivial parts included)."""

    parts: Partition

    def __post_init__(self) -> None:
        if not self.parts or any(l < 1 for l in self.parts):
            raise ValueError("profile parts must be positive")
        if tuple(sorted(self.parts, reverse=True)) != self.parts:
            raise ValueError("profile parts must be sorted descending")

    @classmethod
    def of(cls, degree: int, spec: "str | Sequence[int]") -> "RamificationProfile":
        """Build a profile for S_degree, padding with fixed points.

        ``spec`` is either an iterable of parts or a string like ``"3"``,
        ``"2,2"`` or ``"3,1,1"``; parts summing to less than the degree
        are padded with 1s.
        """
        if isinstance(spec, str):
            tokens = [t for t in spec.replace(",", " ").split() if t]
            parts = [int(t) for t in tokens]
        else:
            parts = [int(x) for x in spec]
        if any(p < 1 for p in parts):
            raise ValueError("profile parts must be positive")
        total = sum(parts)
        if total > degree:
            raise ValueError(f"profile {parts} exceeds degree {degree}")
        parts.extend([1] * (degree - total))
        return cls(tuple(sorted(parts, reverse=True)))

    @property
    def degree(self) -> int:
        return sum(self.parts)

    @property
    def nontrivial_parts(self) -> Partition:
        return tuple(l for l in self.parts if l > 1)

    @property
    def ramified_count(self) -> int:
        return len(self.nontrivial_parts)

    @property
    def admits_covers(self) -> bool:
        """Commutators are even, so an odd class admits no covers."""
        return partition_sign(self.parts) == 1

    @property
    def genus(self) -> Optional[int]:
        """Genus of the covering curves: 2g - 2 = sum(l_i - 1).  None when
        that sum is odd (no covers exist)."""
        k = sum(l - 1 for l in self.parts)
        if k % 2:
            return None
        return (k + 2) // 2

    @property
    def kappa_factor(self) -> Fraction:
        """d - sum(1/l_i) over all parts, the weight entering the slope."""
        return self.degree - sum(Fraction(1, l) for l in self.parts)

    def __str__(self) -> str:
        return "(" + ",".join(str(l) for l in self.parts) + ")"


# ---------------------------------------------------------------------------
# canonical forms


@dataclass(frozen=True)
class _TypeContext:
    """Cached data for one beta cycle type: the fixed representative, its
    centralizer generators (with inverses precomputed) and, when small
    enough, the materialized centralizer."""

    parts: Partition
    rep: Perm
    gens: tuple[Perm, ...]
    order: int
    elements: Optional[tuple[tuple[Perm, Perm], ...]]  # (z, z^-1) pairs


@lru_cache(maxsize=None)
def _type_context(parts: Partition) -> _TypeContext:
    rep = type_rep(parts)
    gens = tuple(centralizer_gens(parts))
    order = centralizer_order(parts)
    elements = None
    if order <= _MATERIALIZE_LIMIT:
        elements = tuple((z, inverse(z)) for z in centralizer_elements(parts))
        if len(elements) != order:
            raise ConsistencyError("centralizer enumeration size mismatch")
    return _TypeContext(parts, rep, gens, order, elements)


def _min_over_elements(alpha: Perm, ctx: _TypeContext) -> Perm:
    """Smallest conjugate of alpha under the materialized centralizer,
    compared lexicographically with early abort."""
    d = len(alpha)
    best = list(alpha)
    for z, zinv in ctx.elements:  # type: ignore[union-attr]
        for x in range(d):
            v = z[alpha[zinv[x]]]
            b = best[x]
            if v > b:
                break
            if v < b:
                cand = [z[alpha[zinv[y]]] for y in range(d)]
                best = cand
                break
    return tuple(best)


def _orbit_min(alpha: Perm, ctx: _TypeContext) -> tuple[set[Perm], Perm]:
    """Breadth-first orbit of alpha under centralizer conjugation; returns
    the orbit set and its lexicographic minimum."""
    seen = {alpha}
    best = alpha
    frontier = [alpha]
    while frontier:
        nxt = []
        for a in frontier:
            for g in ctx.gens:
                c = conjugate(g, a)
                if c not in seen:
                    seen.add(c)
                    if c < best:
                        best = c
                    nxt.append(c)
        frontier = nxt
    return seen, best


def canonical_pair(alpha: Perm, beta: Perm) -> tuple[Perm, Perm]:
    """Canonical representative of the simultaneous-conjugation class of
    (alpha, beta): beta becomes the fixed representative of its cycle
    type, then alpha is minimized over the remaining freedom (the
    centralizer of that representative)."""
    parts = cycle_type(beta)
    ctx = _type_context(parts)
    if beta != ctx.rep:
        t = conjugating_element(beta, ctx.rep)
        assert t is not None
        alpha = conjugate(t, alpha)
    if ctx.elements is not None:
        return _min_over_elements(alpha, ctx), ctx.rep
    _, best = _orbit_min(alpha, ctx)
    return best, ctx.rep


# ---------------------------------------------------------------------------
# cover classes


@dataclass(frozen=True)
class CoverClass:
    """One equivalence class of cover pairs, stored by its canonical
    representative."""

    alpha: Perm
    beta: Perm

    @classmethod
    def from_pair(cls, alpha: Perm, beta: Perm) -> "CoverClass":
        a, b = canonical_pair(alpha, beta)
        return cls(a, b)

    @property
    def degree(self) -> int:
        return len(self.alpha)

    @cached_property
    def beta_type(self) -> Partition:
        return cycle_type(self.beta)

    @cached_property
    def commutator_type(self) -> Partition:
        from .perms import commutator

        return cycle_type(commutator(self.alpha, self.beta))

    @cached_property
    def weight(self) -> Fraction:
        """Sum over cycles of beta of 1/length, the multiplicity weight
        this class contributes to M."""
        return type_weight(self.beta_type)

    @cached_property
    def stabilizer_order(self) -> int:
        """Number of simultaneous self-conjugations of the pair."""
        ctx = _type_context(self.beta_type)
        orbit, _ = _orbit_min(self.alpha, ctx)
        if ctx.order % len(orbit):
            raise ConsistencyError("orbit size does not divide centralizer order")
        return ctx.order // len(orbit)

    @cached_property
    def group_kind(self) -> str:
        """Classification of the generated monodromy group."""
        return classify_group([self.alpha, self.beta], self.degree)

    @cached_property
    def is_primitive(self) -> bool:
        """Whether the absolute periods generate the full lattice (the
        cover is not pulled back through an isogeny)."""
        return period_lattice_index(self.alpha, self.beta) == 1

    def __str__(self) -> str:
        return f"({cycle_string(self.alpha)}, {cycle_string(self.beta)})"

    def as_dict(self) -> dict:
        return {"alpha": cycle_string(self.alpha), "beta": cycle_string(self.beta)}


def cover_class_from_strings(alpha: str, beta: str, degree: int) -> CoverClass:
    return CoverClass.from_pair(parse_cycles(alpha, degree), parse_cycles(beta, degree))


def period_lattice_index(alpha: Perm, beta: Perm) -> int:
    """Index in Z^2 of the lattice of absolute periods of the cover.

    Index 1 means the cover is primitive; a larger index m means it is
    the pullback of a smaller cover under a degree-m isogeny of the base.
    Computed as the abelianized point stabilizer: spanning-tree positions
    give each sheet a vector, and every non-tree edge contributes its
    closing defect to the lattice.
    """
    if len(alpha) != len(beta):
        raise ValueError("degree mismatch")
    d = len(alpha)
    if d == 0:
        raise ValueError("empty permutation")
    pos: dict[int, tuple[int, int]] = {0: (0, 0)}
    frontier = [0]
    steps = ((alpha, (1, 0)), (beta, (0, 1)))
    while frontier:
        nxt = []
        for i in frontier:
            for g, (ex, ey) in steps:
                j = g[i]
                if j not in pos:
                    x, y = pos[i]
                    pos[j] = (x + ex, y + ey)
                    nxt.append(j)
        frontier = nxt
    if len(pos) != d:
        raise ValueError("pair is not transitive; period lattice undefined")
    defects: list[tuple[int, int]] = []
    for i in range(d):
        for g, (ex, ey) in steps:
            j = g[i]
            wx = pos[i][0] + ex - pos[j][0]
            wy = pos[i][1] + ey - pos[j][1]
            if (wx, wy) != (0, 0):
                defects.append((wx, wy))
    from math import gcd

    index = 0
    for i, (ax, ay) in enumerate(defects):
        for bx, by in defects[i + 1 :]:
            index = gcd(index, abs(ax * by - ay * bx))
    if index == 0:
        raise ConsistencyError("period lattice has infinite index")
    return index


def is_cover_pair(alpha: Perm, beta: Perm, profile: RamificationProfile) -> bool:
    """Whether (alpha, beta) encodes a connected cover with the given
    branch class: commutator in the class, generated group transitive."""
    from .perms import commutator

    if len(alpha) != profile.degree or len(beta) != profile.degree:
        raise ValueError("degree mismatch with profile")
    if cycle_type(commutator(alpha, beta)) != profile.parts:
        return False
    return is_transitive([alpha, beta], profile.degree)


# ---------------------------------------------------------------------------
# enumeration


def _coset_solutions(
    ctx: _TypeContext, sigma: Partition, degree: int
) -> Iterator[Perm]:
    """Yield every alpha with ``alpha beta0 alpha^-1 beta0^-1`` in the
    class sigma, beta0 the fixed representative of ctx.  Each alpha is
    produced exactly once (distinct gammas give disjoint cosets)."""
    beta0 = ctx.rep
    for gamma in class_elements(sigma, degree):
        delta = compose(gamma, beta0)
        if cycle_type(delta) != ctx.parts:
            continue
        a0 = conjugating_element(beta0, delta)
        if a0 is None:  # same type; cannot happen
            raise ConsistencyError("missing conjugator for matching types")
        if ctx.elements is not None:
            for z, _ in ctx.elements:
                yield compose(a0, z)
        else:
            for z in centralizer_elements(ctx.parts):
                yield compose(a0, z)


def classes_for_beta_type(
    profile: RamificationProfile, parts: Partition
) -> list[CoverClass]:
    """All cover classes whose beta has the given cycle type, as canonical
    representatives sorted by alpha."""
    d = profile.degree
    if sum(parts) != d:
        raise ValueError("beta type must partition the degree")
    if not profile.admits_covers:
        return []
    ctx = _type_context(parts)
    beta0 = ctx.rep
    seen: set[Perm] = set()
    reps: list[Perm] = []
    for a in _coset_solutions(ctx, profile.parts, d):
        if a in seen:
            continue
        if not is_transitive([a, beta0], d):
            continue
        orbit, best = _orbit_min(a, ctx)
        seen |= orbit
        reps.append(best)
    reps.sort()
    return [CoverClass(a, beta0) for a in reps]


def enumerate_classes(
    degree: int,
    profile: RamificationProfile,
    max_degree: int = DEFAULT_MAX_DEGREE,
) -> list[CoverClass]:
    """Enumerate all cover classes of the given degree and branch class.

    Deterministic order: beta cycle types in reverse-lex order (single
    cycle first), then canonical alphas lexicographically.
    """
    if degree != profile.degree:
        raise ValueError("profile degree mismatch")
    if degree > max_degree:
        raise CapacityError(
            f"degree {degree} exceeds the enumeration bound {max_degree}; "
            "raise max_degree explicitly if you mean it"
        )
    out: list[CoverClass] = []
    for parts in partitions(degree):
        out.extend(classes_for_beta_type(profile, parts))
    return out


# ---------------------------------------------------------------------------
# counting tables


@dataclass(frozen=True)
class CountsTable:
    """Class counts N_type per beta cycle type, with the derived totals
    N = sum N_type and M = sum weight(type) * N_type (exact rational)."""

    degree: int
    profile: RamificationProfile
    by_type: tuple[tuple[Partition, int], ...]  # sorted reverse-lex, nonzero only

    @property
    def N(self) -> int:
        return sum(n for _, n in self.by_type)

    @property
    def M(self) -> Fraction:
        return sum((type_weight(t) * n for t, n in self.by_type), Fraction(0))

    def count(self, parts: Partition) -> int:
        for t, n in self.by_type:
            if t == parts:
                return n
        return 0

    def as_dict(self) -> dict:
        return {
            "d": self.degree,
            "sigma": list(self.profile.parts),
            "types": [
                {"type": list(t), "n": n, "weight": str(type_weight(t))}
                for t, n in self.by_type
            ],
            "N": self.N,
            "M": str(self.M),
        }


def _table_from_counts(
    degree: int, profile: RamificationProfile, counts: dict[Partition, int]
) -> CountsTable:
    rows = tuple(
        (parts, counts[parts])
        for parts in partitions(degree)
        if counts.get(parts, 0)
    )
    return CountsTable(degree, profile, rows)


def count_table(
    degree: int,
    profile: RamificationProfile,
    method: str = "brute",
    max_degree: int = DEFAULT_MAX_DEGREE,
) -> CountsTable:
    """Count classes per beta cycle type.

    ``brute`` enumerates classes and counts orbits (valid for any degree).
    ``burnside_prime`` divides the raw solution count by the centralizer
    order, which counts orbits exactly when the action is free; that holds
    for prime degree, where a pair with transitive group has no nontrivial
    simultaneous self-conjugation.
    """
    if method == "brute":
        counts: dict[Partition, int] = {}
        for c in enumerate_classes(degree, profile, max_degree=max_degree):
            counts[c.beta_type] = counts.get(c.beta_type, 0) + 1
        return _table_from_counts(degree, profile, counts)
    if method == "burnside_prime":
        if degree < 2 or any(degree % k == 0 for k in range(2, degree)):
            raise ValueError("burnside_prime requires a prime degree")
        if degree > max_degree:
            raise CapacityError(
                f"degree {degree} exceeds the enumeration bound {max_degree}"
            )
        counts = {}
        if profile.admits_covers:
            for parts in partitions(degree):
                ctx = _type_context(parts)
                total = 0
                for a in _coset_solutions(ctx, profile.parts, degree):
                    if is_transitive([a, ctx.rep], degree):
                        total += 1
                if total:
                    if total % ctx.order:
                        raise ConsistencyError(
                            "free-action count not divisible by centralizer order"
                        )
                    counts[parts] = total // ctx.order
        return _table_from_counts(degree, profile, counts)
    raise ValueError(f"unknown method {method!r}")


# ---------------------------------------------------------------------------
# weighted counts (used by the character-sum cross-checks)


def weighted_count(degree: int, k: int, parts: Partition) -> Fraction:
    """Number of transitive pairs with beta of the given type and
    commutator of type (2^k 1^(d-2k)), divided by d!.

    Equals the sum over classes of 1/stabilizer_order.  Out-of-range or
    odd k gives zero (no such covers), not an error.
    """
    if k < 0 or 2 * k > degree or k % 2:
        return Fraction(0)
    profile = RamificationProfile.of(degree, [2] * k)
    if sum(parts) != degree:
        raise ValueError("parts must partition the degree")
    total = Fraction(0)
    for c in classes_for_beta_type(profile, parts):
        total += Fraction(1, c.stabilizer_order)
    return total
