"""Symmetric-group characters and disconnected cover counts.

Dropping the transitivity requirement makes cover counting pure
character theory: for beta in a fixed class P and commutator required to
land in the class T = (2^k 1^(d-2k)),

    Nhat = |P| * |T| * sum over irreducible chi of chi(P)^2 chi(T)/deg(chi),

because the number of alpha solving alpha beta alpha^-1 = g beta is the
centralizer order whenever g beta stays in P, and zero otherwise.  That
last observation also gives a second, character-free way to compute the
same number (the "convolution" method below), which the tests play off
against the first.

The transitive weighted counts Ntilde (covers.weighted_count) assemble
into a generating series Ztilde, graded by (beta type, k); the series of
disconnected counts Zhat is its formal exponential minus one, since a
disconnected cover splits uniquely into connected pieces whose beta
types concatenate and whose k's add.
"""
from __future__ import annotations

import io
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Mapping, Sequence

from .covers import weighted_count
from .perms import (
    Partition,
    class_elements,
    class_size,
    compose,
    cycle_type,
    partitions,
    type_rep,
)

Key = tuple[Partition, int]


# ---------------------------------------------------------------------------
# Murnaghan-Nakayama recursion over border strips, in beta-number form


def _beta_numbers(shape: Partition) -> tuple[int, ...]:
    r = len(shape)
    return tuple(shape[i] + r - 1 - i for i in range(r))


def _shape_from_beta(beta: Sequence[int]) -> Partition:
    r = len(beta)
    parts = [beta[i] - (r - 1 - i) for i in range(r)]
    return tuple(p for p in parts if p > 0)


@lru_cache(maxsize=None)
def _mn(shape: Partition, mu: Partition) -> int:
    if not mu:
        return 1
    beta = _beta_numbers(shape)
    bset = set(beta)
    m = mu[0]
    rest = mu[1:]
    total = 0
    for b in beta:
        nb = b - m
        if nb < 0 or nb in bset:
            continue
        height = sum(1 for x in beta if nb < x < b)
        new = sorted((x for x in beta if x != b), reverse=True)
        new.append(nb)
        new.sort(reverse=True)
        value = _mn(_shape_from_beta(new), rest)
        total += -value if height % 2 else value
    return total


def character_value(shape: Sequence[int], cls: Sequence[int]) -> int:
    """Irreducible character of S_d indexed by the partition `shape`,
    evaluated on the class of cycle type `cls`.

    >>> character_value([3], [2, 1])
    1
    >>> character_value([1, 1, 1], [2, 1])
    -1
    >>> character_value([2, 1], [1, 1, 1])
    2
    """
    s = tuple(sorted((int(p) for p in shape), reverse=True))
    c = tuple(sorted((int(p) for p in cls), reverse=True))
    if sum(s) != sum(c):
        raise ValueError(f"shape {shape} and class {cls} have different sizes")
    if any(p < 1 for p in s + c):
        raise ValueError("partition parts must be positive")
    return _mn(s, c)


def character_degree(shape: Sequence[int]) -> int:
    """Dimension of the irreducible indexed by `shape`, by hook lengths.

    >>> character_degree([2, 1])
    2
    >>> character_degree([4])
    1
    """
    s = tuple(sorted((int(p) for p in shape), reverse=True))
    d = sum(s)
    conj = [sum(1 for p in s if p > j) for j in range(s[0])] if s else []
    product = 1
    for i, row in enumerate(s):
        for j in range(row):
            product *= row - j + conj[j] - i - 1
    value = Fraction(factorial(d), product)
    if value.denominator != 1:
        raise ArithmeticError("hook product does not divide d!")
    return int(value)


@dataclass(frozen=True)
class CharacterTable:
    """Full character table of S_d: one row per shape, one column per
    class, both indexed by the partitions of d in reverse-lex order."""

    degree: int
    shapes: tuple[Partition, ...]
    values: Mapping[tuple[Partition, Partition], int]
    degrees: Mapping[Partition, int]

    @classmethod
    def build(cls, degree: int) -> "CharacterTable":
        shapes = tuple(partitions(degree))
        values = {
            (s, c): character_value(s, c) for s in shapes for c in shapes
        }
        degrees = {s: character_degree(s) for s in shapes}
        return cls(degree, shapes, values, degrees)

    def value(self, shape: Partition, cls_: Partition) -> int:
        return self.values[tuple(shape), tuple(cls_)]

    def row_orthogonal(self) -> bool:
        n = factorial(self.degree)
        for a in self.shapes:
            for b in self.shapes:
                total = sum(
                    class_size(c) * self.values[a, c] * self.values[b, c]
                    for c in self.shapes
                )
                if total != (n if a == b else 0):
                    return False
        return True

    def column_orthogonal(self) -> bool:
        n = factorial(self.degree)
        for a in self.shapes:
            for b in self.shapes:
                total = sum(
                    self.values[s, a] * self.values[s, b] for s in self.shapes
                )
                want = n // class_size(a) if a == b else 0
                if total != want:
                    return False
        return True

    def to_csv(self) -> str:
        out = io.StringIO()
        head = ["shape"] + ["|".join(map(str, c)) for c in self.shapes]
        out.write(",".join(head) + "\n")
        for s in self.shapes:
            row = ["|".join(map(str, s))] + [
                str(self.values[s, c]) for c in self.shapes
            ]
            out.write(",".join(row) + "\n")
        return out.getvalue()


# ---------------------------------------------------------------------------
# disconnected counts


def tau_type(degree: int, k: int) -> Partition:
    """The commutator target class (2^k 1^(d-2k))."""
    if k < 0 or 2 * k > degree:
        raise ValueError(f"k={k} out of range for degree {degree}")
    return (2,) * k + (1,) * (degree - 2 * k)


def disconnected_count(
    degree: int, k: int, parts: Sequence[int], method: str = "characters"
) -> int:
    """Number of pairs (alpha, beta) with beta of the given cycle type
    and commutator of type (2^k 1^(d-2k)) -- no transitivity required.

    `characters` evaluates the Frobenius-style sum over the character
    table; `convolution` counts directly how many tau-class elements g
    keep g*beta0 in beta's class, which scales with the tau class size
    instead of the number of irreducibles.
    """
    p = tuple(sorted((int(x) for x in parts), reverse=True))
    if sum(p) != degree:
        raise ValueError(f"{parts} is not a partition of {degree}")
    tau = tau_type(degree, k)
    if method == "characters":
        total = Fraction(0)
        for shape in partitions(degree):
            chi_p = character_value(shape, p)
            if chi_p:
                total += Fraction(
                    chi_p * chi_p * character_value(shape, tau),
                    character_degree(shape),
                )
        total *= class_size(p) * class_size(tau)
        if total.denominator != 1:
            raise ArithmeticError("character sum is not an integer")
        return int(total)
    if method == "convolution":
        beta0 = type_rep(p)
        hits = sum(
            1
            for g in class_elements(tau)
            if cycle_type(compose(g, beta0)) == p
        )
        return factorial(degree) * hits
    raise ValueError(f"unknown method {method!r}")


# ---------------------------------------------------------------------------
# generating series in infinitely many variables, truncated by total
# degree: monomials are (beta type, k), coefficients exact rationals


@dataclass(frozen=True)
class GenSeries:
    flavor: str
    d_max: int
    coeffs: Mapping[Key, Fraction]

    def coefficient(self, parts: Sequence[int], k: int) -> Fraction:
        key = (tuple(sorted((int(x) for x in parts), reverse=True)), k)
        return self.coeffs.get(key, Fraction(0))

    def as_dict(self) -> dict:
        return {
            "flavor": self.flavor,
            "d_max": self.d_max,
            "coefficients": [
                {"type": list(p), "k": k, "value": str(v)}
                for (p, k), v in sorted(self.coeffs.items())
            ],
        }


def _series_mul(a: Mapping[Key, Fraction], b: Mapping[Key, Fraction],
                d_max: int) -> dict[Key, Fraction]:
    out: dict[Key, Fraction] = {}
    for (pa, ka), ca in a.items():
        da = sum(pa)
        for (pb, kb), cb in b.items():
            if da + sum(pb) > d_max:
                continue
            key = (tuple(sorted(pa + pb, reverse=True)), ka + kb)
            out[key] = out.get(key, Fraction(0)) + ca * cb
    return {key: v for key, v in out.items() if v}


def series_exp(z: Mapping[Key, Fraction], d_max: int) -> dict[Key, Fraction]:
    """exp(z) - 1 for a series with no constant term, by summing
    z^m / m! (each monomial has total degree >= 1, so m is bounded)."""
    total: dict[Key, Fraction] = {}
    power: dict[Key, Fraction] = dict(z)
    m = 1
    fact = 1
    while power:
        for key, v in power.items():
            total[key] = total.get(key, Fraction(0)) + v / fact
        m += 1
        fact *= m
        power = _series_mul(power, z, d_max)
    return {key: v for key, v in total.items() if v}


def series_log(w: Mapping[Key, Fraction], d_max: int) -> dict[Key, Fraction]:
    """log(1 + w) for a series with no constant term."""
    total: dict[Key, Fraction] = {}
    power: dict[Key, Fraction] = dict(w)
    m = 1
    while power:
        sign = 1 if m % 2 else -1
        for key, v in power.items():
            total[key] = total.get(key, Fraction(0)) + sign * v / m
        m += 1
        power = _series_mul(power, w, d_max)
    return {key: v for key, v in total.items() if v}


def build_generating_functions(d_max: int) -> tuple[GenSeries, GenSeries]:
    """(Zhat, Ztilde): the disconnected series from character sums, the
    connected one from enumeration-backed weighted counts.  Coefficients
    are counts divided by d!."""
    zhat: dict[Key, Fraction] = {}
    ztilde: dict[Key, Fraction] = {}
    for d in range(1, d_max + 1):
        fact = factorial(d)
        for parts in partitions(d):
            for k in range(0, d // 2 + 1):
                nhat = disconnected_count(d, k, parts)
                if nhat:
                    zhat[(parts, k)] = Fraction(nhat, fact)
                ntilde = weighted_count(d, k, parts)
                if ntilde:
                    ztilde[(parts, k)] = ntilde
    return (
        GenSeries("Z_hat", d_max, zhat),
        GenSeries("Z_tilde", d_max, ztilde),
    )


def connected_from_disconnected(zhat: GenSeries) -> GenSeries:
    """Formal logarithm: recovers the connected series from the
    disconnected one."""
    return GenSeries(
        "Z_tilde", zhat.d_max, series_log(zhat.coeffs, zhat.d_max)
    )


def exp_identity_holds(d_max: int) -> bool:
    """Zhat = exp(Ztilde) - 1, coefficient by coefficient."""
    zhat, ztilde = build_generating_functions(d_max)
    return series_exp(ztilde.coeffs, d_max) == dict(zhat.coeffs)
