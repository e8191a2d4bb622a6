"""Exact arithmetic on a Picard lattice.

Classes are integer coordinate vectors in a fixed basis; the lattice supplies
the symmetric pairing, the Euler characteristic of a class, the root test and
reconstruction of classes from their pairings against a spanning probe set.
The covering-calculus helpers at the bottom convert degree data of a 10:1
quotient into intersection numbers downstairs.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import (
    DimensionMismatch,
    InconsistentValues,
    MissingField,
    NonIntegralSolution,
    NonSymmetricGram,
    ParityViolation,
    ProbesDoNotSpan,
)
from . import linalg


@dataclass(frozen=True)
class DivisorClass:
    """An integer vector in the coordinates of a fixed lattice basis."""

    coords: tuple[int, ...]

    def __post_init__(self) -> None:
        if not all(isinstance(c, int) for c in self.coords):
            raise TypeError("coordinates must be integers")
        object.__setattr__(self, "coords", tuple(int(c) for c in self.coords))

    @staticmethod
    def zero(rank: int) -> "DivisorClass":
        return DivisorClass((0,) * rank)

    def __len__(self) -> int:
        return len(self.coords)

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        if len(self) != len(other):
            raise DimensionMismatch(f"{len(self)} != {len(other)}")
        return DivisorClass(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "DivisorClass") -> "DivisorClass":
        if len(self) != len(other):
            raise DimensionMismatch(f"{len(self)} != {len(other)}")
        return DivisorClass(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "DivisorClass":
        return DivisorClass(tuple(-a for a in self.coords))

    def __rmul__(self, scalar: int) -> "DivisorClass":
        if not isinstance(scalar, int):
            raise TypeError("scalar must be an integer")
        return DivisorClass(tuple(scalar * a for a in self.coords))

    def is_zero(self) -> bool:
        return not any(self.coords)


@dataclass(frozen=True)
class PicardLattice:
    """Rank, symmetric integer Gram matrix and a distinguished canonical class."""

    rank: int
    gram: tuple[tuple[int, ...], ...]
    k: DivisorClass

    def _check_len(self, v: DivisorClass) -> None:
        if len(v) != self.rank:
            raise DimensionMismatch(
                f"class has length {len(v)}, lattice has rank {self.rank}"
            )

    def pair(self, a: DivisorClass, b: DivisorClass) -> int:
        """Intersection pairing a . b."""
        self._check_len(a)
        self._check_len(b)
        g = self.gram
        return sum(
            a.coords[i] * g[i][j] * b.coords[j]
            for i in range(self.rank)
            for j in range(self.rank)
            if a.coords[i] and g[i][j] and b.coords[j]
        )

    def chi(self, d: DivisorClass) -> int:
        """Euler characteristic 1 + (d.d - d.k)/2 of a class."""
        s = self.pair(d, d) - self.pair(d, self.k)
        if s % 2:
            raise ParityViolation(
                f"d.d - d.k = {s} is odd; lattice data is inconsistent"
            )
        return 1 + s // 2

    def chi_hom(self, frm: DivisorClass, to: DivisorClass) -> int:
        """Euler pairing of two line-bundle classes: chi(to - frm)."""
        return self.chi(to - frm)

    def is_root(self, v: DivisorClass) -> bool:
        """True iff v.k = 0 and v.v = -2."""
        return self.pair(v, self.k) == 0 and self.pair(v, v) == -2

    def parity_holds(self, v: DivisorClass) -> bool:
        """v.v + v.k even (fails only on corrupted gram/k data)."""
        return (self.pair(v, v) + self.pair(v, self.k)) % 2 == 0

    def det(self) -> int:
        d = linalg.det_exact(self.gram)
        return int(d)

    def signature(self) -> tuple[int, int, int]:
        return linalg.signature_symmetric(self.gram)

    def class_from_pairings(
        self,
        probes: Sequence[DivisorClass],
        values: Sequence[int],
    ) -> DivisorClass:
        """The unique integral class x with x . probe_i = value_i.

        Solved by exact rational elimination on a maximal independent probe
        subset; the remaining equations are verified, and the solution is
        checked to be integral in lattice coordinates.
        """
        if len(probes) != len(values):
            raise DimensionMismatch("probes and values have different lengths")
        for p in probes:
            self._check_len(p)
        rows = [
            [
                sum(p.coords[i] * self.gram[i][j] for i in range(self.rank))
                for j in range(self.rank)
            ]
            for p in probes
        ]
        status, x = linalg.solve_overdetermined(rows, list(values))
        if status == "underdetermined":
            raise ProbesDoNotSpan(
                f"probes span a proper subspace of the rank-{self.rank} lattice"
            )
        if status == "inconsistent":
            raise InconsistentValues("pairing equations have no common solution")
        assert x is not None
        if any(c.denominator != 1 for c in x):
            raise NonIntegralSolution(
                f"solution {[str(c) for c in x]} is rational but not integral"
            )
        return DivisorClass(tuple(int(c) for c in x))


def make_lattice(
    rank: int,
    gram: Iterable[Iterable[int]],
    k: DivisorClass,
) -> PicardLattice:
    """Validate and freeze a lattice: square symmetric gram, k of matching length."""
    g = tuple(tuple(int(x) for x in row) for row in gram)
    if len(g) != rank or any(len(row) != rank for row in g):
        raise DimensionMismatch(f"gram is not {rank}x{rank}")
    if not linalg.is_symmetric(g):
        bad = next(
            (i, j)
            for i in range(rank)
            for j in range(rank)
            if g[i][j] != g[j][i]
        )
        raise NonSymmetricGram(f"gram[{bad[0]}][{bad[1]}] != gram[{bad[1]}][{bad[0]}]")
    if len(k) != rank:
        raise DimensionMismatch(f"k has length {len(k)}, expected {rank}")
    return PicardLattice(rank=rank, gram=g, k=k)


# --- covering calculus --------------------------------------------------------
#
# Intersection numbers on the quotient surface from degree data upstairs on the
# 10:1 cover.  Results are exact rationals; integrality is the caller's check.

class CoverCase(Enum):
    DISJOINT = "disjoint"
    RAM_RAM = "ram_ram"
    RAM_CURVE = "ram_curve"
    CURVE_CURVE = "curve_curve"
    CANONICAL_DEGREE = "canonical_degree"
    SELF_INTERSECTION = "self_intersection"


@dataclass(frozen=True)
class CoverCaseData:
    case: CoverCase
    deg_i: int | None = None      # deg V(I), or deg(I1 + (x1)) for the degree case
    deg_iir: int | None = None    # deg V(I + I_r)
    deg_ram: int | None = None    # ramification degree in the genus computation
    pa_up: int | None = None      # arithmetic genus of the image curve upstairs
    k_dot: int | None = None      # canonical degree of the curve downstairs

    def _req(self, name: str) -> int:
        v = getattr(self, name)
        if v is None:
            raise MissingField(f"case {self.case.value} requires field {name!r}")
        if name.startswith("deg") and v < 0:
            raise ValueError(f"{name} must be nonnegative, got {v}")
        return v


def hurwitz_pa_up(pa_down: int, ram_deg: int) -> int:
    """Arithmetic genus upstairs: 2*pa_up - 2 = 10*(2*pa_down - 2) + ram_deg."""
    if ram_deg < 0:
        raise ValueError("ramification degree must be nonnegative")
    rhs = 10 * (2 * pa_down - 2) + ram_deg
    if rhs % 2:
        raise ParityViolation(f"2*pa_up - 2 = {rhs} is odd")
    return rhs // 2 + 1


def hurwitz_pa_down(pa_up: int, ram_deg: int) -> int:
    """Inverse of hurwitz_pa_up, with exact divisibility checks."""
    if ram_deg < 0:
        raise ValueError("ramification degree must be nonnegative")
    num = 2 * pa_up - 2 - ram_deg
    if num % 10:
        raise ParityViolation(f"2*pa_up - 2 - ram = {num} is not divisible by 10")
    twice = num // 10  # = 2*pa_down - 2
    if twice % 2:
        raise ParityViolation(f"2*pa_down - 2 = {twice} is odd")
    return twice // 2 + 1


def genus_selfint(pa: int, k_dot: int) -> int:
    """Self-intersection from the genus formula: d.d = 2*pa - 2 - d.k."""
    return 2 * pa - 2 - k_dot


def cover_intersection(data: CoverCaseData) -> Fraction:
    """Apply the covering-calculus case formula; returns an exact rational."""
    c = data.case
    if c is CoverCase.DISJOINT:
        return Fraction(0)
    if c is CoverCase.RAM_RAM:
        return Fraction(-2 * data._req("deg_i"), 5)
    if c is CoverCase.RAM_CURVE:
        return Fraction(data._req("deg_i"), 5)
    if c is CoverCase.CURVE_CURVE:
        return Fraction(data._req("deg_i") - data._req("deg_iir"), 10)
    if c is CoverCase.CANONICAL_DEGREE:
        return Fraction(data._req("deg_i"), 10)
    if c is CoverCase.SELF_INTERSECTION:
        pa_down = hurwitz_pa_down(data._req("pa_up"), data._req("deg_ram"))
        return Fraction(genus_selfint(pa_down, data._req("k_dot")))
    raise MissingField(f"unknown case {c!r}")
