"""Isomorphism classes of vector bundles on the Fargues-Fontaine curve.

Every bundle splits as a direct sum of stable bundles ``O(d/h)``, and the
splitting type is a complete invariant.  A :class:`Bundle` therefore stores
just that splitting type in canonical form: slopes reduced, equal slopes
merged, sorted strictly descending.  Equality of bundles is equality of
canonical forms.

Slopes are plain :class:`fractions.Fraction` values; they are always reduced
with a positive denominator, and Python integers never overflow.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

from hnpoly.errors import DomainError

Slope = Fraction

TRUNCATION_MODES = (">=", ">", "<=", "<")


@dataclass(frozen=True, order=False)
class StableSummand:
    """One isotypic block ``O(slope)^multiplicity``."""

    slope: Fraction
    multiplicity: int

    def __post_init__(self):
        if not isinstance(self.slope, Fraction):
            object.__setattr__(self, "slope", Fraction(self.slope))
        if self.multiplicity < 1:
            raise DomainError(f"multiplicity must be positive, got {self.multiplicity}")

    @property
    def rank(self) -> int:
        return self.multiplicity * self.slope.denominator

    @property
    def degree(self) -> int:
        return self.multiplicity * self.slope.numerator


def _canonical(blocks: Iterable[tuple[Fraction, int]]) -> tuple[StableSummand, ...]:
    merged: dict[Fraction, int] = defaultdict(int)
    for slope, mult in blocks:
        merged[Fraction(slope)] += mult
    return tuple(
        StableSummand(s, m) for s, m in sorted(merged.items(), reverse=True) if m
    )


@dataclass(frozen=True)
class Bundle:
    """A vector bundle up to isomorphism, as a descending list of blocks.

    The constructor accepts summands in any order and canonicalizes them, so
    ``Bundle(...) == Bundle(...)`` is the isomorphism test.
    """

    summands: tuple[StableSummand, ...] = ()

    def __post_init__(self):
        object.__setattr__(
            self, "summands", _canonical((s.slope, s.multiplicity) for s in self.summands)
        )

    @classmethod
    def stable(cls, slope, multiplicity: int = 1) -> Bundle:
        """``O(slope)^multiplicity``."""
        return cls((StableSummand(Fraction(slope), multiplicity),))

    @classmethod
    def zero(cls) -> Bundle:
        return cls(())

    @property
    def rank(self) -> int:
        return sum(s.rank for s in self.summands)

    @property
    def degree(self) -> int:
        return sum(s.degree for s in self.summands)

    @property
    def is_zero(self) -> bool:
        return not self.summands

    @property
    def slopes(self) -> tuple[Fraction, ...]:
        return tuple(s.slope for s in self.summands)

    @property
    def mu(self) -> Fraction:
        if self.is_zero:
            raise DomainError("slope of the zero bundle is undefined")
        return Fraction(self.degree, self.rank)

    @property
    def mu_max(self) -> Fraction:
        if self.is_zero:
            raise DomainError("maximal slope of the zero bundle is undefined")
        return self.summands[0].slope

    @property
    def mu_min(self) -> Fraction:
        if self.is_zero:
            raise DomainError("minimal slope of the zero bundle is undefined")
        return self.summands[-1].slope

    def multiplicity(self, slope) -> int:
        slope = Fraction(slope)
        for s in self.summands:
            if s.slope == slope:
                return s.multiplicity
        return 0

    def has_summand(self, other: Bundle) -> bool:
        return all(self.multiplicity(s.slope) >= s.multiplicity for s in other.summands)

    def remove(self, other: Bundle) -> Bundle:
        """The complement of ``other`` as a direct summand of ``self``."""
        if not self.has_summand(other):
            raise DomainError(f"{other} is not a direct summand of {self}")
        taken = {s.slope: s.multiplicity for s in other.summands}
        return Bundle(
            tuple(
                StableSummand(s.slope, s.multiplicity - taken.get(s.slope, 0))
                for s in self.summands
                if s.multiplicity > taken.get(s.slope, 0)
            )
        )

    def __add__(self, other: Bundle) -> Bundle:
        return direct_sum(self, other)

    def __mul__(self, other: Bundle) -> Bundle:
        return tensor(self, other)

    def __str__(self) -> str:
        from hnpoly.textio import format_bundle

        return format_bundle(self)


def O(slope, multiplicity: int = 1) -> Bundle:  # noqa: N802 - mirrors the usual notation
    return Bundle.stable(slope, multiplicity)


def make_bundle(raw: Iterable[Sequence[int]]) -> Bundle:
    """Build a canonical bundle from ``(num, den, mult)`` triples."""
    blocks = []
    for entry in raw:
        if len(entry) != 3:
            raise DomainError(f"expected (num, den, mult), got {tuple(entry)!r}")
        num, den, mult = (int(v) for v in entry)
        if den == 0:
            raise DomainError("zero denominator")
        if den < 0:
            raise DomainError(f"denominator must be positive, got {den}")
        if mult < 1:
            raise DomainError(f"multiplicity must be positive, got {mult}")
        blocks.append(StableSummand(Fraction(num, den), mult))
    return Bundle(tuple(blocks))


def rank(b: Bundle) -> int:
    return b.rank


def degree(b: Bundle) -> int:
    return b.degree


def mu(b: Bundle) -> Fraction:
    return b.mu


def dual(b: Bundle) -> Bundle:
    return Bundle(tuple(StableSummand(-s.slope, s.multiplicity) for s in b.summands))


def direct_sum(a: Bundle, b: Bundle) -> Bundle:
    return Bundle(a.summands + b.summands)


def _tensor_stable(x: Fraction, y: Fraction) -> tuple[Fraction, int]:
    # O(r/s) (x) O(r'/s') = O(r/s + r'/s')^gcd(ss', rs' + r's)
    r, s = x.numerator, x.denominator
    r2, s2 = y.numerator, y.denominator
    return x + y, gcd(s * s2, r * s2 + r2 * s)


def tensor(a: Bundle, b: Bundle) -> Bundle:
    blocks = []
    for sa in a.summands:
        for sb in b.summands:
            slope, copies = _tensor_stable(sa.slope, sb.slope)
            blocks.append(StableSummand(slope, sa.multiplicity * sb.multiplicity * copies))
    return Bundle(tuple(blocks))


def hom_bundle(a: Bundle, b: Bundle) -> Bundle:
    """The internal Hom ``a^dual (x) b``."""
    return tensor(dual(a), b)


def truncate(b: Bundle, slope, mode: str = ">=") -> Bundle:
    """Slope truncation ``b^{>= slope}`` and friends.

    The ``<`` and ``<=`` parts are quotients of ``b`` by the ``>=``/``>``
    parts; because the filtration splits they are returned as the
    complementary direct summand.
    """
    slope = Fraction(slope)
    tests = {
        ">=": lambda s: s >= slope,
        ">": lambda s: s > slope,
        "<=": lambda s: s <= slope,
        "<": lambda s: s < slope,
    }
    try:
        keep = tests[mode]
    except KeyError:
        raise DomainError(f"unknown truncation mode {mode!r}; use one of {TRUNCATION_MODES}")
    return Bundle(tuple(s for s in b.summands if keep(s.slope)))


def is_semistable(b: Bundle) -> bool:
    if b.is_zero:
        raise DomainError("semistability of the zero bundle is undefined")
    return len(b.summands) == 1


def is_stable(b: Bundle) -> bool:
    return is_semistable(b) and b.summands[0].multiplicity == 1
