"""Square classes and the mod-2 cup product over Q_p (p odd) and R.

A class in Q_p*/(Q_p*)^2 is a bit pair over the basis {u, p} where u is the
smallest positive quadratic non-residue mod p; a class in R*/(R*)^2 is a sign
bit.  Cup products of two degree-1 classes land in the 2-torsion {0, 1/2} of
Q/Z via the local invariant map, with the table

    u  cup u  = 0
    u  cup p  = p cup u = 1/2
    p  cup p  = {-1} cup p   (= 1/2 iff p = 3 mod 4)

and over R the cup is nontrivial exactly on ({-1}, {-1}).
"""

from __future__ import annotations

from dataclasses import dataclass

from .arith import (
    as_rational,
    check_odd_prime,
    legendre,
    sqrt_mod,
    unit_residue,
    valuation,
)

REAL = "R"
# A place for local evaluation: an odd prime or the real place.
Place = int | str


class NotASquareError(ValueError):
    """Raised when a square root is requested of a local non-square."""


@dataclass(frozen=True)
class LocalSquareClass:
    """Element of Q_p*/(Q_p*)^2 as bits over the basis {u, p}."""

    p: int
    e_u: int
    e_p: int

    def __xor__(self, other: "LocalSquareClass") -> "LocalSquareClass":
        if self.p != other.p:
            raise ValueError(f"classes live over different primes {self.p} != {other.p}")
        return LocalSquareClass(self.p, self.e_u ^ other.e_u, self.e_p ^ other.e_p)

    @property
    def is_trivial(self) -> bool:
        return self.e_u == 0 and self.e_p == 0


@dataclass(frozen=True)
class RealSquareClass:
    """Element of R*/(R*)^2; the nontrivial class is {-1}."""

    negative: int

    def __xor__(self, other: "RealSquareClass") -> "RealSquareClass":
        return RealSquareClass(self.negative ^ other.negative)

    @property
    def is_trivial(self) -> bool:
        return self.negative == 0


@dataclass(frozen=True)
class LocalInvariant:
    """Element of the 2-torsion of Q/Z: half=0 means 0, half=1 means 1/2."""

    half: int

    def __xor__(self, other: "LocalInvariant") -> "LocalInvariant":
        return LocalInvariant(self.half ^ other.half)

    def __str__(self) -> str:
        return "1/2" if self.half else "0"


INV_ZERO = LocalInvariant(0)
INV_HALF = LocalInvariant(1)


def square_class_qp(x, p: int) -> LocalSquareClass:
    """Square class of a nonzero rational in Q_p*, p odd."""
    check_odd_prime(p)
    value = as_rational(x)
    v = valuation(value, p)
    e_u = 1 if legendre(unit_residue(value, p), p) == -1 else 0
    return LocalSquareClass(p, e_u, v % 2)


def sqrt_square_class_qp(x, p: int) -> LocalSquareClass:
    """Square class of the canonical square root of a local square x.

    The unit-part root is the canonical one from sqrt_mod; all downstream cup
    values are independent of this choice whenever the delta2 precondition
    holds, the canonical choice just pins the reported class.
    """
    check_odd_prime(p)
    value = as_rational(x)
    v = valuation(value, p)
    if v % 2 != 0:
        raise NotASquareError(f"{x} has odd valuation at {p}")
    root = sqrt_mod(unit_residue(value, p), p)
    if root is None:
        raise NotASquareError(f"unit part of {x} is not a square mod {p}")
    e_u = 1 if legendre(root, p) == -1 else 0
    return LocalSquareClass(p, e_u, (v // 2) % 2)


def neg_one_class(p: int) -> LocalSquareClass:
    """The class {-1} in Q_p*/(Q_p*)^2."""
    return square_class_qp(-1, p)


def two_class(p: int) -> LocalSquareClass:
    """The class {2} in Q_p*/(Q_p*)^2."""
    return square_class_qp(2, p)


def cup_qp(c1: LocalSquareClass, c2: LocalSquareClass) -> LocalInvariant:
    """Bilinear extension of the basis cup table at the odd prime c1.p."""
    if c1.p != c2.p:
        raise ValueError(f"cup of classes over different primes {c1.p} != {c2.p}")
    bit = c1.e_u * c2.e_p ^ c1.e_p * c2.e_u
    if c1.p % 4 == 3:
        bit ^= c1.e_p * c2.e_p
    return LocalInvariant(bit)


def square_class_r(x) -> RealSquareClass:
    return RealSquareClass(1 if as_rational(x) < 0 else 0)


def cup_r(c1: RealSquareClass, c2: RealSquareClass) -> LocalInvariant:
    return LocalInvariant(c1.negative * c2.negative)


def delta2_local(b, a, place: Place) -> LocalInvariant:
    """Local mod-2 cup value of the Kummer classes of b and a at a place."""
    if place == REAL:
        return cup_r(square_class_r(b), square_class_r(a))
    return cup_qp(square_class_qp(b, place), square_class_qp(a, place))
