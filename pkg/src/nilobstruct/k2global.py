"""Global delta2 over Q through Milnor K2.

K2(Q) splits as mu_2 (+) sum over odd primes of F_p^* via the tame symbols

    (b,a)_p = (-1)^{v_p(b) v_p(a)} b^{v_p(a)} a^{-v_p(b)}  mod p

and the explicit symbol at 2 computed from 2-adic decompositions
x = (-1)^i 2^j 5^k u with u a quotient of integers congruent to 1 mod 8.
The class {b} cup {a} vanishes globally iff every symbol is trivial.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .arith import as_rational, check_odd_prime, factor, legendre, unit_residue, valuation


@dataclass(frozen=True)
class TameSymbolValue:
    """Value of the K2 residue symbol at a place (odd prime, or 2)."""

    place: int
    value: int

    @property
    def trivial(self) -> bool:
        return self.value == 1


@dataclass(frozen=True)
class Delta2GlobalVerdict:
    """Two layers, reported separately and never conflated.

    ``zero`` is the mod-2 verdict (every symbol trivial modulo squares),
    which is the obstruction layer the local delta2/delta3 machinery lives
    in; ``k2_zero`` is the full K2(Q) verdict (every symbol literally 1).
    They can differ: (-1, 5) has tame symbol 4 at 5, a nontrivial square.
    """

    zero: bool
    witnesses: tuple[TameSymbolValue, ...]
    k2_zero: bool
    k2_witnesses: tuple[TameSymbolValue, ...]


def tame_symbol_odd(b, a, p: int) -> TameSymbolValue:
    """Tame symbol (b,a)_p in F_p^* at an odd prime p."""
    check_odd_prime(p)
    b = as_rational(b)
    a = as_rational(a)
    vb = valuation(b, p)
    va = valuation(a, p)
    # With b = p^vb * ub and a = p^va * ua the uniformizer powers cancel and
    # the symbol reduces to a pure unit expression mod p.
    ub = unit_residue(b, p)
    ua = unit_residue(a, p)
    value = pow(ub, va, p) * pow(ua, -vb, p) % p
    if (vb * va) % 2 == 1:
        value = (p - value) % p
    return TameSymbolValue(p, value)


# Residue of the odd part mod 8 -> (i, k) in the decomposition
# x = (-1)^i 2^j 5^k u, u = 1 mod 8; these four targets are exactly
# {(-1)^i 5^k mod 8} = {1, 5, 7, 3}.
_IK_FROM_MOD8 = {1: (0, 0), 5: (0, 1), 7: (1, 0), 3: (1, 1)}


def decompose_2adic(x) -> tuple[int, int, int]:
    """(i, j, k) with x = (-1)^i 2^j 5^k u and u = 1 mod 8 as a 2-adic unit."""
    value = as_rational(x)
    j = valuation(value, 2)
    odd = value / Fraction(2) ** j
    residue = odd.numerator * pow(odd.denominator, -1, 8) % 8
    i, k = _IK_FROM_MOD8[residue]
    return i, j, k


def symbol_at_2(b, a) -> TameSymbolValue:
    """The K2 symbol (b,a)_2 = (-1)^{iI + jK + kJ} in {+1, -1}."""
    i, j, k = decompose_2adic(b)
    big_i, big_j, big_k = decompose_2adic(a)
    exponent = i * big_i + j * big_k + k * big_j
    return TameSymbolValue(2, -1 if exponent % 2 else 1)


def support_odd_primes(b, a) -> tuple[int, ...]:
    """Sorted odd primes dividing the numerator or denominator of b or of a.

    The union of the two supports, not the support of the product: at a prime
    where the valuations cancel (v_p(b) = -v_p(a) != 0) the symbol and the
    local invariant can still be nontrivial.
    """
    primes = set(factor(as_rational(b)).primes()) | set(factor(as_rational(a)).primes())
    primes.discard(2)
    return tuple(sorted(primes))


def delta2_global(b, a) -> Delta2GlobalVerdict:
    """Global delta2 through K2(Q).

    Only odd primes dividing ab can carry a nontrivial tame symbol, so the
    check is finite: those primes plus the symbol at 2.  The mod-2 witnesses
    are the symbols that are non-squares in F_p^* (resp. -1 at 2); the K2
    witnesses are the symbols different from 1.
    """
    b = as_rational(b)
    a = as_rational(a)
    witnesses = []
    k2_witnesses = []
    for p in support_odd_primes(b, a):
        symbol = tame_symbol_odd(b, a, p)
        if not symbol.trivial:
            k2_witnesses.append(symbol)
            if legendre(symbol.value, p) == -1:
                witnesses.append(symbol)
    two = symbol_at_2(b, a)
    if not two.trivial:
        k2_witnesses.append(two)
        witnesses.append(two)
    return Delta2GlobalVerdict(
        zero=not witnesses,
        witnesses=tuple(witnesses),
        k2_zero=not k2_witnesses,
        k2_witnesses=tuple(k2_witnesses),
    )
