"""Free-nilpotent-group engine on generators x, y.

Elements of the class-3 quotients are kept in the normal form

    y^a x^b [x,y]^c [[x,y],x]^d [[x,y],y]^e

with per-coordinate moduli fixed by a QuotientSpec.  Multiplication is by
collection: the generator switch law

    x^b y^a = y^a x^b [x,y]^{ab} [[x,y],y]^{b C(a+1,2)} [[x,y],x]^{a C(b+1,2)}

plus centrality of the degree-3 letters and the commutation of [x,y] with x
and y up to degree-3 corrections.  Cross terms are computed in exact integer
arithmetic from the canonical representatives and reduced only at output.

The Magnus embedding x -> 1 + X, y -> 1 + Y into noncommutative power series
truncated in degree 3 provides an independent oracle: collection products are
required to agree with embed/series-multiply/extract round trips.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cohomology import Cochain2, GaloisModel


class SpecMismatchError(ValueError):
    """Raised when elements of different quotients are combined."""


class InvalidCharacterError(ValueError):
    """Raised when a Galois character value is even."""


class PrecisionError(ValueError):
    """Raised when a Magnus modulus is too small for the target quotient."""


class InvalidCocycleError(ValueError):
    """Raised when boundary_of_section is fed a non-cocycle."""


@dataclass(frozen=True)
class QuotientSpec:
    """Which class-3 quotient the exponent vector lives in.

    TOWER3 is the mod-2 tower level 3 (a, b mod 4; c mod 2; no degree-3
    letters), TOWER4 its one-step extension with d, e mod 2, and FULL4(m)
    carries all five exponents mod m.  TOWER3/TOWER4 are genuine finite
    groups; FULL4(m) for even m is an exponent-vector container whose
    products are only compared representative-wise against the Magnus
    oracle (coordinate-wise reduction mod even m is not a group congruence).
    """

    kind: str
    m: int | None = None

    def __post_init__(self):
        if self.kind not in ("FULL4", "TOWER3", "TOWER4"):
            raise ValueError(f"unknown quotient kind {self.kind!r}")
        if (self.kind == "FULL4") != (self.m is not None):
            raise ValueError("FULL4 takes a modulus; towers do not")
        if self.m is not None and self.m < 2:
            raise ValueError("FULL4 modulus must be at least 2")

    @property
    def moduli(self) -> tuple[int, int, int, int, int]:
        if self.kind == "FULL4":
            return (self.m, self.m, self.m, self.m, self.m)
        if self.kind == "TOWER3":
            return (4, 4, 2, 1, 1)
        return (4, 4, 2, 2, 2)

    @property
    def order(self) -> int:
        ma, mb, mc, md, me = self.moduli
        return ma * mb * mc * md * me

    def __str__(self) -> str:
        return f"FULL4({self.m})" if self.kind == "FULL4" else self.kind


TOWER3 = QuotientSpec("TOWER3")
TOWER4 = QuotientSpec("TOWER4")


def full4(m: int) -> QuotientSpec:
    return QuotientSpec("FULL4", m)


def _binom2(n: int) -> int:
    return n * (n - 1) // 2


Vec = tuple[int, int, int, int, int]


def mul_vec(u: Vec, v: Vec) -> Vec:
    """Collection product of exponent vectors over the integers.

    This is the exact arithmetic of the free class-3 nilpotent group on x, y;
    identities stated over profinite exponents are tested at this layer,
    before any modular reduction.
    """
    a1, b1, c1, d1, e1 = u
    a2, b2, c2, d2, e2 = v
    return (
        a1 + a2,
        b1 + b2,
        c1 + c2 + b1 * a2,
        d1 + d2 + c1 * b2 + a2 * _binom2(b1 + 1) + b1 * a2 * b2,
        e1 + e2 + c1 * a2 + b1 * _binom2(a2 + 1),
    )


def inv_vec(u: Vec) -> Vec:
    """Integer inverse: solve the triangular system mul(u, v) = 0."""
    a, b, c, d, e = u
    ai, bi = -a, -b
    ci = -c + b * a
    di = -d - c * bi - ai * _binom2(b + 1) - b * ai * bi
    ei = -e - c * ai - b * _binom2(ai + 1)
    return (ai, bi, ci, di, ei)


def act_vec(u: Vec, chi: int, f: int) -> Vec:
    """Galois action: x -> x^chi, y -> y^chi [[x,y],y]^{-f chi}, over Z."""
    a, b, c, d, e = u
    rho = (chi - 1) // 2
    return (
        chi * a,
        chi * b,
        chi * chi * c,
        chi**3 * d - rho * chi * chi * c,
        chi**3 * e - rho * chi * chi * c - f * chi * a,
    )


def _reduce(u: Vec, moduli: Vec) -> Vec:
    return tuple(x % m for x, m in zip(u, moduli))


@dataclass(frozen=True)
class NilpotentElement:
    """Normal-form element y^a x^b [x,y]^c [[x,y],x]^d [[x,y],y]^e."""

    spec: QuotientSpec
    a: int
    b: int
    c: int
    d: int
    e: int

    @property
    def vec(self) -> Vec:
        return (self.a, self.b, self.c, self.d, self.e)

    def __mul__(self, other: "NilpotentElement") -> "NilpotentElement":
        return nf_mul(self, other)

    def __invert__(self) -> "NilpotentElement":
        return nf_inv(self)

    def __pow__(self, n: int) -> "NilpotentElement":
        return nf_pow(self, n)

    @property
    def is_identity(self) -> bool:
        return self.vec == (0, 0, 0, 0, 0)


def element(spec: QuotientSpec, a=0, b=0, c=0, d=0, e=0) -> NilpotentElement:
    return NilpotentElement(spec, *_reduce((a, b, c, d, e), spec.moduli))


def identity(spec: QuotientSpec) -> NilpotentElement:
    return element(spec)


def gen_x(spec: QuotientSpec) -> NilpotentElement:
    return element(spec, b=1)


def gen_y(spec: QuotientSpec) -> NilpotentElement:
    return element(spec, a=1)


def gen_z(spec: QuotientSpec) -> NilpotentElement:
    """The commutator [x,y]."""
    return element(spec, c=1)


def _check_same_spec(e1: NilpotentElement, e2: NilpotentElement) -> None:
    if e1.spec != e2.spec:
        raise SpecMismatchError(f"elements live in {e1.spec} and {e2.spec}")


def nf_mul(e1: NilpotentElement, e2: NilpotentElement) -> NilpotentElement:
    _check_same_spec(e1, e2)
    return NilpotentElement(e1.spec, *_reduce(mul_vec(e1.vec, e2.vec), e1.spec.moduli))


def nf_inv(e: NilpotentElement) -> NilpotentElement:
    return NilpotentElement(e.spec, *_reduce(inv_vec(e.vec), e.spec.moduli))


def nf_pow(e: NilpotentElement, n: int) -> NilpotentElement:
    if n < 0:
        return nf_pow(nf_inv(e), -n)
    out = identity(e.spec)
    for _ in range(n):
        out = nf_mul(out, e)
    return out


def commutator(e1: NilpotentElement, e2: NilpotentElement) -> NilpotentElement:
    _check_same_spec(e1, e2)
    return nf_mul(nf_mul(e1, e2), nf_mul(nf_inv(e1), nf_inv(e2)))


def galois_act(chi: int, f: int, e: NilpotentElement) -> NilpotentElement:
    """Apply the automorphism with character value chi and f-value f.

    chi must be odd; mod 8 determines the action on the towers.  Actions
    compose by the cocycle law: applying act(chi', f') first and act(chi, f)
    second equals act(chi*chi', f + chi^2 * f').
    """
    if chi % 2 == 0:
        raise InvalidCharacterError(f"chi = {chi} is even")
    return NilpotentElement(e.spec, *_reduce(act_vec(e.vec, chi, f), e.spec.moduli))


def project(e: NilpotentElement, spec: QuotientSpec) -> NilpotentElement:
    """Reduce into a coarser quotient (each target modulus must divide)."""
    for source, target in zip(e.spec.moduli, spec.moduli):
        if source % target != 0:
            raise SpecMismatchError(f"no projection {e.spec} -> {spec}")
    return element(spec, *e.vec)


def all_elements(spec: QuotientSpec) -> list[NilpotentElement]:
    ma, mb, mc, md, me = spec.moduli
    return [
        NilpotentElement(spec, a, b, c, d, e)
        for a in range(ma)
        for b in range(mb)
        for c in range(mc)
        for d in range(md)
        for e in range(me)
    ]


# ---------------------------------------------------------------------------
# Magnus series oracle
# ---------------------------------------------------------------------------

_WORDS = (
    "",
    "X", "Y",
    "XX", "XY", "YX", "YY",
    "XXX", "XXY", "XYX", "XYY", "YXX", "YXY", "YYX", "YYY",
)
_WIDX = {w: i for i, w in enumerate(_WORDS)}
_NWORDS = len(_WORDS)

# Precomputed convolution: products of word pairs of total length <= 3.
_MUL_PAIRS: list[tuple[int, int, int]] = [
    (_WIDX[w1 + w2], i, j)
    for i, w1 in enumerate(_WORDS)
    for j, w2 in enumerate(_WORDS)
    if len(w1) + len(w2) <= 3
]


def _seriesmul_vec(s: tuple[int, ...], t: tuple[int, ...]) -> tuple[int, ...]:
    out = [0] * _NWORDS
    for target, i, j in _MUL_PAIRS:
        out[target] += s[i] * t[j]
    return tuple(out)


def _seriesinv_vec(s: tuple[int, ...]) -> tuple[int, ...]:
    if s[0] != 1:
        raise ValueError("only unit series (constant term 1) are invertible")
    u = list(s)
    u[0] = 0
    u = tuple(u)
    uu = _seriesmul_vec(u, u)
    uuu = _seriesmul_vec(uu, u)
    one = _series_one()
    return tuple(o - a + b - c for o, a, b, c in zip(one, u, uu, uuu))


def _series_one() -> tuple[int, ...]:
    return (1,) + (0,) * (_NWORDS - 1)


def _binom3(n: int) -> int:
    return n * (n - 1) * (n - 2) // 6


def _xpow(b: int) -> tuple[int, ...]:
    s = [0] * _NWORDS
    s[_WIDX[""]] = 1
    s[_WIDX["X"]] = b
    s[_WIDX["XX"]] = _binom2(b)
    s[_WIDX["XXX"]] = _binom3(b)
    return tuple(s)


def _ypow(a: int) -> tuple[int, ...]:
    s = [0] * _NWORDS
    s[_WIDX[""]] = 1
    s[_WIDX["Y"]] = a
    s[_WIDX["YY"]] = _binom2(a)
    s[_WIDX["YYY"]] = _binom3(a)
    return tuple(s)


def _commutator_series(s: tuple[int, ...], t: tuple[int, ...]) -> tuple[int, ...]:
    return _seriesmul_vec(
        _seriesmul_vec(s, t), _seriesmul_vec(_seriesinv_vec(s), _seriesinv_vec(t))
    )


# Exact truncated series of the basic commutators, computed once from the
# generator embeddings rather than written down by hand.
_Z_SERIES = _commutator_series(_xpow(1), _ypow(1))
_W1_SERIES = _commutator_series(_Z_SERIES, _xpow(1))
_W2_SERIES = _commutator_series(_Z_SERIES, _ypow(1))


def _central_pow(base: tuple[int, ...], n: int) -> tuple[int, ...]:
    # For series 1 + (degree >= 2 tail), the n-th power is 1 + n*tail up to
    # degree 3, because tail*tail already has degree >= 4.
    return tuple(coef if i == 0 else n * coef for i, coef in enumerate(base))


@dataclass(frozen=True)
class MagnusSeries:
    """Truncated (degree <= 3) noncommutative series with Z/m coefficients."""

    modulus: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) != _NWORDS:
            raise ValueError("wrong coefficient count")

    def coeff(self, word: str) -> int:
        return self.coeffs[_WIDX[word]]


def min_magnus_modulus(spec: QuotientSpec) -> int:
    """Smallest power of 2 whose series arithmetic projects exactly to spec."""
    if spec.kind == "FULL4":
        m = 1
        while m < 2 * spec.m:
            m *= 2
        return m
    return 4


def _check_modulus(spec: QuotientSpec, m: int) -> None:
    if m & (m - 1) or m < min_magnus_modulus(spec):
        raise PrecisionError(
            f"modulus {m} is not a power of 2 at least {min_magnus_modulus(spec)} for {spec}"
        )


def magnus_embed(e: NilpotentElement, m: int) -> MagnusSeries:
    """Embed a normal form via x -> 1 + X, y -> 1 + Y, truncated in degree 3."""
    _check_modulus(e.spec, m)
    s = _seriesmul_vec(_ypow(e.a), _xpow(e.b))
    s = _seriesmul_vec(s, _central_pow(_Z_SERIES, e.c))
    s = _seriesmul_vec(s, _central_pow(_W1_SERIES, e.d))
    s = _seriesmul_vec(s, _central_pow(_W2_SERIES, e.e))
    return MagnusSeries(m, tuple(x % m for x in s))


def magnus_mul(s1: MagnusSeries, s2: MagnusSeries) -> MagnusSeries:
    if s1.modulus != s2.modulus:
        raise PrecisionError(f"series moduli differ: {s1.modulus} != {s2.modulus}")
    return MagnusSeries(s1.modulus, tuple(x % s1.modulus for x in _seriesmul_vec(s1.coeffs, s2.coeffs)))


def nf_from_magnus(s: MagnusSeries, spec: QuotientSpec) -> NilpotentElement:
    """Extract the normal form of a group-element series.

    Reads a, b, c from the degree <= 2 coefficients, divides off the embedded
    y^a x^b [x,y]^c, and reads d, e from the two independent degree-3 Lie
    coordinates.  Exact whenever the modulus passes min_magnus_modulus.
    """
    _check_modulus(spec, s.modulus)
    m = s.modulus
    a = s.coeff("Y") % m
    b = s.coeff("X") % m
    c = s.coeff("XY") % m
    head = _seriesmul_vec(_ypow(a), _xpow(b))
    head = _seriesmul_vec(head, _central_pow(_Z_SERIES, c))
    tail = _seriesmul_vec(_seriesinv_vec(head), s.coeffs)
    # tail = 1 + d*W1 + e*W2 with W1 = [[X,Y],X]-series, W2 = [[X,Y],Y]-series;
    # the XXY coefficient of W1 is -1 and the YYX coefficient of W2 is +1.
    d = -tail[_WIDX["XXY"]] % m
    e = tail[_WIDX["YYX"]] % m
    return element(spec, a, b, c, d, e)


# ---------------------------------------------------------------------------
# Boundary of the set-theoretic section: the delta_n representing cochains
# ---------------------------------------------------------------------------


def boundary_of_section(
    model: GaloisModel, p: list[tuple[int, ...]], n: int
) -> tuple[Cochain2, ...]:
    """Extract the kernel coordinates of (g,h) -> s(p(g)) g(s(p(h))) s(p(gh))^-1.

    For n = 2, p lists (a, b) mod 4 per group element (a twisted cocycle into
    the abelianization) and the output is the [x,y]-coordinate mod 2.  For
    n = 3, p lists (a, b, c) forming a cocycle into the level-3 tower group
    and the output is the pair of degree-3 coordinates mod 2.  The Galois
    action uses chi mod 8 and the model's f-bits.
    """
    if n not in (2, 3):
        raise ValueError("n must be 2 or 3")
    if len(p) != model.order:
        raise InvalidCocycleError("cocycle must assign a value to every element")
    width = 2 if n == 2 else 3
    if any(len(t) != width for t in p):
        raise InvalidCocycleError(f"level-{n} values need {width} coordinates")

    def lift(t):
        if n == 2:
            return element(TOWER4, a=t[0], b=t[1])
        return element(TOWER4, a=t[0], b=t[1], c=t[2])

    sect = [lift(t) for t in p]
    acted = [
        [galois_act(model.chi[g] % 8, model.fbit(g), sect[h]) for h in model.elements()]
        for g in model.elements()
    ]
    # Cocycle validation happens at the level the section covers: the first
    # `width` coordinates of s(p(g)) g(s(p(h))) must reproduce s(p(gh)).
    for g in model.elements():
        for h in model.elements():
            got = nf_mul(sect[g], acted[g][h])
            want = sect[model.mul(g, h)]
            if got.vec[:width] != want.vec[:width]:
                raise InvalidCocycleError(f"not a 1-cocycle at ({g}, {h})")

    rows_c, rows_d, rows_e = [], [], []
    for g in model.elements():
        rc, rd, re = [], [], []
        for h in model.elements():
            z = nf_mul(nf_mul(sect[g], acted[g][h]), nf_inv(sect[model.mul(g, h)]))
            rc.append(z.c)
            rd.append(z.d)
            re.append(z.e)
        rows_c.append(tuple(rc))
        rows_d.append(tuple(rd))
        rows_e.append(tuple(re))
    if n == 2:
        return (Cochain2(model, 2, 2, tuple(rows_c)),)
    return (
        Cochain2(model, 2, 3, tuple(rows_d)),
        Cochain2(model, 2, 3, tuple(rows_e)),
    )
