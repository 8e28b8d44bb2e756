"""Per-point obstruction evaluation and report assembly.

delta2 is evaluated locally by cup products of square classes and globally
through Milnor K2.  delta3 mod 2 is evaluated locally at odd primes by the
three-case criterion (on the kernel of local delta2):

  (i)   -b is a local square   and {2 sqrt(-b)} cup a != 0
  (ii)  -a is a local square   and {2 sqrt(-a)} cup b + {2} cup a != 0
  (iii) ab is a local square   and {2 sqrt(b) sqrt(a)} cup a != 0

and at the real place by running both lifts of the point through the
closed-form cochain evaluator over the order-2 model of G_R.  A global
delta3 verdict is only ever emitted for the proven (-p^3, p) family; outside
it the report carries local vectors only.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .arith import (
    InvalidPrimeError,
    as_rational,
    is_fourth_power_mod,
    is_prime,
    legendre,
    valuation,
)
from .cohomology import (
    Cochain1,
    delta3_closed_form,
    kummer_real_cocycle,
    real_place_model,
    zero1,
)
from .k2global import Delta2GlobalVerdict, delta2_global, support_odd_primes, symbol_at_2
from .localclass import (
    INV_ZERO,
    REAL,
    LocalInvariant,
    LocalSquareClass,
    NotASquareError,
    Place,
    cup_qp,
    delta2_local,
    neg_one_class,
    square_class_qp,
    sqrt_square_class_qp,
    two_class,
)

ZERO = "zero"
NONZERO = "nonzero"
BLOCKED = "blocked_by_delta2"


class UnsupportedPlaceError(ValueError):
    """Raised for local delta3 evaluation at the place 2."""


class InapplicableError(ValueError):
    """Raised when the congruence fast path's preconditions fail."""


class OutOfFamilyError(ValueError):
    """Raised when a family operation is called off its proven family."""


@dataclass(frozen=True)
class CaseTrace:
    case: str
    applicable: bool
    cup: int


@dataclass(frozen=True)
class RealLift:
    label: str
    comp_x: int
    comp_y: int


@dataclass(frozen=True)
class Delta3LocalResult:
    place: Place
    status: str
    cases: tuple[CaseTrace, ...]
    classes_used: tuple[tuple[str, LocalSquareClass], ...] = ()
    real_lifts: tuple[RealLift, ...] = ()
    notes: tuple[str, ...] = ()


@dataclass(frozen=True)
class ObstructionReport:
    b: Fraction
    a: Fraction
    delta2_local: tuple[tuple[Place, LocalInvariant], ...]
    delta2: Delta2GlobalVerdict
    delta3_local: tuple[Delta3LocalResult, ...]
    notes: tuple[str, ...]


def relevant_places(b, a) -> list[Place]:
    """Odd primes in the support of b or a, then R; at every other odd place
    all classes involved are unit classes, so nothing can be obstructed."""
    return [*support_odd_primes(as_rational(b), as_rational(a)), REAL]


def delta3_local_odd(b, a, p: int, flip_roots: bool = False) -> Delta3LocalResult:
    """Three-case local delta3 mod 2 at an odd prime.

    ``flip_roots`` replaces each canonical square-root class by its {-1}
    twist; under the delta2 precondition the verdict is provably unchanged,
    and the property tests exercise exactly that.
    """
    if p == 2:
        raise UnsupportedPlaceError("local delta3 is not evaluated at the place 2")
    b = as_rational(b)
    a = as_rational(a)
    cls_b = square_class_qp(b, p)
    cls_a = square_class_qp(a, p)
    cls_nb = square_class_qp(-b, p)
    cls_na = square_class_qp(-a, p)
    cls_ab = square_class_qp(a * b, p)
    two = two_class(p)
    classes = [("-b", cls_nb), ("-a", cls_na), ("ab", cls_ab), ("2", two)]
    if cup_qp(cls_b, cls_a).half:
        return Delta3LocalResult(p, BLOCKED, (), tuple(classes))

    twist = neg_one_class(p) if flip_roots else LocalSquareClass(p, 0, 0)
    cases = []
    nonzero = False
    for name, square, partner, extra in (
        ("i", -b, cls_a, INV_ZERO),
        ("ii", -a, cls_b, cup_qp(two, cls_a)),
        ("iii", a * b, cls_a, INV_ZERO),
    ):
        try:
            root = sqrt_square_class_qp(square, p) ^ twist
        except NotASquareError:
            cases.append(CaseTrace(name, False, 0))
            continue
        classes.append((f"sqrt({name})", root))
        value = cup_qp(two ^ root, partner) ^ extra
        cases.append(CaseTrace(name, True, value.half))
        nonzero = nonzero or bool(value.half)
    return Delta3LocalResult(p, NONZERO if nonzero else ZERO, tuple(cases), tuple(classes))


def delta3_congruence(b: int, a: int, p: int) -> tuple[bool, bool | None]:
    """Congruence fast path for integer points with p dividing ab exactly once.

    Returns (delta2 vanishes, delta3 vanishes).  The second entry is None
    when delta2 already obstructs.
    """
    if not isinstance(b, int) or not isinstance(a, int) or b == 0 or a == 0:
        raise InapplicableError("fast path needs nonzero integers")
    if p == 2 or not is_prime(p):
        raise InvalidPrimeError(f"{p} is not an odd prime")
    if valuation(Fraction(a) * b, p) != 1:
        raise InapplicableError(f"{p} must divide ab exactly once")
    s = (a + b) % p
    if legendre(s, p) != 1:
        return False, None
    return True, is_fourth_power_mod(s, p)


def delta3_local_real(b, a) -> Delta3LocalResult:
    """delta3 mod 2 at R: evaluate both lifts over the order-2 model.

    The two lifts differ by the Kummer class of -1; one of them always
    evaluates to (0, 0), so on the kernel of real delta2 the status is ZERO.
    """
    b = as_rational(b)
    a = as_rational(a)
    if b < 0 and a < 0:
        return Delta3LocalResult(REAL, BLOCKED, ())
    model = real_place_model()
    b_coc = kummer_real_cocycle(b, model)
    a_coc = kummer_real_cocycle(a, model)
    f = zero1(model, 2, 2)
    lifts = []
    vanishing = False
    for label, c_tau in (("c=0", 0), ("c={-1}", 1)):
        c = Cochain1(model, 2, 2, (0, c_tau))
        comp_x, comp_y = delta3_closed_form(b_coc, a_coc, c, f)
        vx, vy = comp_x.values[1][1], comp_y.values[1][1]
        lifts.append(RealLift(label, vx, vy))
        vanishing = vanishing or (vx == 0 and vy == 0)
    status = ZERO if vanishing else NONZERO
    return Delta3LocalResult(REAL, status, (), real_lifts=tuple(lifts))


@dataclass(frozen=True)
class SpecificLiftResult:
    """Per-place delta3 values of the lift c0 = 3*(p choose 2) of (-p^3, p)."""

    p: int
    at_p: tuple[LocalInvariant, LocalInvariant]
    notes: tuple[str, ...]


def delta3_specific_lift_family(p: int) -> SpecificLiftResult:
    """Both components at p equal {2} cup {p}; zero at R and all other odd primes."""
    if not is_prime(p) or p % 4 != 1:
        raise InapplicableError(f"{p} is not a prime congruent to 1 mod 4")
    inv = cup_qp(two_class(p), square_class_qp(p, p))
    notes = (
        f"components at {p}: both equal {{2}} cup {{p}} = {inv}"
        f" (1/2 iff p = 5 mod 8; here p = {p % 8} mod 8)",
        "components at R and at every odd prime other than p: 0"
        " (the lift is unramified there)",
    )
    return SpecificLiftResult(p, (inv, inv), notes)


@dataclass(frozen=True)
class GlobalFamilyResult:
    p: int
    verdict: str
    trace: tuple[str, ...]


def delta3_global_family(p: int) -> GlobalFamilyResult:
    """Global delta3 mod 2 of (-p^3, p) is zero for p = 5 mod 8.

    The trace re-runs the ingredients: local vanishing at p for some lift,
    lift adjustability at R, and reciprocity closing the place 2.
    """
    if not is_prime(p) or p % 8 != 5:
        raise OutOfFamilyError(f"{p} is not a prime congruent to 5 mod 8")
    local = delta3_local_odd(-(p**3), p, p)
    real = delta3_local_real(-(p**3), p)
    if local.status != ZERO or real.status != ZERO:
        raise AssertionError(f"family hypothesis failed at p={p}")  # pragma: no cover
    trace = (
        f"local delta3 at {p} is ZERO for some lift (case trace: "
        + ", ".join(f"{t.case}:{'n/a' if not t.applicable else t.cup}" for t in local.cases)
        + ")",
        "at R a vanishing lift exists (the two lifts differ by {-1}): "
        + ", ".join(f"{l.label} -> ({l.comp_x},{l.comp_y})" for l in real.real_lifts),
        "at 2 the remaining invariant vanishes by reciprocity; all other places"
        " are unramified for the chosen global lift",
    )
    return GlobalFamilyResult(p, ZERO, trace)


def delta3_at(b, a, place: Place) -> Delta3LocalResult:
    """Local delta3 at any single place (odd prime or R)."""
    if place == REAL:
        return delta3_local_real(b, a)
    return delta3_local_odd(b, a, place)


def report(b, a, extra_place: Place | None = None) -> ObstructionReport:
    """Full per-place delta2/delta3 report with fast-path and reciprocity notes.

    ``extra_place`` forces one more place into the report even when it lies
    outside the support of ab (where everything provably vanishes).
    """
    b = as_rational(b)
    a = as_rational(a)
    places = relevant_places(b, a)
    if extra_place is not None and extra_place not in places:
        # REAL is always present, so a missing extra place is an odd prime
        places = sorted([p for p in places if p != REAL] + [extra_place]) + [REAL]
    d2_local = tuple((v, delta2_local(b, a, v)) for v in places)
    d2_global = delta2_global(b, a)
    d3_local = tuple(
        delta3_local_real(b, a) if v == REAL else delta3_local_odd(b, a, v)
        for v in places
    )
    notes = []
    if d2_global.zero != d2_global.k2_zero:
        detail = ", ".join(f"({w.place}: {w.value})" for w in d2_global.k2_witnesses)
        notes.append(
            "full K2 layer differs from the mod-2 layer: nontrivial symbols "
            f"{detail} are squares locally, so only delta2 mod 2 vanishes"
        )
    xor = 0
    for _, inv in d2_local:
        xor ^= inv.half
    two_symbol = symbol_at_2(b, a)
    agree = (xor == 1) == (not two_symbol.trivial)
    notes.append(
        f"reciprocity: XOR of odd/real invariants = {xor}, 2-adic symbol = "
        f"{two_symbol.value:+d} ({'consistent' if agree else 'INCONSISTENT'})"
    )
    if b.denominator == 1 and a.denominator == 1:
        for v in places:
            if v == REAL or valuation(b * a, v) != 1:
                continue
            d2_zero, d3_zero = delta3_congruence(b.numerator, a.numerator, v)
            local = next(r for r in d3_local if r.place == v)
            d2_ok = d2_zero == (delta2_local(b, a, v).half == 0)
            d3_ok = d3_zero is None or d3_zero == (local.status == ZERO)
            notes.append(
                f"congruence fast path at {v}: delta2 {'agrees' if d2_ok else 'DISAGREES'}"
                + ("" if d3_zero is None else f", delta3 {'agrees' if d3_ok else 'DISAGREES'}")
            )
    return ObstructionReport(b, a, d2_local, d2_global, d3_local, tuple(notes))


# ---------------------------------------------------------------------------
# JSON serialization (stable field names)
# ---------------------------------------------------------------------------


def _place_str(place: Place) -> str:
    return place if place == REAL else str(place)


def delta2_json(rep: ObstructionReport) -> dict:
    return {
        "global": "zero" if rep.delta2.zero else "nonzero",
        "witnesses": [
            {"place": str(w.place), "value": str(w.value)} for w in rep.delta2.witnesses
        ],
        "local": [
            {"place": _place_str(v), "invariant": inv.half} for v, inv in rep.delta2_local
        ],
    }


def delta3_json(rep: ObstructionReport, place: Place | None = None) -> dict:
    entries = []
    for r in rep.delta3_local:
        if place is not None and r.place != place:
            continue
        entries.append(
            {
                "place": _place_str(r.place),
                "status": r.status,
                "cases": [
                    {"case": t.case, "applicable": t.applicable, "cup": t.cup}
                    for t in r.cases
                ],
            }
        )
    return {"local": entries}


def report_json(rep: ObstructionReport, place: Place | None = None) -> dict:
    return {
        "point": {"b": str(rep.b), "a": str(rep.a)},
        "delta2": delta2_json(rep),
        "delta3_mod2": delta3_json(rep, place),
        "notes": list(rep.notes),
    }
