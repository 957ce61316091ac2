"""Three-step certificates pinning arc remainders under a cosine budget.

Every catalogued case evaluates an arc series at a scaled offset t pi / k
from one endpoint and bounds the remainder |R| (the series minus its leading
cosine term) by 2 c0 for all admissible weights k >= k0.  The series splits
into a few resonant heads plus a tail:

    tail    2 * (off-head magnitudes)  <=  b (1/s)^{k/2},
    head i  |2 Re(head_i)| <= c'_i X_i^{-k/2},   X_i >= 1 + u_i pi / k,

with X_i the squared head magnitude at the offset angle (see
arguments.envelope_value).  Writing a_1 = sum of the head shares a_{1,i},
the tail is absorbed into the budget whenever

    (T)  a_1 > b k0^2 / (2 s^{k0/2} t^2 pi^2),

which stays true for all k >= k0 because k0 ln s > 4.  Head i then stays
under its share c_{0,i} - a_{1,i} (t pi / k)^2 provided, for
c_i = c'_i / c_{0,i} and any a_{2,i} above the curvature threshold

    (C)  a_{2,i} > c_i^2 (a_{1,i}/c'_i) / (1 - c_i (a_{1,i}/c'_i) (t pi/k0)^2),

the margin

    Y_i = u_i pi - 2 ln c_i - 2 (ln c_i)^2 c_i^{2/k0} / k0
          - (2 a_{2,i} t^2 pi^2 / c_i) c_i^{2/k0} / k0^2

is positive.  A couple of low-weight cases fall outside the Y framing and
instead publish the direct margin X_i - c_i^{2/k} (1 + 2 a_{2,i} t^2 pi^2 /
(c_i k^3)) at that single weight.

certify() re-derives every constant of a catalogued case, checks (T), (C),
the published margins, and the window geometry feeding c0 and the c'_i.
remaining_case_probe() serves the narrow junction-angle windows no case
covers: it evaluates bracketing endpoint envelopes whose signs show which
arc picks up the unassigned zero.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from importlib import resources

from .arguments import Term, d_window, envelope_value
from .eisenstein import DomainError, alpha_p, angle_constants, check_level, check_weight

_PI = math.pi
_SQRT3 = math.sqrt(3.0)

# published c' constants are truncated decimals, so a recomputed floor may
# exceed them by a final-digit sliver
_TRUNC_TOL = 5e-6


class ConstraintViolation(ValueError):
    """A chosen constant fails its defining inequality."""


class CertificateMismatch(ValueError):
    """A catalogued case disagrees with its recomputation."""


# --------------------------------------------------------------------------
# exact fixture values: Fraction times an optional sqrt(3) factor


_FACTOR = re.compile(r"^(-?\d+)?(r3)?(?:/(\d+))?$")


def _parse_factor(token: str) -> tuple[Fraction, int]:
    m = _FACTOR.match(token)
    if m is None or (m.group(1) is None and m.group(2) is None):
        raise ValueError(f"bad value token {token!r}")
    num = int(m.group(1)) if m.group(1) else 1
    den = int(m.group(3)) if m.group(3) else 1
    return Fraction(num, den), 1 if m.group(2) else 0


def _parse_exact(token: str) -> tuple[Fraction, int]:
    frac, r3 = Fraction(1), 0
    for part in token.split("*"):
        f, r = _parse_factor(part)
        frac *= f
        r3 += r
    return frac * 3 ** (r3 // 2), r3 % 2


def _parse_fraction(token: str) -> Fraction:
    frac, r3 = _parse_exact(token)
    if r3:
        raise ValueError(f"expected a rational token, got {token!r}")
    return frac


def _num(value: tuple[Fraction, int]) -> float:
    frac, r3 = value
    return float(frac) * (_SQRT3 if r3 else 1.0)


# --------------------------------------------------------------------------
# case records


@dataclass(frozen=True)
class CaseTerm:
    which: Term
    c_prime: Fraction
    c0i: tuple[Fraction, int]
    a1i: Fraction
    ui: tuple[Fraction, int]
    a2i: Fraction
    published_Y: float | None
    y_tol: float


@dataclass(frozen=True)
class LemmaCase:
    case_id: str
    family: str
    p: int
    arc: int
    window: tuple[Fraction, Fraction] | None  # junction-angle bounds, degrees
    c0_prime: Fraction | None
    t: Fraction
    b: Fraction
    s: Fraction
    k0: int
    y_k0: int  # weight at which the published Y margins are evaluated
    terms: tuple[CaseTerm, ...]
    d_values: tuple[Fraction, ...]
    special_k: int | None
    special_values: tuple[float, ...]
    applies: str
    c0_slack: float


@dataclass(frozen=True)
class _Family:
    p: int
    arc: int
    mod: int
    residue: int
    heads: tuple[Term, ...]


_FAMILIES = {
    "p5_arc1_broad": _Family(5, 1, 2, 0, (Term.THETA1_1,)),
    "p5_arc2_broad": _Family(5, 2, 2, 0, (Term.THETA2_1,)),
    "p5_arc1_win": _Family(5, 1, 4, 2, (Term.THETA1_1,)),
    "p5_arc2_win": _Family(5, 2, 4, 2, (Term.THETA2_1,)),
    "p7_arc1_broad": _Family(7, 1, 2, 0, (Term.THETA1_1, Term.THETA1_2)),
    "p7_arc2_broad": _Family(7, 2, 2, 0, (Term.THETA2_1, Term.THETA2_2)),
    "p7_arc1_win2": _Family(7, 1, 6, 2, (Term.THETA1_1, Term.THETA1_2)),
    "p7_arc2_win2": _Family(7, 2, 6, 2, (Term.THETA2_1, Term.THETA2_2)),
    "p7_arc1_win4": _Family(7, 1, 6, 4, (Term.THETA1_1,)),
    "p7_arc2_win4": _Family(7, 2, 6, 4, (Term.THETA2_1, Term.THETA2_2)),
    "p7_arc1_sign": _Family(7, 1, 6, 4, (Term.THETA1_1,)),
    "p7_arc2_sign": _Family(7, 2, 6, 4, (Term.THETA2_1,)),
}

_TERM_CODES = {
    "t11": Term.THETA1_1,
    "t12": Term.THETA1_2,
    "t21": Term.THETA2_1,
    "t22": Term.THETA2_2,
}

# exact envelope rates (Fraction, sqrt-3 flag); floats match growth_rate()
_RATES = {
    (5, Term.THETA1_1): (Fraction(4), 0),
    (5, Term.THETA2_1): (Fraction(1), 0),
    (7, Term.THETA1_1): (Fraction(2), 1),
    (7, Term.THETA1_2): (Fraction(3), 1),
    (7, Term.THETA2_1): (Fraction(1, 2), 1),
    (7, Term.THETA2_2): (Fraction(3, 2), 1),
}


def _published_tolerance(text: str) -> float:
    decimals = len(text.split(".", 1)[1]) if "." in text else 0
    return min(1e-3, max(1e-6, 10.0 ** (1 - decimals)))


def _parse_term(group: str, p: int, t: Fraction) -> CaseTerm:
    fields = group.split()
    if len(fields) != 7:
        raise ValueError(f"term group needs 7 fields, got {group!r}")
    which = _TERM_CODES[fields[0]]
    ui = _parse_exact(fields[4])
    rate = _RATES[(p, which)]
    if ui != (rate[0] * t, rate[1]):
        raise ValueError(
            f"u for {fields[0]} must be the envelope rate times t, got {fields[4]!r}"
        )
    published = None if fields[6] == "-" else float(fields[6])
    return CaseTerm(
        which=which,
        c_prime=_parse_fraction(fields[1]),
        c0i=_parse_exact(fields[2]),
        a1i=_parse_fraction(fields[3]),
        ui=ui,
        a2i=_parse_fraction(fields[5]),
        published_Y=published,
        y_tol=_published_tolerance(fields[6]),
    )


def _parse_case(line: str) -> LemmaCase:
    cols = [c.strip() for c in line.split("|")]
    if len(cols) != 10:
        raise ValueError(f"case row needs 10 columns, got {len(cols)}: {line!r}")
    cid, family, win_s, c0p_s, scalars_s, terms_s, d_s, special_s, applies_s, slack_s = cols
    fam = _FAMILIES[family]

    window = None
    if win_s != "-":
        x_s, y_s = win_s.split(",")
        window = (Fraction(x_s), Fraction(y_s))
        if not 0 < window[0] < window[1] < 180:
            raise ValueError(f"{cid}: bad window {win_s!r}")
    c0_prime = None if c0p_s == "-" else _parse_fraction(c0p_s)
    t_s, b_s, s_s, k0_s = scalars_s.split()
    t, b, s, k0 = _parse_fraction(t_s), _parse_fraction(b_s), _parse_fraction(s_s), int(k0_s)

    terms = tuple(_parse_term(g, fam.p, t) for g in terms_s.split(";"))
    if tuple(tm.which for tm in terms) != fam.heads[: len(terms)]:
        raise ValueError(f"{cid}: heads do not match the {family} family")
    if len(terms) < len(fam.heads) and family != "p7_arc2_win4":
        raise ValueError(f"{cid}: family {family} certifies {len(fam.heads)} heads")
    if (c0_prime is None) != family.endswith("sign"):
        raise ValueError(f"{cid}: only sign-framed families assemble their own budget")

    d_values = () if d_s == "-" else tuple(_parse_fraction(v) for v in d_s.split(","))
    special_k, special_values = None, ()
    if special_s != "-":
        k_s, vals = special_s.split(":")
        special_k = int(k_s)
        special_values = tuple(float(v) for v in vals.split(","))
        if len(special_values) != len(terms):
            raise ValueError(f"{cid}: one special margin per head is required")

    y_k0 = k0
    if applies_s != "-":
        for clause in applies_s.split(","):
            if clause.startswith("k>="):
                y_k0 = int(clause[3:])
            elif not clause.startswith("k="):
                raise ValueError(f"{cid}: bad applies clause {clause!r}")

    return LemmaCase(
        case_id=cid,
        family=family,
        p=fam.p,
        arc=fam.arc,
        window=window,
        c0_prime=c0_prime,
        t=t,
        b=b,
        s=s,
        k0=k0,
        y_k0=y_k0,
        terms=terms,
        d_values=d_values,
        special_k=special_k,
        special_values=special_values,
        applies=applies_s,
        c0_slack=0.0 if slack_s == "-" else float(slack_s),
    )


@lru_cache(maxsize=1)
def catalog() -> tuple[LemmaCase, ...]:
    """All catalogued certificate cases, in source order."""
    text = resources.files("fricke_zeros").joinpath("data/lemma_cases.txt").read_text()
    cases = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            cases.append(_parse_case(line))
    ids = [c.case_id for c in cases]
    if len(set(ids)) != len(ids):
        raise ValueError("duplicate case ids in the catalog")
    return tuple(cases)


def case_by_id(case_id: str) -> LemmaCase:
    for case in catalog():
        if case.case_id == case_id:
            return case
    raise KeyError(case_id)


# --------------------------------------------------------------------------
# the three derivation steps


@dataclass(frozen=True)
class ParamTerm:
    c_prime: float
    c0i: float
    a1i: float
    ui: float


@dataclass(frozen=True)
class AlgoParams:
    t: float
    b: float
    s: float
    k0: int
    terms: tuple[ParamTerm, ...]


@dataclass(frozen=True)
class DerivedTerm:
    ci: float
    a2i: float
    a3i: float
    a4i: float
    Yi: float


@dataclass(frozen=True)
class AlgoDerived:
    a1: float
    a1_threshold: float
    terms: tuple[DerivedTerm, ...]


def tail_threshold(t: float, b: float, s: float, k0: int) -> float:
    """Smallest a_1 absorbing the tail at k0, the right side of (T)."""
    # in log space: s**(k0/2) overflows a float near k0 ~ 4000 already
    log_thr = math.log(b) + 2.0 * math.log(k0) - 0.5 * k0 * math.log(s) \
        - math.log(2.0 * t * t * _PI * _PI)
    if log_thr > 700.0:
        return math.inf
    if log_thr < -700.0:
        return 0.0
    return math.exp(log_thr)


def curvature_threshold(ci: float, a1i: float, c_prime: float, t: float, k0: int) -> float:
    """Smallest admissible a_2 for one head, the right side of (C)."""
    ratio = a1i / c_prime
    q = ci * ratio * (t * _PI / k0) ** 2
    if q >= 1.0:
        raise ConstraintViolation(
            f"curvature bound on a2 is unattainable: c (a1/c') (t pi/k0)^2 = {q} >= 1"
        )
    return ci * ci * ratio / (1.0 - q)


def margin_Y(ci: float, ui: float, a2i: float, t: float, k0: int) -> float:
    ln_c = math.log(ci)
    a3 = math.exp(2.0 * ln_c / k0)
    return (
        ui * _PI
        - 2.0 * ln_c
        - 2.0 * ln_c * ln_c * a3 / k0
        - (2.0 * a2i * t * t * _PI * _PI / ci) * a3 / (k0 * k0)
    )


def special_margin(ci: float, a2i: float, t: float, k: int, x_value: float) -> float:
    """Direct head margin X - c^{2/k} (1 + 2 a2 t^2 pi^2 / (c k^3)) at one weight."""
    bracket = 1.0 + 2.0 * a2i * t * t * _PI * _PI / (ci * k**3)
    return x_value - ci ** (2.0 / k) * bracket


def derive(
    params: AlgoParams,
    a1_choice: float | None = None,
    a2_choices: tuple[float, ...] | None = None,
) -> AlgoDerived:
    """Run the derivation steps, raising ConstraintViolation at the first failure."""
    k0 = params.k0
    if k0 < 1 or k0 * math.log(params.s) <= 4.0:
        raise ConstraintViolation(f"need k0 ln s > 4, got k0={k0}, s={params.s}")
    a1 = math.fsum(tm.a1i for tm in params.terms)
    if a1_choice is not None and not math.isclose(a1_choice, a1, rel_tol=1e-12, abs_tol=0.0):
        raise ConstraintViolation("a1 must equal the sum of the head shares a1_i")
    threshold = tail_threshold(params.t, params.b, params.s, k0)
    if not a1 > threshold:
        raise ConstraintViolation(f"tail-absorption bound on a1 fails: {a1} <= {threshold}")
    if a2_choices is None or len(a2_choices) != len(params.terms):
        raise ConstraintViolation("one a2 choice per head is required")
    derived = []
    for tm, a2 in zip(params.terms, a2_choices):
        ci = tm.c_prime / tm.c0i
        c_threshold = curvature_threshold(ci, tm.a1i, tm.c_prime, params.t, k0)
        if not a2 > c_threshold:
            raise ConstraintViolation(f"curvature bound on a2 fails: {a2} <= {c_threshold}")
        a3 = ci ** (2.0 / k0)
        derived.append(
            DerivedTerm(
                ci=ci,
                a2i=a2,
                a3i=a3,
                a4i=(2.0 * a2 / (ci * k0)) * a3,
                Yi=margin_Y(ci, tm.ui, a2, params.t, k0),
            )
        )
    return AlgoDerived(a1=a1, a1_threshold=threshold, terms=tuple(derived))


def params_of(case: LemmaCase) -> tuple[AlgoParams, tuple[float, ...]]:
    """A case's inputs in derive() form: (params, published a2 choices)."""
    terms = tuple(
        ParamTerm(
            c_prime=float(tm.c_prime),
            c0i=_num(tm.c0i),
            a1i=float(tm.a1i),
            ui=_num(tm.ui),
        )
        for tm in case.terms
    )
    params = AlgoParams(t=float(case.t), b=float(case.b), s=float(case.s), k0=case.k0, terms=terms)
    return params, tuple(float(tm.a2i) for tm in case.terms)


# --------------------------------------------------------------------------
# window geometry: the c0 budget and the c' floors


def _deg(x: Fraction | float) -> float:
    return float(x) * _PI / 180.0


def _window_c0_prime(case: LemmaCase) -> Fraction | None:
    """Exact budget fraction implied by the case's window, when one is fixed."""
    if case.window is None:
        return None
    x, y = case.window
    t = case.t
    if case.family in ("p5_arc1_win", "p7_arc1_win2", "p7_arc1_win4"):
        return 1 - x / 180 + t / 2
    if case.family == "p5_arc2_win":
        return y / 180 - Fraction(1, 2) + t / 2
    if case.family == "p7_arc2_win2":
        return y / 180 - Fraction(2, 3) + t / 2
    if case.family == "p7_arc2_win4":
        return y / 180 - Fraction(1, 3) + t / 2
    return None  # sign-framed budgets are assembled, not a single cosine


def _geometry_checks(case: LemmaCase) -> tuple[float, list[tuple[str, float, float]]]:
    """(c0 budget, [(label, value, floor_or_budget)...]) for one case.

    Floors are lower bounds the published c' must meet; the budget is the
    upper bound on c0 = sum c0_i.
    """
    t = float(case.t)
    D = 0.5 * t * _PI
    d = tuple(float(v) for v in case.d_values)
    floors: list[tuple[str, float, float]] = []
    budget = math.nan
    if case.window is not None:
        x, y = (_deg(w) for w in case.window)

    if case.c0_prime is not None:
        budget = math.cos(float(case.c0_prime) * _PI)

    family = case.family
    if family.endswith("broad"):
        for i, tm in enumerate(case.terms, start=1):
            if tm.c_prime != 1:
                raise CertificateMismatch(
                    f"{case.case_id}: whole-arc heads take c'_{i} = 1, got {tm.c_prime}"
                )
    elif family == "p5_arc1_win":
        floors.append(("c'_1", float(case.terms[0].c_prime), math.cos(_PI + y + D)))
    elif family == "p5_arc2_win":
        floors.append(("c'_1", float(case.terms[0].c_prime), -math.cos(_PI + x - 0.5 * _PI - D)))
    elif family == "p7_arc1_win2":
        floors.append(("c'_1", float(case.terms[0].c_prime), max(0.0, math.cos(2 * _PI / 3 + y + 3.0 * D))))
        floors.append(("c'_2", float(case.terms[1].c_prime), math.cos(4 * _PI / 3 + y - d[1] * D)))
    elif family == "p7_arc2_win2":
        floors.append(("c'_1", float(case.terms[0].c_prime), -math.cos(2 * _PI / 3 + x - 1.5 * D)))
        floors.append(("c'_2", float(case.terms[1].c_prime), -math.cos(y + 0.5 * D)))
    elif family == "p7_arc1_win4":
        if d:
            floors.append(("c'_1", float(case.terms[0].c_prime), math.cos(4 * _PI / 3 + x + d[0] * D)))
        elif case.terms[0].c_prime != 1:
            raise CertificateMismatch(f"{case.case_id}: with no window factor, c'_1 must be 1")
    elif family == "p7_arc2_win4":
        floors.append(("c'_1", float(case.terms[0].c_prime), -math.cos(2 * _PI / 3 + y - _PI / 3 - d[0] * D)))
        second = -math.cos(4 * _PI / 3 + x - _PI / 3 + d[1] * D)
        if len(case.terms) == 2:
            floors.append(("c'_2", float(case.terms[1].c_prime), max(0.0, second)))
        elif second > _TRUNC_TOL:
            raise CertificateMismatch(
                f"{case.case_id}: dropped second head still needs budget {second}"
            )
    elif family == "p7_arc1_sign":
        c2pp = -math.cos(2 * _PI / 3 + y - d[1] * D)
        budget = -math.cos(x - D) + c2pp * math.exp(-3.0 * _SQRT3 * D)
        floors.append(("c'_1", float(case.terms[0].c_prime), math.cos(4 * _PI / 3 + x + d[0] * D)))
    elif family == "p7_arc2_sign":
        c2pp = math.cos(4 * _PI / 3 + x - _PI / 3 + d[1] * D)
        budget = math.cos(y - _PI / 3 + D) + c2pp * math.exp(-1.5 * _SQRT3 * D)
        floors.append(("c'_1", float(case.terms[0].c_prime), -math.cos(2 * _PI / 3 + y - _PI / 3 - d[0] * D)))
    else:
        raise CertificateMismatch(f"unknown family {family!r}")
    return budget, floors


# --------------------------------------------------------------------------
# certification


@dataclass(frozen=True)
class CheckValue:
    label: str
    computed: float
    published: float | None
    tolerance: float
    margin: float


@dataclass(frozen=True)
class CaseReport:
    case_id: str
    family: str
    k0: int
    c0: float
    c0_budget: float
    checks: tuple[CheckValue, ...]


def certify(case: LemmaCase) -> CaseReport:
    """Re-derive every constant of a catalogued case and compare.

    Raises ConstraintViolation when a chosen constant misses (T) or (C) and
    CertificateMismatch when a recomputed value disagrees with the published
    one (Y margins, special margins, budget and floor geometry).
    """
    t, b, s, k0 = float(case.t), float(case.b), float(case.s), case.k0
    checks: list[CheckValue] = []

    exact_c0p = _window_c0_prime(case)
    if exact_c0p is not None and exact_c0p != case.c0_prime:
        raise CertificateMismatch(
            f"{case.case_id}: window implies a budget fraction {exact_c0p}, "
            f"catalog says {case.c0_prime}"
        )

    params, a2 = params_of(case)
    derived = derive(params, a2_choices=a2)  # raises ConstraintViolation itself
    checks.append(CheckValue("a1", derived.a1, None, 0.0, derived.a1 - derived.a1_threshold))

    for i, (tm, dv) in enumerate(zip(case.terms, derived.terms), start=1):
        if tm.published_Y is not None:
            y = margin_Y(dv.ci, _num(tm.ui), dv.a2i, t, case.y_k0)
            if y <= 0.0:
                raise CertificateMismatch(f"{case.case_id}: Y_{i} = {y} is not positive")
            diff = abs(y - tm.published_Y)
            if diff > tm.y_tol:
                raise CertificateMismatch(
                    f"{case.case_id}: Y_{i} = {y} is {diff} from published "
                    f"{tm.published_Y} (tolerance {tm.y_tol})"
                )
            checks.append(CheckValue(f"Y_{i}", y, tm.published_Y, tm.y_tol, y))

    if case.special_k is not None:
        for i, (tm, dv, published) in enumerate(
            zip(case.terms, derived.terms, case.special_values), start=1
        ):
            x_val = envelope_value(case.p, tm.which, t, case.special_k)
            value = special_margin(dv.ci, dv.a2i, t, case.special_k, x_val)
            if value <= 0.0:
                raise CertificateMismatch(
                    f"{case.case_id}: special margin {i} = {value} is not positive"
                )
            diff = abs(value - published)
            if diff > 1e-7:
                raise CertificateMismatch(
                    f"{case.case_id}: special margin {i} = {value} is {diff} "
                    f"from published {published}"
                )
            checks.append(CheckValue(f"X-margin_{i}", value, published, 1e-7, value))

    budget, floors = _geometry_checks(case)
    c0 = math.fsum(_num(tm.c0i) for tm in case.terms)
    slack = case.c0_slack + 1e-12
    if c0 > budget + slack:
        raise CertificateMismatch(
            f"{case.case_id}: c0 = {c0} exceeds its budget {budget} by {c0 - budget}"
        )
    checks.append(CheckValue("c0", c0, budget, slack, budget + slack - c0))
    for label, value, floor in floors:
        if value < floor - _TRUNC_TOL:
            raise CertificateMismatch(
                f"{case.case_id}: {label} = {value} sits under its floor {floor}"
            )
        checks.append(CheckValue(label, value, floor, _TRUNC_TOL, value - floor))

    return CaseReport(
        case_id=case.case_id,
        family=case.family,
        k0=k0,
        c0=c0,
        c0_budget=budget,
        checks=tuple(checks),
    )


def certify_all() -> list[CaseReport]:
    return [certify(case) for case in catalog()]


# --------------------------------------------------------------------------
# applicability


def case_applies(case: LemmaCase, k: int) -> bool:
    """Whether the case's bound claims anything at weight k."""
    if k < 4 or k % 2:
        return False
    fam = _FAMILIES[case.family]
    if (k - fam.residue) % fam.mod:
        return False
    if case.applies != "-":
        hit = False
        for clause in case.applies.split(","):
            if clause.startswith("k>="):
                hit = hit or k >= int(clause[3:])
            else:
                hit = hit or k == int(clause[2:])
        if not hit:
            return False
    elif k < case.k0:
        return False
    if case.window is not None:
        alpha = angle_constants(case.p, k).alpha_pk
        if not _deg(case.window[0]) < alpha < _deg(case.window[1]):
            return False
    return True


def valid_weights(case: LemmaCase, count: int, k_cap: int = 200_000) -> list[int]:
    """The first admissible weights for a case, scanning k <= k_cap."""
    fam = _FAMILIES[case.family]
    start = fam.residue if fam.residue >= 4 else fam.residue + fam.mod
    out: list[int] = []
    for k in range(max(start, 4), k_cap + 1, fam.mod):
        if case_applies(case, k):
            out.append(k)
            if len(out) >= count:
                break
    return out


# --------------------------------------------------------------------------
# the uncovered junction-angle windows


def remaining_window(p: int, k: int) -> tuple[Fraction, Fraction] | None:
    """Junction-angle bounds (multiples of pi) left uncovered at weight k,
    or None when the catalogue covers every angle for that weight class."""
    check_level(p)
    check_weight(k)
    if p == 5:
        return None if k % 4 == 0 else (Fraction(29, 45), Fraction(13, 20))
    r = k % 6
    if r == 0:
        return None
    if r == 2:
        return (Fraction(266, 375), Fraction(3217, 4500))
    return (Fraction(217, 360), Fraction(73, 120))


def attribution_threshold(p: int, k: int) -> float:
    """Junction angle above which the unassigned zero falls on the first arc."""
    check_level(p)
    check_weight(k)
    if p == 5:
        return _PI - alpha_p(5)
    return 1.5 * _PI - 2.0 * alpha_p(7) if k % 6 == 2 else _PI - alpha_p(7)


@dataclass(frozen=True)
class ProbeRecord:
    p: int
    k: int
    t: float
    alpha: float
    beta: float
    threshold: float
    predicted_arc: int
    A1: float
    B1: float
    A2: float
    B2: float

    @property
    def arc1_positive(self) -> bool:
        return self.A1 > 0.0 and self.B1 > 0.0

    @property
    def arc2_positive(self) -> bool:
        return self.A2 > 0.0 and self.B2 > 0.0


def remaining_case_probe(p: int, k: int, t: float) -> ProbeRecord:
    """Bracketing endpoint envelopes inside the uncovered window.

    A uses the certified offset-window factors d, B the raw slopes with the
    complementary envelope, so the pair brackets the sign of the arc value
    at offset t pi / k from each endpoint.  Both arc-1 values positive means
    the sign change (hence the unassigned zero) lands on arc 1; both arc-2
    values positive puts it on arc 2.
    """
    check_level(p)
    check_weight(k)
    window = remaining_window(p, k)
    if window is None:
        raise DomainError(f"every junction angle is covered for p={p}, k={k}")
    ang = angle_constants(p, k)
    a = ang.alpha_pk
    if not float(window[0]) * _PI < a < float(window[1]) * _PI:
        raise DomainError(
            f"junction angle {a / _PI:.6f} pi falls outside the uncovered window "
            f"({window[0]} pi, {window[1]} pi) for k={k}"
        )
    if not 0.0 < t <= 1.0:
        raise DomainError(f"need 0 < t <= 1, got t={t}")
    beta = ang.beta_pk
    D = 0.5 * t * _PI
    x = t * _PI / k

    if p == 5:
        d1 = d_window(5, Term.THETA1_1, t, k).d_value
        d2 = d_window(5, Term.THETA2_1, t, k).d_value
        A1 = -math.cos(a - D) - math.cos(_PI + a + d1 * D) * math.exp(-2.0 * _PI * t)
        B1 = -math.cos(a - D) - math.cos(_PI + a + D) * (1.0 + 4.0 * x) ** (-0.5 * k)
        A2 = math.cos(beta + D) + math.cos(_PI + beta - d2 * D) * math.exp(-0.5 * _PI * t)
        B2 = math.cos(beta + D) + math.cos(_PI + beta - D) * (1.0 + x) ** (-0.5 * k)
    else:
        d11 = d_window(7, Term.THETA1_1, t, k).d_value
        d12 = d_window(7, Term.THETA1_2, t, k).d_value
        d21 = d_window(7, Term.THETA2_1, t, k).d_value
        d22 = d_window(7, Term.THETA2_2, t, k).d_value
        third = 2.0 * _PI / 3.0
        if k % 6 == 2:
            A1 = (
                -math.cos(a - D)
                - math.cos(third + a + d11 * D) * (1.0 + 2.0 * _SQRT3 * x) ** (-0.5 * k)
                - math.cos(2.0 * third + a - d12 * D) * math.exp(-1.5 * _SQRT3 * _PI * t)
            )
            B1 = (
                -math.cos(a - D)
                - math.cos(third + a + 3.0 * D) * math.exp(-_SQRT3 * _PI * t)
                - math.cos(2.0 * third + a - 2.0 * D) * (1.0 + 3.0 * _SQRT3 * x) ** (-0.5 * k)
            )
            A2 = (
                math.cos(beta + D)
                + math.cos(2.0 * third + beta - d21 * D)
                * (1.0 + 0.5 * _SQRT3 * x + 0.5 * x * x) ** (-0.5 * k)
                + math.cos(third + beta + d22 * D) * math.exp(-0.75 * _SQRT3 * _PI * t)
            )
            B2 = (
                math.cos(beta + D)
                + math.cos(2.0 * third + beta - 1.5 * D) * math.exp(-0.25 * _SQRT3 * _PI * t)
                + math.cos(third + beta + 0.5 * D) * (1.0 + 1.5 * _SQRT3 * x) ** (-0.5 * k)
            )
        else:
            A1 = (
                -math.cos(a - D)
                - math.cos(2.0 * third + a + 3.0 * D) * math.exp(-_SQRT3 * _PI * t)
                - math.cos(third + a - 2.0 * D) * (1.0 + 3.0 * _SQRT3 * x) ** (-0.5 * k)
            )
            B1 = (
                -math.cos(a - D)
                - math.cos(2.0 * third + a + d11 * D) * (1.0 + 2.0 * _SQRT3 * x) ** (-0.5 * k)
                - math.cos(third + a - d12 * D) * math.exp(-1.5 * _SQRT3 * _PI * t)
            )
            # The published display keeps the k = 2 mod 6 angle multiples here,
            # but the head phases rotate with k mod 6: the slower head sits at
            # 2pi/3 + beta and the faster one at 4pi/3 + beta in this residue
            # class.  Only with the multiples swapped does the stated slope
            # (3pi/2) cos(beta) (2/sqrt(3) - tan(beta)) come out, and only then
            # do A2/B2 actually bracket the arc value.
            A2 = (
                math.cos(beta + D)
                + math.cos(third + beta - 1.5 * D)
                * (1.0 + 0.5 * _SQRT3 * x + 0.5 * x * x) ** (-0.5 * k)
                + math.cos(2.0 * third + beta + 0.5 * D) * (1.0 + 1.5 * _SQRT3 * x) ** (-0.5 * k)
            )
            B2 = (
                math.cos(beta + D)
                + math.cos(third + beta - d21 * D) * math.exp(-0.25 * _SQRT3 * _PI * t)
                + math.cos(2.0 * third + beta + d22 * D) * math.exp(-0.75 * _SQRT3 * _PI * t)
            )

    threshold = attribution_threshold(p, k)
    return ProbeRecord(
        p=p,
        k=k,
        t=t,
        alpha=a,
        beta=beta,
        threshold=threshold,
        predicted_arc=1 if a > threshold else 2,
        A1=A1,
        B1=B1,
        A2=A2,
        B2=B2,
    )


def probe_weights(p: int, k_max: int, k_min: int = 4) -> list[int]:
    """Weights up to k_max whose junction angle lands in an uncovered window."""
    out = []
    for k in range(max(4, k_min + k_min % 2), k_max + 1, 2):
        window = remaining_window(p, k)
        if window is None:
            continue
        alpha = angle_constants(p, k).alpha_pk
        if float(window[0]) * _PI < alpha < float(window[1]) * _PI:
            out.append(k)
    return out
