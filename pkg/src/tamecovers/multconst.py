"""The multiplicative construction: 4-point covers with one index p-1.

A genus-0 single-cycle type (d; e1, e2, e3, p-1) with 1 < e_i < p is tied
to the 3-point type (d~; e1, e2, p-e3), d~ = d+1-e3, by a pair of inverse
constructions:

* ``lift``     turns the unique normalized 3-point cover h and a parameter
               mu into a normalized 4-point cover f with fourth branch
               point lambda = mu^p (1 - h(mu)) / (mu^p - h(mu)), by
               normalizing w = (y - mu)^p / (h - h(mu));
* ``contract`` inverts it, dividing (y - mu)^p by f - lambda.

Sending mu to lambda is a single rational map; its degree is the generic
number of 4-point covers per branch locus (the p-Hurwitz number), with the
closed form (3p - 1 - E)/2, E = e1+e2+e3.  ``lambda_map`` builds the map
and refuses to return anything whose computed degree disagrees with the
closed form.  The finitely many lambda values where the fiber count drops
(the supersingular locus) are the images r^p of the poles r of h.

``count_covers_at`` is the independent oracle: it counts the mu-fiber over
a given lambda inside the extension tower by degree bookkeeping alone,
discarding the mu excluded by the construction.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    BranchValueExcluded,
    FormulaMismatch,
    HypothesisFails,
    InvalidMu,
    InvalidType,
    MinNotAtFirst,
    MixedContexts,
    NoCovers,
    NotRamifiedHere,
    WrongIndex,
)
from .field import ExtField, FieldCtx, FieldElem, PrimeField, is_prime
from .poly import (
    INF,
    Poly,
    ProjPoint,
    RatFunc,
    count_roots_by_degree,
    evaluate,
    lift_poly,
    lift_ratfunc,
    map_degree,
    ord_at,
    poly_gcd,
    radical,
    roots,
)
from .ramify import NormalizedCover, analyze_cover
from .threepoint import ThreePointSpec, solve_three_point


@dataclass(frozen=True)
class FourPointType:
    """A type (d; e1, e2, e3, p-1) with 1 < e_i < p, E = e1+e2+e3 even."""

    p: int
    e1: int
    e2: int
    e3: int

    def __post_init__(self):
        if not is_prime(self.p) or self.p == 2:
            raise InvalidType(f"p = {self.p} is not an odd prime")
        for e in (self.e1, self.e2, self.e3):
            if not 1 < e < self.p:
                raise InvalidType(f"index {e} outside (1, {self.p})")
        if self.E % 2:
            raise InvalidType(f"E = {self.E} must be even")
        if self.e3 == self.p - 1:
            raise InvalidType(f"e3 = p - 1 = {self.e3} is excluded")

    @property
    def E(self) -> int:
        return self.e1 + self.e2 + self.e3

    @property
    def e4(self) -> int:
        return self.p - 1

    @property
    def d(self) -> int:
        return (self.E + self.p - 3) // 2

    @property
    def d_tilde(self) -> int:
        return self.d + 1 - self.e3

    @property
    def tilde_spec(self) -> ThreePointSpec:
        return ThreePointSpec(self.e1, self.e2, self.p - self.e3)

    def phpos_witness(self) -> str | None:
        """None when p+1 <= E <= p-1+2*min(e_i) holds, else the failed side."""
        lo, hi = self.p + 1, self.p - 1 + 2 * min(self.e1, self.e2, self.e3)
        if self.E < lo:
            return f"E = {self.E} < p+1 = {lo}"
        if self.E > hi:
            return f"E = {self.E} > p-1+2*min(e_i) = {hi}"
        return None

    @property
    def phpos_ok(self) -> bool:
        return self.phpos_witness() is None


def p_hurwitz_4pt(p: int, t) -> int:
    """Generic number of covers of type (d; e1, e2, e3, p-1)."""
    if not isinstance(t, FourPointType):
        t = FourPointType(p, *t)
    if t.p != p:
        raise InvalidType(f"type carries p = {t.p}, got {p}")
    if not t.phpos_ok:
        return 0
    return (3 * p - 1 - t.E) // 2


@dataclass(frozen=True)
class LambdaMap:
    """The fourth-branch-point map mu -> lambda of a 4-point type."""

    p: int
    four_type: FourPointType
    base: NormalizedCover  # the 3-point cover h of the tilde type
    map: RatFunc
    degree: int
    supersingular: tuple[FieldElem, ...]


def lambda_map(ctx: FieldCtx, t: FourPointType, max_ext_degree: int = 6) -> LambdaMap:
    """Build mu -> mu^p (1 - h(mu)) / (mu^p - h(mu)) and check its degree."""
    if not isinstance(ctx, PrimeField) or ctx.p != t.p:
        raise MixedContexts(f"lambda_map needs the prime field F_{t.p}, got {ctx}")
    witness = t.phpos_witness()
    if witness is not None:
        raise NoCovers(witness)
    h = solve_three_point(ctx, t.tilde_spec)
    p = t.p
    ypow = Poly.from_ints(ctx, [0] * p + [1])
    num = ypow * (h.cover.den - h.cover.num)
    den = ypow * h.cover.den - h.cover.num
    lam = RatFunc.make(num, den)
    deg = map_degree(lam)
    expected = (3 * p - 1 - t.E) // 2
    via_divisor = p - t.e1 + t.d_tilde - t.e2
    if deg != expected or expected != via_divisor:
        raise FormulaMismatch(
            f"deg(lambda) = {deg}, closed form {expected}, divisor count {via_divisor}"
            f" for type {t}"
        )
    ss = [r.frobenius() for r, _m, _k in roots(h.cover.den, max_ext_degree)]
    ss.sort(key=lambda e: (e.min_degree(), e.sort_key()))
    return LambdaMap(
        p=p,
        four_type=t,
        base=h,
        map=lam,
        degree=deg,
        supersingular=tuple(ss),
    )


@dataclass(frozen=True)
class LiftResult:
    cover: NormalizedCover  # normalized 4-point cover
    lam: FieldElem
    mu: FieldElem
    d: int
    indices: tuple[int, int, int, int]  # at 0, 1, infinity, mu


def _frobenius_linear_power(ctx: FieldCtx, mu: FieldElem, p: int) -> Poly:
    """(y - mu)^p = y^p - mu^p in characteristic p."""
    mup = mu ** p
    return Poly.from_elems(ctx, [-mup] + [ctx.zero] * (p - 1) + [ctx.one])


def lift(h: NormalizedCover, mu: FieldElem, verify: bool = True) -> LiftResult:
    """Extend a normalized 3-point cover to a 4-point cover through mu."""
    base_ctx = h.cover.ctx
    p = base_ctx.characteristic
    if h.ram_type is None or h.ram_type.single_cycle is None:
        raise InvalidType("lift needs a verified single-cycle 3-point cover")
    te1, te2, te3 = h.ram_type.single_cycle
    e1, e2, e3 = te1, te2, p - te3
    d = h.ram_type.d - 1 + e3

    if isinstance(mu, ProjPoint):
        if mu.is_infinite:
            raise InvalidMu("mu = infinity")
        mu = mu.value
    ctx = mu.ctx
    if ctx.characteristic != p:
        raise MixedContexts(f"mu lives in characteristic {ctx.characteristic}, cover in {p}")
    if mu.is_zero or mu == ctx.one:
        raise InvalidMu(f"mu = {mu} is a ramification point of the base cover")

    hl = lift_ratfunc(h.cover, ctx)
    hv = evaluate(hl, mu)
    if hv.is_infinite:
        raise InvalidMu(f"h(mu) is a pole at mu = {mu}")
    hvv = hv.value
    if hvv.is_zero:
        raise InvalidMu(f"h(mu) = 0 at mu = {mu}")
    if hvv == ctx.one:
        raise InvalidMu(f"h(mu) = 1 at mu = {mu}")
    mup = mu ** p
    if hvv == mup:
        raise InvalidMu(f"h(mu) = mu^p at mu = {mu} (fixed point)")

    w = RatFunc.make(
        _frobenius_linear_power(ctx, mu, p) * hl.den,
        hl.num - Poly.constant(hvv) * hl.den,
    )
    w0 = evaluate(w, ctx.zero).value
    w1 = evaluate(w, ctx.one).value
    assert w1 != w0, "degenerate normalization in lift"
    f = (w - w0) / (w1 - w0)

    lam = mup * (ctx.one - hvv) / (mup - hvv)
    assert evaluate(f, mu) == ProjPoint(lam), "closed form for lambda disagrees"

    ram_type = None
    if verify:
        analysis = analyze_cover(f, candidates=(ctx.zero, ctx.one, mu), with_fibers=False)
        zero, one = ProjPoint(ctx.zero), ProjPoint(ctx.one)
        ok = (
            analysis.complete
            and analysis.tame
            and analysis.degree == d
            and len(analysis.ram_points) == 4
            and analysis.index_at(zero) == e1
            and analysis.index_at(one) == e2
            and analysis.index_at(INF) == e3
            and analysis.index_at(mu) == p - 1
            and evaluate(f, zero) == zero
            and evaluate(f, one) == one
            and evaluate(f, INF) == INF
            and len(set(analysis.branch_points)) == 4
            and lam != ctx.zero
            and lam != ctx.one
        )
        if not ok:
            raise FormulaMismatch(
                f"lift of {h.ram_type} at mu = {mu} failed type verification"
            )
        ram_type = analysis.ram_type
    return LiftResult(
        cover=NormalizedCover(cover=f, ram_type=ram_type),
        lam=lam,
        mu=mu,
        d=d,
        indices=(e1, e2, e3, p - 1),
    )


def contract(f: RatFunc, lam: FieldElem, mu: FieldElem, verify: bool = True) -> NormalizedCover:
    """Collapse the index-(p-1) point of a 4-point cover back to 3 points."""
    ctx = f.ctx
    p = ctx.characteristic
    if p == 0:
        raise MixedContexts("contract needs positive characteristic")
    lam, mu = ctx.elem(lam), ctx.elem(mu)
    if evaluate(f, mu) != ProjPoint(lam):
        raise NotRamifiedHere(f"f({mu}) = {evaluate(f, mu)} is not {lam}")
    e = ord_at(f, mu, lam)
    if e == 1:
        raise NotRamifiedHere(f"mu = {mu} is unramified in its fiber")
    if e != p - 1:
        raise WrongIndex(f"index at mu = {mu} is {e}, expected p-1 = {p - 1}")

    g = RatFunc.make(
        _frobenius_linear_power(ctx, mu, p) * f.den,
        f.num - Poly.constant(lam) * f.den,
    )
    g0 = evaluate(g, ctx.zero).value
    g1 = evaluate(g, ctx.one).value
    assert g1 != g0, "degenerate normalization in contract"
    h = (g - g0) / (g1 - g0)

    ram_type = None
    if verify:
        analysis = analyze_cover(h, candidates=(ctx.zero, ctx.one), with_fibers=False)
        zero, one = ProjPoint(ctx.zero), ProjPoint(ctx.one)
        ok = (
            analysis.complete
            and analysis.tame
            and analysis.branch_points == (zero, one, INF)
            and evaluate(h, zero) == zero
            and evaluate(h, one) == one
            and evaluate(h, INF) == INF
            and len(analysis.ram_points) == 3
        )
        if not ok:
            raise FormulaMismatch(f"contract at mu = {mu} failed type verification")
        ram_type = analysis.ram_type
    return NormalizedCover(cover=h, ram_type=ram_type)


def _exclusion_poly(h: RatFunc) -> Poly:
    """Polynomial whose roots are the mu rejected by the lift construction."""
    ctx = h.ctx
    p = ctx.characteristic
    x = Poly.x(ctx)
    ypow = Poly.from_ints(ctx, [0] * p + [1])
    parts = [
        x,
        x - Poly.one(ctx),
        h.num,
        h.num - h.den,
        h.den,
        ypow * h.den - h.num,
    ]
    out = Poly.one(ctx)
    for part in parts:
        if part.degree > 0:
            out = out * part
    return out


def count_covers_at(L: LambdaMap, lam0, max_ext_degree: int = 6) -> int:
    """Number of valid mu with lambda(mu) = lam0 in the extension tower.

    Counts distinct roots of the fiber polynomial whose degree over F_p is
    within the bound, then removes the roots excluded by the construction.
    """
    if isinstance(lam0, ProjPoint):
        if lam0.is_infinite:
            raise BranchValueExcluded("lambda = infinity is a branch value")
        lam0 = lam0.value
    ctx0 = lam0.ctx
    if ctx0.characteristic != L.p:
        raise MixedContexts(f"lambda lives in characteristic {ctx0.characteristic}")
    if lam0.is_zero or lam0 == ctx0.one:
        raise BranchValueExcluded(f"lambda = {lam0} is one of the fixed branch values")

    num = lift_poly(L.map.num, ctx0)
    den = lift_poly(L.map.den, ctx0)
    P = num - Poly.constant(lam0) * den
    total = sum(count_roots_by_degree(P, max_ext_degree).values())
    excl = lift_poly(_exclusion_poly(L.base.cover), ctx0)
    bad_poly = poly_gcd(radical(P), excl)
    bad = 0
    if bad_poly.degree > 0:
        bad = sum(count_roots_by_degree(bad_poly, max_ext_degree).values())
    return total - bad


def is_critical_value(L: LambdaMap, lam0) -> bool:
    """Whether the fiber polynomial over lam0 has a repeated root."""
    if isinstance(lam0, ProjPoint):
        if lam0.is_infinite:
            return True
        lam0 = lam0.value
    ctx0 = lam0.ctx
    num = lift_poly(L.map.num, ctx0)
    den = lift_poly(L.map.den, ctx0)
    P = num - Poly.constant(lam0) * den
    return poly_gcd(P, P.derivative()).degree > 0


def is_supersingular_value(L: LambdaMap, lam0) -> bool:
    if isinstance(lam0, ProjPoint):
        if lam0.is_infinite:
            return False
        lam0 = lam0.value
    for s in L.supersingular:
        if _same_algebraic_point(s, lam0):
            return True
    return False


def _same_algebraic_point(a: FieldElem, b: FieldElem) -> bool:
    """Equality across the canonical tower when one side is prime-field."""
    if a.ctx is b.ctx:
        return a == b
    if isinstance(a.ctx, PrimeField) and isinstance(b.ctx, ExtField):
        return a.ctx.p == b.ctx.p and a.lift_to(b.ctx) == b
    if isinstance(b.ctx, PrimeField) and isinstance(a.ctx, ExtField):
        return b.ctx.p == a.ctx.p and b.lift_to(a.ctx) == a
    return False


@dataclass(frozen=True)
class BadDegreeResult:
    p: int
    es: tuple[int, int, int]
    d: int
    h: int
    h_p: int
    bad: int
    case: str  # "all_good" | "mixed" | "all_bad"
    quotient: int | None  # (h - h_p)/p in the mixed case


def bad_degree(p: int, es) -> BadDegreeResult:
    """Covers with generic branch locus and bad reduction, by the piecewise
    closed form; es must put the minimal e_i (d+1-e_i) first."""
    t = FourPointType(p, *es)
    d = t.d

    def score(e: int) -> int:
        return e * (d + 1 - e)

    if score(t.e1) != min(score(t.e1), score(t.e2), score(t.e3)):
        raise MinNotAtFirst(
            f"min of e_i(d+1-e_i) over {es} is not attained at e1 = {t.e1}"
        )
    if d < p - 1:
        h = 0  # the (p-1)-cycle does not fit in degree d: no covers at all
    else:
        h = min(score(t.e1), score(t.e2), score(t.e3), score(t.e4))
    h_p = p_hurwitz_4pt(p, t)
    if d <= p - 1:
        case, bad, quotient = "all_good", 0, None
    elif d <= p - 2 + t.e1:
        case, bad, quotient = "mixed", p * (d + 1 - p), d + 1 - p
    else:
        case, bad, quotient = "all_bad", score(t.e1), None
    if bad != h - h_p:
        raise FormulaMismatch(
            f"piecewise bad degree {bad} != h - h_p = {h} - {h_p} for {t}"
        )
    return BadDegreeResult(p=p, es=(t.e1, t.e2, t.e3), d=d, h=h, h_p=h_p, bad=bad,
                           case=case, quotient=quotient)


def divisibility_check(p: int, es) -> dict:
    """In the mixed case, h - h_p is always divisible by p; returns the
    quotient d+1-p.  Raises HypothesisFails outside the mixed case."""
    es = tuple(int(e) for e in es)
    t = FourPointType(p, *es)
    d = t.d

    def score(e: int) -> int:
        return e * (d + 1 - e)

    ordered = tuple(sorted(es, key=lambda e: (score(e), e)))
    res = bad_degree(p, ordered)
    if res.case != "mixed":
        raise HypothesisFails(
            f"type {es} at p = {p} is in the {res.case} case, h = {res.h}, h_p = {res.h_p}"
        )
    assert res.bad % p == 0
    return {"divisible": True, "quotient": res.quotient, "bad": res.bad,
            "h": res.h, "h_p": res.h_p}
