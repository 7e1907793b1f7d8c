"""The additive construction: splitting a merged branch point with c*x^p.

Adding c*x^p to a cover does not move its finite ramification points (the
derivative is unchanged) but does move their images.  Starting from a
merged cover f -- normalized so that f(infinity) = infinity, f(0) = 0 and
the two ramification points x = 1 and x = rho share the branch point 1 --
the twist f + c*x^p separates the shared branch point for every c outside
three exclusions, and after rescaling by 1/(1+c) the fourth branch point
moves along the degree-1 map

    c  ->  (1 + c*rho^p) / (1 + c).

``construct_family`` builds the one concrete merged family available in
closed form: degree p+2, index p+2 at infinity, index 3 at 0, and indices
e3 at 1, e4 at rho with e3 + e4 = p + 1.  Writing

    f - 1 = c (x-1)^e3 (x-rho)^e4 (x-a)

the order-3 vanishing of f at 0 forces two linear conditions on (rho, a);
eliminating rho yields the quadratic e3*a^2 + 2*e3*a + 2 - e3 = 0.  Both
linear conditions are evaluated and cross-checked rather than trusting any
printed shortcut, and every family returned is re-verified by a full
ramification analysis.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    DegenerateRho,
    ExcludedC,
    FormulaMismatch,
    FrobeniusCollision,
    InvalidType,
    NoValidRoot,
    TypeDegenerates,
)
from .field import FieldElem, is_prime, make_field
from .poly import INF, Poly, ProjPoint, RatFunc, evaluate, map_degree, ord_at, roots
from .ramify import NormalizedCover, RamType, analyze_cover


@dataclass(frozen=True)
class MergedCover:
    """Cover of merged type (d; e1, e2, e3-e4): ramification points
    infinity, 0, 1, rho with images infinity, 0, 1, 1."""

    f: RatFunc
    p: int
    e: tuple[int, int, int, int]  # (e1, e2, e3, e4)
    rho: FieldElem
    ram_type: RamType

    @property
    def d(self) -> int:
        return (sum(self.e) - 2) // 2


@dataclass(frozen=True)
class AdditiveFamily:
    p: int
    e3: int
    e4: int
    a: FieldElem
    rho: FieldElem
    c: FieldElem
    merged: MergedCover


@dataclass(frozen=True)
class TwistResult:
    cover: NormalizedCover  # ramification points 0, 1, rho, infinity -> 0, 1, lambda, infinity
    lam: FieldElem
    c: FieldElem


def _verify_merged(f: RatFunc, p: int, e, rho: FieldElem) -> RamType:
    e1, e2, e3, e4 = e
    d = (sum(e) - 2) // 2
    ctx = f.ctx
    zero, one = ProjPoint(ctx.zero), ProjPoint(ctx.one)
    analysis = analyze_cover(f, candidates=(ctx.zero, ctx.one, rho), with_fibers=False)
    ok = (
        analysis.complete
        and analysis.tame
        and analysis.degree == d
        and len(analysis.ram_points) == 4
        and len(analysis.branch_points) == 3
        and analysis.index_at(INF) == e1
        and analysis.index_at(zero) == e2
        and analysis.index_at(one) == e3
        and analysis.index_at(rho) == e4
        and evaluate(f, INF) == INF
        and evaluate(f, zero) == zero
        and evaluate(f, one) == one
        and evaluate(f, rho) == one
    )
    if not ok:
        raise TypeDegenerates(
            f"map does not have merged type ({d}; {e1},{e2},{e3}-{e4})"
        )
    assert analysis.ram_type is not None
    return analysis.ram_type


def make_merged_cover(f: RatFunc, p: int, e, rho: FieldElem) -> MergedCover:
    e = tuple(int(x) for x in e)
    e1, e2, e3, e4 = e
    d = (sum(e) - 2) // 2
    if sum(e) % 2 or not (e1 > p and e1 % p != 0):
        raise InvalidType(f"merged type needs even index sum and e1 > p prime to p, got {e}")
    if not all(1 < x < p for x in (e2, e3, e4)) or e3 + e4 > d:
        raise InvalidType(f"merged type constraints fail for {e} at p = {p}")
    ram_type = _verify_merged(f, p, e, rho)
    return MergedCover(f=f, p=p, e=e, rho=rho, ram_type=ram_type)


def additive_twist(m: MergedCover, c: FieldElem) -> TwistResult:
    """Split the merged branch point of m with the twist f + c*x^p."""
    ctx = m.f.ctx
    c = ctx.elem(c)
    p = m.p
    rho_p = m.rho ** p
    if c.is_zero:
        raise ExcludedC("c = 0 leaves the branch points merged")
    if c == ctx.from_int(-1):
        raise ExcludedC("c = -1 sends the image of x = 1 to 0")
    if not rho_p.is_zero and c == -(rho_p.inverse()):
        raise ExcludedC("c = -rho^(-p) sends the image of x = rho to 0")

    xp = Poly.from_ints(ctx, [0] * p + [1])
    f_c = m.f + RatFunc.from_poly(xp) * c
    scale = (ctx.one + c).inverse()
    g = f_c * scale
    lam = (ctx.one + c * rho_p) * scale
    assert evaluate(g, m.rho) == ProjPoint(lam)

    e1, e2, e3, e4 = m.e
    zero, one = ProjPoint(ctx.zero), ProjPoint(ctx.one)
    analysis = analyze_cover(g, candidates=(ctx.zero, ctx.one, m.rho), with_fibers=False)
    ok = (
        analysis.complete
        and analysis.tame
        and len(analysis.ram_points) == 4
        and len(analysis.branch_points) == 4
        and analysis.index_at(INF) == e1
        and analysis.index_at(zero) == e2
        and analysis.index_at(one) == e3
        and analysis.index_at(m.rho) == e4
        and evaluate(g, zero) == zero
        and evaluate(g, one) == one
        and evaluate(g, INF) == INF
    )
    if not ok:
        raise TypeDegenerates(f"twist by c = {c} did not produce the split type")
    return TwistResult(
        cover=NormalizedCover(cover=g, ram_type=analysis.ram_type),
        lam=lam,
        c=c,
    )


def find_merging_c(g: RatFunc, x3: FieldElem, x4: FieldElem) -> tuple[RatFunc, FieldElem]:
    """The unique c with (g + c*x^p)(x3) = (g + c*x^p)(x4).

    Twisting never moves ramification points, so c solves a linear
    equation.  Returns the merged cover rescaled so the shared branch point
    is 1, together with c.  The merged type is verified; an extra collision
    among the other branch points raises TypeDegenerates.
    """
    ctx = g.ctx
    p = ctx.characteristic
    x3, x4 = ctx.elem(x3), ctx.elem(x4)
    if x3 == x4:
        raise FrobeniusCollision("the two ramification points coincide")
    x3p, x4p = x3 ** p, x4 ** p
    if x3p == x4p:
        raise FrobeniusCollision(f"{x3}^p = {x4}^p for distinct points")
    v3 = evaluate(g, x3)
    v4 = evaluate(g, x4)
    assert not v3.is_infinite and not v4.is_infinite
    c = (v4.value - v3.value) / (x3p - x4p)

    xp = Poly.from_ints(ctx, [0] * p + [1])
    merged = g + RatFunc.from_poly(xp) * c
    shared = evaluate(merged, x3)
    assert shared == evaluate(merged, x4)
    if shared.is_infinite or shared.value.is_zero:
        raise TypeDegenerates("merged branch point collided with 0 or infinity")
    normalized = merged / shared.value
    others = {repr(evaluate(normalized, ctx.zero)), "inf", repr(ProjPoint(ctx.one))}
    if len(others) != 3:
        raise TypeDegenerates("another pair of branch points collided under the twist")
    return normalized, c


def lambda_of_c(m: MergedCover) -> RatFunc:
    """The fourth branch point of the twist as a degree-1 map of c."""
    ctx = m.f.ctx
    rho_p = m.rho ** m.p
    if rho_p == ctx.one:
        raise DegenerateRho("rho^p = 1 makes the branch-point map constant")
    num = Poly.from_elems(ctx, [ctx.one, rho_p])  # 1 + rho^p c
    den = Poly.from_elems(ctx, [ctx.one, ctx.one])  # 1 + c
    lam = RatFunc.make(num, den)
    assert map_degree(lam) == 1
    return lam


def construct_family(p: int, e3: int, e4: int) -> list[AdditiveFamily]:
    """All merged covers of type (p+2; p+2, 3, e3-e4) with e3 + e4 = p + 1.

    Solves the quadratic for the free point a (roots may be conjugate in
    F_{p^2}), derives rho from both order-3 conditions at 0 with a
    cross-check, fixes c by f(0) = 0, and verifies each candidate by a full
    ramification analysis.  Returns one or two families.
    """
    if not is_prime(p) or p <= 3:
        raise InvalidType(f"p = {p} must be a prime > 3")
    if not (2 <= e3 < e4 < p) or e3 + e4 != p + 1:
        raise InvalidType(f"need 2 <= e3 < e4 < p with e3 + e4 = p + 1, got ({e3}, {e4})")
    ctx = make_field(p)
    quad = Poly.from_ints(ctx, [2 - e3, 2 * e3, e3])
    out = []
    skipped = []
    for a, mult, _k in roots(quad, 2):
        assert mult == 1, "the quadratic in a has distinct roots for 1 < e3 < p"
        actx = a.ctx
        one = actx.one
        e3a, e4a = actx.from_int(e3), actx.from_int(e4)
        den1 = e3a * a + one
        if den1.is_zero:
            skipped.append((a, "rho undefined"))
            continue
        rho = (e3a - one) * a / den1
        rho_alt = (e3a - actx.from_int(2) - a) / (e3a + one)
        if rho != rho_alt:
            raise FormulaMismatch(
                f"the two order-3 conditions disagree on rho at a = {a}"
            )
        pts = [actx.zero, one, rho, a]
        if len({repr(x) for x in pts}) != 4:
            skipped.append((a, "0, 1, rho, a not pairwise distinct"))
            continue
        c = (a * rho ** e4).inverse()
        shape = (
            Poly.from_elems(actx, [-one, one]) ** e3
            * Poly.from_elems(actx, [-rho, one]) ** e4
            * Poly.from_elems(actx, [-a, one])
        )
        f = RatFunc.from_poly(Poly.one(actx) + shape * c)
        assert evaluate(f, actx.zero) == ProjPoint(actx.zero)
        assert ord_at(f, actx.zero, actx.zero) == 3
        merged = make_merged_cover(f, p, (p + 2, 3, e3, e4), rho)
        out.append(AdditiveFamily(p=p, e3=e3, e4=e4, a=a, rho=rho, c=c, merged=merged))
    if not out:
        raise NoValidRoot(
            f"both roots of the quadratic are degenerate for p = {p}, e3 = {e3}: {skipped}"
        )
    out.sort(key=lambda fam: (fam.a.min_degree(), fam.a.sort_key()))
    return out


def hp_transfer(p: int, merged_count: int) -> int:
    """Merged-type counts transfer unchanged to the split 4-point type."""
    return int(merged_count)
