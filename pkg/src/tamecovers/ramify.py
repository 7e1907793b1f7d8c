"""Ramification analysis of rational self-maps of the projective line.

``analyze_cover`` locates the critical points of a separable map, computes
ramification indices, branch points and fibers, and derives the
ramification type and its Riemann-Hurwitz genus.  Completeness is tracked
honestly: the located critical points are complete exactly when their
multiplicities in the derivative numerator W sum to deg W, since W splits
over the algebraic closure.  Callers that construct covers with known
ramification points pass them as ``candidates``; the same bookkeeping then
certifies the type without any root search.

Fibers over a branch point may fail to split within the extension-degree
bound; such fibers are flagged partial instead of raising, because the
ramification type itself only needs the critical points.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import (
    ConstantMap,
    DegenerateTriple,
    ExtensionTooSmall,
    Inseparable,
    InvalidType,
    MappingMismatch,
)
from .field import ExtField, FieldElem, PrimeField
from .poly import (
    INF,
    Poly,
    ProjPoint,
    RatFunc,
    evaluate,
    lift_ratfunc,
    linear_multiplicity,
    map_degree,
    mobius,
    mobius_inverse,
    mobius_to_std,
    ord_at,
    rational_roots,
    roots,
    roots_in_ctx,
    synthetic_div,
)


@dataclass(frozen=True)
class RamType:
    """Degree plus one partition of it per branch point, in branch order."""

    d: int
    classes: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        for part in self.classes:
            if sum(part) != self.d:
                raise InvalidType(f"partition {part} does not sum to {self.d}")
            if any(e < 1 for e in part):
                raise InvalidType(f"partition {part} has parts < 1")
            if list(part) != sorted(part, reverse=True):
                raise InvalidType(f"partition {part} is not weakly decreasing")

    @property
    def single_cycle(self) -> tuple[int, ...] | None:
        """The (e_1, ..., e_r) when every partition has one part > 1."""
        es = []
        for part in self.classes:
            big = [e for e in part if e > 1]
            if len(big) != 1:
                return None
            es.append(big[0])
        return tuple(es)

    def __repr__(self):
        names = ",".join("[" + ",".join(map(str, c)) + "]" for c in self.classes)
        return f"({self.d}; {names})"


def genus_from_type(t: RamType) -> int:
    """Genus of the source curve from the Riemann-Hurwitz count."""
    total_e = sum(sum(part) for part in t.classes)
    total_n = sum(len(part) for part in t.classes)
    twice = total_e - total_n + 2 - 2 * t.d
    if twice % 2 != 0 or twice < 0:
        raise InvalidType(f"type {t} has no nonnegative integer genus")
    return twice // 2


def single_cycle_type(d: int, es) -> RamType:
    """RamType with one e_i-cycle per branch point, padded with 1's."""
    classes = []
    for e in es:
        if not 1 <= e <= d:
            raise InvalidType(f"cycle length {e} invalid for degree {d}")
        classes.append(tuple([e] + [1] * (d - e)))
    return RamType(d, tuple(classes))


@dataclass(frozen=True)
class Fiber:
    over: ProjPoint
    points: tuple[tuple[ProjPoint, int, int], ...]  # (point, index, field degree)
    complete: bool


@dataclass(frozen=True)
class CoverAnalysis:
    map: RatFunc
    degree: int
    tame: bool
    complete: bool  # all critical points located
    ram_points: tuple[tuple[ProjPoint, int], ...]
    branch_points: tuple[ProjPoint, ...]
    fibers: tuple[Fiber, ...]
    ram_type: RamType | None

    def index_at(self, pt) -> int:
        pt = ProjPoint.of(pt)
        for q, e in self.ram_points:
            if q == pt:
                return e
        return 1

    def partition_over(self, b) -> tuple[int, ...] | None:
        b = ProjPoint.of(b)
        if self.ram_type is None:
            return None
        for bp, part in zip(self.branch_points, self.ram_type.classes):
            if bp == b:
                return part
        return None


@dataclass(frozen=True)
class NormalizedCover:
    """A cover carrying the convention 0,1,infinity -> 0,1,infinity."""

    cover: RatFunc
    ram_type: RamType | None = None


def _pt_sort_key(pt: ProjPoint):
    if pt.is_infinite:
        return (1, 0, ())
    ctx = pt.value.ctx
    n = ctx.n if isinstance(ctx, ExtField) else 1
    key = pt.value.sort_key()
    if not isinstance(key, tuple):
        key = (key,)
    return (0, n, key)


def _poly_root_points(P: Poly, max_ext_degree: int) -> tuple[list, bool]:
    """Locate roots of P with multiplicities; returns (list, complete).

    Entries are (elem, multiplicity, field degree).  Over Q only rational
    roots are reachable; over an extension field only the coefficient field
    is searched; over a prime field the canonical tower is walked.
    """
    ctx = P.ctx
    if P.degree <= 0:
        return [], True
    if ctx.characteristic == 0:
        rts, scan_ok = rational_roots(P)
        found = [(r, m, 1) for r, m in rts]
        total = sum(m for _, m, _ in found)
        return found, scan_ok and total == P.degree
    if isinstance(ctx, PrimeField):
        found = roots(P, max_ext_degree)
    else:
        found = [(r, m, r.min_degree()) for r, m in roots_in_ctx(P)]
    total = sum(m for _, m, _ in found)
    return found, total == P.degree


def analyze_cover(
    f: RatFunc,
    max_ext_degree: int = 6,
    candidates=(),
    with_fibers: bool = True,
    require_complete: bool = False,
) -> CoverAnalysis:
    """Full ramification analysis of a nonconstant separable map.

    With ``require_complete`` the analysis raises ExtensionTooSmall instead
    of returning a partial result when some critical point lies outside the
    searched extensions.
    """
    ctx = f.ctx
    d = map_degree(f)  # raises ConstantMap on constants
    W = f.num.derivative() * f.den - f.num * f.den.derivative()
    if W.is_zero:
        raise Inseparable("derivative data vanishes identically")

    located: list[tuple[FieldElem, int]] = []
    residual = W
    seen = set()
    for cand in candidates:
        cand = ProjPoint.of(cand)
        if cand.is_infinite or cand in seen:
            continue
        seen.add(cand)
        x = ctx.elem(cand.value)
        m = 0
        while not residual.is_zero:
            q, rem = synthetic_div(residual, x)
            if not rem.is_zero:
                break
            residual = q
            m += 1
        if m:
            located.append((x, m))

    complete = residual.degree <= 0
    if not complete:
        # discovered roots may live in tower fields, so account for the
        # remaining critical mass by multiplicities instead of deflating
        extra, _ = _poly_root_points(residual, max_ext_degree)
        located.extend((r, m) for r, m, _k in extra)
        complete = sum(m for _r, m, _k in extra) == residual.degree
    if require_complete and not complete:
        raise ExtensionTooSmall(
            f"critical points of mass {residual.degree} not found within "
            f"extension degree {max_ext_degree}"
        )

    ram_points: list[tuple[ProjPoint, int]] = []
    for x, _m in located:
        pt = ProjPoint(x)
        fl = f if x.ctx is ctx else lift_ratfunc(f, x.ctx)
        e = ord_at(fl, pt, evaluate(fl, pt))
        ram_points.append((pt, e))
    e_inf = ord_at(f, INF, evaluate(f, INF))
    if e_inf >= 2:
        ram_points.append((INF, e_inf))
    ram_points.sort(key=lambda pe: _pt_sort_key(pe[0]))

    branch_points = sorted(
        {_BranchKey(evaluate(_lift_for(f, pt), pt)) for pt, _e in ram_points},
        key=lambda bk: _pt_sort_key(bk.pt),
    )
    branch_points = tuple(bk.pt for bk in branch_points)

    p = ctx.characteristic
    tame = p == 0 or all(e % p != 0 for _pt, e in ram_points)

    fibers = []
    if with_fibers:
        for b in branch_points:
            fibers.append(_fiber(f, b, d, max_ext_degree))
    ram_type = None
    if complete:
        classes = []
        for b in branch_points:
            idx = [
                e
                for pt, e in ram_points
                if evaluate(_lift_for(f, pt), pt) == _match_in(b, pt)
            ]
            pad = d - sum(idx)
            assert pad >= 0, "ramification indices exceed the degree"
            classes.append(tuple(sorted(idx, reverse=True) + [1] * pad))
        ram_type = RamType(d, tuple(classes))

    return CoverAnalysis(
        map=f,
        degree=d,
        tame=tame,
        complete=complete,
        ram_points=tuple(ram_points),
        branch_points=branch_points,
        fibers=tuple(fibers),
        ram_type=ram_type,
    )


class _BranchKey:
    """Dedup wrapper so branch points from several fields can share a set."""

    __slots__ = ("pt",)

    def __init__(self, pt: ProjPoint):
        self.pt = pt

    def __eq__(self, other):
        return self.pt == other.pt

    def __hash__(self):
        if self.pt.is_infinite:
            return hash(None)
        return hash(self.pt.value)


def _lift_for(f: RatFunc, pt: ProjPoint) -> RatFunc:
    if pt.is_infinite or pt.value.ctx is f.ctx:
        return f
    return lift_ratfunc(f, pt.value.ctx)


def _match_in(b: ProjPoint, pt: ProjPoint) -> ProjPoint:
    """The branch point b viewed in the field where pt's image lives."""
    if b.is_infinite or pt.is_infinite:
        return b
    if b.value.ctx is pt.value.ctx:
        return b
    try:
        return ProjPoint(b.value.lift_to(pt.value.ctx))
    except Exception:
        return b


def _fiber(f: RatFunc, b: ProjPoint, d: int, max_ext_degree: int) -> Fiber:
    ctx = f.ctx
    if not b.is_infinite and b.value.ctx is not ctx:
        f = lift_ratfunc(f, b.value.ctx)
        ctx = b.value.ctx
    if b.is_infinite:
        P = f.den
    else:
        P = f.num - Poly.constant(b.value) * f.den
    points = []
    if P.degree > 0:
        found, _ = _poly_root_points(P, max_ext_degree)
        for r, m, k in found:
            points.append((ProjPoint(r), m, k))
    if evaluate(f, INF) == b:
        points.append((INF, ord_at(f, INF, b), 1))
    points.sort(key=lambda t: _pt_sort_key(t[0]))
    total = sum(m for _pt, m, _k in points)
    assert total <= d
    return Fiber(over=b, points=tuple(points), complete=total == d)


def normalize_cover(f: RatFunc, source_triple, target_triple) -> NormalizedCover:
    """Apply the unique Moebius pair putting the chosen ramification points
    at 0, 1, infinity over 0, 1, infinity."""
    ctx = f.ctx
    src = tuple(ProjPoint.of(p) for p in source_triple)
    tgt = tuple(ProjPoint.of(p) for p in target_triple)
    for triple in (src, tgt):
        if triple[0] == triple[1] or triple[0] == triple[2] or triple[1] == triple[2]:
            raise DegenerateTriple(f"triple {triple} has a repeated point")
    for s, t in zip(src, tgt):
        if evaluate(f, s) != t:
            raise MappingMismatch(f"f({s}) = {evaluate(f, s)} but {t} was claimed")
    pre = mobius_inverse(mobius_to_std(*src, ctx))
    post = mobius_to_std(*tgt, ctx)
    g = mobius(f, pre=pre, post=post)
    zero, one = ProjPoint(ctx.zero), ProjPoint(ctx.one)
    assert evaluate(g, zero) == zero
    assert evaluate(g, one) == one
    assert evaluate(g, INF) == INF
    return NormalizedCover(cover=g)
