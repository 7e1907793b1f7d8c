import pytest

from tamecovers.addconst import (
    additive_twist,
    construct_family,
    find_merging_c,
    hp_transfer,
    lambda_of_c,
)
from tamecovers.errors import ExcludedC, FrobeniusCollision, InvalidType
from tamecovers.field import make_field
from tamecovers.poly import Poly, ProjPoint, RatFunc, evaluate, ord_at, roots

F5 = make_field(5)


def P(ctx, *ints):
    return Poly.from_ints(ctx, list(ints))


def test_family_p5_is_unique_with_known_data():
    fams = construct_family(5, 2, 4)
    assert len(fams) == 1
    fam = fams[0]
    assert (fam.a.raw, fam.rho.raw, fam.c.raw) == (3, 4, 2)
    want = Poly.one(F5) + P(F5, -1, 1) ** 2 * P(F5, -4, 1) ** 4 * P(F5, -3, 1) * 2
    assert fam.merged.f == RatFunc.from_poly(want)
    assert fam.merged.ram_type.d == 7


def test_family_quadratic_and_order_three_conditions():
    fam = construct_family(5, 2, 4)[0]
    a, rho, e3 = fam.a, fam.rho, F5.from_int(2)
    assert (e3 * a * a + 2 * e3 * a + 2 - e3).is_zero
    # both linear conditions at 0 give the same rho
    assert rho * (e3 * a + 1) == (e3 - 1) * a
    assert rho * (e3 + 1) == e3 - 2 - a
    # the factorization shape and the order-3 point at 0
    f = fam.merged.f
    assert ord_at(f, F5.zero, F5.zero) == 3
    shape = P(F5, -1, 1) ** 2 * P(F5, -4, 1) ** 4 * P(F5, -3, 1)
    assert f - 1 == RatFunc.from_poly(shape * fam.c)


def test_family_p7_two_conjugate_members():
    fams = construct_family(7, 3, 5)
    assert len(fams) == 2
    assert all(f.a.min_degree() == 2 for f in fams)
    # conjugate roots: Frobenius swaps them
    assert fams[0].a.frobenius() == fams[1].a


def test_family_rejects_bad_parameters():
    with pytest.raises(InvalidType):
        construct_family(5, 3, 3)  # e3 = e4
    with pytest.raises(InvalidType):
        construct_family(5, 4, 2)  # e3 > e4
    with pytest.raises(InvalidType):
        construct_family(4, 2, 3)  # p not prime
    with pytest.raises(InvalidType):
        construct_family(5, 2, 3)  # e3 + e4 != p + 1


def test_roots_are_dropped_exactly_when_points_collide():
    # the operative criterion: 0, 1, rho, a pairwise distinct for the rho
    # derived from the two order-3 conditions
    for p in (5, 7, 11, 13):
        ctx = make_field(p)
        for e3 in range(2, (p - 1) // 2 + 1):
            e4 = p + 1 - e3
            if not e3 < e4 < p:
                continue
            quad = Poly.from_ints(ctx, [2 - e3, 2 * e3, e3])
            kept = {repr(f.a) for f in construct_family(p, e3, e4)}
            for a, _m, _k in roots(quad, 2):
                actx = a.ctx
                den1 = actx.from_int(e3) * a + 1
                if den1.is_zero:
                    assert repr(a) not in kept
                    continue
                rho = (actx.from_int(e3) - 1) * a / den1
                distinct = len({repr(x) for x in (actx.zero, actx.one, rho, a)}) == 4
                assert (repr(a) in kept) == distinct


def test_known_counts_against_simple_exceptional_shortcut():
    # the shortcut set {(e3-2)/2, (2e3-1)/3, -1} predicts the dropped roots
    # at small p but disagrees with the verified covers at p = 11 and 13:
    # there a = (e3-2)/2 still gives four distinct points and a cover that
    # passes full ramification analysis
    assert len(construct_family(5, 2, 4)) == 1
    assert len(construct_family(7, 2, 6)) == 1
    assert len(construct_family(7, 3, 5)) == 2
    for p, e3 in [(11, 3), (13, 3)]:
        ctx = make_field(p)
        fams = construct_family(p, e3, p + 1 - e3)
        assert len(fams) == 2
        shortcut = {
            ctx.from_int(e3 - 2) / ctx.from_int(2),
            ctx.from_int(2 * e3 - 1) / ctx.from_int(3),
            ctx.from_int(-1),
        }
        assert any(f.a in shortcut for f in fams)


def test_twist_splits_branch_point():
    fam = construct_family(5, 2, 4)[0]
    tw = additive_twist(fam.merged, F5.from_int(2))
    assert tw.lam == F5.from_int(3)
    assert sorted(tw.cover.ram_type.single_cycle) == [2, 3, 4, 7]
    g = tw.cover.cover
    assert evaluate(g, F5.zero) == ProjPoint(F5.zero)
    assert evaluate(g, F5.one) == ProjPoint(F5.one)
    assert evaluate(g, fam.rho) == ProjPoint(tw.lam)


def test_twist_preserves_ramification_points_and_indices():
    fam = construct_family(5, 2, 4)[0]
    for c in (2, 3):
        tw = additive_twist(fam.merged, F5.from_int(c))
        g = tw.cover.cover
        for pt, e in [(F5.zero, 3), (F5.one, 2), (fam.rho, 4)]:
            assert ord_at(g, pt, evaluate(g, pt).value) == e


def test_twist_exclusions():
    fam = construct_family(5, 2, 4)[0]
    with pytest.raises(ExcludedC):
        additive_twist(fam.merged, F5.zero)
    with pytest.raises(ExcludedC):
        additive_twist(fam.merged, F5.from_int(-1))
    rho_p = fam.rho ** 5
    with pytest.raises(ExcludedC):
        additive_twist(fam.merged, -(rho_p.inverse()))


def test_lambda_of_c_is_a_degree_one_map():
    fam = construct_family(5, 2, 4)[0]
    loc = lambda_of_c(fam.merged)
    assert loc == RatFunc.make(P(F5, 1, 4), P(F5, 1, 1))
    assert evaluate(loc, F5.from_int(2)) == ProjPoint(F5.from_int(3))
    assert evaluate(loc, F5.zero) == ProjPoint(F5.one)
    # injective on the allowed c-set: degree 1 never repeats values
    seen = {}
    for c in F5.elements():
        v = repr(evaluate(loc, c))
        assert v not in seen
        seen[v] = c


def test_merge_split_round_trip_exact():
    for p in (5, 7, 11):
        for e3 in range(2, (p - 1) // 2 + 1):
            e4 = p + 1 - e3
            if not e3 < e4 < p:
                continue
            for fam in construct_family(p, e3, e4):
                ctx = fam.merged.f.ctx
                rho_excl = -((fam.rho ** p).inverse())
                c = next(
                    ctx.from_int(k) for k in range(2, p)
                    if ctx.from_int(k) != rho_excl
                )
                tw = additive_twist(fam.merged, c)
                merged_back, c_back = find_merging_c(tw.cover.cover, ctx.one, fam.rho)
                assert merged_back == fam.merged.f
                assert c_back == -c / (ctx.one + c)


def test_find_merging_c_rejects_collapsed_points():
    fam = construct_family(5, 2, 4)[0]
    tw = additive_twist(fam.merged, F5.from_int(2))
    with pytest.raises(FrobeniusCollision):
        find_merging_c(tw.cover.cover, F5.one, F5.one)


def test_hp_transfer_and_lower_bound():
    for p in (5, 7, 11):
        for e3 in range(2, (p - 1) // 2 + 1):
            e4 = p + 1 - e3
            if not e3 < e4 < p:
                continue
            fams = construct_family(p, e3, e4)
            assert hp_transfer(p, len(fams)) >= 1
    assert hp_transfer(5, 0) == 0
