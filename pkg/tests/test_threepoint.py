import itertools

import pytest

from tamecovers.errors import InvalidType, NoSuchCover
from tamecovers.field import make_field
from tamecovers.poly import INF, Poly, ProjPoint, RatFunc, evaluate, mobius
from tamecovers.ramify import analyze_cover, genus_from_type, single_cycle_type
from tamecovers.threepoint import ThreePointSpec, kernel_basis, solve_three_point

QQ = make_field(0)
F5 = make_field(5)
F7 = make_field(7)


def P(ctx, *ints):
    return Poly.from_ints(ctx, list(ints))


def test_three_point_spec_validation():
    assert ThreePointSpec(3, 2, 2).d == 3
    with pytest.raises(InvalidType):
        ThreePointSpec(2, 2, 4)  # even sum
    with pytest.raises(InvalidType):
        ThreePointSpec(1, 2, 2)
    with pytest.raises(InvalidType):
        ThreePointSpec(2, 2, 7)  # e3 > d


def test_known_cover_322():
    nc = solve_three_point(QQ, ThreePointSpec(3, 2, 2))
    assert nc.cover == RatFunc.make(P(QQ, 0, 0, 0, 1), P(QQ, -2, 3))


def test_known_cover_223():
    nc = solve_three_point(QQ, ThreePointSpec(2, 2, 3))
    f = nc.cover
    assert f == RatFunc.from_poly(P(QQ, 0, 0, 3, -2))
    # 1 - f factors with the double point at 1
    assert RatFunc.from_poly(P(QQ, 1)) - f == RatFunc.from_poly(
        P(QQ, -1, 1) ** 2 * P(QQ, 1, 2)
    )


def test_no_cover_when_degree_reaches_p():
    with pytest.raises(NoSuchCover):
        solve_three_point(make_field(3), ThreePointSpec(2, 2, 3))


def test_solution_reduces_mod_p():
    def reduce_mod(rf, Fp):
        def red(c):
            fr = c.raw
            return Fp.from_int(fr.numerator) / Fp.from_int(fr.denominator)

        return RatFunc.make(rf.num.map_coeffs(red, Fp), rf.den.map_coeffs(red, Fp))

    for spec in [ThreePointSpec(3, 2, 2), ThreePointSpec(2, 2, 3), ThreePointSpec(4, 3, 2)]:
        over_q = solve_three_point(QQ, spec).cover
        over_p = solve_three_point(F7, spec).cover
        assert reduce_mod(over_q, F7) == over_p


def test_uniqueness_and_exact_type_small_sweep():
    for d in range(2, 9):
        for es in itertools.product(range(2, d + 1), repeat=3):
            if sum(es) != 2 * d + 1:
                continue
            nc = solve_three_point(QQ, ThreePointSpec(*es))
            assert nc.ram_type == single_cycle_type(d, es)
            a = analyze_cover(nc.cover)
            assert a.complete and a.ram_type == nc.ram_type
            assert genus_from_type(a.ram_type) == 0


def test_solve_succeeds_at_degree_thirty():
    for es in [(20, 21, 20), (30, 29, 2), (11, 21, 29)]:
        nc = solve_three_point(QQ, ThreePointSpec(*es))
        assert nc.ram_type == single_cycle_type(30, es)


def test_perturbed_solution_fails_the_side_conditions():
    # the solved map is rigid: nudging one numerator coefficient breaks the
    # prescribed index at 0 or at infinity
    nc = solve_three_point(QQ, ThreePointSpec(3, 2, 2))
    for idx in (0, 1):
        coeffs = list(nc.cover.num.coeffs)
        coeffs[idx] = coeffs[idx] + QQ.one
        bad = RatFunc.make(Poly.from_elems(QQ, coeffs), nc.cover.den)
        a = analyze_cover(bad)
        assert not (
            a.complete
            and a.ram_type == nc.ram_type
            and a.index_at(QQ.zero) == 3
            and a.index_at(INF) == 2
        )


def test_symmetry_swapping_e1_e2():
    # swapping the first two indices conjugates by y -> 1 - y on both sides
    f = solve_three_point(QQ, ThreePointSpec(2, 3, 2)).cover
    g = solve_three_point(QQ, ThreePointSpec(3, 2, 2)).cover
    swap = (QQ.from_int(-1), QQ.one, QQ.zero, QQ.one)
    assert mobius(g, pre=swap, post=swap) == f


def test_normalization_holds():
    nc = solve_three_point(F5, ThreePointSpec(3, 2, 2))
    f = nc.cover
    assert evaluate(f, F5.zero) == ProjPoint(F5.zero)
    assert evaluate(f, F5.one) == ProjPoint(F5.one)
    assert evaluate(f, INF) == INF


def test_kernel_basis_small_system():
    # x + y = 0, y + z = 0 over F_5 has the line (1, -1, 1)
    rows = [
        [F5.one, F5.one, F5.zero],
        [F5.zero, F5.one, F5.one],
    ]
    basis = kernel_basis(rows, F5)
    assert len(basis) == 1
    v = basis[0]
    assert v[0] + v[1] == F5.zero and v[1] + v[2] == F5.zero
