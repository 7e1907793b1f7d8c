"""JSON forms of elements, polynomials, covers and analyses.

Every element is serialized through its exact text form, which is
self-describing: a bare integer string for prime fields, "num/den" over
the rationals, and the dense descending extension form whose term count
equals the extension degree.  Coefficient lists are ascending.  Covers over
Q are emitted with cleared integer coefficients (the internal form keeps a
monic denominator); both scalings reduce to the same rational function on
input.
"""

from __future__ import annotations

from .errors import UsageError
from .field import ExtField, FieldCtx, FieldElem, make_field
from .poly import Poly, ProjPoint, RatFunc
from .ramify import CoverAnalysis


def elem_str(e: FieldElem) -> str:
    return e.ctx.format(e.raw)


def parse_elem(ctx: FieldCtx, s: str) -> FieldElem:
    return ctx.parse(s)


def proj_str(pt: ProjPoint) -> str:
    return "inf" if pt.is_infinite else elem_str(pt.value)


def poly_strs(f: Poly) -> list[str]:
    return [elem_str(c) for c in f.coeffs]


def poly_from_strs(ctx: FieldCtx, strs) -> Poly:
    return Poly.from_elems(ctx, [ctx.parse(s) for s in strs])


def _cleared_int_strs(rf: RatFunc) -> tuple[list[str], list[str]]:
    """Integer-coefficient scaling of a rational function over Q."""
    fracs = [c.raw for c in rf.num.coeffs] + [c.raw for c in rf.den.coeffs]
    lcm = 1
    for fr in fracs:
        d = fr.denominator
        g = _gcd(lcm, d)
        lcm = lcm // g * d
    ints = [int(fr * lcm) for fr in fracs]
    g = 0
    for v in ints:
        g = _gcd(g, abs(v))
    g = g or 1
    ints = [v // g for v in ints]
    nn = len(rf.num.coeffs)
    num, den = ints[:nn], ints[nn:]
    if den and den[-1] < 0:
        num = [-v for v in num]
        den = [-v for v in den]
    return [str(v) for v in num], [str(v) for v in den]


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def ratfunc_strs(rf: RatFunc) -> tuple[list[str], list[str]]:
    if rf.ctx.characteristic == 0:
        return _cleared_int_strs(rf)
    return poly_strs(rf.num), poly_strs(rf.den)


def cover_json(rf: RatFunc, type_seq) -> dict:
    ctx = rf.ctx
    num, den = ratfunc_strs(rf)
    doc = {"char": ctx.characteristic}
    if isinstance(ctx, ExtField):
        doc["ext_modulus"] = list(ctx.modulus)
    doc["num"] = num
    doc["den"] = den
    doc["type"] = [int(v) for v in type_seq]
    return doc


def ctx_from_json(doc: dict) -> FieldCtx:
    char = int(doc.get("char", 0))
    if char == 0:
        return make_field(0)
    modulus = doc.get("ext_modulus")
    if modulus is None:
        return make_field(char)
    ctx = make_field(char, len(modulus) - 1)
    if tuple(modulus) != ctx.modulus:
        raise UsageError(
            f"cover file modulus {modulus} is not the canonical modulus {list(ctx.modulus)}"
        )
    return ctx


def cover_from_json(doc: dict) -> tuple[RatFunc, list[int]]:
    ctx = ctx_from_json(doc)
    num = poly_from_strs(ctx, doc["num"])
    den = poly_from_strs(ctx, doc["den"])
    return RatFunc.make(num, den), [int(v) for v in doc.get("type", [])]


def analysis_json(a: CoverAnalysis) -> dict:
    return {
        "degree": a.degree,
        "tame": a.tame,
        "complete": a.complete,
        "branch": [proj_str(b) for b in a.branch_points],
        "ram_points": [[proj_str(pt), e] for pt, e in a.ram_points],
        "type": [list(part) for part in a.ram_type.classes] if a.ram_type else None,
        "fibers": [
            {
                "over": proj_str(f.over),
                "points": [[proj_str(pt), e, k] for pt, e, k in f.points],
                "complete": f.complete,
            }
            for f in a.fibers
        ],
    }


def parse_cli_elem(p: int, s: str) -> FieldElem:
    """Parse an element literal, inferring its field from the text form.

    Over p = 0 the literal is rational; otherwise a bare integer is a
    prime-field element and a dense "...*t..." literal lives in the
    extension whose degree is its term count.
    """
    if p == 0:
        return make_field(0).parse(s)
    if "t" in s:
        n = s.count("+") + 1
        return make_field(p, n).parse(s)
    return make_field(p).parse(s)
