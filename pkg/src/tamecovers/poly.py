"""Univariate polynomials and reduced rational functions over an exact field.

A Poly stores an ascending tuple of FieldElem coefficients whose last entry
is nonzero; the empty tuple is the zero polynomial.  A RatFunc is always
reduced (coprime numerator/denominator) with monic denominator, so equality
of values is equality of representations.  Points of the projective line
are a ProjPoint: a field element or the point at infinity.

Root finding in characteristic p works in two regimes:

* ``roots`` on a prime-field polynomial walks the canonical extension
  tower F_p, F_{p^2}, ... up to a degree bound, peeling off the factors of
  each degree with gcd(y^(p^k) - y, .) and extracting their roots inside
  the canonical field of that degree.
* ``roots`` on an extension-field polynomial stays inside the coefficient
  field (its subfields included); counting roots across incompatible
  extensions is handled separately by ``count_roots_by_degree``, which
  never has to name the roots.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import (
    CharZero,
    ConstantMap,
    DegenerateTriple,
    DivisionByZero,
    MixedContexts,
    SingularMobius,
    ValueMismatch,
    ZeroDenominator,
)
from .field import ExtField, FieldCtx, FieldElem, make_field

# fields at most this large are searched for roots by direct scan;
# bigger ones use deterministic equal-degree splitting
_SCAN_LIMIT = 4096

# caps for the rational-root divisor scan over Q
_FACTOR_TRIAL_LIMIT = 2_000_000


class Poly:
    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx: FieldCtx, coeffs: tuple[FieldElem, ...]):
        # trusted constructor; use from_elems/from_ints to normalize
        self.ctx = ctx
        self.coeffs = coeffs

    @classmethod
    def from_elems(cls, ctx: FieldCtx, seq) -> "Poly":
        coeffs = [ctx.elem(c) for c in seq]
        while coeffs and coeffs[-1].is_zero:
            coeffs.pop()
        return cls(ctx, tuple(coeffs))

    @classmethod
    def from_ints(cls, ctx: FieldCtx, ints) -> "Poly":
        return cls.from_elems(ctx, [ctx.from_int(k) for k in ints])

    @classmethod
    def zero(cls, ctx) -> "Poly":
        return cls(ctx, ())

    @classmethod
    def one(cls, ctx) -> "Poly":
        return cls(ctx, (ctx.one,))

    @classmethod
    def constant(cls, c: FieldElem) -> "Poly":
        return cls.from_elems(c.ctx, [c])

    @classmethod
    def x(cls, ctx) -> "Poly":
        return cls(ctx, (ctx.zero, ctx.one))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self) -> FieldElem:
        if self.is_zero:
            raise DivisionByZero("leading coefficient of zero polynomial")
        return self.coeffs[-1]

    def _coerce(self, other):
        if isinstance(other, Poly):
            if other.ctx is not self.ctx:
                raise MixedContexts(f"mixing polynomials over {self.ctx} and {other.ctx}")
            return other
        if isinstance(other, (FieldElem, int)):
            return Poly.from_elems(self.ctx, [self.ctx.elem(other)])
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        while out and out[-1].is_zero:
            out.pop()
        return Poly(self.ctx, tuple(out))

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.ctx, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, (FieldElem, int)):
            c = self.ctx.elem(other)
            if c.is_zero:
                return Poly.zero(self.ctx)
            return Poly(self.ctx, tuple(a * c for a in self.coeffs))
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.is_zero or o.is_zero:
            return Poly.zero(self.ctx)
        zero = self.ctx.zero
        out = [zero] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero:
                continue
            for j, b in enumerate(o.coeffs):
                out[i + j] = out[i + j] + a * b
        while out and out[-1].is_zero:
            out.pop()
        return Poly(self.ctx, tuple(out))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative polynomial power")
        result = Poly.one(self.ctx)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __divmod__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.is_zero:
            raise DivisionByZero("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(o.coeffs)
        if dq < 0:
            return Poly.zero(self.ctx), self
        inv_lead = o.lc.inverse()
        quot = [self.ctx.zero] * (dq + 1)
        ocs = o.coeffs
        while len(rem) >= len(ocs):
            k = len(rem) - len(ocs)
            c = rem[-1] * inv_lead
            quot[k] = c
            for i, b in enumerate(ocs):
                rem[i + k] = rem[i + k] - c * b
            while rem and rem[-1].is_zero:
                rem.pop()
            if not rem:
                break
        while quot and quot[-1].is_zero:
            quot.pop()
        return Poly(self.ctx, tuple(quot)), Poly(self.ctx, tuple(rem))

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __call__(self, x) -> FieldElem:
        x = self.ctx.elem(x)
        acc = self.ctx.zero
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "Poly":
        """Formal derivative; in characteristic p the y^p terms vanish."""
        out = []
        for i, c in enumerate(self.coeffs[1:], start=1):
            out.append(c * i)
        while out and out[-1].is_zero:
            out.pop()
        return Poly(self.ctx, tuple(out))

    def monic(self) -> "Poly":
        if self.is_zero:
            return self
        if self.lc == self.ctx.one:
            return self
        inv = self.lc.inverse()
        return Poly(self.ctx, tuple(c * inv for c in self.coeffs))

    def map_coeffs(self, fn, ctx=None) -> "Poly":
        return Poly.from_elems(ctx or self.ctx, [fn(c) for c in self.coeffs])

    def __eq__(self, other):
        return (
            isinstance(other, Poly)
            and self.ctx is other.ctx
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((id(self.ctx), self.coeffs))

    def __repr__(self):
        return poly_str(self)


def poly_str(f: Poly, var: str = "y") -> str:
    """Sparse descending text form, e.g. "3*y^3 - 2*y^2 + 1"."""
    if f.is_zero:
        return "0"
    parts = []
    for k in range(f.degree, -1, -1):
        c = f.coeffs[k]
        if c.is_zero:
            continue
        cs = repr(c)
        neg = cs.startswith("-")
        mag = cs[1:] if neg else cs
        if k == 0:
            term = mag
        else:
            yk = var if k == 1 else f"{var}^{k}"
            term = yk if mag == "1" else f"{mag}*{yk}"
        if not parts:
            parts.append(("-" if neg else "") + term)
        else:
            parts.append(("- " if neg else "+ ") + term)
    return " ".join(parts)


def synthetic_div(f: Poly, r: FieldElem) -> tuple[Poly, FieldElem]:
    """Divide f by (y - r): returns (quotient, remainder value)."""
    acc = f.ctx.zero
    out = []
    for c in reversed(f.coeffs):
        acc = acc * r + c
        out.append(acc)
    rem = out.pop() if out else acc
    out.reverse()
    while out and out[-1].is_zero:
        out.pop()
    return Poly(f.ctx, tuple(out)), rem


def linear_multiplicity(f: Poly, r: FieldElem) -> int:
    """Multiplicity of r as a root of f (0 if not a root)."""
    m = 0
    while not f.is_zero:
        q, rem = synthetic_div(f, r)
        if not rem.is_zero:
            break
        m += 1
        f = q
    return m


def poly_gcd(a: Poly, b: Poly) -> Poly:
    while not b.is_zero:
        a, b = b, a % b
    return a.monic()


def pow_mod(base: Poly, e: int, mod: Poly) -> Poly:
    result = Poly.one(base.ctx)
    base = base % mod
    while e:
        if e & 1:
            result = (result * base) % mod
        base = (base * base) % mod
        e >>= 1
    return result


def pth_root(f: Poly) -> Poly:
    """Inverse of y -> y^p on polynomials whose derivative vanishes."""
    p = f.ctx.characteristic
    if p == 0:
        raise CharZero("p-th root needs positive characteristic")
    out = []
    for i, c in enumerate(f.coeffs):
        if i % p == 0:
            out.append(c.pth_root())
        elif not c.is_zero:
            raise ValueError("polynomial is not a p-th power")
    return Poly.from_elems(f.ctx, out)


def radical(f: Poly) -> Poly:
    """Monic product of the distinct irreducible factors of f."""
    if f.is_zero:
        raise DivisionByZero("radical of the zero polynomial")
    if f.degree == 0:
        return Poly.one(f.ctx)
    d = f.derivative()
    if f.ctx.characteristic == 0:
        return (f // poly_gcd(f, d)).monic()
    if d.is_zero:
        return radical(pth_root(f))
    g = poly_gcd(f, d)
    v = (f // g).monic()  # factors whose exponent is prime to p
    r = g
    while True:
        t = poly_gcd(r, v)
        if t.degree == 0:
            break
        r = r // t
    if r.degree == 0:
        return v
    # what is left of g is a p-th power holding the p | exponent factors
    return (v * radical(pth_root(r))).monic()


def lift_poly(f: Poly, ext: FieldCtx) -> Poly:
    if f.ctx is ext:
        return f
    return Poly(ext, tuple(c.lift_to(ext) for c in f.coeffs))


# ---------------------------------------------------------------------------
# Projective line

class ProjPoint:
    """A point of P^1: a field element or infinity."""

    __slots__ = ("value",)

    def __init__(self, value: FieldElem | None):
        self.value = value

    @classmethod
    def of(cls, x) -> "ProjPoint":
        if isinstance(x, ProjPoint):
            return x
        if isinstance(x, FieldElem):
            return cls(x)
        raise TypeError(f"cannot interpret {x!r} as a point of P^1")

    @property
    def is_infinite(self) -> bool:
        return self.value is None

    def __eq__(self, other):
        if not isinstance(other, ProjPoint):
            if isinstance(other, FieldElem):
                other = ProjPoint(other)
            else:
                return NotImplemented
        if self.is_infinite or other.is_infinite:
            return self.is_infinite and other.is_infinite
        return self.value == other.value

    def __hash__(self):
        return hash(None) if self.is_infinite else hash(self.value)

    def __repr__(self):
        return "inf" if self.is_infinite else repr(self.value)

    def sort_key(self):
        if self.is_infinite:
            return (1, ())
        return (0, self.value.sort_key())


INF = ProjPoint(None)


# ---------------------------------------------------------------------------
# Rational functions

class RatFunc:
    """Reduced rational function with monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly):
        # trusted constructor: inputs already reduced with monic den
        self.num = num
        self.den = den

    @classmethod
    def make(cls, num: Poly, den: Poly) -> "RatFunc":
        if num.ctx is not den.ctx:
            raise MixedContexts("numerator and denominator over different fields")
        if den.is_zero:
            raise ZeroDenominator("rational function with zero denominator")
        if num.is_zero:
            return cls(num, Poly.one(den.ctx))
        g = poly_gcd(num, den)
        if g.degree > 0:
            num, den = num // g, den // g
        inv = den.lc.inverse()
        if inv != den.ctx.one:
            num, den = num * inv, den * inv
        return cls(num, den)

    @classmethod
    def from_poly(cls, f: Poly) -> "RatFunc":
        return cls(f, Poly.one(f.ctx))

    @property
    def ctx(self) -> FieldCtx:
        return self.num.ctx if not self.num.is_zero else self.den.ctx

    @property
    def is_constant(self) -> bool:
        return self.num.degree <= 0 and self.den.degree == 0

    def _coerce(self, other):
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, Poly):
            return RatFunc.from_poly(other)
        if isinstance(other, (FieldElem, int)):
            return RatFunc.from_poly(Poly.from_elems(self.den.ctx, [self.den.ctx.elem(other)]))
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RatFunc.make(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RatFunc.make(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.num.is_zero:
            raise DivisionByZero("division of rational functions by zero")
        return RatFunc.make(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def derivative(self) -> "RatFunc":
        return RatFunc.make(
            self.num.derivative() * self.den - self.num * self.den.derivative(),
            self.den * self.den,
        )

    def __eq__(self, other):
        return (
            isinstance(other, RatFunc)
            and self.num == other.num
            and self.den == other.den
        )

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        if self.den.degree == 0:
            return poly_str(self.num)
        return f"({poly_str(self.num)}) / ({poly_str(self.den)})"


def lift_ratfunc(f: RatFunc, ext: FieldCtx) -> RatFunc:
    if f.ctx is ext:
        return f
    return RatFunc(lift_poly(f.num, ext), lift_poly(f.den, ext))


def evaluate(f: RatFunc, x) -> ProjPoint:
    """Value of f at a point of P^1, infinity included on both sides."""
    x = ProjPoint.of(x) if not isinstance(x, ProjPoint) else x
    if x.is_infinite:
        dn, dd = f.num.degree, f.den.degree
        if dn > dd:
            return INF
        ctx = f.ctx
        if dn < dd:
            return ProjPoint(ctx.zero)
        return ProjPoint(f.num.lc / f.den.lc)
    nv = f.num(x.value)
    dv = f.den(x.value)
    if dv.is_zero:
        # reduced form: num and den cannot vanish together
        return INF
    return ProjPoint(nv / dv)


def map_degree(f: RatFunc) -> int:
    """Degree of f as a self-map of P^1."""
    if f.is_constant:
        raise ConstantMap("degree of a constant map")
    return max(f.num.degree, f.den.degree)


def reciprocal_arg(f: RatFunc) -> RatFunc:
    """The rational function f(1/y)."""
    m = max(f.num.degree, f.den.degree)
    ctx = f.ctx

    def rev(p: Poly) -> Poly:
        cs = list(p.coeffs) + [ctx.zero] * (m + 1 - len(p.coeffs))
        return Poly.from_elems(ctx, list(reversed(cs)))

    return RatFunc.make(rev(f.num), rev(f.den))


def ord_at(f: RatFunc, x, target) -> int:
    """Multiplicity of x as a solution of f = target.

    This is the local ramification-index datum: the valuation of
    f - target at x (of the denominator when target is infinite), with the
    point at infinity handled through the substitution y -> 1/y.
    """
    x = ProjPoint.of(x)
    target = ProjPoint.of(target)
    if evaluate(f, x) != target:
        raise ValueMismatch(f"f({x}) is not {target}")
    if x.is_infinite:
        return ord_at(reciprocal_arg(f), ProjPoint(f.ctx.zero), target)
    if target.is_infinite:
        return linear_multiplicity(f.den, x.value)
    g = f.num - Poly.constant(target.value) * f.den
    return linear_multiplicity(g, x.value)


# ---------------------------------------------------------------------------
# Moebius transformations

def _proj_pair(pt: ProjPoint, ctx: FieldCtx):
    if pt.is_infinite:
        return ctx.one, ctx.zero
    return pt.value, ctx.one


def mobius_to_std(p1: ProjPoint, p2: ProjPoint, p3: ProjPoint, ctx: FieldCtx):
    """Matrix (a, b, c, d) of the unique Moebius map p1,p2,p3 -> 0,1,inf."""
    pts = (p1, p2, p3)
    for i in range(3):
        for j in range(i + 1, 3):
            if pts[i] == pts[j]:
                raise DegenerateTriple(f"repeated point {pts[i]} in triple")
    (u1, v1), (u2, v2), (u3, v3) = (_proj_pair(p, ctx) for p in pts)
    k_num = v3 * u2 - u3 * v2
    k_den = v1 * u2 - u1 * v2
    m = (k_num * v1, -(k_num * u1), k_den * v3, -(k_den * u3))
    if (m[0] * m[3] - m[1] * m[2]).is_zero:
        raise SingularMobius("triple does not determine an invertible map")
    return m


def mobius_inverse(m):
    a, b, c, d = m
    return (d, -b, -c, a)


def apply_mobius(m, pt: ProjPoint) -> ProjPoint:
    a, b, c, d = m
    u, v = _proj_pair(pt, a.ctx)
    nu, nv = a * u + b * v, c * u + d * v
    if nv.is_zero:
        return INF
    return ProjPoint(nu / nv)


def identity_mobius(ctx: FieldCtx):
    return (ctx.one, ctx.zero, ctx.zero, ctx.one)


def mobius(f: RatFunc, pre=None, post=None) -> RatFunc:
    """post o f o pre for Moebius maps given as (a, b, c, d) tuples."""
    ctx = f.ctx
    pre = pre if pre is not None else identity_mobius(ctx)
    post = post if post is not None else identity_mobius(ctx)
    pre = tuple(ctx.elem(c) for c in pre)
    post = tuple(ctx.elem(c) for c in post)
    for mat in (pre, post):
        if (mat[0] * mat[3] - mat[1] * mat[2]).is_zero:
            raise SingularMobius("Moebius matrix with zero determinant")
    a, b, c, d = pre
    m = max(f.num.degree, f.den.degree)
    lin_num = Poly.from_elems(ctx, [b, a])  # a*y + b
    lin_den = Poly.from_elems(ctx, [d, c])  # c*y + d

    pows_n = [Poly.one(ctx)]
    pows_d = [Poly.one(ctx)]
    for _ in range(m):
        pows_n.append(pows_n[-1] * lin_num)
        pows_d.append(pows_d[-1] * lin_den)

    def substitute(p: Poly) -> Poly:
        acc = Poly.zero(ctx)
        for i, coeff in enumerate(p.coeffs):
            if not coeff.is_zero:
                acc = acc + pows_n[i] * pows_d[m - i] * coeff
        return acc

    num2 = substitute(f.num)
    den2 = substitute(f.den)
    pa, pb, pc, pd = post
    return RatFunc.make(num2 * pa + den2 * pb, num2 * pc + den2 * pd)


# ---------------------------------------------------------------------------
# Root finding

def roots_in_ctx(f: Poly) -> list[tuple[FieldElem, int]]:
    """Roots of f lying in its own (finite) coefficient field."""
    ctx = f.ctx
    if ctx.characteristic == 0:
        raise CharZero("use rational_roots over Q")
    if f.is_zero:
        raise DivisionByZero("root finding on the zero polynomial")
    s = radical(f)
    q = ctx.order
    x = Poly.x(ctx)
    g = poly_gcd(pow_mod(x, q, s) - x, s)
    rts = _linear_roots_split(g)
    out = [(r, linear_multiplicity(f, r)) for r in rts]
    out.sort(key=lambda t: t[0].sort_key())
    return out


def _linear_roots_split(g: Poly) -> list[FieldElem]:
    """All roots of a squarefree monic g that splits completely over its field."""
    ctx = g.ctx
    if g.degree <= 0:
        return []
    if ctx.order <= _SCAN_LIMIT:
        found = [e for e in ctx.elements() if g(e).is_zero]
        assert len(found) == g.degree, "polynomial did not split as expected"
        return found
    # deterministic equal-degree splitting: successive shifts a separate any
    # pair of roots because the quadratic character of (r + a) cannot agree
    # for every a in the field
    q = ctx.order
    assert q % 2 == 1
    half = (q - 1) // 2

    def split(h: Poly) -> list[FieldElem]:
        if h.degree == 1:
            return [-h.coeffs[0]]
        x = Poly.x(ctx)
        for a in ctx.elements():
            s = pow_mod(x + a, half, h)
            t = poly_gcd(s - Poly.one(ctx), h)
            if 0 < t.degree < h.degree:
                return split(t) + split(h // t)
        raise AssertionError("equal-degree splitting failed on split input")

    return split(g.monic())


def roots(f: Poly, max_ext_degree: int = 6) -> list[tuple[FieldElem, int, int]]:
    """Roots of f in the extensions F_{p^k}, k <= max_ext_degree.

    For a prime-field polynomial the roots are reported inside the canonical
    fields of the tower, each once, tagged with its minimal field degree k
    and its multiplicity in f, ordered by (k, canonical element order).
    For an extension-field polynomial the search stays inside the
    coefficient field and its subfields.
    """
    ctx = f.ctx
    if ctx.characteristic == 0:
        raise CharZero("roots over Q are limited to rational_roots")
    if f.is_zero:
        raise DivisionByZero("root finding on the zero polynomial")
    if isinstance(ctx, ExtField):
        out = [(r, m, r.min_degree()) for r, m in roots_in_ctx(f)]
        out.sort(key=lambda t: (t[2], t[0].sort_key()))
        return out

    p = ctx.characteristic
    rem = radical(f)
    x = Poly.x(ctx)
    xq = x
    out: list[tuple[FieldElem, int, int]] = []
    for k in range(1, max_ext_degree + 1):
        if rem.degree <= 0:
            break
        xq = pow_mod(xq, p, rem)
        g = poly_gcd(xq - x, rem)
        if g.degree > 0:
            if k == 1:
                fk = f
                rts = _linear_roots_split(g)
            else:
                ext = make_field(p, k)
                fk = lift_poly(f, ext)
                rts = _linear_roots_split(lift_poly(g, ext))
            batch = [(r, linear_multiplicity(fk, r), k) for r in rts]
            batch.sort(key=lambda t: t[0].sort_key())
            out.extend(batch)
            rem = rem // g
            if rem.degree > 0:
                xq = xq % rem
    return out


def count_roots_by_degree(f: Poly, max_k: int) -> dict[int, int]:
    """Number of distinct roots of f of each minimal degree over F_p.

    Works over any finite coefficient field: the count of roots inside
    F_{p^k} is the degree of gcd(f_rad, y^(p^k) - y), and subtracting the
    counts of proper subfields leaves the roots of minimal degree exactly k.
    The roots themselves are never constructed.
    """
    ctx = f.ctx
    if ctx.characteristic == 0:
        raise CharZero("counting roots by field degree needs characteristic p")
    if f.is_zero:
        raise DivisionByZero("root counting on the zero polynomial")
    p = ctx.characteristic
    s = radical(f)
    x = Poly.x(ctx)
    xq = x % s if s.degree > 0 else x
    in_field: dict[int, int] = {}
    minimal: dict[int, int] = {}
    for k in range(1, max_k + 1):
        if s.degree > 0:
            xq = pow_mod(xq, p, s)
            in_field[k] = poly_gcd(xq - x, s).degree
        else:
            in_field[k] = 0
        minimal[k] = in_field[k] - sum(minimal[j] for j in range(1, k) if k % j == 0)
    return minimal


def rational_roots(f: Poly) -> tuple[list[tuple[FieldElem, int]], bool]:
    """Rational roots of f over Q by divisor scan.

    Returns (roots with multiplicities, complete) where ``complete`` is
    False when the leading/trailing integer coefficients were too large to
    factor within the trial-division budget, in which case roots may be
    missing.
    """
    ctx = f.ctx
    if ctx.characteristic != 0:
        raise CharZero("rational_roots is the characteristic-zero path")
    if f.is_zero:
        raise DivisionByZero("root finding on the zero polynomial")
    out: list[tuple[FieldElem, int]] = []
    # strip the root at zero first
    v = 0
    while v <= f.degree and f.coeffs[v].is_zero:
        v += 1
    if v:
        out.append((ctx.zero, v))
        f = Poly(ctx, f.coeffs[v:])
    if f.degree == 0:
        return out, True

    denoms = [c.raw.denominator for c in f.coeffs]
    scale = 1
    for d in denoms:
        scale = scale * d // _int_gcd(scale, d)
    ints = [int(c.raw * scale) for c in f.coeffs]
    g = 0
    for c in ints:
        g = _int_gcd(g, abs(c))
    ints = [c // g for c in ints]

    d0 = _bounded_divisors(abs(ints[0]))
    dl = _bounded_divisors(abs(ints[-1]))
    complete = d0 is not None and dl is not None
    if d0 is None:
        d0 = _small_divisor_sample(abs(ints[0]))
    if dl is None:
        dl = _small_divisor_sample(abs(ints[-1]))

    seen = set()
    for num in d0:
        for den in dl:
            fr = Fraction(num, den)
            for cand in (fr, -fr):
                if cand in seen:
                    continue
                seen.add(cand)
                r = ctx.from_fraction(cand)
                m = linear_multiplicity(f, r)
                if m:
                    out.append((r, m))
    out.sort(key=lambda t: t[0].sort_key())
    return out, complete


def _int_gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def _bounded_divisors(n: int):
    """All positive divisors of n, or None if factoring exceeds the budget."""
    if n == 0:
        return None
    divs = [1]
    rem = n
    d = 2
    while d * d <= rem:
        if d > _FACTOR_TRIAL_LIMIT:
            return None
        if rem % d == 0:
            powers = []
            while rem % d == 0:
                rem //= d
                powers.append(d ** (len(powers) + 1))
            divs = [a * b for a in divs for b in [1] + powers]
        d += 1 if d == 2 else 2
    if rem > 1:
        divs = divs + [a * rem for a in divs]
    return sorted(set(divs))


def _small_divisor_sample(n: int) -> list[int]:
    out = [d for d in range(1, 1000) if n % d == 0]
    return out or [1]
