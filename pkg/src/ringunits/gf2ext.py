"""Finite fields GF(2**n): contexts, elements, factorization of
polynomials with extension-field coefficients, and the splitting rule
for tensor products of such fields.

Element representatives are ints in the gf2poly encoding, always reduced
modulo the context modulus. The modulus of GF(2**n) is the irreducible
polynomial of degree n with the smallest int encoding, so contexts are
canonical and safely shareable.
"""

from dataclasses import dataclass
from functools import lru_cache
from math import gcd as igcd
from math import lcm as ilcm
from random import Random

from . import abgroup, gf2poly
from .errors import DomainError, ResourceError, UsageError

DEGREE_CAP = 64  # fields beyond GF(2**64) have no use here; refuse them


@dataclass(frozen=True)
class FieldCtx:
    """Immutable description of GF(2**n) with fixed reduction modulus."""

    n: int
    modulus: int

    @property
    def size(self):
        return 1 << self.n

    def check(self, rep):
        if not 0 <= rep < self.size:
            raise DomainError(f"{rep} is not a reduced element of GF(2**{self.n})")
        return rep

    def add(self, a, b):
        return a ^ b

    def mul(self, a, b):
        return gf2poly.mod(gf2poly.mul(a, b), self.modulus)

    def sqr(self, a):
        return gf2poly.mod(gf2poly.square(a), self.modulus)

    def inv(self, a):
        if a == 0:
            raise DomainError("zero has no multiplicative inverse")
        return gf2poly.invmod(a, self.modulus)

    def pow(self, a, e):
        if e < 0:
            a, e = self.inv(a), -e
        return gf2poly.powmod(a, e, self.modulus)

    def sqrt(self, a):
        # Frobenius is a bijection, so every element has one square root
        return self.pow(a, 1 << (self.n - 1))

    def elem(self, rep):
        return FieldElem(self, self.check(rep))

    def __repr__(self):
        return f"FieldCtx(GF(2**{self.n}), modulus=0x{self.modulus:x})"


@lru_cache(maxsize=None)
def field_ctx(n):
    """The canonical context for GF(2**n)."""
    if n < 1:
        raise DomainError("extension degree must be >= 1")
    if n > DEGREE_CAP:
        raise ResourceError(f"field degree capped at {DEGREE_CAP}")
    for m in range(1 << n, 1 << (n + 1)):
        if gf2poly.is_irreducible(m):
            return FieldCtx(n, m)
    raise AssertionError("unreachable: GF(2) has irreducibles of every degree")


@dataclass(frozen=True)
class FieldElem:
    """An element of a FieldCtx; operations demand matching contexts."""

    ctx: FieldCtx
    rep: int

    def _peer(self, other):
        if not isinstance(other, FieldElem):
            raise UsageError(f"cannot combine field element with {other!r}")
        if other.ctx != self.ctx:
            raise UsageError(
                f"context mismatch: GF(2**{self.ctx.n}) vs GF(2**{other.ctx.n})"
            )
        return other

    def __add__(self, other):
        return FieldElem(self.ctx, self.rep ^ self._peer(other).rep)

    __sub__ = __add__  # characteristic 2

    def __mul__(self, other):
        return FieldElem(self.ctx, self.ctx.mul(self.rep, self._peer(other).rep))

    def __pow__(self, e):
        return FieldElem(self.ctx, self.ctx.pow(self.rep, e))

    def inverse(self):
        return FieldElem(self.ctx, self.ctx.inv(self.rep))

    def __repr__(self):
        return f"<0x{gf2poly.to_hex(self.rep)} in GF(2**{self.ctx.n})>"


def multiplicative_order(elem):
    """Order of a nonzero element in the unit group of its field.

    Factors 2**n - 1 and walks divisors downward, shedding every prime
    that still leaves the power at one.
    """
    if elem.rep == 0:
        raise DomainError("zero is not in the unit group")
    ctx = elem.ctx
    t = ctx.size - 1
    for p, e in abgroup.factor_integer(t):
        for _ in range(e):
            if ctx.pow(elem.rep, t // p) == 1:
                t //= p
            else:
                break
    return t


# ------------------------------------------------------------------
# polynomials with GF(2**n) coefficients: tuples of reduced reps,
# index = exponent, no trailing zeros

def _ptrim(c):
    i = len(c)
    while i and c[i - 1] == 0:
        i -= 1
    return tuple(c[:i])


def _pdeg(c):
    return len(c) - 1


def _padd(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, x in enumerate(b):
        out[i] ^= x
    return _ptrim(out)


def _pmul(ctx, a, b):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] ^= ctx.mul(x, y)
    return _ptrim(out)


def _pscale(ctx, a, s):
    if s == 0:
        return ()
    if s == 1:
        return tuple(a)
    return tuple(ctx.mul(x, s) for x in a)


def _pdivrem(ctx, a, b):
    if not b:
        raise DomainError("division by the zero polynomial")
    inv_lead = ctx.inv(b[-1])
    a = list(a)
    q = [0] * max(0, len(a) - len(b) + 1)
    while len(a) >= len(b):
        coef = ctx.mul(a[-1], inv_lead)
        shift = len(a) - len(b)
        q[shift] = coef
        for i, y in enumerate(b):
            a[shift + i] ^= ctx.mul(y, coef)
        while a and a[-1] == 0:
            a.pop()
    return _ptrim(q), _ptrim(a)


def _pmonic(ctx, a):
    if not a or a[-1] == 1:
        return tuple(a)
    return _pscale(ctx, a, ctx.inv(a[-1]))


def _pgcd(ctx, a, b):
    while b:
        a, b = b, _pdivrem(ctx, a, b)[1]
    return _pmonic(ctx, a)


def _pderiv(a):
    # char 2: only odd exponents survive, coefficient unchanged
    return _ptrim([a[i] if i & 1 else 0 for i in range(1, len(a))])


def _psqr(ctx, a):
    # Frobenius: square coefficients, double exponents, no cross terms
    out = [0] * (2 * len(a) - 1) if a else []
    for i, x in enumerate(a):
        out[2 * i] = ctx.sqr(x)
    return _ptrim(out)


def _psqrt(ctx, a):
    # inverse of _psqr; defined when odd-exponent coefficients vanish
    return _ptrim([ctx.sqrt(a[2 * i]) for i in range((len(a) + 1) // 2)])


def _ppowmod_sqr(ctx, a, f):
    return _pdivrem(ctx, _psqr(ctx, a), f)[1]


def _pencode(ctx, a):
    # packed int: base-2**n positional encoding, mirrors the GF(2) order
    v = 0
    for i, x in enumerate(a):
        v |= x << (ctx.n * i)
    return v


@dataclass(frozen=True)
class PolyExt:
    """A polynomial with GF(2**n) coefficients, low degree first."""

    ctx: FieldCtx
    coeffs: tuple

    def __post_init__(self):
        cleaned = _ptrim([self.ctx.check(c) for c in self.coeffs])
        object.__setattr__(self, "coeffs", cleaned)

    @property
    def degree(self):
        return len(self.coeffs) - 1

    @classmethod
    def from_gf2(cls, ctx, poly):
        """Lift a GF(2) polynomial (int encoding) to ctx coefficients."""
        return cls(ctx, tuple((poly >> i) & 1 for i in range(poly.bit_length())))

    def __repr__(self):
        return f"PolyExt(GF(2**{self.ctx.n}), {self.coeffs})"


def _esff(ctx, f, mult, out):
    d = _pderiv(f)
    c = _pgcd(ctx, f, d) if d else _pmonic(ctx, f)
    w = _pdivrem(ctx, f, c)[0]
    i = 1
    while w != (1,):
        y = _pgcd(ctx, w, c)
        z = _pdivrem(ctx, w, y)[0]
        if _pdeg(z) > 0:
            out.append((z, i * mult))
        w = y
        c = _pdivrem(ctx, c, y)[0]
        i += 1
    if _pdeg(c) > 0:
        _esff(ctx, _psqrt(ctx, c), 2 * mult, out)


def _eddf(ctx, g):
    out = []
    x = (0, 1)
    h = _pdivrem(ctx, x, g)[1]
    d = 0
    while _pdeg(g) > 0:
        d += 1
        if 2 * d > _pdeg(g):
            out.append((g, _pdeg(g)))
            break
        for _ in range(ctx.n):  # h -> h**(2**n) mod g
            h = _ppowmod_sqr(ctx, h, g)
        e = _pgcd(ctx, _padd(h, x), g)
        if _pdeg(e) > 0:
            out.append((e, d))
            g = _pdivrem(ctx, g, e)[0]
            h = _pdivrem(ctx, h, g)[1]
    return out


def _eedf(ctx, g, d, rng):
    # absolute trace to GF(2): ambient field has 2**(n*d) elements
    n = _pdeg(g)
    if n == d:
        return [g]
    bits = ctx.n * d
    while True:
        h = _ptrim([rng.randrange(ctx.size) for _ in range(n)])
        if not h:
            continue
        t = h
        acc = h
        for _ in range(bits - 1):
            t = _ppowmod_sqr(ctx, t, g)
            acc = _padd(acc, t)
        s = _pgcd(ctx, acc, g)
        if 0 < _pdeg(s) < n:
            rest = _pdivrem(ctx, g, s)[0]
            return _eedf(ctx, s, d, rng) + _eedf(ctx, rest, d, rng)


def factor_over_ext(f, seed=gf2poly.DEFAULT_SEED):
    """Complete factorization of a PolyExt into monic irreducibles.

    Returns (PolyExt, multiplicity) pairs in canonical order (degree,
    then packed coefficient encoding); multiplying everything back,
    scaled by the original leading coefficient, reconstructs the input.
    """
    ctx = f.ctx
    coeffs = f.coeffs
    if _pdeg(coeffs) < 1:
        raise DomainError("constants have no factorization into irreducibles")
    rng = Random(seed)
    parts = []
    _esff(ctx, _pmonic(ctx, coeffs), 1, parts)
    found = []
    for part, mult in parts:
        for grp, d in _eddf(ctx, part):
            for irr in _eedf(ctx, grp, d, rng):
                found.append((irr, mult))
    found.sort(key=lambda t: (_pdeg(t[0]), _pencode(ctx, t[0])))
    return [(PolyExt(ctx, p), m) for p, m in found]


# ------------------------------------------------------------------
# tensor products of fields

def tensor_split(a, b):
    """Degrees of the field factors of GF(2**a) (x) GF(2**b) over GF(2).

    Closed form: gcd(a, b) copies of GF(2**lcm(a, b)). The factorization
    route in tensor_split_factored must produce the same multiset; tests
    and the acceptance suite hold the two together.
    """
    if a < 1 or b < 1:
        raise DomainError("field degrees must be >= 1")
    return [ilcm(a, b)] * igcd(a, b)


def tensor_split_factored(a, b):
    """Same multiset as tensor_split, derived by explicit factorization.

    GF(2**a) (x) GF(2**b) = GF(2**a)[x] / (modulus of GF(2**b)), so the
    degrees are a * (degree of each irreducible factor of that modulus
    over GF(2**a)).
    """
    if a < 1 or b < 1:
        raise DomainError("field degrees must be >= 1")
    ctx = field_ctx(a)
    lifted = PolyExt.from_gf2(ctx, field_ctx(b).modulus)
    factors = factor_over_ext(lifted)
    if any(m != 1 for _, m in factors):
        raise AssertionError("separable modulus factored with multiplicity")
    return sorted(a * p.degree for p, _ in factors)


def tensor_dim_check(a, b):
    """Dimension bookkeeping: the split degrees must sum to a * b."""
    return sum(tensor_split(a, b)) == a * b
