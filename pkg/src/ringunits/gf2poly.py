"""Arithmetic and complete factorization for polynomials over GF(2).

A polynomial is a plain nonnegative int: bit i holds the coefficient of
x**i. The zero polynomial is 0 and has degree -1. Integer order extends
degree order, so sorting factor lists by their int encoding is the
canonical order used everywhere.
"""

from random import Random

from .errors import DomainError, ResourceError, UsageError

DEGREE_CAP = 1 << 16        # factorization entry points refuse larger inputs
XQ_CAP = 1 << 20            # separate cap for the x**q - 1 degree rule
DEFAULT_SEED = 0

X = 2  # encoding of the monomial x

# 8 bits -> 16 bits with zeros interleaved, for squaring
_SPREAD = tuple(
    sum(((b >> i) & 1) << (2 * i) for i in range(8)) for b in range(256)
)
# inverse: keep the even-position bits of a byte, for square roots
_COMPACT = tuple(
    sum(((b >> (2 * i)) & 1) << i for i in range(4)) for b in range(256)
)


def degree(a):
    """Degree of a; -1 for the zero polynomial."""
    return a.bit_length() - 1


def add(a, b):
    """Sum of a and b (coefficientwise xor)."""
    return a ^ b


def mul(a, b):
    """Carry-less product of a and b."""
    if a < b:
        a, b = b, a
    r = 0
    while b:
        if b & 1:
            r ^= a
        b >>= 1
        a <<= 1
    return r


def square(a):
    """a * a, done by interleaving zero bits (no cross terms in char 2)."""
    r = 0
    shift = 0
    while a:
        r |= _SPREAD[a & 0xFF] << shift
        a >>= 8
        shift += 16
    return r


def _sqrt(a):
    """Square root of a perfect square (all odd-position bits clear)."""
    r = 0
    shift = 0
    while a:
        r |= _COMPACT[a & 0xFF] << shift
        a >>= 8
        shift += 4
    return r


def divrem(a, b):
    """Quotient and remainder of a divided by b; b must be nonzero."""
    if b == 0:
        raise DomainError("division by the zero polynomial")
    db = b.bit_length() - 1
    da = a.bit_length() - 1
    q = 0
    while da >= db:
        shift = da - db
        a ^= b << shift
        q |= 1 << shift
        da = a.bit_length() - 1
    return q, a


def mod(a, b):
    """Remainder of a divided by b; b must be nonzero."""
    if b == 0:
        raise DomainError("division by the zero polynomial")
    db = b.bit_length() - 1
    da = a.bit_length() - 1
    while da >= db:
        a ^= b << (da - db)
        da = a.bit_length() - 1
    return a


def gcd(a, b):
    """Greatest common divisor; monic (every nonzero GF(2) poly is)."""
    while b:
        a, b = b, mod(a, b)
    return a


def derivative(a):
    """Formal derivative; even-exponent terms vanish in characteristic 2."""
    a >>= 1
    n = a.bit_length()
    n += n & 1
    return a & (((1 << n) - 1) // 3)


def powmod(a, e, m):
    """a**e reduced modulo m, for e >= 0 and m nonzero."""
    if e < 0:
        raise DomainError("negative exponent")
    if m == 0:
        raise DomainError("division by the zero polynomial")
    r = mod(1, m)
    a = mod(a, m)
    while e:
        if e & 1:
            r = mod(mul(r, a), m)
        e >>= 1
        if e:
            a = mod(square(a), m)
    return r


def invmod(a, m):
    """Inverse of a modulo m; raises DomainError when gcd(a, m) != 1."""
    if m == 0:
        raise DomainError("division by the zero polynomial")
    a = mod(a, m)
    if a == 0:
        raise DomainError("not invertible")
    r0, r1 = m, a
    s0, s1 = 0, 1
    while r1:
        q, r = divrem(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 ^ mul(q, s1)
    if r0 != 1:
        raise DomainError("not invertible")
    return mod(s0, m)


def to_hex(a):
    """Little-endian hex of the coefficient bits; round-trips exactly."""
    if a < 0:
        raise DomainError("negative int is not a polynomial")
    return a.to_bytes(max(1, (a.bit_length() + 7) // 8), "little").hex()


def from_hex(s):
    """Parse a polynomial from its little-endian hex encoding."""
    try:
        raw = bytes.fromhex(s)
    except ValueError:
        raise UsageError(f"invalid hex polynomial: {s!r}") from None
    if not raw:
        raise UsageError("empty hex polynomial")
    return int.from_bytes(raw, "little")


def to_terms(a):
    """Readable form like 'x^3 + x + 1', highest power first."""
    if a == 0:
        return "0"
    parts = []
    for i in range(a.bit_length() - 1, -1, -1):
        if (a >> i) & 1:
            parts.append("1" if i == 0 else "x" if i == 1 else f"x^{i}")
    return " + ".join(parts)


def _check_input(f):
    if f < 0:
        raise DomainError("negative int is not a polynomial")
    if f.bit_length() - 1 > DEGREE_CAP:
        raise ResourceError(
            f"degree {f.bit_length() - 1} exceeds the cap of {DEGREE_CAP}"
        )


def is_irreducible(f):
    """True iff f (degree >= 1) has no lower-degree factor.

    Tests gcd(x**(2**i) - x, f) = 1 for i up to deg(f)/2; any factor of
    degree d <= deg(f)/2 would divide one of those.
    """
    _check_input(f)
    if f <= 1:
        raise DomainError("irreducibility needs degree >= 1")
    b = X
    for _ in range(degree(f) // 2):
        b = mod(square(b), f)
        if gcd(b ^ X, f) != 1:
            return False
    return True


def squarefree_check(f):
    """True iff f is nonzero with no repeated irreducible factor."""
    _check_input(f)
    if f == 0:
        raise DomainError("the zero polynomial is not squarefree or square")
    if f == 1:
        return True
    d = derivative(f)
    if d == 0:
        return False  # a perfect square once degree >= 1
    return gcd(f, d) == 1


def _squarefree_parts(f, mult, out):
    # char-2 squarefree decomposition; perfect-square leftovers recurse
    # through _sqrt with doubled multiplicity
    d = derivative(f)
    c = gcd(f, d)  # d == 0 gives c == f, w == 1, straight to the sqrt branch
    w = divrem(f, c)[0]
    i = 1
    while w != 1:
        y = gcd(w, c)
        z = divrem(w, y)[0]
        if z != 1:
            out.append((z, i * mult))
        w = y
        c = divrem(c, y)[0]
        i += 1
    if c != 1:
        _squarefree_parts(_sqrt(c), 2 * mult, out)


def _distinct_degree_split(g):
    # g squarefree; yields (product of its degree-d factors, d)
    out = []
    h = X
    d = 0
    while degree(g) > 0:
        d += 1
        if 2 * d > degree(g):
            out.append((g, degree(g)))
            break
        h = mod(square(h), g)
        e = gcd(h ^ X, g)
        if e != 1:
            out.append((e, d))
            g = divrem(g, e)[0]
            h = mod(h, g)
    return out


def _equal_degree_split(g, d, rng):
    # g squarefree with all factors of degree d; random trace splitting
    n = degree(g)
    if n == d:
        return [g]
    while True:
        t = acc = rng.randrange(1, 1 << n)
        for _ in range(d - 1):
            t = mod(square(t), g)
            acc ^= t
        s = gcd(acc, g)
        if 0 < degree(s) < n:
            rest = divrem(g, s)[0]
            return _equal_degree_split(s, d, rng) + _equal_degree_split(
                rest, d, rng
            )


def factor(f, seed=DEFAULT_SEED):
    """Complete factorization of f into irreducibles.

    Returns (factor, multiplicity) pairs, factors distinct and sorted by
    their int encoding (which refines degree order); the product of
    factor**multiplicity reconstructs f exactly. The splitting step is
    randomized internally but the result is canonical for every seed.
    """
    _check_input(f)
    if f == 0 or f == 1:
        raise DomainError("constants have no factorization into irreducibles")
    rng = Random(seed)
    parts = []
    _squarefree_parts(f, 1, parts)
    result = []
    for part, mult in parts:
        for grp, d in _distinct_degree_split(part):
            for irr in _equal_degree_split(grp, d, rng):
                result.append((irr, mult))
    result.sort()
    return result


def _small_factor(n):
    # trial division, adequate for n <= XQ_CAP
    out = []
    d = 2
    while d * d <= n:
        e = 0
        while n % d == 0:
            n //= d
            e += 1
        if e:
            out.append((d, e))
        d += 1 if d == 2 else 2
    if n > 1:
        out.append((n, 1))
    return out


def _divisors_from(pairs):
    divs = [1]
    for p, e in pairs:
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def _order_of_two(d):
    # multiplicative order of 2 modulo odd d
    if d == 1:
        return 1
    t = 1
    v = 2 % d
    while v != 1:
        v = (v << 1) % d
        t += 1
    return t


def factor_xq_minus_1(q):
    """Degrees of the irreducible factors of x**q - 1 over GF(2), q odd.

    Exact closed form: grouping the 2-power cosets of the q-th roots of
    unity, each divisor d of q contributes phi(d)/ord_d(2) irreducible
    factors of degree ord_d(2). Oddness of q makes every factor simple,
    so the returned degrees (sorted ascending) sum to q. The same answer
    must come out of factor(); tests hold the two routes together.
    """
    if q < 1 or q % 2 == 0:
        raise DomainError("q must be odd and positive")
    if q > XQ_CAP:
        raise ResourceError(f"q = {q} exceeds the cap of {XQ_CAP}")
    pairs = _small_factor(q) if q > 1 else []
    degrees = []
    for d in _divisors_from(pairs):
        t = _order_of_two(d)
        phi = d
        for p, _ in _small_factor(d) if d > 1 else []:
            phi -= phi // p
        degrees.extend([t] * (phi // t))
    degrees.sort()
    return degrees
