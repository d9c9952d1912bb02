"""Finite abelian groups in primary decomposition, plus the deterministic
integer factorization they are built on.

A group lives as a sorted tuple of (p, e) pairs meaning the direct sum of
the cyclic groups C_{p**e}; two groups are isomorphic exactly when those
multisets are equal. Order statistics (how many elements of each order)
are computed by counting formula, never by enumeration, and determine the
group up to isomorphism, which is what makes them usable as an oracle.
"""

from collections import Counter
from dataclasses import dataclass
from math import gcd

from .errors import DomainError, ResourceError

ORDER_CAP = 1 << 128        # largest admissible group order
STATS_CAP = 1 << 40         # largest order for the statistics formula
FACTOR_CAP = 1 << 64        # factor_integer contract range
# the 12-base Miller-Rabin test is proven exact below this bound
_MR_EXACT_BOUND = 3_317_044_064_679_887_385_961_981
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def _build_small_primes(limit):
    flags = bytearray([1]) * (limit + 1)
    flags[0] = flags[1] = 0
    for i in range(2, int(limit**0.5) + 1):
        if flags[i]:
            flags[i * i :: i] = bytes(len(flags[i * i :: i]))
    return tuple(i for i in range(2, limit + 1) if flags[i])


_SMALL_PRIMES = _build_small_primes(1000)


def is_prime(n):
    """Deterministic primality for n < 3.3e24 (covers the 64-bit range)."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    if n >= _MR_EXACT_BOUND:
        raise ResourceError("primality test is exact only below 3.3e24")
    d = n - 1
    s = (d & -d).bit_length() - 1
    d >>= s
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _brent_rho(n):
    # Brent's cycle-finding rho with x**2 + c; c starts at 1 and is bumped
    # whenever a round degenerates, so runs are reproducible
    c = 1
    while True:
        y, r, q = 2, 1, 1
        g = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(128, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = gcd(q, n)
                k += 128
            r <<= 1
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = gcd(abs(x - ys), n)
        if g != n:
            return g
        c += 1


def factor_integer(n):
    """Prime factorization of n >= 1 as sorted (prime, exponent) pairs.

    Trial division below 1000, then Brent rho on what remains; exact and
    deterministic across runs for the whole 1..2**64 contract range.
    """
    if n < 1:
        raise DomainError("only positive integers have prime factorizations")
    if n > FACTOR_CAP:
        raise ResourceError(f"factorization capped at 2**64, got {n}")
    out = Counter()
    for p in _SMALL_PRIMES:
        if p * p > n:
            break
        while n % p == 0:
            out[p] += 1
            n //= p
    if n > 1:
        if n < 1_000_000 or is_prime(n):
            # no factor below 1000 and n < 10**6 forces primality
            out[n] += 1
        else:
            stack = [n]
            while stack:
                m = stack.pop()
                if is_prime(m):
                    out[m] += 1
                    continue
                d = _brent_rho(m)
                stack.extend((d, m // d))
    return sorted(out.items())


@dataclass(frozen=True)
class AbelianGroup:
    """A finite abelian group, canonicalized to its primary decomposition."""

    primary: tuple

    def __post_init__(self):
        pairs = []
        order = 1
        for pair in self.primary:
            p, e = pair
            if e < 1:
                raise DomainError(f"exponent must be >= 1, got {e}")
            if not is_prime(p):
                raise DomainError(f"{p} is not prime")
            order *= p**e
            if order > ORDER_CAP:
                raise ResourceError("group order exceeds 2**128")
            pairs.append((p, e))
        object.__setattr__(self, "primary", tuple(sorted(pairs)))

    @classmethod
    def trivial(cls):
        return cls(())

    @classmethod
    def from_primary(cls, pairs):
        return cls(tuple(pairs))

    @classmethod
    def from_cyclic_orders(cls, orders):
        """Direct sum of C_n over the given orders, e.g. {63} -> C_9 + C_7."""
        pairs = []
        for n in orders:
            if n < 1:
                raise DomainError(f"cyclic order must be >= 1, got {n}")
            pairs.extend(factor_integer(n))
        return cls(tuple(pairs))

    @classmethod
    def p_group(cls, p, exponents):
        return cls(tuple((p, e) for e in exponents))

    @property
    def order(self):
        n = 1
        for p, e in self.primary:
            n *= p**e
        return n

    @property
    def is_trivial(self):
        return not self.primary

    def is_p_group(self, p):
        """True iff every element has p-power order (vacuously for C_1)."""
        return all(q == p for q, _ in self.primary)

    def is_elementary_abelian(self, p):
        """True iff the group is a direct sum of C_p (vacuously for C_1)."""
        return all(pair == (p, 1) for pair in self.primary)

    def exponent(self):
        """Largest element order: product over primes of the top p-power."""
        tops = {}
        for p, e in self.primary:
            tops[p] = max(tops.get(p, 0), e)
        n = 1
        for p, e in tops.items():
            n *= p**e
        return n

    def invariant_factors(self):
        """Cyclic orders d_1 | d_2 | ... | d_k equivalent to the primary data."""
        by_p = {}
        for p, e in self.primary:
            by_p.setdefault(p, []).append(e)
        depth = max((len(v) for v in by_p.values()), default=0)
        factors = []
        for i in range(depth):
            f = 1
            for p, exps in by_p.items():
                ranked = sorted(exps, reverse=True)
                if i < len(ranked):
                    f *= p ** ranked[i]
            factors.append(f)
        return sorted(factors)

    def order_statistics(self):
        """Map element order -> count, computed per prime and multiplied.

        Elements of order dividing p**j number p**sum(min(e_i, j)); exact
        counts are consecutive differences, and statistics of coprime
        components combine multiplicatively. Counts sum to the order.
        """
        if self.order > STATS_CAP:
            raise ResourceError("order statistics capped at 2**40")
        by_p = {}
        for p, e in self.primary:
            by_p.setdefault(p, []).append(e)
        stats = {1: 1}
        for p, exps in sorted(by_p.items()):
            layer = {1: 1}
            prev = 1
            for j in range(1, max(exps) + 1):
                nj = p ** sum(min(e, j) for e in exps)
                layer[p**j] = nj - prev
                prev = nj
            stats = {
                d * o: c1 * c2
                for d, c1 in stats.items()
                for o, c2 in layer.items()
            }
        return stats


def iso_test(g, h):
    """Isomorphism of finite abelian groups: equal primary multisets."""
    return g.primary == h.primary


def units_of_field_product(degrees):
    """Unit group of a product of fields GF(2**d), one factor per degree.

    Each field contributes the cyclic group of order 2**d - 1; degree-1
    factors contribute nothing (the field with two elements has one unit).
    """
    degrees = list(degrees)
    if not degrees:
        raise DomainError("a product of fields needs at least one factor")
    if any(d < 1 for d in degrees):
        raise DomainError("field degrees must be >= 1")
    total = 1
    for d in degrees:
        total *= (1 << d) - 1
        if total > ORDER_CAP:
            raise ResourceError("unit group order exceeds 2**128")
    return AbelianGroup.from_cyclic_orders((1 << d) - 1 for d in degrees)
