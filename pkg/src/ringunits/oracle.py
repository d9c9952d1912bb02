"""Brute-force verification layer, deliberately dumber than the theory
it checks: explicit multiplication tables, exhaustive unit scans, and
per-element law checking. Anything the deciders in realize claim should
be reproducible here, within the dimension guards, by counting.
"""

from collections import Counter
from math import gcd as igcd

from . import abgroup, gf2ext
from .errors import DomainError, ResourceError, UsageError
from .realize import (
    Cardinal,
    EvenUnitRing,
    ProductOfFields,
    RationalFunctionField,
)

DIM_CAP = 20            # 2**dim elements get scanned; keep it honest
SURVEY_CAP = 10**6      # largest m for the even-unit-ring survey


class FiniteAlgebra:
    """A finite-dimensional commutative GF(2)-algebra given by structure
    constants.

    Elements are dim-bit ints, bit i being the coefficient of basis
    element i; table[i][j] is the product of basis elements i and j in
    the same encoding. Commutativity, associativity, and the identity
    law are verified at construction, so an instance that exists is an
    actual ring. blocks optionally records (offset, degree) spans when
    the algebra is a product of fields, enabling quotient projections.
    """

    __slots__ = ("dim", "table", "one", "blocks", "_sq")

    def __init__(self, table, one, blocks=None):
        dim = len(table)
        if dim < 1:
            raise DomainError("algebra dimension must be >= 1")
        if dim > DIM_CAP:
            raise ResourceError(f"dimension capped at {DIM_CAP}, got {dim}")
        limit = 1 << dim
        rows = []
        for row in table:
            row = tuple(row)
            if len(row) != dim or any(not 0 <= v < limit for v in row):
                raise DomainError("malformed multiplication table")
            rows.append(row)
        if not 0 <= one < limit:
            raise DomainError("identity element out of range")
        self.dim = dim
        self.table = tuple(rows)
        self.one = one
        self.blocks = None if blocks is None else tuple(blocks)
        self._sq = tuple(rows[i][i] for i in range(dim))
        self._validate()

    def _validate(self):
        t, dim = self.table, self.dim
        for i in range(dim):
            for j in range(i):
                if t[i][j] != t[j][i]:
                    raise DomainError("multiplication table is not commutative")
        for j in range(dim):
            if self._vec_times_basis(self.one, j) != 1 << j:
                raise DomainError("claimed identity is not an identity")
        for i in range(dim):
            for j in range(i + 1):
                left_ij = t[i][j]
                for k in range(j + 1):
                    # (bi bj) bk vs bi (bj bk); commutativity already holds,
                    # so checking i >= j >= k covers all triples
                    if self._vec_times_basis(left_ij, k) != self._vec_times_basis(
                        t[j][k], i
                    ):
                        raise DomainError("multiplication table is not associative")

    def _vec_times_basis(self, vec, k):
        t = self.table
        acc = 0
        while vec:
            low = vec & -vec
            acc ^= t[low.bit_length() - 1][k]
            vec ^= low
        return acc

    def mul(self, u, v):
        """Product of two elements."""
        acc = 0
        t = self.table
        while u:
            low = u & -u
            row = t[low.bit_length() - 1]
            u ^= low
            w = v
            while w:
                lw = w & -w
                acc ^= row[lw.bit_length() - 1]
                w ^= lw
        return acc

    def square(self, u):
        # cross terms cancel in characteristic 2, so squaring is linear
        acc = 0
        sq = self._sq
        while u:
            low = u & -u
            acc ^= sq[low.bit_length() - 1]
            u ^= low
        return acc

    def power(self, u, e):
        """u**e for e >= 1."""
        if e < 1:
            raise DomainError("exponent must be >= 1")
        result = None
        while e:
            if e & 1:
                result = u if result is None else self.mul(result, u)
            e >>= 1
            if e:
                u = self.square(u)
        return result


def build_product_of_fields(degrees):
    """Explicit multiplication table for a product of fields GF(2**d).

    Basis: powers 1, t, ..., t**(d-1) inside each field block, blocks
    laid out end to end in descending-degree order. Cross-block products
    vanish; the identity has one bit per block.
    """
    degrees = sorted(degrees, reverse=True)
    if not degrees:
        raise DomainError("a product of fields needs at least one factor")
    if any(d < 1 for d in degrees):
        raise DomainError("field degrees must be >= 1")
    dim = sum(degrees)
    if dim > DIM_CAP:
        raise ResourceError(f"dimension capped at {DIM_CAP}, got {dim}")
    table = [[0] * dim for _ in range(dim)]
    one = 0
    blocks = []
    offset = 0
    for d in degrees:
        ctx = gf2ext.field_ctx(d)
        for i in range(d):
            for j in range(d):
                prod = ctx.mul(1 << i, 1 << j)
                table[offset + i][offset + j] = prod << offset
        one |= 1 << offset
        blocks.append((offset, d))
        offset += d
    return FiniteAlgebra(table, one, blocks=blocks)


def build_group_algebra(group):
    """F2[G] for an odd-order group, on the monomial basis of G itself.

    Basis elements are group elements in mixed-radix encoding; products
    add exponent vectors componentwise modulo the cyclic orders.
    """
    if any(p == 2 for p, _ in group.primary):
        raise DomainError(
            "even-order groups are outside this classification; "
            "only odd-order group algebras are built"
        )
    dim = group.order
    if dim > DIM_CAP:
        raise ResourceError(f"dimension capped at {DIM_CAP}, got {dim}")
    orders = [p**e for p, e in group.primary]
    strides = []
    acc = 1
    for q in orders:
        strides.append(acc)
        acc *= q
    def decode(idx):
        return [(idx // s) % q for s, q in zip(strides, orders)]
    def encode(vec):
        return sum(a * s for a, s in zip(vec, strides))
    table = [[0] * dim for _ in range(dim)]
    for i in range(dim):
        vi = decode(i)
        for j in range(i + 1):
            vj = decode(j)
            k = encode([(a + b) % q for a, b, q in zip(vi, vj, orders)])
            table[i][j] = table[j][i] = 1 << k
    return FiniteAlgebra(table, one=1)


def enumerate_units(algebra):
    """Scan every element; return (unit count, order statistics).

    An element is a unit iff multiplication by it is an invertible
    linear map on the algebra; invertibility is decided by xor-basis
    elimination over the columns v*b_j, maintained incrementally along a
    Gray-code walk. Orders come from Lagrange descent on the factored
    unit count, using the cheap linear squaring map.
    """
    dim = algebra.dim
    table = algebra.table
    cols = [0] * dim
    value = 0
    units = []
    for g in range(1, 1 << dim):
        bit = (g & -g).bit_length() - 1
        row = table[bit]
        for j in range(dim):
            cols[j] ^= row[j]
        value ^= 1 << bit
        basis = [0] * dim
        full_rank = True
        for c in cols:
            while c:
                high = c.bit_length() - 1
                b = basis[high]
                if b:
                    c ^= b
                else:
                    basis[high] = c
                    break
            else:
                full_rank = False
                break
        if full_rank:
            units.append(value)
    count = len(units)
    stats = Counter()
    if count:
        factored = abgroup.factor_integer(count)
        one = algebra.one
        for u in units:
            order = 1
            for p, e in factored:
                w = algebra.power(u, count // p**e)
                k = 0
                while w != one:
                    w = algebra.power(w, p)
                    k += 1
                    if k > e:
                        raise AssertionError("element order does not divide unit count")
                order *= p**k
            stats[order] += 1
    return count, dict(stats)


def quotient_drop_factors(algebra, keep):
    """Project a product-of-fields algebra onto a subset of its blocks.

    Dropping factors is the ring quotient by the ideal supported on the
    dropped blocks; the projected multiplication table is recomputed
    from the original structure constants, not rebuilt from theory.
    """
    if algebra.blocks is None:
        raise UsageError("quotient needs block metadata from build_product_of_fields")
    keep = sorted(set(keep))
    if not keep:
        raise DomainError("must keep at least one factor")
    if any(not 0 <= i < len(algebra.blocks) for i in keep):
        raise DomainError(f"block index out of range: {keep}")
    coords = []
    new_blocks = []
    for i in keep:
        offset, d = algebra.blocks[i]
        new_blocks.append((len(coords), d))
        coords.extend(range(offset, offset + d))

    def project(mask):
        out = 0
        for new, old in enumerate(coords):
            if (mask >> old) & 1:
                out |= 1 << new
        return out

    table = [
        [project(algebra.table[i][j]) for j in coords] for i in coords
    ]
    return FiniteAlgebra(table, project(algebra.one), blocks=new_blocks)


def even_ring_unit_survey(m):
    """Units of Z[x]/(x**2, mx), enumerated as pairs (sign, b).

    The ring is Z + (Z/m)x with x**2 = 0; a + bx is a unit iff a = ±1,
    giving exactly 2m units under (s1,b1)(s2,b2) = (s1 s2, s1 b2 + s2 b1).
    Each element is checked against the identity and its inverse, and
    its order is read off the rule: (1, b) has order m/gcd(m, b), while
    (-1, b) squares to (1, -2b) and doubles that order. Returns
    (count, order statistics); cyclicity is never assumed.
    """
    if m < 1:
        raise DomainError(f"m must be >= 1, got {m}")
    if m > SURVEY_CAP:
        raise ResourceError(f"survey capped at m = {SURVEY_CAP}")

    def mul(u, v):
        return (u[0] * v[0], (u[0] * v[1] + v[0] * u[1]) % m)

    one = (1, 0)
    stats = Counter()
    count = 0
    for b in range(m):
        for s in (1, -1):
            u = (s, b)
            count += 1
            if mul(u, one) != u or mul(one, u) != u:
                raise AssertionError("identity law failed in unit survey")
            if mul(u, (s, -b % m)) != one:
                raise AssertionError("inverse law failed in unit survey")
            if s == 1:
                stats[m // igcd(m, b)] += 1
            else:
                stats[2 * (m // igcd(m, 2 * b))] += 1
    return count, dict(stats)


def verify_witness(witness, expected):
    """Re-check a witness against the expected unit count or unit group.

    Products of fields are enumerated literally within the dimension
    guard and compared by count (and order statistics for group
    targets); beyond the guard the formula product and the abstract
    isomorphism test take over. EvenUnitRing witnesses go through the
    survey; rational function fields match exactly the infinite targets.
    """
    if isinstance(witness, RationalFunctionField):
        return isinstance(expected, Cardinal) and not expected.is_finite
    if isinstance(expected, Cardinal) and not expected.is_finite:
        return False
    if isinstance(witness, EvenUnitRing):
        count, stats = even_ring_unit_survey(witness.m)
        if isinstance(expected, Cardinal):
            return count == expected.value
        return count == expected.order and stats == expected.order_statistics()
    if isinstance(witness, ProductOfFields):
        dim = sum(witness.degrees)
        if dim <= DIM_CAP:
            count, stats = enumerate_units(build_product_of_fields(witness.degrees))
            if isinstance(expected, Cardinal):
                return count == expected.value
            return count == expected.order and stats == expected.order_statistics()
        count = witness.unit_count()
        if isinstance(expected, Cardinal):
            return count == expected.value
        return count == expected.order and abgroup.iso_test(
            abgroup.units_of_field_product(witness.degrees), expected
        )
    raise DomainError(f"not a witness: {witness!r}")
