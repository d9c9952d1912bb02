"""Which cardinals, and which odd-order abelian groups, occur as the
group of units of a commutative ring.

The finite landscape: an odd count is achievable exactly when it is a
product of numbers 2**n - 1 (units of a product of characteristic-2
fields), every even count 2m is achieved by Z[x]/(x**2, mx) whose units
form C_2 x C_m, and every infinite cardinal is achieved by a rational
function field over GF(2) in that many indeterminates. For odd-order
groups the product-of-fields witnesses are complete: a group occurs iff
its primary decomposition partitions into blocks matching some multiset
of C_{2**n - 1}, and the same decision falls out a second way from the
group algebra F2[G], whose field factors are dictated by x**q - 1
factorizations. Keeping those two routes separate, and checkable against
each other, is the point of this module.
"""

from collections import Counter
from dataclasses import dataclass
from math import gcd as igcd
from math import lcm as ilcm
from typing import Optional, Union

from . import abgroup, gf2poly
from .abgroup import AbelianGroup
from .errors import DomainError, ResourceError

FINITE_CAP = 1 << 64            # largest finite cardinal accepted
GROUP_ALGEBRA_CAP = 1 << 20     # largest group algebra dimension built


# ------------------------------------------------------------------ types

@dataclass(frozen=True)
class Cardinal:
    """A finite count (value) or a symbolic infinite cardinal (label)."""

    value: Optional[int]
    label: Optional[str]

    def __post_init__(self):
        if (self.value is None) == (self.label is None):
            raise DomainError("exactly one of value and label must be set")
        if self.value is not None and not 0 <= self.value <= FINITE_CAP:
            raise DomainError(f"finite cardinals capped at 2**64, got {self.value}")
        if self.label is not None and not self.label:
            raise DomainError("infinite cardinal label must be nonempty")

    @classmethod
    def finite(cls, k):
        return cls(k, None)

    @classmethod
    def infinite(cls, label="aleph_0"):
        return cls(None, label)

    @property
    def is_finite(self):
        return self.value is not None

    def __str__(self):
        return str(self.value) if self.is_finite else self.label


@dataclass(frozen=True)
class ProductOfFields:
    """A finite product of fields GF(2**d), one entry per factor."""

    degrees: tuple

    def __post_init__(self):
        if not self.degrees:
            raise DomainError("a product of fields needs at least one factor")
        if any(d < 1 for d in self.degrees):
            raise DomainError("field degrees must be >= 1")
        object.__setattr__(
            self, "degrees", tuple(sorted(self.degrees, reverse=True))
        )

    def unit_count(self):
        total = 1
        for d in self.degrees:
            total *= (1 << d) - 1
        return total


@dataclass(frozen=True)
class EvenUnitRing:
    """Z[x]/(x**2, mx): exactly 2m units, forming C_2 x C_m."""

    m: int

    def __post_init__(self):
        if self.m < 1:
            raise DomainError("m must be >= 1")

    def unit_count(self):
        return 2 * self.m


@dataclass(frozen=True)
class RationalFunctionField:
    """GF(2)(S) for an index set S of the named infinite cardinality."""

    cardinal_label: str


WitnessRing = Union[ProductOfFields, EvenUnitRing, RationalFunctionField]


@dataclass(frozen=True)
class OddCertificate:
    """Exponents n_i >= 2 with product of (2**n_i - 1) equal to the odd
    target; the empty certificate certifies 1 (the empty product)."""

    exponents: tuple

    def __post_init__(self):
        if any(n < 2 for n in self.exponents):
            raise DomainError("certificate exponents must be >= 2")
        object.__setattr__(
            self, "exponents", tuple(sorted(self.exponents, reverse=True))
        )

    def product(self):
        total = 1
        for n in self.exponents:
            total *= (1 << n) - 1
        return total


@dataclass(frozen=True)
class RealizabilityAnswer:
    realizable: bool
    witness: Optional[WitnessRing]
    certificate: Optional[OddCertificate]
    reason: Optional[str]

    def __post_init__(self):
        if self.realizable and self.witness is None:
            raise DomainError("a positive answer must carry a witness")
        if not self.realizable and self.reason is None:
            raise DomainError("a negative answer must carry a reason")
        if not self.realizable and self.witness is not None:
            raise DomainError("a negative answer cannot carry a witness")


# ------------------------------------------------- odd cardinal search

def odd_product_decomposition(k):
    """Write odd k as a product of numbers 2**n - 1 with n >= 2, if possible.

    Returns the lexicographically largest nonincreasing exponent tuple
    (larger fields preferred), or None when k has no such product. k = 1
    gets the empty tuple (empty product). Depth-first search tries the
    largest usable exponent first, so the first full decomposition found
    is the canonical one; dead (remainder, exponent-bound) states are
    memoized per call.
    """
    if k < 1 or k > FINITE_CAP:
        raise DomainError(f"need 1 <= k <= 2**64, got {k}")
    if k % 2 == 0:
        raise DomainError(f"k must be odd, got {k}")
    dead = set()

    def dfs(rem, nmax):
        if rem == 1:
            return ()
        key = (rem, nmax)
        if key in dead:
            return None
        top = rem.bit_length()
        if (1 << top) - 1 > rem:
            top -= 1
        for n in range(min(nmax, top), 1, -1):
            c = (1 << n) - 1
            if rem % c == 0:
                tail = dfs(rem // c, n)
                if tail is not None:
                    return (n,) + tail
        dead.add(key)
        return None

    found = dfs(k, 65)
    return None if found is None else found


def realize_cardinal(card):
    """Decide whether some commutative ring has exactly card units.

    Trichotomy: infinite cardinals always work (rational function
    fields), even counts always work (EvenUnitRing), odd counts work
    exactly when odd_product_decomposition succeeds. Zero never works:
    every unit group contains the identity.
    """
    if not isinstance(card, Cardinal):
        raise DomainError(f"expected a Cardinal, got {card!r}")
    if not card.is_finite:
        return RealizabilityAnswer(
            True, RationalFunctionField(card.label), None, None
        )
    k = card.value
    if k == 0:
        return RealizabilityAnswer(
            False, None, None,
            "every unit group contains the identity, so no ring has 0 units",
        )
    if k % 2 == 0:
        return RealizabilityAnswer(True, EvenUnitRing(k // 2), None, None)
    exponents = odd_product_decomposition(k)
    if exponents is None:
        return RealizabilityAnswer(
            False, None, None,
            f"{k} is odd but not a product of numbers 2**n - 1",
        )
    witness = ProductOfFields(exponents if exponents else (1,))
    return RealizabilityAnswer(True, witness, OddCertificate(exponents), None)


# --------------------------------------------- odd group cover search

def _require_odd(group):
    if any(p == 2 for p, _ in group.primary):
        raise DomainError(
            "even-order groups are outside this classification; "
            "only odd-order unit groups are decided"
        )


def _cyclic_block(c, primes):
    """Primary decomposition of C_c when c factors entirely over the
    given primes, else None. Avoids factoring c from scratch."""
    rem = c
    block = []
    for p in primes:
        e = 0
        while rem % p == 0:
            rem //= p
            e += 1
        if e:
            block.append((p, e))
    if rem != 1:
        return None
    return Counter(block)


def _fits(block, target):
    return all(target[part] >= count for part, count in block.items())


def realize_group_odd(group):
    """Witness product of fields with unit group isomorphic to the given
    odd-order group, or None when no such product exists.

    The unit group of a product of fields GF(2**n_i) is the direct sum
    of C_{2**n_i - 1}, so realizability is an exact-cover question: can
    the primary multiset of the target be partitioned into the primary
    blocks of numbers 2**n - 1? Search tries larger n first and returns
    the lexicographically largest nonincreasing degree tuple; dead
    states are memoized per call.
    """
    _require_odd(group)
    if group.is_trivial:
        return ProductOfFields((1,))
    order = group.order
    primes = sorted({p for p, _ in group.primary})
    target = Counter(group.primary)
    blocks = {}
    n = 2
    while (1 << n) - 1 <= order:
        c = (1 << n) - 1
        if order % c == 0:
            block = _cyclic_block(c, primes)
            if block is not None and _fits(block, target):
                blocks[n] = block
        n += 1
    ns = sorted(blocks, reverse=True)
    dead = set()

    def dfs(remaining, nmax):
        if not remaining:
            return ()
        key = (tuple(sorted(remaining.items())), nmax)
        if key in dead:
            return None
        for n in ns:
            if n > nmax:
                continue
            block = blocks[n]
            if _fits(block, remaining):
                tail = dfs(remaining - block, n)
                if tail is not None:
                    return (n,) + tail
        dead.add(key)
        return None

    found = dfs(target, ns[0] if ns else 0)
    return None if found is None else ProductOfFields(found)


def realize_p_group(p, group):
    """Decide realizability of an odd-order p-group.

    Nontrivial p-groups occur exactly when p is a Mersenne prime
    2**n - 1 and the group is elementary abelian; the witness is then
    rank many copies of GF(2**n). Must agree with realize_group_odd on
    every input. p = 2 is refused: the Mersenne criterion fails there
    (the units of GF(5) form C_4), and even-order groups are out of
    scope throughout.
    """
    if p == 2:
        raise DomainError(
            "p = 2 is outside this classification: the elementary-abelian "
            "Mersenne criterion fails there (units of GF(5) form C_4)"
        )
    if not abgroup.is_prime(p):
        raise DomainError(f"{p} is not prime")
    if not group.is_p_group(p):
        raise DomainError(f"group is not a {p}-group")
    if group.is_trivial:
        return ProductOfFields((1,))
    if (p + 1) & p:
        return None  # p + 1 is not a power of two, so p is not Mersenne
    if not group.is_elementary_abelian(p):
        return None
    n = (p + 1).bit_length() - 1
    return ProductOfFields((n,) * len(group.primary))


def mersenne_power_check(n_max):
    """True iff no 2**n - 1 with 2 <= n <= n_max is a perfect power.

    This is the arithmetic fact behind the p-group classification: a
    nontrivial cyclic block C_{p**z} inside some C_{2**n - 1} would make
    2**n - 1 = p**z with z >= 2.
    """
    if not 2 <= n_max <= 63:
        raise DomainError(f"need 2 <= n_max <= 63, got {n_max}")
    for n in range(2, n_max + 1):
        v = (1 << n) - 1
        for z in range(2, n + 1):
            r = round(v ** (1.0 / z))
            for cand in (r - 1, r, r + 1):
                if cand >= 2 and cand**z == v:
                    return False
    return True


# -------------------------------------------------- group algebra route

def group_algebra_degrees(group):
    """Field degrees of the group algebra F2[G] for odd-order G.

    F2[C_q] = F2[x]/(x**q - 1) splits per factor_xq_minus_1, and tensor
    products of the resulting fields split by the gcd/lcm rule, so the
    degrees for a direct sum of cyclic groups come from combining layers
    pairwise. Sum of degrees always equals the dimension |G|.
    """
    counter = _group_algebra_counter(group)
    out = []
    for d in sorted(counter):
        out.extend([d] * counter[d])
    return out


def _group_algebra_counter(group):
    _require_odd(group)
    if group.order > GROUP_ALGEBRA_CAP:
        raise ResourceError(
            f"group algebra dimension capped at 2**20, got {group.order}"
        )
    degrees = Counter({1: 1})
    for p, e in group.primary:
        layer = Counter(gf2poly.factor_xq_minus_1(p**e))
        combined = Counter()
        for d1, c1 in degrees.items():
            for d2, c2 in layer.items():
                combined[ilcm(d1, d2)] += c1 * c2 * igcd(d1, d2)
        degrees = combined
    return degrees


def group_algebra_subset_search(group):
    """Realize the group from inside its own group algebra: find a
    sub-multiset of group_algebra_degrees(G) whose fields have unit
    group isomorphic to G. Independent second decider: must agree with
    realize_group_odd on presence for every odd-order input. Picks the
    lexicographically largest nonincreasing degree tuple, or None.
    """
    _require_odd(group)
    pool = _group_algebra_counter(group)
    if group.is_trivial:
        return ProductOfFields((1,))
    order = group.order
    primes = sorted({p for p, _ in group.primary})
    target = Counter(group.primary)
    usable = []
    for d in sorted((d for d in pool if d >= 2), reverse=True):
        if (1 << d) - 1 > order:
            continue
        block = _cyclic_block((1 << d) - 1, primes)
        if block is not None and _fits(block, target):
            usable.append((d, pool[d], block))
    dead = set()

    def dfs(remaining, idx, left):
        if not remaining:
            return ()
        if idx == len(usable):
            return None
        key = (tuple(sorted(remaining.items())), idx, left)
        if key in dead:
            return None
        d, cap, block = usable[idx]
        if left > 0 and _fits(block, remaining):
            tail = dfs(remaining - block, idx, left - 1)
            if tail is not None:
                return (d,) + tail
        nxt = idx + 1
        skip = dfs(remaining, nxt, usable[nxt][1]) if nxt < len(usable) else None
        if skip is None:
            dead.add(key)
        return skip

    result = dfs(target, 0, usable[0][1] if usable else 0)
    return None if result is None else ProductOfFields(result)


# ----------------------------------------------------- serialization

def witness_to_dict(witness):
    if isinstance(witness, ProductOfFields):
        return {"type": "product_of_fields", "degrees": list(witness.degrees)}
    if isinstance(witness, EvenUnitRing):
        return {"type": "even_unit_ring", "m": witness.m}
    if isinstance(witness, RationalFunctionField):
        return {
            "type": "rational_function_field",
            "cardinal": witness.cardinal_label,
        }
    raise DomainError(f"not a witness: {witness!r}")


def witness_from_dict(data):
    try:
        kind = data["type"]
        if kind == "product_of_fields":
            return ProductOfFields(tuple(data["degrees"]))
        if kind == "even_unit_ring":
            return EvenUnitRing(data["m"])
        if kind == "rational_function_field":
            return RationalFunctionField(data["cardinal"])
    except (KeyError, TypeError) as exc:
        raise DomainError(f"malformed witness object: {exc}") from None
    raise DomainError(f"unknown witness type: {kind!r}")


def answer_to_dict(answer):
    return {
        "realizable": answer.realizable,
        "witness": None
        if answer.witness is None
        else witness_to_dict(answer.witness),
        "certificate": None
        if answer.certificate is None
        else {
            "exponents": list(answer.certificate.exponents),
            "product": answer.certificate.product(),
        },
        "reason": answer.reason,
    }
