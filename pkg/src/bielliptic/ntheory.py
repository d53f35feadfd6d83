"""Integer kernel: factorization, divisor combinatorics, class numbers.

Everything here is exact and deterministic; trial division is fine because
every level this package ever sees is tiny (≤ a few thousand).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt

from .errors import DataError


def egcd(a: int, b: int) -> tuple[int, int, int]:
    """Extended gcd.  Returns (g, x, y) with a*x + b*y = g and g >= 0."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


@dataclass(frozen=True)
class Factorization:
    """Prime factorization of a positive integer, primes strictly increasing."""

    n: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        prod = 1
        for p, e in self.factors:
            prod *= p**e
        if prod != self.n:
            raise DataError(f"factorization of {self.n} does not multiply out")

    @property
    def omega(self) -> int:
        return len(self.factors)

    def valuation(self, p: int) -> int:
        for q, e in self.factors:
            if q == p:
                return e
        return 0

    @property
    def is_squarefree(self) -> bool:
        return all(e == 1 for _, e in self.factors)

    def prime_powers(self) -> list[int]:
        """The maximal prime-power divisors, ascending by prime."""
        return [p**e for p, e in self.factors]


def factor(n: int) -> Factorization:
    """Trial-division factorization.  Rejects n < 1."""
    if n < 1:
        raise ValueError(f"cannot factor {n}: need a positive integer")
    m = n
    out = []
    d = 2
    while d * d <= m:
        if m % d == 0:
            e = 0
            while m % d == 0:
                m //= d
                e += 1
            out.append((d, e))
        d += 1 if d == 2 else 2
    if m > 1:
        out.append((m, 1))
    return Factorization(n, tuple(out))


def psi(n: int) -> int:
    """Dedekind psi: n * prod_{p|n} (1 + 1/p)."""
    r = n
    for p, _ in factor(n).factors:
        r = r // p * (p + 1)
    return r


def euler_phi(n: int) -> int:
    r = n
    for p, _ in factor(n).factors:
        r = r // p * (p - 1)
    return r


def hall_divisors(n: int) -> list[int]:
    """All d | n with gcd(d, n/d) = 1, ascending.  Count is 2^omega(n)."""
    divs = [1]
    for q in factor(n).prime_powers():
        divs += [d * q for d in divs]
    return sorted(divs)


def hall_product(d: int, e: int) -> int:
    """Group law on Hall divisors: d * e / gcd(d, e)^2."""
    g = gcd(d, e)
    return d * e // (g * g)


def kronecker(a: int, n: int) -> int:
    """Kronecker symbol (a | n), defined for all integers n."""
    if n == 0:
        return 1 if a in (1, -1) else 0
    result = 1
    if n < 0:
        n = -n
        if a < 0:
            result = -result
    t = 0
    while n % 2 == 0:
        n //= 2
        t += 1
    if t:
        if a % 2 == 0:
            return 0
        if t % 2 == 1 and a % 8 in (3, 5):
            result = -result
    a %= n
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def validate_discriminant(D: int) -> None:
    if D >= 0 or D % 4 not in (0, 1):
        raise ValueError(f"{D} is not a negative discriminant (need D<0, D=0,1 mod 4)")


def class_number(D: int) -> int:
    """Form class number h(D) for a negative discriminant D.

    Counts reduced primitive binary quadratic forms (a,b,c), b^2-4ac = D,
    |b| <= a <= c, with b >= 0 whenever |b| = a or a = c.  Non-fundamental
    discriminants are allowed.
    """
    validate_discriminant(D)
    h = 0
    a = 1
    while 3 * a * a <= -D:
        # b runs over 0..a with b = D (mod 2)
        for b in range(abs(D) % 2, a + 1, 2):
            num = b * b - D
            if num % (4 * a):
                continue
            c = num // (4 * a)
            if c < a:
                continue
            if gcd(gcd(a, b), c) != 1:
                continue
            if b == 0 or b == a or a == c:
                h += 1
            else:
                h += 2
        a += 1
    return h


def class_number_oracle(D: int) -> int:
    """Independent brute force: test the reduction conditions literally on
    every triple with 0 < a <= sqrt(|D|/3) and |b| <= a."""
    validate_discriminant(D)
    count = 0
    for a in range(1, isqrt(-D // 3) + 1):
        for b in range(-a, a + 1):
            num = b * b - D
            if num % (4 * a):
                continue
            c = num // (4 * a)
            if not (abs(b) <= a <= c):
                continue
            if b < 0 and (abs(b) == a or a == c):
                continue
            if gcd(gcd(a, b), c) != 1:
                continue
            count += 1
    return count


class ALSubgroup:
    """Subgroup of the Atkin-Lehner group B(N), stored as its full element set.

    Elements are Hall divisors of N; the group is elementary abelian of
    order 2^omega(N), with d*e/gcd(d,e)^2 as the product.
    """

    __slots__ = ("level", "elements", "_masks")

    def __init__(self, level: int, generators=()):
        self.level = level
        elems = {1}
        pending = [int(g) for g in generators]
        for g in pending:
            if g < 1 or level % g or gcd(g, level // g) != 1:
                raise ValueError(f"w{g} is not an Atkin-Lehner involution at level {level}")
        changed = True
        elems.update(pending)
        while changed:
            changed = False
            for a in list(elems):
                for b in list(elems):
                    c = hall_product(a, b)
                    if c not in elems:
                        elems.add(c)
                        changed = True
        self.elements = frozenset(elems)
        pp = factor(level).prime_powers()
        self._masks = {d: self._mask(d, pp) for d in self.elements}

    @staticmethod
    def _mask(d: int, prime_powers) -> int:
        m = 0
        for i, q in enumerate(prime_powers):
            if d % q == 0:
                m |= 1 << i
        return m

    @classmethod
    def full(cls, level: int) -> "ALSubgroup":
        return cls(level, factor(level).prime_powers())

    @classmethod
    def trivial(cls, level: int) -> "ALSubgroup":
        return cls(level, ())

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, d: int) -> bool:
        return d in self.elements

    def __iter__(self):
        return iter(sorted(self.elements))

    def __eq__(self, other):
        return (
            isinstance(other, ALSubgroup)
            and self.level == other.level
            and self.elements == other.elements
        )

    def __hash__(self):
        return hash((self.level, self.elements))

    def __le__(self, other: "ALSubgroup") -> bool:
        return self.level == other.level and self.elements <= other.elements

    @property
    def is_trivial(self) -> bool:
        return self.order == 1

    @property
    def is_full(self) -> bool:
        return self.order == 1 << factor(self.level).omega

    @property
    def is_fricke(self) -> bool:
        return self.elements == frozenset({1, self.level}) and self.level > 1

    def generators(self) -> tuple[int, ...]:
        """Canonical generators: greedily take elements of smallest mask."""
        gens: list[int] = []
        span = {0}
        by_mask = sorted((self._masks[d], d) for d in self.elements if d != 1)
        for m, d in by_mask:
            if m in span:
                continue
            gens.append(d)
            span |= {s ^ m for s in span}
            if len(span) == self.order:
                break
        return tuple(gens)

    def label(self) -> str:
        if self.is_trivial:
            return "1"
        return "<" + ",".join(f"w{d}" for d in self.generators()) + ">"

    def extend(self, d: int) -> "ALSubgroup":
        return ALSubgroup(self.level, tuple(self.generators()) + (d,))

    def sort_key(self):
        gens = self.generators()
        return (
            self.order,
            tuple(sorted(bin(self._masks[g]).count("1") for g in gens)),
            tuple(sorted(self._masks[g] for g in gens)),
        )


def all_subgroups(level: int) -> list[ALSubgroup]:
    """Every subgroup of B(N), sorted canonically (reference-table row order)."""
    f = factor(level)
    basis = f.prime_powers()
    nonzero = hall_divisors(level)[1:]
    seen = {}
    out = [ALSubgroup.trivial(level)]
    # dim-1 spans, then grow: subgroup lattice of a tiny F2-vector space
    frontier = [ALSubgroup(level, (d,)) for d in nonzero]
    for sub in frontier:
        seen.setdefault(sub.elements, sub)
    grow = list(seen.values())
    while grow:
        nxt = {}
        for sub in grow:
            for d in nonzero:
                if d in sub:
                    continue
                big = sub.extend(d)
                if big.elements not in seen:
                    nxt[big.elements] = big
        seen.update(nxt)
        grow = list(nxt.values())
    out.extend(seen.values())
    return sorted(out, key=ALSubgroup.sort_key)
