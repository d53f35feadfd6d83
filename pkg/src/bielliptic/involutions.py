"""Fixed-point counts and the algebra of the extra involutions of X0(N).

Besides the Atkin-Lehner involutions w_d, the normalizer of Gamma0(N)
contributes S2 (and its conjugates w_{2^a} S2 w_{2^a} and V2 = S2 w_{2^a} S2)
when 4 | N, and V3 = S3 w9 S3^2 when 9 exactly divides N.  An element here is
a word in the 2-part group <S2, w_{2^a}> (dihedral of order 8 for a >= 3,
symmetric of order 6 for a = 2), times an optional V3, times an Atkin-Lehner
tail.  Composition uses only the published commutation rules; any product
that leaves the commuting-involution framework raises OrderViolation.

All Atkin-Lehner fixed-point counts are derived from quotient genera
(2g + 2 - 4h); the counts of the extra involutions reduce to those through
conjugation and the two-commuting-involutions identity
#(uv, X) = 2#(u, X/v) - #(u, X).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import IntegrityError, OrderViolation
from .modsym import invariant_genus
from .ntheory import class_number, factor, hall_divisors, hall_product
from .x0invariants import genus_x0

_ID2 = (0, 0)
_S2W = (0, 1)
_V2W = (1, 1)


def _two_alpha(N: int) -> int:
    a = 0
    while N % 2 == 0:
        N //= 2
        a += 1
    return a


def _f_word(alpha: int):
    """The word of the plain involution w_{2^alpha} inside <S2, w_{2^alpha}>."""
    return (3, 1) if alpha >= 3 else (2, 1)


def _word_mul(w1, w2, modulus):
    k1, e1 = w1
    k2, e2 = w2
    return ((k1 + (k2 if e1 == 0 else -k2)) % modulus, (e1 + e2) % 2)


def _coprime3(n: int) -> int:
    while n % 3 == 0:
        n //= 3
    return n


@dataclass(frozen=True)
class ExtInvolution:
    """Canonical form: (word in the 2-part group) * V3^v3 * w_tail.

    ``tail`` is a Hall divisor of N not involving the 2-part when 4 | N
    (the 2-part then lives in the word); otherwise a plain Hall divisor.
    """

    level: int
    word2: tuple[int, int]
    e3: int
    tail: int

    # -- constructors --------------------------------------------------

    @classmethod
    def identity(cls, N: int) -> "ExtInvolution":
        return cls(N, _ID2, 0, 1)

    @classmethod
    def al(cls, N: int, d: int) -> "ExtInvolution":
        if d < 1 or N % d or gcd(d, N // d) != 1:
            raise ValueError(f"w{d} is not an Atkin-Lehner involution at level {N}")
        alpha = _two_alpha(N)
        if alpha >= 2 and d % 2 == 0:
            return cls(N, _f_word(alpha), 0, d >> alpha)
        return cls(N, _ID2, 0, d)

    @classmethod
    def s2(cls, N: int, r: int = 1) -> "ExtInvolution":
        cls._need_s2(N, r)
        return cls(N, _S2W, 0, r)

    @classmethod
    def s2_conj(cls, N: int, r: int = 1) -> "ExtInvolution":
        """w_{2^a} S2 w_{2^a} (times w_r); equals V2 when 4 exactly divides N."""
        cls._need_s2(N, r)
        alpha = _two_alpha(N)
        f = _f_word(alpha)
        word = _word_mul(_word_mul(f, _S2W, 4 if alpha >= 3 else 3), f,
                         4 if alpha >= 3 else 3)
        return cls(N, word, 0, r)

    @classmethod
    def v2(cls, N: int, d: int = 1) -> "ExtInvolution":
        """V2 * w_d; d may carry the full 2-part 2^alpha only when alpha >= 3."""
        alpha = _two_alpha(N)
        if alpha < 2:
            raise ValueError(f"V2 needs 4 | N, got N={N}")
        if d % 2 == 0:
            if d % (1 << alpha):
                raise ValueError(f"w{d} is not an Atkin-Lehner involution at level {N}")
            if alpha < 3:
                raise OrderViolation(
                    f"V2*w{d} has order > 2 at level {N}",
                    rule="v2-even-tail-needs-alpha-3",
                )
            r = d >> alpha
            word = (2, 0)
        else:
            r = d
            word = _V2W
        cls._need_s2(N, r)
        return cls(N, word, 0, r)

    @classmethod
    def v3(cls, N: int, d: int = 1) -> "ExtInvolution":
        if N % 9 or (N // 9) % 3 == 0:
            raise ValueError(f"V3 needs 9 || N, got N={N}")
        if d < 1 or N % d or gcd(d, N // d) != 1:
            raise ValueError(f"w{d} is not an Atkin-Lehner involution at level {N}")
        alpha = _two_alpha(N)
        word = _ID2
        if alpha >= 2 and d % 2 == 0:
            word = _f_word(alpha)
            d >>= alpha
        elem = cls(N, word, 1, d)
        if elem._al_coprime3() % 3 != 1:
            raise OrderViolation(
                f"V3*w{d if word == _ID2 else d << alpha} has order 4 at level {N}",
                rule="v3-tail-2-mod-3",
            )
        return elem

    @staticmethod
    def _need_s2(N: int, r: int):
        if N % 4:
            raise ValueError(f"S2-type involutions need 4 | N, got N={N}")
        if r < 1 or r % 2 == 0 or N % r or gcd(r, N // r) != 1:
            raise ValueError(f"w{r} is not an odd Atkin-Lehner involution at level {N}")

    # -- structure -----------------------------------------------------

    @property
    def is_identity(self) -> bool:
        return self.word2 == _ID2 and self.e3 == 0 and self.tail == 1

    def _alpha(self) -> int:
        return _two_alpha(self.level)

    def _al_part(self) -> int:
        """Full Atkin-Lehner divisor when the word is trivial or pure w_{2^a}."""
        alpha = self._alpha()
        if self.word2 == _ID2:
            return self.tail
        if alpha >= 2 and self.word2 == _f_word(alpha):
            return self.tail << alpha
        raise IntegrityError("element has a genuine S2-part")

    def _al_coprime3(self) -> int:
        return _coprime3(self._al_part())

    @property
    def kind(self) -> str:
        alpha = self._alpha()
        if self.e3:
            return "v3"
        if self.word2 == _ID2 or (alpha >= 2 and self.word2 == _f_word(alpha)):
            return "id" if self.is_identity else "al"
        if self.word2 == _S2W:
            return "s2"
        if alpha >= 3 and self.word2 == (2, 1):
            return "s2c"
        if self.word2 == _V2W or (alpha >= 3 and self.word2 == (2, 0)):
            return "v2"
        raise IntegrityError(f"unnamed word {self.word2}")

    @property
    def name(self) -> str:
        kind = self.kind
        if kind == "id":
            return "id"
        if kind == "al":
            return f"w{self._al_part()}"
        alpha = self._alpha()
        if kind == "v3":
            d = self._al_part()
            return "V3" if d == 1 else f"V3*w{d}"
        if kind == "v2":
            d = self.tail << alpha if self.word2 == (2, 0) else self.tail
            return "V2" if d == 1 else f"V2*w{d}"
        base = "S2" if kind == "s2" else "S2C"
        return base if self.tail == 1 else f"{base}*w{self.tail}"

    def sort_key(self):
        order = {"id": 0, "al": 1, "s2": 2, "s2c": 3, "v2": 4, "v3": 5}
        return (order[self.kind], self.tail, self.word2, self.e3)

    def __str__(self):
        return self.name


def parse_element(N: int, text: str) -> ExtInvolution:
    """Parse "w63", "S2", "S2C*w11", "V2*w40", "V3*w7" at the given level."""
    parts = text.strip().split("*")
    head = parts[0]
    tail = 1
    rest = parts[1:]
    if head.startswith("w"):
        if rest:
            raise ValueError(f"unexpected factor after {head!r} in {text!r}")
        return ExtInvolution.al(N, int(head[1:]))
    if rest:
        if len(rest) != 1 or not rest[0].startswith("w"):
            raise ValueError(f"cannot parse involution {text!r}")
        tail = int(rest[0][1:])
    if head == "id":
        return ExtInvolution.identity(N)
    if head == "S2":
        return ExtInvolution.s2(N, tail)
    if head == "S2C":
        return ExtInvolution.s2_conj(N, tail)
    if head == "V2":
        return ExtInvolution.v2(N, tail)
    if head == "V3":
        return ExtInvolution.v3(N, tail)
    raise ValueError(f"cannot parse involution {text!r}")


def compose(a: ExtInvolution, b: ExtInvolution) -> ExtInvolution:
    """Product of two involutions in canonical form, if it is again one.

    Raises OrderViolation when the pair does not commute under the published
    rules (the product then has order > 2) or when no rule covers the pair.
    """
    if a.level != b.level:
        raise ValueError("cannot compose involutions of different levels")
    N = a.level
    alpha = _two_alpha(N)
    modulus = 4 if alpha >= 3 else 3
    fword = _f_word(alpha) if alpha >= 2 else None
    eps2 = 1 if alpha >= 2 and (1 << alpha) % 3 == 2 else 0

    twist = 0
    if a.e3 and b.word2 != _ID2:
        if b.word2 != fword:
            raise OrderViolation(
                f"no composition rule for {b.name} across V3 (level {N})",
                rule="s2-v3-mix",
            )
        twist ^= eps2
    if b.e3 and _coprime3(a.tail) % 3 == 2:
        twist ^= 1
    word = _word_mul(a.word2, b.word2, modulus) if alpha >= 2 else _ID2
    if alpha < 2 and (a.word2 != _ID2 or b.word2 != _ID2):
        raise IntegrityError("2-part word at a level with 4 not dividing N")
    v3 = (a.e3 + b.e3) % 2
    tail = hall_product(a.tail, b.tail)
    if twist:
        if N % 9:
            raise IntegrityError("w9 twist outside a 9 || N level")
        tail = hall_product(tail, 9)

    # validity of the resulting word
    if word != _ID2 and word[1] == 0 and not (word == (2, 0) and alpha >= 3):
        raise OrderViolation(
            f"{a.name} * {b.name} has order > 2 at level {N}",
            rule="two-part-rotation",
        )
    result = ExtInvolution(N, word, v3, tail)
    if v3:
        if word not in (_ID2, fword):
            raise OrderViolation(
                f"{a.name} * {b.name} mixes an S2-part with V3 (level {N})",
                rule="s2-v3-mix",
            )
        if result._al_coprime3() % 3 != 1:
            raise OrderViolation(
                f"{a.name} * {b.name} has order 4 at level {N}",
                rule="v3-tail-2-mod-3",
            )
    return result


@dataclass(frozen=True)
class InvolutionGroup:
    """Closed set of commuting involutions plus the identity."""

    level: int
    elements: frozenset[ExtInvolution]

    @property
    def order(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(sorted(self.elements, key=ExtInvolution.sort_key))

    def nontrivial(self):
        return [e for e in self if not e.is_identity]

    def names(self) -> tuple[str, ...]:
        return tuple(e.name for e in self)


def group_closure(N: int, generators) -> InvolutionGroup:
    """Close a generator list under composition; all elements must be involutions."""
    elems = {ExtInvolution.identity(N)}
    for g in generators:
        if isinstance(g, str):
            g = parse_element(N, g)
        elif isinstance(g, int):
            g = ExtInvolution.al(N, g)
        if g.level != N:
            raise ValueError("generator level mismatch")
        elems.add(g)
    changed = True
    while changed:
        changed = False
        for a in list(elems):
            for b in list(elems):
                try:
                    c = compose(a, b)
                except OrderViolation as exc:
                    raise OrderViolation(
                        f"<{', '.join(sorted(e.name for e in elems if not e.is_identity))}> "
                        f"is not an involution group: {exc}",
                        rule=exc.rule,
                    ) from exc
                if c not in elems:
                    elems.add(c)
                    changed = True
        if len(elems) > 64:
            raise OrderViolation("closure did not terminate", rule="runaway-closure")
    if len(elems) & (len(elems) - 1):
        raise IntegrityError(f"closure of order {len(elems)} is not a 2-group")
    return InvolutionGroup(N, frozenset(elems))


# -- fixed-point counts ------------------------------------------------


def fix_al(N: int, Q: int) -> int:
    """#(w_Q, X0(N)) from the genus drop: 2g + 2 - 4 * g(X0(N)/w_Q)."""
    if Q <= 1 or N % Q or gcd(Q, N // Q) != 1:
        raise ValueError(f"need a Hall divisor Q > 1 of {N}, got {Q}")
    count = 2 * genus_x0(N) + 2 - 4 * invariant_genus(N, (Q,))
    if count < 0:
        raise IntegrityError(f"negative fixed-point count for w_{Q} at level {N}")
    return count


def fix_al_classnumber_crosscheck(N: int) -> int:
    """Class-number form of #(w_N, X0(N)) for squarefree N > 3.

    h(-4N), plus h(-N) when N = 3 (mod 4); must agree with fix_al(N, N).
    """
    fac = factor(N)
    if not fac.is_squarefree:
        raise ValueError(f"class-number crosscheck needs squarefree N, got {N}")
    if N <= 3:
        raise ValueError("crosscheck defined for N > 3")
    count = class_number(-4 * N)
    if N % 4 == 3:
        count += class_number(-N)
    return count


def fix_s2(N: int) -> int:
    """#(S2, X0(N)) = (2g(N) - 2) - 2(2g(N/2) - 2); also the count of its conjugate."""
    if N % 4:
        raise ValueError(f"S2 needs 4 | N, got {N}")
    return (2 * genus_x0(N) - 2) - 2 * (2 * genus_x0(N // 2) - 2)


def fix_s2_wr(N: int, r: int) -> int:
    """#(S2 w_r, X0(N)) = 2 #(w_r, X0(N/2)) - #(w_r, X0(N)) for odd r || N."""
    if N % 4:
        raise ValueError(f"S2 needs 4 | N, got {N}")
    if r == 1:
        return fix_s2(N)
    if r % 2 == 0 or N % r or gcd(r, N // r) != 1:
        raise ValueError(f"need an odd Hall divisor of {N}, got {r}")
    count = 2 * fix_al(N // 2, r) - fix_al(N, r)
    if count < 0:
        raise IntegrityError(f"negative count for S2*w{r} at level {N}")
    return count


def fix_v2(N: int, r: int = 1) -> int:
    """#(V2 w_r, X0(N)) = #(w_{2^a} w_r, X0(N)) for odd r || N (or r = 1)."""
    if N % 4:
        raise ValueError(f"V2 needs 4 | N, got {N}")
    if r != 1 and (r % 2 == 0 or N % r or gcd(r, N // r) != 1):
        raise ValueError(f"need an odd Hall divisor of {N}, got {r}")
    return fix_al(N, r << _two_alpha(N))


def fix_v2_w2a(N: int, r: int = 1) -> int:
    """#(V2 w_{2^a} w_r, X0(N)) = 2 #(S2 w_r, X0(N/2)) - #(S2 w_r, X0(N)).

    Needs 2^a || N with a >= 3; for a = 2 the element V2 w_4 has order 3.
    """
    alpha = _two_alpha(N)
    if alpha < 3:
        raise OrderViolation(
            f"V2*w{1 << alpha} has order > 2 when 2^{alpha} || N",
            rule="v2-even-tail-needs-alpha-3",
        )
    count = 2 * fix_s2_wr(N // 2, r) - fix_s2_wr(N, r)
    if count < 0:
        raise IntegrityError(f"negative count for V2*w{(1 << alpha) * r} at level {N}")
    return count


def fix_v3(N: int, d: int = 1) -> int:
    """#(V3 w_d, X0(N)) = #(w_9 w_r, X0(N)) where r is the prime-to-3 part of d.

    Defined when r = 1 (mod 3); for r = 2 (mod 3) the element has order 4.
    """
    if N % 9 or (N // 9) % 3 == 0:
        raise ValueError(f"V3 needs 9 || N, got N={N}")
    if d < 1 or N % d or gcd(d, N // d) != 1:
        raise ValueError(f"need a Hall divisor of {N}, got {d}")
    r = _coprime3(d)
    if r % 3 == 2:
        raise OrderViolation(f"V3*w{d} has order 4 at level {N}", rule="v3-tail-2-mod-3")
    return fix_al(N, hall_product(9, r))


def fix_count(elem: ExtInvolution) -> int:
    """Fixed points of a canonical extended involution on X0(N)."""
    N = elem.level
    kind = elem.kind
    if kind == "id":
        raise ValueError("the identity has no fixed-point count")
    if kind == "al":
        return fix_al(N, elem._al_part())
    if kind in ("s2", "s2c"):
        return fix_s2_wr(N, elem.tail) if elem.tail > 1 else fix_s2(N)
    if kind == "v2":
        if elem.word2 == (2, 0):
            return fix_v2_w2a(N, elem.tail)
        return fix_v2(N, elem.tail)
    # v3: the tail may carry the 2-part through the word
    return fix_v3(N, elem._al_part())


def quotient_genus_hurwitz(N: int, group) -> int:
    """Genus of X0(N)/G for a closed group of commuting involutions.

    Solves |G| (2h - 2) + sum of fixed points = 2 g(X0(N)) - 2 exactly;
    a non-integral solution means a wrong count somewhere and raises.
    """
    if isinstance(group, InvolutionGroup):
        G = group
    else:
        G = group_closure(N, group)
    if G.level != N:
        raise ValueError("group level mismatch")
    total = sum(fix_count(e) for e in G.nontrivial())
    rhs = 2 * genus_x0(N) - 2 - total
    if rhs % (2 * G.order):
        raise IntegrityError(
            f"Hurwitz count not integral for {G.names()} at level {N}"
        )
    h = rhs // (2 * G.order) + 1
    if h < 0:
        raise IntegrityError(f"negative quotient genus for {G.names()} at level {N}")
    return h


# -- tables -------------------------------------------------------------


def fix_table(N: int) -> list[tuple[str, int]]:
    """All computable fixed-point counts at one level, canonically ordered."""
    entries: list[tuple[ExtInvolution, int]] = []
    for d in hall_divisors(N)[1:]:
        entries.append((ExtInvolution.al(N, d), fix_al(N, d)))
    alpha = _two_alpha(N)
    if alpha >= 2:
        odd = [r for r in hall_divisors(N) if r % 2]
        for r in odd:
            entries.append((ExtInvolution.s2(N, r), fix_s2_wr(N, r) if r > 1 else fix_s2(N)))
        for r in odd:
            entries.append((ExtInvolution.v2(N, r), fix_v2(N, r)))
        if alpha >= 3:
            for r in odd:
                entries.append((ExtInvolution.v2(N, r << alpha), fix_v2_w2a(N, r)))
    if N % 9 == 0 and (N // 9) % 3:
        for d in hall_divisors(N):
            if _coprime3(d) % 3 == 1:
                entries.append((ExtInvolution.v3(N, d), fix_v3(N, d)))
    entries.sort(key=lambda pair: pair[0].sort_key())
    return [(e.name, c) for e, c in entries]


def fix_table_tsv(N: int) -> str:
    lines = ["element\tcount"]
    lines += [f"{name}\t{count}" for name, count in fix_table(N)]
    return "\n".join(lines)
