"""Weight-2 modular symbols for Gamma0(N) over exact rationals.

The space is presented by Manin symbols indexed by P^1(Z/N).  The two-term
relation x + x.sigma = 0 is eliminated by pairing, the three-term relation
x + x.tau + x.tau^2 = 0 by sparse integer Gaussian elimination, so every
generator gets an exact rational expression in a free basis.  The cuspidal
subspace is the kernel of the boundary map to cusp classes; its dimension is
2*genus, which the builder asserts.

Atkin-Lehner operators act through a determinant-Q witness matrix; a general
path {a, b} is converted back to Manin symbols with the continued-fraction
convergent chain.  Quotient genera come from the trace formula
dim V^W = (1/|W|) * sum of traces, which for an elementary abelian 2-group
is the same subspace the +1-eigenspace intersection of the generators cuts
out.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import NamedTuple

from .errors import IntegrityError
from .ntheory import ALSubgroup, egcd, hall_divisors, psi
from .x0invariants import cusp_count, genus_x0


class P1Element(NamedTuple):
    """Canonical representative of a point of P^1(Z/N)."""

    c: int
    d: int


def _units(N: int) -> list[int]:
    return [u for u in range(1, N) if gcd(u, N) == 1] if N > 1 else [1]


def p1_normalize(N: int, c: int, d: int) -> P1Element:
    """Canonical representative: lexicographic minimum of the unit-scaling orbit."""
    if N == 1:
        return P1Element(0, 1)
    c %= N
    d %= N
    if gcd(gcd(c, d), N) != 1:
        raise ValueError(f"({c}:{d}) is not a point of P1(Z/{N})")
    best = (c, d)
    for u in _units(N):
        cand = ((u * c) % N, (u * d) % N)
        if cand < best:
            best = cand
    return P1Element(*best)


def p1_enumerate(N: int) -> list[P1Element]:
    """All psi(N) canonical representatives, ascending."""
    return list(build_space(N).reps)


def _cusp_normalize(p: int, q: int) -> tuple[int, int]:
    g = gcd(p, q)
    if g:
        p, q = p // g, q // g
    if q < 0:
        p, q = -p, -q
    if q == 0:
        p = 1
    return p, q


def cusp_equiv(N: int, c1: tuple[int, int], c2: tuple[int, int]) -> bool:
    """Gamma0(N)-equivalence of cusps p1/q1 and p2/q2 (reduced fractions)."""
    p1, q1 = c1
    p2, q2 = c2
    _, s1, _ = egcd(p1, q1)
    _, s2, _ = egcd(p2, q2)
    m = gcd(q1 * q2, N)
    if m == 0:
        m = N
    return (s1 * q2 - s2 * q1) % m == 0


def _sl2_lift(c: int, d: int) -> tuple[int, int, int, int]:
    """Complete a coprime bottom row (c, d) to [[a, b], [c, d]] in SL2(Z)."""
    g, x, y = egcd(c, d)
    if g != 1:
        raise IntegrityError(f"bottom row ({c},{d}) not coprime")
    return y, -x, c, d


def _reduce_int_row(row: dict) -> dict:
    row = {k: v for k, v in row.items() if v}
    if not row:
        return row
    g = 0
    for v in row.values():
        g = gcd(g, abs(v))
    if g > 1:
        row = {k: v // g for k, v in row.items()}
    if row[min(row)] < 0:
        row = {k: -v for k, v in row.items()}
    return row


def _int_rref(rows) -> dict:
    """Sparse reduced echelon form over Z; returns {pivot column: row dict}.

    Rows are gcd-normalized with positive pivots, pivot columns eliminated
    from every other row, so the result is basis-independent data.
    """
    pivots: dict[int, dict] = {}
    for row in rows:
        row = dict(row)
        while True:
            row = {k: v for k, v in row.items() if v}
            if not row:
                break
            lead = min(row)
            piv = pivots.get(lead)
            if piv is None:
                break
            a, b = piv[lead], row[lead]
            row = {
                k: a * row.get(k, 0) - b * piv.get(k, 0)
                for k in set(row) | set(piv)
            }
        if row:
            pivots[min(row)] = _reduce_int_row(row)
    for col in sorted(pivots, reverse=True):
        piv = pivots[col]
        for col2, row2 in list(pivots.items()):
            if col2 == col or col not in row2:
                continue
            a, b = piv[col], row2[col]
            new = {
                k: a * row2.get(k, 0) - b * piv.get(k, 0)
                for k in set(row2) | set(piv)
            }
            pivots[col2] = _reduce_int_row(new)
    return pivots


class ModSymSpace:
    """Built modular-symbols data for one level.  Immutable once constructed."""

    def __init__(self, N: int):
        if N < 1:
            raise ValueError("level must be positive")
        self.N = N
        self.genus = genus_x0(N)
        self.nu_inf = cusp_count(N)
        self._build()
        self._trace_cache: dict[int, int] = {}
        self._trace_lock = threading.Lock()

    # -- construction -------------------------------------------------

    def _build(self):
        N = self.N
        units = _units(N)
        pairmap: dict[tuple[int, int], int] = {}
        reps: list[P1Element] = []
        if N == 1:
            reps = [P1Element(0, 1)]
        else:
            for c in range(N):
                for d in range(N):
                    if (c, d) in pairmap:
                        continue
                    if gcd(gcd(c, d), N) != 1:
                        continue
                    orbit = [((u * c) % N, (u * d) % N) for u in units]
                    idx = len(reps)
                    reps.append(P1Element(*min(orbit)))
                    for pair in orbit:
                        pairmap[pair] = idx
        self.reps = tuple(reps)
        self._units = tuple(units)
        n = len(reps)
        if n != psi(N):
            raise IntegrityError(f"P1(Z/{N}) has {n} points, expected psi = {psi(N)}")
        self._rep_index = {rep: i for i, rep in enumerate(reps)}

        def look(c, d):
            if N == 1:
                return 0
            return pairmap[(c % N, d % N)]

        # two-term relation: identify x.sigma with -x, sigma: (c,d) -> (d,-c)
        part: dict[int, tuple[int, int]] = {}
        for i, (c, d) in enumerate(reps):
            if i in part:
                continue
            j = look(d, -c)
            if j == i:
                part[i] = (0, i)
            else:
                part[i] = (1, i)
                part[j] = (-1, i)
        # three-term relation rows over the paired coordinates,
        # tau: (c,d) -> (d, -c-d)
        rows = []
        seen = [False] * n
        for i in range(n):
            if seen[i]:
                continue
            c, d = reps[i]
            j = look(d, -c - d)
            k = look(-c - d, c)
            row: dict[int, int] = {}
            for m in (i, j, k):
                seen[m] = True
                s, col = part[m]
                if s:
                    row[col] = row.get(col, 0) + s
            row = {c2: v for c2, v in row.items() if v}
            if row:
                rows.append(row)
        pivots = _int_rref(rows)

        kept = sorted({part[i][1] for i in range(n) if part[i][0]})
        free = [c for c in kept if c not in pivots]
        self.free = tuple(free)
        self.dim = len(free)
        expected = 2 * self.genus + self.nu_inf - 1
        if self.dim != expected:
            raise IntegrityError(
                f"level {N}: modular-symbols dimension {self.dim} != {expected}"
            )

        expr_col: dict[int, dict[int, Fraction]] = {c: {c: Fraction(1)} for c in free}
        for c, row in pivots.items():
            p = row[c]
            expr_col[c] = {k: Fraction(-v, p) for k, v in row.items() if k != c}
        expr: list[dict[int, Fraction]] = []
        for i in range(n):
            s, col = part[i]
            if s == 0:
                expr.append({})
            elif s == 1:
                expr.append(expr_col[col])
            else:
                expr.append({k: -v for k, v in expr_col[col].items()})
        self.expr = tuple(expr)

        # boundary map on the free generators and its kernel
        cusp_reps: list[tuple[int, int]] = []

        def cusp_index(p, q):
            p, q = _cusp_normalize(p, q)
            for k2, known in enumerate(cusp_reps):
                if cusp_equiv(N, (p, q), known):
                    return k2
            cusp_reps.append((p, q))
            return len(cusp_reps) - 1

        brows: dict[int, dict[int, int]] = {}
        for c in free:
            a, b, cc, dd = _sl2_lift(*reps[c])
            i1 = cusp_index(a, cc)
            i2 = cusp_index(b, dd)
            if i1 != i2:
                r1 = brows.setdefault(i1, {})
                r1[c] = r1.get(c, 0) + 1
                r2 = brows.setdefault(i2, {})
                r2[c] = r2.get(c, 0) - 1
        self._boundary_rows = tuple(
            tuple(sorted(r.items())) for r in brows.values() if r
        )
        bpivots = _int_rref(brows.values())
        self.boundary_rank = len(bpivots)

        basis = []
        for f in [c for c in free if c not in bpivots]:
            touching = [(c2, row) for c2, row in bpivots.items() if f in row]
            scale = 1
            for c2, row in touching:
                scale = lcm(scale, row[c2])
            vec = {f: scale}
            for c2, row in touching:
                vec[c2] = -row[f] * (scale // row[c2])
            basis.append((f, _reduce_int_row(vec)))
        self.cuspidal_basis = tuple(basis)
        if len(basis) != 2 * self.genus:
            raise IntegrityError(
                f"level {N}: cuspidal dimension {len(basis)} != 2*genus = {2 * self.genus}"
            )

    # -- symbol plumbing ----------------------------------------------

    def p1_index(self, c: int, d: int) -> int:
        N = self.N
        if N == 1:
            return 0
        c %= N
        d %= N
        best = (c, d)
        for u in self._units:
            cand = ((u * c) % N, (u * d) % N)
            if cand < best:
                best = cand
        return self._rep_index[P1Element(*best)]

    def _manin_path(self, i: int) -> tuple[tuple[int, int], tuple[int, int]]:
        """Endpoints {b/d, a/c} of the modular symbol of generator i."""
        a, b, c, d = _sl2_lift(*self.reps[i])
        return _cusp_normalize(b, d), _cusp_normalize(a, c)

    def symbols_from_infinity(self, p: int, q: int) -> list[int]:
        """Manin generator indices (coefficient +1 each) expressing {oo, p/q}."""
        if q == 0:
            return []
        if q < 0:
            p, q = -p, -q
        quotients = []
        pp, qq = p, q
        while qq:
            a = pp // qq
            quotients.append(a)
            pp, qq = qq, pp - a * qq
        out = []
        qm2, qm1 = 1, 0  # convergent denominators q_{-2}, q_{-1}
        for k, a in enumerate(quotients):
            qk = a * qm1 + qm2
            sign = 1 if (k - 1) % 2 == 0 else -1
            out.append(self.p1_index(qk, sign * qm1))
            qm2, qm1 = qm1, qk
        return out

    def path_vector(self, start, end, restrict=None) -> dict[int, Fraction]:
        """The class of {start, end} in free coordinates; cusps are (p, q) pairs."""
        vec: dict[int, Fraction] = {}
        for sgn, cusp in ((-1, start), (1, end)):
            for idx in self.symbols_from_infinity(*cusp):
                for col, v in self.expr[idx].items():
                    if restrict is not None and col not in restrict:
                        continue
                    vec[col] = vec.get(col, Fraction(0)) + sgn * v
        return {col: v for col, v in vec.items() if v}

    # -- Atkin-Lehner action ------------------------------------------

    def al_matrix(self, Q: int) -> tuple[int, int, int, int]:
        """Determinant-Q witness of shape (Q*a, b; N*c, Q*d), smallest |b| then |c|."""
        N = self.N
        if N % Q or gcd(Q, N // Q) != 1:
            raise ValueError(f"{Q} is not a Hall divisor of {N}")
        if Q == 1:
            return (1, 0, 0, 1)
        if Q == N:
            return (0, -1, N, 0)
        M = N // Q
        _, x, y = egcd(Q, M)  # Q*x + M*y = 1
        y %= Q
        if abs(y - Q) < y:
            y -= Q
        x = (1 - M * y) // Q
        return (Q * x, -y, N, Q)

    @staticmethod
    def _moebius(mat, cusp):
        a, b, c, d = mat
        p, q = cusp
        return _cusp_normalize(a * p + b * q, c * p + d * q)

    def _al_columns(self, Q: int, restrict=None) -> dict[int, dict[int, Fraction]]:
        mat = self.al_matrix(Q)
        cols = {}
        for c in self.free:
            start, end = self._manin_path(c)
            cols[c] = self.path_vector(
                self._moebius(mat, start), self._moebius(mat, end), restrict=restrict
            )
        return cols

    def al_trace_cuspidal(self, Q: int) -> int:
        """Trace of w_Q on the cuspidal subspace (exact integer)."""
        if Q == 1:
            return 2 * self.genus
        with self._trace_lock:
            if Q in self._trace_cache:
                return self._trace_cache[Q]
        needed = {f for f, _ in self.cuspidal_basis}
        cols = self._al_columns(Q, restrict=needed)
        tr = Fraction(0)
        for f, vec in self.cuspidal_basis:
            num = Fraction(0)
            for c, v in vec.items():
                col = cols[c]
                if f in col:
                    num += v * col[f]
            tr += num / vec[f]
        if tr.denominator != 1:
            raise IntegrityError(f"non-integral trace for w_{Q} at level {self.N}")
        with self._trace_lock:
            self._trace_cache.setdefault(Q, int(tr))
        return int(tr)

    def boundary_of(self, vec: dict[int, Fraction]) -> bool:
        """Whether a free-coordinate vector lies in the cuspidal subspace."""
        for row in self._boundary_rows:
            total = Fraction(0)
            for col, a in row:
                if col in vec:
                    total += a * vec[col]
            if total:
                return False
        return True


_CACHE: dict[int, ModSymSpace] = {}
_CACHE_LOCK = threading.Lock()


def build_space(N: int) -> ModSymSpace:
    """Build (or fetch the cached) space for one level."""
    space = _CACHE.get(N)
    if space is None:
        space = ModSymSpace(N)
        with _CACHE_LOCK:
            space = _CACHE.setdefault(N, space)
    return space


def clear_cache() -> None:
    with _CACHE_LOCK:
        _CACHE.clear()


def cusp_classes(N: int) -> list[list[tuple[int, int]]]:
    """Partition of all boundary cusps of the Manin generators into classes."""
    space = build_space(N)
    classes: list[list[tuple[int, int]]] = []
    for i in range(len(space.reps)):
        start, end = space._manin_path(i)
        for cusp in (start, end):
            for cls in classes:
                if cusp_equiv(N, cusp, cls[0]):
                    if cusp not in cls:
                        cls.append(cusp)
                    break
            else:
                classes.append([cusp])
    if len(classes) != cusp_count(N):
        raise IntegrityError(
            f"level {N}: found {len(classes)} cusp classes, expected {cusp_count(N)}"
        )
    return [sorted(cls) for cls in classes]


@dataclass(frozen=True)
class ALOperator:
    """Exact action of w_Q on the cuspidal basis of one level."""

    level: int
    Q: int
    matrix_entries: tuple[int, int, int, int]
    action: tuple[tuple[Fraction, ...], ...]

    def trace(self) -> int:
        tr = sum(self.action[i][i] for i in range(len(self.action)))
        return int(tr)


def _action_on_basis(space: ModSymSpace, cols) -> list[list[Fraction]]:
    basis = space.cuspidal_basis
    k = len(basis)
    mat = [[Fraction(0)] * k for _ in range(k)]
    for j, (_, bvec) in enumerate(basis):
        img: dict[int, Fraction] = {}
        for c, v in bvec.items():
            for col2, w in cols[c].items():
                img[col2] = img.get(col2, Fraction(0)) + v * w
        img = {c2: v for c2, v in img.items() if v}
        if not space.boundary_of(img):
            raise IntegrityError("operator image left the cuspidal subspace")
        residual = dict(img)
        for i, (f, bvec2) in enumerate(basis):
            coef = Fraction(img.get(f, 0), bvec2[f])
            mat[i][j] = coef
            if coef:
                for c2, v in bvec2.items():
                    residual[c2] = residual.get(c2, Fraction(0)) - coef * v
        if any(residual.values()):
            raise IntegrityError("cuspidal image not in the kernel basis span")
    return mat


def al_operator(space_or_level, Q: int) -> ALOperator:
    """Full exact matrix of w_Q on the cuspidal basis; asserts it is an involution."""
    space = (
        space_or_level
        if isinstance(space_or_level, ModSymSpace)
        else build_space(space_or_level)
    )
    cols = space._al_columns(Q)
    mat = _action_on_basis(space, cols)
    k = len(mat)
    for i in range(k):
        for j in range(k):
            val = sum(mat[i][t] * mat[t][j] for t in range(k))
            if val != (1 if i == j else 0):
                raise IntegrityError(
                    f"w_{Q} at level {space.N} does not square to the identity"
                )
    action = tuple(tuple(row) for row in mat)
    return ALOperator(space.N, Q, space.al_matrix(Q), action)


def _subgroup_elements(N: int, W) -> ALSubgroup:
    if isinstance(W, ALSubgroup):
        if W.level != N:
            raise ValueError("subgroup level mismatch")
        return W
    return ALSubgroup(N, tuple(W))


def invariant_genus(N: int, W=()) -> int:
    """Genus of X0(N)/W for an Atkin-Lehner subgroup W.

    Computed as half the dimension of the simultaneous +1-eigenspace of W on
    the cuspidal subspace; the dimension itself comes from the averaged trace
    over the (abelian, exponent-2) subgroup, which is the same number.
    """
    sub = _subgroup_elements(N, W)
    space = build_space(N)
    total = 0
    for q in sub:
        total += space.al_trace_cuspidal(q)
    dim, rem = divmod(total, sub.order)
    if rem:
        raise IntegrityError(f"invariant dimension non-integral at N={N}, W={sub.label()}")
    if dim % 2:
        raise IntegrityError(f"odd invariant dimension at N={N}, W={sub.label()}")
    return dim // 2


def invariant_genus_eigenspace(N: int, W=()) -> int:
    """Same genus via explicit intersection of +1-eigenspaces of generators.

    Slower; retained as an independent route for cross-checking.
    """
    sub = _subgroup_elements(N, W)
    space = build_space(N)
    k = 2 * space.genus
    rows = []
    for g in sub.generators():
        op = al_operator(space, g)
        for i in range(k):
            row = {j: op.action[i][j] - (1 if i == j else 0) for j in range(k)}
            den = lcm(*(v.denominator for v in row.values()), 1)
            rows.append({j: int(v * den) for j, v in row.items() if v})
    pivots = _int_rref(rows)
    dim = k - len(pivots)
    if dim % 2:
        raise IntegrityError("odd eigenspace dimension")
    return dim // 2


def space_report(N: int) -> str:
    """Debug dump: one key=value per line, stable key order."""
    space = build_space(N)
    lines = [
        f"level={N}",
        f"psi={psi(N)}",
        f"manin_generators={len(space.reps)}",
        f"dim_modular_symbols={space.dim}",
        f"cusp_classes={space.nu_inf}",
        f"boundary_rank={space.boundary_rank}",
        f"cuspidal_dim={len(space.cuspidal_basis)}",
        f"genus={space.genus}",
    ]
    for q in hall_divisors(N)[1:]:
        lines.append(f"trace_w{q}={space.al_trace_cuspidal(q)}")
    return "\n".join(lines)
