"""Classification driver: enumerate the quotient pairs, screen, confirm, report.

A pair is a level N (non-squarefree, not a prime power, admitted by the level
gate) together with a proper nontrivial Atkin-Lehner subgroup, different from
the Fricke subgroup, whose quotient has genus at least 2.  Each pair ends in
exactly one terminal status:

* ``bielliptic-confirmed``: an explicit commuting-involution group with
  Hurwitz quotient genus 1 was exhibited (possibly after the w4-reduction);
* ``excluded``: a sound rule fired, recorded in the rule trace;
* ``adjudicated``: the mechanical rules are silent and the verdict is taken
  from the adjudication table, which cites the method that settles it.

The driver never consults the expected classification; the regression data
lives in selftest helpers only.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from . import _data
from .errors import DataError, IntegrityError, OrderViolation
from .involutions import (
    ExtInvolution,
    InvolutionGroup,
    fix_table,
    group_closure,
    quotient_genus_hurwitz,
)
from .modsym import invariant_genus
from .ntheory import ALSubgroup, all_subgroups, factor, hall_divisors
from .screening import (
    RuleResult,
    gate_levels,
    iso_reduce_w4,
    rule_castelnuovo,
    rule_fixed_point_closure,
    rule_many_fixed_points,
    rule_ogg_bound,
    rule_two_group,
    rule_unramified_cover,
    star_gate,
)
from .x0invariants import genus_x0

RATIONAL = "Q"
SQRT_MINUS_3 = "Q(sqrt(-3))"


# ---------------------------------------------------------------------------
# external data


@dataclass(frozen=True)
class ECRecord:
    label: str
    conductor: int
    rank: int
    modular_degree: int | None


def ingest_ec_table(source) -> dict[str, ECRecord]:
    """Parse a curve table: "label conductor rank degree" per line, '-' for
    an absent degree, '#' comments.  Rejects duplicate labels."""
    if isinstance(source, str):
        lines = source.splitlines()
    else:
        lines = [ln.rstrip("\n") for ln in source]
    out: dict[str, ECRecord] = {}
    for lineno, raw in enumerate(lines, start=1):
        text = raw.split("#", 1)[0].strip()
        if not text:
            continue
        parts = text.split()
        if len(parts) != 4:
            raise DataError(f"expected 4 fields, got {len(parts)}: {raw!r}", line=lineno)
        label, cond_s, rank_s, deg_s = parts
        try:
            conductor = int(cond_s)
            rank = int(rank_s)
            degree = None if deg_s == "-" else int(deg_s)
        except ValueError as exc:
            raise DataError(f"bad integer field in {raw!r}", line=lineno) from exc
        if conductor < 11:
            raise DataError(f"conductor {conductor} below 11", line=lineno)
        if rank < 0 or (degree is not None and degree < 1):
            raise DataError(f"bad rank/degree in {raw!r}", line=lineno)
        if label in out:
            raise DataError(f"duplicate label {label}", line=lineno)
        out[label] = ECRecord(label, conductor, rank, degree)
    return out


def default_ec_table() -> dict[str, ECRecord]:
    return ingest_ec_table(_data.EC_TABLE_TEXT)


def _parse_gens(text: str) -> tuple[int, ...]:
    gens = []
    for tok in text.split(","):
        tok = tok.strip()
        if not tok.startswith("w"):
            raise DataError(f"bad generator token {tok!r}")
        gens.append(int(tok[1:]))
    return tuple(gens)


def ingest_adjudications(source) -> dict:
    """Parse adjudicated verdicts: "N;generators;verdict;citation" per line."""
    if isinstance(source, str):
        lines = source.splitlines()
    else:
        lines = [ln.rstrip("\n") for ln in source]
    out = {}
    for lineno, raw in enumerate(lines, start=1):
        text = raw.split("#", 1)[0].strip()
        if not text:
            continue
        parts = text.split(";", 3)
        if len(parts) != 4:
            raise DataError(f"expected 4 ';'-fields: {raw!r}", line=lineno)
        N = int(parts[0])
        sub = ALSubgroup(N, _parse_gens(parts[1]))
        verdict = parts[2].strip()
        if verdict not in ("not-bielliptic", "bielliptic-over-Q", "bielliptic-over-Q(sqrt(-3))"):
            raise DataError(f"unknown verdict {verdict!r}", line=lineno)
        key = (N, sub.elements)
        if key in out:
            raise DataError(f"duplicate adjudication for {N}, {sub.label()}", line=lineno)
        out[key] = (verdict, parts[3].strip())
    return out


def default_adjudications() -> dict:
    return ingest_adjudications(_data.ADJUDICATIONS_TEXT)


def _pair_key(N: int, gens) -> tuple[int, frozenset]:
    return N, ALSubgroup(N, gens).elements


def _normalized(table: dict) -> dict:
    return {_pair_key(N, gens): val for (N, gens), val in table.items()}


_HYPER_KEYS = None
_WITNESS_DATA = None


def hyperelliptic_pairs() -> dict:
    global _HYPER_KEYS
    if _HYPER_KEYS is None:
        _HYPER_KEYS = _normalized(_data.HYPERELLIPTIC_TABLE)
    return _HYPER_KEYS


def witness_annotations() -> dict:
    global _WITNESS_DATA
    if _WITNESS_DATA is None:
        _WITNESS_DATA = _normalized(_data.WITNESS_TABLE)
    return _WITNESS_DATA


# ---------------------------------------------------------------------------
# pair enumeration


def scope_levels() -> list[int]:
    """Levels admitted by the gate, minus the four-prime level 420."""
    return [N for N in gate_levels() if N != 420]


def enumerate_pairs() -> list[tuple[int, ALSubgroup]]:
    """All (N, W) with 1 < W < B(N), W not the Fricke subgroup, genus >= 2."""
    pairs = []
    for N in scope_levels():
        if genus_x0(N) < 2:
            continue
        for sub in all_subgroups(N):
            if sub.is_trivial or sub.is_full or sub.is_fricke:
                continue
            if invariant_genus(N, sub) < 2:
                continue
            pairs.append((N, sub))
    return pairs


# ---------------------------------------------------------------------------
# witness search


@dataclass(frozen=True)
class Witness:
    """An exhibited bielliptic involution, possibly at a reduced level."""

    level: int
    element: ExtInvolution
    group: InvolutionGroup
    field: str
    chain: tuple[tuple[int, str], ...] = ()

    @property
    def family(self) -> str:
        return "red" if self.chain else self.element.kind

    def describe(self) -> str:
        head = f"{self.element.name}@{self.level}" if self.chain else self.element.name
        via = "".join(f" via {lab}@{n}" for n, lab in self.chain)
        return head + via


def _candidate_involutions(N: int, sub: ALSubgroup) -> list[ExtInvolution]:
    seen: dict[ExtInvolution, None] = {}
    for d in hall_divisors(N)[1:]:
        if d in sub:
            continue
        seen.setdefault(ExtInvolution.al(N, d))
    if N % 4 == 0:
        odd = [r for r in hall_divisors(N) if r % 2]
        alpha = factor(N).valuation(2)
        for ctor in (ExtInvolution.s2, ExtInvolution.s2_conj, ExtInvolution.v2):
            for r in odd:
                seen.setdefault(ctor(N, r))
        if alpha >= 3:
            for r in odd:
                seen.setdefault(ExtInvolution.v2(N, r << alpha))
    if N % 9 == 0 and (N // 9) % 3:
        for d in hall_divisors(N):
            try:
                seen.setdefault(ExtInvolution.v3(N, d))
            except OrderViolation:
                continue
    return list(seen)


def _search(N: int, sub: ALSubgroup):
    """Try every candidate; return (witness or None, refutation list).

    A refutation records (element, group, quotient genus) for every candidate
    that does induce an involution on the quotient but is not bielliptic.
    """
    gens = list(sub.generators())
    refuted = []
    seen_groups = set()
    witness = None
    for v in _candidate_involutions(N, sub):
        try:
            G = group_closure(N, gens + [v])
        except OrderViolation:
            continue
        if G.elements in seen_groups:
            continue
        seen_groups.add(G.elements)
        h = quotient_genus_hurwitz(N, G)
        if h == 1 and witness is None:
            field = RATIONAL
            if v.kind == "v3" and 9 not in sub:
                field = SQRT_MINUS_3
            witness = Witness(N, v, G, field)
        else:
            refuted.append((v, G, h))
    return witness, refuted


def confirm_bielliptic(N: int, W, _depth: int = 0) -> Witness | None:
    """Find a commuting-involution group over W with quotient genus exactly 1.

    Candidates run over the Atkin-Lehner involutions outside W and the
    normalizer families available at the level; if nothing is found and the
    w4-reduction applies, the search continues at the reduced level.
    """
    sub = W if isinstance(W, ALSubgroup) else ALSubgroup(N, W)
    witness, _ = _search(N, sub)
    if witness is not None:
        return witness
    red = iso_reduce_w4(N, sub)
    if red is not None and _depth < 3:
        N2, sub2 = red
        lower = confirm_bielliptic(N2, sub2, _depth=_depth + 1)
        if lower is not None:
            return Witness(
                lower.level,
                lower.element,
                lower.group,
                lower.field,
                chain=((N2, sub2.label()),) + lower.chain,
            )
    return None


# ---------------------------------------------------------------------------
# the rule battery


def _quotient_hyperelliptic(N: int, sub: ALSubgroup, g: int):
    """True/False when known, None when outside the covered data (squarefree)."""
    if g <= 1:
        return None
    if g == 2:
        return True
    fac = factor(N)
    if fac.is_squarefree:
        return None
    if sub.is_full:
        try:
            return star_gate(N).hyperelliptic
        except ValueError:
            return None
    return (N, sub.elements) in hyperelliptic_pairs()


def _al_supergroups(N: int, sub: ALSubgroup):
    for big in all_subgroups(N):
        if sub.elements < big.elements:
            yield big


def _settle(N: int, sub: ALSubgroup, depth: int = 0):
    """Witness search plus exclusion rules for one pair (any level).

    Returns (status, witness, trace) with status one of
    "bielliptic", "excluded", "inconclusive".
    """
    trace: list[RuleResult] = []
    g = invariant_genus(N, sub)

    # a hyperelliptic quotient of genus >= 4 cannot be bielliptic
    if g >= 4 and _quotient_hyperelliptic(N, sub, g) is True:
        result = rule_castelnuovo(g, 2, 0)
        trace.append(result)
        if result.verdict == "must-factor":
            return "excluded", None, trace

    # direct witness search first, so a confirmed pair carries an involution
    # at its own level whenever one exists
    witness, refuted = _search(N, sub)
    if witness is not None:
        return "bielliptic", witness, trace

    # isomorphism reduction: the reduced pair is the same curve
    red = iso_reduce_w4(N, sub)
    if red is not None and depth < 3:
        N2, sub2 = red
        if invariant_genus(N2, sub2) != g:
            raise IntegrityError(f"w4-reduction changed the genus at {N}, {sub.label()}")
        trace.append(
            RuleResult(
                "w4-reduction",
                "conjugation by the half-integral shift identifies the w4-quotient",
                "reduces",
                (N, sub.label()),
                detail=f"-> level {N2}, {sub2.label()}",
            )
        )
        status2, witness2, trace2 = _settle(N2, sub2, depth + 1)
        trace.extend(trace2)
        if status2 == "bielliptic":
            chained = Witness(
                witness2.level,
                witness2.element,
                witness2.group,
                witness2.field,
                chain=((N2, sub2.label()),) + witness2.chain,
            )
            return "bielliptic", chained, trace
        if status2 == "excluded":
            return "excluded", None, trace
        # otherwise fall through to the direct analysis

    # cheap point-count bound; sound on its own only for g >= 6, where the
    # bielliptic involution is unique and hence defined over the base field
    for p in (3, 5, 7, 11, 13):
        if N % p:
            result = rule_ogg_bound(N, sub.order, p)
            if result.verdict == "excludes" and g >= 6:
                trace.append(result)
                return "excluded", None, trace
            break

    # covers to Atkin-Lehner quotients of the pair
    for big in _al_supergroups(N, sub):
        h = invariant_genus(N, big)
        if h < 2:
            continue
        y_hyp = _quotient_hyperelliptic(N, big, h)
        if y_hyp is None:
            continue
        result = rule_unramified_cover(g, big.order // sub.order, h, y_hyp)
        if result.verdict == "excludes":
            trace.append(result)
            return "excluded", None, trace

    # an involution of the quotient with many fixed points
    for v, G, h in refuted:
        count = 2 * g + 2 - 4 * h
        result = rule_many_fixed_points(count, h == 1)
        if result.verdict == "excludes":
            trace.append(
                RuleResult(
                    result.rule_id, result.citation, result.verdict,
                    result.inputs, detail=f"{v.name} on the quotient",
                )
            )
            return "excluded", None, trace

    # 2-groups of automorphisms acting on the fixed points
    for H_order, tag in _two_group_options(N, sub, refuted, g):
        result = rule_two_group(g, H_order)
        if result.verdict == "excludes":
            trace.append(
                RuleResult(
                    result.rule_id, result.citation, result.verdict,
                    result.inputs, detail=tag,
                )
            )
            return "excluded", None, trace

    # ramified cover of a hyperelliptic full quotient: the (unique, central)
    # bielliptic involution would induce the hyperelliptic involution there
    result = _hyperelliptic_factoring(N, sub, g, refuted)
    if result is not None:
        trace.append(result)
        return "excluded", None, trace

    return "inconclusive", None, trace


def _two_group_options(N: int, sub: ALSubgroup, refuted, g: int):
    """Orders of elementary-abelian 2-groups acting faithfully on the pair,
    with every involution already refuted by the witness search."""
    if g < 6:
        return
    by_group = {G.elements: h for _, G, h in refuted}
    full = ALSubgroup.full(N)
    index = full.order // sub.order
    if index > 1:
        faithful = True
        for d in full:
            if d in sub or d == 1:
                continue
            h = invariant_genus(N, sub.extend(d))
            if h >= g:
                faithful = False
                break
        if faithful:
            yield index, "image of the full Atkin-Lehner group"
    # extended: adjoin one normalizer involution that commutes with everything
    extras = []
    if N % 8 == 0:
        extras.append(ExtInvolution.v2(N))
    if N % 9 == 0 and (N // 9) % 3:
        extras.append(ExtInvolution.v3(N))
    for extra in extras:
        try:
            big = group_closure(N, list(full.generators()) + [extra])
        except OrderViolation:
            continue
        image = big.order // sub.order
        faithful = True
        for elem in big.nontrivial():
            if elem.kind == "al" and elem._al_part() in sub:
                continue
            try:
                G = group_closure(N, list(sub.generators()) + [elem])
            except OrderViolation:
                faithful = False
                break
            h = by_group.get(G.elements)
            if h is None:
                h = quotient_genus_hurwitz(N, G)
            if h >= g:
                faithful = False
                break
        if faithful:
            yield image, f"image of the Atkin-Lehner group extended by {extra.name}"


def _hyperelliptic_factoring(N: int, sub: ALSubgroup, g: int, refuted):
    if g < 6 or factor(N).is_squarefree:
        return None
    try:
        gate = star_gate(N)
    except ValueError:
        return None
    if not gate.hyperelliptic or gate.star_genus < 2:
        return None
    full = ALSubgroup.full(N)
    index = full.order // sub.order
    if g - 1 <= index * (gate.star_genus - 1):
        return None  # could be unramified; no conclusion
    # identify the hyperelliptic involution of the full quotient inside the
    # normalizer families
    hyper = None
    for v in _candidate_involutions(N, ALSubgroup.full(N)):
        if v.kind == "al":
            continue
        try:
            G = group_closure(N, list(full.generators()) + [v])
        except OrderViolation:
            continue
        if quotient_genus_hurwitz(N, G) == 0:
            hyper = v
            break
    if hyper is None:
        return None
    # every lift of that involution to this quotient was refuted by the search
    return RuleResult(
        "hyperelliptic-factoring",
        "a ramified cover of a hyperelliptic curve forces the (central) "
        "bielliptic involution to induce its hyperelliptic involution",
        "excludes",
        (N, sub.label(), g, gate.star_genus),
        detail=f"hyperelliptic involution of the full quotient: {hyper.name}",
    )


# ---------------------------------------------------------------------------
# records and the full classification


@dataclass
class PairRecord:
    N: int
    subgroup: ALSubgroup
    genus: int
    status: str
    hyperelliptic: bool
    witness: Witness | None
    field: str | None
    rule_trace: tuple[RuleResult, ...]
    adjudication: tuple[str, str] | None = None
    quadratic_points: str | None = None

    @property
    def bielliptic(self) -> bool:
        return self.status == "bielliptic-confirmed" or (
            self.status == "adjudicated" and self.adjudication[0].startswith("bielliptic")
        )

    def key(self):
        return (self.N, self.subgroup.elements)

    def sort_key(self):
        return (self.N, self.subgroup.sort_key())


def classify_pair(N: int, W, adjudications=None) -> PairRecord:
    """Terminal status for one in-scope pair."""
    sub = W if isinstance(W, ALSubgroup) else ALSubgroup(N, W)
    adjudications = default_adjudications() if adjudications is None else adjudications
    g = invariant_genus(N, sub)
    hyper = _quotient_hyperelliptic(N, sub, g) is True
    trace: list[RuleResult] = []
    if g < 2:
        return PairRecord(N, sub, g, "genus-too-small", hyper, None, None, ())

    gate = star_gate(N)
    if gate.kind == "fails-gate":
        trace.append(
            RuleResult("star-gate", "the full quotient is neither subhyperelliptic "
                       "nor bielliptic", "excludes", (N,))
        )
        return PairRecord(N, sub, g, "excluded", hyper, None, None, tuple(trace))
    if gate.kind == "bielliptic":
        closure = rule_fixed_point_closure(N, sub)
        trace.append(closure)
        if closure.verdict == "excludes":
            return PairRecord(N, sub, g, "excluded", hyper, None, None, tuple(trace))

    status, witness, sub_trace = _settle(N, sub)
    trace.extend(sub_trace)
    if status == "bielliptic":
        return PairRecord(
            N, sub, g, "bielliptic-confirmed", hyper, witness, witness.field, tuple(trace)
        )
    if status == "excluded":
        return PairRecord(N, sub, g, "excluded", hyper, None, None, tuple(trace))

    verdict = adjudications.get((N, sub.elements))
    if verdict is not None:
        field = None
        if verdict[0] == "bielliptic-over-Q":
            field = RATIONAL
        elif verdict[0].startswith("bielliptic"):
            field = SQRT_MINUS_3
        return PairRecord(
            N, sub, g, "adjudicated", hyper, None, field, tuple(trace), adjudication=verdict
        )
    return PairRecord(N, sub, g, "inconclusive", hyper, None, None, tuple(trace))


def classify_all(ec_table=None, adjudications=None, strict: bool = True) -> list[PairRecord]:
    """Classify every in-scope pair and decide its quadratic-point status."""
    ec = default_ec_table() if ec_table is None else ec_table
    adjudications = default_adjudications() if adjudications is None else adjudications
    records = []
    for N, sub in enumerate_pairs():
        rec = classify_pair(N, sub, adjudications)
        rec.quadratic_points = quadratic_points(rec, ec)
        records.append(rec)
    records.sort(key=PairRecord.sort_key)
    if strict:
        open_pairs = [r for r in records if r.status == "inconclusive"]
        if open_pairs:
            names = ", ".join(f"({r.N},{r.subgroup.label()})" for r in open_pairs)
            raise IntegrityError(f"unresolved pairs: {names}")
        for rec in records:
            if rec.bielliptic is False and rec.key() in _published_bielliptic_keys():
                raise IntegrityError(
                    f"({rec.N},{rec.subgroup.label()}) wrongly excluded"
                )
    return records


# ---------------------------------------------------------------------------
# quadratic points


def quadratic_points(record: PairRecord, ec_table) -> str:
    """Infinitely many quadratic points iff the pair is hyperelliptic or
    bielliptic over Q with a positive-rank elliptic quotient."""
    if record.genus < 2:
        return "n/a"
    if (record.N, record.subgroup.elements) in hyperelliptic_pairs():
        return "infinite(hyperelliptic)"
    if record.bielliptic:
        if record.field != RATIONAL:
            return "finite"
        ann = witness_annotations().get((record.N, record.subgroup.elements))
        if ann is None:
            raise DataError(
                f"missing-rank-data: no elliptic quotients recorded for "
                f"({record.N},{record.subgroup.label()})"
            )
        for label in ann[1]:
            curve = ec_table.get(label)
            if curve is None:
                raise DataError(f"missing-rank-data: no curve data for {label}")
            if curve.rank > 0:
                return f"infinite(bielliptic:{label},rank {curve.rank})"
        return "finite"
    return "finite"


# ---------------------------------------------------------------------------
# regression targets (selftest data, never consulted by the pipeline)


_PUBLISHED_KEYS = None


def published_bielliptic_pairs() -> dict:
    """(N, elements) -> genus for every pair the classification must confirm."""
    out = {}
    for N in sorted(_data.BIELLIPTIC_DEG2_LEVELS_2P | _data.BIELLIPTIC_DEG2_LEVELS_3P):
        full_order = 1 << factor(N).omega
        for sub in all_subgroups(N):
            if sub.order * 2 != full_order or sub.is_fricke:
                continue
            g = invariant_genus(N, sub)
            if g >= 2:
                out[(N, sub.elements)] = g
    for (N, gens), g in _data.BIELLIPTIC_SPORADIC.items():
        out[_pair_key(N, gens)] = g
    return out


def _published_bielliptic_keys():
    global _PUBLISHED_KEYS
    if _PUBLISHED_KEYS is None:
        _PUBLISHED_KEYS = set(published_bielliptic_pairs())
    return _PUBLISHED_KEYS


def published_infinite_pairs() -> set:
    """Keys of the pairs with infinitely many quadratic points."""
    out = set()
    scope = set(scope_levels())
    for (N, gens) in _data.HYPERELLIPTIC_TABLE:
        key = _pair_key(N, gens)
        sub = ALSubgroup(N, gens)
        if N in scope and not sub.is_fricke and not sub.is_full:
            out.add(key)
    out.add(_pair_key(99, (9,)))
    out.add(_pair_key(99, (11,)))
    return out


# ---------------------------------------------------------------------------
# reports


def _genus_matrix_rows(levels):
    rows = []
    for N in sorted(levels):
        genera = [invariant_genus(N, sub) for sub in all_subgroups(N)]
        rows.append((N, genera))
    return rows


def emit_report(records, fmt: str = "markdown") -> str:
    """Deterministic report of classification results."""
    records = sorted(records, key=PairRecord.sort_key)
    levels = sorted({r.N for r in records})
    if fmt == "json":
        blob = []
        for r in records:
            blob.append({
                "level": r.N,
                "subgroup": r.subgroup.label(),
                "genus": r.genus,
                "status": r.status,
                "hyperelliptic": r.hyperelliptic,
                "field": r.field,
                "witness": r.witness.describe() if r.witness else None,
                "adjudication": list(r.adjudication) if r.adjudication else None,
                "quadratic_points": r.quadratic_points,
                "trace": [res.line() for res in r.rule_trace],
            })
        return json.dumps(blob, indent=2, sort_keys=True)
    if fmt == "csv":
        lines = ["# genus matrix: level, genera in canonical subgroup order"]
        for N, genera in _genus_matrix_rows(levels):
            lines.append(",".join([str(N)] + [str(g) for g in genera]))
        lines.append("# pairs: level, subgroup, genus, status, quadratic points")
        for r in records:
            lines.append(
                f"{r.N},{r.subgroup.label()},{r.genus},{r.status},{r.quadratic_points}"
            )
        return "\n".join(lines) + "\n"
    if fmt == "markdown":
        lines = ["# Quotient genus tables", ""]
        for N, genera in _genus_matrix_rows(levels):
            subs = all_subgroups(N)
            lines.append(f"## N = {N}")
            lines.append("| subgroup | genus |")
            lines.append("| --- | --- |")
            for sub, g in zip(subs, genera):
                name = "B(N)" if sub.is_full else sub.label()
                lines.append(f"| {name} | {g} |")
            lines.append("")
        lines.append("# Bielliptic pairs")
        lines.append("")
        lines.append("| level | subgroup | genus | witness | field | quadratic points |")
        lines.append("| --- | --- | --- | --- | --- | --- |")
        for r in records:
            if not r.bielliptic:
                continue
            wit = r.witness.describe() if r.witness else "(adjudicated)"
            lines.append(
                f"| {r.N} | {r.subgroup.label()} | {r.genus} | {wit} "
                f"| {r.field} | {r.quadratic_points} |"
            )
        lines.append("")
        lines.append("# Excluded and adjudicated pairs")
        lines.append("")
        for r in records:
            if r.bielliptic:
                continue
            source = (
                f"adjudicated: {r.adjudication[1]}"
                if r.status == "adjudicated"
                else (r.rule_trace[-1].rule_id if r.rule_trace else "")
            )
            lines.append(
                f"- ({r.N}, {r.subgroup.label()}), genus {r.genus}: "
                f"{r.quadratic_points}; {source}"
            )
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown report format {fmt!r}")


# ---------------------------------------------------------------------------
# selftest helpers


def verify_genus_tables(levels=None) -> int:
    """Recompute every genus cell; raises on any mismatch, returns cell count."""
    checked = 0
    for N, row in sorted(_data.GENUS_TABLE_2P.items()):
        if levels is not None and N not in levels:
            continue
        subs = all_subgroups(N)
        expected = (row[0], row[1], row[2], row[3], star_gate(N).star_genus)
        for sub, want in zip(subs, expected):
            got = invariant_genus(N, sub)
            if got != want:
                raise IntegrityError(
                    f"genus mismatch at N={N}, {sub.label()}: computed {got}, table {want}"
                )
            checked += 1
    for N, row in sorted(_data.GENUS_TABLE_3P.items()):
        if levels is not None and N not in levels:
            continue
        subs = all_subgroups(N)
        if len(subs) != 16:
            raise IntegrityError(f"level {N} does not have 16 subgroups")
        for sub, want in zip(subs, row):
            got = invariant_genus(N, sub)
            if got != want:
                raise IntegrityError(
                    f"genus mismatch at N={N}, {sub.label()}: computed {got}, table {want}"
                )
            checked += 1
    return checked


def verify_fix_tables() -> int:
    """Recompute the three published fixed-point tables; returns entry count."""
    golden = {
        120: _data.FIX_TABLE_120,
        252: _data.FIX_TABLE_252,
        176: _data.FIX_TABLE_176,
    }
    checked = 0
    for N, table in golden.items():
        computed = dict(fix_table(N))
        for name, want in table.items():
            got = computed.get(name)
            if got != want:
                raise IntegrityError(
                    f"fixed-point mismatch at level {N}, {name}: computed {got}, table {want}"
                )
            checked += 1
    return checked


def verify_classification(records=None):
    """Compare a classification run against the published theorems."""
    if records is None:
        records = classify_all()
    expected = published_bielliptic_pairs()
    got = {r.key(): r.genus for r in records if r.bielliptic}
    missing = sorted(set(expected) - set(got))
    extra = sorted(set(got) - set(expected))
    if missing or extra:
        raise IntegrityError(
            f"classification mismatch: missing {missing[:4]}..., extra {extra[:4]}..."
        )
    for key, genus in expected.items():
        if got[key] != genus:
            raise IntegrityError(f"genus mismatch for bielliptic pair {key}")
    infinite_expected = published_infinite_pairs()
    infinite_got = {
        r.key() for r in records if (r.quadratic_points or "").startswith("infinite")
    }
    if infinite_got != infinite_expected:
        raise IntegrityError(
            f"quadratic-points mismatch: "
            f"missing {sorted(infinite_expected - infinite_got)}, "
            f"extra {sorted(infinite_got - infinite_expected)}"
        )
    return {
        "pairs": len(records),
        "bielliptic": len(got),
        "adjudicated": sum(1 for r in records if r.status == "adjudicated"),
        "excluded": sum(1 for r in records if r.status == "excluded"),
        "infinite_quadratic": len(infinite_got),
    }
