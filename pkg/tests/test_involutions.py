import pytest
from hypothesis import given, settings, strategies as st

from bielliptic.errors import OrderViolation
from bielliptic.involutions import (
    ExtInvolution,
    compose,
    fix_al,
    fix_al_classnumber_crosscheck,
    fix_count,
    fix_s2,
    fix_s2_wr,
    fix_table_tsv,
    fix_v2,
    fix_v2_w2a,
    fix_v3,
    group_closure,
    parse_element,
    quotient_genus_hurwitz,
)
from bielliptic.modsym import invariant_genus
from bielliptic.ntheory import hall_divisors


def test_fix_al_examples():
    assert fix_al(120, 15) == 16
    assert fix_al(252, 63) == 24
    assert fix_al(176, 176) == 12
    assert fix_al(126, 9) == 0
    with pytest.raises(ValueError):
        fix_al(120, 7)
    with pytest.raises(ValueError):
        fix_al(120, 1)


def test_fix_s2_examples():
    assert fix_s2(120) == 8
    assert fix_s2(44) == 2
    assert fix_s2(60) == 4
    with pytest.raises(ValueError):
        fix_s2(30)


def test_fix_s2_wr_examples():
    assert fix_s2_wr(120, 15) == 2 * fix_al(60, 15) - fix_al(120, 15) == 8
    assert fix_s2_wr(44, 11) == 2 * fix_al(22, 11) - fix_al(44, 11)
    assert fix_s2_wr(120, 1) == fix_s2(120)
    with pytest.raises(ValueError):
        fix_s2_wr(120, 8)


def test_fix_v2_examples():
    assert fix_v2(120, 1) == 0
    assert fix_v2(120, 3) == 8
    assert fix_v2(176, 11) == 12
    assert fix_v2(120, 15) == fix_al(120, 120)


def test_fix_v2_w2a_examples():
    assert fix_v2_w2a(120, 5) == 16  # V2*w40
    assert fix_v2_w2a(120, 1) == 0   # V2*w8
    assert fix_v2_w2a(176, 1) == 4   # V2*w16
    with pytest.raises(OrderViolation):
        fix_v2_w2a(60, 1)  # 4 || 60, so V2*w4 has order 3


def test_fix_v3_examples():
    assert fix_v3(252, 7) == 24
    assert fix_v3(252, 4) == fix_al(252, 36) == 0
    assert fix_v3(126, 7) == 16
    assert fix_v3(126, 63) == 16
    assert fix_v3(126, 9) == fix_v3(126, 1) == 0
    with pytest.raises(OrderViolation):
        fix_v3(126, 2)  # 2 = 2 mod 3
    with pytest.raises(ValueError):
        fix_v3(120, 1)  # 9 does not divide 120


def test_conjugate_counts_match():
    # S2 and w_{2^a} S2 w_{2^a} have the same counts; V3 multiples of w9 too
    for N in (88, 120, 176):
        s2 = ExtInvolution.s2(N)
        s2c = ExtInvolution.s2_conj(N)
        assert fix_count(s2) == fix_count(s2c) == fix_s2(N)
    assert fix_v3(126, 9) == fix_v3(126, 1)
    assert fix_v3(252, 63) == fix_v3(252, 7)


def test_compose_al():
    a = ExtInvolution.al(60, 4)
    b = ExtInvolution.al(60, 12)
    assert compose(a, b).name == "w3"
    assert compose(a, a).is_identity


def test_compose_v3_rules():
    v3 = ExtInvolution.v3(126)
    w9 = ExtInvolution.al(126, 9)
    assert compose(v3, w9).name == "V3*w9"
    w2 = ExtInvolution.al(126, 2)
    with pytest.raises(OrderViolation):
        compose(v3, w2)
    with pytest.raises(OrderViolation):
        compose(w2, v3)


def test_compose_s2_family():
    s2 = ExtInvolution.s2(120)
    w8 = ExtInvolution.al(120, 8)
    with pytest.raises(OrderViolation):
        compose(s2, w8)  # S2 w8 has order 4
    v2 = ExtInvolution.v2(120)
    assert compose(v2, w8).name == "V2*w8"
    s2c = ExtInvolution.s2_conj(120)
    assert compose(s2, s2c).name == "V2*w8"
    # at 2^2 || N the group <S2, w4> is not abelian
    with pytest.raises(OrderViolation):
        compose(ExtInvolution.v2(60), ExtInvolution.al(60, 4))


def test_s2_conj_collapses_at_alpha_2():
    # w4 S2 w4 = S2 w4 S2 = V2 when 4 exactly divides N
    assert ExtInvolution.s2_conj(60) == ExtInvolution.v2(60)


def test_parse_element():
    assert parse_element(120, "V2*w40").name == "V2*w40"
    assert parse_element(120, "S2").name == "S2"
    assert parse_element(252, "V3*w7").name == "V3*w7"
    assert parse_element(120, "w15").name == "w15"
    with pytest.raises(ValueError):
        parse_element(120, "V9*w2")


def test_group_closure_examples():
    G = group_closure(126, ["w9", "V3*w7"])
    assert G.names() == ("id", "w9", "V3*w7", "V3*w63")
    G = group_closure(120, ["w15", "S2"])
    assert G.names() == ("id", "w15", "S2", "S2*w15")
    G = group_closure(252, ["w4", "w63", "V3"])
    assert G.order == 8


def test_group_closure_rejections():
    with pytest.raises(OrderViolation):
        group_closure(60, ["S2", "w4"])
    with pytest.raises(OrderViolation):
        group_closure(126, ["V3", "w2"])
    with pytest.raises(OrderViolation):
        group_closure(252, ["S2", "V3"])


def test_quotient_genus_examples():
    assert quotient_genus_hurwitz(126, ["w9", "V3*w7"]) == 1
    assert quotient_genus_hurwitz(120, ["w15", "S2"]) == 1
    assert quotient_genus_hurwitz(252, ["w4", "w63", "V3"]) == 1
    assert quotient_genus_hurwitz(126, ["w63", "V3"]) == 1
    assert quotient_genus_hurwitz(126, ["w9", "V3"]) == 5


def test_hurwitz_matches_modsym_on_al_groups(classification):
    # Hurwitz route equals the invariant-dimension route on every Atkin-Lehner
    # subgroup of every level in scope (the caches are warm at this point)
    from bielliptic.atlas import scope_levels
    from bielliptic.ntheory import all_subgroups
    from bielliptic.x0invariants import genus_x0

    checked = 0
    for N in scope_levels():
        if genus_x0(N) < 2:
            continue
        for sub in all_subgroups(N):
            if sub.is_trivial:
                continue
            gens = [f"w{d}" for d in sub.generators()]
            assert quotient_genus_hurwitz(N, gens) == invariant_genus(N, sub), (
                N, sub.label(),
            )
            checked += 1
    assert checked > 700


def test_commuting_product_identity():
    # #(uv, X) = 2 #(u, X/v) - #(u, X) on the S2/V2 recursion, both sides
    # computed independently
    for N in (88, 104, 120, 176):
        for r in [r for r in hall_divisors(N) if r % 2 == 1 and r > 1]:
            lhs = fix_s2_wr(N, r)
            assert lhs == 2 * fix_al(N // 2, r) - fix_al(N, r)


def test_fix_table_tsv():
    text = fix_table_tsv(252)
    lines = text.splitlines()
    assert lines[0] == "element\tcount"
    table = dict(line.split("\t") for line in lines[1:])
    assert table["V3*w7"] == "24"
    assert table["w63"] == "24"
    assert table["S2"] == str(fix_s2(252))


def _cm_fix_oracle(N: int, Q: int) -> int:
    """Independent count of #(w_Q, X0(N)) for squarefree N via CM class
    numbers: fixed points carry complex multiplication by the orders whose
    discriminant supports an element of norm Q, with one local embedding
    factor per prime of N/Q (two at p=2 for the conductor-2 order -4Q)."""
    from bielliptic.ntheory import class_number, factor, kronecker

    M = N // Q
    if Q == 2:
        discs = [-4, -8]
    elif Q == 3:
        discs = [-3, -12]
    elif Q % 4 == 3:
        discs = [-Q, -4 * Q]
    else:
        discs = [-4 * Q]
    total = 0
    for D in discs:
        term = class_number(D)
        for p, _ in factor(M).factors:
            if p == 2 and D == -4 * Q and Q % 4 == 3:
                term *= 2
            else:
                term *= 1 + kronecker(D, p)
        total += term
    return total


def test_fix_counts_against_cm_oracle(classification):
    # the modular-symbols route agrees with the class-number route on every
    # Atkin-Lehner involution of every squarefree level up to 200
    from bielliptic.ntheory import factor

    checked = 0
    for N in range(5, 201):
        if not factor(N).is_squarefree:
            continue
        for Q in hall_divisors(N)[1:]:
            assert fix_al(N, Q) == _cm_fix_oracle(N, Q), (N, Q)
            checked += 1
    assert checked == 345


def test_fricke_crosscheck_examples():
    assert fix_al_classnumber_crosscheck(15) == 4 == fix_al(15, 15)
    assert fix_al_classnumber_crosscheck(11) == 4 == fix_al(11, 11)
    assert fix_al_classnumber_crosscheck(21) == fix_al(21, 21)
    with pytest.raises(ValueError):
        fix_al_classnumber_crosscheck(12)


@settings(max_examples=60, deadline=None)
@given(
    st.sampled_from([44, 60, 88, 90, 120, 126, 176, 252]),
    st.data(),
)
def test_hurwitz_always_integral(N, data):
    # random valid generator sets always give an exact integer genus
    pool = [f"w{d}" for d in hall_divisors(N)[1:]]
    if N % 4 == 0:
        pool += ["S2", "V2"]
    if N % 9 == 0 and (N // 9) % 3:
        pool += ["V3"]
    gens = data.draw(st.lists(st.sampled_from(pool), min_size=1, max_size=3))
    try:
        G = group_closure(N, gens)
    except OrderViolation:
        return
    h = quotient_genus_hurwitz(N, G)  # raises IntegrityError on non-integrality
    assert h >= 0
