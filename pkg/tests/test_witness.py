"""Witness families against definitional brute force.

The oracles below re-read each set definition literally, with sympy doing
primality, exact square roots and valuations, and scan generous parameter
boxes instead of the generators' monotone loops.
"""
import json
import math

import pytest
import sympy

from permlab.labels import build_collision_table, distinct_value_count
from permlab.witness import (
    WitnessConfig,
    closed_form_cardinalities,
    s1,
    s2,
    s3,
    s4,
    s5,
    s6,
    union_and_delta,
    witness_csv,
    witness_sets,
)


def oracle_s2(n, s_min):
    out = set()
    for q in sympy.primerange(2, n):
        for s in range(s_min, n):
            if s + sympy.sqrt(s + 1) < q and q + 1 <= n:
                out.add(math.perm(q + 1, s))
    return out


def oracle_s3(n):
    return {math.perm(q + 2, s) for q in sympy.primerange(2, n) for s in range(3, n)
            if 4 * s < q < n - 1}


def oracle_s45(n, second_form, strict=False):
    out = set()
    for q in sympy.primerange(2, n + 1):
        for l in range(1, n + 1):
            m = l + sympy.multiplicity(q, sympy.factorial(l))
            for k in range(1, n + 1):
                top = q**m * (k + l) - 1 if second_form else q**m * k + q * l - 1
                ok = top < n if strict else top <= n
                if ok and q * l < n and q * l - 1 >= 1:
                    out.add(math.perm(top, q * l - 1))
    return out


def oracle_s6(n):
    out = {2}
    for x in range(2, n + 1):
        f = sympy.factorint(x)
        if len(f) == 1 and x != 3 and 2 * x <= n:
            out.add(2 * x)
    return out


def test_s1_examples():
    assert s1(6).values == {3, 6, 12, 24, 60, 120, 360, 720}
    assert len(s1(6).elements) == 8
    assert s1(3).values == {3, 6}
    assert s1(7).values - s1(6).values == {840, 2520, 5040}


def test_s2_examples():
    assert s2(10, 2).values == {30, 56, 336, 1680}
    params = sorted((e.params["q"], e.params["s"]) for e in s2(10, 2).elements)
    assert params == [(5, 2), (7, 2), (7, 3), (7, 4)]
    assert s2(10, 3).values == {336, 1680}
    assert s2(6, 2).values == {30}


def test_s3_examples():
    assert s3(6).values == set()
    assert s3(16).values == {2730}
    assert [e.params for e in s3(16).elements] == [{"q": 13, "s": 3}]
    # q = 13 satisfies 4*3 < 13 < 15 - 1, so S3(15) is already nonempty
    assert s3(15).values == {2730}
    assert s3(14).values == set()


def test_s4_s5_examples():
    assert s4(6).values == {3, 5, 20}
    assert s5(6).values == {3, 5, 20}
    assert s4(4).values == {3}
    got = sorted((e.params["q"], e.params["l"], e.params["k"]) for e in s4(6).elements)
    assert got == [(2, 1, 1), (2, 1, 2), (3, 1, 1)]


def test_s6_examples():
    assert s6(6).values == {2, 4}
    assert s6(10).values == {2, 4, 8, 10}
    assert s6(3).values == {2}


@pytest.mark.parametrize("n", [3, 4, 6, 9, 10, 16, 25, 40, 61, 90])
def test_families_match_definitions(n):
    assert s2(n, 2).values == oracle_s2(n, 2)
    assert s2(n, 3).values == oracle_s2(n, 3)
    assert s3(n).values == oracle_s3(n)
    assert s4(n).values == oracle_s45(n, False)
    assert s5(n).values == oracle_s45(n, True)
    assert s4(n, strict_tops=True).values == oracle_s45(n, False, strict=True)
    assert s5(n, strict_tops=True).values == oracle_s45(n, True, strict=True)
    assert s6(n).values == oracle_s6(n)


@pytest.mark.parametrize("n", [3, 6, 20, 77, 150])
@pytest.mark.parametrize("config", [WitnessConfig(2, False), WitnessConfig(3, True)])
def test_elements_are_valid_labels(n, config):
    for ws in witness_sets(n, config).values():
        for e in ws.elements:
            assert e.recheck()
            assert e.top <= n


def test_union_and_delta_n6():
    rep = union_and_delta(6, WitnessConfig(s_min=2))
    assert rep.union_size == 13
    assert rep.delta == 1
    assert {v for v, c in rep.multiplicity.items() if c > 1} == {3}
    assert union_and_delta(6, WitnessConfig(s_min=3)).union_size == 12


def test_union_and_delta_n3():
    rep = union_and_delta(3)
    assert rep.union == {2, 3, 6}
    assert rep.delta == 1  # 3 lies in S1 and in S4 u S5


@pytest.mark.parametrize("n", range(3, 80))
def test_delta_identity_and_union_below_oracle(n):
    rep = union_and_delta(n)
    assert rep.delta == sum(rep.cards.values()) - rep.union_size
    assert rep.union_size <= distinct_value_count(n)


def test_closed_forms_examples():
    assert closed_form_cardinalities(7).s1 == 11 == len(s1(7))
    assert closed_form_cardinalities(6).s1 == 6
    assert len(s1(6)) == 8
    assert closed_form_cardinalities(6).s6 == 2 == len(s6(6))


def test_closed_form_s1_ranges():
    for n in range(3, 7):
        assert len(s1(n)) - closed_form_cardinalities(n).s1 == 2
    for n in range(7, 250):
        assert closed_form_cardinalities(n).s1 == len(s1(n))


def test_closed_form_s6_range():
    for n in range(6, 250):
        assert closed_form_cardinalities(n).s6 == len(s6(n))


def test_closed_form_s2_upper_limit_exact():
    from permlab.witness import _s2_upper_limit

    for n in [*range(3, 400), 4 * 10**6, 10**9 + 7]:
        expected = sympy.floor((2 * n + 3 - sympy.sqrt(4 * n + 18)) / 2)
        assert _s2_upper_limit(n) == expected


def test_closed_form_s2_s3_literal():
    n = 30
    pi = sympy.primepi
    lim = int(sympy.floor((2 * n + 3 - sympy.sqrt(4 * n + 18)) / 2))
    s2_lit = sum(pi(n - 1) - pi(sympy.floor(s + sympy.sqrt(s + 1))) for s in range(2, lim + 1))
    s3_lit = sum(pi(n - 1) - pi(4 * s) for s in range(2, (n - 1) // 4 + 1))
    s3_proof = sum(pi(n - 1) - pi(4 * s) for s in range(3, (n - 3) // 4 + 1))
    forms = closed_form_cardinalities(n)
    assert (forms.s2, forms.s3, forms.s3_proof) == (s2_lit, s3_lit, s3_proof)


def test_lemma_content_against_collision_table():
    # S2 (s_min 2), S3 and S6 values have no colliding pair above their subscript;
    # S4/S5 values none with subscript >= ql
    n = 60
    table = build_collision_table(n)
    for e in s2(n, 2).elements + s3(n).elements + s6(n).elements:
        assert all(p.low <= e.sub for p in table.classes[e.value])
    for e in s4(n).elements + s5(n).elements:
        ql = e.sub + 1
        assert all(p.low < ql for p in table.classes[e.value])


def test_witness_csv():
    text = witness_csv(witness_sets(6))
    lines = text.splitlines()
    assert lines[0] == "set_id,value_decimal,top,sub,params_json"
    assert len(lines) == 1 + 8 + 1 + 0 + 3 + 3 + 2
    first = lines[1].split(",", 4)
    assert first[:4] == ["S1", "3", "3", "1"]
    assert json.loads(first[4].strip('"').replace('""', '"')) == {"i": 1, "k": 3, "m_k": 2}


def test_config_validation():
    with pytest.raises(ValueError):
        WitnessConfig(s_min=4)
    assert WitnessConfig(3, True).config_id == "smin3-strict"
