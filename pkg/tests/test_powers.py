import json

import pytest

from residua import (
    HypothesisError,
    NotPrimeError,
    ResidueError,
    binomial_proof_trace,
    check_order_divides,
    classify,
    corollary_ap_minus_1,
    fermat_euler_check,
    gcd,
    multiplicative_order,
    period_structure,
    power_sequence,
    totient,
)
from residua.powers import ProofStep, ProofTrace

from oracles import brute_is_prime, naive_order, naive_powers, rho_shape


def reps(seq):
    return [c.rep for c in seq]


@pytest.mark.parametrize(
    "a, m, n, expected",
    [(5, 9, 1, [1]), (2, 7, 4, [1, 2, 4, 1]), (10, 6, 4, [1, 4, 4, 4]), (3, 1, 3, [0, 0, 0])],
)
def test_power_sequence_examples(a, m, n, expected):
    assert reps(power_sequence(a, m, n)) == expected


def test_power_sequence_against_full_powers():
    for m in range(1, 30):
        for a in range(-m, m + 3):
            assert reps(power_sequence(a, m, 12)) == naive_powers(a, m, 12)


def test_power_sequence_needs_a_term():
    with pytest.raises(ResidueError):
        power_sequence(2, 7, 0)


def test_period_structure_examples():
    ps = period_structure(2, 7)
    assert (ps.preperiod, ps.period, reps(ps.cycle), reps(ps.tail)) == (0, 3, [1, 2, 4], [])
    ps = period_structure(1, 11)
    assert (ps.preperiod, ps.period, reps(ps.cycle)) == (0, 1, [1])
    ps = period_structure(10, 6)
    assert (ps.preperiod, ps.period, reps(ps.tail), reps(ps.cycle)) == (1, 1, [1], [4])


def test_period_structure_against_table_oracle():
    for m in range(1, 60):
        for a in range(m):
            ps = period_structure(a, m)
            assert (ps.preperiod, ps.period) == rho_shape(a, m)
            assert ps.period <= m
            seq = power_sequence(a, m, ps.preperiod + 3 * ps.period + 2)
            assert [ps.term(i) for i in range(len(seq))] == seq


def test_coprime_progressions_are_purely_periodic():
    for m in range(2, 51):
        one = classify(1, m)
        for a in range(m):
            ps = period_structure(a, m)
            if gcd(a, m) == 1:
                assert ps.preperiod == 0 and ps.cycle[0] == one
                assert power_sequence(a, m, 3 * ps.period) == list(ps.cycle) * 3
            else:
                assert one not in power_sequence(a, m, 2 * m)[1:]


@pytest.mark.parametrize("a, m, t", [(1, 2, 1), (1, 9, 1), (2, 7, 3), (3, 7, 6), (-1, 10, 2)])
def test_order_examples(a, m, t):
    assert multiplicative_order(a, m).t == t


def test_order_errors():
    with pytest.raises(HypothesisError):
        multiplicative_order(4, 6)
    with pytest.raises(ResidueError):
        multiplicative_order(3, 1)


def test_order_minimal_and_divides_totient():
    for m in range(2, 101):
        phi = totient(m)
        for a in range(1, m):
            if gcd(a, m) != 1:
                continue
            t = multiplicative_order(a, m).t
            assert t == naive_order(a, m)
            assert phi % t == 0
            assert all(pow(a, s, m) != 1 for s in range(1, t))


@pytest.mark.parametrize("p, a, expected", [(7, 2, (3, True)), (7, 3, (6, True)), (5, 4, (2, True))])
def test_check_order_divides(p, a, expected):
    assert tuple(check_order_divides(p, a)) == expected


def test_check_order_divides_errors():
    with pytest.raises(NotPrimeError):
        check_order_divides(9, 2)
    with pytest.raises(HypothesisError):
        check_order_divides(7, 14)


@pytest.mark.parametrize("a, k", [(1, 9), (10, 9), (2, 7), (5, 12)])
def test_fermat_euler_examples(a, k):
    assert fermat_euler_check(a, k) == classify(1, k)


def test_fermat_euler_errors():
    with pytest.raises(HypothesisError):
        fermat_euler_check(6, 9)
    with pytest.raises(ResidueError):
        fermat_euler_check(1, 1)


def test_fermat_euler_large_modulus():
    for k in (2**31 - 1, 3**80 * 7**20):
        assert fermat_euler_check(2, k) == classify(1, k)


def test_trace_base_case():
    tr = binomial_proof_trace(13, 1)
    assert tr.steps == (ProofStep(13, 1, 0, 0),)
    assert tr.lemmas == ()
    assert tr.check()


def test_trace_example():
    tr = binomial_proof_trace(5, 3)
    assert [s.a for s in tr.steps] == [1, 2, 3]
    assert tr.steps[1].witness == 6
    assert [(s.value, s.witness) for s in tr.steps] == [(0, 0), (30, 6), (240, 48)]
    assert [(l.a, l.value, l.witness) for l in tr.lemmas] == [(1, 30, 6), (2, 210, 42)]
    assert tr.check()


def test_trace_rejects_composite():
    with pytest.raises(NotPrimeError, match="4 is not prime"):
        binomial_proof_trace(4, 2)


def test_trace_composite_lemma_really_fails():
    # the reason for the primality guard: (1+1)**4 - 2 = 14 is not a multiple of 4
    assert (2**4 - 2) % 4 != 0


def test_trace_check_catches_tampering():
    tr = binomial_proof_trace(7, 4)
    bad = ProofStep(7, 3, tr.steps[2].value, tr.steps[2].witness + 1)
    forged = ProofTrace(7, tr.steps[:2] + (bad,) + tr.steps[3:], tr.lemmas)
    assert not forged.check()


def test_trace_jsonl():
    lines = binomial_proof_trace(5, 3).to_jsonl().splitlines()
    rows = [json.loads(l) for l in lines]
    assert rows[1] == {"p": 5, "a": 2, "value": "30", "witness": "6"}
    for r in rows:
        assert int(r["witness"]) * r["p"] == int(r["value"]) == r["a"] ** r["p"] - r["a"]


@pytest.mark.parametrize("p, a", [(3, 1), (7, 2), (11, 10), (13, -5)])
def test_corollary(p, a):
    assert corollary_ap_minus_1(p, a) == classify(1, p) == fermat_euler_check(a, p)


def test_corollary_errors():
    with pytest.raises(HypothesisError):
        corollary_ap_minus_1(7, 21)
    with pytest.raises(NotPrimeError):
        corollary_ap_minus_1(15, 2)
