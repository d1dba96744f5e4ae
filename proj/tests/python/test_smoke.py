"""Smoke tests for the python extension."""

import math

import pytest

import wgcseq


def test_params():
    p = wgcseq.make_params(5, 3)
    assert (p.p, p.q, p.n, p.g, p.x, p.e) == (5, 3, 15, 2, 7, 4)
    assert p.lower_bound_applicable
    assert not p.maximality_applicable


def test_invalid_params_raise():
    with pytest.raises(ValueError):
        wgcseq.make_params(7, 5)


def test_partition_and_sequence():
    part = wgcseq.build_partition(wgcseq.make_params(5, 3))
    assert part.classify(0) == "ZERO"
    assert part.classify(5) == "D0q_p"
    assert part.members("D00") == [1, 4]
    seq = wgcseq.generate(part)
    assert seq.bits == "000000110111011"
    assert seq.weight == 7
    assert seq.s2() == 28352
    assert seq.linear_complexity() == 7


def test_two_adic_complexity():
    for (p, q), phi2 in [((5, 3), 15), ((5, 7), 35), ((17, 43), 731)]:
        part = wgcseq.build_partition(wgcseq.make_params(p, q))
        rep = wgcseq.two_adic_complexity(wgcseq.generate(part))
        assert rep.phi2 == phi2
        assert rep.is_maximal
        assert rep.gcd == 1
        assert rep.lower_bound == p * q - p - q - 1


def test_verdicts():
    part = wgcseq.build_partition(wgcseq.make_params(5, 7))
    rep = wgcseq.two_adic_complexity(wgcseq.generate(part))
    assert wgcseq.maximality_verdict(rep) == {"applicable": True, "holds": True}
    assert wgcseq.lower_bound_verdict(rep)["holds"]


def test_determinant_matches_closed_form():
    params = wgcseq.make_params(5, 3)
    seq = wgcseq.generate(wgcseq.build_partition(params))
    cf = wgcseq.det_closed_form(params)
    rep = wgcseq.match_closed_form(seq, cf)
    assert rep.det_exact == 1792
    assert rep.matched_sign == "minus"
    assert cf.det_plus == 6727
    assert wgcseq.det_exact(seq) == 1792
    assert wgcseq.gcd_divisibility_check(seq, rep.det_exact) == "holds"


def test_spectrum_residual():
    params = wgcseq.make_params(5, 7)
    part = wgcseq.build_partition(params)
    seq = wgcseq.generate(part)
    gp = wgcseq.gauss_periods(part)
    residual = max(
        abs(wgcseq.spectrum_direct(a, seq) - wgcseq.spectrum_closed_form(a, gp, part))
        for a in range(params.n)
    )
    assert residual < 1e-6 * math.sqrt(params.n)
    assert wgcseq.period_identities(gp)["eta_ok"]
    assert wgcseq.square_combination_check(gp)["ok"]


def test_raa():
    assert wgcseq.raa_synthesize("01" * 8) == (-2, 3)
    seq = wgcseq.generate(wgcseq.build_partition(wgcseq.make_params(5, 3)))
    m, n = wgcseq.raa_synthesize(seq.bits * 3)  # 45 bits: past the convergence bound
    assert (m, n) == (-28352, 32767)


def test_mersenne():
    assert wgcseq.mersenne_gcd_check(5, 3) == (True, True)


def test_table_pairs():
    pairs = wgcseq.table_pairs()
    assert len(pairs) == 10
    assert pairs[0] == (5, 3)
