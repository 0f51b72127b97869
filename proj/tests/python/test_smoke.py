from fractions import Fraction

import mpmath
import pytest

import tailcut as tc


def test_scalar_roundtrip():
    x = tc.Scalar("-17/20")
    assert x.is_exact
    assert x.as_fraction() == Fraction(-17, 20)
    assert str(x * 20) == "-17"
    assert float(tc.Scalar("0.125", digits=40)) == 0.125


def test_bernoulli_and_stirling():
    assert tc.bernoulli(1).as_fraction() == Fraction(-1, 2)
    assert tc.bernoulli(12).as_fraction() == Fraction(-691, 2730)
    assert tc.stirling_first(5, 2) == -50


def _phi_power_coeffs(mu, order):
    # eps^k coefficients of (eps/(1+eps))^mu through eps^order.
    geo = [Fraction((-1) ** k) for k in range(order + 1)]
    out = [Fraction(1)] + [Fraction(0)] * order
    for _ in range(mu):
        shifted = [Fraction(0)] + out[:-1]
        out = [sum(shifted[i] * geo[k - i] for i in range(k + 1)) for k in range(order + 1)]
    return out


def test_e1_gamma_satisfies_residual_identity():
    z = Fraction(2)
    m = 6
    g = [c.as_fraction() for c in tc.solve_gamma(tc.make_e1(str(z)), m).coeffs]
    assert len(g) == m + 1
    # U = z eps, V = 1: z eps S(eps) + S(eps/(1+eps)) = 1 + O(eps^(m+1)).
    lhs = [Fraction(0)] * (m + 1)
    for mu, c in enumerate(g):
        if mu + 1 <= m:
            lhs[mu + 1] += z * c
        for k, p in enumerate(_phi_power_coeffs(mu, m)):
            lhs[k] += c * p
    assert lhs == [1] + [0] * m


def test_2f1_leading_coefficient():
    a, b, c, z = Fraction(1, 3), Fraction(7, 5), Fraction(9, 2), Fraction(-17, 20)
    f = tc.make_2f1(str(a), str(b), str(c), str(z))
    g = tc.solve_gamma(f, 4)
    assert g.coeffs[0].as_fraction() == 1 / (z - 1)


def test_zeta_corrected_sum_beats_partial_sum():
    f = tc.make_zeta(tc.Scalar("3/2", digits=60))
    n = 20
    with mpmath.workdps(60):
        ref = mpmath.zeta(mpmath.mpf(3) / 2)
        raw = abs(mpmath.mpf(tc.partial_sum(f, n).str()) - ref)
        fixed = abs(mpmath.mpf(tc.corrected_sum(f, n, 8).str()) - ref)
    assert fixed < raw * mpmath.mpf("1e-10")


def test_methods_agree_with_oracle():
    f = tc.make_e1("10")
    g = tc.solve_gamma(f, 6)
    kind = tc.Kind.real(50)
    exact = tc.remainder_exact(f, 10, digits=60)
    for method in ("power", "factorial", "pade"):
        approx = tc.remainder(f, g, 10, method=method, kind=kind)
        err = abs(float(approx.to(tc.Kind.real(60)) - exact))
        assert err < 1e-2 * abs(float(exact))


def test_e1_reference_matches_mpmath():
    with mpmath.workdps(40):
        z = mpmath.mpf(3)
        want = z * mpmath.exp(z) * mpmath.e1(z)
        got = mpmath.mpf(tc.e1_reference("3", digits=40).str())
        assert abs(got - want) < mpmath.mpf("1e-35")


def test_pade_from_series_geometric():
    p = tc.pade_from_series(["1", "1", "1", "1"], 1, 1)
    assert [c.as_fraction() for c in p.denominator] == [1, -1]
    assert p(tc.Scalar("1/2")).as_fraction() == 2


def test_errors_are_typed():
    with pytest.raises(tc.DegenerateParameter):
        tc.make_zeta("1")
    with pytest.raises(tc.DegeneratePade):
        tc.pade_from_series(["1", "0", "0", "0", "0"], 1, 2)
    with pytest.raises(tc.Error):
        tc.remainder_pade(tc.make_e1("3"), tc.solve_gamma(tc.make_e1("3"), 2), 5, 2, 2)
