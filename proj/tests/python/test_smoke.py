import math

import heckepairs as hp


def test_version():
    assert hp.__version__ == "0.1.0"


def test_dimensions():
    assert hp.dim_sk1(12) == 1
    assert hp.dim_sk1(24) == 2
    assert hp.dim_sk1(60) == 5


def test_trace_and_hecke():
    assert hp.trace_tn(12, 2) == -24
    assert hp.trace_tn(24, 2) == 1080
    m = hp.hecke_matrix(24, 2)
    assert m["dim"] == 2
    assert m["entries"][0][0] + m["entries"][1][1] == 1080
    cp = hp.charpoly(24, 2)
    assert cp == [-20468736, -1080, 1]


def test_basis_echelon():
    b = hp.miller_basis(36, 10)
    assert b["dim"] == 3
    for i, form in enumerate(b["forms"]):
        assert form[0] == 0
        for j in range(3):
            assert form[j + 1] == (1 if i == j else 0)


def test_angles_and_moments():
    a = hp.angles(12, 2)
    assert a["dim"] == 1
    assert abs(a["eigenvalues"][0] + 24.0) < 1e-9
    assert abs(a["thetas"][0] - math.acos(-24.0 / 2 ** 6.5)) < 1e-12
    assert abs(hp.empirical_moment(24, 2, 3) - hp.moment_sum(24, 2, 3)) < 1e-9


def test_maeda():
    r = hp.maeda_check(24)
    assert r["squarefree"]
    assert r["irreducible"] == "yes"
    assert r["pair_count"] == 2


def test_selberg():
    s = hp.selberg_coeffs("-1/10", "1/10", 9)
    assert s["c0_exact"] == "3/10"
    assert abs(s["c0"] - 0.3) < 1e-15
    chk = hp.check_majorant("-1/10", "1/10", 9, grid=2000)
    assert chk["ok"]


def test_bounds():
    assert hp.lemma1_bound(12, 1, 2, 1) == 26.0
    assert hp.choose_M(12, 1, 2) >= 1
    assert abs(hp.lambert_w(math.e) - 1.0) < 1e-12
    r = hp.bound_report(24, 1, 2)
    assert r["dim_exact"]
    assert r["rhs"] >= r["pair_count"]


def test_sampler():
    draws = hp.sample(2, 42, 1000)
    assert len(draws) == 1000
    assert all(0.0 <= t <= math.pi for t in draws)
    assert draws == hp.sample(2, 42, 1000)
    r = hp.deviation_scaling(2, [10, 30, 100], 100, 1, 7)
    assert 0.2 < r["slope"] < 0.8
