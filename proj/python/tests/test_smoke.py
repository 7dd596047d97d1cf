import json

import pytest

import fricke


def expand(factors, p):
    out = [1]
    for coeffs, mult in factors:
        for _ in range(mult):
            prod = [0] * (len(out) + len(coeffs) - 1)
            for i, a in enumerate(out):
                for j, b in enumerate(coeffs):
                    prod[i + j] = (prod[i + j] + a * b) % p
            out = prod
    return out


def test_ss_poly():
    assert fricke.ss_poly(37) == [11, 5, 23, 1]
    assert fricke.render(fricke.ss_poly(23), 23) == "x(x+4)(x+20)"
    with pytest.raises(ValueError):
        fricke.ss_poly(15)


def test_fricke_ss_methods_agree():
    assert fricke.fricke_ss(5, 11) == fricke.fricke_ss(5, 11, method="theorem")
    assert fricke.render(fricke.fricke_ss(7, 13), 13, "Y") == "(Y+1)(Y+5)(Y+12)(Y^2+10Y+5)"
    assert len(fricke.fricke_ss(7, 13)) - 1 == fricke.expected_degree(7, 13)
    with pytest.raises(ValueError):
        fricke.fricke_ss(5, 13, method="guess")
    with pytest.raises(fricke.Unsupported):
        fricke.fricke_ss(11, 13)


def test_factor_round_trip():
    p = 101
    f = [3, 0, 7, 1, 0, 5]
    unit, factors = fricke.factor(f, p)
    assert [unit * c % p for c in expand(factors, p)] == f


def test_verification():
    r = fricke.verify_congruence(5, 23)
    assert r.verdict == fricke.Verdict.PASS
    assert r.direct_check
    assert fricke.verify_congruence(7, 7).verdict == fricke.Verdict.SKIPPED
    assert [x.prime for x in fricke.sweep_congruence(2, 5, 30)] == [5, 7, 11, 13, 17, 19, 23, 29]
    assert fricke.split_primes(7, 100).computed_primes == [5, 17]
    assert fricke.monster_split_primes(100)[-1] == 71
    assert all(fricke.verify_class_pipeline(t).verdict == fricke.Verdict.PASS for t in fricke.class_pipeline_targets())
    assert fricke.isogeny_spot_check(7, 101, 20, 1).verdict == fricke.Verdict.PASS


def test_cli():
    code, out, err = fricke.run_cli(["ss", "--prime", "37", "--json"])
    assert code == 0 and err == ""
    assert json.loads(out)[0]["text"] == "(x+29)(x^2+31x+31)"
    assert fricke.run_cli(["star", "--level", "5", "--prime", "5"])[0] == 2
