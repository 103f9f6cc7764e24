import json
from pathlib import Path

import pytest

import kodeg

DATA = Path(__file__).resolve().parents[2] / "data"


def test_ring_products():
    x = kodeg.KOElem("[C0]_2")
    assert str(x * x) == "-[R]_4 + [Rt]_4"
    assert (x * x).degree == 4
    assert kodeg.eval("[H1]_4 * [H1]_4") == kodeg.KOElem("[R] + [Rt] + [D2]")
    assert str(kodeg.euler_h1_power(2)) == "5[R] + [Rt] + [D2] - 2[H1]"
    assert kodeg.euler_h1_power(4) == kodeg.euler_h1_power_ring(4)
    assert str(kodeg.euler_rtilde(1)) == "-[C0]_2"
    assert kodeg.KOElem("[R]_4").complexify() == "2C(0)"


def test_parse_errors():
    with pytest.raises(kodeg.ParseError):
        kodeg.KOElem("[Q]")
    with pytest.raises(ValueError):
        kodeg.eval("[R] + [R]_4")


def test_polynomials():
    assert kodeg.mu_poly(3) == "-x0 + x0^3*x1*x2*x3"
    assert kodeg.nu_poly(1) == [0, -1]
    assert all(kodeg.mu_nu_agree(n) for n in range(1, 5))


def test_lattice():
    assert kodeg.expand_family([[1, 2], [2, 3]]) == {(): 1, (1, 2): -2, (2, 3): -2, (1, 2, 3): 4}
    assert kodeg.cover_count([1, 2, 3], 2, [[1, 2], [2, 3]]) == 1
    assert kodeg.d_of(-8) == 3


def test_identities():
    assert kodeg.keyrelation_check(1) and kodeg.keyrelation_check(-1)
    assert kodeg.divis_verify(2, 0, 0, [1, 0])
    rows, laws_ok = kodeg.table_discrepancies()
    assert laws_ok
    assert rows == {"[R]_4 [H_m]_4", "[Rt]_4 [H_m]_4", "[H_m]_4 [H_n]_4"}


def test_bounds():
    assert kodeg.epsilon(0, 4) == 3
    assert kodeg.epsilon(-2, 5) == 2
    assert kodeg.torus_pattern_rhs(2, -16, 9) == 2 + 4 + kodeg.epsilon(3, 9)
    k3 = json.loads(kodeg.load_manifold(str(DATA / "k3.json")))
    report = kodeg.bound(k3)
    assert report["best_rhs"] == 3 and report["satisfied"]
    bad = kodeg.bound({"b1": 0, "sign": -32, "b2plus": 5})
    assert bad["best_rhs"] == 6 and not bad["satisfied"]


def test_manifolds():
    t4 = kodeg.mtorus(1)
    two = json.loads(kodeg.connected_sum(t4, t4))
    assert two["b1"] == 8
    assert [q["subset"] for q in two["quad"]] == [[1, 2, 3, 4], [5, 6, 7, 8]]
    with pytest.raises(kodeg.ValidationError, match="not divisible by 16"):
        kodeg.bound({"b1": 0, "sign": -8, "b2plus": 3})


def test_verify_suite_small():
    checks = kodeg.verify(max_n=3, max_m=2, trials=20)
    assert len(checks) == 9
    assert all(ok for _, ok, _ in checks), checks
