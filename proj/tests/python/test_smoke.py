import pytest

tb = pytest.importorskip("turanballoon")

FRIENDSHIP3 = "tree: c-x c-y c-z\ncycles: c-x:3 c-y:3 c-z:3\n"
DOUBLE_STAR = "tree: u-v u-x1 u-x2 v-y1 v-y2\ncycles: u-v:5 u-x1:3 u-x2:3 v-y1:5 v-y2:5\n"


def test_formulas():
    assert tb.chvatal_hanson(3, 3) == 10
    assert tb.e_base(12, 3) == 45


def test_analyze_and_turan():
    r = tb.analyze(FRIENDSHIP3)
    assert (r["a"], r["k"], r["k1"], r["branch"]) == (1, 3, 3, "k_eq_k1")
    assert tb.turan_number(100, FRIENDSHIP3)["total"] == 2506


def test_decomposition_family():
    assert tb.decomposition_family(FRIENDSHIP3) == sorted(tb.decomposition_family(FRIENDSHIP3))
    assert len(tb.decomposition_family(FRIENDSHIP3)) == 2


def test_construction_is_free():
    g = tb.extremal_candidate(20, DOUBLE_STAR)
    assert not tb.contains(g, tb.balloon(DOUBLE_STAR))


def test_oracles():
    value, witness = tb.ex_exact(5, ["Bw"])
    assert value == 6
    assert not tb.contains(witness, "Bw")
    assert tb.f2_exact(5, "Bw") >= value


def test_audit():
    assert tb.audit("konig", 200, 1)["counterexamples"] == 0


def test_errors():
    with pytest.raises(tb.TuranBalloonError):
        tb.analyze("tree: a-b b-c c-d\ncycles: a-b:3 b-c:5 c-d:3")
    with pytest.raises(ValueError):
        tb.balloon("tree: 1-2\ncycles: 1-2:4")
