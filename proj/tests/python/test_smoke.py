from fractions import Fraction

import qpwalks


def test_model_registry():
    ids = qpwalks.model_ids()
    assert ids == list(range(1, 24))
    info = qpwalks.model_info(1)
    assert info["group_order"] == 4
    assert sorted(info["steps"]) == [(-1, 0), (0, -1), (0, 1), (1, 0)]


def test_excursion_counts():
    assert qpwalks.excursion(1, 4) == [1, 0, 2, 0, 10]
    half = qpwalks.excursion(1, 4, a=Fraction(1, 2), b=1)
    assert half[2] == Fraction(3, 4)  # a^2 b + a b^2 at a = 1/2


def test_symbolic_t2():
    rows = qpwalks.excursion_symbolic(1, 2)
    assert rows[0] == [(0, 0, "1")]
    assert sorted(rows[2]) == [(1, 2, "1"), (2, 1, "1")]


def test_group_orders():
    assert qpwalks.group_order(1) == 4
    assert qpwalks.group_order(19) == 6
    assert qpwalks.group_order(23) == 8


def test_fe_check():
    assert qpwalks.fe_check(2, order=6)["ok"]


def test_verify_routes():
    recs = qpwalks.verify(2, a="3", b="2", order=10)
    assert recs and all(r["ok"] for r in recs)


def test_guessers():
    catalan = [1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796, 58786, 208012,
               742900, 2674440, 9694845, 35357670, 129644790, 477638700,
               1767263190, 6564120420, 24466267020, 91482563640,
               343059613650, 1289904147324]
    alg = qpwalks.guess_algebraic(catalan, deg_g=3, deg_t=3, margin=5)
    assert alg is not None and alg["deg_g"] == 2

    central = [1, 2, 6, 20, 70, 252, 924, 3432, 12870, 48620, 184756, 705432,
               2704156, 10400600, 40116600, 155117520, 601080390, 2333606220,
               9075135300, 35345263800, 137846528820]
    ode = qpwalks.guess_ode(central, max_order=2, max_deg=2, margin=5)
    assert ode is not None and ode["order"] == 1
