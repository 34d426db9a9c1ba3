#include <doctest.h>

#include "qpw/models.hpp"
#include "qpw/walks.hpp"

using namespace qpw;

TEST_CASE("length-2 excursion weight of the simple walk is a^2 b + a b^2") {
    auto table = enumerate_walks(get_model(1), 2);
    const WeightPoly& g2 = table.layer(2).get(0, 0);
    WeightPoly expect;
    expect += WeightPoly::monomial(2, 1, Int(1));
    expect += WeightPoly::monomial(1, 2, Int(1));
    CHECK(g2 == expect);
    CHECK(table.layer(0).get(0, 0) == WeightPoly(1));
    CHECK(table.layer(1).get(0, 0).is_zero());
}

TEST_CASE("simple-walk confined path counts at a = b = 1") {
    auto table = enumerate_walks(get_model(1), 5);
    auto totals = total_confined_counts(table);
    CHECK(totals == std::vector<Int>{Int(1), Int(2), Int(6), Int(18), Int(60), Int(200)});
}

TEST_CASE("unweighted excursion counts of the simple walk") {
    Series<Rat> g = excursion_series(get_model(1), 6, Rat(1), Rat(1));
    CHECK(g[0] == Rat(1));
    CHECK(g[1] == Rat(0));
    CHECK(g[2] == Rat(2));
    CHECK(g[3] == Rat(0));
    CHECK(g[4] == Rat(10));
    CHECK(g[6] == Rat(70));
}

TEST_CASE("DP agrees with the brute-force oracle, symbolically, all models") {
    for (const auto& m : all_models()) {
        auto dp = enumerate_walks(m, 6);
        auto brute = brute_force_walks(m, 6);
        INFO("model ", m.id);
        CHECK(dp == brute);
    }
}

TEST_CASE("brute force refuses unreasonable orders") {
    CHECK_THROWS_AS(brute_force_walks(get_model(3), 13), Error);
}

TEST_CASE("enumeration then specialization equals specialized enumeration") {
    for (int id : {1, 5, 17, 19, 23}) {
        const Model& m = get_model(id);
        auto symb = enumerate_walks(m, 7);
        for (auto [a, b] : {std::pair<Rat, Rat>{Rat(2), Rat(3)}, {Rat(1, 2), Rat(5)},
                            {Rat(0), Rat(1)}, {Rat(-1), Rat(2)}}) {
            INFO("model ", id, " a=", a.get_str(), " b=", b.get_str());
            CHECK(specialize(symb, a, b) == enumerate_walks_at(m, 7, a, b));
        }
    }
}

TEST_CASE("excursion_series matches the full table's origin row") {
    for (int id : {2, 11, 18, 22}) {
        const Model& m = get_model(id);
        Rat a(3, 2), b(2);
        auto views = boundary_views(enumerate_walks_at(m, 8, a, b));
        CHECK(excursion_series(m, 8, a, b) == views.g);
    }
}

TEST_CASE("x <-> y swap symmetry for diagonally symmetric step sets") {
    // Step sets invariant under (dx,dy) -> (dy,dx): swapping a and b fixes g.
    for (int id : {1, 2, 3, 18, 19, 20, 21}) {
        const Model& m = get_model(id);
        bool diag = true;
        for (const auto& s : m.steps) diag = diag && m.has_step(s.dy, s.dx);
        REQUIRE(diag);
        CHECK(excursion_series(m, 6, Rat(2), Rat(5)) == excursion_series(m, 6, Rat(5), Rat(2)));
    }
}

TEST_CASE("reversing all steps preserves excursions") {
    // Models 19 and 20 are step-reversals of each other; an excursion read
    // backwards is an excursion of the reversed model with the same boundary
    // contacts, so the two excursion series coincide at every (a, b).
    for (auto [a, b] : {std::pair<Rat, Rat>{Rat(1), Rat(1)}, {Rat(2), Rat(2)}, {Rat(2), Rat(7)}}) {
        CHECK(excursion_series(get_model(19), 9, a, b) ==
              excursion_series(get_model(20), 9, a, b));
    }
}

TEST_CASE("boundary views collect axis rows") {
    auto views = boundary_views(enumerate_walks_at(get_model(1), 3, Rat(1), Rat(1)));
    // After one N,E step from the origin: q(1,0) and q(0,1) both weight 1.
    CHECK(views.qx0[1].at(1) == Rat(1));
    CHECK(views.q0y[1].at(1) == Rat(1));
    CHECK(views.qx0[1].count(0) == 0);  // no length-1 return to the origin
    CHECK(views.qdiag[2].at(1) == Rat(2));  // NE or EN to (1,1)
}

TEST_CASE("zero boundary weights kill axis-touching walks") {
    // With a = 0 every walk that touches the x-axis after its first step has
    // weight zero, so excursions (which end at the origin) vanish for n > 0.
    Series<Rat> g = excursion_series(get_model(1), 6, Rat(0), Rat(1));
    for (int n = 1; n <= 6; ++n) CHECK(g[n] == Rat(0));
    CHECK(g[0] == Rat(1));
}
