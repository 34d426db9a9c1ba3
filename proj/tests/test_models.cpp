#include <doctest.h>

#include <set>

#include "qpw/models.hpp"

using namespace qpw;

TEST_CASE("registry has 23 models with the expected group-order split") {
    const auto& models = all_models();
    REQUIRE(models.size() == 23);
    int order4 = 0, order6 = 0, order8 = 0;
    for (const auto& m : models) {
        CHECK(m.id >= 1);
        CHECK(m.id <= 23);
        if (m.group_order == 4) ++order4;
        if (m.group_order == 6) ++order6;
        if (m.group_order == 8) ++order8;
    }
    CHECK(order4 == 16);
    CHECK(order6 == 5);
    CHECK(order8 == 2);
    for (int i = 1; i <= 16; ++i) CHECK(get_model(i).group_order == 4);
    for (int i = 17; i <= 21; ++i) CHECK(get_model(i).group_order == 6);
    for (int i = 22; i <= 23; ++i) CHECK(get_model(i).group_order == 8);
}

TEST_CASE("registry self-checks pass") {
    auto checks = validate_registry();
    CHECK(!checks.empty());
    for (const auto& c : checks) {
        INFO(c.what);
        CHECK(c.ok);
    }
    CHECK(registry_ok(checks));
}

TEST_CASE("known step sets") {
    const Model& simple = get_model(1);
    std::set<Step> s1(simple.steps.begin(), simple.steps.end());
    CHECK(s1 == std::set<Step>{{1, 0}, {-1, 0}, {0, 1}, {0, -1}});

    const Model& diag = get_model(2);
    std::set<Step> s2(diag.steps.begin(), diag.steps.end());
    CHECK(s2 == std::set<Step>{{1, 1}, {1, -1}, {-1, 1}, {-1, -1}});

    const Model& m17 = get_model(17);
    std::set<Step> s17(m17.steps.begin(), m17.steps.end());
    CHECK(s17 == std::set<Step>{{0, 1}, {-1, 0}, {1, -1}});

    const Model& kre = get_model(19);
    std::set<Step> s19(kre.steps.begin(), kre.steps.end());
    CHECK(s19 == std::set<Step>{{-1, 0}, {0, -1}, {1, 1}});

    const Model& rkre = get_model(20);
    std::set<Step> s20(rkre.steps.begin(), rkre.steps.end());
    CHECK(s20 == std::set<Step>{{1, 0}, {0, 1}, {-1, -1}});
}

TEST_CASE("step slices agree with the step set") {
    for (const auto& m : all_models()) {
        // Reassemble S(x, y) from both slicings and compare term sets.
        std::set<std::pair<int, int>> from_a, from_b, steps;
        for (const auto& s : m.steps) steps.insert({s.dx, s.dy});
        for (int i = -1; i <= 1; ++i) {
            LaurentPoly a = m.A(i);
            for (int e = a.lo(); e <= a.hi(); ++e)
                if (!is_zero(a.coeff(e))) from_a.insert({e, i});
            LaurentPoly b = m.B(i);
            for (int e = b.lo(); e <= b.hi(); ++e)
                if (!is_zero(b.coeff(e))) from_b.insert({i, e});
        }
        CHECK(from_a == steps);
        CHECK(from_b == steps);
    }
}

TEST_CASE("status table marks the tabulated algebraic cells") {
    // Models with an algebraic unweighted column.
    for (int id : {19, 20, 21, 23}) {
        CHECK(get_model(id).status(TableColumn::Both1).cls == FuncClass::Algebraic);
    }
    CHECK(get_model(1).status(TableColumn::Both1).cls == FuncClass::DFinite);
    CHECK(get_model(1).status(TableColumn::B1).cls == FuncClass::DFinite);
    CHECK(get_model(1).status(TableColumn::General).cls == FuncClass::DAlgebraic);
}

TEST_CASE("step names round-trip") {
    for (const auto& m : all_models())
        for (const auto& s : m.steps) CHECK(step_from_name(step_name(s)) == s);
    CHECK_THROWS_AS(step_from_name("Q"), Error);
}

TEST_CASE("unknown model ids throw") {
    CHECK_THROWS_AS(get_model(0), UnknownModel);
    CHECK_THROWS_AS(get_model(24), UnknownModel);
    CHECK_THROWS_AS(get_model(-3), UnknownModel);
}
