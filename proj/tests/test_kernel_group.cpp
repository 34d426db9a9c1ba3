#include <doctest.h>

#include <set>

#include "qpw/fe_check.hpp"
#include "qpw/kernel_group.hpp"
#include "qpw/models.hpp"
#include "qpw/walks.hpp"

using namespace qpw;

TEST_CASE("generators are involutions that preserve S") {
    for (const auto& m : all_models()) {
        INFO("model ", m.id);
        RationalMap phi = involution_phi(m);
        RationalMap psi = involution_psi(m);
        CHECK(is_identity(compose(phi, phi)));
        CHECK(is_identity(compose(psi, psi)));
        CHECK(preserves_step_polynomial(phi, m));
        CHECK(preserves_step_polynomial(psi, m));
        CHECK(!is_identity(phi));
        CHECK(!is_identity(psi));
    }
}

TEST_CASE("generators match the tabulated formulas") {
    for (const auto& m : all_models()) {
        INFO("model ", m.id);
        // phi: x -> x^-1 * phi_num(y)/phi_den(y), y fixed.
        RationalFunc y = RationalFunc::variable_y();
        RationalFunc x = RationalFunc::variable_x();
        auto lp_in = [](const LaurentPoly& p, const RationalFunc& v) {
            // Evaluate a Laurent polynomial at a rational function.
            RationalFunc acc;
            for (int e = p.lo(); e <= p.hi(); ++e) {
                if (is_zero(p.coeff(e))) continue;
                RationalFunc pw(BivarPoly(1), BivarPoly(1));
                for (int i = 0; i < std::abs(e); ++i) pw = e > 0 ? pw * v : pw / v;
                Rat c = p.coeff(e);
                RationalFunc cf(BivarPoly(Int(c.get_num())), BivarPoly(Int(c.get_den())));
                acc = acc + cf * pw;
            }
            return acc;
        };
        RationalMap phi_expect{lp_in(m.phi_num, y) / (x * lp_in(m.phi_den, y)), y};
        CHECK(involution_phi(m) == phi_expect);
        RationalMap psi_expect{x, lp_in(m.psi_num, x) / (y * lp_in(m.psi_den, x))};
        CHECK(involution_psi(m) == psi_expect);
    }
}

TEST_CASE("specific involution formulas") {
    // Simple walk: both generators invert a coordinate.
    const Model& m1 = get_model(1);
    CHECK(involution_phi(m1).to_string() == "((1)/(x), y)");
    CHECK(involution_psi(m1).to_string() == "(x, (1)/(y))");

    // steps N,SE,S,SW: A_1 = 1, A_-1 = x + 1 + 1/x, so psi sends y to
    // (x^2 + x + 1)/(xy).
    const Model& m11 = get_model(11);
    CHECK(involution_psi(m11).to_string() == "(x, (x^2 + x + 1)/(xy))");
}

TEST_CASE("closure orders match the registry for all models") {
    for (const auto& m : all_models()) {
        INFO("model ", m.id);
        GroupResult g = group_closure(m);
        CHECK(g.order() == m.group_order);
        // Distinctness by canonical form.
        std::set<std::string> keys;
        for (const auto& e : g.elements) keys.insert(e.key());
        CHECK(int(keys.size()) == g.order());
        // Every element preserves the step polynomial.
        for (const auto& e : g.elements) CHECK(preserves_step_polynomial(e, m));
        CHECK(is_identity(g.elements.front()));
    }
}

TEST_CASE("closure respects caps") {
    const Model& m = get_model(1);
    CHECK_THROWS_AS(group_closure(m, 3), GroupOrderExceedsCap);
    CHECK_NOTHROW(group_closure(m, 4));
}

TEST_CASE("infinite-group step sets exceed the caps") {
    // {NW, NE, SE}: composing the involutions drives map degrees up without
    // bound, so the degree cap trips first.
    Model m;
    m.id = 99;
    m.steps = {{-1, 1}, {1, 1}, {1, -1}};
    CHECK_THROWS_AS(group_closure(m, 12, 8), GroupOrderExceedsCap);
    // {N, NW, E, S, W}: new elements of modest degree keep appearing, so the
    // element-count cap trips instead.
    Model m2;
    m2.id = 98;
    m2.steps = {{0, 1}, {1, 0}, {-1, 1}, {0, -1}, {-1, 0}};
    CHECK_THROWS_AS(group_closure(m2, 12, 8), GroupOrderExceedsCap);
}

TEST_CASE("functional equations hold symbolically for every model") {
    for (const auto& m : all_models()) {
        INFO("model ", m.id);
        FeCheckResult r = check_functional_equations(enumerate_walks(m, 6));
        std::string first_failure = r.failures.empty() ? std::string() : r.failures.front();
        INFO(first_failure);
        CHECK(r.ok);
        CHECK(r.failures.empty());
        CHECK(r.order == 6);
    }
}

TEST_CASE("functional-equation checker notices corrupted data") {
    auto table = enumerate_walks(get_model(1), 5);
    table.layers[4].at(0, 0) += WeightPoly(1);
    FeCheckResult r = check_functional_equations(table);
    CHECK(!r.ok);
    CHECK(!r.failures.empty());
}
