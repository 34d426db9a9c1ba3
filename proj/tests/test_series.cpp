#include <doctest.h>

#include <random>

#include "qpw/hensel.hpp"
#include "qpw/laurent_poly.hpp"
#include "qpw/series.hpp"

using namespace qpw;

namespace {

Series<Rat> from_ints(std::initializer_list<long> cs) {
    Series<Rat> s(int(cs.size()) - 1);
    int i = 0;
    for (long c : cs) s.at(i++) = Rat(c);
    return s;
}

Series<Rat> random_series(std::mt19937& rng, int order) {
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 5);
    Series<Rat> s(order);
    for (int i = 0; i <= order; ++i) {
        Rat v(num(rng), den(rng));
        v.canonicalize();
        s.at(i) = v;
    }
    return s;
}

}  // namespace

TEST_CASE("series truncation order is strict") {
    Series<Rat> s = from_ints({1, 2, 3});
    CHECK(s.order() == 2);
    CHECK(s[2] == Rat(3));
    CHECK_THROWS_AS(s[3], SeriesOrderError);
    CHECK_THROWS_AS(s.truncated(5), SeriesOrderError);
    CHECK(s.truncated(1).order() == 1);
}

TEST_CASE("product truncates to the shorter factor") {
    Series<Rat> a = from_ints({1, 1, 1, 1, 1});
    Series<Rat> b = from_ints({1, -1});
    Series<Rat> p = a * b;
    CHECK(p.order() == 1);
    CHECK(p[0] == Rat(1));
    CHECK(p[1] == Rat(0));
}

TEST_CASE("geometric series inverts 1 - t") {
    Series<Rat> den = from_ints({1, -1, 0, 0, 0, 0});
    Series<Rat> inv = series_inverse(den);
    for (int i = 0; i <= 5; ++i) CHECK(inv[i] == Rat(1));
    CHECK((den * inv)[5] == Rat(0));
    CHECK((den * inv)[0] == Rat(1));
}

TEST_CASE("division requires a unit constant term") {
    Series<Rat> num = from_ints({0, 1});
    Series<Rat> den = from_ints({0, 1});
    CHECK_THROWS_AS(series_div(num, den), DivisionByNonUnit);
    CHECK(div_laurent(num, den).to_series(0)[0] == Rat(1));
}

TEST_CASE("shifts") {
    Series<Rat> s = from_ints({0, 0, 3, 4});
    Series<Rat> d = s.shifted_down(2);
    CHECK(d.order() == 1);
    CHECK(d[0] == Rat(3));
    CHECK_THROWS_AS(from_ints({1, 2}).shifted_down(1), SeriesOrderError);
    Series<Rat> u = d.shifted_up(2);
    CHECK(u.order() == 3);
    CHECK(u[2] == Rat(3));
}

TEST_CASE("sqrt of 1 - 4t^2 matches the central-binomial expansion") {
    Series<Rat> f(10);
    f.at(0) = Rat(1);
    f.at(2) = Rat(-4);
    Series<Rat> r = series_sqrt(f);
    // 1 - 2t^2 - 2t^4 - 4t^6 - 10t^8 - 28t^10
    CHECK(r[0] == Rat(1));
    CHECK(r[2] == Rat(-2));
    CHECK(r[4] == Rat(-2));
    CHECK(r[6] == Rat(-4));
    CHECK(r[8] == Rat(-10));
    CHECK(r[10] == Rat(-28));
    CHECK((r * r - f).is_zero_to_order());
}

TEST_CASE("sqrt handles rational square constant terms and rejects others") {
    Series<Rat> f(4);
    f.at(0) = Rat(9, 4);
    f.at(1) = Rat(1);
    Series<Rat> r = series_sqrt(f);
    CHECK(r[0] == Rat(3, 2));
    CHECK((r * r - f).is_zero_to_order());
    Series<Rat> g(2);
    g.at(0) = Rat(2);
    CHECK_THROWS_AS(series_sqrt(g), NonSquareConstantTerm);
}

TEST_CASE("sqrt over the Laurent-polynomial ring") {
    // 1 - 2(x + 1/x) t: square the root back.
    Series<LaurentPoly> f(8);
    f.at(0) = LaurentPoly(1);
    LaurentPoly w = LaurentPoly::monomial(1, Rat(-2));
    w += LaurentPoly::monomial(-1, Rat(-2));
    f.at(1) = w;
    Series<LaurentPoly> r = series_sqrt(f);
    Series<LaurentPoly> back = r * r - f;
    for (int n = 0; n <= 8; ++n) CHECK(back[n].is_zero());
    Series<LaurentPoly> bad(2);
    bad.at(0) = LaurentPoly::monomial(1);
    CHECK_THROWS_AS(series_sqrt(bad), NonSquareConstantTerm);
}

TEST_CASE("newton_root solves y = t(1 + y^2)") {
    // P(y) = -y + t + t y^2; root is the generating series of Motzkin-like
    // odd Catalan numbers: t + t^3 + 2t^5 + 5t^7 + 14t^9.
    int order = 9;
    std::vector<Series<Rat>> poly(3, Series<Rat>(order));
    poly[0].at(1) = Rat(1);
    poly[1].at(0) = Rat(-1);
    poly[2].at(1) = Rat(1);
    int rounds = 0;
    Series<Rat> y = newton_root(poly, Rat(0), order, &rounds);
    CHECK(y[1] == Rat(1));
    CHECK(y[3] == Rat(1));
    CHECK(y[5] == Rat(2));
    CHECK(y[7] == Rat(5));
    CHECK(y[9] == Rat(14));
    CHECK(rounds <= 5);  // quadratic convergence: ~log2(order) rounds
    Series<Rat> residual = poly[0] + poly[1] * y + poly[2] * y * y;
    CHECK(residual.is_zero_to_order());
}

TEST_CASE("newton_root rejects bad seeds") {
    std::vector<Series<Rat>> poly(2, Series<Rat>(4));
    poly[0].at(0) = Rat(1);  // P = 1 + y: P(0) = 1 != 0 mod t
    poly[1].at(0) = Rat(1);
    CHECK_THROWS_AS(newton_root(poly, Rat(0), 4), SingularLift);
}

TEST_CASE("Laurent-t windows track what is known") {
    Series<Rat> body = from_ints({1, 2, 3, 4});
    LaurentT<Rat> f(-2, body);  // t^-2 + 2 t^-1 + 3 + 4 t
    CHECK(f.low() == -2);
    CHECK(f.high() == 1);
    CHECK(f.coeff(-2) == Rat(1));
    CHECK_THROWS_AS(f.coeff(2), SeriesOrderError);
    CHECK(f.has_negative_part());
    CHECK_THROWS_AS(f.to_series(1), SeriesOrderError);

    LaurentT<Rat> g = f * LaurentT<Rat>(2, from_ints({1, 0, 0, 0}));
    CHECK(g.low() == 0);
    CHECK(g.coeff(0) == Rat(1));
    Series<Rat> s = g.to_series(3);
    CHECK(s[3] == Rat(4));
}

TEST_CASE("Laurent-t division strips valuations and windows shrink") {
    // (t^2 + t^3) / (t - t^2) = t + 2t^2 + 2t^3 + ...
    Series<Rat> num(5), den(5);
    num.at(2) = Rat(1);
    num.at(3) = Rat(1);
    den.at(1) = Rat(1);
    den.at(2) = Rat(-1);
    LaurentT<Rat> q = div_laurent(num, den);
    CHECK(q.low() == 1);
    CHECK(q.high() == 4);  // one order lost to each valuation strip
    CHECK(q.coeff(1) == Rat(1));
    CHECK(q.coeff(2) == Rat(2));
    CHECK(q.coeff(3) == Rat(2));
    LaurentT<Rat> inv = q.inverse();
    CHECK(inv.low() == -1);
    CHECK((q * inv).coeff(0) == Rat(1));
}

TEST_CASE("cubic factorization with explicit seed") {
    // (x - 1)(x - 2)(x - t) = x^3 - (3 + t) x^2 + (2 + 3t) x - 2t.
    int order = 8;
    std::array<Series<Rat>, 4> c{Series<Rat>(order), Series<Rat>(order), Series<Rat>(order),
                                 Series<Rat>(order)};
    c[3].at(0) = Rat(1);
    c[2].at(0) = Rat(-3);
    c[2].at(1) = Rat(-1);
    c[1].at(0) = Rat(2);
    c[1].at(1) = Rat(3);
    c[0].at(1) = Rat(-2);
    auto fac = hensel_factor_cubic(c, std::make_pair(Rat(3), Rat(2)));
    CHECK(fac.s[0] == Rat(3));
    CHECK(fac.s[1] == Rat(0));
    CHECK(fac.p[0] == Rat(2));
    CHECK(fac.e[0] == Rat(1));
    // Linear factor x + f with f = -t: the lifted root is t.
    CHECK(fac.f[0] == Rat(0));
    CHECK(fac.f[1] == Rat(-1));
    auto root = fac.linear_root();
    CHECK(root.coeff(1) == Rat(1));
}

TEST_CASE("cubic factorization auto-seeds when the leading coefficient vanishes mod t") {
    // -4t^2 x^3 + x^2 - 2t x + t^2: quadratic mod t, so the seed is derived.
    int order = 9;
    std::array<Series<Rat>, 4> c{Series<Rat>(order), Series<Rat>(order), Series<Rat>(order),
                                 Series<Rat>(order)};
    c[0].at(2) = Rat(1);
    c[1].at(1) = Rat(-2);
    c[2].at(0) = Rat(1);
    c[3].at(2) = Rat(-4);
    auto fac = hensel_factor_cubic(c);
    // Constant term of the quadratic discriminant factor: f = 1 - 8t^3 - 48t^6 ...
    CHECK(fac.f[0] == Rat(1));
    CHECK(fac.f[3] == Rat(-8));
    CHECK(fac.f[6] == Rat(-48));
    CHECK(fac.f[9] == Rat(-640));
}

TEST_CASE("cubic factorization rejects non-coprime mod-t factors") {
    // (x - 1)^2 (x - 1 - t): quadratic and linear parts share the root 1 mod t.
    int order = 4;
    std::array<Series<Rat>, 4> c{Series<Rat>(order), Series<Rat>(order), Series<Rat>(order),
                                 Series<Rat>(order)};
    // (x^2 - 2x + 1)(x - 1 - t) = x^3 - (3+t) x^2 + (3+2t) x - (1+t)
    c[3].at(0) = Rat(1);
    c[2].at(0) = Rat(-3);
    c[2].at(1) = Rat(-1);
    c[1].at(0) = Rat(3);
    c[1].at(1) = Rat(2);
    c[0].at(0) = Rat(-1);
    c[0].at(1) = Rat(-1);
    CHECK_THROWS_AS(hensel_factor_cubic(c, std::make_pair(Rat(2), Rat(1))), SingularLift);
}

TEST_CASE("ring axioms hold on random series") {
    std::mt19937 rng(20240817);
    for (int trial = 0; trial < 25; ++trial) {
        Series<Rat> a = random_series(rng, 8);
        Series<Rat> b = random_series(rng, 8);
        Series<Rat> c = random_series(rng, 8);
        CHECK(a * b == b * a);
        CHECK((a + b) * c == a * c + b * c);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a - a == Series<Rat>(8));
        if (!is_zero(b[0])) {
            Series<Rat> q = series_div(a, b);
            CHECK(q * b == a);
        }
    }
}

TEST_CASE("series round-trips through Laurent windows") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 10; ++trial) {
        Series<Rat> a = random_series(rng, 6);
        a.at(0) = Rat(1);  // unit
        LaurentT<Rat> w = LaurentT<Rat>::from_series(a);
        CHECK(w.to_series(6) == a);
        CHECK((w * w.inverse()).coeff(0) == Rat(1));
    }
}
