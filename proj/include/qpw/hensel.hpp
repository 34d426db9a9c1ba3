#pragma once

#include <array>
#include <optional>
#include <utility>

#include "qpw/series.hpp"

namespace qpw {

// Factorization of a cubic over Q[[t]] into a monic quadratic times a linear
// factor:  c3 x^3 + c2 x^2 + c1 x + c0 = (x^2 - s x + p)(e x + f), e = c3.
struct CubicFactorization {
    Series<Rat> s, p;  // quadratic factor x^2 - s x + p
    Series<Rat> e, f;  // linear factor e x + f

    // Root of the linear factor, -f/e, as a windowed Laurent series in t
    // (the interesting case has e of positive t-valuation, so the root has
    // a pole at t = 0).
    LaurentT<Rat> linear_root() const {
        return LaurentT<Rat>::from_series(-f) / LaurentT<Rat>::from_series(e);
    }
};

// Hensel lifting of the split via a two-variable Newton iteration on
//   F1(s,p) = c3 p - c2 s - c3 s^2 - c1
//   F2(s,p) = c2 p + c3 s p - c0
// (obtained by expanding the product and eliminating f = c2 + c3 s).
// The seed (s0, p0) is the mod-t factorization; when the cubic degenerates
// to a quadratic mod t (c3(0) = 0, c2(0) != 0) the seed is derived
// automatically, otherwise it must be supplied.  The Jacobian at the seed
// must be invertible mod t; convergence is quadratic.
inline CubicFactorization hensel_factor_cubic(const std::array<Series<Rat>, 4>& c,
                                              std::optional<std::pair<Rat, Rat>> seed = std::nullopt) {
    const Series<Rat>&c0 = c[0], &c1 = c[1], &c2 = c[2], &c3 = c[3];
    int order = std::min(std::min(c0.order(), c1.order()), std::min(c2.order(), c3.order()));
    if (order < 0) throw SeriesOrderError("empty cubic coefficients");

    Rat s0, p0;
    if (seed) {
        s0 = seed->first;
        p0 = seed->second;
    } else {
        if (!qpw::is_zero(c3[0]) || qpw::is_zero(c2[0]))
            throw FactorizationModTFailed("no automatic seed: cubic is nondegenerate mod t");
        s0 = -c1[0] / c2[0];
        p0 = c0[0] / c2[0];
    }
    // Seed must satisfy F = 0 mod t.
    {
        Rat f1 = c3[0] * p0 - c2[0] * s0 - c3[0] * s0 * s0 - c1[0];
        Rat f2 = c2[0] * p0 + c3[0] * s0 * p0 - c0[0];
        if (!qpw::is_zero(f1) || !qpw::is_zero(f2))
            throw FactorizationModTFailed("seed is not a factorization mod t");
        Rat j11 = -c2[0] - 2 * c3[0] * s0, j12 = c3[0];
        Rat j21 = c3[0] * p0, j22 = c2[0] + c3[0] * s0;
        if (qpw::is_zero(j11 * j22 - j12 * j21))
            throw SingularLift("Jacobian singular mod t (non-coprime factors)");
    }

    Series<Rat> s = Series<Rat>::constant(s0, 0), p = Series<Rat>::constant(p0, 0);
    int correct = 1, rounds = 0;
    while (correct <= order) {
        int work = std::min(2 * correct, order + 1) - 1;
        Series<Rat> sw(work), pw(work);
        for (int i = 0; i <= std::min(work, s.order()); ++i) {
            sw.at(i) = s[i];
            pw.at(i) = p[i];
        }
        auto C0 = c0.truncated(work), C1 = c1.truncated(work), C2 = c2.truncated(work), C3 = c3.truncated(work);
        Series<Rat> F1 = C3 * pw - C2 * sw - C3 * sw * sw - C1;
        Series<Rat> F2 = C2 * pw + C3 * sw * pw - C0;
        Series<Rat> J11 = -C2 - C3 * sw.scaled(Rat(2)), J12 = C3;
        Series<Rat> J21 = C3 * pw, J22 = C2 + C3 * sw;
        Series<Rat> det = J11 * J22 - J12 * J21;
        // delta = J^{-1} F
        Series<Rat> ds = series_div(J22 * F1 - J12 * F2, det);
        Series<Rat> dp = series_div(J11 * F2 - J21 * F1, det);
        s = sw - ds;
        p = pw - dp;
        correct = work + 1;
        if (++rounds > 64) throw SingularLift("cubic factorization failed to converge");
    }

    CubicFactorization out;
    out.s = s.truncated(order);
    out.p = p.truncated(order);
    out.e = c3.truncated(order);
    out.f = c2.truncated(order) + out.e * out.s;

    // Exact check of the reconstruction to the full order.
    Series<Rat> F1 = out.e * out.p - c2.truncated(order) * out.s - out.e * out.s * out.s - c1.truncated(order);
    Series<Rat> F2 = c2.truncated(order) * out.p + out.e * out.s * out.p - c0.truncated(order);
    if (!F1.is_zero_to_order() || !F2.is_zero_to_order())
        throw SingularLift("cubic factorization verification failed");
    return out;
}

}  // namespace qpw
