#include "qpw/closed_forms.hpp"

#include <map>
#include <utility>

#include "qpw/walks.hpp"

namespace qpw {

namespace {

using LP = LaurentPoly;
using SLP = Series<LaurentPoly>;
using SR = Series<Rat>;

// Series with a few prescribed t-coefficients, zero elsewhere.
template <class R>
Series<R> sparse_t(int order, std::initializer_list<std::pair<int, R>> terms) {
    Series<R> s(order);
    for (const auto& [k, v] : terms) s.at(k) = v;
    return s;
}

LP xmono(int e, const Rat& c = Rat(1)) { return LP::monomial(e, c); }

// Root Z of z = t*(c2h z^2 + c1h z + 1); the reduced form of the kernel root
// after factoring A_{-1} out (Y = A_{-1} Z when c2h = A_1 A_{-1}, c1h = A_0).
SLP reduced_root(const LP& c2h, const LP& c1h, int order) {
    std::vector<SLP> poly{
        sparse_t<LP>(order, {{1, LP(1)}}),
        sparse_t<LP>(order, {{0, LP(-1)}, {1, c1h}}),
        sparse_t<LP>(order, {{1, c2h}}),
    };
    return newton_root<LP>(poly, LP(), order);
}

void check_span_cap(const SLP& y, const char* what) {
    for (int n = 0; n <= y.order(); ++n)
        if (y[n].span() > 2 * n + 4)
            throw SpanExceeded(std::string(what) + " coefficient at t^" + std::to_string(n));
}

}  // namespace

Series<LaurentPoly> kernel_root_y(const Model& m, int order) {
    std::vector<SLP> poly{
        sparse_t<LP>(order, {{1, -m.A(-1)}}),
        sparse_t<LP>(order, {{0, LP(1)}, {1, -m.A(0)}}),
        sparse_t<LP>(order, {{1, -m.A(1)}}),
    };
    SLP y = newton_root<LP>(poly, LP(), order);
    check_span_cap(y, "kernel root in y");
    return y;
}

Series<LaurentPoly> kernel_root_x(const Model& m, int order) {
    std::vector<SLP> poly{
        sparse_t<LP>(order, {{1, -m.B(-1)}}),
        sparse_t<LP>(order, {{0, LP(1)}, {1, -m.B(0)}}),
        sparse_t<LP>(order, {{1, -m.B(1)}}),
    };
    SLP x = newton_root<LP>(poly, LP(), order);
    check_span_cap(x, "kernel root in x");
    return x;
}

Series<Rat> model1_g_direct(int order, const Rat& a, const Rat& b) {
    if (a == 1 || b == 1)
        throw SpecializationSingular("direct route for model 1 needs a != 1 and b != 1");
    const int W = order + 6;
    const Model& m = get_model(1);
    SLP Y = kernel_root_y(m, W);

    // C = [x^0]{ t xbar (x^2 - 1) Y / ((a-1)Y - at)(tbx - b + 1) }.
    SLP num = Y.scaled(xmono(1) - xmono(-1)).shifted_up(1).truncated(W);
    SLP den1 = Y.scaled(LP(a - 1)) - sparse_t<LP>(W, {{1, LP(a)}});
    SLP den2 = sparse_t<LP>(W, {{0, LP(1 - b)}, {1, xmono(1, b)}});
    SR C = coeff_of_x(div_laurent(num, den1 * den2).to_series(W - 1), 0);

    // Power-series root Y' of -t y^2 + (1/b - t^2 b/(b-1)) y - t = 0.
    Rat invb = Rat(1) / b;
    std::vector<SR> ppoly{
        sparse_t<Rat>(W, {{1, Rat(-1)}}),
        sparse_t<Rat>(W, {{0, invb}, {2, -b / (b - 1)}}),
        sparse_t<Rat>(W, {{1, Rat(-1)}}),
    };
    SR Yp = newton_root<Rat>(ppoly, Rat(0), W);

    // P = Y' / (b ((a-1)Y' - at)); may carry a t-pole when ab = a + b.
    LaurentT<Rat> P = LaurentT<Rat>::from_series(Yp) /
                      LaurentT<Rat>::from_series((Yp.scaled(a - 1) - sparse_t<Rat>(W, {{1, a}})).scaled(b));

    Rat u = (a - 1) * (b - 1);
    // D = -u + u^2 C - (a-1)^2 (b^2 t^2 - (b-1)^2) P;  G = 1/u + 1/D.
    SR qfac = sparse_t<Rat>(W, {{0, -(b - 1) * (b - 1) * (a - 1) * (a - 1)},
                                {2, b * b * (a - 1) * (a - 1)}});
    LaurentT<Rat> D = LaurentT<Rat>::from_series(SR::constant(-u, W)) +
                      LaurentT<Rat>::from_series(C.scaled(u * u)) -
                      LaurentT<Rat>::from_series(qfac) * P;
    LaurentT<Rat> G = LaurentT<Rat>::from_series(SR::constant(Rat(1) / u, W)) + D.inverse();
    return G.to_series(order);
}

Series<Rat> model1_g_via_pr(int order, const Rat& a, const Rat& b) {
    if (a == 1 && b == 1)
        throw SpecializationSingular("corner-pair route for model 1 needs (a,b) != (1,1)");
    const int W = order + 4;
    const Model& m = get_model(1);
    SLP Y = kernel_root_y(m, W);

    // Corner constant term at weight c:  -[x^0]{ xbar^2 (x^2-1) Y / ((c-1)Y - ct) }.
    auto corner_ct = [&](const Rat& c) {
        SLP num = Y.scaled(LP(1) - xmono(-2));
        SLP den = Y.scaled(LP(c - 1)) - sparse_t<LP>(W, {{1, LP(c)}});
        return -coeff_of_x(div_laurent(num, den).to_series(W - 1), 0);
    };
    SR S = corner_ct(a).scaled(a - 1) + corner_ct(b).scaled(b - 1);

    Rat k = (1 - a) * (1 - b);
    SR shifted = S.shifted_up(2).truncated(W);
    SR num = SR::constant(k, W) - shifted.scaled(a * b);
    SR den = SR::constant(k, W) -
             sparse_t<Rat>(W, {{2, a * b * (2 * a * b - a - b)}}) -
             shifted.scaled(a * b * (a - 1) * (b - 1));
    return div_laurent(num, den).to_series(order);
}

Series<Rat> model2_dyck_factor(int order, const Rat& c) {
    SR root = series_sqrt(sparse_t<Rat>(order, {{0, Rat(1)}, {2, Rat(-4)}}));
    SR f = series_div(SR::constant(Rat(2), order),
                      SR::constant(Rat(2) - c, order) + root.scaled(c));

    // Cross-check against the explicit coefficient sum
    //   [t^(2n)]f = sum_k (k/n) binom(2n-k-1, n-k) c^k.
    for (int n = 0; n <= order; ++n) {
        Rat want(0);
        if (n == 0) {
            want = Rat(1);
        } else if (n % 2 == 0) {
            int half = n / 2;
            Rat cpow = c;
            for (int kk = 1; kk <= half; ++kk) {
                Int binom;
                mpz_bin_uiui(binom.get_mpz_t(), unsigned(2 * half - kk - 1), unsigned(half - kk));
                want += Rat(kk) / half * Rat(binom) * cpow;
                cpow *= c;
            }
        }
        if (f[n] != want)
            throw IdentityViolation("Dyck factor disagrees with its coefficient sum at t^" +
                                    std::to_string(n));
    }
    return f;
}

Series<Rat> model2_g_hadamard(int order, const Rat& a, const Rat& b) {
    SR fa = model2_dyck_factor(order, a);
    SR fb = model2_dyck_factor(order, b);
    SR g(order);
    for (int n = 0; n <= order; ++n) g.at(n) = fa[n] * fb[n];
    return g;
}

Series<Rat> model2_g_ct(int order, const Rat& a, const Rat& b) {
    if (b == 1)
        throw SpecializationSingular("constant-term route for model 2 needs b != 1");
    const int W = order + 2;
    // Reduced kernel root: Y = (x + xbar) Z with Z = t((x+xbar)^2 Z^2 + 1).
    LP u2 = xmono(2) + LP(2) + xmono(-2);
    SLP Z = reduced_root(u2, LP(), W);

    SLP num = Z.scaled(xmono(2) - LP(1));
    SLP den = sparse_t<LP>(W, {{1, LP(a)}}) + Z.scaled(LP(1 - a));
    SLP F = div_laurent(num, den).to_series(W - 1);

    // Pair x^(2k+2) against (b-1)^k; F must be even in x with bounded span.
    Rat bm1 = b - 1;
    SR g(order);
    for (int n = 0; n <= order; ++n) {
        const LP& p = F[n];
        if (p.hi() > n + 2)
            throw SpanExceeded("paired expansion coefficient at t^" + std::to_string(n));
        for (int e = p.lo(); e <= p.hi(); ++e)
            if (e % 2 != 0 && !qpw::is_zero(p.coeff(e)))
                throw ExpansionDirectionInvalid("odd x-power survives at t^" + std::to_string(n));
        Rat acc(0), pw(1);
        for (int j = 2; j <= p.hi(); j += 2) {
            acc += p.coeff(j) * pw;
            pw *= bm1;
        }
        g.at(n) = acc;
    }
    return g;
}

Series<Rat> symmetric_b1_g(const Model& m, int order, const Rat& a) {
    if (!m.sym_vertical || m.id < 1 || m.id > 16)
        throw Error("axis route needs a vertically symmetric model (ids 1..16)");
    const int W = order + 2;
    SLP Z = reduced_root(m.A(1) * m.A(-1), m.A(0), W);
    SLP num = Z.scaled(LP(1) - xmono(-2));
    SLP den = sparse_t<LP>(W, {{1, LP(a)}}) + Z.scaled(LP(1 - a));
    return coeff_of_x(div_laurent(num, den).to_series(order), 0);
}

Series<Rat> model17_g_a1(int order, const Rat& b) {
    if (qpw::is_zero(b))
        throw SpecializationSingular("model 17 route needs b != 0");
    const int W = order + 3;
    const Model& m = get_model(17);
    // Y = x Z for this step set (A_{-1} = x, A_0 = xbar, A_1 = 1).
    SLP Z = reduced_root(m.A(1) * m.A(-1), m.A(0), W);

    SLP inner = Z.scaled(xmono(2, b)).shifted_up(1).truncated(W) +
                sparse_t<LP>(W, {{1, -(xmono(3, b) + LP(b))}, {0, xmono(1, b - 1)}});
    SLP num = Z.scaled(xmono(1)) * inner;
    SLP den = sparse_t<LP>(W, {{1, xmono(4, b)}}) *
              (Z.scaled(LP(b - 1)) - sparse_t<LP>(W, {{1, LP(b)}}));
    LaurentT<LP> h = div_laurent(num, den);

    // The t^-1 coefficient may be a nonzero Laurent polynomial, but its x^0
    // part has to cancel for G to be a power series.
    for (int e = h.low(); e < 0; ++e)
        if (!qpw::is_zero(h.coeff(e).coeff(0)))
            throw NonCancellingPole("x^0 part survives at t^" + std::to_string(e));
    SR g(order);
    for (int n = 0; n <= order; ++n) g.at(n) = h.coeff(n).coeff(0);
    return g;
}

KrewerasParts kreweras_parts(int order, const Rat& a) {
    if (a == 0 || a == 1)
        throw SpecializationSingular("discriminant route needs a outside {0, 1}");
    const int W = order;
    // x^2 Delta = -4t^2 x^3 + x^2 - 2t x + t^2, split into quadratic * linear.
    std::array<SR, 4> cubic{
        sparse_t<Rat>(W, {{2, Rat(1)}}),
        sparse_t<Rat>(W, {{1, Rat(-2)}}),
        SR::constant(Rat(1), W),
        sparse_t<Rat>(W, {{2, Rat(-4)}}),
    };
    KrewerasParts out;
    out.a = a;
    out.fac = hensel_factor_cubic(cubic);
    out.delta0 = out.fac.f;
    out.sqrt_delta0 = series_sqrt(out.delta0);

    // xi_minus: power-series root of a^2 t^2 x^2 - (a-1)x + at(a-1), picked
    // by its t-valuation (>= 3 before the t^-2 shift).
    Rat am1 = a - 1;
    SR disc = sparse_t<Rat>(W, {{0, am1 * am1}, {3, Rat(-4) * a * a * a * am1}});
    SR sq = series_sqrt(disc);
    SR chosen;
    for (int sign = 0; sign < 2 && !chosen.valid(); ++sign) {
        SR cand = sign == 0 ? SR::constant(am1, W) - sq : SR::constant(am1, W) + sq;
        auto v = cand.valuation();
        if (v && *v >= 3) chosen = cand;
    }
    if (!chosen.valid()) throw BranchSelectionFailed("neither square-root branch vanishes to order 3");
    out.xi_minus = chosen.shifted_down(2).scaled(Rat(1) / (2 * a * a));
    if (out.xi_minus[1] != a)
        throw BranchSelectionFailed("selected root does not start as a*t");

    // sqrt(Delta_plus(xi)) with Delta_plus = 1 - 4 t^2 x / Delta0.
    SR prod = out.xi_minus * series_inverse(out.delta0);
    SR dpx = SR::constant(Rat(1), W) - prod.scaled(Rat(4)).shifted_up(2).truncated(W);
    out.sqrt_deltap_xi = series_sqrt(dpx);
    return out;
}

namespace {

// The two sides of the specialized boundary relation at x = xi_minus:
//   M * ((a-1)L(0) + 1) = R * ((a-1)^2 L(0) - 1).
std::pair<SR, SR> kreweras_mr(const KrewerasParts& p) {
    const Rat& a = p.a;
    int W = p.xi_minus.order();
    SR M = (p.xi_minus * p.sqrt_delta0.truncated(W) - sparse_t<Rat>(W, {{1, Rat(2)}})) *
           p.sqrt_deltap_xi.truncated(W);
    M = M.scaled(a);
    SR R = sparse_t<Rat>(W, {{1, 2 * a}}) - p.xi_minus;
    return {M, R};
}

}  // namespace

Series<Rat> model19_g_aa(int order, const Rat& a) {
    KrewerasParts p = kreweras_parts(order + 4, a);
    auto [M, R] = kreweras_mr(p);
    SR num = M + R;
    SR den = (R.scaled(a - 1) - M).scaled(a - 1);
    return div_laurent(num, den).to_series(order);
}

void model19_midchecks(int order, const Rat& a) {
    if (a == 0 || a == 1)
        throw SpecializationSingular("discriminant route needs a outside {0, 1}");
    const Model& m = get_model(19);
    const int N = order;
    auto views = boundary_views(enumerate_walks_at(m, N, a, a));
    SLP Lx = rows_to_series(views.qx0);
    SR L0 = views.g;

    // (1) [y^0]{1/K} = 1/sqrt(Delta) with Delta = (1 - t xbar)^2 - 4 x t^2.
    SLP D = sparse_t<LP>(N, {{0, LP(1)}, {1, xmono(-1, Rat(-2))}, {2, xmono(-2) - xmono(1, Rat(4))}});
    SLP inv_sqrt = series_inverse(series_sqrt(D));
    {
        std::map<std::pair<int, int>, Rat> cur{{{0, 0}, Rat(1)}};
        for (int n = 0; n <= N; ++n) {
            LP slice;
            for (const auto& [k, c] : cur)
                if (k.second == 0) slice += xmono(k.first, c);
            if (slice != inv_sqrt[n])
                throw IdentityViolation("[y^0] kernel inverse vs inverse sqrt discriminant at t^" +
                                        std::to_string(n));
            std::map<std::pair<int, int>, Rat> next;
            for (const auto& [k, c] : cur)
                for (const auto& s : m.steps) next[{k.first + s.dx, k.second + s.dy}] += c;
            cur = std::move(next);
        }
    }

    // (2) (a - 1 - a t xbar) Q_d(xbar) - ((a-1)^2/a) L(0) + 1/a  =  C2 / sqrt(Delta).
    SLP Qd = rows_to_series(views.qdiag);
    SLP Qdb(N);
    for (int n = 0; n <= N; ++n) Qdb.at(n) = Qd[n].inverted_var();
    SLP L0e(N);
    for (int n = 0; n <= N; ++n) L0e.at(n) = LP(L0[n]);
    Rat am1 = a - 1;
    SLP lhs = Qdb.scaled(LP(am1)) -
              Qdb.scaled(xmono(-1, a)).shifted_up(1).truncated(N) -
              L0e.scaled(LP(am1 * am1 / a)) + SLP::constant(LP(Rat(1) / a), N);
    SLP f1 = sparse_t<LP>(N, {{0, LP(-1)}, {1, xmono(-1, 2 * a)}});
    SLP f2 = sparse_t<LP>(N, {{0, LP(1 - a)}, {1, xmono(-1, a * am1)}, {2, xmono(1, a * a)}});
    SLP C2 = (L0e * f1).scaled(LP(am1 * am1 / (a * a))) -
             (Lx * f2).scaled(LP(Rat(2) / a)) - f1.scaled(LP(Rat(1) / (a * a)));
    SLP rhs = C2 * inv_sqrt;
    for (int n = 0; n <= N; ++n)
        if (lhs[n] != rhs[n])
            throw IdentityViolation("boundary separation identity at t^" + std::to_string(n));

    // (3) specialized relation at x = xi_minus against enumerator data.
    KrewerasParts p = kreweras_parts(N + 4, a);
    auto [M, R] = kreweras_mr(p);
    SR lhs3 = M * (L0.scaled(am1) + SR::constant(Rat(1), N)) -
              R * (L0.scaled(am1 * am1) - SR::constant(Rat(1), N));
    if (!lhs3.is_zero_to_order()) {
        int bad = *lhs3.valuation();
        throw IdentityViolation("specialized kernel-root relation at t^" + std::to_string(bad));
    }
}

namespace {

std::optional<int> corner_relation_first_fail(int order, const Rat& a, const Rat& b) {
    auto views = boundary_views(enumerate_walks_at(get_model(1), order, a, b));
    Rat ab = a * b;
    for (int n = 0; n <= order; ++n) {
        Rat rhs = n == 0 ? Rat(1) : Rat(0);
        if (n >= 1) {
            auto grab = [](const std::map<int, Rat>& row, int k) {
                auto it = row.find(k);
                return it == row.end() ? Rat(0) : it->second;
            };
            rhs += ab * (grab(views.qx0[size_t(n - 1)], 1) + grab(views.q0y[size_t(n - 1)], 1));
        }
        if (views.g[n] != rhs) return n;
    }
    return std::nullopt;
}

}  // namespace

bool model1_corner_relation(int order, const Rat& a, const Rat& b) {
    return !corner_relation_first_fail(order, a, b).has_value();
}

std::vector<VerifyRecord> verify_closed_forms(int model_id, const Rat& a, const Rat& b, int order) {
    const Model& m = get_model(model_id);
    SR reference = excursion_series(m, order, a, b);
    std::vector<VerifyRecord> out;

    auto compare = [&](const std::string& route, const SR& got) {
        VerifyRecord r{model_id, route, a, b, order, true, -1};
        for (int n = 0; n <= order; ++n)
            if (got[n] != reference[n]) {
                r.ok = false;
                r.first_mismatch = n;
                break;
            }
        out.push_back(std::move(r));
    };

    if (model_id == 1) {
        if (a != 1 && b != 1) compare("direct-half-orbit", model1_g_direct(order, a, b));
        if (!(a == 1 && b == 1)) compare("corner-pair", model1_g_via_pr(order, a, b));
        VerifyRecord r{model_id, "corner-recurrence", a, b, order, true, -1};
        if (auto bad = corner_relation_first_fail(order, a, b)) {
            r.ok = false;
            r.first_mismatch = *bad;
        }
        out.push_back(std::move(r));
    }
    if (model_id >= 1 && model_id <= 16 && b == 1)
        compare("symmetric-axis", symmetric_b1_g(m, order, a));
    if (model_id == 2) {
        compare("hadamard", model2_g_hadamard(order, a, b));
        if (b != 1) compare("constant-term-pairing", model2_g_ct(order, a, b));
    }
    if (model_id == 17 && a == 1 && !qpw::is_zero(b))
        compare("reduced-root-ct", model17_g_a1(order, b));
    if ((model_id == 19 || model_id == 20) && a == b && a != 0 && a != 1) {
        compare(model_id == 19 ? "discriminant-pipeline" : "discriminant-pipeline-reversed",
                model19_g_aa(order, a));
        if (model_id == 19) {
            VerifyRecord r{model_id, "discriminant-midchecks", a, b, order, true, -1};
            try {
                model19_midchecks(order, a);
            } catch (const IdentityViolation&) {
                r.ok = false;
            }
            out.push_back(std::move(r));
        }
    }
    return out;
}

}  // namespace qpw
