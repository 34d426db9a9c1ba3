#include "qpw/fe_check.hpp"

#include <map>

namespace qpw {

namespace {

// Laurent polynomial in (x, y) with WeightPoly coefficients; workhorse for
// checking the functional equation order by order.
struct XYPoly {
    std::map<std::pair<int, int>, WeightPoly> t;

    static XYPoly from_layer(const WalkLayer<WeightPoly>& layer) {
        XYPoly p;
        for (int k = 0; k <= layer.n(); ++k)
            for (int l = 0; l <= layer.n(); ++l)
                if (!layer.get(k, l).is_zero()) p.t[{k, l}] = layer.get(k, l);
        return p;
    }
    static XYPoly scalar(const WeightPoly& w) {
        XYPoly p;
        if (!w.is_zero()) p.t[{0, 0}] = w;
        return p;
    }

    XYPoly shifted(int dx, int dy) const {
        XYPoly p;
        for (const auto& [k, w] : t) p.t[{k.first + dx, k.second + dy}] = w;
        return p;
    }
    XYPoly scaled(const WeightPoly& w) const {
        XYPoly p;
        if (w.is_zero()) return p;
        for (const auto& [k, v] : t) {
            WeightPoly prod = v * w;
            if (!prod.is_zero()) p.t[k] = prod;
        }
        return p;
    }
    XYPoly& operator+=(const XYPoly& o) {
        for (const auto& [k, w] : o.t) {
            WeightPoly& slot = t[k];
            slot += w;
            if (slot.is_zero()) t.erase(k);
        }
        return *this;
    }
    XYPoly& operator-=(const XYPoly& o) {
        for (const auto& [k, w] : o.t) {
            WeightPoly& slot = t[k];
            slot -= w;
            if (slot.is_zero()) t.erase(k);
        }
        return *this;
    }
    bool is_zero() const { return t.empty(); }

    // Coefficient extraction; [x^i] of an (x,y)-poly leaves a poly in y, etc.
    XYPoly coeff_x(int i) const {
        XYPoly p;
        for (const auto& [k, w] : t)
            if (k.first == i) p.t[{0, k.second}] = w;
        return p;
    }
    XYPoly coeff_y(int j) const {
        XYPoly p;
        for (const auto& [k, w] : t)
            if (k.second == j) p.t[{k.first, 0}] = w;
        return p;
    }
    WeightPoly coeff(int i, int j) const {
        auto it = t.find({i, j});
        return it == t.end() ? WeightPoly() : it->second;
    }

    std::string to_string() const {
        if (t.empty()) return "0";
        std::string s;
        for (const auto& [k, w] : t) {
            if (!s.empty()) s += " + ";
            s += "(" + w.to_string() + ")*x^" + std::to_string(k.first) + "*y^" + std::to_string(k.second);
        }
        return s;
    }
};

XYPoly laurent_x(const LaurentPoly& p) {
    XYPoly out;
    for (int e = p.lo(); e <= p.hi(); ++e) {
        Rat c = p.coeff(e);
        if (qpw::is_zero(c)) continue;
        out.t[{e, 0}] = WeightPoly(Int(c.get_num()));  // step multiplicities are integers
    }
    return out;
}

XYPoly laurent_y(const LaurentPoly& p) {
    XYPoly out;
    for (int e = p.lo(); e <= p.hi(); ++e) {
        Rat c = p.coeff(e);
        if (qpw::is_zero(c)) continue;
        out.t[{0, e}] = WeightPoly(Int(c.get_num()));
    }
    return out;
}

XYPoly mul(const XYPoly& f, const XYPoly& g) {
    XYPoly out;
    for (const auto& [kf, wf] : f.t)
        for (const auto& [kg, wg] : g.t) {
            auto key = std::make_pair(kf.first + kg.first, kf.second + kg.second);
            WeightPoly& slot = out.t[key];
            slot += wf * wg;
            if (slot.is_zero()) out.t.erase(key);
        }
    return out;
}

struct Sections {
    XYPoly q;       // Q_n(x, y)
    XYPoly qx0;     // Q_n(x, 0), x only
    XYPoly q0y;     // Q_n(0, y), y only
    WeightPoly q00;  // Q_n(0, 0)
};

}  // namespace

FeCheckResult check_functional_equations(const SymbolicWalkTable& table) {
    FeCheckResult res;
    res.model_id = table.model_id;
    res.order = table.order;
    const Model& m = get_model(table.model_id);

    const WeightPoly one(1), A(WeightPoly::monomial(1, 0)), B(WeightPoly::monomial(0, 1)), AB(WeightPoly::monomial(1, 1));
    const WeightPoly Am1 = A - one, Bm1 = B - one, ABm1 = AB - one;

    auto eps = [&](int dx, int dy) { return m.has_step(dx, dy) ? 1 : 0; };
    const int e_p0 = eps(1, 0), e_m0 = eps(-1, 0), e_0p = eps(0, 1), e_0m = eps(0, -1);
    const int e_pm = eps(1, -1), e_mm = eps(-1, -1), e_mp = eps(-1, 1);
    const int e_corner = e_mm;

    std::vector<Sections> sec(size_t(table.order + 1));
    for (int n = 0; n <= table.order; ++n) {
        const auto& layer = table.layer(n);
        sec[size_t(n)].q = XYPoly::from_layer(layer);
        for (int k = 0; k <= n; ++k) {
            if (!layer.get(k, 0).is_zero()) sec[size_t(n)].qx0.t[{k, 0}] = layer.get(k, 0);
            if (!layer.get(0, k).is_zero()) sec[size_t(n)].q0y.t[{0, k}] = layer.get(0, k);
        }
        sec[size_t(n)].q00 = layer.get(0, 0);
    }

    XYPoly sxy;
    for (const auto& s : m.steps) sxy += XYPoly::scalar(one).shifted(s.dx, s.dy);
    XYPoly a_m1 = laurent_x(m.A(-1));
    XYPoly b_m1 = laurent_y(m.B(-1));

    auto record = [&](bool ok, const std::string& what, int n, const XYPoly& diff) {
        if (!ok) res.failures.push_back(what + " fails at t^" + std::to_string(n) + ": " + diff.to_string());
    };

    for (int n = 0; n <= table.order; ++n) {
        const Sections& cur = sec[size_t(n)];
        const Sections* prv = n > 0 ? &sec[size_t(n - 1)] : nullptr;
        auto prev = [&](auto take) { return prv ? take(*prv) : XYPoly(); };

        // (1) master equation, cleared of 1/(ab) denominators.
        {
            XYPoly lhs = mul(XYPoly::scalar(AB), cur.q.shifted(1, 1));
            lhs -= mul(XYPoly::scalar(AB), prev([&](const Sections& p) { return mul(sxy, p.q); }).shifted(1, 1));

            XYPoly rhs;
            if (n == 0) rhs += XYPoly::scalar(one).shifted(1, 1);
            rhs += mul(XYPoly::scalar(B * Am1), cur.qx0.shifted(1, 1));
            rhs -= mul(XYPoly::scalar(AB), prev([&](const Sections& p) { return mul(a_m1, p.qx0); }).shifted(1, 0));
            rhs += mul(XYPoly::scalar(A * Bm1), cur.q0y.shifted(1, 1));
            rhs -= mul(XYPoly::scalar(AB), prev([&](const Sections& p) { return mul(b_m1, p.q0y); }).shifted(0, 1));
            rhs -= XYPoly::scalar(Am1 * Bm1 * cur.q00).shifted(1, 1);
            if (e_corner && prv) rhs += XYPoly::scalar(AB * prv->q00);

            XYPoly diff = lhs;
            diff -= rhs;
            record(diff.is_zero(), "master equation", n, diff);
        }

        // (2) x-axis relation.
        {
            XYPoly rhs;
            if (n == 0) rhs += XYPoly::scalar(one);
            if (e_p0) rhs += prev([&](const Sections& p) { return p.qx0.scaled(A).shifted(1, 0); });
            if (e_m0) {
                rhs += prev([&](const Sections& p) {
                    XYPoly d = p.qx0;
                    d -= XYPoly::scalar(p.q00);
                    return d.scaled(A).shifted(-1, 0);
                });
                rhs += prev([&](const Sections& p) { return XYPoly::scalar(A * Bm1 * p.qx0.coeff(1, 0)); });
            }
            if (e_pm) rhs += prev([&](const Sections& p) { return p.q.coeff_y(1).scaled(A).shifted(1, 0); });
            if (e_0m) {
                rhs += prev([&](const Sections& p) {
                    XYPoly v = p.q.coeff_y(1);
                    v += XYPoly::scalar(Bm1 * p.q0y.coeff(0, 1));
                    return v.scaled(A);
                });
            }
            if (e_mm) {
                rhs += prev([&](const Sections& p) {
                    XYPoly v = p.q.coeff_y(1);
                    v -= XYPoly::scalar(p.q0y.coeff(0, 1));
                    return v.scaled(A).shifted(-1, 0);
                });
                rhs += prev([&](const Sections& p) { return XYPoly::scalar(A * Bm1 * p.q.coeff(1, 1)); });
            }
            XYPoly diff = cur.qx0;
            diff -= rhs;
            record(diff.is_zero(), "x-axis relation", n, diff);
        }

        // (3) y-axis relation (mirror of (2)).
        {
            XYPoly rhs;
            if (n == 0) rhs += XYPoly::scalar(one);
            if (e_0p) rhs += prev([&](const Sections& p) { return p.q0y.scaled(B).shifted(0, 1); });
            if (e_0m) {
                rhs += prev([&](const Sections& p) {
                    XYPoly d = p.q0y;
                    d -= XYPoly::scalar(p.q00);
                    return d.scaled(B).shifted(0, -1);
                });
                rhs += prev([&](const Sections& p) { return XYPoly::scalar(Am1 * B * p.q0y.coeff(0, 1)); });
            }
            if (e_mp) rhs += prev([&](const Sections& p) { return p.q.coeff_x(1).scaled(B).shifted(0, 1); });
            if (e_m0) {
                rhs += prev([&](const Sections& p) {
                    XYPoly v = p.q.coeff_x(1);
                    v += XYPoly::scalar(Am1 * p.qx0.coeff(1, 0));
                    return v.scaled(B);
                });
            }
            if (e_mm) {
                rhs += prev([&](const Sections& p) {
                    XYPoly v = p.q.coeff_x(1);
                    v -= XYPoly::scalar(p.qx0.coeff(1, 0));
                    return v.scaled(B).shifted(0, -1);
                });
                rhs += prev([&](const Sections& p) { return XYPoly::scalar(Am1 * B * p.q.coeff(1, 1)); });
            }
            XYPoly diff = cur.q0y;
            diff -= rhs;
            record(diff.is_zero(), "y-axis relation", n, diff);
        }

        // (4) corner relation.
        {
            WeightPoly rhs;
            if (n == 0) rhs += one;
            if (prv) {
                if (e_m0) rhs += AB * prv->qx0.coeff(1, 0);
                if (e_0m) rhs += AB * prv->q0y.coeff(0, 1);
                if (e_mm) rhs += AB * prv->q.coeff(1, 1);
            }
            WeightPoly diff = cur.q00 - rhs;
            record(diff.is_zero(), "corner relation", n, XYPoly::scalar(diff));
        }
    }

    res.ok = res.failures.empty();
    return res;
}

}  // namespace qpw
