#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "qpw/models.hpp"
#include "qpw/series.hpp"

namespace qpw {

// Weights of all walks of one length, indexed by endpoint (k, l) with
// 0 <= k, l <= n.
template <class R>
class WalkLayer {
  public:
    explicit WalkLayer(int n) : n_(n), c_(size_t(n + 1) * size_t(n + 1), Ring<R>::zero()) {}

    int n() const { return n_; }
    R& at(int k, int l) { return c_[index(k, l)]; }
    const R& get(int k, int l) const { return c_[index(k, l)]; }
    bool in_range(int k, int l) const { return k >= 0 && l >= 0 && k <= n_ && l <= n_; }

    bool operator==(const WalkLayer& o) const { return n_ == o.n_ && c_ == o.c_; }

  private:
    size_t index(int k, int l) const {
        if (!in_range(k, l)) throw Error("walk layer index out of range");
        return size_t(k) * size_t(n_ + 1) + size_t(l);
    }
    int n_;
    std::vector<R> c_;
};

// Full transcript of an enumeration: one layer per length 0..order.
template <class R>
struct WalkTable {
    int model_id = 0;
    int order = -1;
    std::vector<WalkLayer<R>> layers;

    const WalkLayer<R>& layer(int n) const {
        if (n < 0 || n > order) throw SeriesOrderError("walk layer beyond order");
        return layers[size_t(n)];
    }

    bool operator==(const WalkTable& o) const {
        return model_id == o.model_id && order == o.order && layers == o.layers;
    }
};

using SymbolicWalkTable = WalkTable<WeightPoly>;

// Boundary sections of the walk table: the excursion series g (endpoint at
// the origin), and per-length maps endpoint-coordinate -> weight along the
// x-axis, the y-axis and the main diagonal.
template <class R>
struct BoundaryViews {
    Series<R> g;
    std::vector<std::map<int, R>> qx0, q0y, qdiag;
};

namespace detail {

// The boundary weight picked up when a step lands on (k, l).
enum class Touch { None, XAxis, YAxis, Origin };

inline Touch touch_class(int k, int l) {
    if (k == 0 && l == 0) return Touch::Origin;
    if (l == 0) return Touch::XAxis;
    if (k == 0) return Touch::YAxis;
    return Touch::None;
}

}  // namespace detail

// Exact dynamic-programming enumeration over an arbitrary coefficient ring.
// `touch_mul(value, Touch)` multiplies a cell value by the boundary weight of
// the vertex being landed on; the start vertex carries no weight.
template <class R, class TouchMul>
WalkTable<R> enumerate_walks_core(const Model& m, int order, TouchMul touch_mul) {
    if (order < 0) throw SeriesOrderError("negative enumeration order");
    WalkTable<R> t;
    t.model_id = m.id;
    t.order = order;
    t.layers.reserve(size_t(order + 1));
    WalkLayer<R> cur(0);
    cur.at(0, 0) = Ring<R>::one();
    t.layers.push_back(cur);
    for (int n = 1; n <= order; ++n) {
        WalkLayer<R> next(n);
        const WalkLayer<R>& prev = t.layers.back();
        for (int k = 0; k < n; ++k)
            for (int l = 0; l < n; ++l) {
                const R& w = prev.get(k, l);
                if (Ring<R>::is_zero(w)) continue;
                for (const auto& s : m.steps) {
                    int nk = k + s.dx, nl = l + s.dy;
                    if (nk < 0 || nl < 0) continue;
                    R& slot = next.at(nk, nl);
                    slot = slot + touch_mul(w, detail::touch_class(nk, nl));
                }
            }
        t.layers.push_back(std::move(next));
    }
    return t;
}

// Symbolic enumeration: weights are polynomials in (a, b).
inline SymbolicWalkTable enumerate_walks(const Model& m, int order) {
    return enumerate_walks_core<WeightPoly>(m, order, [](const WeightPoly& w, detail::Touch t) {
        switch (t) {
            case detail::Touch::None: return w;
            case detail::Touch::XAxis: {
                WeightPoly r;
                r.add_shifted(w, 1, 0);
                return r;
            }
            case detail::Touch::YAxis: {
                WeightPoly r;
                r.add_shifted(w, 0, 1);
                return r;
            }
            case detail::Touch::Origin: {
                WeightPoly r;
                r.add_shifted(w, 1, 1);
                return r;
            }
        }
        return w;
    });
}

// Specialized enumeration at rational boundary weights.
inline WalkTable<Rat> enumerate_walks_at(const Model& m, int order, const Rat& a, const Rat& b) {
    Rat ab = a * b;
    return enumerate_walks_core<Rat>(m, order, [a, b, ab](const Rat& w, detail::Touch t) {
        switch (t) {
            case detail::Touch::None: return w;
            case detail::Touch::XAxis: return Rat(w * a);
            case detail::Touch::YAxis: return Rat(w * b);
            case detail::Touch::Origin: return Rat(w * ab);
        }
        return w;
    });
}

// Pointwise specialization of a symbolic table (used to check that
// enumeration and specialization commute).
inline WalkTable<Rat> specialize(const SymbolicWalkTable& t, const Rat& a, const Rat& b) {
    WalkTable<Rat> out;
    out.model_id = t.model_id;
    out.order = t.order;
    for (int n = 0; n <= t.order; ++n) {
        WalkLayer<Rat> layer(n);
        for (int k = 0; k <= n; ++k)
            for (int l = 0; l <= n; ++l) layer.at(k, l) = t.layer(n).get(k, l).evaluate(a, b);
        out.layers.push_back(std::move(layer));
    }
    return out;
}

template <class R>
BoundaryViews<R> boundary_views(const WalkTable<R>& t) {
    BoundaryViews<R> v;
    v.g = Series<R>(t.order);
    v.qx0.resize(size_t(t.order + 1));
    v.q0y.resize(size_t(t.order + 1));
    v.qdiag.resize(size_t(t.order + 1));
    for (int n = 0; n <= t.order; ++n) {
        const auto& layer = t.layer(n);
        v.g.at(n) = layer.get(0, 0);
        for (int k = 0; k <= n; ++k) {
            if (!Ring<R>::is_zero(layer.get(k, 0))) v.qx0[size_t(n)][k] = layer.get(k, 0);
            if (!Ring<R>::is_zero(layer.get(0, k))) v.q0y[size_t(n)][k] = layer.get(0, k);
            if (!Ring<R>::is_zero(layer.get(k, k))) v.qdiag[size_t(n)][k] = layer.get(k, k);
        }
    }
    return v;
}

// Rows of rational boundary data as series with Laurent-polynomial
// coefficients (nonnegative exponents only).
inline Series<LaurentPoly> rows_to_series(const std::vector<std::map<int, Rat>>& rows) {
    Series<LaurentPoly> s(int(rows.size()) - 1);
    for (size_t n = 0; n < rows.size(); ++n) {
        LaurentPoly p;
        for (const auto& [k, w] : rows[n]) p += LaurentPoly::monomial(k, w);
        s.at(int(n)) = p;
    }
    return s;
}

// Excursion series only, with rolling layers (memory-light; used for long
// series feeding the guessers).
Series<Rat> excursion_series(const Model& m, int order, const Rat& a, const Rat& b);

// Independent oracle: depth-first walk generation, one path at a time,
// tallying endpoint/boundary-visit counts.  Exponential in order; capped.
SymbolicWalkTable brute_force_walks(const Model& m, int order);

// Sum of weights over all endpoints at a = b = 1 for each length (equals the
// number of confined paths, which the DP and the oracle must agree on).
std::vector<Int> total_confined_counts(const SymbolicWalkTable& t);

}  // namespace qpw
