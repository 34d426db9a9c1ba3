#include "qpw/walks.hpp"

namespace qpw {

namespace {

template <class R>
Series<R> excursion_series_rolling(const Model& m, int order, const R& wa, const R& wb, const R& wab) {
    Series<R> g(order);
    std::vector<R> prev(1, Ring<R>::one()), next;
    g.at(0) = Ring<R>::one();
    for (int n = 1; n <= order; ++n) {
        int w = n + 1;  // cells 0..n in each coordinate
        next.assign(size_t(w) * size_t(w), Ring<R>::zero());
        int pw = n;
        for (int k = 0; k < pw; ++k)
            for (int l = 0; l < pw; ++l) {
                const R& v = prev[size_t(k) * size_t(pw) + size_t(l)];
                if (Ring<R>::is_zero(v)) continue;
                for (const auto& s : m.steps) {
                    int nk = k + s.dx, nl = l + s.dy;
                    if (nk < 0 || nl < 0) continue;
                    R& slot = next[size_t(nk) * size_t(w) + size_t(nl)];
                    auto t = detail::touch_class(nk, nl);
                    switch (t) {
                        case detail::Touch::None: slot = slot + v; break;
                        case detail::Touch::XAxis: slot = slot + v * wa; break;
                        case detail::Touch::YAxis: slot = slot + v * wb; break;
                        case detail::Touch::Origin: slot = slot + v * wab; break;
                    }
                }
            }
        g.at(n) = next[0];
        prev.swap(next);
    }
    return g;
}

}  // namespace

Series<Rat> excursion_series(const Model& m, int order, const Rat& a, const Rat& b) {
    if (is_integer(a) && is_integer(b)) {
        // Integer weights: big-integer arithmetic throughout, converted at the end.
        Series<Int> gi = excursion_series_rolling<Int>(m, order, Int(a.get_num()), Int(b.get_num()),
                                                       Int(a.get_num() * b.get_num()));
        Series<Rat> g(order);
        for (int n = 0; n <= order; ++n) g.at(n) = Rat(gi[n]);
        return g;
    }
    return excursion_series_rolling<Rat>(m, order, a, b, Rat(a * b));
}

SymbolicWalkTable brute_force_walks(const Model& m, int order) {
    if (order < 0) throw SeriesOrderError("negative enumeration order");
    if (order > 12) throw Error("brute-force oracle capped at order 12");
    const int L = order + 1;
    const size_t l1 = size_t(L), l2 = l1 * l1, l3 = l2 * l1, l4 = l3 * l1;
    std::vector<std::uint64_t> cnt(l4 * l1, 0);
    auto idx = [&](int n, int k, int l, int h, int v) {
        return size_t(n) * l4 + size_t(k) * l3 + size_t(l) * l2 + size_t(h) * l1 + size_t(v);
    };

    struct Rec {
        const Model& m;
        int order;
        std::vector<std::uint64_t>& cnt;
        decltype(idx)& index;
        void walk(int k, int l, int h, int v, int n) {
            ++cnt[index(n, k, l, h, v)];
            if (n == order) return;
            for (const auto& s : m.steps) {
                int nk = k + s.dx, nl = l + s.dy;
                if (nk < 0 || nl < 0) continue;
                int nh = h, nv = v;
                switch (detail::touch_class(nk, nl)) {
                    case detail::Touch::None: break;
                    case detail::Touch::XAxis: ++nh; break;
                    case detail::Touch::YAxis: ++nv; break;
                    case detail::Touch::Origin:
                        ++nh;
                        ++nv;
                        break;
                }
                walk(nk, nl, nh, nv, n + 1);
            }
        }
    } rec{m, order, cnt, idx};
    rec.walk(0, 0, 0, 0, 0);

    SymbolicWalkTable t;
    t.model_id = m.id;
    t.order = order;
    for (int n = 0; n <= order; ++n) {
        WalkLayer<WeightPoly> layer(n);
        for (int k = 0; k <= n; ++k)
            for (int l = 0; l <= n; ++l)
                for (int h = 0; h <= n; ++h)
                    for (int v = 0; v <= n; ++v) {
                        std::uint64_t c = cnt[idx(n, k, l, h, v)];
                        if (c) layer.at(k, l) += WeightPoly::monomial(h, v, Int(static_cast<unsigned long>(c)));
                    }
        t.layers.push_back(std::move(layer));
    }
    return t;
}

std::vector<Int> total_confined_counts(const SymbolicWalkTable& t) {
    std::vector<Int> out;
    for (int n = 0; n <= t.order; ++n) {
        Int total(0);
        for (int k = 0; k <= n; ++k)
            for (int l = 0; l <= n; ++l)
                for (const auto& [key, c] : t.layer(n).get(k, l).terms()) total += c;
        out.push_back(total);
    }
    return out;
}

}  // namespace qpw
