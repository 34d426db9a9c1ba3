#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "qpw/laurent_poly.hpp"
#include "qpw/numeric.hpp"
#include "qpw/weight_poly.hpp"

namespace qpw {

// Coefficient-ring glue.  Series<R> works over any R with these operations;
// division-like operations additionally need coeff_div / unit_inverse.
template <class R>
struct Ring;

template <>
struct Ring<Rat> {
    static Rat zero() { return Rat(0); }
    static Rat one() { return Rat(1); }
    static bool is_zero(const Rat& x) { return qpw::is_zero(x); }
    // Exact division by a unit (any nonzero rational).
    static Rat coeff_div(const Rat& a, const Rat& b) {
        if (qpw::is_zero(b)) throw DivisionByNonUnit("rational division by zero");
        return a / b;
    }
    static Rat scalar_mul(const Rat& a, const Rat& s) { return a * s; }
    static std::string str(const Rat& x) { return x.get_str(); }
};

template <>
struct Ring<Int> {
    static Int zero() { return Int(0); }
    static Int one() { return Int(1); }
    static bool is_zero(const Int& x) { return qpw::is_zero(x); }
    static Int scalar_mul(const Int& a, const Int& s) { return a * s; }
    static std::string str(const Int& x) { return x.get_str(); }
};

template <>
struct Ring<LaurentPoly> {
    static LaurentPoly zero() { return LaurentPoly(); }
    static LaurentPoly one() { return LaurentPoly(1); }
    static bool is_zero(const LaurentPoly& x) { return x.is_zero(); }
    static LaurentPoly coeff_div(const LaurentPoly& a, const LaurentPoly& b) {
        return LaurentPoly::div_exact(a, b);
    }
    static LaurentPoly scalar_mul(const LaurentPoly& a, const Rat& s) { return a * s; }
    static std::string str(const LaurentPoly& x) { return x.to_string(); }
};

template <>
struct Ring<WeightPoly> {
    static WeightPoly zero() { return WeightPoly(); }
    static WeightPoly one() { return WeightPoly(1); }
    static bool is_zero(const WeightPoly& x) { return x.is_zero(); }
    static WeightPoly scalar_mul(const WeightPoly& a, const Int& s) { return a * WeightPoly(s); }
    static std::string str(const WeightPoly& x) { return x.to_string(); }
};

// Truncated power series over R: coefficients of t^0 .. t^order, all exact.
// Reading beyond the truncation order throws; arithmetic propagates the
// minimum valid order.  A Series never pretends to know more than it does.
template <class R>
class Series {
  public:
    Series() : ord_(-1) {}  // invalid/empty marker
    explicit Series(int order) : ord_(order), c_(size_t(order + 1), Ring<R>::zero()) {
        if (order < 0) throw SeriesOrderError("negative series order");
    }
    static Series constant(const R& v, int order) {
        Series s(order);
        s.c_[0] = v;
        return s;
    }

    int order() const { return ord_; }
    bool valid() const { return ord_ >= 0; }

    const R& operator[](int n) const {
        check(n);
        return c_[size_t(n)];
    }
    R& at(int n) {
        check(n);
        return c_[size_t(n)];
    }

    // Truncate (or fail when asked for more than is known).
    Series truncated(int order) const {
        if (order > ord_)
            throw SeriesOrderError("cannot extend truncation from " + std::to_string(ord_) + " to " + std::to_string(order));
        Series s(order);
        for (int i = 0; i <= order; ++i) s.c_[size_t(i)] = c_[size_t(i)];
        return s;
    }

    // First index with nonzero coefficient, or nullopt if zero to its order.
    std::optional<int> valuation() const {
        for (int i = 0; i <= ord_; ++i)
            if (!Ring<R>::is_zero(c_[size_t(i)])) return i;
        return std::nullopt;
    }

    bool is_zero_to_order() const { return !valuation().has_value(); }

    // Multiply by t^k (k >= 0): known order increases accordingly? No - the
    // high coefficients are simply unknown, so the order stays aligned with
    // what the inputs justify: result order = ord_ + k would claim unknown
    // data.  Shifting up keeps the same top exponent: order ord_ + k is only
    // valid because the new coefficients below k are exactly zero and the top
    // k old coefficients are dropped.
    Series shifted_up(int k) const {
        Series s(ord_ + k);
        for (int i = 0; i <= ord_; ++i) s.c_[size_t(i + k)] = c_[size_t(i)];
        return s.truncated(ord_ + k);
    }

    // Divide by t^k; requires the low k coefficients to vanish.
    Series shifted_down(int k) const {
        if (ord_ < k) throw SeriesOrderError("shift below order");
        for (int i = 0; i < k; ++i)
            if (!Ring<R>::is_zero(c_[size_t(i)]))
                throw SeriesOrderError("t-shift drops nonzero coefficient");
        Series s(ord_ - k);
        for (int i = 0; i + k <= ord_; ++i) s.c_[size_t(i)] = c_[size_t(i + k)];
        return s;
    }

    Series& operator+=(const Series& o) {
        int n = std::min(ord_, o.ord_);
        *this = truncated(n);
        for (int i = 0; i <= n; ++i) c_[size_t(i)] = c_[size_t(i)] + o.c_[size_t(i)];
        return *this;
    }
    Series& operator-=(const Series& o) {
        int n = std::min(ord_, o.ord_);
        *this = truncated(n);
        for (int i = 0; i <= n; ++i) c_[size_t(i)] = c_[size_t(i)] - o.c_[size_t(i)];
        return *this;
    }
    friend Series operator+(Series x, const Series& y) { return x += y; }
    friend Series operator-(Series x, const Series& y) { return x -= y; }
    Series operator-() const {
        Series s(ord_);
        for (int i = 0; i <= ord_; ++i) s.c_[size_t(i)] = Ring<R>::zero() - c_[size_t(i)];
        return s;
    }
    friend Series operator*(const Series& x, const Series& y) {
        int n = std::min(x.ord_, y.ord_);
        Series s(n);
        for (int i = 0; i <= n; ++i) {
            if (Ring<R>::is_zero(x.c_[size_t(i)])) continue;
            for (int j = 0; i + j <= n; ++j) {
                if (Ring<R>::is_zero(y.c_[size_t(j)])) continue;
                s.c_[size_t(i + j)] = s.c_[size_t(i + j)] + x.c_[size_t(i)] * y.c_[size_t(j)];
            }
        }
        return s;
    }
    Series& operator*=(const Series& o) { return *this = *this * o; }

    Series scaled(const R& v) const {
        Series s(ord_);
        for (int i = 0; i <= ord_; ++i) s.c_[size_t(i)] = c_[size_t(i)] * v;
        return s;
    }

    bool operator==(const Series& o) const { return ord_ == o.ord_ && c_ == o.c_; }
    bool operator!=(const Series& o) const { return !(*this == o); }

    std::string to_string(const std::string& var = "t") const {
        std::string s = "O(" + var + "^" + std::to_string(ord_ + 1) + ")";
        for (int i = ord_; i >= 0; --i) {
            if (Ring<R>::is_zero(c_[size_t(i)]) && i > 0) continue;
            std::string c = Ring<R>::str(c_[size_t(i)]);
            std::string term = "(" + c + ")";
            if (i > 0) term += "*" + var + (i > 1 ? "^" + std::to_string(i) : "");
            s = term + " + " + s;
        }
        return s;
    }

  private:
    void check(int n) const {
        if (n < 0 || n > ord_)
            throw SeriesOrderError("coefficient " + std::to_string(n) + " beyond truncation order " + std::to_string(ord_));
    }

    int ord_;
    std::vector<R> c_;
};

// num / den where den has an invertible constant coefficient.  Coefficient
// divisions must be exact in R (they are whenever the true quotient lives in
// R[[t]], which callers must guarantee; otherwise DivisionByNonUnit fires).
template <class R>
Series<R> series_div(const Series<R>& num, const Series<R>& den) {
    int n = std::min(num.order(), den.order());
    if (n < 0) throw SeriesOrderError("division of empty series");
    if (Ring<R>::is_zero(den[0])) throw DivisionByNonUnit("denominator has zero constant term");
    Series<R> q(n);
    for (int i = 0; i <= n; ++i) {
        R acc = num[i];
        for (int k = 1; k <= i; ++k) acc = acc - den[k] * q[i - k];
        q.at(i) = Ring<R>::coeff_div(acc, den[0]);
    }
    return q;
}

template <class R>
Series<R> series_inverse(const Series<R>& den) {
    return series_div(Series<R>::constant(Ring<R>::one(), den.order()), den);
}

// Square root with the principal branch g(0) = +sqrt(f(0)).  Over a general
// coefficient ring the constant term must be the ring one; over Rat any
// rational square is accepted.
inline Series<Rat> series_sqrt(const Series<Rat>& f) {
    if (f.order() < 0) throw SeriesOrderError("sqrt of empty series");
    Rat g0 = exact_sqrt(f[0]);
    if (qpw::is_zero(g0)) throw NonSquareConstantTerm("sqrt at zero constant term");
    int n = f.order();
    Series<Rat> g(n);
    g.at(0) = g0;
    Rat inv2g0 = Rat(1) / (2 * g0);
    for (int m = 1; m <= n; ++m) {
        Rat acc = f[m];
        for (int i = 1; i < m; ++i) acc -= g[i] * g[m - i];
        g.at(m) = acc * inv2g0;
    }
    return g;
}

template <class R>
Series<R> series_sqrt(const Series<R>& f) {
    if (f.order() < 0) throw SeriesOrderError("sqrt of empty series");
    if (!(f[0] == Ring<R>::one())) throw NonSquareConstantTerm("constant term must be 1 over this coefficient ring");
    int n = f.order();
    Series<R> g(n);
    g.at(0) = Ring<R>::one();
    for (int m = 1; m <= n; ++m) {
        R acc = f[m];
        for (int i = 1; i < m; ++i) acc = acc - g[i] * g[m - i];
        g.at(m) = Ring<R>::scalar_mul(acc, Rat(1, 2));
    }
    return g;
}

// Windowed Laurent series in t: coefficient of t^(low+i) is body[i].  The
// window [low, low+body.order()] is exactly the set of exponents about which
// anything is known; reading outside it throws.
template <class R>
class LaurentT {
  public:
    LaurentT() : low_(0), body_() {}
    LaurentT(int low, Series<R> body) : low_(low), body_(std::move(body)) {}
    static LaurentT from_series(const Series<R>& s) { return LaurentT(0, s); }

    int low() const { return low_; }
    int high() const { return low_ + body_.order(); }
    const Series<R>& body() const { return body_; }

    const R& coeff(int e) const {
        if (e < low_ || e > high())
            throw SeriesOrderError("Laurent-t coefficient " + std::to_string(e) + " outside window [" +
                                   std::to_string(low_) + "," + std::to_string(high()) + "]");
        return body_[e - low_];
    }

    // Shrink the window from below so the first coefficient is nonzero.
    // Returns nullopt if the series is zero on its whole window.
    std::optional<LaurentT> normalized() const {
        auto v = body_.valuation();
        if (!v) return std::nullopt;
        return LaurentT(low_ + *v, body_.shifted_down(*v));
    }

    friend LaurentT operator+(const LaurentT& x, const LaurentT& y) {
        int lo = std::min(x.low_, y.low_);
        int hi = std::min(x.high(), y.high());
        if (hi < lo) throw SeriesOrderError("empty window in Laurent-t addition");
        Series<R> b(hi - lo);
        for (int e = lo; e <= hi; ++e) {
            R v = Ring<R>::zero();
            if (e >= x.low_ && e <= x.high()) v = v + x.coeff(e);
            if (e >= y.low_ && e <= y.high()) v = v + y.coeff(e);
            b.at(e - lo) = v;
        }
        return LaurentT(lo, std::move(b));
    }
    friend LaurentT operator-(const LaurentT& x, const LaurentT& y) { return x + (-y); }
    LaurentT operator-() const { return LaurentT(low_, -body_); }

    friend LaurentT operator*(const LaurentT& x, const LaurentT& y) {
        auto xn = x.normalized(), yn = y.normalized();
        if (!xn || !yn) {
            // A factor is zero on its window; the product is zero wherever
            // that can be justified.
            int lo = x.low_ + y.low_;
            int hi = std::min(x.high() + y.low_, y.high() + x.low_);
            return LaurentT(lo, Series<R>(std::max(0, hi - lo)));
        }
        return LaurentT(xn->low_ + yn->low_, xn->body_ * yn->body_);
    }

    LaurentT scaled(const R& v) const { return LaurentT(low_, body_.scaled(v)); }

    // Reciprocal; leading coefficient must be invertible in R.
    LaurentT inverse() const {
        auto n = normalized();
        if (!n) throw DivisionByNonUnit("inverse of (windowed) zero Laurent-t series");
        return LaurentT(-n->low_, series_inverse(n->body_));
    }
    friend LaurentT operator/(const LaurentT& x, const LaurentT& y) {
        auto yn = y.normalized();
        if (!yn) throw DivisionByNonUnit("division by (windowed) zero Laurent-t series");
        auto xn = x.normalized();
        if (!xn) {
            int lo = x.low_ - yn->low_;
            int hi = x.high() - yn->low_;
            return LaurentT(lo, Series<R>(std::max(0, hi - lo)));
        }
        return LaurentT(xn->low_ - yn->low_, series_div(xn->body_, yn->body_));
    }

    // Extract the ordinary power-series part up to `order`; requires the
    // window to cover [min(low,0), order] and every negative-exponent
    // coefficient in the window to vanish.
    Series<R> to_series(int order) const {
        if (high() < order) throw SeriesOrderError("window ends before requested order");
        for (int e = low_; e < 0; ++e)
            if (!Ring<R>::is_zero(coeff(e)))
                throw SeriesOrderError("negative t-exponent survives: t^" + std::to_string(e));
        Series<R> s(order);
        for (int e = std::max(0, low_); e <= order; ++e) s.at(e) = coeff(e);
        return s;
    }

    bool has_negative_part() const {
        for (int e = low_; e < 0 && e <= high(); ++e)
            if (!Ring<R>::is_zero(coeff(e))) return true;
        return false;
    }

  private:
    int low_;
    Series<R> body_;
};

// Valuation-aware division of ordinary series: strips t-valuations first and
// returns a windowed Laurent series.
template <class R>
LaurentT<R> div_laurent(const Series<R>& num, const Series<R>& den) {
    return LaurentT<R>::from_series(num) / LaurentT<R>::from_series(den);
}

// Coefficient extraction [x^k] applied to every t-coefficient.
inline Series<Rat> coeff_of_x(const Series<LaurentPoly>& f, int k) {
    Series<Rat> s(f.order());
    for (int n = 0; n <= f.order(); ++n) s.at(n) = f[n].coeff(k);
    return s;
}

// Newton iteration for a simple root of P(y) = sum_j poly[j] * y^j with
// series coefficients: requires P(y0) = 0 mod t and P'(y0) invertible mod t.
// Convergence is quadratic; the working order doubles each round, and the
// optional counter exposes the number of rounds for verification.
template <class R>
Series<R> newton_root(const std::vector<Series<R>>& poly, const R& y0, int order, int* rounds_out = nullptr) {
    if (poly.size() < 2) throw SingularLift("polynomial must have degree >= 1");
    int full = order;
    for (const auto& p : poly)
        if (p.order() < full) throw SeriesOrderError("polynomial coefficient series shorter than requested order");

    auto eval = [&](const std::vector<Series<R>>& cs, const Series<R>& y) {
        Series<R> acc = cs.back().truncated(y.order());
        for (size_t j = cs.size() - 1; j-- > 0;) acc = acc * y + cs[j].truncated(y.order());
        return acc;
    };
    std::vector<Series<R>> dpoly;
    for (size_t j = 1; j < poly.size(); ++j) dpoly.push_back(poly[j].scaled(Ring<R>::scalar_mul(Ring<R>::one(), Rat(long(j)))));

    // Check the seed: P(y0) must vanish mod t and P'(y0) must be a unit.
    {
        Series<R> y = Series<R>::constant(y0, 0);
        Series<R> p0 = eval(poly, y);
        if (!Ring<R>::is_zero(p0[0])) throw SingularLift("seed is not a root mod t");
        Series<R> d0 = eval(dpoly, y);
        if (Ring<R>::is_zero(d0[0])) throw SingularLift("derivative vanishes mod t");
    }

    Series<R> y = Series<R>::constant(y0, 0);
    int correct = 1;  // y agrees with the true root through t^(correct-1)
    int rounds = 0;
    while (correct <= full) {
        int target = std::min(2 * correct, full + 1);  // exponents < target become correct
        int work = target - 1;
        Series<R> yw(work);
        for (int i = 0; i <= std::min(work, y.order()); ++i) yw.at(i) = y[i];
        Series<R> num = eval(poly, yw);
        Series<R> den = eval(dpoly, yw);
        yw -= series_div(num, den);
        y = yw;
        correct = target;
        ++rounds;
        if (rounds > 64) throw SingularLift("Newton iteration failed to converge");
    }
    if (rounds_out) *rounds_out = rounds;
    return y.truncated(full);
}
}  // namespace qpw
