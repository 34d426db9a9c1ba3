#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "qpw/numeric.hpp"

namespace qpw {

// Laurent polynomial in one variable x with rational coefficients, stored
// densely over its exponent span [off, off + size).
class LaurentPoly {
  public:
    LaurentPoly() = default;
    explicit LaurentPoly(const Rat& c) {
        if (!qpw::is_zero(c)) {
            off_ = 0;
            c_ = {c};
        }
    }
    explicit LaurentPoly(long c) : LaurentPoly(Rat(c)) {}
    static LaurentPoly monomial(int e, const Rat& c = Rat(1)) {
        LaurentPoly p;
        if (!qpw::is_zero(c)) {
            p.off_ = e;
            p.c_ = {c};
        }
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    int lo() const { return off_; }               // lowest exponent (0 if zero)
    int hi() const { return off_ + int(c_.size()) - 1; }
    int span() const { return c_.empty() ? 0 : int(c_.size()); }

    Rat coeff(int e) const {
        if (c_.empty() || e < off_ || e > hi()) return Rat(0);
        return c_[size_t(e - off_)];
    }

    void set_coeff(int e, const Rat& v) {
        if (c_.empty()) {
            if (qpw::is_zero(v)) return;
            off_ = e;
            c_ = {v};
            return;
        }
        if (e < off_) {
            c_.insert(c_.begin(), size_t(off_ - e), Rat(0));
            off_ = e;
        } else if (e > hi()) {
            c_.resize(size_t(e - off_ + 1), Rat(0));
        }
        c_[size_t(e - off_)] = v;
        trim();
    }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        for (int e = o.off_; e <= o.hi(); ++e) {
            if (qpw::is_zero(o.c_[size_t(e - o.off_)])) continue;
            set_coeff_raw(e, coeff(e) + o.c_[size_t(e - o.off_)]);
        }
        trim();
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) {
        for (int e = o.off_; e <= o.hi(); ++e) {
            if (qpw::is_zero(o.c_[size_t(e - o.off_)])) continue;
            set_coeff_raw(e, coeff(e) - o.c_[size_t(e - o.off_)]);
        }
        trim();
        return *this;
    }
    friend LaurentPoly operator+(LaurentPoly x, const LaurentPoly& y) { return x += y; }
    friend LaurentPoly operator-(LaurentPoly x, const LaurentPoly& y) { return x -= y; }
    friend LaurentPoly operator*(const LaurentPoly& x, const LaurentPoly& y) {
        if (x.is_zero() || y.is_zero()) return LaurentPoly();
        LaurentPoly r;
        r.off_ = x.off_ + y.off_;
        r.c_.assign(x.c_.size() + y.c_.size() - 1, Rat(0));
        for (size_t i = 0; i < x.c_.size(); ++i) {
            if (qpw::is_zero(x.c_[i])) continue;
            for (size_t j = 0; j < y.c_.size(); ++j) r.c_[i + j] += x.c_[i] * y.c_[j];
        }
        r.trim();
        return r;
    }
    LaurentPoly operator-() const {
        LaurentPoly r = *this;
        for (auto& c : r.c_) c = -c;
        return r;
    }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
    LaurentPoly& operator*=(const Rat& s) {
        if (qpw::is_zero(s)) {
            c_.clear();
            off_ = 0;
            return *this;
        }
        for (auto& c : c_) c *= s;
        return *this;
    }
    friend LaurentPoly operator*(LaurentPoly x, const Rat& s) { return x *= s; }
    friend LaurentPoly operator*(const Rat& s, LaurentPoly x) { return x *= s; }

    bool operator==(const LaurentPoly& o) const { return off_ == o.off_ && c_ == o.c_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    // Multiply by x^k.
    LaurentPoly shifted(int k) const {
        LaurentPoly r = *this;
        if (!r.c_.empty()) r.off_ += k;
        return r;
    }

    // Substitute x -> 1/x.
    LaurentPoly inverted_var() const {
        LaurentPoly r;
        if (c_.empty()) return r;
        r.c_.assign(c_.rbegin(), c_.rend());
        r.off_ = -hi();
        return r;
    }

    // True if this is c * x^e for a single exponent e.
    bool is_monomial() const {
        int nz = 0;
        for (const auto& c : c_)
            if (!qpw::is_zero(c)) ++nz;
        return nz == 1;
    }

    // Exact division; throws DivisionByNonUnit if the remainder is nonzero.
    static LaurentPoly div_exact(const LaurentPoly& num, const LaurentPoly& den);

    Rat evaluate(const Rat& x) const {
        if (c_.empty()) return Rat(0);
        if (qpw::is_zero(x) && off_ < 0) throw Error("Laurent evaluation at 0 with negative exponents");
        // Horner over the dense span, then adjust by x^off.
        Rat acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        Rat p(1);
        int e = off_;
        Rat base = e < 0 ? Rat(1) / x : x;
        for (int i = 0; i < std::abs(e); ++i) p *= base;
        return acc * p;
    }

    std::string to_string(const std::string& var = "x") const {
        if (c_.empty()) return "0";
        std::string s;
        bool first = true;
        for (int e = off_; e <= hi(); ++e) {
            const Rat& c = c_[size_t(e - off_)];
            if (qpw::is_zero(c)) continue;
            Rat a = abs(c);
            if (first) {
                if (sgn(c) < 0) s += "-";
                first = false;
            } else {
                s += sgn(c) < 0 ? " - " : " + ";
            }
            if (e == 0 || a != 1) s += a.get_str();
            if (e != 0) {
                if (a != 1) s += "*";
                s += var;
                if (e != 1) s += "^" + std::to_string(e);
            }
        }
        return s;
    }

  private:
    void set_coeff_raw(int e, const Rat& v) {
        if (c_.empty()) {
            off_ = e;
            c_ = {v};
            return;
        }
        if (e < off_) {
            c_.insert(c_.begin(), size_t(off_ - e), Rat(0));
            off_ = e;
        } else if (e > hi()) {
            c_.resize(size_t(e - off_ + 1), Rat(0));
        }
        c_[size_t(e - off_)] = v;
    }
    void trim() {
        size_t lead = 0;
        while (lead < c_.size() && qpw::is_zero(c_[lead])) ++lead;
        if (lead == c_.size()) {
            c_.clear();
            off_ = 0;
            return;
        }
        size_t tail = c_.size();
        while (tail > 0 && qpw::is_zero(c_[tail - 1])) --tail;
        if (lead > 0 || tail < c_.size()) {
            std::vector<Rat> nc(c_.begin() + long(lead), c_.begin() + long(tail));
            c_.swap(nc);
            off_ += int(lead);
        }
    }

    int off_ = 0;
    std::vector<Rat> c_;  // empty means zero
};

inline LaurentPoly LaurentPoly::div_exact(const LaurentPoly& num, const LaurentPoly& den) {
    if (den.is_zero()) throw DivisionByNonUnit("zero Laurent divisor");
    if (num.is_zero()) return LaurentPoly();
    // Shift both to ordinary polynomials, divide, shift back.
    int ns = num.off_, ds = den.off_;
    std::vector<Rat> r = num.c_;
    const std::vector<Rat>& d = den.c_;
    if (r.size() < d.size()) throw DivisionByNonUnit("degree too small: " + num.to_string() + " / " + den.to_string());
    size_t qn = r.size() - d.size() + 1;
    std::vector<Rat> q(qn, Rat(0));
    const Rat& lead = d.back();
    for (size_t i = qn; i-- > 0;) {
        Rat f = r[i + d.size() - 1] / lead;
        q[i] = f;
        if (!qpw::is_zero(f))
            for (size_t j = 0; j < d.size(); ++j) r[i + j] -= f * d[j];
    }
    for (const auto& c : r)
        if (!qpw::is_zero(c)) throw DivisionByNonUnit("non-exact Laurent division: " + num.to_string() + " / " + den.to_string());
    LaurentPoly out;
    out.off_ = ns - ds;
    out.c_ = std::move(q);
    out.trim();
    return out;
}

inline bool is_zero(const LaurentPoly& p) { return p.is_zero(); }

}  // namespace qpw
