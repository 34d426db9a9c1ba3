#pragma once

#include <map>
#include <utility>
#include <vector>

#include "qpw/numeric.hpp"

namespace qpw {

// Polynomial in the two boundary-weight indeterminates (a, b) with integer
// coefficients.  Exponents are nonnegative; the map holds no explicit zeros.
class WeightPoly {
  public:
    using Key = std::pair<int, int>;  // (deg_a, deg_b)
    using Map = std::map<Key, Int>;

    WeightPoly() = default;
    explicit WeightPoly(long c) {
        if (c != 0) terms_[{0, 0}] = c;
    }
    explicit WeightPoly(Int c) {
        if (!qpw::is_zero(c)) terms_[{0, 0}] = std::move(c);
    }
    static WeightPoly monomial(int da, int db, Int c = Int(1)) {
        WeightPoly p;
        if (!qpw::is_zero(c)) p.terms_[{da, db}] = std::move(c);
        return p;
    }

    const Map& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Int coeff(int da, int db) const {
        auto it = terms_.find({da, db});
        return it == terms_.end() ? Int(0) : it->second;
    }

    // dest += src * a^da * b^db
    void add_shifted(const WeightPoly& src, int da, int db) {
        for (const auto& [k, c] : src.terms_) {
            Int& slot = terms_[{k.first + da, k.second + db}];
            slot += c;
            if (qpw::is_zero(slot)) terms_.erase({k.first + da, k.second + db});
        }
    }

    WeightPoly& operator+=(const WeightPoly& o) {
        add_shifted(o, 0, 0);
        return *this;
    }
    WeightPoly& operator-=(const WeightPoly& o) {
        for (const auto& [k, c] : o.terms_) {
            Int& slot = terms_[k];
            slot -= c;
            if (qpw::is_zero(slot)) terms_.erase(k);
        }
        return *this;
    }
    friend WeightPoly operator+(WeightPoly x, const WeightPoly& y) { return x += y; }
    friend WeightPoly operator-(WeightPoly x, const WeightPoly& y) { return x -= y; }
    friend WeightPoly operator*(const WeightPoly& x, const WeightPoly& y) {
        WeightPoly r;
        for (const auto& [kx, cx] : x.terms_)
            for (const auto& [ky, cy] : y.terms_) {
                Key k{kx.first + ky.first, kx.second + ky.second};
                Int& slot = r.terms_[k];
                slot += cx * cy;
                if (qpw::is_zero(slot)) r.terms_.erase(k);
            }
        return r;
    }
    WeightPoly operator-() const {
        WeightPoly r;
        for (const auto& [k, c] : terms_) r.terms_[k] = -c;
        return r;
    }
    bool operator==(const WeightPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const WeightPoly& o) const { return !(*this == o); }

    // Swap a and b (the diagonal-reflection image of a weight polynomial).
    WeightPoly swapped() const {
        WeightPoly r;
        for (const auto& [k, c] : terms_) r.terms_[{k.second, k.first}] = c;
        return r;
    }

    Rat evaluate(const Rat& a, const Rat& b) const {
        // Exponents are tiny; direct power evaluation is fine.
        Rat acc(0);
        for (const auto& [k, c] : terms_) {
            Rat term(c);
            for (int i = 0; i < k.first; ++i) term *= a;
            for (int i = 0; i < k.second; ++i) term *= b;
            acc += term;
        }
        return acc;
    }

    int total_degree() const {
        int d = 0;
        for (const auto& [k, c] : terms_) d = std::max(d, k.first + k.second);
        return d;
    }
    int degree_a() const {
        int d = 0;
        for (const auto& [k, c] : terms_) d = std::max(d, k.first);
        return d;
    }
    int degree_b() const {
        int d = 0;
        for (const auto& [k, c] : terms_) d = std::max(d, k.second);
        return d;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string s;
        bool first = true;
        for (const auto& [k, c] : terms_) {
            Int ab = abs(c);
            if (first) {
                if (sgn(c) < 0) s += "-";
                first = false;
            } else {
                s += sgn(c) < 0 ? " - " : " + ";
            }
            bool has_var = k.first > 0 || k.second > 0;
            if (!has_var || ab != 1) s += ab.get_str();
            if (k.first > 0) {
                s += "a";
                if (k.first > 1) s += "^" + std::to_string(k.first);
            }
            if (k.second > 0) {
                s += "b";
                if (k.second > 1) s += "^" + std::to_string(k.second);
            }
        }
        return s;
    }

  private:
    Map terms_;
};

inline bool is_zero(const WeightPoly& p) { return p.is_zero(); }

}  // namespace qpw
