#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qpw/models.hpp"
#include "qpw/numeric.hpp"

namespace qpw {

// Bivariate polynomial in (x, y) over the integers, nonnegative exponents.
class BivarPoly {
  public:
    using Key = std::pair<int, int>;

    BivarPoly() = default;
    explicit BivarPoly(long c) {
        if (c != 0) t_[{0, 0}] = Int(c);
    }
    explicit BivarPoly(Int c) {
        if (!qpw::is_zero(c)) t_[{0, 0}] = std::move(c);
    }
    static BivarPoly monomial(int ex, int ey, Int c = Int(1));

    const std::map<Key, Int>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    int deg_x() const;
    int deg_y() const;
    Int coeff(int ex, int ey) const;

    BivarPoly operator+(const BivarPoly& o) const;
    BivarPoly operator-(const BivarPoly& o) const;
    BivarPoly operator*(const BivarPoly& o) const;
    BivarPoly operator-() const;
    bool operator==(const BivarPoly& o) const { return t_ == o.t_; }
    bool operator!=(const BivarPoly& o) const { return !(*this == o); }

    // Divide all coefficients by their gcd and make the leading (graded-lex
    // highest) coefficient positive.
    void normalize_primitive();
    Int content() const;             // gcd of coefficients (positive), 0 for the zero poly
    int lead_sign() const;           // sign of the graded-lex leading coefficient
    void divide_scalar(const Int& c);  // exact coefficientwise division
    std::string to_string() const;

  private:
    std::map<Key, Int> t_;
};

// Reduced fraction of bivariate integer polynomials.  Invariants: gcd(num,
// den) = 1 (over Q, primitive over Z), den != 0, den's leading coefficient
// positive.
class RationalFunc {
  public:
    RationalFunc() : num_(0), den_(1) {}
    RationalFunc(BivarPoly num, BivarPoly den);  // reduces

    static RationalFunc variable_x() { return RationalFunc(BivarPoly::monomial(1, 0), BivarPoly(1)); }
    static RationalFunc variable_y() { return RationalFunc(BivarPoly::monomial(0, 1), BivarPoly(1)); }

    const BivarPoly& num() const { return num_; }
    const BivarPoly& den() const { return den_; }

    RationalFunc operator+(const RationalFunc& o) const;
    RationalFunc operator-(const RationalFunc& o) const;
    RationalFunc operator*(const RationalFunc& o) const;
    RationalFunc operator/(const RationalFunc& o) const;
    bool operator==(const RationalFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RationalFunc& o) const { return !(*this == o); }

    int max_degree() const;
    std::string to_string() const;

  private:
    BivarPoly num_, den_;
};

// Substitution of rational functions for both variables of a polynomial or a
// rational function.
RationalFunc substitute(const BivarPoly& p, const RationalFunc& fx, const RationalFunc& fy);
RationalFunc substitute(const RationalFunc& f, const RationalFunc& fx, const RationalFunc& fy);

// Birational map of the (x, y) plane.
struct RationalMap {
    RationalFunc fx, fy;

    bool operator==(const RationalMap& o) const { return fx == o.fx && fy == o.fy; }
    std::string to_string() const { return "(" + fx.to_string() + ", " + fy.to_string() + ")"; }
    std::string key() const { return to_string(); }
    int max_degree() const { return std::max(fx.max_degree(), fy.max_degree()); }
};

RationalMap identity_map();
// g after f: apply f, then g.
RationalMap compose(const RationalMap& g, const RationalMap& f);
bool is_identity(const RationalMap& m);

// The step polynomial S(x, y) as a rational function.
RationalFunc step_polynomial(const Model& m);

// Kernel involutions x -> (1/x) B_{-1}(y)/B_1(y) and y -> (1/y) A_{-1}(x)/A_1(x).
RationalMap involution_phi(const Model& m);
RationalMap involution_psi(const Model& m);

// True if S(m(x,y)) = S(x,y).
bool preserves_step_polynomial(const RationalMap& map, const Model& m);

struct GroupResult {
    std::vector<RationalMap> elements;  // identity first, then BFS order
    int order() const { return int(elements.size()); }
};

// Closure of {phi, psi} under composition.  Throws GroupOrderExceedsCap if
// more than `cap` distinct elements appear or if any element's degree
// exceeds `degree_cap` (both indicate a non-finite or mis-specified group).
GroupResult group_closure(const Model& m, int cap = 16, int degree_cap = 12);

}  // namespace qpw
