#include "qpw/kernel_group.hpp"

#include <algorithm>
#include <set>

namespace qpw {

namespace {

// Dense univariate polynomial over Rat; implementation detail of the
// bivariate gcd.
struct UPoly {
    std::vector<Rat> c;  // c[i] = coefficient of z^i; no trailing zeros

    void trim() {
        while (!c.empty() && qpw::is_zero(c.back())) c.pop_back();
    }
    bool zero() const { return c.empty(); }
    int deg() const { return int(c.size()) - 1; }
    const Rat& lead() const { return c.back(); }

    UPoly operator+(const UPoly& o) const {
        UPoly r;
        r.c.resize(std::max(c.size(), o.c.size()), Rat(0));
        for (size_t i = 0; i < c.size(); ++i) r.c[i] += c[i];
        for (size_t i = 0; i < o.c.size(); ++i) r.c[i] += o.c[i];
        r.trim();
        return r;
    }
    UPoly operator-(const UPoly& o) const {
        UPoly r;
        r.c.resize(std::max(c.size(), o.c.size()), Rat(0));
        for (size_t i = 0; i < c.size(); ++i) r.c[i] += c[i];
        for (size_t i = 0; i < o.c.size(); ++i) r.c[i] -= o.c[i];
        r.trim();
        return r;
    }
    UPoly operator*(const UPoly& o) const {
        if (zero() || o.zero()) return {};
        UPoly r;
        r.c.assign(c.size() + o.c.size() - 1, Rat(0));
        for (size_t i = 0; i < c.size(); ++i) {
            if (qpw::is_zero(c[i])) continue;
            for (size_t j = 0; j < o.c.size(); ++j) r.c[i + j] += c[i] * o.c[j];
        }
        r.trim();
        return r;
    }
    UPoly scaled(const Rat& s) const {
        UPoly r = *this;
        for (auto& v : r.c) v *= s;
        r.trim();
        return r;
    }
};

UPoly upoly_mod(UPoly a, const UPoly& b) {
    if (b.zero()) throw DivisionByNonUnit("univariate mod by zero");
    while (!a.zero() && a.deg() >= b.deg()) {
        Rat f = a.lead() / b.lead();
        int shift = a.deg() - b.deg();
        for (int i = 0; i <= b.deg(); ++i) a.c[size_t(i + shift)] -= f * b.c[size_t(i)];
        a.trim();
    }
    return a;
}

UPoly upoly_gcd(UPoly a, UPoly b) {
    while (!b.zero()) {
        UPoly r = upoly_mod(a, b);
        a = b;
        b = r;
    }
    if (!a.zero()) a = a.scaled(Rat(1) / a.lead());  // monic
    return a;
}

// Exact division a / b (remainder must vanish).
UPoly upoly_div(UPoly a, const UPoly& b) {
    if (b.zero()) throw DivisionByNonUnit("univariate division by zero");
    UPoly q;
    if (a.deg() < b.deg()) {
        if (!a.zero()) throw DivisionByNonUnit("non-exact univariate division");
        return q;
    }
    q.c.assign(size_t(a.deg() - b.deg() + 1), Rat(0));
    while (!a.zero() && a.deg() >= b.deg()) {
        Rat f = a.lead() / b.lead();
        int shift = a.deg() - b.deg();
        q.c[size_t(shift)] = f;
        for (int i = 0; i <= b.deg(); ++i) a.c[size_t(i + shift)] -= f * b.c[size_t(i)];
        a.trim();
    }
    if (!a.zero()) throw DivisionByNonUnit("non-exact univariate division");
    q.trim();
    return q;
}

// Bivariate polynomial as a polynomial in y with UPoly (in x) coefficients.
struct RPoly {
    std::vector<UPoly> c;  // c[j] = coefficient of y^j

    void trim() {
        while (!c.empty() && c.back().zero()) c.pop_back();
    }
    bool zero() const { return c.empty(); }
    int deg() const { return int(c.size()) - 1; }
    const UPoly& lead() const { return c.back(); }

    UPoly content() const {
        UPoly g;
        for (const auto& ci : c) g = upoly_gcd(g, ci);
        return g;
    }
    RPoly divided_content(const UPoly& g) const {
        RPoly r;
        for (const auto& ci : c) r.c.push_back(ci.zero() ? UPoly{} : upoly_div(ci, g));
        r.trim();
        return r;
    }
    RPoly scaled(const UPoly& s) const {
        RPoly r;
        for (const auto& ci : c) r.c.push_back(ci * s);
        r.trim();
        return r;
    }
    RPoly operator-(const RPoly& o) const {
        RPoly r;
        r.c.resize(std::max(c.size(), o.c.size()));
        for (size_t i = 0; i < c.size(); ++i) r.c[i] = r.c[i] + c[i];
        for (size_t i = 0; i < o.c.size(); ++i) r.c[i] = r.c[i] - o.c[i];
        r.trim();
        return r;
    }
    RPoly shifted(int k) const {  // * y^k
        RPoly r;
        r.c.resize(c.size() + size_t(k));
        for (size_t i = 0; i < c.size(); ++i) r.c[i + size_t(k)] = c[i];
        return r;
    }
};

// Pseudo-remainder of a by b in (Q[x])[y].
RPoly rpoly_prem(RPoly a, const RPoly& b) {
    while (!a.zero() && a.deg() >= b.deg()) {
        int shift = a.deg() - b.deg();
        RPoly sub = b.shifted(shift).scaled(a.lead());
        a = a.scaled(b.lead()) - sub;
    }
    return a;
}

RPoly rpoly_gcd(RPoly a, RPoly b) {
    if (a.zero()) return b;
    if (b.zero()) return a;
    if (a.deg() < b.deg()) std::swap(a, b);
    UPoly ca = a.content(), cb = b.content();
    UPoly cg = upoly_gcd(ca, cb);
    a = a.divided_content(ca);
    b = b.divided_content(cb);
    while (true) {
        RPoly r = rpoly_prem(a, b);
        if (r.zero()) break;
        if (r.deg() == 0) {
            // Nontrivial constant-in-y remainder: primitive parts are coprime in y.
            b.c.assign(1, UPoly{std::vector<Rat>{Rat(1)}});
            break;
        }
        r = r.divided_content(r.content());
        a = b;
        b = r;
    }
    b = b.divided_content(b.content());
    return b.scaled(cg);
}

RPoly to_rpoly(const BivarPoly& p) {
    RPoly r;
    for (const auto& [k, c] : p.terms()) {
        if (int(r.c.size()) <= k.second) r.c.resize(size_t(k.second + 1));
        UPoly& u = r.c[size_t(k.second)];
        if (int(u.c.size()) <= k.first) u.c.resize(size_t(k.first + 1), Rat(0));
        u.c[size_t(k.first)] = Rat(c);
    }
    for (auto& u : r.c) u.trim();
    r.trim();
    return r;
}

// Clear denominators and return a primitive integer polynomial (sign fixed
// by normalize_primitive).  Only used where the result is canonical up to a
// rational factor, i.e. for gcds.
BivarPoly from_rpoly_primitive(const RPoly& r) {
    Int den_lcm(1);
    for (const auto& u : r.c)
        for (const auto& q : u.c)
            if (!qpw::is_zero(q)) den_lcm = lcm(den_lcm, Int(q.get_den()));
    BivarPoly out;
    for (size_t j = 0; j < r.c.size(); ++j)
        for (size_t i = 0; i < r.c[j].c.size(); ++i) {
            const Rat& q = r.c[j].c[i];
            if (qpw::is_zero(q)) continue;
            Int v = Int(q.get_num()) * (den_lcm / Int(q.get_den()));
            out = out + BivarPoly::monomial(int(i), int(j), v);
        }
    out.normalize_primitive();
    return out;
}

// Exact value-preserving conversion: all coefficients must be integers.
BivarPoly from_rpoly_exact(const RPoly& r) {
    BivarPoly out;
    for (size_t j = 0; j < r.c.size(); ++j)
        for (size_t i = 0; i < r.c[j].c.size(); ++i) {
            const Rat& q = r.c[j].c[i];
            if (qpw::is_zero(q)) continue;
            if (!is_integer(q)) throw DivisionByNonUnit("non-integer quotient coefficient");
            out = out + BivarPoly::monomial(int(i), int(j), Int(q.get_num()));
        }
    return out;
}

// Primitive, lead-positive gcd.
BivarPoly bivar_gcd(const BivarPoly& a, const BivarPoly& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    return from_rpoly_primitive(rpoly_gcd(to_rpoly(a), to_rpoly(b)));
}

// Exact division of integer bivariate polynomials; by Gauss's lemma the
// quotient by a primitive divisor is an integer polynomial.
BivarPoly bivar_div(const BivarPoly& a, const BivarPoly& b) {
    RPoly ra = to_rpoly(a), rb = to_rpoly(b);
    // Long division in (Q(x))[y]; every coefficient quotient must be exact.
    RPoly q;
    if (!ra.zero() && ra.deg() >= rb.deg()) q.c.resize(size_t(ra.deg() - rb.deg() + 1));
    while (!ra.zero() && ra.deg() >= rb.deg()) {
        int shift = ra.deg() - rb.deg();
        UPoly f = upoly_div(ra.lead(), rb.lead());
        q.c[size_t(shift)] = f;
        RPoly sub = rb.shifted(shift);
        for (auto& u : sub.c) u = u * f;
        ra = ra - sub;
    }
    if (!ra.zero()) throw DivisionByNonUnit("non-exact bivariate division");
    q.trim();
    return from_rpoly_exact(q);
}

}  // namespace

BivarPoly BivarPoly::monomial(int ex, int ey, Int c) {
    BivarPoly p;
    if (ex < 0 || ey < 0) throw Error("negative exponent in bivariate monomial");
    if (!qpw::is_zero(c)) p.t_[{ex, ey}] = std::move(c);
    return p;
}

int BivarPoly::deg_x() const {
    int d = 0;
    for (const auto& [k, c] : t_) d = std::max(d, k.first);
    return d;
}

int BivarPoly::deg_y() const {
    int d = 0;
    for (const auto& [k, c] : t_) d = std::max(d, k.second);
    return d;
}

Int BivarPoly::coeff(int ex, int ey) const {
    auto it = t_.find({ex, ey});
    return it == t_.end() ? Int(0) : it->second;
}

BivarPoly BivarPoly::operator+(const BivarPoly& o) const {
    BivarPoly r = *this;
    for (const auto& [k, c] : o.t_) {
        Int& slot = r.t_[k];
        slot += c;
        if (qpw::is_zero(slot)) r.t_.erase(k);
    }
    return r;
}

BivarPoly BivarPoly::operator-(const BivarPoly& o) const { return *this + (-o); }

BivarPoly BivarPoly::operator-() const {
    BivarPoly r;
    for (const auto& [k, c] : t_) r.t_[k] = -c;
    return r;
}

BivarPoly BivarPoly::operator*(const BivarPoly& o) const {
    BivarPoly r;
    for (const auto& [ka, ca] : t_)
        for (const auto& [kb, cb] : o.t_) {
            Key k{ka.first + kb.first, ka.second + kb.second};
            Int& slot = r.t_[k];
            slot += ca * cb;
            if (qpw::is_zero(slot)) r.t_.erase(k);
        }
    return r;
}

Int BivarPoly::content() const {
    Int g(0);
    for (const auto& [k, c] : t_) g = gcd(g, c);
    return g;
}

int BivarPoly::lead_sign() const {
    if (t_.empty()) return 0;
    // Leading term in graded-lex order.
    Key lead{-1, -1};
    int best = -1;
    for (const auto& [k, c] : t_) {
        int tot = k.first + k.second;
        if (tot > best || (tot == best && k > lead)) {
            best = tot;
            lead = k;
        }
    }
    return sgn(t_.at(lead));
}

void BivarPoly::divide_scalar(const Int& c) {
    if (qpw::is_zero(c)) throw DivisionByNonUnit("scalar division by zero");
    for (auto& [k, v] : t_) {
        if (!mpz_divisible_p(v.get_mpz_t(), c.get_mpz_t()))
            throw DivisionByNonUnit("non-exact scalar division");
        v /= c;
    }
}

void BivarPoly::normalize_primitive() {
    if (t_.empty()) return;
    Int g = content();
    if (lead_sign() < 0) g = -g;
    for (auto& [k, c] : t_) c /= g;
}

std::string BivarPoly::to_string() const {
    if (t_.empty()) return "0";
    std::string s;
    bool first = true;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
        const auto& [k, c] = *it;
        Int a = abs(c);
        if (first) {
            if (sgn(c) < 0) s += "-";
            first = false;
        } else {
            s += sgn(c) < 0 ? " - " : " + ";
        }
        bool has_var = k.first > 0 || k.second > 0;
        if (!has_var || a != 1) s += a.get_str();
        if (k.first > 0) s += "x" + (k.first > 1 ? "^" + std::to_string(k.first) : "");
        if (k.second > 0) s += "y" + (k.second > 1 ? "^" + std::to_string(k.second) : "");
    }
    return s;
}

RationalFunc::RationalFunc(BivarPoly num, BivarPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByNonUnit("zero denominator in rational function");
    if (num_.is_zero()) {
        num_ = BivarPoly(0);
        den_ = BivarPoly(1);
        return;
    }
    BivarPoly g = bivar_gcd(num_, den_);
    if (!(g == BivarPoly(1))) {
        num_ = bivar_div(num_, g);
        den_ = bivar_div(den_, g);
    }
    // Canonical scalar: divide both parts by +-gcd(contents), sign chosen so
    // the denominator's leading coefficient is positive.  This is the unique
    // value-preserving normalization of a reduced fraction.
    Int c = gcd(num_.content(), den_.content());
    if (den_.lead_sign() < 0) c = -c;
    num_.divide_scalar(c);
    den_.divide_scalar(c);
}

RationalFunc RationalFunc::operator+(const RationalFunc& o) const {
    return RationalFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}
RationalFunc RationalFunc::operator-(const RationalFunc& o) const {
    return RationalFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}
RationalFunc RationalFunc::operator*(const RationalFunc& o) const {
    return RationalFunc(num_ * o.num_, den_ * o.den_);
}
RationalFunc RationalFunc::operator/(const RationalFunc& o) const {
    if (o.num_.is_zero()) throw DivisionByNonUnit("division by zero rational function");
    return RationalFunc(num_ * o.den_, den_ * o.num_);
}

int RationalFunc::max_degree() const {
    return std::max(std::max(num_.deg_x(), num_.deg_y()), std::max(den_.deg_x(), den_.deg_y()));
}

std::string RationalFunc::to_string() const {
    if (den_ == BivarPoly(1)) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

RationalFunc substitute(const BivarPoly& p, const RationalFunc& fx, const RationalFunc& fy) {
    int dx = p.deg_x(), dy = p.deg_y();
    // p(Nx/Dx, Ny/Dy) * Dx^dx * Dy^dy is polynomial; build it with power tables.
    std::vector<BivarPoly> nx(size_t(dx + 1)), dxp(size_t(dx + 1)), ny(size_t(dy + 1)), dyp(size_t(dy + 1));
    nx[0] = dxp[0] = ny[0] = dyp[0] = BivarPoly(1);
    for (int i = 1; i <= dx; ++i) {
        nx[size_t(i)] = nx[size_t(i - 1)] * fx.num();
        dxp[size_t(i)] = dxp[size_t(i - 1)] * fx.den();
    }
    for (int j = 1; j <= dy; ++j) {
        ny[size_t(j)] = ny[size_t(j - 1)] * fy.num();
        dyp[size_t(j)] = dyp[size_t(j - 1)] * fy.den();
    }
    BivarPoly acc;
    for (const auto& [k, c] : p.terms()) {
        BivarPoly term = BivarPoly(c) * nx[size_t(k.first)] * dxp[size_t(dx - k.first)] * ny[size_t(k.second)] *
                         dyp[size_t(dy - k.second)];
        acc = acc + term;
    }
    return RationalFunc(acc, dxp[size_t(dx)] * dyp[size_t(dy)]);
}

RationalFunc substitute(const RationalFunc& f, const RationalFunc& fx, const RationalFunc& fy) {
    RationalFunc n = substitute(f.num(), fx, fy);
    RationalFunc d = substitute(f.den(), fx, fy);
    return n / d;
}

RationalMap identity_map() { return {RationalFunc::variable_x(), RationalFunc::variable_y()}; }

RationalMap compose(const RationalMap& g, const RationalMap& f) {
    return {substitute(g.fx, f.fx, f.fy), substitute(g.fy, f.fx, f.fy)};
}

bool is_identity(const RationalMap& m) { return m == identity_map(); }

RationalFunc step_polynomial(const Model& m) {
    BivarPoly num;
    for (const auto& s : m.steps) num = num + BivarPoly::monomial(s.dx + 1, s.dy + 1);
    return RationalFunc(num, BivarPoly::monomial(1, 1));
}

namespace {

// (1/v) * num(w)/den(w) as a RationalFunc, where `which` selects whether the
// Laurent polynomials num/den are in x (psi, v = y) or y (phi, v = x).
RationalFunc half_involution(const LaurentPoly& num, const LaurentPoly& den, bool in_x) {
    int shift = std::max(0, -std::min(num.lo(), den.lo()));
    BivarPoly n, d;
    for (int e = num.lo(); e <= num.hi(); ++e) {
        Rat c = num.coeff(e);
        if (qpw::is_zero(c)) continue;
        if (!is_integer(c)) throw Error("non-integer step multiplicity");
        n = n + (in_x ? BivarPoly::monomial(e + shift, 0, Int(c.get_num()))
                      : BivarPoly::monomial(0, e + shift, Int(c.get_num())));
    }
    for (int e = den.lo(); e <= den.hi(); ++e) {
        Rat c = den.coeff(e);
        if (qpw::is_zero(c)) continue;
        if (!is_integer(c)) throw Error("non-integer step multiplicity");
        d = d + (in_x ? BivarPoly::monomial(e + shift, 0, Int(c.get_num()))
                      : BivarPoly::monomial(0, e + shift, Int(c.get_num())));
    }
    // Multiply the denominator by the inverted variable: in_x -> y, else x.
    d = d * (in_x ? BivarPoly::monomial(0, 1) : BivarPoly::monomial(1, 0));
    return RationalFunc(n, d);
}

}  // namespace

RationalMap involution_phi(const Model& m) {
    LaurentPoly b1 = m.B(1), bm1 = m.B(-1);
    if (b1.is_zero() || bm1.is_zero()) throw Error("model lacks x-steps in both directions");
    return {half_involution(bm1, b1, /*in_x=*/false), RationalFunc::variable_y()};
}

RationalMap involution_psi(const Model& m) {
    LaurentPoly a1 = m.A(1), am1 = m.A(-1);
    if (a1.is_zero() || am1.is_zero()) throw Error("model lacks y-steps in both directions");
    return {RationalFunc::variable_x(), half_involution(am1, a1, /*in_x=*/true)};
}

bool preserves_step_polynomial(const RationalMap& map, const Model& m) {
    RationalFunc s = step_polynomial(m);
    return substitute(s, map.fx, map.fy) == s;
}

GroupResult group_closure(const Model& m, int cap, int degree_cap) {
    RationalMap phi = involution_phi(m), psi = involution_psi(m);
    GroupResult res;
    std::set<std::string> seen;
    res.elements.push_back(identity_map());
    seen.insert(identity_map().key());
    std::vector<RationalMap> frontier = {identity_map()};
    while (!frontier.empty()) {
        std::vector<RationalMap> next;
        for (const auto& el : frontier)
            for (const auto* gen : {&phi, &psi}) {
                RationalMap c = compose(*gen, el);
                if (c.max_degree() > degree_cap)
                    throw GroupOrderExceedsCap("element degree " + std::to_string(c.max_degree()) +
                                               " exceeds cap " + std::to_string(degree_cap));
                if (seen.insert(c.key()).second) {
                    if (int(seen.size()) > cap)
                        throw GroupOrderExceedsCap("more than " + std::to_string(cap) + " elements");
                    res.elements.push_back(c);
                    next.push_back(c);
                }
            }
        frontier = std::move(next);
    }
    return res;
}

}  // namespace qpw
