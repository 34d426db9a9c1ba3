#include "qpw/guess.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <mutex>

#include "qpw/walks.hpp"

namespace qpw {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 p) { return u64(u128(a) * b % p); }
u64 addmod(u64 a, u64 b, u64 p) { return (a + b) % p; }
u64 submod(u64 a, u64 b, u64 p) { return (a + p - b) % p; }

u64 powmod(u64 b, u64 e, u64 p) {
    u64 r = 1 % p;
    while (e) {
        if (e & 1) r = mulmod(r, b, p);
        b = mulmod(b, b, p);
        e >>= 1;
    }
    return r;
}

u64 invmod(u64 a, u64 p) { return powmod(a, p - 2, p); }

// Pool of 62-bit primes, found on demand by scanning downward.  Guarded: the
// classify fan-out may probe from several worker threads.
u64 nth_prime(size_t idx) {
    static std::mutex mu;
    static std::vector<u64> pool;
    std::lock_guard<std::mutex> lock(mu);
    while (pool.size() <= idx) {
        u64 cand = pool.empty() ? ((u64(1) << 62) - 1) : pool.back() - 2;
        mpz_class z;
        for (;; cand -= 2) {
            mpz_set_ui(z.get_mpz_t(), cand);
            if (mpz_probab_prime_p(z.get_mpz_t(), 30)) break;
        }
        pool.push_back(cand);
    }
    return pool[idx];
}

// x mod p for a rational; fails (ok = false) when the denominator vanishes.
u64 rat_mod(const Rat& x, u64 p, bool& ok) {
    u64 d = mpz_fdiv_ui(x.get_den().get_mpz_t(), p);
    if (d == 0) {
        ok = false;
        return 0;
    }
    u64 n = mpz_fdiv_ui(x.get_num().get_mpz_t(), p);
    return mulmod(n, invmod(d, p), p);
}

// Dense linear problem A c = 0 described by an exact entry oracle.
struct LinearProblem {
    int nrows = 0;
    int ncols = 0;
    std::function<Rat(int, int)> entry;
};

struct ModRref {
    bool usable = true;           // false when an entry was not reducible mod p
    int rank = 0;
    std::vector<int> pivot_of_col;  // row index or -1
    std::vector<std::vector<u64>> rows;
};

ModRref rref_mod(const LinearProblem& lp, u64 p) {
    ModRref out;
    out.pivot_of_col.assign(size_t(lp.ncols), -1);
    std::vector<std::vector<u64>> m(size_t(lp.nrows), std::vector<u64>(size_t(lp.ncols)));
    for (int r = 0; r < lp.nrows; ++r)
        for (int c = 0; c < lp.ncols; ++c) {
            bool ok = true;
            m[size_t(r)][size_t(c)] = rat_mod(lp.entry(r, c), p, ok);
            if (!ok) {
                out.usable = false;
                return out;
            }
        }
    int lead = 0;
    for (int col = 0; col < lp.ncols && lead < lp.nrows; ++col) {
        int sel = -1;
        for (int r = lead; r < lp.nrows; ++r)
            if (m[size_t(r)][size_t(col)] != 0) {
                sel = r;
                break;
            }
        if (sel < 0) continue;
        std::swap(m[size_t(sel)], m[size_t(lead)]);
        u64 inv = invmod(m[size_t(lead)][size_t(col)], p);
        for (int c = col; c < lp.ncols; ++c) m[size_t(lead)][size_t(c)] = mulmod(m[size_t(lead)][size_t(c)], inv, p);
        for (int r = 0; r < lp.nrows; ++r) {
            if (r == lead) continue;
            u64 f = m[size_t(r)][size_t(col)];
            if (f == 0) continue;
            for (int c = col; c < lp.ncols; ++c)
                m[size_t(r)][size_t(c)] = submod(m[size_t(r)][size_t(c)], mulmod(f, m[size_t(lead)][size_t(c)], p), p);
        }
        out.pivot_of_col[size_t(col)] = lead;
        ++lead;
    }
    out.rank = lead;
    m.resize(size_t(lead));
    out.rows = std::move(m);
    return out;
}

// Canonical nullspace vector with free column f set to one.
std::vector<u64> null_vector_mod(const ModRref& rr, int ncols, int f, u64 p) {
    std::vector<u64> v(size_t(ncols), 0);
    v[size_t(f)] = 1;
    for (int c = 0; c < ncols; ++c) {
        int r = rr.pivot_of_col[size_t(c)];
        if (r >= 0) v[size_t(c)] = submod(0, rr.rows[size_t(r)][size_t(f)], p);
    }
    return v;
}

std::vector<std::vector<Rat>> nullspace_exact(const LinearProblem& lp) {
    std::vector<std::vector<Rat>> m(size_t(lp.nrows), std::vector<Rat>(size_t(lp.ncols)));
    for (int r = 0; r < lp.nrows; ++r)
        for (int c = 0; c < lp.ncols; ++c) m[size_t(r)][size_t(c)] = lp.entry(r, c);
    std::vector<int> pivot_of_col(size_t(lp.ncols), -1);
    int lead = 0;
    for (int col = 0; col < lp.ncols && lead < lp.nrows; ++col) {
        int sel = -1;
        for (int r = lead; r < lp.nrows; ++r)
            if (!qpw::is_zero(m[size_t(r)][size_t(col)])) {
                sel = r;
                break;
            }
        if (sel < 0) continue;
        std::swap(m[size_t(sel)], m[size_t(lead)]);
        Rat inv = Rat(1) / m[size_t(lead)][size_t(col)];
        for (int c = col; c < lp.ncols; ++c) m[size_t(lead)][size_t(c)] *= inv;
        for (int r = 0; r < lp.nrows; ++r) {
            if (r == lead) continue;
            Rat f = m[size_t(r)][size_t(col)];
            if (qpw::is_zero(f)) continue;
            for (int c = col; c < lp.ncols; ++c) m[size_t(r)][size_t(c)] -= f * m[size_t(lead)][size_t(c)];
        }
        pivot_of_col[size_t(col)] = lead;
        ++lead;
    }
    std::vector<std::vector<Rat>> basis;
    for (int f = 0; f < lp.ncols; ++f) {
        if (pivot_of_col[size_t(f)] >= 0) continue;
        std::vector<Rat> v(size_t(lp.ncols), Rat(0));
        v[size_t(f)] = Rat(1);
        for (int c = 0; c < lp.ncols; ++c)
            if (pivot_of_col[size_t(c)] >= 0) v[size_t(c)] = -m[size_t(pivot_of_col[size_t(c)])][size_t(f)];
        basis.push_back(std::move(v));
    }
    return basis;
}

Int crt_combine(const std::vector<u64>& residues, const std::vector<u64>& primes, Int& modulus_out) {
    Int x(0), P(1);
    for (size_t i = 0; i < residues.size(); ++i) {
        u64 p = primes[i];
        u64 xi = mpz_fdiv_ui(x.get_mpz_t(), p);
        u64 pi = mpz_fdiv_ui(P.get_mpz_t(), p);
        u64 delta = mulmod(submod(residues[i], xi, p), invmod(pi, p), p);
        mpz_class step;
        mpz_set_ui(step.get_mpz_t(), delta);
        x += P * step;
        mpz_class pz;
        mpz_set_ui(pz.get_mpz_t(), p);
        P *= pz;
    }
    modulus_out = P;
    return x;
}

std::optional<Rat> rat_reconstruct(const Int& x_in, const Int& P) {
    Int bound2 = (P - 1) / 2;
    Int B;
    mpz_sqrt(B.get_mpz_t(), bound2.get_mpz_t());
    Int a0 = P, a1 = x_in % P;
    if (sgn(a1) < 0) a1 += P;
    Int x0(0), x1(1);
    while (a1 > B) {
        Int q = a0 / a1;
        Int a2 = a0 - q * a1;
        a0 = a1;
        a1 = a2;
        Int x2 = x0 - q * x1;
        x0 = x1;
        x1 = x2;
    }
    if (qpw::is_zero(x1)) return std::nullopt;
    Int num = a1, den = x1;
    if (sgn(den) < 0) {
        den = -den;
        num = -num;
    }
    if (den > B) return std::nullopt;
    Int g;
    mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (g != 1 && !(qpw::is_zero(num) && den == 1)) return std::nullopt;
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Nullspace basis over Q.  An empty result is a proof (by a full-column-rank
// reduction) that the nullspace is zero; irrecoverable reconstruction
// problems raise InsufficientData instead of being misreported as "none".
std::vector<std::vector<Rat>> nullspace_rational(const LinearProblem& lp, Engine engine) {
    // Exact elimination is competitive only while the matrix entries are
    // small; long high-order series produce huge coefficients for which the
    // modular route avoids intermediate fraction blow-up.
    bool exact = engine == Engine::Exact;
    if (engine == Engine::Auto && lp.ncols <= 64) {
        size_t bits = 0;
        int r = lp.nrows - 1;  // entries grow with the row's t-order
        for (int c = 0; c < lp.ncols; ++c) {
            Rat v = lp.entry(r, c);
            bits = std::max({bits, mpz_sizeinbase(v.get_num().get_mpz_t(), 2),
                             mpz_sizeinbase(v.get_den().get_mpz_t(), 2)});
        }
        exact = bits <= 128;
    }
    if (exact) return nullspace_exact(lp);

    constexpr int kMaxGoodPrimes = 48;
    constexpr int kMaxAttempts = 96;
    int best_rank = -1;
    std::vector<int> best_pivots;
    std::vector<u64> primes;
    std::vector<ModRref> reductions;
    size_t cursor = 0;
    for (int attempt = 0; attempt < kMaxAttempts && int(primes.size()) < kMaxGoodPrimes; ++attempt) {
        u64 p = nth_prime(cursor++);
        ModRref rr = rref_mod(lp, p);
        if (!rr.usable) continue;
        if (rr.rank > best_rank) {
            best_rank = rr.rank;
            best_pivots = rr.pivot_of_col;
            primes.clear();
            reductions.clear();
        } else if (rr.rank < best_rank || rr.pivot_of_col != best_pivots) {
            continue;  // unlucky prime
        }
        if (best_rank == lp.ncols) return {};
        primes.push_back(p);
        reductions.push_back(std::move(rr));
        if (primes.size() < 2) continue;

        // Attempt componentwise reconstruction of every canonical basis vector.
        std::vector<std::vector<Rat>> basis;
        bool all_ok = true;
        for (int f = 0; f < lp.ncols && all_ok; ++f) {
            if (best_pivots[size_t(f)] >= 0) continue;
            std::vector<std::vector<u64>> vecs;
            for (size_t k = 0; k < reductions.size(); ++k)
                vecs.push_back(null_vector_mod(reductions[k], lp.ncols, f, primes[k]));
            std::vector<Rat> v(size_t(lp.ncols));
            for (int c = 0; c < lp.ncols && all_ok; ++c) {
                std::vector<u64> res;
                for (size_t k = 0; k < vecs.size(); ++k) res.push_back(vecs[k][size_t(c)]);
                Int modulus;
                Int combined = crt_combine(res, primes, modulus);
                auto rec = rat_reconstruct(combined, modulus);
                if (!rec) {
                    all_ok = false;
                    break;
                }
                v[size_t(c)] = *rec;
            }
            if (all_ok) basis.push_back(std::move(v));
        }
        if (all_ok) return basis;
    }
    throw InsufficientData("rational reconstruction did not stabilize within the prime budget");
}

// One cheap full-column-rank probe; true = nullspace certifiably zero.
bool nullspace_empty_probe(const LinearProblem& lp) {
    for (size_t cursor = 0; cursor < 8; ++cursor) {
        ModRref rr = rref_mod(lp, nth_prime(cursor));
        if (!rr.usable) continue;
        return rr.rank == lp.ncols;
    }
    return false;
}

// Clear denominators and content; returns an integer vector up to sign.
std::vector<Int> primitive_integer(const std::vector<Rat>& v) {
    Int lcm(1);
    for (const auto& x : v) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den().get_mpz_t());
    std::vector<Int> out;
    out.reserve(v.size());
    Int content(0);
    for (const auto& x : v) {
        Rat y = x * Rat(lcm);
        out.push_back(Int(y.get_num()));
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), out.back().get_mpz_t());
    }
    if (!qpw::is_zero(content))
        for (auto& c : out) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), content.get_mpz_t());
    return out;
}

Int height_of(const std::vector<Int>& v) {
    Int h(0);
    for (const auto& c : v)
        if (mpz_cmpabs(c.get_mpz_t(), h.get_mpz_t()) > 0) h = abs(c);
    return h;
}

std::vector<Series<Rat>> powers_of(const Series<Rat>& g, int top) {
    std::vector<Series<Rat>> p;
    p.push_back(Series<Rat>::constant(Rat(1), g.order()));
    for (int j = 1; j <= top; ++j) p.push_back(p.back() * g);
    return p;
}

std::vector<Series<Rat>> derivatives_of(const Series<Rat>& g, int top) {
    std::vector<Series<Rat>> d;
    d.push_back(g);
    for (int i = 1; i <= top; ++i) {
        const Series<Rat>& prev = d.back();
        Series<Rat> next(prev.order() - 1);
        for (int m = 0; m <= next.order(); ++m) next.at(m) = Rat(m + 1) * prev[m + 1];
        d.push_back(std::move(next));
    }
    return d;
}

AlgebraicCandidate make_alg_candidate(const std::vector<Rat>& v, int dg, int dt) {
    std::vector<Int> iv = primitive_integer(v);
    AlgebraicCandidate cand;
    for (int j = 0; j <= dg; ++j)
        for (int i = 0; i <= dt; ++i) {
            const Int& c = iv[size_t(j * (dt + 1) + i)];
            if (qpw::is_zero(c)) continue;
            cand.terms.emplace_back(i, j, c);
            cand.deg_t = std::max(cand.deg_t, i);
            cand.deg_g = std::max(cand.deg_g, j);
        }
    std::sort(cand.terms.begin(), cand.terms.end(), [](const auto& x, const auto& y) {
        if (std::get<1>(x) != std::get<1>(y)) return std::get<1>(x) < std::get<1>(y);
        return std::get<0>(x) < std::get<0>(y);
    });
    if (!cand.terms.empty() && sgn(std::get<2>(cand.terms.back())) < 0)
        for (auto& t : cand.terms) std::get<2>(t) = -std::get<2>(t);
    return cand;
}

OdeCandidate make_ode_candidate(const std::vector<Rat>& v, int r, int d) {
    std::vector<Int> iv = primitive_integer(v);
    OdeCandidate cand;
    cand.coeff.assign(size_t(r + 1), std::vector<Int>(size_t(d + 1), Int(0)));
    for (int i = 0; i <= r; ++i)
        for (int k = 0; k <= d; ++k) {
            const Int& c = iv[size_t(i * (d + 1) + k)];
            cand.coeff[size_t(i)][size_t(k)] = c;
            if (!qpw::is_zero(c)) {
                cand.order = std::max(cand.order, i);
                cand.degree = std::max(cand.degree, k);
            }
        }
    cand.coeff.resize(size_t(cand.order + 1));
    for (auto& row : cand.coeff) row.resize(size_t(cand.degree + 1));
    const Int& top = cand.coeff[size_t(cand.order)][size_t(cand.degree)];
    bool flip = sgn(top) < 0;
    if (qpw::is_zero(top)) {
        // sign off the graded-highest nonzero entry instead
        for (int i = cand.order; i >= 0 && !flip; --i)
            for (int k = cand.degree; k >= 0; --k)
                if (!qpw::is_zero(cand.coeff[size_t(i)][size_t(k)])) {
                    flip = sgn(cand.coeff[size_t(i)][size_t(k)]) < 0;
                    i = -1;
                    break;
                }
    }
    if (flip)
        for (auto& row : cand.coeff)
            for (auto& c : row) c = -c;
    return cand;
}

std::string int_term(const Int& c, const std::string& sym, bool first) {
    std::string sign = sgn(c) < 0 ? (first ? "-" : " - ") : (first ? "" : " + ");
    Int a = abs(c);
    if (sym.empty()) return sign + a.get_str();
    if (a == 1) return sign + sym;
    return sign + a.get_str() + "*" + sym;
}

}  // namespace

std::string AlgebraicCandidate::to_string() const {
    if (terms.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [i, j, c] : terms) {
        std::string sym;
        if (i > 0) sym = i == 1 ? "t" : "t^" + std::to_string(i);
        if (j > 0) {
            if (!sym.empty()) sym += "*";
            sym += j == 1 ? "g" : "g^" + std::to_string(j);
        }
        s += int_term(c, sym, first);
        first = false;
    }
    return s;
}

std::string OdeCandidate::to_string() const {
    std::string s;
    bool any = false;
    for (int i = 0; i <= order && i < int(coeff.size()); ++i) {
        std::string poly;
        bool first = true;
        for (int k = 0; k <= degree && k < int(coeff[size_t(i)].size()); ++k) {
            const Int& c = coeff[size_t(i)][size_t(k)];
            if (qpw::is_zero(c)) continue;
            poly += int_term(c, k == 0 ? "" : (k == 1 ? "t" : "t^" + std::to_string(k)), first);
            first = false;
        }
        if (poly.empty()) continue;
        std::string gi = i == 0 ? "g" : "g" + std::string(size_t(std::min(i, 3)), '\'');
        if (i > 3) gi = "g^(" + std::to_string(i) + ")";
        s += (any ? " + " : "") + ("(" + poly + ")*" + gi);
        any = true;
    }
    return s.empty() ? "0" : s + " = 0";
}

bool annihilates(const AlgebraicCandidate& c, const Series<Rat>& g) {
    int ord = g.order();
    if (ord < 0) throw InsufficientData("empty series");
    auto gpow = powers_of(g, c.deg_g);
    Series<Rat> acc(ord);
    for (const auto& [i, j, coeff] : c.terms) {
        if (i > ord) continue;
        acc += gpow[size_t(j)].shifted_up(i).truncated(ord).scaled(Rat(coeff));
    }
    return acc.is_zero_to_order();
}

bool annihilates(const OdeCandidate& c, const Series<Rat>& g) {
    int usable = g.order() - c.order;
    if (usable < 0) throw InsufficientData("series shorter than the equation order");
    auto gder = derivatives_of(g, c.order);
    Series<Rat> acc(usable);
    for (int i = 0; i <= c.order; ++i)
        for (int k = 0; k <= c.degree; ++k) {
            const Int& cf = c.coeff[size_t(i)][size_t(k)];
            if (qpw::is_zero(cf) || k > usable) continue;
            acc += gder[size_t(i)].shifted_up(k).truncated(usable).scaled(Rat(cf));
        }
    return acc.is_zero_to_order();
}

namespace {

// Shared pair-search driver: solve on the fit window, verify candidates on
// all data, fall back to an all-rows fit when the margin rejects everything.
template <class Verify>
std::optional<std::pair<std::vector<Rat>, bool>> solve_pair(const LinearProblem& fit_lp,
                                                            const LinearProblem& full_lp,
                                                            Engine engine, Verify verify) {
    auto pick = [&](const std::vector<std::vector<Rat>>& basis) -> std::optional<std::vector<Rat>> {
        std::optional<std::vector<Rat>> best;
        Int best_h;
        for (const auto& v : basis) {
            if (!verify(v)) continue;
            Int h = height_of(primitive_integer(v));
            if (!best || mpz_cmpabs(h.get_mpz_t(), best_h.get_mpz_t()) < 0) {
                best = v;
                best_h = h;
            }
        }
        return best;
    };
    auto basis = nullspace_rational(fit_lp, engine);
    if (basis.empty()) return std::nullopt;
    if (auto b = pick(basis)) return std::make_pair(*b, false);
    // Everything the short window suggested failed on the held-out rows; ask
    // the full system directly.
    auto full = nullspace_rational(full_lp, engine);
    if (full.empty()) return std::nullopt;
    if (auto b = pick(full)) return std::make_pair(*b, true);
    throw InsufficientData("reconstructed vectors do not annihilate the data");
}

}  // namespace

std::optional<AlgebraicCandidate> guess_algebraic(const Series<Rat>& g, int deg_g, int deg_t,
                                                  int margin, Engine engine) {
    if (deg_g < 1 || deg_t < 0) throw Error("degree bounds must satisfy deg_g >= 1, deg_t >= 0");
    int N = g.order() + 1;
    if (N < (deg_g + 1) * (deg_t + 1) + margin)
        throw InsufficientData("need at least " + std::to_string((deg_g + 1) * (deg_t + 1) + margin) +
                               " series coefficients, have " + std::to_string(N));
    auto gpow = powers_of(g, deg_g);
    auto problem = [&](int dg, int dt, int rows) {
        LinearProblem lp;
        lp.nrows = rows;
        lp.ncols = (dg + 1) * (dt + 1);
        lp.entry = [&gpow, dt](int r, int c) -> Rat {
            int j = c / (dt + 1), i = c % (dt + 1);
            return r >= i ? gpow[size_t(j)][r - i] : Rat(0);
        };
        return lp;
    };
    int fit_rows = N - margin;

    // Fast certified-none path: the full-bounds system at full column rank.
    if (engine != Engine::Exact && (deg_g + 1) * (deg_t + 1) > 64 &&
        nullspace_empty_probe(problem(deg_g, deg_t, fit_rows)))
        return std::nullopt;

    for (int dg = 1; dg <= deg_g; ++dg)
        for (int dt = 0; dt <= deg_t; ++dt) {
            auto verify = [&](const std::vector<Rat>& v) {
                return annihilates(make_alg_candidate(v, dg, dt), g);
            };
            auto got = solve_pair(problem(dg, dt, fit_rows), problem(dg, dt, N), engine, verify);
            if (!got) continue;
            AlgebraicCandidate cand = make_alg_candidate(got->first, dg, dt);
            cand.fit_order = (got->second ? N : fit_rows) - 1;
            cand.confirm_order = N - 1;
            return cand;
        }
    return std::nullopt;
}

std::optional<OdeCandidate> guess_ode(const Series<Rat>& g, int max_order, int max_deg, int margin,
                                      Engine engine) {
    if (max_order < 1 || max_deg < 0) throw Error("bounds must satisfy order >= 1, degree >= 0");
    int N = g.order() + 1;
    if (N < (max_order + 1) * (max_deg + 1) + margin + max_order)
        throw InsufficientData("need at least " +
                               std::to_string((max_order + 1) * (max_deg + 1) + margin + max_order) +
                               " series coefficients, have " + std::to_string(N));
    auto gder = derivatives_of(g, max_order);
    auto problem = [&](int r, int d, int rows) {
        LinearProblem lp;
        lp.nrows = rows;
        lp.ncols = (r + 1) * (d + 1);
        lp.entry = [&gder, d](int row, int c) -> Rat {
            int i = c / (d + 1), k = c % (d + 1);
            return row >= k ? gder[size_t(i)][row - k] : Rat(0);
        };
        return lp;
    };

    if (engine != Engine::Exact && (max_order + 1) * (max_deg + 1) > 64 &&
        nullspace_empty_probe(problem(max_order, max_deg, N - margin - max_order)))
        return std::nullopt;

    for (int r = 1; r <= max_order; ++r)
        for (int d = 0; d <= max_deg; ++d) {
            int all_rows = N - r;
            int fit_rows = all_rows - margin;
            auto verify = [&](const std::vector<Rat>& v) {
                return annihilates(make_ode_candidate(v, r, d), g);
            };
            auto got = solve_pair(problem(r, d, fit_rows), problem(r, d, all_rows), engine, verify);
            if (!got) continue;
            OdeCandidate cand = make_ode_candidate(got->first, r, d);
            cand.fit_order = (got->second ? all_rows : fit_rows) - 1;
            cand.confirm_order = all_rows - 1;
            return cand;
        }
    return std::nullopt;
}

ClassificationReport classify(int model_id, const std::vector<std::pair<Rat, Rat>>& points, int order,
                              const GuessBounds& bounds, Engine engine) {
    const Model& m = get_model(model_id);
    int N = order + 1;
    GuessBounds eff = bounds;
    while (eff.deg_g > 1 && (eff.deg_g + 1) * (eff.deg_t + 1) + eff.margin > N) {
        if (eff.deg_t > eff.deg_g)
            --eff.deg_t;
        else
            --eff.deg_g;
    }
    while (eff.deg_t > 0 && (eff.deg_g + 1) * (eff.deg_t + 1) + eff.margin > N) --eff.deg_t;
    if ((eff.deg_g + 1) * (eff.deg_t + 1) + eff.margin > N)
        throw InsufficientData("series order too small for any algebraic fit");
    while (eff.ode_order > 1 &&
           (eff.ode_order + 1) * (eff.ode_deg + 1) + eff.margin + eff.ode_order > N) {
        if (eff.ode_deg > eff.ode_order)
            --eff.ode_deg;
        else
            --eff.ode_order;
    }
    while (eff.ode_deg > 0 && (eff.ode_order + 1) * (eff.ode_deg + 1) + eff.margin + eff.ode_order > N)
        --eff.ode_deg;
    if ((eff.ode_order + 1) * (eff.ode_deg + 1) + eff.margin + eff.ode_order > N)
        throw InsufficientData("series order too small for any linear-equation fit");

    ClassificationReport rep;
    rep.model_id = model_id;
    rep.bounds = eff;
    for (const auto& [a, b] : points) {
        PointResult pr;
        pr.a = a;
        pr.b = b;
        pr.series_order = order;
        Series<Rat> g = excursion_series(m, order, a, b);
        pr.alg = guess_algebraic(g, eff.deg_g, eff.deg_t, eff.margin, engine);
        if (pr.alg) {
            pr.cls = FoundClass::Algebraic;
        } else {
            pr.ode = guess_ode(g, eff.ode_order, eff.ode_deg, eff.margin, engine);
            pr.cls = pr.ode ? FoundClass::DFinite : FoundClass::None;
        }
        rep.points.push_back(std::move(pr));
    }
    return rep;
}

}  // namespace qpw
