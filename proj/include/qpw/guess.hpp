#pragma once
// Exact fitting of algebraic equations P(t, g) = 0 and linear ODEs
// sum_i p_i(t) g^(i)(t) = 0 to truncated rational series.
//
// Candidates are found by linear algebra on the coefficient equations and are
// only returned after an exact rational re-verification against every
// available series coefficient (fit window plus held-out margin).  A "none"
// result is backed by a full-column-rank certificate modulo a 62-bit prime,
// which implies full rank over Q.

#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "qpw/numeric.hpp"
#include "qpw/series.hpp"

namespace qpw {

// P(t, g) = sum over terms of c * t^dt * g^dg, integer coefficients,
// primitive (content 1), sign-normalized.
struct AlgebraicCandidate {
    std::vector<std::tuple<int, int, Int>> terms;  // (deg_t, deg_g, coeff), sorted
    int deg_g = 0;
    int deg_t = 0;
    int fit_order = 0;      // coefficients consumed by the linear solve
    int confirm_order = 0;  // total coefficients the candidate annihilates
    std::string to_string() const;
};

// sum_{i<=order} sum_{d<=degree} coeff[i][d] t^d g^(i)(t) = 0.
struct OdeCandidate {
    int order = 0;
    int degree = 0;
    std::vector<std::vector<Int>> coeff;  // coeff[i][d]
    int fit_order = 0;
    int confirm_order = 0;
    std::string to_string() const;
};

struct GuessBounds {
    int deg_g = 12;
    int deg_t = 16;
    int ode_order = 8;
    int ode_deg = 12;
    int margin = 15;
};

enum class Engine { Auto, Exact, Modular };

// Exact residual checks over Q on all coefficients of g.
bool annihilates(const AlgebraicCandidate& c, const Series<Rat>& g);
bool annihilates(const OdeCandidate& c, const Series<Rat>& g);

// Lex-minimal (deg_g, deg_t) confirmed candidate, or nullopt when the full
// (deg_g, deg_t) system has only the trivial solution.  Throws
// InsufficientData when the series is too short for fit plus margin, or when
// a modular nullspace exists but cannot be reconstructed over Q.
std::optional<AlgebraicCandidate> guess_algebraic(const Series<Rat>& g, int deg_g, int deg_t,
                                                  int margin = 15, Engine engine = Engine::Auto);

// Minimal (order, degree) confirmed ODE with the same conventions.
std::optional<OdeCandidate> guess_ode(const Series<Rat>& g, int max_order, int max_deg,
                                      int margin = 15, Engine engine = Engine::Auto);

enum class FoundClass { Algebraic, DFinite, None };

struct PointResult {
    Rat a, b;
    int series_order = 0;
    FoundClass cls = FoundClass::None;
    std::optional<AlgebraicCandidate> alg;  // set when cls == Algebraic
    std::optional<OdeCandidate> ode;        // set when an ODE was found
};

struct ClassificationReport {
    int model_id = 0;
    GuessBounds bounds;
    std::vector<PointResult> points;
};

// Enumerates the model at each rational point to the given order, then runs
// the algebraic search followed by the ODE search with the stated bounds.
ClassificationReport classify(int model_id, const std::vector<std::pair<Rat, Rat>>& points,
                              int order, const GuessBounds& bounds = {},
                              Engine engine = Engine::Auto);

}  // namespace qpw
