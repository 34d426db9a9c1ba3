#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qpw/hensel.hpp"
#include "qpw/models.hpp"
#include "qpw/series.hpp"

namespace qpw {

// Exact evaluation, as truncated t-series at rational boundary weights, of
// every closed-form expression for the excursion series G(t; a, b).  Each
// route is an independent reconstruction pipeline (kernel roots, algebraic
// discriminants, constant-term extraction) whose output is meant to be
// compared against the direct enumeration.

// Power-series root Y(x; t) of the kernel 1 - t*S(x,y) in y, with Laurent
// polynomial coefficients in x: the unique root with Y = O(t).  Coefficient
// spans are asserted to stay within span_cap(n) = 2n + 4.
Series<LaurentPoly> kernel_root_y(const Model& m, int order);
// Same for the x-root, by symmetry.
Series<LaurentPoly> kernel_root_x(const Model& m, int order);

// Model 1: direct solution via a half-orbit sum.  Defined for b != 1 and
// a != 1 (singular prefactors otherwise).
Series<Rat> model1_g_direct(int order, const Rat& a, const Rat& b);

// Model 1: solution via the two boundary-corner constant terms P(0,0) and
// R(0,0); handles a = 1 or b = 1 (where it degenerates gracefully).
Series<Rat> model1_g_via_pr(int order, const Rat& a, const Rat& b);

// Model 2: Hadamard-type product of two boundary-interacting Dyck factors,
//   G(t; a, b) = sum_n t^(2n) [s^(2n)]f(s;a) * [s^(2n)]f(s;b),
//   f(s;c) = 2 / (2 - c + c*sqrt(1 - 4 s^2)).
Series<Rat> model2_g_hadamard(int order, const Rat& a, const Rat& b);

// The Dyck factor f itself (exposed for its own checks).
Series<Rat> model2_dyck_factor(int order, const Rat& c);

// Model 2: independent constant-term route; b = 1 is rejected as singular.
Series<Rat> model2_g_ct(int order, const Rat& a, const Rat& b);

// Any vertically symmetric model (ids 1..16) at b = 1:
//   G(t; a, 1) = [x^0]{ Y(x) (1 - x^-2) / (a t A_{-1}(x) + (1-a) Y(x)) }.
Series<Rat> symmetric_b1_g(const Model& m, int order, const Rat& a);

// Model 17 at a = 1 (constant-term route with a t^-1 cancellation check).
Series<Rat> model17_g_a1(int order, const Rat& b);

// Model 19 (Kreweras) at a = b: the full algebraic pipeline through the
// factored kernel discriminant Delta = Delta0 * Deltap * Deltam.
Series<Rat> model19_g_aa(int order, const Rat& a);

// Intermediate objects of the Kreweras pipeline, exposed for verification.
struct KrewerasParts {
    Rat a;
    CubicFactorization fac;      // of x^2 * Delta(x; t)
    Series<Rat> delta0;          // Delta0 = 4 t^2 delta_1
    Series<Rat> sqrt_delta0;     // power-series square root
    Series<Rat> xi_minus;        // power-series root of the xi quadratic: a t + O(t^4)
    Series<Rat> sqrt_deltap_xi;  // sqrt(1 - xi_minus / delta_1)
};
KrewerasParts kreweras_parts(int order, const Rat& a);

// Mid-derivation identity checks for the Kreweras pipeline at weight a:
//   (1) [y^0]{1/K} = 1/sqrt(Delta) as series in t with Laurent coefficients,
//   (2) the single-root boundary identity linking Q_d, L(x) = Q(x,0) and
//       G = L(0) through C2/sqrt(Delta),
//   (3) the specialized relation at x = xi_minus whose remainder must vanish.
// All three use only enumerator-derived boundary data.  Throws
// IdentityViolation on the first failure.
void model19_midchecks(int order, const Rat& a);

// Corner recurrence for Model 1 against enumerator data:
//   Q(0,0) = 1 + t*a*b*[x^1]{Q(x,0)} + t*a*b*[y^1]{Q(0,y)}.
bool model1_corner_relation(int order, const Rat& a, const Rat& b);

// One closed-form route compared against the specialized enumerator.
struct VerifyRecord {
    int model_id = 0;
    std::string route;
    Rat a, b;
    int order = 0;
    bool ok = false;
    int first_mismatch = -1;  // -1 when ok
};

// Runs every route applicable to (model, a, b) and reports each outcome.
// Routes whose preconditions exclude the point are skipped, not failed.
std::vector<VerifyRecord> verify_closed_forms(int model_id, const Rat& a, const Rat& b,
                                              int order);

}  // namespace qpw
