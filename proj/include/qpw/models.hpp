#pragma once

#include <array>
#include <string>
#include <vector>

#include "qpw/laurent_poly.hpp"

namespace qpw {

struct Step {
    int dx, dy;
    bool operator==(const Step& o) const { return dx == o.dx && dy == o.dy; }
    bool operator<(const Step& o) const { return dx != o.dx ? dx < o.dx : dy < o.dy; }
};

// Compass name for a small step ("N", "SE", ...).
std::string step_name(const Step& s);
Step step_from_name(const std::string& name);  // throws Error on bad name

enum class FuncClass { DFinite, Algebraic, DAlgebraic, Open };

// One cell of the classification table: the asserted nature of the
// generating function and whether the source proves it (true) or only
// conjectures it from guessed equations (false).  Open cells are never
// proven.
struct Status {
    FuncClass cls = FuncClass::Open;
    bool proven = false;
};

std::string to_string(FuncClass c);
std::string to_string(const Status& s);

// The five specializations tabulated per model, in display order.
enum class TableColumn { Both1 = 0, EqualAB = 1, B1 = 2, A1 = 3, General = 4 };
std::string to_string(TableColumn c);

struct Model {
    int id = 0;
    std::string name;  // conventional name, empty if the model has none
    std::vector<Step> steps;
    int group_order = 0;                 // order of the kernel symmetry group
    std::array<Status, 5> statuses{};    // indexed by TableColumn
    bool sym_vertical = false;           // step set invariant under dx -> -dx
    bool sym_horizontal = false;         // dy -> -dy
    bool sym_main_diag = false;          // (dx,dy) -> (dy,dx)
    bool sym_anti_diag = false;          // (dx,dy) -> (-dy,-dx)

    // Tabulated involution formulas in lowest terms: the first generator is
    // (x^-1 * phi_num(y)/phi_den(y), y), the second (x, y^-1 * psi_num(x)/psi_den(x)).
    LaurentPoly phi_num, phi_den;  // Laurent polynomials in y
    LaurentPoly psi_num, psi_den;  // Laurent polynomials in x

    bool has_step(int dx, int dy) const;
    int drift_x() const;
    int drift_y() const;

    // Step-set slices: A_i(x) = sum over steps with dy = i of x^dx, and
    // B_i(y) = sum over steps with dx = i of y^dy.
    LaurentPoly A(int i) const;
    LaurentPoly B(int i) const;

    // Step polynomial S(x, y) evaluated with y fixed to a rational; the
    // result is a Laurent polynomial in x.  (Used for kernel construction.)
    Status status(TableColumn c) const { return statuses[size_t(c)]; }
};

const std::vector<Model>& all_models();
const Model& get_model(int id);  // ids 1..23; throws UnknownModel

struct RegistryCheck {
    std::string what;
    bool ok;
};

// Structural cross-checks of the hard-coded registry: step validity and
// distinctness, symmetry flags recomputed from step sets, drift-sign grouping,
// pair structure (even member of each horizontally-symmetric pair = odd
// member plus {E, W}), involution formulas consistent with the A/B slices up
// to rational-function simplification, and status-table sanity.
std::vector<RegistryCheck> validate_registry();
bool registry_ok(const std::vector<RegistryCheck>& checks);

}  // namespace qpw
