#pragma once

#include <string>
#include <vector>

#include "qpw/walks.hpp"

namespace qpw {

struct FeCheckResult {
    int model_id = 0;
    int order = -1;
    bool ok = false;
    // Human-readable description of each failed identity/order pair.
    std::vector<std::string> failures;
};

// Verifies, coefficient-by-coefficient in t and with fully symbolic (a, b)
// weights, that the enumeration data satisfies:
//   (1) the master functional equation
//         ab*x*y*K(x,y)*Q = x*y + x(b(a-1)y - ab*t*A_{-1}(x))*Q(x,0)
//                          + y(a(b-1)x - ab*t*B_{-1}(y))*Q(0,y)
//                          - (x*y*(1-a)(1-b) - ab*t*eps)*Q(0,0),
//   (2) the x-axis boundary relation,
//   (3) the y-axis boundary relation,
//   (4) the corner relation
// for every t-order up to the table's order.
FeCheckResult check_functional_equations(const SymbolicWalkTable& table);

}  // namespace qpw
