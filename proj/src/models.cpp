#include "qpw/models.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace qpw {

std::string step_name(const Step& s) {
    std::string n;
    if (s.dy == 1) n += "N";
    if (s.dy == -1) n += "S";
    if (s.dx == 1) n += "E";
    if (s.dx == -1) n += "W";
    if (n.empty()) throw Error("zero step has no name");
    return n;
}

Step step_from_name(const std::string& name) {
    static const std::map<std::string, Step> dirs = {
        {"N", {0, 1}},  {"S", {0, -1}},  {"E", {1, 0}},  {"W", {-1, 0}},
        {"NE", {1, 1}}, {"NW", {-1, 1}}, {"SE", {1, -1}}, {"SW", {-1, -1}},
    };
    auto it = dirs.find(name);
    if (it == dirs.end()) throw Error("not a compass step: " + name);
    return it->second;
}

std::string to_string(FuncClass c) {
    switch (c) {
        case FuncClass::DFinite: return "D-finite";
        case FuncClass::Algebraic: return "algebraic";
        case FuncClass::DAlgebraic: return "D-algebraic";
        case FuncClass::Open: return "open";
    }
    return "?";
}

std::string to_string(const Status& s) {
    if (s.cls == FuncClass::Open) return "?";
    return to_string(s.cls) + (s.proven ? " (proved)" : " (conjectured)");
}

std::string to_string(TableColumn c) {
    switch (c) {
        case TableColumn::Both1: return "(1,1)";
        case TableColumn::EqualAB: return "(a,a)";
        case TableColumn::B1: return "(a,1)";
        case TableColumn::A1: return "(1,b)";
        case TableColumn::General: return "(a,b)";
    }
    return "?";
}

bool Model::has_step(int dx, int dy) const {
    return std::find(steps.begin(), steps.end(), Step{dx, dy}) != steps.end();
}

int Model::drift_x() const {
    int d = 0;
    for (const auto& s : steps) d += s.dx;
    return d;
}

int Model::drift_y() const {
    int d = 0;
    for (const auto& s : steps) d += s.dy;
    return d;
}

LaurentPoly Model::A(int i) const {
    LaurentPoly p;
    for (const auto& s : steps)
        if (s.dy == i) p += LaurentPoly::monomial(s.dx);
    return p;
}

LaurentPoly Model::B(int i) const {
    LaurentPoly p;
    for (const auto& s : steps)
        if (s.dx == i) p += LaurentPoly::monomial(s.dy);
    return p;
}

namespace {

std::vector<Step> parse_steps(const std::string& csv) {
    std::vector<Step> out;
    std::string cur;
    for (char ch : csv) {
        if (ch == ',') {
            out.push_back(step_from_name(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (!cur.empty()) out.push_back(step_from_name(cur));
    return out;
}

LaurentPoly lp(std::initializer_list<std::pair<int, int>> monos) {
    LaurentPoly p;
    for (const auto& [e, c] : monos) p += LaurentPoly::monomial(e, Rat(c));
    return p;
}

const Status DFp{FuncClass::DFinite, true};
const Status DFc{FuncClass::DFinite, false};
const Status ALGp{FuncClass::Algebraic, true};
const Status ALGc{FuncClass::Algebraic, false};
const Status DALGp{FuncClass::DAlgebraic, true};
const Status OPEN{FuncClass::Open, false};

Model make(int id, const std::string& name, const std::string& steps, int group_order,
           std::array<Status, 5> st, LaurentPoly phi_num, LaurentPoly phi_den,
           LaurentPoly psi_num, LaurentPoly psi_den) {
    Model m;
    m.id = id;
    m.name = name;
    m.steps = parse_steps(steps);
    m.group_order = group_order;
    m.statuses = st;
    m.phi_num = std::move(phi_num);
    m.phi_den = std::move(phi_den);
    m.psi_num = std::move(psi_num);
    m.psi_den = std::move(psi_den);
    auto invariant = [&](auto f) {
        for (const auto& s : m.steps)
            if (std::find(m.steps.begin(), m.steps.end(), f(s)) == m.steps.end()) return false;
        return true;
    };
    m.sym_vertical = invariant([](Step s) { return Step{-s.dx, s.dy}; });
    m.sym_horizontal = invariant([](Step s) { return Step{s.dx, -s.dy}; });
    m.sym_main_diag = invariant([](Step s) { return Step{s.dy, s.dx}; });
    m.sym_anti_diag = invariant([](Step s) { return Step{-s.dy, -s.dx}; });
    return m;
}

std::vector<Model> build_registry() {
    const LaurentPoly one = lp({{0, 1}});
    const LaurentPoly xpxb = lp({{1, 1}, {-1, 1}});            // x + 1/x
    const LaurentPoly xp1pxb = lp({{1, 1}, {0, 1}, {-1, 1}});  // x + 1 + 1/x
    const LaurentPoly mx = lp({{1, 1}});                       // x
    const LaurentPoly mxb = lp({{-1, 1}});                     // 1/x
    const LaurentPoly mx2 = lp({{2, 1}});                      // x^2
    const LaurentPoly mxb2 = lp({{-2, 1}});                    // 1/x^2

    std::vector<Model> r;
    // Fully axis-symmetric models.
    r.push_back(make(1, "simple", "N,S,E,W", 4, {DFp, DALGp, DFp, DFp, DALGp}, one, one, one, one));
    r.push_back(make(2, "diagonal", "NE,NW,SE,SW", 4, {DFp, DFp, DFp, DFp, DFp}, one, one, one, one));
    r.push_back(make(3, "king", "N,S,E,W,NE,NW,SE,SW", 4, {DFp, DALGp, DFp, DFp, DALGp}, one, one, one, one));
    r.push_back(make(4, "", "E,W,NE,NW,SE,SW", 4, {DFp, DALGp, DFp, DFp, DALGp}, one, one, one, one));
    // Vertically symmetric models, positive vertical drift; each odd/even
    // pair differs by the presence of the E and W steps.
    r.push_back(make(5, "", "NE,NW,S", 4, {DFp, OPEN, DFp, OPEN, OPEN}, one, one, one, xpxb));
    r.push_back(make(6, "", "NE,NW,S,E,W", 4, {DFp, OPEN, DFp, OPEN, OPEN}, one, one, one, xpxb));
    r.push_back(make(7, "", "N,NE,NW,S", 4, {DFp, OPEN, DFp, OPEN, OPEN}, one, one, one, xp1pxb));
    r.push_back(make(8, "", "N,NE,NW,S,E,W", 4, {DFp, OPEN, DFp, OPEN, OPEN}, one, one, one, xp1pxb));
    r.push_back(make(9, "", "N,NE,NW,SE,SW", 4, {DFp, OPEN, DFp, OPEN, OPEN}, one, one, xpxb, xp1pxb));
    r.push_back(make(10, "", "N,NE,NW,SE,SW,E,W", 4, {DFp, OPEN, DFp, OPEN, OPEN}, one, one, xpxb, xp1pxb));
    // Vertically symmetric models, negative vertical drift.
    r.push_back(make(11, "", "N,SE,S,SW", 4, {DFp, OPEN, DFp, OPEN, OPEN}, one, one, xp1pxb, one));
    r.push_back(make(12, "", "N,SE,S,SW,E,W", 4, {DFp, OPEN, DFp, OPEN, OPEN}, one, one, xp1pxb, one));
    r.push_back(make(13, "", "NE,NW,SE,S,SW", 4, {DFp, OPEN, DFp, OPEN, OPEN}, one, one, xp1pxb, xpxb));
    r.push_back(make(14, "", "NE,NW,SE,S,SW,E,W", 4, {DFp, OPEN, DFp, OPEN, OPEN}, one, one, xp1pxb, xpxb));
    r.push_back(make(15, "", "N,SE,SW", 4, {DFp, OPEN, DFp, OPEN, OPEN}, one, one, xpxb, one));
    r.push_back(make(16, "", "N,SE,SW,E,W", 4, {DFp, OPEN, DFp, OPEN, OPEN}, one, one, xpxb, one));
    // Single anti-diagonal symmetry.
    r.push_back(make(17, "", "N,W,SE", 6, {DFp, DALGp, DFp, DFp, DALGp}, mx, one, mx, one));
    // Both diagonal symmetries.
    r.push_back(make(18, "", "N,S,E,W,NW,SE", 6, {DFp, DALGp, DFc, DFc, OPEN}, mx, one, mx, one));
    // Main-diagonal symmetry; 20 is 19 reversed.
    r.push_back(make(19, "kreweras", "W,S,NE", 6, {ALGp, ALGp, ALGc, ALGc, ALGc}, mxb, one, mxb, one));
    r.push_back(make(20, "reverse-kreweras", "E,N,SW", 6, {ALGp, ALGp, ALGc, ALGc, ALGc}, mxb, one, mxb, one));
    r.push_back(make(21, "double-kreweras", "E,W,N,S,NE,SW", 6, {ALGp, OPEN, DFc, DFc, OPEN}, mxb, one, mxb, one));
    // No single reflection symmetry; order-8 groups.
    r.push_back(make(22, "", "E,W,NW,SE", 8, {DFp, DALGp, DFp, DFp, DALGp}, mx, one, mx2, one));
    r.push_back(make(23, "gessel", "E,W,NE,SW", 8, {ALGp, OPEN, ALGc, DFc, OPEN}, mxb, one, mxb2, one));
    return r;
}

}  // namespace

const std::vector<Model>& all_models() {
    static const std::vector<Model> registry = build_registry();
    return registry;
}

const Model& get_model(int id) {
    const auto& r = all_models();
    if (id < 1 || id > int(r.size())) throw UnknownModel("id " + std::to_string(id) + " (valid: 1..23)");
    return r[size_t(id - 1)];
}

std::vector<RegistryCheck> validate_registry() {
    std::vector<RegistryCheck> out;
    const auto& r = all_models();
    auto check = [&](const std::string& what, bool ok) { out.push_back({what, ok}); };

    check("registry has 23 models with ids 1..23", [&] {
        if (r.size() != 23) return false;
        for (size_t i = 0; i < r.size(); ++i)
            if (r[i].id != int(i) + 1) return false;
        return true;
    }());

    std::set<std::set<std::pair<int, int>>> seen;
    bool steps_ok = true, distinct_ok = true;
    for (const auto& m : r) {
        std::set<std::pair<int, int>> s;
        for (const auto& st : m.steps) {
            if (st.dx < -1 || st.dx > 1 || st.dy < -1 || st.dy > 1 || (st.dx == 0 && st.dy == 0)) steps_ok = false;
            s.insert({st.dx, st.dy});
        }
        if (s.size() != m.steps.size() || m.steps.empty()) steps_ok = false;
        if (!seen.insert(s).second) distinct_ok = false;
    }
    check("all steps are nonzero small steps, no duplicates within a model", steps_ok);
    check("step sets are pairwise distinct across models", distinct_ok);

    bool drift_ok = true;
    for (const auto& m : r) {
        if (m.id <= 4 && (m.drift_x() != 0 || m.drift_y() != 0)) drift_ok = false;
        if (m.id >= 5 && m.id <= 10 && !(m.drift_x() == 0 && m.drift_y() > 0)) drift_ok = false;
        if (m.id >= 11 && m.id <= 16 && !(m.drift_x() == 0 && m.drift_y() < 0)) drift_ok = false;
    }
    check("drift matches table grouping (zero for 1-4, +y for 5-10, -y for 11-16)", drift_ok);

    bool sym_ok = true;
    for (const auto& m : r) {
        if (m.id <= 4 && !(m.sym_vertical && m.sym_horizontal)) sym_ok = false;
        if (m.id >= 5 && m.id <= 16 && !(m.sym_vertical && !m.sym_horizontal)) sym_ok = false;
        if (m.id == 17 && !(m.sym_anti_diag && !m.sym_main_diag && !m.sym_vertical && !m.sym_horizontal)) sym_ok = false;
        if (m.id == 18 && !(m.sym_anti_diag && m.sym_main_diag && !m.sym_vertical)) sym_ok = false;
        if ((m.id == 19 || m.id == 20) && !(m.sym_main_diag && !m.sym_anti_diag)) sym_ok = false;
        if (m.id == 21 && !(m.sym_main_diag && m.sym_anti_diag)) sym_ok = false;
        if (m.id >= 22 && (m.sym_vertical || m.sym_horizontal || m.sym_main_diag || m.sym_anti_diag)) sym_ok = false;
    }
    check("reflection symmetries match table grouping", sym_ok);

    bool pair_ok = true;
    for (int id = 5; id <= 15; id += 2) {
        const Model &odd = get_model(id), &even = get_model(id + 1);
        std::set<std::pair<int, int>> so, se;
        for (const auto& s : odd.steps) so.insert({s.dx, s.dy});
        for (const auto& s : even.steps) se.insert({s.dx, s.dy});
        if (so.count({1, 0}) || so.count({-1, 0})) pair_ok = false;
        so.insert({1, 0});
        so.insert({-1, 0});
        if (so != se) pair_ok = false;
    }
    check("odd/even pairs 5-16 differ exactly by the E,W steps", pair_ok);

    {
        const Model& m3 = get_model(3);
        std::set<std::pair<int, int>> s3;
        for (const auto& s : m3.steps) s3.insert({s.dx, s.dy});
        check("model 3 uses all eight steps", s3.size() == 8);
        const Model& m4 = get_model(4);
        std::set<std::pair<int, int>> s4;
        for (const auto& s : m4.steps) s4.insert({s.dx, s.dy});
        std::set<std::pair<int, int>> want = s3;
        want.erase({0, 1});
        want.erase({0, -1});
        check("model 4 is model 3 without the N,S steps", s4 == want);
    }

    {
        const Model &m19 = get_model(19), &m20 = get_model(20);
        std::set<std::pair<int, int>> rev, s20;
        for (const auto& s : m19.steps) rev.insert({-s.dx, -s.dy});
        for (const auto& s : m20.steps) s20.insert({s.dx, s.dy});
        check("model 20 is model 19 reversed", rev == s20);
        check("models 19 and 20 share a status row", m19.statuses[0].cls == m20.statuses[0].cls &&
                                                         m19.statuses[4].cls == m20.statuses[4].cls);
    }

    bool invol_ok = true;
    for (const auto& m : r) {
        // Tabulated involution formulas agree with x -> (1/x) B_{-1}/B_1 and
        // y -> (1/y) A_{-1}/A_1 after clearing denominators.
        if (m.B(1) * m.phi_num != m.B(-1) * m.phi_den) invol_ok = false;
        if (m.A(1) * m.psi_num != m.A(-1) * m.psi_den) invol_ok = false;
        if (m.phi_den.is_zero() || m.psi_den.is_zero()) invol_ok = false;
    }
    check("tabulated involutions match the step-set slices A_i, B_i", invol_ok);

    bool group_ok = true, status_ok = true;
    for (const auto& m : r) {
        int want = m.id <= 16 ? 4 : (m.id <= 21 ? 6 : 8);
        if (m.group_order != want) group_ok = false;
        for (const auto& s : m.statuses)
            if (s.cls == FuncClass::Open && s.proven) status_ok = false;
        if (!(m.statuses[0].proven && m.statuses[0].cls != FuncClass::Open)) status_ok = false;
    }
    check("declared group orders are 4 (1-16), 6 (17-21), 8 (22-23)", group_ok);
    check("status table sanity: open cells unproven, the (1,1) column settled", status_ok);

    return out;
}

bool registry_ok(const std::vector<RegistryCheck>& checks) {
    for (const auto& c : checks)
        if (!c.ok) return false;
    return true;
}

}  // namespace qpw
