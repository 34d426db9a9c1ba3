#include "qpw/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace qpw::io {

namespace {

using nlohmann::json;

std::string dump(const json& j, bool pretty) { return pretty ? j.dump(2) + "\n" : j.dump(); }

json parse_with_schema(const std::string& text, const char* schema) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw Error(std::string("malformed JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("schema") || !j["schema"].is_string())
        throw Error("document lacks a schema field");
    if (j["schema"].get<std::string>() != schema)
        throw Error("unsupported schema: " + j["schema"].get<std::string>() + " (expected " +
                    schema + ")");
    return j;
}

json rational_series_json(const Series<Rat>& g) {
    json arr = json::array();
    for (int n = 0; n <= g.order(); ++n) arr.push_back(qpw::to_string(g[n]));
    return arr;
}

Series<Rat> rational_series_from(const json& arr) {
    if (!arr.is_array() || arr.empty()) throw Error("series coefficients must be a nonempty array");
    Series<Rat> g(int(arr.size()) - 1);
    for (int n = 0; n < int(arr.size()); ++n) g.at(n) = rat_from_string(arr[size_t(n)].get<std::string>());
    return g;
}

json alg_json(const AlgebraicCandidate& c) {
    json terms = json::array();
    for (const auto& [i, j, coeff] : c.terms) terms.push_back(json::array({i, j, coeff.get_str()}));
    return json{{"deg_g", c.deg_g},
                {"deg_t", c.deg_t},
                {"fit_order", c.fit_order},
                {"confirm_order", c.confirm_order},
                {"equation", c.to_string()},
                {"terms", terms}};
}

AlgebraicCandidate alg_from(const json& j) {
    AlgebraicCandidate c;
    c.deg_g = j.at("deg_g").get<int>();
    c.deg_t = j.at("deg_t").get<int>();
    c.fit_order = j.at("fit_order").get<int>();
    c.confirm_order = j.at("confirm_order").get<int>();
    for (const auto& t : j.at("terms"))
        c.terms.emplace_back(t.at(0).get<int>(), t.at(1).get<int>(), Int(t.at(2).get<std::string>()));
    return c;
}

json ode_json(const OdeCandidate& c) {
    json rows = json::array();
    for (const auto& row : c.coeff) {
        json r = json::array();
        for (const auto& x : row) r.push_back(x.get_str());
        rows.push_back(r);
    }
    return json{{"order", c.order},
                {"degree", c.degree},
                {"fit_order", c.fit_order},
                {"confirm_order", c.confirm_order},
                {"equation", c.to_string()},
                {"coefficients", rows}};
}

OdeCandidate ode_from(const json& j) {
    OdeCandidate c;
    c.order = j.at("order").get<int>();
    c.degree = j.at("degree").get<int>();
    c.fit_order = j.at("fit_order").get<int>();
    c.confirm_order = j.at("confirm_order").get<int>();
    for (const auto& row : j.at("coefficients")) {
        std::vector<Int> r;
        for (const auto& x : row) r.emplace_back(x.get<std::string>());
        c.coeff.push_back(std::move(r));
    }
    return c;
}

const char* class_name(FoundClass c) {
    switch (c) {
        case FoundClass::Algebraic: return "algebraic";
        case FoundClass::DFinite: return "d-finite";
        case FoundClass::None: return "none";
    }
    return "none";
}

std::string csv_quote(const std::string& s) {
    std::string out = "\"";
    for (char ch : s) {
        out += ch;
        if (ch == '"') out += '"';
    }
    return out + "\"";
}

}  // namespace

std::string to_json(const SeriesDoc& doc, bool pretty) {
    json j{{"schema", kSeriesSchema},
           {"model", doc.model_id},
           {"a", qpw::to_string(doc.a)},
           {"b", qpw::to_string(doc.b)},
           {"order", doc.g.order()},
           {"coefficients", rational_series_json(doc.g)}};
    return dump(j, pretty);
}

SeriesDoc series_from_json(const std::string& text) {
    json j = parse_with_schema(text, kSeriesSchema);
    SeriesDoc doc;
    doc.model_id = j.at("model").get<int>();
    doc.a = rat_from_string(j.at("a").get<std::string>());
    doc.b = rat_from_string(j.at("b").get<std::string>());
    doc.g = rational_series_from(j.at("coefficients"));
    if (j.at("order").get<int>() != doc.g.order()) throw Error("order field disagrees with coefficient count");
    return doc;
}

std::string to_json(const SymbolicSeriesDoc& doc, bool pretty) {
    json coeffs = json::array();
    for (int n = 0; n <= doc.g.order(); ++n) {
        json terms = json::array();
        for (const auto& [key, c] : doc.g[n].terms())
            terms.push_back(json{{"a", key.first}, {"b", key.second}, {"c", c.get_str()}});
        coeffs.push_back(terms);
    }
    json j{{"schema", kSymbolicSeriesSchema},
           {"model", doc.model_id},
           {"order", doc.g.order()},
           {"coefficients", coeffs}};
    return dump(j, pretty);
}

SymbolicSeriesDoc symbolic_series_from_json(const std::string& text) {
    json j = parse_with_schema(text, kSymbolicSeriesSchema);
    SymbolicSeriesDoc doc;
    doc.model_id = j.at("model").get<int>();
    const json& coeffs = j.at("coefficients");
    if (!coeffs.is_array() || coeffs.empty()) throw Error("series coefficients must be a nonempty array");
    doc.g = Series<WeightPoly>(int(coeffs.size()) - 1);
    for (int n = 0; n < int(coeffs.size()); ++n) {
        WeightPoly p;
        for (const auto& t : coeffs[size_t(n)])
            p += WeightPoly::monomial(t.at("a").get<int>(), t.at("b").get<int>(),
                                      Int(t.at("c").get<std::string>()));
        doc.g.at(n) = p;
    }
    if (j.at("order").get<int>() != doc.g.order()) throw Error("order field disagrees with coefficient count");
    return doc;
}

std::string to_json(const GroupResult& group, int model_id, bool pretty) {
    json elems = json::array();
    for (const auto& e : group.elements) elems.push_back(e.to_string());
    json j{{"schema", kGroupSchema}, {"model", model_id}, {"order", group.order()}, {"elements", elems}};
    return dump(j, pretty);
}

std::string to_json(const FeCheckResult& r, bool pretty) {
    json j{{"schema", kFeCheckSchema},
           {"model", r.model_id},
           {"order", r.order},
           {"ok", r.ok},
           {"failures", r.failures}};
    return dump(j, pretty);
}

std::string to_json(const std::vector<VerifyRecord>& records, bool pretty) {
    json arr = json::array();
    for (const auto& r : records)
        arr.push_back(json{{"model", r.model_id},
                           {"route", r.route},
                           {"a", qpw::to_string(r.a)},
                           {"b", qpw::to_string(r.b)},
                           {"order", r.order},
                           {"ok", r.ok},
                           {"first_mismatch", r.first_mismatch}});
    json j{{"schema", kVerifySchema}, {"records", arr}};
    return dump(j, pretty);
}

std::string to_json(const GuessDoc& doc, bool pretty) {
    json j{{"schema", kGuessSchema},
           {"model", doc.model_id},
           {"a", qpw::to_string(doc.a)},
           {"b", qpw::to_string(doc.b)},
           {"order", doc.order},
           {"algebraic", doc.alg ? alg_json(*doc.alg) : json(nullptr)},
           {"ode", doc.ode ? ode_json(*doc.ode) : json(nullptr)}};
    return dump(j, pretty);
}

GuessDoc guess_from_json(const std::string& text) {
    json j = parse_with_schema(text, kGuessSchema);
    GuessDoc doc;
    doc.model_id = j.at("model").get<int>();
    doc.a = rat_from_string(j.at("a").get<std::string>());
    doc.b = rat_from_string(j.at("b").get<std::string>());
    doc.order = j.at("order").get<int>();
    if (!j.at("algebraic").is_null()) doc.alg = alg_from(j.at("algebraic"));
    if (!j.at("ode").is_null()) doc.ode = ode_from(j.at("ode"));
    return doc;
}

std::string to_json(const ClassificationReport& report, bool pretty) {
    json pts = json::array();
    for (const auto& p : report.points)
        pts.push_back(json{{"a", qpw::to_string(p.a)},
                           {"b", qpw::to_string(p.b)},
                           {"order", p.series_order},
                           {"class", class_name(p.cls)},
                           {"algebraic", p.alg ? alg_json(*p.alg) : json(nullptr)},
                           {"ode", p.ode ? ode_json(*p.ode) : json(nullptr)}});
    json j{{"schema", kTablesSchema},
           {"model", report.model_id},
           {"bounds",
            json{{"deg_g", report.bounds.deg_g},
                 {"deg_t", report.bounds.deg_t},
                 {"ode_order", report.bounds.ode_order},
                 {"ode_deg", report.bounds.ode_deg},
                 {"margin", report.bounds.margin}}},
           {"points", pts}};
    return dump(j, pretty);
}

std::string classification_to_csv(const ClassificationReport& report) {
    std::ostringstream os;
    os << "model,a,b,order,class,equation\n";
    for (const auto& p : report.points) {
        std::string eq;
        if (p.alg)
            eq = p.alg->to_string();
        else if (p.ode)
            eq = p.ode->to_string();
        os << report.model_id << ',' << qpw::to_string(p.a) << ',' << qpw::to_string(p.b) << ','
           << p.series_order << ',' << class_name(p.cls) << ',' << csv_quote(eq) << '\n';
    }
    return os.str();
}

namespace {

std::string found_text(const PointResult& p) {
    if (p.cls == FoundClass::Algebraic)
        return "algebraic equation (deg_g " + std::to_string(p.alg->deg_g) + ", deg_t " +
               std::to_string(p.alg->deg_t) + ")";
    if (p.cls == FoundClass::DFinite)
        return "linear ODE (order " + std::to_string(p.ode->order) + ", degree " +
               std::to_string(p.ode->degree) + ")";
    return "none within bounds";
}

// Judgement of a falsifiable recorded status against the search outcome.
bool cell_agrees(const Status& st, const PointResult& p) {
    if (st.cls == FuncClass::Algebraic) return p.cls == FoundClass::Algebraic;
    if (st.cls == FuncClass::DFinite)
        return p.cls == FoundClass::Algebraic || p.cls == FoundClass::DFinite;
    return true;
}

bool cell_checkable(const Status& st) {
    return st.cls == FuncClass::Algebraic || st.cls == FuncClass::DFinite;
}

}  // namespace

std::string tables_text(const std::vector<ClassificationReport>& reports) {
    std::ostringstream os;
    for (const auto& rep : reports) {
        const Model& m = get_model(rep.model_id);
        os << "model " << m.id;
        if (!m.name.empty()) os << " (" << m.name << ")";
        os << ": group order " << m.group_order << "\n";
        for (size_t c = 0; c < rep.points.size() && c < 5; ++c) {
            const Status st = m.status(TableColumn(int(c)));
            const PointResult& p = rep.points[c];
            os << "  " << qpw::to_string(TableColumn(int(c))) << " at (" << qpw::to_string(p.a)
               << ", " << qpw::to_string(p.b) << "): recorded " << qpw::to_string(st) << "; ";
            if (!cell_checkable(st))
                os << "conjecture — not checkable (search: " << found_text(p) << ")";
            else
                os << "found " << found_text(p) << "; "
                   << (cell_agrees(st, p) ? "agrees" : "no confirmation within bounds");
            os << "\n";
        }
    }
    return os.str();
}

std::string tables_csv(const std::vector<ClassificationReport>& reports) {
    std::ostringstream os;
    os << "model,group_order,column,a,b,recorded,found,note\n";
    for (const auto& rep : reports) {
        const Model& m = get_model(rep.model_id);
        for (size_t c = 0; c < rep.points.size() && c < 5; ++c) {
            const Status st = m.status(TableColumn(int(c)));
            const PointResult& p = rep.points[c];
            std::string note = !cell_checkable(st)
                                   ? "conjecture — not checkable"
                                   : (cell_agrees(st, p) ? "agrees" : "no confirmation within bounds");
            os << m.id << ',' << m.group_order << ',' << csv_quote(qpw::to_string(TableColumn(int(c))))
               << ',' << qpw::to_string(p.a) << ',' << qpw::to_string(p.b) << ','
               << csv_quote(qpw::to_string(st)) << ',' << csv_quote(found_text(p)) << ','
               << csv_quote(note) << '\n';
        }
    }
    return os.str();
}

std::string series_to_plain(const Series<Rat>& g) { return g.to_string(); }
std::string series_to_plain(const Series<WeightPoly>& g) { return g.to_string(); }

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error("cannot open for writing: " + path);
    f << text;
    if (!f) throw Error("write failed: " + path);
}

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw Error("cannot open for reading: " + path);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

}  // namespace qpw::io
