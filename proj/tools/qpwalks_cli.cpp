#include <CLI11.hpp>

#include <future>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "qpw/closed_forms.hpp"
#include "qpw/fe_check.hpp"
#include "qpw/guess.hpp"
#include "qpw/io.hpp"
#include "qpw/kernel_group.hpp"
#include "qpw/models.hpp"
#include "qpw/walks.hpp"

namespace {

using namespace qpw;

// Usage problems (bad ids, malformed rationals, contradictory flags) exit 2;
// mathematical mismatches and computation failures exit 1.
struct UsageFailure : Error {
    explicit UsageFailure(const std::string& m) : Error(m) {}
};

std::vector<int> resolve_models(int model, bool all) {
    if (all && model > 0) throw UsageFailure("--model and --all are mutually exclusive");
    if (all) {
        std::vector<int> ids;
        for (const auto& m : all_models()) ids.push_back(m.id);
        return ids;
    }
    if (model <= 0) throw UsageFailure("pass --model ID or --all");
    try {
        get_model(model);
    } catch (const UnknownModel& e) {
        throw UsageFailure(e.what());
    }
    return {model};
}

Rat parse_rat(const std::string& text, const char* flag) {
    try {
        return rat_from_string(text);
    } catch (const Error& e) {
        throw UsageFailure(std::string(flag) + ": " + e.what());
    }
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty())
        std::cout << text;
    else
        io::write_file(out_path, text);
}

// Multi-model fan-out; results are collected (and any worker error rethrown)
// in model order.
template <class F>
auto fan_out(const std::vector<int>& ids, F work) {
    using Out = decltype(work(ids.front()));
    std::vector<std::future<Out>> futs;
    futs.reserve(ids.size());
    for (int id : ids) futs.push_back(std::async(std::launch::async, work, id));
    std::vector<Out> results;
    results.reserve(ids.size());
    for (auto& f : futs) results.push_back(f.get());
    return results;
}

std::string join_json_array(const std::vector<std::string>& docs) {
    std::string s = "[\n";
    for (size_t i = 0; i < docs.size(); ++i) {
        std::string d = docs[i];
        while (!d.empty() && d.back() == '\n') d.pop_back();
        s += d;
        if (i + 1 < docs.size()) s += ",";
        s += "\n";
    }
    return s + "]\n";
}

struct CommonOpts {
    int model = 0;
    bool all = false;
    std::string a = "1", b = "1";
    int order = 10;
    std::string format = "plain";
    std::string out;
};

int cmd_enumerate(const CommonOpts& o, bool symbolic, bool have_point) {
    std::vector<int> ids = resolve_models(o.model, false);
    const Model& m = get_model(ids.front());
    if (o.order < 0) throw UsageFailure("--order must be >= 0");
    if (symbolic && have_point) throw UsageFailure("--symbolic excludes --a/--b");

    if (symbolic || !have_point) {
        io::SymbolicSeriesDoc doc;
        doc.model_id = m.id;
        doc.g = boundary_views(enumerate_walks(m, o.order)).g;
        if (o.format == "json") {
            emit(io::to_json(doc), o.out);
        } else if (o.format == "csv") {
            std::ostringstream os;
            os << "n,deg_a,deg_b,coefficient\n";
            for (int n = 0; n <= o.order; ++n)
                for (const auto& [k, c] : doc.g[n].terms())
                    os << n << ',' << k.first << ',' << k.second << ',' << c.get_str() << '\n';
            emit(os.str(), o.out);
        } else {
            std::ostringstream os;
            for (int n = 0; n <= o.order; ++n) os << "t^" << n << ": " << doc.g[n].to_string() << '\n';
            emit(os.str(), o.out);
        }
        return 0;
    }

    io::SeriesDoc doc;
    doc.model_id = m.id;
    doc.a = parse_rat(o.a, "--a");
    doc.b = parse_rat(o.b, "--b");
    doc.g = excursion_series(m, o.order, doc.a, doc.b);
    if (o.format == "json") {
        emit(io::to_json(doc), o.out);
    } else if (o.format == "csv") {
        std::ostringstream os;
        os << "n,coefficient\n";
        for (int n = 0; n <= o.order; ++n) os << n << ',' << qpw::to_string(doc.g[n]) << '\n';
        emit(os.str(), o.out);
    } else {
        std::ostringstream os;
        for (int n = 0; n <= o.order; ++n) os << "t^" << n << ": " << qpw::to_string(doc.g[n]) << '\n';
        emit(os.str(), o.out);
    }
    return 0;
}

int cmd_verify(const CommonOpts& o) {
    std::vector<int> ids = resolve_models(o.model, o.all);
    Rat a = parse_rat(o.a, "--a"), b = parse_rat(o.b, "--b");
    if (o.order < 0) throw UsageFailure("--order must be >= 0");
    int fe_order = std::min(o.order, 12);

    auto work = [&](int id) {
        std::vector<VerifyRecord> recs = verify_closed_forms(id, a, b, o.order);
        FeCheckResult fe = check_functional_equations(enumerate_walks(get_model(id), fe_order));
        VerifyRecord fe_rec{id, "functional-equations", a, b, fe_order, fe.ok, -1};
        recs.push_back(fe_rec);
        return recs;
    };
    auto per_model = fan_out(ids, work);

    std::vector<VerifyRecord> all_recs;
    for (auto& recs : per_model) all_recs.insert(all_recs.end(), recs.begin(), recs.end());
    bool ok = true;
    for (const auto& r : all_recs) ok = ok && r.ok;

    if (o.format == "json") {
        emit(io::to_json(all_recs), o.out);
    } else if (o.format == "csv") {
        std::ostringstream os;
        os << "model,route,a,b,order,ok,first_mismatch\n";
        for (const auto& r : all_recs)
            os << r.model_id << ',' << r.route << ',' << qpw::to_string(r.a) << ','
               << qpw::to_string(r.b) << ',' << r.order << ',' << (r.ok ? 1 : 0) << ','
               << r.first_mismatch << '\n';
        emit(os.str(), o.out);
    } else {
        std::ostringstream os;
        for (const auto& r : all_recs) {
            os << "model " << r.model_id << " [" << r.route << "] a=" << qpw::to_string(r.a)
               << " b=" << qpw::to_string(r.b) << " order " << r.order << ": "
               << (r.ok ? "pass" : "FAIL");
            if (!r.ok && r.first_mismatch >= 0) os << " (first mismatch at t^" << r.first_mismatch << ")";
            os << '\n';
        }
        emit(os.str(), o.out);
    }
    return ok ? 0 : 1;
}

int cmd_group(const CommonOpts& o) {
    std::vector<int> ids = resolve_models(o.model, o.all);
    struct Out {
        int id;
        GroupResult gr;
        int expected;
    };
    auto per_model = fan_out(ids, [&](int id) {
        const Model& m = get_model(id);
        return Out{id, group_closure(m), m.group_order};
    });
    bool ok = true;
    for (const auto& r : per_model) ok = ok && r.gr.order() == r.expected;

    if (o.format == "json") {
        std::vector<std::string> docs;
        for (const auto& r : per_model) docs.push_back(io::to_json(r.gr, r.id));
        emit(ids.size() == 1 ? docs.front() : join_json_array(docs), o.out);
    } else if (o.format == "csv") {
        std::ostringstream os;
        os << "model,order,expected,ok\n";
        for (const auto& r : per_model)
            os << r.id << ',' << r.gr.order() << ',' << r.expected << ','
               << (r.gr.order() == r.expected ? 1 : 0) << '\n';
        emit(os.str(), o.out);
    } else {
        std::ostringstream os;
        for (const auto& r : per_model) {
            os << "model " << r.id << ": group order " << r.gr.order() << " (recorded "
               << r.expected << "): " << (r.gr.order() == r.expected ? "pass" : "FAIL") << '\n';
            for (const auto& e : r.gr.elements) os << "  " << e.to_string() << '\n';
        }
        emit(os.str(), o.out);
    }
    return ok ? 0 : 1;
}

int cmd_fe_check(const CommonOpts& o) {
    std::vector<int> ids = resolve_models(o.model, o.all);
    if (o.order < 0) throw UsageFailure("--order must be >= 0");
    auto per_model = fan_out(ids, [&](int id) {
        return check_functional_equations(enumerate_walks(get_model(id), o.order));
    });
    bool ok = true;
    for (const auto& r : per_model) ok = ok && r.ok;

    if (o.format == "json") {
        std::vector<std::string> docs;
        for (const auto& r : per_model) docs.push_back(io::to_json(r));
        emit(ids.size() == 1 ? docs.front() : join_json_array(docs), o.out);
    } else if (o.format == "csv") {
        std::ostringstream os;
        os << "model,order,ok\n";
        for (const auto& r : per_model) os << r.model_id << ',' << r.order << ',' << (r.ok ? 1 : 0) << '\n';
        emit(os.str(), o.out);
    } else {
        std::ostringstream os;
        for (const auto& r : per_model) {
            os << "model " << r.model_id << " order " << r.order << ": " << (r.ok ? "pass" : "FAIL") << '\n';
            for (const auto& f : r.failures) os << "  " << f << '\n';
        }
        emit(os.str(), o.out);
    }
    return ok ? 0 : 1;
}

// Largest bounds not exceeding the requested ones that the series length can
// support (fit window plus verification margin).
GuessBounds capacity_bounds(GuessBounds req, int coeff_count, bool warn) {
    GuessBounds eff = req;
    while (eff.deg_g > 1 && (eff.deg_g + 1) * (eff.deg_t + 1) + eff.margin > coeff_count) {
        if (eff.deg_t > eff.deg_g)
            --eff.deg_t;
        else
            --eff.deg_g;
    }
    while (eff.deg_t > 0 && (eff.deg_g + 1) * (eff.deg_t + 1) + eff.margin > coeff_count) --eff.deg_t;
    while (eff.ode_order > 1 &&
           (eff.ode_order + 1) * (eff.ode_deg + 1) + eff.margin + eff.ode_order > coeff_count) {
        if (eff.ode_deg > eff.ode_order)
            --eff.ode_deg;
        else
            --eff.ode_order;
    }
    while (eff.ode_deg > 0 &&
           (eff.ode_order + 1) * (eff.ode_deg + 1) + eff.margin + eff.ode_order > coeff_count)
        --eff.ode_deg;
    if (warn && (eff.deg_g != req.deg_g || eff.deg_t != req.deg_t || eff.ode_order != req.ode_order ||
                 eff.ode_deg != req.ode_deg))
        std::cerr << "note: series order supports bounds deg_g " << eff.deg_g << ", deg_t "
                  << eff.deg_t << ", ode order " << eff.ode_order << ", ode degree " << eff.ode_deg
                  << " (requested " << req.deg_g << "/" << req.deg_t << "/" << req.ode_order << "/"
                  << req.ode_deg << "); raise --order for the full search\n";
    return eff;
}

int cmd_guess(const CommonOpts& o, const GuessBounds& req) {
    std::vector<int> ids = resolve_models(o.model, false);
    Rat a = parse_rat(o.a, "--a"), b = parse_rat(o.b, "--b");
    if (o.order < 1) throw UsageFailure("--order must be >= 1");
    GuessBounds eff = capacity_bounds(req, o.order + 1, true);

    io::GuessDoc doc;
    doc.model_id = ids.front();
    doc.a = a;
    doc.b = b;
    doc.order = o.order;
    Series<Rat> g = excursion_series(get_model(doc.model_id), o.order, a, b);
    doc.alg = guess_algebraic(g, eff.deg_g, eff.deg_t, eff.margin);
    doc.ode = guess_ode(g, eff.ode_order, eff.ode_deg, eff.margin);

    if (o.format == "json") {
        emit(io::to_json(doc), o.out);
    } else if (o.format == "csv") {
        std::ostringstream os;
        os << "kind,found,equation\n";
        os << "algebraic," << (doc.alg ? 1 : 0) << ",\"" << (doc.alg ? doc.alg->to_string() : "")
           << "\"\n";
        os << "ode," << (doc.ode ? 1 : 0) << ",\"" << (doc.ode ? doc.ode->to_string() : "") << "\"\n";
        emit(os.str(), o.out);
    } else {
        std::ostringstream os;
        os << "model " << doc.model_id << " at (" << qpw::to_string(a) << ", " << qpw::to_string(b)
           << "), order " << o.order << ":\n";
        if (doc.alg)
            os << "  algebraic: " << doc.alg->to_string() << "  [fit to t^" << doc.alg->fit_order
               << ", confirmed to t^" << doc.alg->confirm_order << "]\n";
        else
            os << "  algebraic: none within deg_g " << eff.deg_g << ", deg_t " << eff.deg_t << "\n";
        if (doc.ode)
            os << "  linear ODE: " << doc.ode->to_string() << "  [fit to t^" << doc.ode->fit_order
               << ", confirmed to t^" << doc.ode->confirm_order << "]\n";
        else
            os << "  linear ODE: none within order " << eff.ode_order << ", degree " << eff.ode_deg
               << "\n";
        emit(os.str(), o.out);
    }
    return 0;
}

int cmd_tables(const CommonOpts& o, const GuessBounds& req) {
    if (o.order < 20) throw UsageFailure("--order must be >= 20 for the tables command");
    // Default to the full table; --model narrows to a single row.
    std::vector<int> ids =
        (o.model > 0 || o.all) ? resolve_models(o.model, o.all) : resolve_models(0, true);
    // One point per tabulated column, in display order.
    std::vector<std::pair<Rat, Rat>> points{
        {Rat(1), Rat(1)}, {Rat(2), Rat(2)}, {Rat(2), Rat(1)}, {Rat(1), Rat(2)}, {Rat(2), Rat(3)}};
    GuessBounds eff = capacity_bounds(req, o.order + 1, true);
    auto reports = fan_out(ids, [&](int id) { return classify(id, points, o.order, eff); });

    if (o.format == "json") {
        std::vector<std::string> docs;
        for (const auto& r : reports) docs.push_back(io::to_json(r));
        emit(join_json_array(docs), o.out);
    } else if (o.format == "csv") {
        emit(io::tables_csv(reports), o.out);
    } else {
        emit(io::tables_text(reports), o.out);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact enumeration and identity checking for boundary-weighted quarter-plane walks"};
    app.require_subcommand(1);

    CommonOpts eo, vo, go, fo, uo, to;
    bool symbolic = false;
    GuessBounds gb, tb;
    uo.order = 120;
    to.order = 120;
    vo.order = 12;
    to.format = "text";

    auto add_common = [](CLI::App* cmd, CommonOpts& o, bool with_all, bool with_point) {
        cmd->add_option("--model", o.model, "model id (1..23)");
        if (with_all) cmd->add_flag("--all", o.all, "run over all 23 models");
        if (with_point) {
            cmd->add_option("--a", o.a, "x-axis contact weight, exact rational like 2 or 1/2");
            cmd->add_option("--b", o.b, "y-axis contact weight, exact rational");
        }
        cmd->add_option("--order", o.order, "series truncation order");
        cmd->add_option("--format", o.format, "output format")
            ->check(CLI::IsMember({"plain", "text", "json", "csv"}));
        cmd->add_option("--out", o.out, "write output to this path instead of stdout");
    };

    auto* c_enum = app.add_subcommand("enumerate", "exact excursion series, symbolic or specialized");
    add_common(c_enum, eo, false, true);
    c_enum->add_flag("--symbolic", symbolic, "emit coefficients as polynomials in (a, b)");

    auto* c_verify = app.add_subcommand("verify", "closed forms and identities against the enumerator");
    add_common(c_verify, vo, true, true);

    auto* c_group = app.add_subcommand("group", "kernel symmetry group closure");
    add_common(c_group, go, true, false);

    auto* c_fe = app.add_subcommand("fe-check", "functional-equation identities, symbolic weights");
    add_common(c_fe, fo, true, false);

    auto add_bounds = [](CLI::App* cmd, GuessBounds& b) {
        cmd->add_option("--deg-g", b.deg_g, "max degree in g for algebraic fitting");
        cmd->add_option("--deg-t", b.deg_t, "max degree in t for algebraic fitting");
        cmd->add_option("--ode-order", b.ode_order, "max order for linear-equation fitting");
        cmd->add_option("--ode-deg", b.ode_deg, "max coefficient degree for linear-equation fitting");
    };
    auto* c_guess = app.add_subcommand("guess", "fit and confirm equations from the series");
    add_common(c_guess, uo, false, true);
    add_bounds(c_guess, gb);

    auto* c_tables = app.add_subcommand("tables", "classification tables with recorded statuses");
    add_common(c_tables, to, true, false);
    add_bounds(c_tables, tb);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (c_enum->parsed())
            return cmd_enumerate(eo, symbolic, c_enum->count("--a") > 0 || c_enum->count("--b") > 0);
        if (c_verify->parsed()) return cmd_verify(vo);
        if (c_group->parsed()) return cmd_group(go);
        if (c_fe->parsed()) return cmd_fe_check(fo);
        if (c_guess->parsed()) return cmd_guess(uo, gb);
        if (c_tables->parsed()) return cmd_tables(to, tb);
    } catch (const UsageFailure& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
