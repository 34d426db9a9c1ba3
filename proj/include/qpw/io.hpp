#pragma once
// JSON/CSV emission and parsing for the library's value types.  Every JSON
// document carries a "schema" field; parsers reject unknown schemas so that
// saved fixtures stay meaningful across refactors.

#include <string>
#include <vector>

#include "qpw/closed_forms.hpp"
#include "qpw/fe_check.hpp"
#include "qpw/guess.hpp"
#include "qpw/kernel_group.hpp"
#include "qpw/walks.hpp"

namespace qpw::io {

inline constexpr const char* kSeriesSchema = "qpwalks.series/1";
inline constexpr const char* kSymbolicSeriesSchema = "qpwalks.symbolic-series/1";
inline constexpr const char* kGroupSchema = "qpwalks.group/1";
inline constexpr const char* kFeCheckSchema = "qpwalks.fe-check/1";
inline constexpr const char* kVerifySchema = "qpwalks.verify/1";
inline constexpr const char* kGuessSchema = "qpwalks.guess/1";
inline constexpr const char* kTablesSchema = "qpwalks.tables/1";

// Specialized excursion series with its evaluation point.
struct SeriesDoc {
    int model_id = 0;
    Rat a, b;
    Series<Rat> g;
};
std::string to_json(const SeriesDoc& doc, bool pretty = true);
SeriesDoc series_from_json(const std::string& text);

// Symbolic excursion series: WeightPoly coefficients in (a, b).
struct SymbolicSeriesDoc {
    int model_id = 0;
    Series<WeightPoly> g;
};
std::string to_json(const SymbolicSeriesDoc& doc, bool pretty = true);
SymbolicSeriesDoc symbolic_series_from_json(const std::string& text);

std::string to_json(const GroupResult& group, int model_id, bool pretty = true);
std::string to_json(const FeCheckResult& r, bool pretty = true);
std::string to_json(const std::vector<VerifyRecord>& records, bool pretty = true);

// Guess outcomes for a single series.
struct GuessDoc {
    int model_id = 0;
    Rat a, b;
    int order = 0;
    std::optional<AlgebraicCandidate> alg;
    std::optional<OdeCandidate> ode;
};
std::string to_json(const GuessDoc& doc, bool pretty = true);
GuessDoc guess_from_json(const std::string& text);

std::string to_json(const ClassificationReport& report, bool pretty = true);
std::string classification_to_csv(const ClassificationReport& report);

// Classification tables: recorded statuses next to what the guessers found,
// with an agreement note per cell.  Cells whose recorded nature cannot be
// falsified by equation guessing (differentially algebraic / open) are
// declared as such instead of being judged.
std::string tables_text(const std::vector<ClassificationReport>& reports);
std::string tables_csv(const std::vector<ClassificationReport>& reports);

// Plain-text helpers shared by the CLI.
std::string series_to_plain(const Series<Rat>& g);
std::string series_to_plain(const Series<WeightPoly>& g);

void write_file(const std::string& path, const std::string& text);
std::string read_file(const std::string& path);

}  // namespace qpw::io
