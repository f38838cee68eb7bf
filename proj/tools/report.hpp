#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "locdom/construct.hpp"
#include "locdom/enumerate.hpp"
#include "locdom/errors.hpp"
#include "locdom/families.hpp"
#include "locdom/ld.hpp"
#include "locdom/solver.hpp"
#include "locdom/twins.hpp"

namespace locdom::cli {

using json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "locdom-report/1";
inline constexpr const char* kVersion = "0.1.0";

// Exit codes shared by every subcommand.
enum Exit : int {
    kOk = 0,
    kInvalid = 1,             // verify: the set is not locating-dominating
    kHypothesis = 2,          // a theorem hypothesis fails on the input
    kBudget = 3,              // exact search ran out of budget
    kViolations = 4,          // sweep found graphs above the bound
    kUsage = 64,              // bad flags or parameters
    kData = 65,               // input does not parse or does not fit the command
    kNoInput = 66,            // input file cannot be read
    kInternal = 70,
};

const char* status_name(int exit_code);

json to_json(const VertexSet& s);
json to_json(const LdVerdict& v);
json to_json(const SolveResult& r);
json to_json(const TwinReport& r);
json to_json(const LeafSupport& ls);
json to_json(const StructureLemmaReport& r);
json to_json(const CaseStep& s);
json to_json(const LdCertificate& c);
json to_json(const SweepReport& r, bool with_records);

// Report skeleton; fill "input" and "result", then call finish.
json make_report(const std::string& command, const std::vector<std::string>& argv);
json graph_summary(const Graph& g, const std::string& source, const std::string& format);
void finish(json& report, int exit_code, double elapsed_seconds);
void set_error(json& report, const std::string& code, const std::string& message);

// Human-readable rendering: one "key: value" line per result field.
std::string render_text(const json& report);

// Schema check of a report; returns the list of problems (empty when valid).
std::vector<std::string> check_report(const json& report);

}  // namespace locdom::cli
