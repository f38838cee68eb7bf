#include "report.hpp"

#include <map>
#include <sstream>

namespace locdom::cli {

const char* status_name(int exit_code) {
    switch (exit_code) {
        case kOk: return "ok";
        case kInvalid: return "invalid";
        case kHypothesis: return "hypothesis-violated";
        case kBudget: return "budget-exceeded";
        case kViolations: return "violations";
        case kUsage: return "usage-error";
        case kData: return "data-error";
        case kNoInput: return "no-input";
        default: return "internal-error";
    }
}

json to_json(const VertexSet& s) { return json(s.to_vector()); }

json to_json(const LdVerdict& v) {
    static const std::map<LdVerdict::Kind, const char*> names{
        {LdVerdict::Kind::Valid, "Valid"},
        {LdVerdict::Kind::Undominated, "Undominated"},
        {LdVerdict::Kind::Unseparated, "Unseparated"},
        {LdVerdict::Kind::NotTotallyDominated, "NotTotallyDominated"},
    };
    json j{{"kind", names.at(v.kind)}};
    if (v.u >= 0) j["u"] = v.u;
    if (v.v >= 0) j["v"] = v.v;
    j["description"] = v.describe();
    return j;
}

json to_json(const SolveResult& r) {
    return json{{"value", r.value}, {"witness", to_json(r.witness)}, {"nodes", r.nodes},
                {"lower_bound", r.lower_bound}};
}

namespace {

json pairs_json(const std::vector<TwinPair>& ps) {
    json a = json::array();
    for (const auto& p : ps) a.push_back(json{{"u", p.u}, {"v", p.v}, {"degree", p.degree}});
    return a;
}

template <class T>
json arrays_json(const std::vector<T>& xs) {
    json a = json::array();
    for (const auto& x : xs) a.push_back(json(std::vector<int>(x.begin(), x.end())));
    return a;
}

}  // namespace

json to_json(const TwinReport& r) {
    return json{{"open", pairs_json(r.open)}, {"closed", pairs_json(r.closed)}, {"twin_free", r.twin_free()}};
}

json to_json(const LeafSupport& ls) { return json{{"leaves", ls.leaves}, {"supports", ls.supports}}; }

json to_json(const StructureLemmaReport& r) {
    return json{{"triangle_free", r.triangle_free},
                {"c4_common_neighbours", r.c4_common_neighbours},
                {"triangles_edge_disjoint", r.triangles_edge_disjoint},
                {"four_cycles_induced", r.four_cycles_induced},
                {"all_hold", r.all_hold()},
                {"violations", r.violations}};
}

json to_json(const CaseStep& s) {
    json edges = json::array();
    for (auto [u, v] : s.removed_edges) edges.push_back(json::array({u, v}));
    json subs = json::array();
    for (auto [n, k] : s.sub_sizes) subs.push_back(json{{"n", n}, {"size", k}});
    return json{{"rule", s.rule_id},
                {"depth", s.depth},
                {"n", s.order},
                {"m", s.size},
                {"removed_edges", edges},
                {"removed_vertices", s.removed_vertices},
                {"patch_removed", to_json(s.patch_removed)},
                {"patch_added", to_json(s.patch_added)},
                {"sub_solutions", subs},
                {"witness_size", s.witness_size}};
}

json to_json(const LdCertificate& c) {
    json trace = json::array();
    for (const auto& s : c.trace) trace.push_back(to_json(s));
    return json{{"witness", to_json(c.witness)},
                {"size", c.witness.size()},
                {"fallback_count", c.fallback_count},
                {"fallback_rules", c.fallback_rules()},
                {"trace", trace}};
}

json to_json(const SweepReport& r, bool with_records) {
    json j{{"graphs", r.graphs},
           {"exempt", r.exempt},
           {"tight", r.tight},
           {"violations", r.violations},
           {"max_ratio", r.max_ratio},
           {"tight_graphs", r.tight_graphs},
           {"violation_graphs", r.violation_graphs}};
    if (with_records) {
        json recs = json::array();
        for (const auto& x : r.records)
            recs.push_back(json{{"graph6", x.graph6},
                                {"n", x.order},
                                {"m", x.size},
                                {"twin_class", x.twin_class},
                                {"open_twin_degrees", x.open_twin_degrees},
                                {"hypotheses_hold", x.hypotheses_hold},
                                {"gamma", x.gamma},
                                {"witness", to_json(x.witness)},
                                {"bound_ratio", x.order ? double(x.gamma) / x.order : 0.0},
                                {"tight", x.tight},
                                {"violation", x.violation}});
        j["records"] = recs;
    }
    return j;
}

json make_report(const std::string& command, const std::vector<std::string>& argv) {
    return json{{"schema", kSchema},
                {"tool", json{{"name", "locdom"}, {"version", kVersion}}},
                {"command", command},
                {"argv", argv},
                {"input", nullptr},
                {"result", json::object()}};
}

json graph_summary(const Graph& g, const std::string& source, const std::string& format) {
    return json{{"source", source}, {"format", format}, {"n", g.order()}, {"m", g.edge_count()}};
}

void finish(json& report, int exit_code, double elapsed_seconds) {
    report["status"] = status_name(exit_code);
    report["exit_code"] = exit_code;
    report["elapsed_seconds"] = elapsed_seconds;
}

void set_error(json& report, const std::string& code, const std::string& message) {
    report["error"] = json{{"code", code}, {"message", message}};
}

namespace {

std::string scalar_text(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

void flatten(const std::string& prefix, const json& v, std::ostringstream& os) {
    if (v.is_object()) {
        for (auto it = v.begin(); it != v.end(); ++it)
            flatten(prefix.empty() ? it.key() : prefix + "." + it.key(), it.value(), os);
        return;
    }
    if (v.is_array() && !v.empty() && v.front().is_object()) {
        os << prefix << ": " << v.size() << " item(s)\n";
        for (std::size_t i = 0; i < v.size(); ++i) os << "  " << v[i].dump() << "\n";
        return;
    }
    os << prefix << ": " << scalar_text(v) << "\n";
}

}  // namespace

std::string render_text(const json& report) {
    std::ostringstream os;
    os << "command: " << report.value("command", "") << "\n";
    if (report.contains("input") && report["input"].is_object()) flatten("input", report["input"], os);
    if (report.contains("result")) {
        json result = report["result"];
        // The rule trace is printed in its own indented form below.
        std::string trace_text;
        if (result.contains("trace_text")) {
            trace_text = result["trace_text"].get<std::string>();
            result.erase("trace_text");
            result.erase("trace");
        }
        flatten("", result, os);
        if (!trace_text.empty()) os << "trace:\n" << trace_text;
    }
    if (report.contains("error")) os << "error: " << report["error"].value("message", "") << "\n";
    os << "status: " << report.value("status", "") << " (exit " << report.value("exit_code", -1) << ")\n";
    return os.str();
}

namespace {

void need(const json& obj, const std::string& where, const std::string& key, json::value_t type,
          std::vector<std::string>& problems) {
    if (!obj.is_object() || !obj.contains(key)) {
        problems.push_back(where + ": missing key '" + key + "'");
        return;
    }
    const json& v = obj.at(key);
    const bool ok = type == json::value_t::number_integer
                        ? v.is_number_integer()
                        : (type == json::value_t::number_float ? v.is_number() : v.type() == type);
    if (!ok) problems.push_back(where + ": key '" + key + "' has type " + v.type_name());
}

}  // namespace

std::vector<std::string> check_report(const json& report) {
    using T = json::value_t;
    std::vector<std::string> problems;
    if (!report.is_object()) return {"report is not an object"};
    need(report, "report", "schema", T::string, problems);
    need(report, "report", "tool", T::object, problems);
    need(report, "report", "command", T::string, problems);
    need(report, "report", "argv", T::array, problems);
    need(report, "report", "result", T::object, problems);
    need(report, "report", "status", T::string, problems);
    need(report, "report", "exit_code", T::number_integer, problems);
    need(report, "report", "elapsed_seconds", T::number_float, problems);
    if (!problems.empty()) return problems;
    if (report["schema"] != kSchema) problems.push_back("report: unknown schema " + report["schema"].dump());
    need(report["tool"], "tool", "name", T::string, problems);
    need(report["tool"], "tool", "version", T::string, problems);
    const int code = report["exit_code"].get<int>();
    if (report["status"] != status_name(code)) problems.push_back("report: status does not match exit_code");
    if (!report["input"].is_null()) {
        need(report["input"], "input", "n", T::number_integer, problems);
        need(report["input"], "input", "m", T::number_integer, problems);
        need(report["input"], "input", "format", T::string, problems);
    }
    const bool failed = code >= kUsage || code == kHypothesis || code == kBudget;
    if (failed) {
        need(report, "report", "error", T::object, problems);
        if (report.contains("error")) {
            need(report["error"], "error", "code", T::string, problems);
            need(report["error"], "error", "message", T::string, problems);
        }
        return problems;
    }

    static const std::map<std::string, std::vector<std::pair<std::string, T>>> required{
        {"verify", {{"valid", T::boolean}, {"set", T::array}, {"verdict", T::object}}},
        {"solve", {{"variant", T::string}, {"value", T::number_integer}, {"witness", T::array}}},
        {"construct", {{"witness", T::array}, {"size", T::number_integer}, {"bound", T::number_integer},
                       {"verified", T::boolean}, {"fallback_count", T::number_integer}}},
        {"twins", {{"twins", T::object}, {"leaves", T::array}, {"supports", T::array},
                   {"triangles", T::array}, {"four_cycles", T::array}, {"hypotheses", T::object}}},
        {"family", {{"spec", T::string}, {"claimed", T::number_integer}, {"claim_kind", T::string},
                    {"witness", T::array}, {"verified", T::boolean}}},
        {"enum", {{"count", T::number_integer}}},
        {"sweep", {{"graphs", T::number_integer}, {"exempt", T::number_integer}, {"tight", T::number_integer},
                   {"violations", T::number_integer}, {"max_ratio", T::number_float}}},
        {"convert", {{"out", T::string}, {"format", T::string}}},
        {"check-report", {{"problems", T::array}}},
    };
    const auto cmd = report["command"].get<std::string>();
    auto it = required.find(cmd);
    if (it == required.end()) {
        problems.push_back("report: unknown command " + cmd);
        return problems;
    }
    for (const auto& [key, type] : it->second) need(report["result"], "result", key, type, problems);
    if (cmd == "construct" && report["result"].contains("trace")) {
        for (const auto& step : report["result"]["trace"]) {
            need(step, "trace step", "rule", T::string, problems);
            need(step, "trace step", "depth", T::number_integer, problems);
        }
    }
    return problems;
}

}  // namespace locdom::cli
