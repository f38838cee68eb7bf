// locdom: command-line front end for the locating-domination library.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "locdom/construct.hpp"
#include "locdom/enumerate.hpp"
#include "locdom/families.hpp"
#include "locdom/graph_io.hpp"
#include "locdom/ld.hpp"
#include "locdom/solver.hpp"
#include "locdom/twins.hpp"
#include "report.hpp"

using namespace locdom;
using namespace locdom::cli;

namespace {

// Raised for errors in command-line values that CLI11 cannot see.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised while loading inputs, so the exit code can tell parse failures apart.
struct InputError : std::runtime_error {
    InputError(int code, const std::string& what, std::string name)
        : std::runtime_error(what), exit_code(code), error_name(std::move(name)) {}
    int exit_code;
    std::string error_name;
};

struct GraphInput {
    std::string path;
    std::string inline_g6;
    std::string format;  // empty: sniff
};

void add_graph_options(CLI::App* app, GraphInput& in) {
    app->add_option("-g,--graph", in.path, "graph file (graph6 or edge list)");
    app->add_option("--graph6", in.inline_g6, "graph given inline as a graph6 string");
    app->add_option("--format", in.format, "input format: graph6 or edgelist (default: detect)");
}

std::optional<GraphFormat> format_option(const std::string& name) {
    if (name.empty()) return std::nullopt;
    try {
        return parse_format_name(name);
    } catch (const Error& e) {
        throw UsageError(e.what());
    }
}

Graph load_graph(const GraphInput& in, json& report) {
    if (in.path.empty() == in.inline_g6.empty()) throw UsageError("give exactly one of --graph or --graph6");
    try {
        if (!in.inline_g6.empty()) {
            Graph g = parse_graph6(in.inline_g6);
            report["input"] = graph_summary(g, "inline", "graph6");
            return g;
        }
        auto fmt = format_option(in.format);
        std::string body = read_text_file(in.path);
        GraphFormat used = fmt ? *fmt : sniff_format(body);
        Graph g = parse_graph(body, used);
        report["input"] = graph_summary(g, in.path, std::string(format_name(used)));
        return g;
    } catch (const Error& e) {
        const int code = e.code() == ErrorCode::Io ? kNoInput : kData;
        throw InputError(code, e.what(), std::string(error_code_name(e.code())));
    }
}

std::vector<int> parse_index_list(const std::string& text) {
    std::vector<int> out;
    std::string token;
    std::istringstream is(text);
    auto flush = [&] {
        if (token.empty()) return;
        std::size_t used = 0;
        int v = -1;
        try {
            v = std::stoi(token, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != token.size() || v < 0) throw UsageError("bad vertex index '" + token + "'");
        out.push_back(v);
        token.clear();
    };
    for (char c : text) {
        if (c == ',' || std::isspace(static_cast<unsigned char>(c))) flush();
        else token += c;
    }
    flush();
    return out;
}

VertexSet make_set(const Graph& g, const std::vector<int>& members) {
    for (int v : members)
        if (v >= g.order())
            throw UsageError("vertex " + std::to_string(v) + " is outside 0.." + std::to_string(g.order() - 1));
    return VertexSet::from_vector(g.order(), members);
}

GraphFormat output_format(const std::string& path, const std::string& requested, bool& dot) {
    dot = false;
    std::string name = requested;
    if (name.empty()) {
        auto ends = [&](const std::string& ext) {
            return path.size() >= ext.size() && path.compare(path.size() - ext.size(), ext.size(), ext) == 0;
        };
        if (ends(".dot") || ends(".gv")) name = "dot";
        else if (ends(".g6") || ends(".graph6")) name = "graph6";
        else name = "edgelist";
    }
    if (name == "dot") {
        dot = true;
        return GraphFormat::EdgeList;
    }
    return *format_option(name);
}

std::string render_graph(const Graph& g, GraphFormat fmt, bool dot, const std::optional<VertexSet>& highlight,
                         const std::vector<std::string>& labels) {
    if (!dot) return format_graph(g, fmt);
    DotOptions opts;
    opts.highlight = highlight;
    for (std::size_t i = 0; i < labels.size(); ++i) opts.labels[static_cast<int>(i)] = labels[i];
    return to_dot(g, opts);
}

// ---- subcommands ----

struct VerifyArgs {
    GraphInput in;
    std::string set;
    std::string set_file;
    bool ltd = false;
};

int run_verify(const VerifyArgs& a, json& report) {
    Graph g = load_graph(a.in, report);
    std::string text = a.set;
    if (!a.set_file.empty()) {
        try {
            text = read_text_file(a.set_file);
        } catch (const Error& e) {
            throw InputError(kNoInput, e.what(), "Io");
        }
    } else if (a.set.empty() && a.set_file.empty()) {
        throw UsageError("give --set or --set-file");
    }
    VertexSet s = make_set(g, parse_index_list(text));
    LdVerdict v = a.ltd ? verify_ltd(g, s) : verify_ld(g, s);
    report["result"] = json{{"variant", a.ltd ? "LTD" : "LD"},
                            {"set", to_json(s)},
                            {"size", s.size()},
                            {"valid", v.valid()},
                            {"verdict", to_json(v)}};
    return v.valid() ? kOk : kInvalid;
}

struct SolveArgs {
    GraphInput in;
    bool ltd = false;
    long long budget_nodes = -1;
    double budget_seconds = -1.0;
};

int run_solve(const SolveArgs& a, json& report) {
    Graph g = load_graph(a.in, report);
    SolverBudget budget;
    budget.max_nodes = a.budget_nodes;
    budget.max_seconds = a.budget_seconds;
    try {
        SolveResult r = a.ltd ? ltd_number_exact(g, budget) : ld_number_exact(g, budget);
        json j = to_json(r);
        j["variant"] = a.ltd ? "LTD" : "LD";
        j["half_order"] = g.order() / 2;
        report["result"] = j;
        return kOk;
    } catch (const BudgetExceeded& e) {
        report["result"] = json{{"variant", a.ltd ? "LTD" : "LD"},
                                {"lower_bound", e.lower_bound},
                                {"upper_bound", e.upper_bound},
                                {"nodes", e.nodes_explored}};
        throw;
    }
}

struct ConstructArgs {
    GraphInput in;
    bool per_component = false;
    bool cubic = false;
    bool no_memo = false;
};

json certificate_json(const Graph& g, const LdCertificate& cert) {
    json j = to_json(cert);
    j["bound"] = g.order() / 2;
    j["verified"] = is_ld_set(g, cert.witness) && cert.witness.size() <= g.order() / 2 &&
                    replay_certificate(g, cert) == cert.witness;
    j["trace_text"] = format_trace(cert);
    return j;
}

int run_construct(const ConstructArgs& a, json& report) {
    Graph g = load_graph(a.in, report);
    ConstructOptions opts;
    opts.memoize = !a.no_memo;
    auto build = [&](const Graph& h) { return a.cubic ? construct_for_cubic(h, opts) : construct_half_ld(h, opts); };
    if (!a.per_component) {
        LdCertificate cert = build(g);
        report["result"] = certificate_json(g, cert);
        return report["result"]["verified"].get<bool>() ? kOk : kInternal;
    }
    auto comps = components(g);
    VertexSet total(g.order());
    json parts = json::array();
    int bound = 0, fallbacks = 0;
    bool verified = true;
    for (std::size_t i = 0; i < comps.size(); ++i) {
        auto [h, map] = induced_subgraph(g, comps[i]);
        LdCertificate cert;
        try {
            cert = build(h);
        } catch (const HypothesisViolated& e) {
            std::vector<int> lifted;
            for (int v : e.witness_vertices) lifted.push_back(map.to_old(v));
            throw HypothesisViolated(e.hypothesis, lifted,
                                     "component " + std::to_string(i) + " " + comps[i].to_string() + ": " +
                                         e.what());
        }
        json part = certificate_json(h, cert);
        part.erase("trace_text");
        part["vertices"] = to_json(comps[i]);
        part["witness_in_input"] = to_json(map.lift(cert.witness));
        verified = verified && part["verified"].get<bool>();
        total |= map.lift(cert.witness);
        bound += h.order() / 2;
        fallbacks += cert.fallback_count;
        parts.push_back(part);
    }
    verified = verified && is_ld_set(g, total);
    report["result"] = json{{"witness", to_json(total)}, {"size", total.size()},   {"bound", bound},
                            {"verified", verified},      {"fallback_count", fallbacks}, {"components", parts}};
    return verified ? kOk : kInternal;
}

int run_twins(const GraphInput& in, json& report) {
    Graph g = load_graph(in, report);
    json result{{"twins", to_json(twin_report(g))}};
    auto ls = leaves_and_supports(g);
    result["leaves"] = ls.leaves;
    result["supports"] = ls.supports;
    json tris = json::array(), cycles = json::array();
    for (const auto& t : triangles(g)) tris.push_back(std::vector<int>(t.begin(), t.end()));
    for (const auto& c : four_cycles(g)) cycles.push_back(std::vector<int>(c.begin(), c.end()));
    result["triangles"] = tris;
    result["four_cycles"] = cycles;
    auto violation = bound_hypotheses_violation(g);
    json hyp{{"hold", !violation.has_value()}};
    if (violation) {
        hyp["failed"] = std::string(hypothesis_name(violation->hypothesis));
        hyp["message"] = violation->what();
        hyp["witness"] = violation->witness_vertices;
    }
    result["hypotheses"] = hyp;
    if (g.max_degree() <= 3 && twin_report(g).twin_free()) result["structure_lemmas"] = to_json(check_structure_lemmas(g));
    report["result"] = result;
    return kOk;
}

struct FamilyArgs {
    std::string kind;
    std::optional<int> k, r, p, n, i;
    std::string out;
    std::string format;
    bool emit_witness = false;
    bool exact = false;
};

FamilySpec family_spec(const FamilyArgs& a) {
    std::string text = a.kind;
    if (text.find(':') == std::string::npos) {
        std::vector<int> params;
        if (a.kind == "closed-reg") {
            params.push_back(a.r.value_or(4));
            params.push_back(a.k.value_or(1));
        } else if (a.kind == "ltd-comb") {
            params.push_back(a.p.value_or(a.k.value_or(4)));
        } else if (a.kind == "f-graph") {
            params.push_back(a.i.value_or(a.k.value_or(0)));
        } else if (a.kind == "path" || a.kind == "complete" || a.kind == "star") {
            if (!a.n) throw UsageError(a.kind + " needs --n");
            params.push_back(*a.n);
        } else if (a.kind == "deg1-twins" || a.kind == "deg2-twins" || a.kind == "tight-subcubic") {
            params.push_back(a.k.value_or(1));
        }
        for (std::size_t j = 0; j < params.size(); ++j) text += (j ? "," : ":") + std::to_string(params[j]);
    }
    try {
        return parse_family_spec(text);
    } catch (const Error& e) {
        throw UsageError(e.what());
    }
}

int run_family(const FamilyArgs& a, json& report) {
    FamilySpec spec = family_spec(a);
    FamilyInstance inst;
    try {
        inst = generate(spec);
    } catch (const Error& e) {
        throw UsageError(e.what());
    }
    const Graph& g = inst.graph;
    const bool verified = inst.claim_kind == ClaimKind::ExactLtd
                              ? is_ltd_set(g, inst.witness)
                              : is_ld_set(g, inst.witness) && inst.witness.size() == inst.claimed;
    json result{{"spec", spec.to_string()},
                {"n", g.order()},
                {"m", g.edge_count()},
                {"claimed", inst.claimed},
                {"claim_kind", std::string(claim_kind_name(inst.claim_kind))},
                {"witness", to_json(inst.witness)},
                {"verified", verified}};
    json labels = json::array();
    for (const auto& l : inst.labels) labels.push_back(l);
    result["labels"] = labels;
    if (a.exact) {
        SolveResult r = inst.claim_kind == ClaimKind::ExactLtd ? ltd_number_exact(g) : ld_number_exact(g);
        result["exact"] = r.value;
    }
    if (!a.out.empty()) {
        bool dot = false;
        GraphFormat fmt = output_format(a.out, a.format, dot);
        std::optional<VertexSet> hl;
        if (a.emit_witness) hl = inst.witness;
        write_text_file(a.out, render_graph(g, fmt, dot, hl, inst.labels));
        result["out"] = a.out;
        if (a.emit_witness && !dot) {
            std::string wpath = a.out + ".witness";
            std::string body;
            for (int v : inst.witness) body += (body.empty() ? "" : ",") + std::to_string(v);
            write_text_file(wpath, body + "\n");
            result["witness_out"] = wpath;
        }
    }
    report["input"] = graph_summary(g, "family " + spec.to_string(), "generated");
    report["result"] = result;
    return verified ? kOk : kInternal;
}

struct FilterArgs {
    int n = 0;
    bool cubic = false;
    bool subcubic = false;
    bool connected = false;
    bool twin_free = false;
    bool hypotheses = false;
};

void add_filter_options(CLI::App* app, FilterArgs& f) {
    app->add_option("-n,--n", f.n, "order");
    auto* cubic = app->add_flag("--cubic", f.cubic, "3-regular graphs only");
    app->add_flag("--subcubic", f.subcubic, "maximum degree 3 (default)")->excludes(cubic);
    app->add_flag("--connected", f.connected, "connected graphs (always on)");
    app->add_flag("--twin-free", f.twin_free, "twin-free graphs only");
    app->add_flag("--hypotheses", f.hypotheses, "only graphs meeting the half-order hypotheses");
}

EnumFilter make_filter(const FilterArgs& a) {
    if (a.n < 1) throw UsageError("give the order with --n");
    EnumFilter f;
    f.order = a.n;
    if (a.cubic) f.regular_degree = 3;
    f.twin_free_only = a.twin_free;
    f.hypotheses_only = a.hypotheses;
    return f;
}

json filter_json(const EnumFilter& f) {
    return json{{"n", f.order},
                {"max_degree", f.max_degree},
                {"regular_degree", f.regular_degree ? json(*f.regular_degree) : json(nullptr)},
                {"connected", true},
                {"twin_free", f.twin_free_only},
                {"hypotheses", f.hypotheses_only}};
}

std::vector<Graph> enumerate_checked(const EnumFilter& f) {
    try {
        return enumerate_graphs(f);
    } catch (const Error& e) {
        throw UsageError(e.what());
    }
}

int run_enum(const FilterArgs& a, const std::string& out, json& report, bool& stream) {
    EnumFilter f = make_filter(a);
    auto graphs = enumerate_checked(f);
    std::string body;
    for (const auto& g : graphs) body += to_graph6(g) + "\n";
    if (out.empty()) {
        stream = true;
        std::cout << body;
        return kOk;
    }
    write_text_file(out, body);
    report["result"] = json{{"filter", filter_json(f)}, {"count", graphs.size()}, {"out", out}};
    return kOk;
}

struct SweepArgs {
    FilterArgs filter;
    std::string input;
    std::string bound = "half";
    int threads = 0;
    bool records = false;
    long long budget_nodes = -1;
};

int run_sweep(const SweepArgs& a, json& report) {
    if (a.bound != "half") throw UsageError("only --bound half is supported");
    SolverBudget budget;
    budget.max_nodes = a.budget_nodes;
    SweepReport rep;
    json result;
    if (!a.input.empty()) {
        std::vector<Graph> graphs;
        try {
            std::istringstream is(read_text_file(a.input));
            std::string line;
            while (std::getline(is, line))
                if (!line.empty() && line != ">>graph6<<") graphs.push_back(parse_graph6(line));
        } catch (const Error& e) {
            throw InputError(e.code() == ErrorCode::Io ? kNoInput : kData, e.what(),
                             std::string(error_code_name(e.code())));
        }
        rep = sweep_graphs(graphs, a.threads, budget);
        result["source"] = a.input;
    } else {
        EnumFilter f = make_filter(a.filter);
        enumerate_checked(f);
        rep = sweep_conjecture(f, a.threads, budget);
        result["filter"] = filter_json(f);
    }
    const json summary = to_json(rep, a.records);
    for (auto it = summary.begin(); it != summary.end(); ++it) result[it.key()] = it.value();
    result["bound"] = "floor(n/2)";
    report["result"] = result;
    return rep.violations ? kViolations : kOk;
}

struct ConvertArgs {
    GraphInput in;
    std::string out;
    std::string to;
    std::string highlight;
};

int run_convert(const ConvertArgs& a, json& report) {
    Graph g = load_graph(a.in, report);
    bool dot = false;
    GraphFormat fmt = output_format(a.out, a.to, dot);
    std::optional<VertexSet> hl;
    if (!a.highlight.empty()) hl = make_set(g, parse_index_list(a.highlight));
    write_text_file(a.out, render_graph(g, fmt, dot, hl, {}));
    report["result"] = json{{"out", a.out}, {"format", dot ? "dot" : std::string(format_name(fmt))}};
    return kOk;
}

int run_check_report(const std::string& path, json& report) {
    json target;
    try {
        target = json::parse(read_text_file(path));
    } catch (const Error& e) {
        throw InputError(kNoInput, e.what(), "Io");
    } catch (const json::exception& e) {
        throw InputError(kData, e.what(), "MalformedReport");
    }
    auto problems = check_report(target);
    report["result"] = json{{"file", path}, {"problems", problems}, {"valid", problems.empty()}};
    return problems.empty() ? kOk : kInvalid;
}

int exit_for(const Error& e) {
    switch (e.code()) {
        case ErrorCode::HypothesisViolated: return kHypothesis;
        case ErrorCode::BudgetExceeded: return kBudget;
        case ErrorCode::BadParameter:
        case ErrorCode::IndexOutOfRange:
        case ErrorCode::OrderTooLarge: return kUsage;
        case ErrorCode::Io: return kNoInput;
        default: return kData;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Locating-dominating sets in subcubic graphs"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "print the report as JSON");

    VerifyArgs verify;
    auto* c_verify = app.add_subcommand("verify", "check a vertex set");
    add_graph_options(c_verify, verify.in);
    c_verify->add_option("-s,--set", verify.set, "comma-separated vertex indices");
    c_verify->add_option("--set-file", verify.set_file, "file with vertex indices (overrides --set)");
    c_verify->add_flag("--ltd", verify.ltd, "check location-total-domination instead");

    SolveArgs solve;
    auto* c_solve = app.add_subcommand("solve", "exact minimum LD (or LTD) set");
    add_graph_options(c_solve, solve.in);
    c_solve->add_flag("--ltd", solve.ltd, "solve the total variant");
    c_solve->add_option("--budget-nodes", solve.budget_nodes, "search node limit");
    c_solve->add_option("--budget-seconds", solve.budget_seconds, "time limit in seconds");

    ConstructArgs construct;
    auto* c_construct = app.add_subcommand("construct", "LD-set of size at most n/2 with a rule trace");
    add_graph_options(c_construct, construct.in);
    c_construct->add_flag("--per-component", construct.per_component, "apply the construction to each component");
    c_construct->add_flag("--cubic", construct.cubic, "require a cubic input");
    c_construct->add_flag("--no-memo", construct.no_memo, "do not reuse solutions of repeated subgraphs");

    GraphInput twins_in;
    auto* c_twins = app.add_subcommand("twins", "twins, leaves, short cycles and hypotheses");
    add_graph_options(c_twins, twins_in);

    FamilyArgs family;
    auto* c_family = app.add_subcommand("family", "generate a family instance");
    c_family->add_option("--kind", family.kind, "family name, optionally with parameters (closed-reg:4,1)")
        ->required();
    c_family->add_option("--k", family.k, "family parameter k");
    c_family->add_option("--r", family.r, "regularity r (closed-reg)");
    c_family->add_option("--p", family.p, "spine length p (ltd-comb)");
    c_family->add_option("--n", family.n, "order (path, complete, star)");
    c_family->add_option("--i", family.i, "pattern index (f-graph)");
    c_family->add_option("-o,--out", family.out, "output file");
    c_family->add_option("--to", family.format, "output format: graph6, edgelist or dot (default: by extension)");
    c_family->add_flag("--emit-witness", family.emit_witness, "write the witness next to the graph");
    c_family->add_flag("--exact", family.exact, "also compute the exact value");

    FilterArgs enum_filter;
    std::string enum_out;
    auto* c_enum = app.add_subcommand("enum", "connected subcubic graphs as graph6");
    add_filter_options(c_enum, enum_filter);
    c_enum->add_option("-o,--out", enum_out, "output file (default: stdout, no report)");

    SweepArgs sweep;
    auto* c_sweep = app.add_subcommand("sweep", "solve every graph and check the half-order bound");
    add_filter_options(c_sweep, sweep.filter);
    c_sweep->add_option("--input", sweep.input, "graph6 stream to sweep instead of the built-in enumeration");
    c_sweep->add_option("--bound", sweep.bound, "bound to check (half)");
    c_sweep->add_option("--threads", sweep.threads, "worker threads (default: LOCDOM_THREADS or 1)");
    c_sweep->add_option("--budget-nodes", sweep.budget_nodes, "search node limit per graph");
    c_sweep->add_flag("--records", sweep.records, "include per-graph records");

    ConvertArgs convert;
    auto* c_convert = app.add_subcommand("convert", "convert between graph6, edge list and DOT");
    add_graph_options(c_convert, convert.in);
    c_convert->add_option("-o,--out", convert.out, "output file")->required();
    c_convert->add_option("--to", convert.to, "graph6, edgelist or dot (default: by extension)");
    c_convert->add_option("--highlight", convert.highlight, "vertices to highlight in DOT output");

    std::string check_path;
    auto* c_check = app.add_subcommand("check-report", "validate a JSON report against the schema");
    c_check->add_option("file", check_path, "report file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        std::cerr << "locdom: " << e.what() << "\n";
        return kUsage;
    }

    CLI::App* sub = app.get_subcommands().front();
    std::vector<std::string> args(argv + 1, argv + argc);
    json report = make_report(sub->get_name(), args);
    const auto start = std::chrono::steady_clock::now();
    int code = kOk;
    bool stream = false;
    try {
        if (sub == c_verify) code = run_verify(verify, report);
        else if (sub == c_solve) code = run_solve(solve, report);
        else if (sub == c_construct) code = run_construct(construct, report);
        else if (sub == c_twins) code = run_twins(twins_in, report);
        else if (sub == c_family) code = run_family(family, report);
        else if (sub == c_enum) code = run_enum(enum_filter, enum_out, report, stream);
        else if (sub == c_sweep) code = run_sweep(sweep, report);
        else if (sub == c_convert) code = run_convert(convert, report);
        else if (sub == c_check) code = run_check_report(check_path, report);
    } catch (const UsageError& e) {
        code = kUsage;
        set_error(report, "Usage", e.what());
    } catch (const InputError& e) {
        code = e.exit_code;
        set_error(report, e.error_name, e.what());
    } catch (const HypothesisViolated& e) {
        code = kHypothesis;
        set_error(report, "HypothesisViolated", e.what());
        report["error"]["hypothesis"] = std::string(hypothesis_name(e.hypothesis));
        report["error"]["witness"] = e.witness_vertices;
    } catch (const Error& e) {
        code = exit_for(e);
        set_error(report, std::string(error_code_name(e.code())), e.what());
    } catch (const std::exception& e) {
        code = kInternal;
        set_error(report, "Internal", e.what());
    }
    if (stream && code == kOk) return code;
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    finish(report, code, elapsed);
    if (as_json) {
        json out = report;
        if (out["result"].contains("trace_text")) out["result"].erase("trace_text");
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << render_text(report);
    }
    if (report.contains("error")) std::cerr << "locdom: " << report["error"]["message"].get<std::string>() << "\n";
    return code;
}
