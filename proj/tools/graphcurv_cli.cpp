// Command line front end. Talks to the library exclusively through the C
// API; table and csv output are rendered from the JSON reports so every
// format carries identical values.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "graphcurv/graphcurv.h"

namespace {

using json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DomainError : std::runtime_error {
    explicit DomainError(gcv_status rc) : std::runtime_error(format(rc)) {}

    // The library message may already lead with the status name.
    static std::string format(gcv_status rc) {
        const std::string name = gcv_status_name(rc);
        const std::string msg = gcv_last_error();
        if (msg.rfind(name + ": ", 0) == 0) return msg;
        return name + ": " + msg;
    }
};

void check(gcv_status rc) {
    if (rc != GCV_OK) throw DomainError(rc);
}

struct GraphHandle {
    gcv_graph* g = nullptr;

    GraphHandle() = default;
    GraphHandle(const GraphHandle&) = delete;
    GraphHandle& operator=(const GraphHandle&) = delete;
    ~GraphHandle() { gcv_graph_free(g); }
};

struct CString {
    char* s = nullptr;

    CString() = default;
    CString(const CString&) = delete;
    CString& operator=(const CString&) = delete;
    ~CString() { gcv_string_free(s); }

    std::string str() const { return s == nullptr ? std::string() : std::string(s); }
};

struct GraphOptions {
    std::string input;
    std::string family;
    int64_t size = 0;
};

struct ReportOptions {
    std::string kappa0;
    std::string alpha;
    std::string format = "table";
    std::string output;
    double tol = 1e-9;
};

void add_graph_options(CLI::App* cmd, GraphOptions& o) {
    auto* input =
        cmd->add_option("--input,-i", o.input, "Graph file, edge list or JSON ('-' = stdin)");
    auto* family = cmd->add_option(
        "--family,-f", o.family,
        "Generator family: path|cycle|complete|dumbbell|binary_tree|star|pendant_hexagon");
    cmd->add_option("--n,--m,--k", o.size, "Size parameter for --family");
    input->excludes(family);
    family->excludes(input);
}

void add_format_option(CLI::App* cmd, ReportOptions& o) {
    cmd->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"table", "json", "csv"}));
    cmd->add_option("--output,-o", o.output, "Write the report to a file instead of stdout");
}

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read input file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool looks_like_json(const std::string& text) {
    for (char c : text) {
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
        return c == '{';
    }
    return false;
}

void make_graph(const GraphOptions& o, GraphHandle& out) {
    if (!o.input.empty()) {
        std::string text = read_input(o.input);
        if (looks_like_json(text))
            check(gcv_graph_from_json(text.c_str(), &out.g));
        else
            check(gcv_graph_from_edge_list(text.c_str(), &out.g));
    } else if (!o.family.empty()) {
        check(gcv_graph_generate(o.family.c_str(), o.size, &out.g));
    } else {
        throw UsageError("one of --input or --family is required");
    }
}

void write_output(const std::string& text, const std::string& path) {
    std::string body = text;
    if (body.empty() || body.back() != '\n') body += '\n';
    if (path.empty()) {
        std::cout << body;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw UsageError("cannot write output file '" + path + "'");
    out << body;
}

// Scalar json value as plain text (strings unquoted, numbers/bools as
// their shortest round-tripping representation).
std::string cell(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string csv_line(const std::vector<std::string>& fields) {
    std::string out;
    for (size_t i = 0; i < fields.size(); ++i) {
        if (i > 0) out += ',';
        out += csv_field(fields[i]);
    }
    return out;
}

// Right-aligned columns, two-space separator, last column unpadded.
std::string aligned_table(const std::vector<std::vector<std::string>>& rows) {
    std::vector<size_t> width;
    for (const auto& row : rows) {
        if (width.size() < row.size()) width.resize(row.size(), 0);
        for (size_t c = 0; c < row.size(); ++c)
            if (row[c].size() > width[c]) width[c] = row[c].size();
    }
    std::string out;
    for (const auto& row : rows) {
        std::string line;
        for (size_t c = 0; c < row.size(); ++c) {
            if (c > 0) line += "  ";
            if (c + 1 == row.size())
                line += row[c];
            else
                line += std::string(width[c] - row[c].size(), ' ') + row[c];
        }
        out += line;
        out += '\n';
    }
    if (!out.empty()) out.pop_back();
    return out;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i > 0) out += sep;
        out += parts[i];
    }
    return out;
}

std::string curvature_table(const json& body) {
    std::string kind = body["kind"].get<std::string>();
    std::string head = "edge curvature (" + kind;
    if (body.contains("alpha")) head += " = " + cell(body["alpha"]);
    head += ")";
    std::string out = head + "\n";
    out += "n = " + cell(body["n"]) + ", edges = " + cell(body["edge_count"]) + "\n";

    std::vector<std::vector<std::string>> rows{{"u", "v", "kappa"}};
    for (const json& e : body["edges"])
        rows.push_back({cell(e["u"]), cell(e["v"]), cell(e["kappa"])});
    out += aligned_table(rows) + "\n";

    out += "min = " + cell(body["min"]) + ", max = " + cell(body["max"]) + "\n";
    std::vector<std::string> distinct;
    for (const json& v : body["distinct"]) distinct.push_back(cell(v));
    out += "distinct: " + join(distinct, ", ");
    return out;
}

std::string curvature_csv(const json& body) {
    std::string out = "u,v,kappa\n";
    for (const json& e : body["edges"])
        out += csv_line({cell(e["u"]), cell(e["v"]), cell(e["kappa"])}) + "\n";
    out.pop_back();
    return out;
}

std::string spectrum_table(const json& body) {
    std::string out = "normalized laplacian spectrum\n";
    out += "n = " + cell(body["n"]) + ", edges = " + cell(body["edge_count"]) + "\n";
    out += "eigenvalues:\n";
    for (const json& ev : body["eigenvalues"]) out += "  " + cell(ev) + "\n";
    out += "lambda1 = " + cell(body["lambda1"]);
    return out;
}

std::string spectrum_csv(const json& body) {
    std::string out = "index,eigenvalue\n";
    int i = 0;
    for (const json& ev : body["eigenvalues"])
        out += csv_line({std::to_string(i++), cell(ev)}) + "\n";
    out.pop_back();
    return out;
}

std::string flag_line(const json& obj) {
    std::vector<std::string> parts;
    for (auto it = obj.begin(); it != obj.end(); ++it)
        parts.push_back(it.key() + "=" + (it.value().get<bool>() ? "yes" : "no"));
    return join(parts, ", ");
}

std::string bounds_table(const json& body) {
    std::string out = "theorem bounds\n";
    out += "n = " + cell(body["n"]) + ", edges = " + cell(body["edge_count"]) + "\n";
    for (const json& entry : body["thresholds"]) {
        out += "\nthreshold kappa0 = " + cell(entry["kappa0"]) + "\n";
        for (auto it = entry.begin(); it != entry.end(); ++it) {
            if (it.key() == "kappa0" || it.key() == "holds" || it.key() == "vacuous") continue;
            out += "  " + it.key() + " = " + cell(it.value()) + "\n";
        }
        out += "  holds: " + flag_line(entry["holds"]) + "\n";
        out += "  vacuous: " + flag_line(entry["vacuous"]) + "\n";
    }
    out.pop_back();
    return out;
}

const std::vector<std::string>& bounds_csv_columns() {
    static const std::vector<std::string> cols{
        "kappa0",
        "alpha",
        "integral",
        "integral_alpha",
        "actual_n",
        "actual_diameter",
        "max_degree",
        "actual_lambda1",
        "diameter_bound",
        "diameter_bound_alpha",
        "moore_bound",
        "lichnerowicz_bound",
        "lichnerowicz_bound_alpha",
        "holds_diameter",
        "holds_diameter_alpha",
        "holds_moore",
        "holds_lichnerowicz",
        "holds_lichnerowicz_alpha",
        "vacuous_diameter",
        "vacuous_diameter_alpha",
        "vacuous_lichnerowicz",
        "vacuous_lichnerowicz_alpha",
    };
    return cols;
}

std::string bounds_csv(const json& body) {
    std::string out = csv_line(bounds_csv_columns()) + "\n";
    for (const json& entry : body["thresholds"]) {
        std::vector<std::string> fields;
        for (const std::string& col : bounds_csv_columns()) {
            std::string value;
            if (col.rfind("holds_", 0) == 0) {
                std::string key = col.substr(6);
                if (entry["holds"].contains(key)) value = cell(entry["holds"][key]);
            } else if (col.rfind("vacuous_", 0) == 0) {
                std::string key = col.substr(8);
                if (entry["vacuous"].contains(key)) value = cell(entry["vacuous"][key]);
            } else if (entry.contains(col)) {
                value = cell(entry[col]);
            }
            fields.push_back(value);
        }
        out += csv_line(fields) + "\n";
    }
    out.pop_back();
    return out;
}

std::string audit_table(const json& j) {
    std::string out = "audit of graph with n = " + cell(j["graph"]["n"]) + "\n\n";
    out += curvature_table(j["curvature"]) + "\n\n";
    out += spectrum_table(j["spectrum"]) + "\n\n";
    out += bounds_table(j["bounds"]);
    return out;
}

std::string verify_table(const json& j) {
    std::string out =
        "verification suite (version " + cell(j["suite_version"]) + ")\n";
    for (const json& c : j["checks"]) {
        out += (c["pass"].get<bool>() ? "PASS " : "FAIL ") + cell(c["id"]) + " " +
               cell(c["name"]) + ": " + cell(c["detail"]) + "\n";
    }
    out += "passed " + cell(j["passed"]) + ", failed " + cell(j["failed"]);
    return out;
}

std::string verify_csv(const json& j) {
    std::string out = "id,name,pass,detail\n";
    for (const json& c : j["checks"])
        out += csv_line({cell(c["id"]), cell(c["name"]), cell(c["pass"]), cell(c["detail"])}) +
               "\n";
    out.pop_back();
    return out;
}

// Renders a JSON report in the requested format. `table` and `csv`
// receive the parsed report object.
template <typename Table, typename Csv>
void emit(const std::string& report_json, const ReportOptions& opts, Table table, Csv csv) {
    if (opts.format == "json") {
        write_output(report_json, opts.output);
        return;
    }
    json j = json::parse(report_json);
    write_output(opts.format == "table" ? table(j) : csv(j), opts.output);
}

const char* opt_str(const std::string& s) { return s.empty() ? nullptr : s.c_str(); }

int run_gen(const GraphOptions& gopts, const ReportOptions& opts) {
    GraphHandle h;
    make_graph(gopts, h);
    if (opts.format == "json") {
        CString s;
        check(gcv_graph_to_json(h.g, &s.s));
        write_output(s.str(), opts.output);
    } else if (opts.format == "csv") {
        int64_t m = 0;
        check(gcv_graph_edge_count(h.g, &m));
        std::string out = "u,v\n";
        for (int64_t i = 0; i < m; ++i) {
            int64_t u = 0, v = 0;
            check(gcv_graph_edge(h.g, i, &u, &v));
            out += std::to_string(u) + "," + std::to_string(v) + "\n";
        }
        out.pop_back();
        write_output(out, opts.output);
    } else {
        CString s;
        check(gcv_graph_to_edge_list(h.g, &s.s));
        write_output(s.str(), opts.output);
    }
    return 0;
}

int run_curvature(const GraphOptions& gopts, const ReportOptions& opts) {
    GraphHandle h;
    make_graph(gopts, h);
    CString s;
    check(gcv_curvature_json(h.g, opt_str(opts.alpha), &s.s));
    emit(s.str(), opts, curvature_table, curvature_csv);
    return 0;
}

int run_bounds(const GraphOptions& gopts, const ReportOptions& opts) {
    GraphHandle h;
    make_graph(gopts, h);
    CString s;
    check(gcv_bounds_json(h.g, opt_str(opts.kappa0), opt_str(opts.alpha), opts.tol, &s.s));
    emit(s.str(), opts, bounds_table, bounds_csv);
    return 0;
}

int run_spectrum(const GraphOptions& gopts, const ReportOptions& opts) {
    GraphHandle h;
    make_graph(gopts, h);
    CString s;
    check(gcv_spectrum_json(h.g, opts.tol, &s.s));
    emit(s.str(), opts, spectrum_table, spectrum_csv);
    return 0;
}

int run_audit(const GraphOptions& gopts, const ReportOptions& opts) {
    GraphHandle h;
    make_graph(gopts, h);
    CString s;
    check(gcv_audit_json(h.g, opt_str(opts.kappa0), opt_str(opts.alpha), opts.tol, &s.s));
    emit(s.str(), opts, audit_table, [](const json& j) { return bounds_csv(j["bounds"]); });
    return 0;
}

int run_verify(const ReportOptions& opts) {
    CString s;
    int all_passed = 0;
    check(gcv_verify_paper_json(&s.s, &all_passed));
    emit(s.str(), opts, verify_table, verify_csv);
    return all_passed ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Graph curvature toolkit: Lin-Lu-Yau and alpha-Ricci curvature, "
                 "integral curvature, and discrete comparison-theorem bounds"};
    app.require_subcommand(1);

    GraphOptions gopts;
    ReportOptions opts;

    CLI::App* gen = app.add_subcommand("gen", "Generate a graph and print it");
    add_graph_options(gen, gopts);
    add_format_option(gen, opts);

    CLI::App* curvature =
        app.add_subcommand("curvature", "Per-edge curvature profile (limit or fixed alpha)");
    add_graph_options(curvature, gopts);
    add_format_option(curvature, opts);
    curvature->add_option("--alpha", opts.alpha, "Idleness parameter in [0,1), e.g. 1/2");

    CLI::App* bounds =
        app.add_subcommand("bounds", "Diameter, vertex-count, and eigenvalue bounds");
    add_graph_options(bounds, gopts);
    add_format_option(bounds, opts);
    bounds->add_option("--kappa0", opts.kappa0,
                       "Curvature threshold (default: sweep distinct edge values)");
    bounds->add_option("--alpha", opts.alpha, "Also compute the finite-alpha bound variants");
    bounds->add_option("--tol", opts.tol, "Spectral gap cutoff");

    CLI::App* spectrum = app.add_subcommand("spectrum", "Normalized Laplacian eigenvalues");
    add_graph_options(spectrum, gopts);
    add_format_option(spectrum, opts);
    spectrum->add_option("--tol", opts.tol, "Spectral gap cutoff");

    CLI::App* audit =
        app.add_subcommand("audit", "Combined curvature, spectrum, and bounds report");
    add_graph_options(audit, gopts);
    add_format_option(audit, opts);
    audit->add_option("--kappa0", opts.kappa0,
                      "Curvature threshold (default: sweep distinct edge values)");
    audit->add_option("--alpha", opts.alpha, "Also compute the finite-alpha bound variants");
    audit->add_option("--tol", opts.tol, "Spectral gap cutoff");

    CLI::App* verify =
        app.add_subcommand("verify-paper", "Run the built-in verification suite");
    add_format_option(verify, opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (gen->parsed()) return run_gen(gopts, opts);
        if (curvature->parsed()) return run_curvature(gopts, opts);
        if (bounds->parsed()) return run_bounds(gopts, opts);
        if (spectrum->parsed()) return run_spectrum(gopts, opts);
        if (audit->parsed()) return run_audit(gopts, opts);
        if (verify->parsed()) return run_verify(opts);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
