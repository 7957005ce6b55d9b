// fairdom: count, enumerate and cross-check fair dominating sets.

#include "fairdom/closed_forms.hpp"
#include "fairdom/edge_list.hpp"
#include "fairdom/engine.hpp"
#include "fairdom/errors.hpp"
#include "fairdom/families.hpp"
#include "fairdom/verify.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace fairdom;
using json = nlohmann::ordered_json;

namespace {

enum Exit { kOk = 0, kUsage = 1, kCapacity = 2, kMismatch = 3 };

struct Settings {
    std::string format = "plain";
    std::string config;
    std::string data_dir;
    int workers = 0;
    int cap = 0;
    bool zero_based = false;
};

// key=value lines; '#' starts a comment. Recognised keys: cap, workers, data_dir.
void read_config(const std::string& path, EngineOptions& opts, std::string& data_dir) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open config file `" + path + "`");
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        const auto eq = line.find('=');
        const auto trim = [](std::string s) {
            const auto b = s.find_first_not_of(" \t\r");
            const auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        if (trim(line).empty()) continue;
        if (eq == std::string::npos) throw InputError(path + ":" + std::to_string(lineno) + ": expected key=value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        try {
            if (key == "cap") opts.cap = std::stoi(value);
            else if (key == "workers") opts.workers = std::stoi(value);
            else if (key == "data_dir") data_dir = value;
            else throw InputError(path + ":" + std::to_string(lineno) + ": unknown key `" + key + "`");
        } catch (const std::logic_error& e) {
            if (dynamic_cast<const InputError*>(&e)) throw;
            throw InputError(path + ":" + std::to_string(lineno) + ": bad value for `" + key + "`");
        }
    }
}

struct Source {
    std::string label;
    std::optional<FamilySpec> spec;
    std::optional<Graph> graph;
    long long order = 0;

    const Graph& get() {
        if (!graph) graph = spec->build();
        return *graph;
    }
};

Source resolve(const std::string& text, const std::string& edges) {
    if (text.empty() == edges.empty()) throw InputError("give exactly one of a family spec or --edges <file>");
    Source s;
    if (!edges.empty()) {
        s.graph = read_edge_list(edges);
        s.label = edges;
        s.order = s.graph->order();
    } else {
        s.spec = parse_family(text);
        s.label = s.spec->to_string();
        s.order = s.spec->order();
    }
    return s;
}

std::pair<int, int> parse_range(const std::string& text, const char* what) {
    try {
        const auto dots = text.find("..");
        std::size_t used = 0;
        if (dots == std::string::npos) {
            const int v = std::stoi(text, &used);
            if (used != text.size()) throw std::invalid_argument(text);
            return {v, v};
        }
        const int lo = std::stoi(text.substr(0, dots), &used);
        if (used != dots) throw std::invalid_argument(text);
        const std::string rest = text.substr(dots + 2);
        const int hi = std::stoi(rest, &used);
        if (used != rest.size()) throw std::invalid_argument(text);
        if (lo > hi) throw std::invalid_argument(text);
        return {lo, hi};
    } catch (const std::logic_error&) {
        throw InputError(std::string("bad ") + what + " range `" + text + "`; expected a or a..b");
    }
}

std::vector<int> labels(VertexSet s, int base) {
    std::vector<int> out;
    for (int v : s) out.push_back(v + base);
    return out;
}

std::string joined(const std::vector<int>& xs, const char* sep) {
    std::string out;
    for (int x : xs) out += (out.empty() ? "" : sep) + std::to_string(x);
    return out;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
}

void emit_sets(std::ostream& out, const Settings& st, const std::string& label, int size,
               const std::vector<VertexSet>& sets) {
    const int base = st.zero_based ? 0 : 1;
    if (st.format == "json") {
        json j;
        j["graph"] = label;
        j["size"] = size;
        j["count"] = std::to_string(sets.size());
        j["sets"] = json::array();
        for (auto s : sets) j["sets"].push_back(labels(s, base));
        out << j.dump(2) << '\n';
    } else if (st.format == "csv") {
        out << "size,set\n";
        for (auto s : sets) out << size << ',' << joined(labels(s, base), " ") << '\n';
    } else {
        for (auto s : sets) out << format_set(s, base) << '\n';
    }
}

int run_count(Source src, int size, const std::string& method, bool list, const Settings& st,
              const EngineOptions& opts, std::ostream& out) {
    if (size < 0 || size > src.order)
        throw InputError("--size " + std::to_string(size) + " is outside [0, " + std::to_string(src.order) + "]");
    if (list && method == "formula") throw InputError("--list needs the oracle; drop --method formula");
    std::optional<FormulaResult> formula;
    if (method != "oracle" && src.spec && !list) {
        formula = closed_form(*src.spec, size, oracle_path_counter(opts));
        if (formula && !formula->in_range()) formula.reset();
    }
    if (method == "formula" && !formula)
        throw InputError("no closed form covers " + src.label + " at size " + std::to_string(size));

    if (list) {
        const Graph& g = src.get();
        emit_sets(out, st, src.label, size, enumerate_fd(g, size, opts));
        return kOk;
    }
    Count value;
    std::string used = "oracle";
    std::string source;
    if (formula) {
        value = *formula->value;
        used = "formula";
        source = formula->source;
    } else {
        if (src.order > std::min(opts.cap, kMaxVertices)) throw CapacityError(static_cast<int>(src.order), opts.cap);
        value = count_fd(src.get(), size, opts);
    }
    if (st.format == "json") {
        json j;
        j["graph"] = src.label;
        j["order"] = src.order;
        j["size"] = size;
        j["method"] = used;
        if (!source.empty()) j["source"] = source;
        j["count"] = value.str();
        out << j.dump(2) << '\n';
    } else if (st.format == "csv") {
        out << "graph,order,size,method,count\n"
            << csv_field(src.label) << ',' << src.order << ',' << size << ',' << used << ',' << value.str() << '\n';
    } else {
        out << value.str() << '\n';
    }
    return kOk;
}

int run_poly(Source src, const Settings& st, const EngineOptions& opts, std::ostream& out) {
    FairDomPolynomial p;
    const bool closed = src.spec && src.spec->tag == FamilyTag::Complete &&
                        src.order > std::min(opts.cap, kMaxVertices);
    if (closed) p = complete_poly(static_cast<int>(src.order));
    else p = fd_polynomial(src.get(), opts);
    if (st.format == "json") {
        json j;
        j["graph"] = src.label;
        j["order"] = src.order;
        j["coefficients"] = json::object();
        for (const auto& [i, c] : p.coeffs) j["coefficients"][std::to_string(i)] = c.str();
        out << j.dump(2) << '\n';
    } else if (st.format == "csv") {
        out << "i,d_f\n";
        for (int i = 1; i <= p.order; ++i) out << i << ',' << p.coefficient(i).str() << '\n';
    } else {
        for (int i = 1; i <= p.order; ++i) out << "d_f(" << i << ")=" << p.coefficient(i).str() << '\n';
    }
    return kOk;
}

int run_fd(Source src, std::optional<int> k, const Settings& st, const EngineOptions& opts, std::ostream& out) {
    const Graph& g = src.get();
    const int value = k ? fd_k_number(g, *k, opts) : fd_number(g, opts);
    const std::string key = k ? "fd_k" : "fd";
    if (st.format == "json") {
        json j;
        j["graph"] = src.label;
        j["order"] = src.order;
        if (k) j["k"] = *k;
        j[key] = value;
        out << j.dump(2) << '\n';
    } else if (st.format == "csv") {
        out << "graph," << (k ? "k," : "") << key << '\n' << csv_field(src.label) << ',';
        if (k) out << *k << ',';
        out << value << '\n';
    } else {
        out << value << '\n';
    }
    return kOk;
}

int run_table(const std::string& name, int max_n, const Settings& st, const EngineOptions& opts,
              std::ostream& out) {
    FamilyTag tag;
    if (name == "cycle") tag = FamilyTag::Cycle;
    else if (name == "path") tag = FamilyTag::Path;
    else throw InputError("table supports `cycle` and `path`, not `" + name + "`");
    const int lo = tag == FamilyTag::Cycle ? 3 : 1;
    if (max_n < lo) throw InputError("--max-n must be at least " + std::to_string(lo) + " for " + name);
    if (max_n > std::min(opts.cap, kMaxVertices)) throw CapacityError(max_n, opts.cap);

    std::vector<std::vector<Count>> rows;
    for (int n = lo; n <= max_n; ++n) {
        const auto p = fd_polynomial(family(tag, n).build(), opts);
        std::vector<Count> row;
        for (int j = 1; j <= n; ++j) row.push_back(p.coefficient(j));
        rows.push_back(std::move(row));
    }
    if (st.format == "json") {
        json j;
        j["family"] = name;
        j["max_n"] = max_n;
        j["rows"] = json::array();
        for (std::size_t r = 0; r < rows.size(); ++r) {
            json row;
            row["n"] = lo + static_cast<int>(r);
            row["values"] = json::array();
            for (const auto& c : rows[r]) row["values"].push_back(c.str());
            j["rows"].push_back(row);
        }
        out << j.dump(2) << '\n';
        return kOk;
    }
    const char sep = st.format == "csv" ? ',' : '\t';
    out << (st.format == "csv" ? "n" : "n\\j");
    for (int j = 1; j <= max_n; ++j) out << sep << j;
    out << '\n';
    for (std::size_t r = 0; r < rows.size(); ++r) {
        out << lo + static_cast<int>(r);
        for (const auto& c : rows[r]) out << sep << c.str();
        if (st.format == "csv")
            for (std::size_t pad = rows[r].size(); pad < static_cast<std::size_t>(max_n); ++pad) out << sep;
        out << '\n';
    }
    return kOk;
}

struct VerifyArgs {
    std::string family;
    std::string n_range;
    std::string k_range;
    std::string errata;
    std::string emit_errata;
    std::string report;
};

int run_verify(const VerifyArgs& a, const Settings& st, const EngineOptions& opts, std::ostream& out) {
    const std::string dir = st.data_dir.empty() ? default_data_dir() : st.data_dir;
    const PublishedTables tables = load_published_tables(dir);

    std::vector<std::pair<FamilyTag, SweepRange>> sweeps;
    if (a.family == "all") {
        if (!a.n_range.empty() || !a.k_range.empty()) throw InputError("`verify all` uses the default ranges");
        sweeps = default_sweeps();
    } else {
        const FamilyTag tag = family_tag_from_name(a.family);
        SweepRange range;
        bool known = false;
        for (const auto& [t, r] : default_sweeps())
            if (t == tag) range = r, known = true;
        if (!known) throw InputError("verify does not cover family `" + a.family + "`");
        if (!a.n_range.empty()) std::tie(range.n_lo, range.n_hi) = parse_range(a.n_range, "--n");
        if (!a.k_range.empty()) {
            auto [lo, hi] = parse_range(a.k_range, "--k");
            range.k_lo = lo;
            range.k_hi = hi;
        }
        sweeps.push_back({tag, range});
    }
    std::vector<VerifyRow> rows;
    for (const auto& [tag, range] : sweeps) {
        auto part = verify_family(tag, range, tables, opts);
        rows.insert(rows.end(), part.begin(), part.end());
    }

    if (!a.emit_errata.empty()) {
        std::ofstream f(a.emit_errata);
        if (!f) throw InputError("cannot write `" + a.emit_errata + "`");
        write_errata(f, errata_of(rows));
    }
    const std::set<ErratumKey> expected = load_expected_errata(a.errata.empty() ? dir + "/expected_errata.tsv" : a.errata);
    const ErrataReport report = errata_report(rows, expected);
    if (!a.report.empty()) {
        std::ofstream f(a.report);
        if (!f) throw InputError("cannot write `" + a.report + "`");
        f << report.structured;
    }

    if (st.format == "json") {
        json j;
        j["rows"] = json::array();
        const auto opt = [](const std::optional<Count>& c) { return c ? json(c->str()) : json(nullptr); };
        for (const auto& r : rows) {
            json row;
            row["family"] = family_name(r.family);
            row["n"] = r.n;
            row["k"] = r.k;
            row["secondary"] = r.secondary;
            row["oracle"] = opt(r.oracle);
            row["closed_form"] = opt(r.closed_form);
            row["closed_form_source"] = r.closed_form_source;
            row["published_table"] = opt(r.published_table);
            row["published_literal"] = opt(r.published_literal);
            row["published_literal_failure"] = r.published_literal_failure;
            row["status"] = status_name(r.status);
            row["skip_reason"] = r.skip_reason;
            row["failing"] = r.failing;
            row["notes"] = r.notes;
            j["rows"].push_back(row);
        }
        const auto keys = [](const std::vector<ErratumKey>& ks) {
            json arr = json::array();
            for (const auto& k : ks) arr.push_back(format_erratum(k));
            return arr;
        };
        j["unexpected"] = keys(report.unexpected);
        j["missing"] = keys(report.missing);
        j["consistent"] = report.consistent();
        out << j.dump(2) << '\n';
    } else if (st.format == "csv") {
        std::istringstream lines(report.structured);
        std::string line;
        while (std::getline(lines, line)) {
            std::istringstream cells(line);
            std::string cell;
            bool first = true;
            while (std::getline(cells, cell, '\t')) {
                out << (first ? "" : ",") << csv_field(cell);
                first = false;
            }
            out << '\n';
        }
    } else {
        out << report.summary;
    }
    return report.consistent() ? kOk : kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Count and cross-check fair dominating sets of small graphs"};
    app.require_subcommand(1);
    app.fallthrough();
    Settings st;
    app.add_option("--format", st.format, "Output format")->check(CLI::IsMember({"plain", "json", "csv"}));
    app.add_option("--config", st.config, "key=value config file (cap, workers, data_dir)");
    app.add_option("--workers", st.workers, "Search worker threads")->check(CLI::Range(1, 256));
    app.add_option("--cap", st.cap, "Largest order the exhaustive search accepts")->check(CLI::Range(1, 64));
    app.add_flag("--zero-based", st.zero_based, "Print vertex labels from 0 instead of 1");
    app.add_option("--data-dir", st.data_dir, "Directory with the reference tables and expected errata");

    std::string graph_text, edges, method = "auto";
    int size = 0;
    bool list = false;
    std::optional<int> fd_k;
    std::string table_family;
    int max_n = 0;
    VerifyArgs va;

    const auto graph_opts = [&](CLI::App* sub) {
        sub->add_option("graph", graph_text, "Family spec such as cycle:9, kmn:2,3, corona(path:3,complete:1)");
        sub->add_option("--edges", edges, "Edge-list file (header `n <count>`, 1-based endpoints)");
    };
    auto* count = app.add_subcommand("count", "d_f(G, size)");
    graph_opts(count);
    count->add_option("--size", size, "Set cardinality")->required();
    count->add_option("--method", method, "oracle, formula or auto")->check(CLI::IsMember({"oracle", "formula", "auto"}));
    count->add_flag("--list", list, "List the sets instead of counting");

    auto* enumerate = app.add_subcommand("enum", "List the fair dominating sets of one size");
    graph_opts(enumerate);
    enumerate->add_option("--size", size, "Set cardinality")->required();

    auto* poly = app.add_subcommand("poly", "Coefficients of D_f(G, x)");
    graph_opts(poly);

    auto* fd = app.add_subcommand("fd", "fd(G), or fd_k(G) with --k");
    graph_opts(fd);
    fd->add_option("--k", fd_k, "Fairness constant");

    auto* table = app.add_subcommand("table", "d_f by order and size for cycles or paths");
    table->add_option("family", table_family, "cycle or path")->required();
    table->add_option("--max-n", max_n, "Largest order")->required();

    auto* verify = app.add_subcommand("verify", "Compare oracle, closed forms and reference tables");
    verify->add_option("family", va.family, "cycle, path, knn, friendship, cactus, complete or all")->required();
    verify->add_option("--n", va.n_range, "Order range a..b");
    verify->add_option("--k", va.k_range, "Size range a..b");
    verify->add_option("--errata", va.errata, "Expected-errata list");
    verify->add_option("--emit-errata", va.emit_errata, "Write the errata found by this run");
    verify->add_option("--report", va.report, "Write the structured report here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    std::ostringstream out;
    try {
        EngineOptions opts;
        std::string config_dir;
        std::string config = st.config;
        if (config.empty())
            if (const char* env = std::getenv("FAIRDOM_CONFIG")) config = env;
        if (!config.empty()) read_config(config, opts, config_dir);
        if (st.data_dir.empty()) st.data_dir = config_dir;
        if (st.cap) opts.cap = st.cap;
        if (st.workers) opts.workers = st.workers;

        int code = kOk;
        if (*count) code = run_count(resolve(graph_text, edges), size, method, list, st, opts, out);
        else if (*enumerate) code = run_count(resolve(graph_text, edges), size, "oracle", true, st, opts, out);
        else if (*poly) code = run_poly(resolve(graph_text, edges), st, opts, out);
        else if (*fd) code = run_fd(resolve(graph_text, edges), fd_k, st, opts, out);
        else if (*table) code = run_table(table_family, max_n, st, opts, out);
        else if (*verify) code = run_verify(va, st, opts, out);
        std::cout << out.str() << std::flush;
        return code;
    } catch (const CapacityError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kCapacity;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
}
