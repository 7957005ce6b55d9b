#include "fairdom/verify.hpp"

#include "fairdom/combinatorics.hpp"
#include "fairdom/errors.hpp"

#include <boost/crc.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <sstream>

#ifndef FAIRDOM_DATA_DIR
#define FAIRDOM_DATA_DIR "data"
#endif

namespace fairdom {

std::string default_data_dir() { return FAIRDOM_DATA_DIR; }

namespace {

constexpr const char* kCycleTable = "published_cycles.tsv";
constexpr const char* kPathTable = "published_paths.tsv";
constexpr const char* kChecksums = "published_tables.crc32";

std::string show(const std::optional<Count>& c) { return c ? c->str() : "-"; }

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (const auto& p : parts) {
        if (!out.empty()) out += sep;
        out += p;
    }
    return out;
}

std::map<int, std::vector<Count>> read_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open table file `" + path + "`");
    return parse_table(in);
}

}  // namespace

std::map<int, std::vector<Count>> parse_table(std::istream& in) {
    std::map<int, std::vector<Count>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream fields(line);
        int n = 0;
        if (!(fields >> n)) throw InputError("table row without a leading n: `" + line + "`");
        std::vector<Count> values;
        std::string cell;
        while (fields >> cell) values.emplace_back(cell);
        if (static_cast<int>(values.size()) != n)
            throw InputError("table row n=" + std::to_string(n) + " has " + std::to_string(values.size()) +
                             " entries, expected " + std::to_string(n));
        rows[n] = std::move(values);
    }
    return rows;
}

std::string file_crc32(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open `" + path + "`");
    const std::string bytes{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    boost::crc_32_type crc;
    crc.process_bytes(bytes.data(), bytes.size());
    char hex[9];
    std::snprintf(hex, sizeof hex, "%08x", crc.checksum());
    return hex;
}

PublishedTables load_published_tables(const std::string& data_dir) {
    std::ifstream sums(data_dir + "/" + kChecksums);
    if (!sums) throw InputError("cannot open checksum list in `" + data_dir + "`");
    std::map<std::string, std::string> expected;
    std::string crc, name;
    while (sums >> crc >> name) expected[name] = crc;
    for (const char* file : {kCycleTable, kPathTable}) {
        const std::string actual = file_crc32(data_dir + "/" + file);
        auto it = expected.find(file);
        if (it == expected.end() || it->second != actual)
            throw InputError(std::string("checksum mismatch for ") + file + ": file has " + actual);
    }
    PublishedTables t;
    t.cycles = read_table(data_dir + "/" + kCycleTable);
    t.paths = read_table(data_dir + "/" + kPathTable);
    return t;
}

std::optional<Count> PublishedTables::lookup(FamilyTag family, int n, int j) const {
    const std::map<int, std::vector<Count>>* table = nullptr;
    if (family == FamilyTag::Cycle) table = &cycles;
    if (family == FamilyTag::Path) table = &paths;
    if (!table) return std::nullopt;
    auto it = table->find(n);
    if (it == table->end() || j < 1 || j > static_cast<int>(it->second.size())) return std::nullopt;
    return it->second[static_cast<std::size_t>(j - 1)];
}

std::string status_name(VerifyStatus s) {
    switch (s) {
        case VerifyStatus::AllAgree: return "AllAgree";
        case VerifyStatus::FormulaErratum: return "FormulaErratum";
        case VerifyStatus::TableErratum: return "TableErratum";
        case VerifyStatus::FormulaAndTableConflict: return "FormulaAndTableConflict";
        case VerifyStatus::Skipped: return "Skipped";
    }
    return "?";
}

VerifyStatus status_from_name(const std::string& name) {
    for (auto s : {VerifyStatus::AllAgree, VerifyStatus::FormulaErratum, VerifyStatus::TableErratum,
                   VerifyStatus::FormulaAndTableConflict, VerifyStatus::Skipped})
        if (status_name(s) == name) return s;
    throw InputError("unknown verify status `" + name + "`");
}

void classify_row(VerifyRow& row) {
    row.failing.clear();
    if (!row.skip_reason.empty() || !row.oracle) {
        row.status = VerifyStatus::Skipped;
        if (row.skip_reason.empty()) row.skip_reason = "no oracle value";
        return;
    }
    const Count& truth = *row.oracle;
    bool any_claim = false;
    if (row.closed_form) {
        any_claim = true;
        if (*row.closed_form != truth) row.failing.push_back(row.closed_form_source);
    }
    if (row.published_literal || !row.published_literal_failure.empty()) {
        any_claim = true;
        if (!row.published_literal || *row.published_literal != truth) row.failing.push_back("published-literal");
    }
    const bool formula_bad = !row.failing.empty();
    bool table_bad = false;
    if (row.published_table) {
        any_claim = true;
        table_bad = *row.published_table != truth;
        if (table_bad) row.failing.push_back("table");
    }
    if (formula_bad && table_bad) row.status = VerifyStatus::FormulaAndTableConflict;
    else if (formula_bad) row.status = VerifyStatus::FormulaErratum;
    else if (table_bad) row.status = VerifyStatus::TableErratum;
    else if (any_claim) row.status = VerifyStatus::AllAgree;
    else {
        row.status = VerifyStatus::Skipped;
        row.skip_reason = "no claim";
    }
}

namespace {

// Alternative readings of the published cycle sums, surfaced when they change the value.
std::string cycle_reading_notes(int n, int k, const std::optional<Count>& literal) {
    if (k >= n) return {};
    std::vector<std::string> notes;
    if ((n - k) % 2 == 0) {
        CycleFormulaOptions zeros;
        zeros.b_min_part = 0;
        const auto strict = published_cycle_formula(n, k, CycleFamily::B);
        const auto loose = published_cycle_formula(n, k, CycleFamily::B, zeros);
        if (loose.family_size != strict.family_size)
            notes.push_back("B with zero parts: n|B|=" +
                            (loose.value ? loose.value->str() : "non-integer (" + loose.failure + ")") +
                            " instead of " + show(strict.value));
    }
    CycleFormulaOptions literal_parts;
    literal_parts.reading = MultinomialReading::PartsLiteral;
    const bool wide = n <= 2 * k;
    const bool even = (n - k) % 2 == 0;
    Count total = 0;
    std::string failure;
    for (auto [family, used] : {std::pair{CycleFamily::A, wide}, std::pair{CycleFamily::B, even}}) {
        if (!used) continue;
        const auto v = published_cycle_formula(n, k, family, literal_parts);
        if (!v.value) {
            failure = v.failure;
            break;
        }
        total += *v.value;
    }
    if (!failure.empty()) notes.push_back("parts-as-multinomial reading fails: " + failure);
    else if (literal && total != *literal) notes.push_back("parts-as-multinomial reading gives " + total.str());
    return join(notes, "; ");
}

}  // namespace

std::vector<VerifyRow> verify_family(FamilyTag family, const SweepRange& range, const PublishedTables& tables,
                                     const EngineOptions& opts) {
    std::vector<VerifyRow> rows;
    const PathCounter paths = oracle_path_counter(opts);
    for (int n = range.n_lo; n <= range.n_hi; ++n) {
        const FamilySpec spec = fairdom::family(family, n);
        const int order = static_cast<int>(spec.order());
        const int k_lo = range.k_lo.value_or(1);
        const int k_hi = range.k_hi.value_or(order);
        std::optional<FairDomPolynomial> poly;
        const bool over_cap = order > std::min(opts.cap, kMaxVertices);
        if (!over_cap) poly = fd_polynomial(spec.build(), opts);
        for (int k = k_lo; k <= k_hi; ++k) {
            VerifyRow row;
            row.family = family;
            row.n = n;
            row.k = k;
            if (over_cap) {
                row.skip_reason = "cap";
                classify_row(row);
                rows.push_back(std::move(row));
                continue;
            }
            row.oracle = poly->coefficient(k);
            row.published_table = tables.lookup(family, n, k);
            auto statements = family_statements(family, n, k, paths);
            std::vector<VerifyRow> secondary;
            for (std::size_t i = 0; i < statements.size(); ++i) {
                auto& s = statements[i];
                VerifyRow& target = i == 0 ? row : secondary.emplace_back();
                if (i > 0) {
                    target.family = family;
                    target.n = n;
                    target.k = k;
                    target.secondary = true;
                    target.oracle = row.oracle;
                } else {
                    target.published_literal = s.published_literal;
                    target.published_literal_failure = s.published_literal_failure;
                }
                target.closed_form = s.value;
                target.closed_form_source = s.source;
                if (s.oracle_dependent) target.notes = s.source + " uses an exhaustive path count";
            }
            if (family == FamilyTag::Cycle) {
                const std::string more = cycle_reading_notes(n, k, row.published_literal);
                if (!more.empty()) row.notes += (row.notes.empty() ? "" : "; ") + more;
            }
            classify_row(row);
            rows.push_back(std::move(row));
            for (auto& r : secondary) {
                classify_row(r);
                rows.push_back(std::move(r));
            }
        }
    }
    return rows;
}

std::vector<std::pair<FamilyTag, SweepRange>> default_sweeps() {
    return {
        {FamilyTag::Cycle, {3, 14, {}, {}}},      {FamilyTag::Path, {1, 14, {}, {}}},
        {FamilyTag::CompleteBipartite, {1, 6, {}, {}}}, {FamilyTag::Friendship, {1, 6, {}, {}}},
        {FamilyTag::TriangularCactus, {1, 6, {}, {}}},  {FamilyTag::Complete, {1, 12, {}, {}}},
    };
}

std::string format_erratum(const ErratumKey& e) {
    return e.family + "\t" + std::to_string(e.n) + "\t" + std::to_string(e.k) + "\t" + e.status + "\t" + e.failing;
}

std::set<ErratumKey> parse_errata(std::istream& in) {
    std::set<ErratumKey> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream fields(line);
        ErratumKey e;
        std::string n, k;
        if (!std::getline(fields, e.family, '\t') || !std::getline(fields, n, '\t') ||
            !std::getline(fields, k, '\t') || !std::getline(fields, e.status, '\t') ||
            !std::getline(fields, e.failing))
            throw InputError("malformed errata line `" + line + "`");
        e.n = std::stoi(n);
        e.k = std::stoi(k);
        status_from_name(e.status);
        out.insert(e);
    }
    return out;
}

std::set<ErratumKey> load_expected_errata(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open expected-errata list `" + path + "`");
    return parse_errata(in);
}

void write_errata(std::ostream& out, const std::set<ErratumKey>& errata) {
    out << "# family\tn\tk\tstatus\tfailing sources\n";
    for (const auto& e : errata) out << format_erratum(e) << '\n';
}

std::set<ErratumKey> errata_of(const std::vector<VerifyRow>& rows) {
    std::set<ErratumKey> out;
    for (const auto& r : rows) {
        if (r.status == VerifyStatus::AllAgree || r.status == VerifyStatus::Skipped) continue;
        out.insert({family_name(r.family), r.n, r.k, status_name(r.status), join(r.failing, ",")});
    }
    return out;
}

std::string structured_header() {
    return "family\tn\tk\toracle\tclosed_form\tclosed_form_source\tpublished_table\tpublished_literal\tstatus\tfailing\tnotes";
}

std::string structured_line(const VerifyRow& row) {
    std::string literal = show(row.published_literal);
    if (!row.published_literal && !row.published_literal_failure.empty()) literal = "fail";
    std::string status = status_name(row.status);
    if (row.status == VerifyStatus::Skipped) status += "(" + row.skip_reason + ")";
    const auto dash = [](const std::string& s) { return s.empty() ? std::string("-") : s; };
    return family_name(row.family) + "\t" + std::to_string(row.n) + "\t" + std::to_string(row.k) + "\t" +
           show(row.oracle) + "\t" + show(row.closed_form) + "\t" + dash(row.closed_form_source) + "\t" +
           show(row.published_table) + "\t" + literal + "\t" + status + "\t" + dash(join(row.failing, ",")) + "\t" +
           dash(row.notes);
}

ErrataReport errata_report(const std::vector<VerifyRow>& rows, const std::set<ErratumKey>& expected) {
    ErrataReport report;
    std::ostringstream structured;
    if (!rows.empty()) structured << structured_header() << '\n';
    for (const auto& r : rows) structured << structured_line(r) << '\n';
    report.structured = structured.str();

    const std::set<ErratumKey> found = errata_of(rows);
    std::set<std::tuple<std::string, int, int>> swept;
    for (const auto& r : rows)
        if (r.status != VerifyStatus::Skipped || r.skip_reason == "no claim")
            swept.insert({family_name(r.family), r.n, r.k});
    for (const auto& e : found)
        if (!expected.count(e)) report.unexpected.push_back(e);
    for (const auto& e : expected)
        if (swept.count({e.family, e.n, e.k}) && !found.count(e)) report.missing.push_back(e);

    if (rows.empty()) return report;

    std::map<VerifyStatus, int> tally;
    for (const auto& r : rows) ++tally[r.status];
    std::ostringstream s;
    s << "verify: " << rows.size() << " rows (" << tally[VerifyStatus::AllAgree] << " agree, "
      << tally[VerifyStatus::FormulaErratum] << " formula errata, " << tally[VerifyStatus::TableErratum]
      << " table errata, " << tally[VerifyStatus::FormulaAndTableConflict] << " formula+table conflicts, "
      << tally[VerifyStatus::Skipped] << " skipped)\n";
    for (auto status : {VerifyStatus::FormulaErratum, VerifyStatus::TableErratum,
                        VerifyStatus::FormulaAndTableConflict}) {
        if (tally[status] == 0) continue;
        s << status_name(status) << ":\n";
        for (const auto& r : rows) {
            if (r.status != status) continue;
            s << "  " << family_name(r.family) << " n=" << r.n << " k=" << r.k << "  oracle=" << show(r.oracle);
            for (const auto& f : r.failing) {
                std::optional<Count> claimed;
                if (f == "table") claimed = r.published_table;
                else if (f == "published-literal") claimed = r.published_literal;
                else if (f == r.closed_form_source) claimed = r.closed_form;
                s << "  " << f << "=" << show(claimed);
            }
            s << '\n';
        }
    }
    if (report.consistent()) {
        s << "expected-errata check: consistent\n";
    } else {
        s << "expected-errata check: MISMATCH\n";
        for (const auto& e : report.unexpected) s << "  unexpected: " << format_erratum(e) << '\n';
        for (const auto& e : report.missing) s << "  missing:    " << format_erratum(e) << '\n';
    }
    report.summary = s.str();
    return report;
}

}  // namespace fairdom
