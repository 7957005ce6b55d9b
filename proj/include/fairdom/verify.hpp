#pragma once

#include "fairdom/closed_forms.hpp"
#include "fairdom/count.hpp"
#include "fairdom/engine.hpp"
#include "fairdom/families.hpp"

#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace fairdom {

/// Directory holding the transcribed tables and the expected-errata list.
std::string default_data_dir();

/// Published tables of d_f(C_n, j) (3 <= n <= 12) and d_f(P_n, j) (1 <= n <= 12).
/// Comparison targets only; never a source of expected values.
struct PublishedTables {
    std::map<int, std::vector<Count>> cycles;  // n -> values for j = 1..n
    std::map<int, std::vector<Count>> paths;

    std::optional<Count> lookup(FamilyTag family, int n, int j) const;
};

/// Loads both table files and checks them against the committed CRC-32 list.
/// Throws InputError on a malformed file or a checksum mismatch.
PublishedTables load_published_tables(const std::string& data_dir = default_data_dir());

/// One table file: "n v_1 ... v_n" rows, '#' comments.
std::map<int, std::vector<Count>> parse_table(std::istream& in);

/// CRC-32 (IEEE) of a file's bytes, as 8 lowercase hex digits.
std::string file_crc32(const std::string& path);

enum class VerifyStatus { AllAgree, FormulaErratum, TableErratum, FormulaAndTableConflict, Skipped };
std::string status_name(VerifyStatus s);
VerifyStatus status_from_name(const std::string& name);

/// One comparison of a single published statement at one (family, n, k) cell.
/// The oracle is ground truth; every other column is a claim checked against it.
/// The preferred statement for a cell carries the table and the literal
/// summation as well; further statements covering the same cell get rows of
/// their own with only closed_form set.
struct VerifyRow {
    FamilyTag family = FamilyTag::Cycle;
    int n = 0;
    int k = 0;
    bool secondary = false;
    std::optional<Count> oracle;
    std::optional<Count> closed_form;
    std::string closed_form_source;
    std::optional<Count> published_table;
    std::optional<Count> published_literal;
    std::string published_literal_failure;
    VerifyStatus status = VerifyStatus::Skipped;
    std::string skip_reason;
    std::vector<std::string> failing;  // sources disagreeing with the oracle; "table" for the table
    std::string notes;
};

/// Recomputes status and failing sources from the value slots.
void classify_row(VerifyRow& row);

struct SweepRange {
    int n_lo = 0;
    int n_hi = 0;
    std::optional<int> k_lo;  // default 1
    std::optional<int> k_hi;  // default: order of the instance
};

/// One primary row per (n, k), followed by its secondary rows; ordered by (n, k).
/// Instances above the cap become Skipped rows.
std::vector<VerifyRow> verify_family(FamilyTag family, const SweepRange& range, const PublishedTables& tables,
                                     const EngineOptions& opts = {});

/// Default sweep ranges used for the committed errata list.
std::vector<std::pair<FamilyTag, SweepRange>> default_sweeps();

struct ErratumKey {
    std::string family;
    int n = 0;
    int k = 0;
    std::string status;
    std::string failing;  // comma-joined sources

    auto operator<=>(const ErratumKey&) const = default;
};
std::string format_erratum(const ErratumKey& e);

std::set<ErratumKey> parse_errata(std::istream& in);
std::set<ErratumKey> load_expected_errata(const std::string& path = default_data_dir() + "/expected_errata.tsv");
void write_errata(std::ostream& out, const std::set<ErratumKey>& errata);

/// Discrepancy rows (anything but AllAgree / Skipped) as keys.
std::set<ErratumKey> errata_of(const std::vector<VerifyRow>& rows);

struct ErrataReport {
    std::string summary;     // human-readable
    std::string structured;  // one tab-separated row per line, fixed field order
    std::vector<ErratumKey> unexpected;  // discrepancies not in the expected list
    std::vector<ErratumKey> missing;     // expected entries inside the sweep that did not show up
    bool consistent() const { return unexpected.empty() && missing.empty(); }
};

/// Only expected entries whose (family, n, k) appears as a non-skipped row are
/// checked, so partial sweeps compare against the matching slice of the list.
ErrataReport errata_report(const std::vector<VerifyRow>& rows, const std::set<ErratumKey>& expected);

/// Header line of the structured report.
std::string structured_header();
std::string structured_line(const VerifyRow& row);

}  // namespace fairdom
