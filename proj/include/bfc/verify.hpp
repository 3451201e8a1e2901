#ifndef BFC_VERIFY_HPP
#define BFC_VERIFY_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bfc/codes.hpp"
#include "bfc/gf2m.hpp"

namespace bfc {

enum class ClaimKind { Theorem, Corollary, Conjecture, ReportMode };

enum class Verdict { Match, Mismatch, Inapplicable, ReportOnly, Skipped };

std::string to_string(ClaimKind k);
std::string to_string(Verdict v);

struct VerificationReport {
    std::string id;
    ClaimKind kind = ClaimKind::Theorem;
    unsigned m = 0;
    std::string params;
    Verdict verdict = Verdict::Inapplicable;
    std::string detail; // findings, interpretation flags, near-miss notes
    std::optional<CodeSummary> actual;
    std::map<std::uint64_t, std::uint64_t> expected_rows;
    std::vector<std::string> diffs; // row-level differences on mismatch
    std::int64_t millis = 0;
};

struct Claim {
    std::string id;
    ClaimKind kind;
    std::string statement; // plain-language description for the manifest
    std::function<bool(unsigned m)> applicable;
    unsigned budget_max_m; // larger applicable m are reported as Skipped
    // Runs the check at one m. Fills verdict/detail/actual/expected/diffs.
    std::function<void(const FieldSpec&, VerificationReport&)> run;
};

const std::vector<Claim>& claim_registry();
const Claim* find_claim(const std::string& id); // nullptr if unknown

VerificationReport run_claim(const std::string& id, unsigned m);

struct SuiteFilter {
    std::string id_glob = "*";
    unsigned m_min = 1;
    unsigned m_max = 0; // m_max < m_min yields the empty list
    std::optional<ClaimKind> kind;
};

// Deterministic order: registry order, then ascending m. Only applicable
// (claim, m) pairs produce reports; over-budget pairs get Verdict::Skipped.
std::vector<VerificationReport> run_suite(const SuiteFilter& filter);

bool glob_match(const std::string& pattern, const std::string& text);

// true iff any kind==Theorem/Corollary report is a mismatch (build-failing).
bool has_theorem_mismatch(const std::vector<VerificationReport>& reports);

} // namespace bfc

#endif
