#ifndef BFC_CODES_HPP
#define BFC_CODES_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "bfc/boolfun.hpp"
#include "bfc/defining_set.hpp"
#include "bfc/gf2m.hpp"

namespace bfc {

/// Exact parameters and weight distribution of a defining-set code C_D.
struct CodeSummary {
    std::uint64_t n = 0;       // length
    unsigned k = 0;            // dimension
    std::uint64_t d_min = 0;   // minimum nonzero weight
    std::uint64_t zero_mult = 1; // e: number of x with c_x = 0
    std::map<std::uint64_t, std::uint64_t> weight_distribution; // w -> A_w, incl A_0 = 1

    unsigned distinct_nonzero_weights() const {
        unsigned t = 0;
        for (auto& [w, a] : weight_distribution)
            if (w > 0 && a > 0) ++t;
        return t;
    }
    std::uint64_t codeword_count() const {
        std::uint64_t s = 0;
        for (auto& [w, a] : weight_distribution) s += a;
        return s;
    }
};

bool operator==(const CodeSummary& a, const CodeSummary& b);

/// A per-field cache of the hyperplane indicators H1(x) = {y : Tr(xy) = 1},
/// which turn the codeword-weight sweep into AND+popcount passes. Built on
/// demand for m <= 14; larger fields fall back to iterating over D.
class CodeEngine {
public:
    explicit CodeEngine(const FieldSpec& spec);

    const FieldSpec& field() const { return *spec_; }

    // wt(c_x) = |{d in D : Tr(xd) = 1}| for every x, folded by the
    // zero-codeword multiplicity e; exact integers throughout.
    CodeSummary code_from_defining_set(const DefiningSet& D) const;

    // Same summary through the Walsh route: weights (2 n_f + fhat(w))/4.
    CodeSummary weight_dist_via_walsh(const TruthTable& tt) const;

private:
    const FieldSpec* spec_;
    std::vector<std::vector<std::uint64_t>> h1_; // h1_[x] bitset, empty if m too large
};

// One-shot helpers when no engine reuse is needed.
CodeSummary code_from_defining_set(const FieldSpec& spec, const DefiningSet& D);
CodeSummary weight_dist_via_walsh(const FieldSpec& spec, const TruthTable& tt);

// Smallest w <= t_max with w linearly dependent coordinates of C_D's
// parity-check view (w=1: 0 in D; w=3: a^b^c=0 in D; w=4 likewise).
// Returns 0 when no dependency of size <= t_max exists (i.e. "> t_max").
unsigned dual_distance_probe(const DefiningSet& D, unsigned t_max);

// C together with its complements: k+1 and A_w + A_{n-w} unless the all-one
// word is already present.
CodeSummary expand_complement(const CodeSummary& c);

struct ExpectedTable {
    std::string source;
    std::map<std::uint64_t, std::uint64_t> rows; // weight -> multiplicity, incl 0 -> 1
    std::string note;
};

// Generators for every closed-form weight table. All throw
// std::invalid_argument on inapplicable parameters (named condition);
// no floating point, square roots are pre-validated integers.
ExpectedTable expected_bent_code(unsigned m, std::uint64_t n_f);
ExpectedTable expected_semibent_code(unsigned m, std::uint64_t n_f);
ExpectedTable expected_quadratic_code(unsigned m, unsigned r_f, std::int64_t fhat0);
ExpectedTable expected_three_weight_code(unsigned m, unsigned e);
ExpectedTable expected_hyperoval_code(unsigned m);        // three-weight, length 2^{m-1}
ExpectedTable expected_extended_hyperoval_code(unsigned m);
ExpectedTable expected_j170_code(unsigned m);
ExpectedTable expected_j171_code(unsigned m);
ExpectedTable expected_dds_code(unsigned m);              // conjectured Singer-set code
ExpectedTable expected_wdx_code(std::uint64_t r, std::uint64_t mr);
ExpectedTable expected_difference_set_code(unsigned m, std::uint64_t n, std::uint64_t lambda);
ExpectedTable expected_four_weight_code(unsigned m, unsigned spectrum_case);

// Weight set (no multiplicities) allowed for a relative-difference-set code.
std::vector<std::uint64_t> relative_difference_set_weights(std::uint64_t n, std::uint64_t lambda,
                                                           std::uint64_t ell);

bool matches(const CodeSummary& c, const ExpectedTable& t);

} // namespace bfc

#endif
