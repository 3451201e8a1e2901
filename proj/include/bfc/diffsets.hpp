#ifndef BFC_DIFFSETS_HPP
#define BFC_DIFFSETS_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "bfc/defining_set.hpp"
#include "bfc/gf2m.hpp"

namespace bfc {

enum class GroupKind { Additive, Multiplicative, Relative };

struct DiffSetReport {
    GroupKind group = GroupKind::Additive;
    unsigned m = 0;
    std::uint64_t v = 0;   // group order
    std::uint64_t k = 0;   // |D|
    std::uint64_t ell = 0; // |N|, relative case only
    std::optional<std::uint64_t> lambda; // inferred when the count is constant
    bool verdict = false;
    std::optional<elem> counterexample;  // a group element with the wrong count
    std::optional<std::uint64_t> counterexample_count;
    bool character_check = true; // relative case: |chi_b(D)|^2 in {n, n - lambda*ell}

    std::string group_name() const;
};

// diff_D(x) = |D AND (D + x)| in the additive group.
std::uint64_t difference_function(const DefiningSet& D, elem x);

DiffSetReport is_additive_difference_set(const FieldSpec& spec, const DefiningSet& D);

// Differences are quotients d1 d2^{-1}, counted in the log domain Z_{2^m-1}.
// Throws std::invalid_argument if 0 is in D.
DiffSetReport is_multiplicative_difference_set(const FieldSpec& spec, const DefiningSet& D);

// N must be an additive subgroup; differences must avoid N \ {0} and cover
// everything outside N exactly lambda times. The character bound is
// cross-checked through the Walsh engine (chi_b(D) = -fhat(b)/2 for b != 0).
DiffSetReport is_relative_difference_set(const FieldSpec& spec, const DefiningSet& D,
                                         const DefiningSet& N);

} // namespace bfc

#endif
