#ifndef BFC_OPOLY_HPP
#define BFC_OPOLY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bfc/boolfun.hpp"
#include "bfc/gf2m.hpp"

namespace bfc {

enum class OPolyMode { Definition, TwoToOne, Both };

struct OPolyWitness {
    elem s_or_u = 0;            // the slope/shift that failed
    std::vector<elem> colliding; // points mapped to the same value
    std::string what;            // which sub-check failed
};

struct OPolyReport {
    std::string family;
    unsigned m = 0;
    bool is_permutation = false;
    std::optional<bool> definition_test; // set when the mode ran it
    std::optional<bool> two_to_one_test;
    bool verdict = false;
    std::optional<OPolyWitness> witness;
};

bool is_permutation(const FieldSpec& spec, const elem_fn& f);

// Definition mode: f(0)=0, f a permutation, and every secant map
// f_s(x) = (f(x+s)+f(s)) x^{2^m-2} a permutation. 2-to-1 mode: f(0)=0 and
// f(x)+ux 2-to-1 for every u != 0. The two are equivalent; Both runs both
// and asserts agreement. Failures are data (witness captured), not errors.
OPolyReport is_o_polynomial(const FieldSpec& spec, const elem_fn& f,
                            OPolyMode mode = OPolyMode::TwoToOne,
                            const std::string& family = "");

struct ClosureTransforms {
    elem_fn inverse;   // compositional inverse (exhaustive table inversion)
    elem_fn fbar;      // x f(x^{2^m-2})
    elem_fn unit_shift; // f(x+1) + f(1)
};

// Theorem-closure transforms. inverse throws for a non-permutation.
ClosureTransforms closure_transforms(const FieldSpec& spec, const elem_fn& f);
elem_fn frobenius_twist(const FieldSpec& spec, const elem_fn& f, unsigned j);

struct OrbitEntry {
    std::string label;       // "1/k", "1-k", ...
    std::optional<std::uint32_t> exponent; // absent when the denominator is not invertible
};

// {1/k, 1-k, 1/(1-k), k/(k-1), (k-1)/k} mod 2^m-1; non-invertible
// denominators are reported as inapplicable entries.
std::vector<OrbitEntry> exponent_orbit(const FieldSpec& spec, std::int64_t k);

} // namespace bfc

#endif
