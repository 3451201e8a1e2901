#ifndef BFC_FUNLIB_HPP
#define BFC_FUNLIB_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bfc/boolfun.hpp"
#include "bfc/defining_set.hpp"
#include "bfc/gf2m.hpp"

namespace bfc {

/// Sparse polynomial over GF(2^m). Evaluation convention: the x^0 term
/// always contributes its coefficient; a term x^e with e > 0 contributes 0
/// at x = 0 (so x^{2^m-2} is inversion with 0 -> 0).
struct UnivariatePoly {
    // (exponent, coefficient); zero coefficients pruned
    std::vector<std::pair<std::uint64_t, elem>> terms;

    elem eval(const FieldSpec& spec, elem x) const;

    // Combine exponents that coincide mod 2^m-1 (positive exponents are
    // mapped into [1, 2^m-1], exponent 0 stays 0). Needed before comparing
    // polynomials or evaluating huge-degree Dickson polynomials.
    UnivariatePoly reduced(const FieldSpec& spec) const;
};

// Dickson polynomial of the first kind D_h(x, a), coefficients reduced
// mod 2. Handles arbitrary h up to 2^62 (coefficients come out of Lucas'
// theorem, never from explicit big binomials).
UnivariatePoly dickson(const FieldSpec& spec, std::uint64_t h, elem a);

/// A named concrete function family from the catalog, e.g. {"gold", {h:1}}
/// or {"segre", {a:0x5}}. The same id serves every m; exponent formulas are
/// resolved per-m at instantiation.
struct FamilyId {
    std::string name;
    std::map<std::string, std::uint64_t> params;
    std::string inner; // nested family text, for wrappers like apnshift(...)

    std::uint64_t param(const std::string& key) const;
    std::uint64_t param_or(const std::string& key, std::uint64_t dflt) const;

    static FamilyId parse(const std::string& text); // "gold:h=1", "dds-a", ...
    std::string to_string() const;
};

// True if the family maps to GF(2) (walsh-style families) rather than to
// the field itself.
bool is_boolean_family(const std::string& name);

// Instantiate a vectorial family as a total function on GF(2^m). Throws
// std::invalid_argument naming the failing precondition (parity, gcd,
// trace conditions, exponent integrality).
elem_fn instantiate(const FieldSpec& spec, const FamilyId& id);

// Boolean view: direct truth table for boolean families, Tr(g) for
// vectorial ones.
TruthTable instantiate_bool(const FieldSpec& spec, const FamilyId& id);

// x -> F(x) + F(x+1) + 1
elem_fn apn_shift(const FieldSpec& spec, const elem_fn& F);

DefiningSet image_set(const FieldSpec& spec, const elem_fn& f);
DefiningSet image_set_star(const FieldSpec& spec, const elem_fn& f);
// image of x -> f(x(x+1))
DefiningSet image_of_xx1(const FieldSpec& spec, const elem_fn& f);

// preimage-size -> number of image values with that preimage size
std::map<std::uint64_t, std::uint64_t> e_to_1_profile(const FieldSpec& spec, const elem_fn& f);
bool is_e_to_1(const FieldSpec& spec, const elem_fn& f, std::uint64_t e);

// true iff g(f(x)) = x for all x; throws if f is not a permutation
bool verify_comp_inverse(const FieldSpec& spec, const elem_fn& f, const elem_fn& g);

// D = {x in GF(q)^* : Tr(x^{(q-1)/r^mr}) = 0} with q = 2^phi(r^mr).
// Requires spec.m() == phi(r^mr) and 2 primitive mod r^mr (checked by
// direct order computation).
DefiningSet wdx_defining_set(const FieldSpec& spec, std::uint64_t r, std::uint64_t mr);

} // namespace bfc

#endif
