#ifndef BFC_GF2M_HPP
#define BFC_GF2M_HPP

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace bfc {

using elem = std::uint32_t; // polynomial-basis encoding, bit i = coeff of x^i

/// A concrete GF(2^m), 1 <= m <= 24. The reduction polynomial is the
/// lexicographically smallest irreducible of degree m for which x is a
/// primitive element, so the field (and everything derived from it) is
/// reproducible across runs. Immutable after construction; all operations
/// are pure and safe to call concurrently.
class FieldSpec {
public:
    explicit FieldSpec(unsigned m);

    unsigned m() const { return m_; }
    std::uint32_t reduction_poly() const { return poly_; }
    std::uint64_t order() const { return std::uint64_t(1) << m_; }
    std::uint32_t mult_order() const { return (std::uint32_t(1) << m_) - 1; }

    // "GF(2^m)/0x<hex poly>", the notation used in every report header.
    std::string name() const;

    elem add(elem a, elem b) const { return a ^ b; }
    elem mul(elem a, elem b) const;
    elem inv(elem a) const;
    elem pow(elem a, std::int64_t e) const;
    elem sqr(elem a) const { return mul(a, a); }
    elem sqrt(elem a) const { return pow(a, std::int64_t(1) << (m_ - 1)); }

    // Tr is GF(2)-linear, so it is one AND plus a parity against the mask of
    // basis traces.
    unsigned trace(elem a) const { return std::popcount(a & trace_mask_) & 1u; }
    elem rel_trace(elem a, unsigned k) const;

    // num * den^{-1} mod 2^m-1, in [0, 2^m-2]; throws if gcd(den, 2^m-1) != 1.
    std::uint32_t exp_frac(std::int64_t num, std::int64_t den) const;

    // Discrete log base x. Table-backed for m <= 20 (where mul is O(1));
    // throws for larger m.
    std::uint32_t log(elem a) const;
    bool has_log_tables() const { return !alog_.empty(); }
    elem alog(std::uint64_t k) const;

    // m x m trace Gram matrix of the polynomial basis, one m-bit row mask per
    // basis element: gram_row(i) bit j = Tr(x^i * x^j). Invertible, used to
    // map the field pairing Tr(wx) onto the dot-product pairing.
    std::uint32_t gram_row(unsigned i) const { return gram_[i]; }

private:
    unsigned m_;
    std::uint32_t poly_;
    std::uint32_t trace_mask_;
    std::vector<std::uint32_t> log_;
    std::vector<elem> alog_;
    std::vector<std::uint32_t> gram_;
};

// Carry-less product of a and b reduced by poly (degree m). Table-free;
// the FieldSpec fast path is checked against this in the tests.
elem gf2_mul_noref(std::uint32_t poly, elem a, elem b);

bool gf2_poly_irreducible(unsigned m, std::uint32_t poly);

// Modular inverse in Z_n; throws std::domain_error if gcd(a, n) != 1.
std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t n);

} // namespace bfc

#endif
