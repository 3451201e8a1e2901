#ifndef BFC_BOOLFUN_HPP
#define BFC_BOOLFUN_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "bfc/gf2m.hpp"

namespace bfc {

using elem_fn = std::function<elem(elem)>;
using bit_fn = std::function<unsigned(elem)>;

/// Boolean function on GF(2^m) as a 2^m-bit vector indexed by the
/// field-element integer encoding. Immutable value type.
class TruthTable {
public:
    TruthTable(unsigned m, const std::vector<std::uint64_t>& bits);

    static TruthTable from_evaluator(const FieldSpec& spec, const bit_fn& eval);
    static TruthTable from_trace_of(const FieldSpec& spec, const elem_fn& g);
    static TruthTable from_support(unsigned m, const std::vector<elem>& support);

    unsigned m() const { return m_; }
    std::uint64_t size() const { return std::uint64_t(1) << m_; }
    std::uint64_t support_size() const { return n_f_; }

    unsigned operator()(elem v) const {
        return (bits_[v >> 6] >> (v & 63)) & 1u;
    }
    const std::vector<std::uint64_t>& words() const { return bits_; }

    std::vector<elem> support() const;

private:
    unsigned m_;
    std::vector<std::uint64_t> bits_;
    std::uint64_t n_f_;
};

struct WalshSpectrum {
    unsigned m = 0;
    std::vector<std::int32_t> values;             // values[w] = fhat(w)
    std::map<std::int32_t, std::uint64_t> summary; // value -> count

    std::int32_t at(elem w) const { return values[w]; }
};

enum class SpectrumTag {
    Bent,
    Semibent,
    ThreeValued,
    FourValuedCase1,
    FourValuedCase2,
    FourValuedCase3,
    Other,
};

struct SpectrumClass {
    SpectrumTag tag = SpectrumTag::Other;
    unsigned e = 0; // set for ThreeValued
    std::map<std::int32_t, std::uint64_t> summary;

    std::string to_string() const;
};

// Fast path: O(m 2^m) butterfly over the dot-product pairing, with the
// trace Gram re-indexing that turns Tr(wx) into a dot product.
WalshSpectrum walsh_transform(const FieldSpec& spec, const TruthTable& tt);

// Literal O(2^{2m}) summation of the defining sum; the oracle the fast path
// is checked against.
WalshSpectrum walsh_transform_direct(const FieldSpec& spec, const TruthTable& tt);

SpectrumClass classify(const WalshSpectrum& ws, unsigned m);

// Expected three-valued spectrum counts: {0, +-2^{(m+e)/2}} with the counts
// 2^m - 2^{m-e}, 2^{m-e-1} +- 2^{(m-e-2)/2}.
std::map<std::int32_t, std::uint64_t> three_valued_summary(unsigned m, unsigned e);
// The three four-valued spectrum patterns (case 1..3, m even).
std::map<std::int32_t, std::uint64_t> four_valued_summary(unsigned m, unsigned which);

// Rank r_f = m - dim{x : B(x,z)=0 for all z} of a quadratic Boolean
// function, where B(x,z) = f(x+z)+f(x)+f(z). Throws std::invalid_argument
// if B fails the spanning-set bilinearity check.
unsigned quad_rank(const FieldSpec& spec, const TruthTable& tt);

// lambda_g(a,b) = sum_x (-1)^{Tr(a g(x)) + Tr(bx)}
std::int32_t vectorial_walsh(const FieldSpec& spec, const elem_fn& g, elem a, elem b);
bool is_almost_bent(const FieldSpec& spec, const elem_fn& g);
bool is_apn(const FieldSpec& spec, const elem_fn& g);

// Evaluate g on all of GF(2^m) into a table.
std::vector<elem> tabulate(const FieldSpec& spec, const elem_fn& g);

} // namespace bfc

#endif
