#include "bfc/boolfun.hpp"

#include <bit>
#include <cstdlib>
#include <stdexcept>

namespace bfc {

TruthTable::TruthTable(unsigned m, const std::vector<std::uint64_t>& bits)
    : m_(m), bits_(bits) {
    std::uint64_t n = std::uint64_t(1) << m;
    bits_.resize((n + 63) / 64, 0);
    if (n < 64) bits_[0] &= (std::uint64_t(1) << n) - 1;
    n_f_ = 0;
    for (auto w : bits_) n_f_ += std::popcount(w);
}

TruthTable TruthTable::from_evaluator(const FieldSpec& spec, const bit_fn& eval) {
    std::uint64_t n = spec.order();
    std::vector<std::uint64_t> bits((n + 63) / 64, 0);
    for (std::uint64_t v = 0; v < n; ++v)
        if (eval(elem(v)) & 1)
            bits[v >> 6] |= std::uint64_t(1) << (v & 63);
    return TruthTable(spec.m(), bits);
}

TruthTable TruthTable::from_trace_of(const FieldSpec& spec, const elem_fn& g) {
    return from_evaluator(spec, [&](elem v) { return spec.trace(g(v)); });
}

TruthTable TruthTable::from_support(unsigned m, const std::vector<elem>& support) {
    std::uint64_t n = std::uint64_t(1) << m;
    std::vector<std::uint64_t> bits((n + 63) / 64, 0);
    for (elem v : support) {
        if (v >= n) throw std::invalid_argument("from_support: element out of range");
        bits[v >> 6] |= std::uint64_t(1) << (v & 63);
    }
    return TruthTable(m, bits);
}

std::vector<elem> TruthTable::support() const {
    std::vector<elem> s;
    s.reserve(n_f_);
    for (std::uint64_t v = 0; v < size(); ++v)
        if ((*this)(elem(v))) s.push_back(elem(v));
    return s;
}

namespace {

void fwht_inplace(std::vector<std::int32_t>& v) {
    std::size_t n = v.size();
    for (std::size_t half = 1; half < n; half <<= 1) {
        for (std::size_t base = 0; base < n; base += 2 * half) {
            for (std::size_t i = base; i < base + half; ++i) {
                std::int32_t a = v[i], b = v[i + half];
                v[i] = a + b;
                v[i + half] = a - b;
            }
        }
    }
}

std::map<std::int32_t, std::uint64_t> summarize(const std::vector<std::int32_t>& v) {
    std::map<std::int32_t, std::uint64_t> s;
    for (auto x : v) ++s[x];
    return s;
}

} // namespace

WalshSpectrum walsh_transform(const FieldSpec& spec, const TruthTable& tt) {
    const std::uint64_t n = spec.order();
    std::vector<std::int32_t> s(n);
    for (std::uint64_t x = 0; x < n; ++x)
        s[x] = tt(elem(x)) ? -1 : 1;
    fwht_inplace(s);
    // The butterfly produced sums against the dot-product pairing u.x;
    // Tr(wx) = (Gw).x with G the trace Gram matrix, so re-index by w -> Gw.
    WalshSpectrum ws;
    ws.m = spec.m();
    ws.values.resize(n);
    const unsigned m = spec.m();
    for (std::uint64_t w = 0; w < n; ++w) {
        std::uint32_t gw = 0;
        std::uint32_t rest = std::uint32_t(w);
        while (rest) {
            unsigned i = unsigned(std::countr_zero(rest));
            gw ^= spec.gram_row(i);
            rest &= rest - 1;
        }
        (void)m;
        ws.values[w] = s[gw];
    }
    ws.summary = summarize(ws.values);
    return ws;
}

WalshSpectrum walsh_transform_direct(const FieldSpec& spec, const TruthTable& tt) {
    const std::uint64_t n = spec.order();
    WalshSpectrum ws;
    ws.m = spec.m();
    ws.values.resize(n);
    for (std::uint64_t w = 0; w < n; ++w) {
        std::int64_t acc = 0;
        for (std::uint64_t x = 0; x < n; ++x) {
            unsigned b = tt(elem(x)) ^ spec.trace(spec.mul(elem(w), elem(x)));
            acc += b ? -1 : 1;
        }
        ws.values[w] = std::int32_t(acc);
    }
    ws.summary = summarize(ws.values);
    return ws;
}

std::map<std::int32_t, std::uint64_t> three_valued_summary(unsigned m, unsigned e) {
    if ((m + e) % 2 != 0 || e < 1 || e >= m)
        throw std::invalid_argument("three_valued_summary: need m+e even, 1 <= e < m");
    std::int32_t v = std::int32_t(1) << ((m + e) / 2);
    std::map<std::int32_t, std::uint64_t> s;
    s[0] = (std::uint64_t(1) << m) - (std::uint64_t(1) << (m - e));
    std::uint64_t half = std::uint64_t(1) << (m - e - 1);
    std::uint64_t dev = (m >= e + 2) ? (std::uint64_t(1) << ((m - e - 2) / 2)) : 0;
    if ((m - e) % 2 != 0) throw std::invalid_argument("three_valued_summary: m-e must be even");
    s[v] = half + dev;
    s[-v] = half - dev;
    return s;
}

std::map<std::int32_t, std::uint64_t> four_valued_summary(unsigned m, unsigned which) {
    if (m % 2 != 0) throw std::invalid_argument("four_valued_summary: m must be even");
    std::uint64_t q = std::uint64_t(1) << m;
    std::int32_t r = std::int32_t(1) << (m / 2); // 2^{m/2}
    std::map<std::int32_t, std::uint64_t> s;
    switch (which) {
    case 1:
        if (m % 4 != 0) throw std::invalid_argument("four_valued_summary: case 1 needs m = 0 mod 4");
        s[-r] = (q - std::uint64_t(r)) / 3;
        s[0] = q / 2 - (std::uint64_t(1) << ((m - 2) / 2));
        s[r] = std::uint64_t(r);
        s[2 * r] = (q / 2 - (std::uint64_t(1) << ((m - 2) / 2))) / 3;
        break;
    case 2: {
        if (m % 4 != 0) throw std::invalid_argument("four_valued_summary: case 2 needs 4 | m");
        std::uint64_t a = q / 2 - (std::uint64_t(1) << (3 * m / 4 - 1));
        s[-r] = a;
        s[0] = (std::uint64_t(1) << (3 * m / 4)) - (std::uint64_t(1) << (m / 4));
        s[r] = a;
        s[std::int32_t(1) << (3 * m / 4)] = std::uint64_t(1) << (m / 4);
        break;
    }
    case 3:
        if (m % 4 != 2) throw std::invalid_argument("four_valued_summary: case 3 needs m = 2 mod 4");
        s[-r] = (q - std::uint64_t(r) - 2) / 3;
        s[0] = q / 2 - (std::uint64_t(1) << ((m - 2) / 2)) + 2;
        s[r] = std::uint64_t(r) - 2;
        s[2 * r] = (q / 2 - (std::uint64_t(1) << ((m - 2) / 2)) + 2) / 3;
        break;
    default:
        throw std::invalid_argument("four_valued_summary: which must be 1..3");
    }
    return s;
}

std::string SpectrumClass::to_string() const {
    switch (tag) {
    case SpectrumTag::Bent: return "bent";
    case SpectrumTag::Semibent: return "semibent";
    case SpectrumTag::ThreeValued: return "three-valued(e=" + std::to_string(e) + ")";
    case SpectrumTag::FourValuedCase1: return "four-valued(case 1)";
    case SpectrumTag::FourValuedCase2: return "four-valued(case 2)";
    case SpectrumTag::FourValuedCase3: return "four-valued(case 3)";
    case SpectrumTag::Other: return "other";
    }
    return "other";
}

SpectrumClass classify(const WalshSpectrum& ws, unsigned m) {
    SpectrumClass c;
    c.summary = ws.summary;

    auto values_subset_of = [&](std::int32_t lo, std::int32_t mid, std::int32_t hi) {
        for (auto& [v, cnt] : ws.summary)
            if (v != lo && v != mid && v != hi) return false;
        return true;
    };

    if (m % 2 == 0) {
        std::int32_t b = std::int32_t(1) << (m / 2);
        bool bent = true;
        for (auto& [v, cnt] : ws.summary)
            if (v != b && v != -b) { bent = false; break; }
        if (bent) { c.tag = SpectrumTag::Bent; return c; }
    } else {
        std::int32_t sb = std::int32_t(1) << ((m + 1) / 2);
        if (values_subset_of(-sb, 0, sb)) {
            c.tag = SpectrumTag::Semibent;
            return c;
        }
    }

    // three-valued with the exact count pattern (e >= 1, m+e even)
    for (unsigned e = 1; e < m; ++e) {
        if ((m + e) % 2 != 0) continue;
        std::int32_t v = std::int32_t(1) << ((m + e) / 2);
        if (!values_subset_of(-v, 0, v)) continue;
        if (ws.summary == three_valued_summary(m, e)) {
            c.tag = SpectrumTag::ThreeValued;
            c.e = e;
            return c;
        }
    }

    if (m % 2 == 0) {
        for (unsigned k = 1; k <= 3; ++k) {
            if ((k == 1 || k == 2) && m % 4 != 0) continue;
            if (k == 3 && m % 4 != 2) continue;
            if (ws.summary == four_valued_summary(m, k)) {
                c.tag = k == 1 ? SpectrumTag::FourValuedCase1
                      : k == 2 ? SpectrumTag::FourValuedCase2
                               : SpectrumTag::FourValuedCase3;
                return c;
            }
        }
    }

    c.tag = SpectrumTag::Other;
    return c;
}

unsigned quad_rank(const FieldSpec& spec, const TruthTable& tt) {
    const unsigned m = spec.m();
    const std::uint64_t n = spec.order();
    auto B = [&](elem x, elem z) -> unsigned {
        return tt(x ^ z) ^ tt(x) ^ tt(z);
    };
    // spanning-set bilinearity check: B(x, .) must be additive on basis pairs
    for (std::uint64_t x = 0; x < n; ++x) {
        for (unsigned i = 0; i < m; ++i) {
            for (unsigned j = i + 1; j < m; ++j) {
                elem bi = 1u << i, bj = 1u << j;
                if (B(elem(x), bi ^ bj) != (B(elem(x), bi) ^ B(elem(x), bj)))
                    throw std::invalid_argument("quad_rank: function is not quadratic");
            }
        }
    }
    // rank of M[i][j] = B(basis_i, basis_j) over GF(2)
    std::vector<std::uint32_t> rows(m);
    for (unsigned i = 0; i < m; ++i)
        for (unsigned j = 0; j < m; ++j)
            rows[i] |= std::uint32_t(B(1u << i, 1u << j)) << j;
    unsigned rank = 0;
    for (unsigned col = 0; col < m; ++col) {
        unsigned pivot = m;
        for (unsigned r = rank; r < m; ++r)
            if ((rows[r] >> col) & 1) { pivot = r; break; }
        if (pivot == m) continue;
        std::swap(rows[rank], rows[pivot]);
        for (unsigned r = 0; r < m; ++r)
            if (r != rank && ((rows[r] >> col) & 1)) rows[r] ^= rows[rank];
        ++rank;
    }
    return rank;
}

std::vector<elem> tabulate(const FieldSpec& spec, const elem_fn& g) {
    std::vector<elem> t(spec.order());
    for (std::uint64_t x = 0; x < spec.order(); ++x) t[x] = g(elem(x));
    return t;
}

std::int32_t vectorial_walsh(const FieldSpec& spec, const elem_fn& g, elem a, elem b) {
    std::int64_t acc = 0;
    for (std::uint64_t x = 0; x < spec.order(); ++x) {
        unsigned bit = spec.trace(spec.mul(a, g(elem(x)))) ^ spec.trace(spec.mul(b, elem(x)));
        acc += bit ? -1 : 1;
    }
    return std::int32_t(acc);
}

bool is_almost_bent(const FieldSpec& spec, const elem_fn& g) {
    if (spec.m() % 2 == 0) return false; // AB functions exist only for odd m
    auto gt = tabulate(spec, g);
    std::int32_t sb = std::int32_t(1) << ((spec.m() + 1) / 2);
    for (std::uint64_t a = 1; a < spec.order(); ++a) {
        TruthTable fa = TruthTable::from_evaluator(
            spec, [&](elem x) { return spec.trace(spec.mul(elem(a), gt[x])); });
        WalshSpectrum ws = walsh_transform(spec, fa);
        for (auto& [v, cnt] : ws.summary)
            if (v != 0 && v != sb && v != -sb) return false;
    }
    return true;
}

bool is_apn(const FieldSpec& spec, const elem_fn& g) {
    auto gt = tabulate(spec, g);
    std::vector<std::uint8_t> count(spec.order());
    for (std::uint64_t a = 1; a < spec.order(); ++a) {
        std::fill(count.begin(), count.end(), 0);
        for (std::uint64_t x = 0; x < spec.order(); ++x) {
            elem d = gt[x ^ a] ^ gt[x];
            if (++count[d] > 2) return false;
        }
    }
    return true;
}

} // namespace bfc
