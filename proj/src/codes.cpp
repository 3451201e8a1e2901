#include "bfc/codes.hpp"

#include <bit>
#include <stdexcept>

namespace bfc {

namespace {

std::uint64_t isqrt_exact(std::uint64_t v, const std::string& what) {
    std::uint64_t r = 0;
    while ((r + 1) * (r + 1) <= v) ++r;
    if (r * r != v)
        throw std::invalid_argument(what + " is not a perfect square");
    return r;
}

std::uint64_t exact_div(std::uint64_t num, std::uint64_t den, const std::string& what) {
    if (den == 0 || num % den != 0)
        throw std::invalid_argument(what + " is not an integer");
    return num / den;
}

std::map<std::uint64_t, std::uint64_t> prune_zeros(std::map<std::uint64_t, std::uint64_t> rows) {
    for (auto it = rows.begin(); it != rows.end();)
        it = it->second == 0 ? rows.erase(it) : std::next(it);
    return rows;
}

CodeSummary fold_counts(unsigned m, std::uint64_t n,
                        const std::map<std::uint64_t, std::uint64_t>& counts) {
    CodeSummary cs;
    cs.n = n;
    auto it0 = counts.find(0);
    std::uint64_t e = it0 == counts.end() ? 0 : it0->second;
    if (e == 0 || (e & (e - 1)) != 0)
        throw std::logic_error("weight multiset: zero multiplicity is not a power of two");
    cs.zero_mult = e;
    cs.k = m - unsigned(std::countr_zero(e));
    cs.weight_distribution[0] = 1;
    cs.d_min = 0;
    for (auto& [w, c] : counts) {
        if (w == 0) continue;
        if (c % e != 0)
            throw std::logic_error("weight multiset: count not divisible by zero multiplicity");
        cs.weight_distribution[w] = c / e;
        if (cs.d_min == 0) cs.d_min = w;
    }
    return cs;
}

} // namespace

bool operator==(const CodeSummary& a, const CodeSummary& b) {
    return a.n == b.n && a.k == b.k &&
           prune_zeros(a.weight_distribution) == prune_zeros(b.weight_distribution);
}

CodeEngine::CodeEngine(const FieldSpec& spec) : spec_(&spec) {
    const unsigned m = spec.m();
    if (m > 14) return; // fall back to per-element sweeps
    const std::uint64_t n = spec.order();
    const std::size_t words = std::size_t((n + 63) / 64);

    // Tr(xy) = mask(x).y with mask(x) the Gram-row fold of x, so each row of
    // H1 is the bit pattern of one linear form, assembled word-wise.
    std::uint64_t low_pattern[64];
    for (unsigned mask = 0; mask < 64; ++mask) {
        std::uint64_t p = 0;
        for (unsigned t = 0; t < 64; ++t)
            if (std::popcount(mask & t) & 1) p |= std::uint64_t(1) << t;
        low_pattern[mask] = p;
    }

    h1_.assign(n, std::vector<std::uint64_t>(words, 0));
    for (std::uint64_t x = 0; x < n; ++x) {
        std::uint32_t mask = 0;
        std::uint32_t rest = std::uint32_t(x);
        while (rest) {
            mask ^= spec.gram_row(unsigned(std::countr_zero(rest)));
            rest &= rest - 1;
        }
        std::uint64_t base_pat = low_pattern[mask & 63];
        for (std::size_t w = 0; w < words; ++w) {
            std::uint64_t base = std::uint64_t(w) << 6;
            std::uint64_t word = base_pat;
            if (std::popcount(std::uint64_t(mask) & base) & 1) word = ~word;
            h1_[x][w] = word;
        }
        if (n < 64) h1_[x][0] &= (std::uint64_t(1) << n) - 1;
    }
}

CodeSummary CodeEngine::code_from_defining_set(const DefiningSet& D) const {
    if (D.size() == 0) throw std::invalid_argument("code_from_defining_set: empty defining set");
    if (D.m() != spec_->m()) throw std::invalid_argument("defining set field mismatch");
    const std::uint64_t n = spec_->order();
    std::map<std::uint64_t, std::uint64_t> counts;
    if (!h1_.empty()) {
        const auto& dw = D.words();
        for (std::uint64_t x = 0; x < n; ++x) {
            std::uint64_t wt = 0;
            const auto& row = h1_[x];
            for (std::size_t i = 0; i < dw.size(); ++i)
                wt += std::popcount(dw[i] & row[i]);
            ++counts[wt];
        }
    } else {
        for (std::uint64_t x = 0; x < n; ++x) {
            std::uint64_t wt = 0;
            for (elem d : D.elements())
                wt += spec_->trace(spec_->mul(elem(x), d));
            ++counts[wt];
        }
    }
    return fold_counts(spec_->m(), D.size(), counts);
}

CodeSummary CodeEngine::weight_dist_via_walsh(const TruthTable& tt) const {
    return bfc::weight_dist_via_walsh(*spec_, tt);
}

CodeSummary code_from_defining_set(const FieldSpec& spec, const DefiningSet& D) {
    return CodeEngine(spec).code_from_defining_set(D);
}

CodeSummary weight_dist_via_walsh(const FieldSpec& spec, const TruthTable& tt) {
    const std::uint64_t n_f = tt.support_size();
    if (n_f == 0) throw std::invalid_argument("weight_dist_via_walsh: empty support");
    WalshSpectrum ws = walsh_transform(spec, tt);
    std::map<std::uint64_t, std::uint64_t> counts;
    counts[0] = 1; // the x = 0 codeword
    for (std::uint64_t w = 1; w < spec.order(); ++w) {
        std::int64_t num = 2 * std::int64_t(n_f) + ws.values[w];
        ++counts[std::uint64_t(num / 4)];
    }
    return fold_counts(spec.m(), n_f, counts);
}

unsigned dual_distance_probe(const DefiningSet& D, unsigned t_max) {
    if (t_max > 4) throw std::invalid_argument("dual_distance_probe: t_max must be <= 4");
    const auto& el = D.elements();
    if (t_max >= 1 && D.contains(0)) return 1;
    if (t_max >= 3) {
        for (std::size_t i = 0; i < el.size(); ++i)
            for (std::size_t j = i + 1; j < el.size(); ++j) {
                elem s = el[i] ^ el[j];
                if (s != el[i] && s != el[j] && D.contains(s)) return 3;
            }
    }
    if (t_max >= 4) {
        std::map<elem, std::pair<elem, elem>> pair_xor;
        for (std::size_t i = 0; i < el.size(); ++i)
            for (std::size_t j = i + 1; j < el.size(); ++j) {
                elem s = el[i] ^ el[j];
                auto [it, fresh] = pair_xor.try_emplace(s, el[i], el[j]);
                if (!fresh) return 4; // same xor from two necessarily disjoint pairs
            }
    }
    return 0;
}

CodeSummary expand_complement(const CodeSummary& c) {
    auto it = c.weight_distribution.find(c.n);
    if (it != c.weight_distribution.end() && it->second > 0)
        return c; // all-one word already present
    CodeSummary out;
    out.n = c.n;
    out.k = c.k + 1;
    out.zero_mult = c.zero_mult;
    for (auto& [w, a] : c.weight_distribution) {
        out.weight_distribution[w] += a;
        out.weight_distribution[c.n - w] += a;
    }
    out.weight_distribution = prune_zeros(out.weight_distribution);
    out.d_min = 0;
    for (auto& [w, a] : out.weight_distribution)
        if (w > 0) { out.d_min = w; break; }
    return out;
}

ExpectedTable expected_bent_code(unsigned m, std::uint64_t n_f) {
    if (m % 2 != 0 || m < 4)
        throw std::invalid_argument("bent code table: m must be even, m >= 4");
    std::uint64_t dev = std::uint64_t(1) << ((m - 2) / 2);
    if (n_f != (std::uint64_t(1) << (m - 1)) - dev && n_f != (std::uint64_t(1) << (m - 1)) + dev)
        throw std::invalid_argument("bent code table: n_f must be 2^{m-1} +- 2^{(m-2)/2}");
    std::uint64_t q1 = (std::uint64_t(1) << m) - 1;
    std::uint64_t half_dev = std::uint64_t(1) << ((m - 4) / 2);
    std::uint64_t ratio = exact_div(n_f, dev, "n_f 2^{-(m-2)/2}");
    ExpectedTable t;
    t.source = "bent-code";
    t.rows[0] = 1;
    t.rows[n_f / 2 - half_dev] = exact_div(q1 - ratio, 2, "low multiplicity");
    t.rows[n_f / 2 + half_dev] = exact_div(q1 + ratio, 2, "high multiplicity");
    return t;
}

ExpectedTable expected_semibent_code(unsigned m, std::uint64_t n_f) {
    if (m % 2 != 1 || m < 3)
        throw std::invalid_argument("semibent code table: m must be odd, m >= 3");
    std::uint64_t q = std::uint64_t(1) << m;
    std::uint64_t dev = std::uint64_t(1) << ((m - 1) / 2);
    std::uint64_t prod = n_f * (q - n_f);
    ExpectedTable t;
    t.source = "semibent-code";
    t.rows[0] = 1;
    t.rows[exact_div(n_f - dev, 2, "low weight")] =
        exact_div(prod - n_f * (dev / 2) * 2, q, "low multiplicity"); // n_f 2^{(m-1)/2}
    t.rows[exact_div(n_f, 2, "middle weight")] = q - 1 - exact_div(prod, q / 2, "middle multiplicity");
    t.rows[exact_div(n_f + dev, 2, "high weight")] = exact_div(prod + n_f * dev, q, "high multiplicity");
    return t;
}

ExpectedTable expected_quadratic_code(unsigned m, unsigned r_f, std::int64_t fhat0) {
    if (r_f <= 2 || r_f % 2 != 0 || r_f > m)
        throw std::invalid_argument("quadratic code table: need even r_f with 2 < r_f <= m");
    std::int64_t peak = std::int64_t(1) << (m - r_f / 2);
    unsigned eps1 = 0, eps2 = 0, eps3 = 0;
    if (fhat0 == 0) eps1 = 1;
    else if (fhat0 == peak) eps2 = 1;
    else if (fhat0 == -peak) eps3 = 1;
    else throw std::invalid_argument("quadratic code table: fhat(0) must be 0 or +-2^{m-r_f/2}");
    std::uint64_t n_f = std::uint64_t((std::int64_t(1) << (m - 1)) - fhat0 / 2);
    std::uint64_t half_peak = std::uint64_t(1) << (m - 1 - r_f / 2);
    ExpectedTable t;
    t.source = "quadratic-code";
    t.rows[0] = 1;
    t.rows[n_f / 2] = (std::uint64_t(1) << m) - (std::uint64_t(1) << r_f) - eps1;
    t.rows[(n_f + half_peak) / 2] =
        (std::uint64_t(1) << (r_f - 1)) + (std::uint64_t(1) << ((r_f - 2) / 2)) - eps2;
    t.rows[(n_f - half_peak) / 2] =
        (std::uint64_t(1) << (r_f - 1)) - (std::uint64_t(1) << ((r_f - 2) / 2)) - eps3;
    t.rows = prune_zeros(t.rows);
    t.note = "epsilon vector keyed by fhat(0) in {0, +-2^{m-r_f/2}}";
    return t;
}

ExpectedTable expected_three_weight_code(unsigned m, unsigned e) {
    if ((m + e) % 2 != 0 || e < 1 || e + 2 > m)
        throw std::invalid_argument("three-weight table: need m+e even, 1 <= e <= m-2");
    std::uint64_t base = std::uint64_t(1) << (m - 2);
    std::uint64_t dev = std::uint64_t(1) << ((m + e - 4) / 2);
    ExpectedTable t;
    t.source = "three-weight-code";
    t.rows[0] = 1;
    t.rows[base] = (std::uint64_t(1) << m) - (std::uint64_t(1) << (m - e)) - 1;
    t.rows[base + dev] = (std::uint64_t(1) << (m - e - 1)) + (std::uint64_t(1) << ((m - e - 2) / 2));
    t.rows[base - dev] = (std::uint64_t(1) << (m - e - 1)) - (std::uint64_t(1) << ((m - e - 2) / 2));
    return t;
}

ExpectedTable expected_hyperoval_code(unsigned m) {
    if (m % 2 != 1 || m < 3)
        throw std::invalid_argument("hyperoval code table: m must be odd, m >= 3");
    std::uint64_t base = std::uint64_t(1) << (m - 2);
    std::uint64_t dev = std::uint64_t(1) << ((m - 3) / 2);
    ExpectedTable t;
    t.source = "hyperoval-code";
    t.rows[0] = 1;
    t.rows[base - dev] = base + dev;
    t.rows[base] = (std::uint64_t(1) << (m - 1)) - 1;
    t.rows[base + dev] = base - dev;
    return t;
}

ExpectedTable expected_extended_hyperoval_code(unsigned m) {
    if (m % 2 != 1 || m < 3)
        throw std::invalid_argument("extended hyperoval table: m must be odd, m >= 3");
    std::uint64_t base = std::uint64_t(1) << (m - 2);
    std::uint64_t dev = std::uint64_t(1) << ((m - 3) / 2);
    std::uint64_t half = std::uint64_t(1) << (m - 1);
    ExpectedTable t;
    t.source = "extended-hyperoval-code";
    t.rows[0] = 1;
    // complement closure forces A'_w = A_w + A_{n-w}, so the two side rows
    // are both 2^{m-1}; published versions sometimes print 2 A_w instead
    t.rows[base - dev] = half;
    t.rows[base] = (std::uint64_t(1) << m) - 2;
    t.rows[base + dev] = half;
    t.rows[half] = 1;
    t.note = "side multiplicities corrected to A_w + A_{n-w} (complement symmetry)";
    return t;
}

ExpectedTable expected_j170_code(unsigned m) {
    if (m % 4 != 2 || m < 6)
        throw std::invalid_argument("j170 code table: m = 2 mod 4, m >= 6");
    std::uint64_t base = std::uint64_t(1) << (m - 2);
    std::uint64_t dev = std::uint64_t(1) << ((m - 2) / 2);
    ExpectedTable t;
    t.source = "j170-code";
    t.rows[0] = 1;
    t.rows[base - dev] = (std::uint64_t(1) << (m - 3)) + (std::uint64_t(1) << ((m - 4) / 2));
    t.rows[base] = 3 * base - 1;
    t.rows[base + dev] = (std::uint64_t(1) << (m - 3)) - (std::uint64_t(1) << ((m - 4) / 2));
    return t;
}

ExpectedTable expected_j171_code(unsigned m) {
    if (m % 2 != 0 || m < 4)
        throw std::invalid_argument("j171 code table: m even, m >= 4");
    std::uint64_t base = std::uint64_t(1) << (m - 2);
    std::uint64_t dev2 = std::uint64_t(1) << ((m - 2) / 2);
    std::uint64_t dev4 = std::uint64_t(1) << ((m - 4) / 2);
    std::uint64_t side = (std::uint64_t(1) << (m - 1)) - (std::uint64_t(1) << (m / 2));
    ExpectedTable t;
    t.source = "j171-code";
    t.rows[0] = 1;
    t.rows[base - dev2] = dev2;
    t.rows[base - dev4] = side;
    t.rows[base] = (std::uint64_t(1) << (m / 2)) + dev2 - 1;
    t.rows[base + dev4] = side;
    return t;
}

ExpectedTable expected_dds_code(unsigned m) {
    if (m % 2 != 1 || m < 5)
        throw std::invalid_argument("dds code table: m odd, m >= 5");
    std::uint64_t base = std::uint64_t(1) << (m - 2);
    std::uint64_t dev = std::uint64_t(1) << ((m - 3) / 2);
    ExpectedTable t;
    t.source = "dds-code";
    t.rows[0] = 1;
    // encoded as printed: low weight carries the low multiplicity
    t.rows[base - dev] = base - dev;
    t.rows[base] = (std::uint64_t(1) << (m - 1)) - 1;
    t.rows[base + dev] = base + dev;
    return t;
}

ExpectedTable expected_wdx_code(std::uint64_t r, std::uint64_t mr) {
    std::uint64_t rm = 1;
    for (std::uint64_t i = 0; i < mr; ++i) rm *= r;
    if (rm < 9) throw std::invalid_argument("wdx table: r^m >= 9");
    std::uint64_t phi = (rm / r) * (r - 1);
    if (phi % 2 != 0 || phi > 24)
        throw std::invalid_argument("wdx table: phi(r^m) must be even and <= 24");
    std::uint64_t q = std::uint64_t(1) << phi;
    std::uint64_t sq = std::uint64_t(1) << (phi / 2);
    std::uint64_t shift = exact_div((q + sq) * (rm - 2 * r + 2), 4 * rm, "common weight term");
    ExpectedTable t;
    t.source = "wdx-code";
    t.rows[0] = 1;
    t.rows[exact_div(q - sq, 4, "low weight") + shift] =
        exact_div((q - 1) * (rm - r + 1), rm, "low multiplicity");
    t.rows[exact_div(q + sq, 4, "high weight") + shift] =
        exact_div((q - 1) * (r - 1), rm, "high multiplicity");
    return t;
}

ExpectedTable expected_difference_set_code(unsigned m, std::uint64_t n, std::uint64_t lambda) {
    if (lambda >= n) throw std::invalid_argument("difference set table: lambda < n required");
    std::uint64_t s = isqrt_exact(n - lambda, "n - lambda");
    std::uint64_t q1 = (std::uint64_t(1) << m) - 1;
    ExpectedTable t;
    t.source = "difference-set-code";
    t.rows[0] = 1;
    t.rows[exact_div(n - s, 2, "low weight")] = exact_div(q1 * s - n, 2 * s, "low multiplicity");
    t.rows[exact_div(n + s, 2, "high weight")] = exact_div(q1 * s + n, 2 * s, "high multiplicity");
    t.rows = prune_zeros(t.rows);
    return t;
}

ExpectedTable expected_four_weight_code(unsigned m, unsigned spectrum_case) {
    auto summary = four_valued_summary(m, spectrum_case);
    std::uint64_t n_f = (spectrum_case == 3)
                            ? (std::uint64_t(1) << (m - 1)) - (std::uint64_t(1) << (m / 2))
                            : (std::uint64_t(1) << (m - 1));
    std::int64_t fhat0 = std::int64_t(std::uint64_t(1) << m) - 2 * std::int64_t(n_f);
    ExpectedTable t;
    t.source = "four-weight-code-case" + std::to_string(spectrum_case);
    for (auto& [v, cnt] : summary) {
        std::int64_t num = 2 * std::int64_t(n_f) + v;
        if (num % 4 != 0) throw std::invalid_argument("four-weight table: non-integral weight");
        t.rows[std::uint64_t(num / 4)] += cnt;
    }
    // remove the w = 0 spectrum entry, then account the zero codeword
    std::uint64_t w0 = std::uint64_t((2 * std::int64_t(n_f) + fhat0) / 4);
    auto it = t.rows.find(w0);
    if (it == t.rows.end() || it->second == 0)
        throw std::invalid_argument("four-weight table: fhat(0) not in the spectrum pattern");
    if (--it->second == 0) t.rows.erase(it);
    t.rows[0] += 1;
    return t;
}

std::vector<std::uint64_t> relative_difference_set_weights(std::uint64_t n, std::uint64_t lambda,
                                                           std::uint64_t ell) {
    std::vector<std::uint64_t> ws;
    std::uint64_t s1 = isqrt_exact(n, "n");
    ws.push_back((n - s1) / 2);
    ws.push_back((n + s1) / 2);
    if (lambda * ell <= n) {
        std::uint64_t s2 = isqrt_exact(n - lambda * ell, "n - lambda*ell");
        ws.push_back((n - s2) / 2);
        ws.push_back((n + s2) / 2);
    }
    std::sort(ws.begin(), ws.end());
    ws.erase(std::unique(ws.begin(), ws.end()), ws.end());
    return ws;
}

bool matches(const CodeSummary& c, const ExpectedTable& t) {
    return prune_zeros(c.weight_distribution) == prune_zeros(t.rows);
}

} // namespace bfc
