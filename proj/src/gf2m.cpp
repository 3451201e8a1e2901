#include "bfc/gf2m.hpp"

#include <cstdio>
#include <stdexcept>
#include <utility>

namespace bfc {

namespace {

constexpr unsigned kLogTableMaxM = 20;

int poly_degree(std::uint64_t p) {
    int d = -1;
    while (p) { ++d; p >>= 1; }
    return d;
}

std::uint64_t poly_mod(std::uint64_t a, std::uint64_t p) {
    int dp = poly_degree(p);
    int da;
    while ((da = poly_degree(a)) >= dp)
        a ^= p << (da - dp);
    return a;
}

std::vector<std::uint32_t> prime_factors(std::uint32_t n) {
    std::vector<std::uint32_t> fs;
    for (std::uint32_t p = 2; std::uint64_t(p) * p <= n; ++p) {
        if (n % p == 0) {
            fs.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) fs.push_back(n);
    return fs;
}

} // namespace

elem gf2_mul_noref(std::uint32_t poly, elem a, elem b) {
    std::uint64_t acc = 0;
    std::uint64_t aa = a;
    while (b) {
        if (b & 1) acc ^= aa;
        aa <<= 1;
        b >>= 1;
    }
    return elem(poly_mod(acc, poly));
}

bool gf2_poly_irreducible(unsigned m, std::uint32_t poly) {
    // trial division against every polynomial of degree 1..m/2
    for (unsigned d = 1; 2 * d <= m; ++d) {
        for (std::uint32_t q = (1u << d); q < (2u << d); ++q) {
            if (poly_mod(poly, q) == 0) return false;
        }
    }
    return true;
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t n) {
    std::int64_t t = 0, newt = 1;
    std::int64_t r = std::int64_t(n), newr = std::int64_t(a % n);
    while (newr != 0) {
        std::int64_t q = r / newr;
        t = std::exchange(newt, t - q * newt);
        r = std::exchange(newr, r - q * newr);
    }
    if (r != 1) throw std::domain_error("mod_inverse: not invertible");
    if (t < 0) t += std::int64_t(n);
    return std::uint64_t(t);
}

FieldSpec::FieldSpec(unsigned m) : m_(m) {
    if (m < 1 || m > 24) throw std::invalid_argument("FieldSpec: m must be in [1, 24]");
    const std::uint32_t N = mult_order();
    auto factors = prime_factors(N);

    auto pw = [&](std::uint32_t poly, elem base, std::uint64_t e) {
        elem r = 1;
        while (e) {
            if (e & 1) r = gf2_mul_noref(poly, r, base);
            base = gf2_mul_noref(poly, base, base);
            e >>= 1;
        }
        return r;
    };
    auto x_is_primitive = [&](std::uint32_t poly) {
        if (m == 1) return true; // GF(2)^* is trivial
        for (auto p : factors)
            if (pw(poly, 2, N / p) == 1) return false;
        return true;
    };

    poly_ = 0;
    for (std::uint32_t c = (1u << m) | 1u; c < (2u << m); c += 2) {
        if (gf2_poly_irreducible(m, c) && x_is_primitive(c)) { poly_ = c; break; }
    }
    if (!poly_) throw std::logic_error("FieldSpec: no primitive polynomial found");

    trace_mask_ = 0;
    for (unsigned i = 0; i < m; ++i) {
        elem t = 0, s = 1u << i;
        for (unsigned j = 0; j < m; ++j) {
            t ^= s;
            s = gf2_mul_noref(poly_, s, s);
        }
        trace_mask_ |= std::uint32_t(t & 1) << i;
    }

    if (m <= kLogTableMaxM) {
        alog_.resize(N);
        log_.assign(order(), 0);
        elem v = 1;
        for (std::uint32_t k = 0; k < N; ++k) {
            alog_[k] = v;
            log_[v] = k;
            v = elem(poly_mod(std::uint64_t(v) << 1, poly_));
        }
    }

    gram_.resize(m);
    for (unsigned i = 0; i < m; ++i) {
        std::uint32_t row = 0;
        for (unsigned j = 0; j < m; ++j)
            row |= std::uint32_t(trace(mul(1u << i, 1u << j))) << j;
        gram_[i] = row;
    }
}

std::string FieldSpec::name() const {
    char buf[32];
    std::snprintf(buf, sizeof buf, "GF(2^%u)/0x%x", m_, poly_);
    return buf;
}

elem FieldSpec::mul(elem a, elem b) const {
    if (a == 0 || b == 0) return 0;
    if (!alog_.empty()) {
        std::uint64_t s = std::uint64_t(log_[a]) + log_[b];
        if (s >= mult_order()) s -= mult_order();
        return alog_[s];
    }
    return gf2_mul_noref(poly_, a, b);
}

std::uint32_t FieldSpec::log(elem a) const {
    if (a == 0) throw std::domain_error("log(0)");
    if (alog_.empty()) throw std::runtime_error("log: tables not built for m > 20");
    return log_[a];
}

elem FieldSpec::alog(std::uint64_t k) const {
    if (!alog_.empty()) return alog_[k % mult_order()];
    return pow(2, std::int64_t(k % mult_order()));
}

elem FieldSpec::inv(elem a) const {
    if (a == 0) throw std::domain_error("inv(0)");
    if (!alog_.empty()) {
        std::uint32_t k = log_[a];
        return alog_[k == 0 ? 0 : mult_order() - k];
    }
    return pow(a, std::int64_t(mult_order()) - 1);
}

elem FieldSpec::pow(elem a, std::int64_t e) const {
    if (a == 0) {
        if (e == 0) return 1;
        if (e < 0) throw std::domain_error("pow(0, negative)");
        return 0;
    }
    std::int64_t n = mult_order();
    std::int64_t r = e % n;
    if (r < 0) r += n;
    if (!alog_.empty())
        return alog_[(std::uint64_t(log_[a]) * std::uint64_t(r)) % std::uint64_t(n)];
    elem acc = 1, base = a;
    std::uint64_t ee = std::uint64_t(r);
    while (ee) {
        if (ee & 1) acc = gf2_mul_noref(poly_, acc, base);
        base = gf2_mul_noref(poly_, base, base);
        ee >>= 1;
    }
    return acc;
}

elem FieldSpec::rel_trace(elem a, unsigned k) const {
    if (k == 0 || m_ % k != 0) throw std::invalid_argument("rel_trace: k must divide m");
    elem t = 0, s = a;
    for (unsigned i = 0; i < m_ / k; ++i) {
        t ^= s;
        for (unsigned j = 0; j < k; ++j) s = mul(s, s);
    }
    return t;
}

std::uint32_t FieldSpec::exp_frac(std::int64_t num, std::int64_t den) const {
    std::int64_t n = mult_order();
    std::int64_t d = den % n;
    if (d < 0) d += n;
    std::uint64_t dinv = mod_inverse(std::uint64_t(d), std::uint64_t(n));
    std::int64_t nn = num % n;
    if (nn < 0) nn += n;
    return std::uint32_t((std::uint64_t(nn) * dinv) % std::uint64_t(n));
}

} // namespace bfc
