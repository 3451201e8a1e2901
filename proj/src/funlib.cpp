#include "bfc/funlib.hpp"

#include <numeric>
#include <stdexcept>

namespace bfc {

namespace {

std::uint64_t pow2(unsigned k) { return std::uint64_t(1) << k; }

[[noreturn]] void fail(const std::string& family, const std::string& cond) {
    throw std::invalid_argument(family + ": precondition failed: " + cond);
}

void require(bool ok, const std::string& family, const std::string& cond) {
    if (!ok) fail(family, cond);
}

std::uint64_t exact_div(std::uint64_t num, std::uint64_t den,
                        const std::string& family, const std::string& what) {
    if (num % den != 0)
        fail(family, what + " is not an integer");
    return num / den;
}

// C(n, k) mod 2 by Lucas' theorem
unsigned binom_odd(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    return (n & k) == k ? 1u : 0u;
}

// positive exponent normalized into [1, 2^m-1] so that pow() keeps the
// x^e, e > 0 semantics at x = 0
std::uint64_t norm_exp(const FieldSpec& spec, std::uint64_t e) {
    if (e == 0) return 0;
    std::uint64_t N = spec.mult_order();
    std::uint64_t r = e % N;
    return r == 0 ? N : r;
}

elem_fn monomial(const FieldSpec& spec, std::uint64_t d) {
    std::uint64_t e = norm_exp(spec, d);
    const FieldSpec* s = &spec;
    return [s, e](elem x) { return s->pow(x, std::int64_t(e)); };
}

elem_fn trinomial(const FieldSpec& spec, std::uint64_t e1, std::uint64_t e2, std::uint64_t e3) {
    UnivariatePoly p{{{e1, 1}, {e2, 1}, {e3, 1}}};
    UnivariatePoly q = p.reduced(spec);
    const FieldSpec* s = &spec;
    return [s, q](elem x) { return q.eval(*s, x); };
}

} // namespace

elem UnivariatePoly::eval(const FieldSpec& spec, elem x) const {
    elem acc = 0;
    if (x == 0) {
        for (auto& [e, c] : terms)
            if (e == 0) acc ^= c;
        return acc;
    }
    for (auto& [e, c] : terms)
        acc ^= spec.mul(c, spec.pow(x, std::int64_t(e % spec.mult_order())));
    return acc;
}

UnivariatePoly UnivariatePoly::reduced(const FieldSpec& spec) const {
    std::map<std::uint64_t, elem> acc;
    for (auto& [e, c] : terms)
        acc[norm_exp(spec, e)] ^= c;
    UnivariatePoly out;
    for (auto& [e, c] : acc)
        if (c != 0) out.terms.emplace_back(e, c);
    return out;
}

UnivariatePoly dickson(const FieldSpec& spec, std::uint64_t h, elem a) {
    if (h == 0) throw std::invalid_argument("dickson: order must be >= 1");
    UnivariatePoly p;
    for (std::uint64_t i = 0; 2 * i <= h; ++i) {
        // (h/(h-i)) C(h-i, i) = C(h-i, i) + C(h-i-1, i-1), taken mod 2
        unsigned c = (i == 0) ? 1u : (binom_odd(h - i, i) ^ binom_odd(h - i - 1, i - 1));
        if (!c) continue;
        elem coeff = spec.pow(a, std::int64_t(i)); // (-a)^i = a^i in char 2
        if (coeff == 0 && i > 0) continue;
        p.terms.emplace_back(h - 2 * i, coeff);
    }
    return p;
}

std::uint64_t FamilyId::param(const std::string& key) const {
    auto it = params.find(key);
    if (it == params.end())
        throw std::invalid_argument("family " + name + ": missing parameter '" + key + "'");
    return it->second;
}

std::uint64_t FamilyId::param_or(const std::string& key, std::uint64_t dflt) const {
    auto it = params.find(key);
    return it == params.end() ? dflt : it->second;
}

FamilyId FamilyId::parse(const std::string& text) {
    FamilyId id;
    if (text.rfind("apnshift(", 0) == 0 && text.back() == ')') {
        id.name = "apnshift";
        id.inner = text.substr(9, text.size() - 10);
        return id;
    }
    std::string head = text;
    std::string rest;
    if (auto pos = text.find(':'); pos != std::string::npos) {
        head = text.substr(0, pos);
        rest = text.substr(pos + 1);
    }
    // dds-a..k and dds2-1..3 carry their variant in the name
    if (head.rfind("dds-", 0) == 0 && head.size() == 5 && head[4] >= 'a' && head[4] <= 'k') {
        id.name = "dds";
        id.params["v"] = std::uint64_t(head[4] - 'a');
    } else if (head.rfind("dds2-", 0) == 0 && head.size() == 6 && head[5] >= '1' && head[5] <= '3') {
        id.name = "dds2";
        id.params["v"] = std::uint64_t(head[5] - '0');
    } else {
        id.name = head;
    }
    while (!rest.empty()) {
        std::string tok;
        if (auto pos = rest.find(','); pos != std::string::npos) {
            tok = rest.substr(0, pos);
            rest = rest.substr(pos + 1);
        } else {
            tok = rest;
            rest.clear();
        }
        auto eq = tok.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("family parameter '" + tok + "' is not key=value");
        id.params[tok.substr(0, eq)] = std::stoull(tok.substr(eq + 1), nullptr, 0);
    }
    return id;
}

std::string FamilyId::to_string() const {
    if (name == "apnshift") return "apnshift(" + inner + ")";
    std::string s = name;
    if (name == "dds") return "dds-" + std::string(1, char('a' + param("v")));
    if (name == "dds2") return "dds2-" + std::to_string(param("v"));
    char sep = ':';
    for (auto& [k, v] : params) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%c%s=0x%llx", sep, k.c_str(),
                      static_cast<unsigned long long>(v));
        s += buf;
        sep = ',';
    }
    return s;
}

bool is_boolean_family(const std::string& name) {
    return name == "const0" || name == "const1" || name == "tracefn" ||
           name == "tr" || name == "helleseth" || name == "liyue" ||
           name == "caohu_a" || name == "caohu_b";
}

elem_fn instantiate(const FieldSpec& spec, const FamilyId& id) {
    const FieldSpec* s = &spec;
    const unsigned m = spec.m();
    const std::string& f = id.name;

    if (f == "identity") return [](elem x) { return x; };
    if (f == "mono") return monomial(spec, id.param("d"));
    if (f == "gold") {
        std::uint64_t h = id.param("h");
        require(h >= 1, f, "h >= 1");
        return monomial(spec, pow2(unsigned(h)) + 1);
    }
    if (f == "kasami") {
        std::uint64_t h = id.param("h");
        require(h >= 1, f, "h >= 1");
        return monomial(spec, pow2(unsigned(2 * h)) - pow2(unsigned(h)) + 1);
    }
    if (f == "welch") {
        require(m % 2 == 1, f, "m odd");
        return monomial(spec, pow2((m - 1) / 2) + 3);
    }
    if (f == "niho_a") {
        require(m % 4 == 1, f, "m = 1 mod 4");
        return monomial(spec, pow2((m - 1) / 2) + pow2((m - 1) / 4) - 1);
    }
    if (f == "niho_b") {
        require(m % 4 == 3, f, "m = 3 mod 4");
        return monomial(spec, pow2((m - 1) / 2) + pow2((3 * m - 1) / 4) - 1);
    }
    if (f == "inverse") return monomial(spec, spec.order() - 2);
    if (f == "trans") {
        std::uint64_t h = id.param("h");
        require(h >= 1 && h < m + 1, f, "1 <= h <= m");
        return monomial(spec, pow2(unsigned(h)));
    }
    if (f == "segre" || f == "xd5") {
        // Segre_a(x) = x D_5(x, a) = x^6 + a x^4 + a^2 x^2
        elem a = elem(id.param_or("a", 0));
        return [s, a](elem x) {
            elem x2 = s->mul(x, x);
            elem x4 = s->mul(x2, x2);
            elem x6 = s->mul(x4, x2);
            return elem(x6 ^ s->mul(a, x4) ^ s->mul(s->mul(a, a), x2));
        };
    }
    if (f == "glynn1") {
        require(m % 2 == 1, f, "m odd");
        return monomial(spec, 3 * pow2((m + 1) / 2) + 4);
    }
    if (f == "glynn2") {
        require(m % 2 == 1, f, "m odd");
        elem a = elem(id.param_or("a", 0));
        unsigned k = (m % 4 == 1) ? (3 * m + 1) / 4 : (m + 1) / 4;
        std::uint64_t e1 = pow2((m + 1) / 2) + pow2(k);
        std::uint64_t e2 = pow2((m + 1) / 2);
        std::uint64_t e3 = pow2(k);
        elem a3 = spec.pow(a, std::int64_t(norm_exp(spec, e3)));
        return [s, a, a3, e1, e2, e3](elem x) {
            return elem(s->pow(x, std::int64_t(e1)) ^
                        s->mul(a, s->pow(x, std::int64_t(e2))) ^
                        s->mul(a3, s->pow(x, std::int64_t(e3))));
        };
    }
    if (f == "cherowitzo") {
        require(m % 2 == 1, f, "m odd");
        elem a = elem(id.param_or("a", 1));
        unsigned e = (m + 1) / 2;
        std::uint64_t e1 = pow2(e), e2 = pow2(e) + 2, e3 = 3 * pow2(e) + 4;
        elem a2 = spec.pow(a, std::int64_t(pow2(e) + 2));
        return [s, a, a2, e1, e2, e3](elem x) {
            return elem(s->pow(x, std::int64_t(e1)) ^
                        s->mul(a, s->pow(x, std::int64_t(e2))) ^
                        s->mul(a2, s->pow(x, std::int64_t(e3))));
        };
    }
    if (f == "payne") {
        require(m % 2 == 1, f, "m odd");
        elem a = elem(id.param_or("a", 1));
        std::uint64_t e56 = spec.exp_frac(5, 6);
        std::uint64_t e36 = spec.exp_frac(3, 6); // = 2^{m-1}
        std::uint64_t e16 = spec.exp_frac(1, 6);
        elem a2 = spec.mul(a, a);
        return [s, a, a2, e56, e36, e16](elem x) {
            return elem(s->pow(x, std::int64_t(e56)) ^
                        s->mul(a, s->pow(x, std::int64_t(e36))) ^
                        s->mul(a2, s->pow(x, std::int64_t(e16))));
        };
    }
    if (f == "subiaco") {
        elem a = elem(id.param_or("a", 1));
        require(a != 0 && spec.trace(spec.inv(a)) == 1, f, "Tr(1/a) = 1");
        if (m % 4 == 2) {
            bool in_gf4 = spec.pow(a, 4) == a;
            require(!in_gf4, f, "a not in GF(4) when m = 2 mod 4");
        }
        elem a2 = spec.mul(a, a);
        elem b = spec.mul(a2, elem(1u ^ a ^ a2)); // a^2 (1 + a + a^2)
        return [s, a2, b](elem x) {
            elem x2 = s->mul(x, x);
            elem x3 = s->mul(x2, x);
            elem x4 = s->mul(x2, x2);
            elem num = elem(s->mul(a2, elem(x4 ^ x)) ^ s->mul(b, elem(x3 ^ x2)));
            elem den = elem(x4 ^ s->mul(a2, x2) ^ 1u);
            elem q = den ? s->mul(num, s->inv(den)) : 0;
            return elem(q ^ s->sqrt(x));
        };
    }
    if (f == "dds") {
        require(m % 2 == 1 && m >= 5, f, "m odd, m >= 5");
        std::uint64_t q = spec.order();
        std::uint64_t e1 = 0, e2 = 0;
        switch (id.param("v")) {
        case 0: e1 = q - 17; e2 = exact_div(q + 19, 3, f, "(2^m+19)/3"); break;
        case 1: e1 = q - pow2(m - 4) - 1; e2 = q - exact_div(pow2(m - 2) + 4, 3, f, "(2^{m-2}+4)/3"); break;
        case 2: e1 = q - 3; e2 = pow2((m + 3) / 2) + pow2((m + 1) / 2) + 4; break;
        case 3: e1 = q - pow2((m - 1) / 2) - 1; e2 = pow2(m - 1) - pow2((m - 1) / 2); break;
        case 4: e1 = q - 2 - exact_div(pow2(m - 1) - 4, 3, f, "(2^{m-1}-4)/3");
                e2 = q - 4 - exact_div(q - 8, 3, f, "(2^m-8)/3"); break;
        case 5: e1 = q - pow2((m + 1) / 2) + pow2((m - 1) / 2); e2 = q - pow2((m + 1) / 2) - 1; break;
        case 6: e1 = q - 3 * (pow2((m + 1) / 2) - 1); e2 = pow2((m + 1) / 2) + pow2((m - 1) / 2) - 2; break;
        case 7: e1 = q - pow2(m - 2) - 1; e2 = pow2(m - 1) - 2; break;
        case 8: e1 = q - pow2((m + 3) / 2) - 3; e2 = pow2((m + 1) / 2) + 2; break;
        case 9: e1 = q - 3 * (pow2((m - 1) / 2) + 1); e2 = pow2(m - 1) - 1; break;
        case 10: e1 = q - 5; e2 = 6; break;
        default: fail(f, "variant in a..k");
        }
        return trinomial(spec, e1, e2, 1);
    }
    if (f == "j170") {
        require(m % 4 == 2 && m >= 6, f, "m = 2 mod 4, m >= 6");
        std::uint64_t e = pow2((m - 2) / 2) + pow2(m - 1);
        return trinomial(spec, 1, e, e + 1);
    }
    if (f == "j171") {
        require(m % 2 == 0 && m >= 4, f, "m even, m >= 4");
        return trinomial(spec, 1, 2, spec.order() - pow2(m / 2) + 1);
    }
    if (f == "dds2") {
        switch (id.param("v")) {
        case 1:
            require(m % 2 == 1, f, "m odd");
            return trinomial(spec, 1, pow2((m + 1) / 2) - 1, spec.order() - pow2((m + 1) / 2) + 1);
        case 2: {
            require(m % 2 == 1, f, "m odd");
            std::uint64_t e1 = exact_div(spec.order() + 1, 3, f, "(2^m+1)/3");
            std::uint64_t e2 = exact_div(2 * spec.order() - 1, 3, f, "(2^{m+1}-1)/3");
            return trinomial(spec, 1, e1, e2);
        }
        case 3:
            require(m % 2 == 0, f, "m even");
            return trinomial(spec, 1, pow2((m + 2) / 2) - 1, spec.order() - pow2(m / 2) + 1);
        default: fail(f, "variant in 1..3");
        }
    }
    if (f == "inv6") {
        require(m % 2 == 1, f, "m odd");
        return monomial(spec, spec.exp_frac(1, 6));
    }
    if (f == "cusick3") {
        require(m % 4 == 2, f, "m = 2 mod 4");
        return monomial(spec, pow2(m / 2) + pow2((m + 2) / 4) + 1);
    }
    if (f == "cusick4") {
        require(m % 4 == 2, f, "m = 2 mod 4");
        return monomial(spec, pow2((m + 2) / 2) + 3);
    }
    if (f == "niho4a") {
        require(m % 2 == 0, f, "m even");
        return monomial(spec, pow2((m + 2) / 2) - 1);
    }
    if (f == "niho4b") {
        require(m % 4 == 0, f, "m = 0 mod 4");
        return monomial(spec, (pow2(m / 2) + 1) * (pow2(m / 4) - 1) + 2);
    }
    if (f == "dobbertin") {
        std::uint64_t h = id.param("h");
        require(m % 2 == 0, f, "m even");
        require(std::gcd(h, std::uint64_t(m)) == 1, f, "gcd(h, m) = 1");
        // d = (2^{(m+2)h/2} - 1)/(2^h - 1) = sum_{i=0}^{m/2} 2^{hi}, mod 2^m-1
        std::uint64_t N = spec.mult_order();
        std::uint64_t d = 0;
        for (unsigned i = 0; i <= m / 2; ++i)
            d = (d + pow2(unsigned((h * i) % m))) % N;
        if (d == 0) d = N;
        return monomial(spec, d);
    }
    if (f == "hr05") {
        std::uint64_t h = id.param("h");
        require(m % 4 == 0, f, "m = 0 mod 4");
        require(h >= 1 && (m / 2) % (2 * h) == 0, f, "2h divides m/2");
        std::uint64_t num = spec.order() + pow2(unsigned(h + 1)) - pow2(m / 2 + 1) - 1;
        std::uint64_t d = exact_div(num, pow2(unsigned(h)) - 1, f, "exponent");
        return monomial(spec, d);
    }
    if (f == "apnshift") {
        elem_fn F = instantiate(spec, FamilyId::parse(id.inner));
        return apn_shift(spec, F);
    }

    throw std::invalid_argument("unknown function family: " + f);
}

TruthTable instantiate_bool(const FieldSpec& spec, const FamilyId& id) {
    const unsigned m = spec.m();
    const std::string& f = id.name;
    if (f == "const0")
        return TruthTable::from_evaluator(spec, [](elem) { return 0u; });
    if (f == "const1")
        return TruthTable::from_evaluator(spec, [](elem) { return 1u; });
    if (f == "tracefn")
        return TruthTable::from_evaluator(spec, [&](elem x) { return spec.trace(x); });
    if (f == "tr") {
        std::uint64_t d = id.param("d");
        elem a = elem(id.param_or("a", 1));
        std::uint64_t e = norm_exp(spec, d);
        return TruthTable::from_evaluator(spec, [&](elem x) {
            return spec.trace(spec.mul(a, spec.pow(x, std::int64_t(e))));
        });
    }
    if (f == "helleseth") {
        require(m % 2 == 0 && m >= 6, f, "m even, m >= 6");
        std::uint64_t d = pow2(m / 2) + 3;
        return TruthTable::from_evaluator(spec, [&](elem x) {
            return spec.trace(spec.pow(x, std::int64_t(d)));
        });
    }
    if (f == "liyue") {
        require(m % 2 == 0, f, "m even");
        elem a = elem(id.param("a"));
        require(spec.rel_trace(a, 2) != 0, f, "Tr_{GF(4)}(a) != 0");
        std::uint64_t d = spec.mult_order() / 3;
        return TruthTable::from_evaluator(spec, [&](elem x) {
            return spec.trace(spec.mul(a, spec.pow(x, std::int64_t(d))));
        });
    }
    if (f == "caohu_a" || f == "caohu_b") {
        require(m % 2 == 0, f, "m even");
        elem lam = elem(id.param("lambda"));
        elem mu = elem(id.param("mu"));
        require(mu != 0 && spec.pow(mu, std::int64_t(pow2(m / 2))) == mu, f,
                "mu in GF(2^{m/2})^*");
        // lambda + lambda^{2^{m/2}} = 1 (read as the relative trace to the
        // half field; the printed condition uses 2^m, which is the identity)
        require(elem(lam ^ spec.pow(lam, std::int64_t(pow2(m / 2)))) == 1, f,
                "lambda + lambda^{2^{m/2}} = 1");
        std::uint64_t d1 = pow2(m / 2) + 1, d2 = pow2(m / 2) - 1;
        bool variant_b = (f == "caohu_b");
        return TruthTable::from_evaluator(spec, [&, variant_b](elem x) {
            unsigned t1 = spec.trace(spec.mul(lam, spec.pow(x, std::int64_t(d1))));
            unsigned t2 = spec.trace(spec.mul(mu, spec.pow(x, std::int64_t(d2))));
            unsigned tx = spec.trace(x);
            return variant_b ? (((1u ^ tx) & t1) ^ (tx & t2)) : (t1 ^ (tx & t2));
        });
    }
    // vectorial family: take the absolute trace
    return TruthTable::from_trace_of(spec, instantiate(spec, id));
}

elem_fn apn_shift(const FieldSpec& spec, const elem_fn& F) {
    (void)spec;
    return [F](elem x) { return elem(F(x) ^ F(x ^ 1u) ^ 1u); };
}

DefiningSet image_set(const FieldSpec& spec, const elem_fn& f) {
    std::vector<std::uint64_t> seen((spec.order() + 63) / 64, 0);
    for (std::uint64_t x = 0; x < spec.order(); ++x) {
        elem y = f(elem(x));
        seen[y >> 6] |= std::uint64_t(1) << (y & 63);
    }
    std::vector<elem> out;
    for (std::uint64_t v = 0; v < spec.order(); ++v)
        if ((seen[v >> 6] >> (v & 63)) & 1) out.push_back(elem(v));
    return DefiningSet(spec.m(), std::move(out));
}

DefiningSet image_set_star(const FieldSpec& spec, const elem_fn& f) {
    return image_set(spec, f).without_zero();
}

DefiningSet image_of_xx1(const FieldSpec& spec, const elem_fn& f) {
    return image_set(spec, [&](elem x) { return f(spec.mul(x, elem(x ^ 1u))); });
}

std::map<std::uint64_t, std::uint64_t> e_to_1_profile(const FieldSpec& spec, const elem_fn& f) {
    std::vector<std::uint32_t> count(spec.order(), 0);
    for (std::uint64_t x = 0; x < spec.order(); ++x) ++count[f(elem(x))];
    std::map<std::uint64_t, std::uint64_t> profile;
    for (auto c : count)
        if (c > 0) ++profile[c];
    return profile;
}

bool is_e_to_1(const FieldSpec& spec, const elem_fn& f, std::uint64_t e) {
    auto p = e_to_1_profile(spec, f);
    return p.size() == 1 && p.begin()->first == e;
}

bool verify_comp_inverse(const FieldSpec& spec, const elem_fn& f, const elem_fn& g) {
    auto ft = tabulate(spec, f);
    std::vector<std::uint64_t> seen((spec.order() + 63) / 64, 0);
    for (elem y : ft) {
        if ((seen[y >> 6] >> (y & 63)) & 1)
            throw std::invalid_argument("verify_comp_inverse: f is not a permutation");
        seen[y >> 6] |= std::uint64_t(1) << (y & 63);
    }
    for (std::uint64_t x = 0; x < spec.order(); ++x)
        if (g(ft[x]) != elem(x)) return false;
    return true;
}

DefiningSet wdx_defining_set(const FieldSpec& spec, std::uint64_t r, std::uint64_t mr) {
    std::uint64_t rm = 1;
    for (std::uint64_t i = 0; i < mr; ++i) rm *= r;
    if (rm < 9) fail("wdx", "r^m >= 9");
    std::uint64_t phi = (rm / r) * (r - 1);
    require(spec.m() == phi, "wdx", "m = phi(r^mr)");
    // order of 2 mod r^mr must be phi(r^mr)
    std::uint64_t v = 2 % rm, ord = 1;
    while (v != 1) {
        v = (v * 2) % rm;
        ++ord;
        if (ord > phi) break;
    }
    require(ord == phi, "wdx", "2 primitive root mod r^mr");
    std::uint64_t t = spec.mult_order() / rm;
    std::vector<elem> out;
    for (std::uint64_t x = 1; x < spec.order(); ++x)
        if (spec.trace(spec.pow(elem(x), std::int64_t(t))) == 0) out.push_back(elem(x));
    return DefiningSet(spec.m(), std::move(out));
}

} // namespace bfc
