#include "bfc/opoly.hpp"

#include <stdexcept>

namespace bfc {

namespace {

// Permutation check over a tabulated map; fills a witness pair on failure.
bool table_is_permutation(const std::vector<elem>& t, std::uint64_t n,
                          std::vector<elem>* collision) {
    std::vector<std::int32_t> first(n, -1);
    for (std::uint64_t x = 0; x < n; ++x) {
        elem y = t[x];
        if (first[y] >= 0) {
            if (collision) *collision = {elem(first[y]), elem(x)};
            return false;
        }
        first[y] = std::int32_t(x);
    }
    return true;
}

} // namespace

bool is_permutation(const FieldSpec& spec, const elem_fn& f) {
    auto t = tabulate(spec, f);
    return table_is_permutation(t, spec.order(), nullptr);
}

OPolyReport is_o_polynomial(const FieldSpec& spec, const elem_fn& f,
                            OPolyMode mode, const std::string& family) {
    const std::uint64_t n = spec.order();
    OPolyReport rep;
    rep.family = family;
    rep.m = spec.m();

    auto ft = tabulate(spec, f);
    rep.is_permutation = table_is_permutation(ft, n, nullptr);

    if (ft[0] != 0) {
        rep.verdict = false;
        rep.witness = OPolyWitness{0, {0}, "f(0) != 0"};
        if (mode != OPolyMode::TwoToOne) rep.definition_test = false;
        if (mode != OPolyMode::Definition) rep.two_to_one_test = false;
        return rep;
    }

    auto run_definition = [&]() -> bool {
        if (!rep.is_permutation) {
            rep.witness = OPolyWitness{0, {}, "f is not a permutation"};
            return false;
        }
        std::vector<elem> fs(n);
        for (std::uint64_t s = 0; s < n; ++s) {
            for (std::uint64_t x = 0; x < n; ++x) {
                elem num = elem(ft[x ^ s] ^ ft[s]);
                fs[x] = x == 0 ? 0 : spec.mul(num, spec.inv(elem(x)));
            }
            std::vector<elem> coll;
            if (!table_is_permutation(fs, n, &coll)) {
                if (!rep.witness)
                    rep.witness = OPolyWitness{elem(s), coll, "secant map not a permutation"};
                return false;
            }
        }
        return true;
    };

    auto run_two_to_one = [&]() -> bool {
        std::vector<std::int32_t> first(n);
        std::vector<std::uint8_t> seen_twice(n);
        for (std::uint64_t u = 1; u < n; ++u) {
            std::fill(first.begin(), first.end(), -1);
            std::fill(seen_twice.begin(), seen_twice.end(), 0);
            std::uint64_t image_size = 0;
            for (std::uint64_t x = 0; x < n; ++x) {
                elem y = elem(ft[x] ^ spec.mul(elem(u), elem(x)));
                if (first[y] < 0) {
                    first[y] = std::int32_t(x);
                    ++image_size;
                } else if (!seen_twice[y]) {
                    seen_twice[y] = 1;
                } else {
                    if (!rep.witness)
                        rep.witness = OPolyWitness{elem(u), {elem(first[y]), elem(x)},
                                                   "f(x)+ux has a 3-collision"};
                    return false;
                }
            }
            // no fiber exceeds 2, so exactly n/2 values means all fibers are 2
            if (image_size != n / 2) {
                if (!rep.witness)
                    rep.witness = OPolyWitness{elem(u), {}, "f(x)+ux has a singleton fiber"};
                return false;
            }
        }
        return true;
    };

    if (mode == OPolyMode::Definition || mode == OPolyMode::Both)
        rep.definition_test = run_definition();
    if (mode == OPolyMode::TwoToOne || mode == OPolyMode::Both)
        rep.two_to_one_test = run_two_to_one();

    if (mode == OPolyMode::Both && rep.definition_test != rep.two_to_one_test)
        throw std::logic_error("is_o_polynomial: definition and 2-to-1 modes disagree");

    rep.verdict = mode == OPolyMode::Definition ? *rep.definition_test
                                                : *rep.two_to_one_test;
    return rep;
}

ClosureTransforms closure_transforms(const FieldSpec& spec, const elem_fn& f) {
    const std::uint64_t n = spec.order();
    auto ft = tabulate(spec, f);

    ClosureTransforms tr;

    std::vector<elem> inv_table(n, 0);
    std::vector<std::uint8_t> hit(n, 0);
    bool perm = true;
    for (std::uint64_t x = 0; x < n; ++x) {
        if (hit[ft[x]]) perm = false;
        hit[ft[x]] = 1;
        inv_table[ft[x]] = elem(x);
    }
    if (perm) {
        tr.inverse = [inv_table](elem x) { return inv_table[x]; };
    } else {
        tr.inverse = [](elem) -> elem {
            throw std::domain_error("closure_transforms: inverse of a non-permutation");
        };
    }

    const FieldSpec* s = &spec;
    tr.fbar = [s, ft](elem x) {
        return x == 0 ? elem(0) : s->mul(x, ft[s->inv(x)]);
    };
    elem f1 = ft[1];
    tr.unit_shift = [ft, f1](elem x) { return elem(ft[x ^ 1u] ^ f1); };
    return tr;
}

elem_fn frobenius_twist(const FieldSpec& spec, const elem_fn& f, unsigned j) {
    if (j < 1 || j > spec.m() - 1)
        throw std::invalid_argument("frobenius_twist: need 1 <= j <= m-1");
    const FieldSpec* s = &spec;
    unsigned m = spec.m();
    elem_fn g = f;
    return [s, g, j, m](elem x) {
        elem y = g(s->pow(x, std::int64_t(1) << j));
        return s->pow(y, std::int64_t(1) << (m - j));
    };
}

std::vector<OrbitEntry> exponent_orbit(const FieldSpec& spec, std::int64_t k) {
    std::int64_t n = spec.mult_order();
    auto entry = [&](const std::string& label, std::int64_t num, std::int64_t den) {
        OrbitEntry e;
        e.label = label;
        try {
            e.exponent = spec.exp_frac(num, den);
        } catch (const std::domain_error&) {
            e.exponent = std::nullopt;
        }
        return e;
    };
    std::vector<OrbitEntry> orbit;
    orbit.push_back(entry("1/k", 1, k));
    std::int64_t one_minus_k = ((1 - k) % n + n) % n;
    if (one_minus_k == 0)
        orbit.push_back(OrbitEntry{"1-k", std::nullopt}); // degenerate at k = 1
    else
        orbit.push_back(OrbitEntry{"1-k", std::uint32_t(one_minus_k)});
    orbit.push_back(entry("1/(1-k)", 1, 1 - k));
    orbit.push_back(entry("k/(k-1)", k, k - 1));
    orbit.push_back(entry("(k-1)/k", k - 1, k));
    return orbit;
}

} // namespace bfc
