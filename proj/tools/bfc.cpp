#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bfc/boolfun.hpp"
#include "bfc/codes.hpp"
#include "bfc/defining_set.hpp"
#include "bfc/diffsets.hpp"
#include "bfc/funlib.hpp"
#include "bfc/gf2m.hpp"
#include "bfc/opoly.hpp"
#include "bfc/verify.hpp"

using json = nlohmann::json; // std::map-backed object: keys always sorted

namespace {

constexpr int kExitUsage = 64;
constexpr int kExitTheoremMismatch = 2;
constexpr int kExitIo = 74;

std::string hex(bfc::elem v) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "0x%x", v);
    return buf;
}

bfc::elem parse_elem(const std::string& text, const bfc::FieldSpec& F) {
    std::size_t pos = 0;
    unsigned long long v = std::stoull(text, &pos, 16);
    if (pos != text.size() || v >= F.order())
        throw std::invalid_argument("element out of range: " + text);
    return bfc::elem(v);
}

std::vector<bfc::elem> parse_elems(const std::string& csv, const bfc::FieldSpec& F) {
    std::vector<bfc::elem> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_elem(item, F));
    return out;
}

json header(const bfc::FieldSpec& F) {
    return json{{"schema", 1}, {"m", F.m()}, {"field", F.name()}};
}

json dist_rows(const std::map<std::uint64_t, std::uint64_t>& rows) {
    json arr = json::array();
    for (auto& [w, a] : rows) arr.push_back(json::array({w, a}));
    return arr;
}

json summary_json(const bfc::CodeSummary& cs) {
    json j;
    j["n"] = cs.n;
    j["k"] = cs.k;
    j["d_min"] = cs.d_min;
    j["zero_multiplicity"] = cs.zero_mult;
    j["distribution"] = dist_rows(cs.weight_distribution);
    return j;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

// --set grammar: elems:<hex,...> | image:<family> | image*:<family> |
// support:<family>
bfc::DefiningSet parse_set(const std::string& spec, const bfc::FieldSpec& F) {
    auto colon = spec.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("set spec needs a prefix (elems:/image:/image*:/support:)");
    std::string head = spec.substr(0, colon), rest = spec.substr(colon + 1);
    if (head == "elems") return bfc::DefiningSet(F.m(), parse_elems(rest, F));
    bfc::FamilyId id = bfc::FamilyId::parse(rest);
    if (head == "image") return bfc::image_set(F, bfc::instantiate(F, id));
    if (head == "image*") return bfc::image_set_star(F, bfc::instantiate(F, id));
    if (head == "support")
        return bfc::DefiningSet(F.m(), bfc::instantiate_bool(F, id).support());
    throw std::invalid_argument("unknown set prefix: " + head);
}

int cmd_walsh(unsigned m, const std::string& fn) {
    bfc::FieldSpec F(m);
    bfc::TruthTable tt = bfc::instantiate_bool(F, bfc::FamilyId::parse(fn));
    bfc::WalshSpectrum ws = bfc::walsh_transform(F, tt);
    json j = header(F);
    j["function"] = fn;
    json sum = json::array();
    for (auto it = ws.summary.rbegin(); it != ws.summary.rend(); ++it)
        sum.push_back(json::array({it->first, it->second}));
    j["spectrum_summary"] = sum;
    j["class"] = bfc::classify(ws, m).to_string();
    emit(j);
    return 0;
}

int cmd_fn_eval(unsigned m, const std::string& fn, const std::string& x_hex) {
    bfc::FieldSpec F(m);
    bfc::FamilyId id = bfc::FamilyId::parse(fn);
    bfc::elem x = parse_elem(x_hex, F);
    json j = header(F);
    j["function"] = fn;
    j["x"] = hex(x);
    if (bfc::is_boolean_family(id.name))
        j["y"] = bfc::instantiate_bool(F, id)(x);
    else
        j["y"] = hex(bfc::instantiate(F, id)(x));
    emit(j);
    return 0;
}

int cmd_code(const std::string& mode, unsigned m, const std::string& fn,
             const std::string& elems, bool csv) {
    bfc::FieldSpec F(m);
    bfc::DefiningSet D(m, {});
    if (mode == "from-set") {
        D = bfc::DefiningSet(m, parse_elems(elems, F));
    } else {
        bfc::FamilyId id = bfc::FamilyId::parse(fn);
        if (mode == "from-support")
            D = bfc::DefiningSet(m, bfc::instantiate_bool(F, id).support());
        else
            D = bfc::image_set(F, bfc::instantiate(F, id));
    }
    bfc::CodeSummary cs = bfc::code_from_defining_set(F, D);
    if (csv) {
        for (auto& [w, a] : cs.weight_distribution)
            if (w > 0) std::cout << w << "," << a << "\n";
        return 0;
    }
    json j = header(F);
    j.update(summary_json(cs));
    j["source"] = json{{"kind", mode}, {"function", fn}, {"size", D.size()}};
    emit(j);
    return 0;
}

int cmd_opoly(unsigned m, const std::string& fn, const std::string& mode) {
    bfc::FieldSpec F(m);
    bfc::OPolyMode om = bfc::OPolyMode::TwoToOne;
    if (mode == "def") om = bfc::OPolyMode::Definition;
    else if (mode == "both") om = bfc::OPolyMode::Both;
    else if (mode != "2to1") throw std::invalid_argument("mode must be def|2to1|both");
    bfc::OPolyReport r =
        bfc::is_o_polynomial(F, bfc::instantiate(F, bfc::FamilyId::parse(fn)), om, fn);
    json j = header(F);
    j["family"] = fn;
    j["mode"] = mode;
    j["is_permutation"] = r.is_permutation;
    if (r.definition_test) j["definition_test"] = *r.definition_test;
    if (r.two_to_one_test) j["two_to_one_test"] = *r.two_to_one_test;
    j["verdict"] = r.verdict;
    if (r.witness) {
        json w;
        w["s_or_u"] = hex(r.witness->s_or_u);
        w["what"] = r.witness->what;
        json pts = json::array();
        for (bfc::elem p : r.witness->colliding) pts.push_back(hex(p));
        w["colliding"] = pts;
        j["witness"] = w;
    }
    emit(j);
    return 0;
}

int cmd_diffset(unsigned m, const std::string& group, const std::string& set_spec) {
    bfc::FieldSpec F(m);
    bfc::DefiningSet D = parse_set(set_spec, F);
    bfc::DiffSetReport r;
    if (group == "add") r = bfc::is_additive_difference_set(F, D);
    else if (group == "mult") r = bfc::is_multiplicative_difference_set(F, D);
    else throw std::invalid_argument("group must be add|mult");
    json j = header(F);
    j["group"] = r.group_name();
    j["set"] = set_spec;
    j["v"] = r.v;
    j["k"] = r.k;
    if (r.lambda) j["lambda"] = *r.lambda;
    j["verdict"] = r.verdict;
    if (r.counterexample) {
        j["counterexample"] = hex(*r.counterexample);
        if (r.counterexample_count) j["counterexample_count"] = *r.counterexample_count;
    }
    emit(j);
    return 0;
}

json report_json(const bfc::VerificationReport& r, bool timings) {
    json j;
    j["id"] = r.id;
    j["kind"] = bfc::to_string(r.kind);
    j["m"] = r.m;
    j["field"] = bfc::FieldSpec(r.m).name();
    if (!r.params.empty()) j["params"] = r.params;
    j["verdict"] = bfc::to_string(r.verdict);
    if (!r.detail.empty()) j["detail"] = r.detail;
    if (r.actual) j["actual"] = summary_json(*r.actual);
    if (!r.expected_rows.empty()) j["expected"] = dist_rows(r.expected_rows);
    if (!r.diffs.empty()) j["diffs"] = r.diffs;
    if (timings) j["millis"] = r.millis;
    return j;
}

int cmd_verify(const std::string& ids, unsigned m_min, unsigned m_max, const std::string& out,
               unsigned jobs, bool timings) {
    // Enumerate applicable (claim, m) pairs in deterministic order, then farm
    // the runs out to the pool; assembly order never depends on the schedule.
    struct Task {
        const bfc::Claim* claim;
        unsigned m;
    };
    std::vector<Task> tasks;
    for (const bfc::Claim& c : bfc::claim_registry()) {
        if (!bfc::glob_match(ids, c.id)) continue;
        for (unsigned m = m_min; m <= m_max; ++m)
            if (c.applicable(m)) tasks.push_back({&c, m});
    }
    std::vector<bfc::VerificationReport> reports(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next.fetch_add(1); i < tasks.size(); i = next.fetch_add(1))
            reports[i] = bfc::run_claim(tasks[i].claim->id, tasks[i].m);
    };
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    json j;
    j["schema"] = 1;
    j["filter"] = json{{"ids", ids}, {"m_min", m_min}, {"m_max", m_max}};
    json arr = json::array();
    unsigned mismatches = 0, findings = 0;
    for (const auto& r : reports) {
        arr.push_back(report_json(r, timings));
        if (r.verdict == bfc::Verdict::Mismatch) {
            if (r.kind == bfc::ClaimKind::Theorem || r.kind == bfc::ClaimKind::Corollary)
                ++mismatches;
            else
                ++findings;
        }
    }
    j["reports"] = arr;
    j["counts"] = json{{"total", reports.size()},
                       {"theorem_mismatches", mismatches},
                       {"conjecture_findings", findings}};

    std::string text = j.dump(2) + "\n";
    if (out.empty()) {
        std::cout << text;
    } else {
        std::ofstream os(out, std::ios::binary);
        if (!os || !(os << text) || !os.flush()) {
            std::cerr << "bfc: cannot write " << out << "\n";
            return kExitIo;
        }
    }
    return bfc::has_theorem_mismatch(reports) ? kExitTheoremMismatch : 0;
}

int cmd_manifest() {
    json arr = json::array();
    for (const bfc::Claim& c : bfc::claim_registry())
        arr.push_back(json{{"id", c.id},
                           {"kind", bfc::to_string(c.kind)},
                           {"statement", c.statement},
                           {"budget_max_m", c.budget_max_m}});
    json j;
    j["schema"] = 1;
    j["claims"] = arr;
    std::cout << j.dump(2) << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"binary codes from Boolean functions: fields, spectra, codes, o-polynomials, "
                 "difference sets, claim verification"};
    app.require_subcommand(1);

    unsigned m = 0;
    std::string fn, x_hex, elems, mode = "2to1", group, set_spec;
    bool csv = false;

    auto* walsh = app.add_subcommand("walsh", "Walsh spectrum summary of a catalog function");
    walsh->add_option("--m", m, "field degree")->required();
    walsh->add_option("--fn", fn, "family, e.g. gold:h=1")->required();

    auto* fncmd = app.add_subcommand("fn", "function catalog utilities");
    auto* fneval = fncmd->add_subcommand("eval", "evaluate a catalog function at a point");
    fneval->add_option("--m", m, "field degree")->required();
    fneval->add_option("--fn", fn, "family, e.g. segre:a=0x5")->required();
    fneval->add_option("--x", x_hex, "input element (hex)")->required();
    fncmd->require_subcommand(1);

    auto* code = app.add_subcommand("code", "weight distribution of a defining-set code");
    std::string code_mode;
    for (const char* sub : {"from-support", "from-image", "from-set"}) {
        auto* sc = code->add_subcommand(sub);
        sc->add_option("--m", m, "field degree")->required();
        if (std::string(sub) == "from-set")
            sc->add_option("--elems", elems, "comma-separated hex elements")->required();
        else
            sc->add_option("--fn", fn, "family")->required();
        sc->add_flag("--csv", csv, "emit weight,count rows");
        sc->callback([sub, &code_mode] { code_mode = sub; });
    }
    code->require_subcommand(1);

    auto* opoly = app.add_subcommand("opoly", "o-polynomial tests");
    auto* ocheck = opoly->add_subcommand("check", "run the o-polynomial predicate");
    ocheck->add_option("--m", m, "field degree")->required();
    ocheck->add_option("--fn", fn, "family")->required();
    ocheck->add_option("--mode", mode, "def|2to1|both");
    opoly->require_subcommand(1);

    auto* diffset = app.add_subcommand("diffset", "difference-set tests");
    auto* dcheck = diffset->add_subcommand("check", "sweep the difference function");
    dcheck->add_option("--m", m, "field degree")->required();
    dcheck->add_option("--group", group, "add|mult")->required();
    dcheck->add_option("--set", set_spec, "elems:<hex,..> | image:<fam> | image*:<fam> | support:<fam>")
        ->required();
    diffset->require_subcommand(1);

    std::string ids = "*", out;
    unsigned m_min = 3, m_max = 8, jobs = 1;
    bool timings = false, manifest = false;
    auto* verify = app.add_subcommand("verify", "run the claim registry");
    verify->add_option("--ids", ids, "claim id glob");
    verify->add_option("--m-min", m_min, "smallest m");
    verify->add_option("--m-max", m_max, "largest m");
    verify->add_option("--out", out, "write the report JSON here instead of stdout");
    verify->add_option("--jobs", jobs, "worker pool size (output independent of this)");
    verify->add_flag("--timings", timings, "include wall times (breaks byte-identical output)");
    verify->add_flag("--manifest", manifest, "print the claims manifest and exit");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        if (walsh->parsed()) return cmd_walsh(m, fn);
        if (fncmd->parsed()) return cmd_fn_eval(m, fn, x_hex);
        if (code->parsed()) return cmd_code(code_mode, m, fn, elems, csv);
        if (opoly->parsed()) return cmd_opoly(m, fn, mode);
        if (diffset->parsed()) return cmd_diffset(m, group, set_spec);
        if (verify->parsed()) {
            if (manifest) return cmd_manifest();
            return cmd_verify(ids, m_min, m_max, out, jobs, timings);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "bfc: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "bfc: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "bfc: " << e.what() << "\n";
        return 1;
    }
    return kExitUsage;
}
