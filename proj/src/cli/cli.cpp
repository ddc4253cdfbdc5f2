#include "younglab/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "younglab/characters.hpp"
#include "younglab/errors.hpp"
#include "younglab/forms.hpp"
#include "younglab/limits.hpp"
#include "younglab/linsys.hpp"
#include "younglab/parallel.hpp"
#include "younglab/report.hpp"
#include "younglab/serialize.hpp"
#include "younglab/tableau.hpp"

namespace younglab::cli {

namespace {

class UsageError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

struct Flags {
    int n = 0;
    int max_n = 0;
    std::string lambda;
    std::string rho;
    std::string mu;
    std::string format = "json";
    std::string out;
    std::string check;
    std::map<std::string, CLI::Option*> options;

    bool has(const std::string& name) const {
        const auto it = options.find(name);
        return it != options.end() && it->second->count() > 0;
    }
};

// Rendered payload. tsv and ascii fall back to the JSON when empty.
struct Output {
    Json json;
    std::string tsv;
    std::string ascii;
    int status = kExitOk;
};

Partition require_partition(const Flags& f, const std::string& name, const std::string& value) {
    if (!f.has(name)) throw UsageError(name + " is required");
    return Partition::parse(value);
}

// Degrees 1..max-n for a sweep, or the single degree given by --n.
std::vector<int> degrees(const Flags& f, int lowest, int cap, std::string_view what) {
    if (f.has("--n") == f.has("--max-n")) throw UsageError("exactly one of --n and --max-n is required");
    const int top = f.has("--n") ? f.n : f.max_n;
    const int bottom = f.has("--n") ? f.n : lowest;
    if (top < lowest) throw UsageError("degree must be at least " + std::to_string(lowest));
    check_limit(top, cap, what);
    std::vector<int> out;
    for (int n = bottom; n <= top; ++n) out.push_back(n);
    return out;
}

Json sweep_parameters(const Flags& f) {
    return f.has("--n") ? Json{{"n", f.n}} : Json{{"max_n", f.max_n}};
}

std::string diagram(const Partition& lambda) {
    std::string out;
    for (int row : lambda.parts()) {
        for (int i = 0; i < row; ++i) out += "[]";
        out += '\n';
    }
    return out;
}

Output report_output(const VerificationReport& r) {
    return Output{to_json(r), to_tsv(r), to_ascii(r), r.passed() ? kExitOk : kExitFailed};
}

// Runs `check` on every (n, partition of n) and collects the failures in
// enumeration order.
template <typename Check>
std::vector<Json> sweep_partitions(const std::vector<int>& ns, Check check) {
    std::vector<Partition> items;
    for (int n : ns) {
        for (Partition& lambda : enumerate_partitions(n)) items.push_back(std::move(lambda));
    }
    const auto results = parallel_map(items.size(), [&](std::size_t i) { return check(items[i]); });
    std::vector<Json> failures;
    for (const auto& r : results) {
        for (const Json& c : r) failures.push_back(c);
    }
    return failures;
}

Output cmd_partitions(const Flags& f) {
    if (!f.has("--n")) throw UsageError("--n is required");
    if (f.n < 0) throw UsageError("--n must be nonnegative");
    check_limit(f.n, limits_from_env().combinatorics, "partitions");
    const auto parts = enumerate_partitions(f.n);
    Json list = Json::array();
    std::ostringstream tsv;
    std::ostringstream ascii;
    tsv << "lambda\tconjugate\th\thbar\tf\n";
    for (const Partition& lambda : parts) {
        Json entry{{"lambda", to_json(lambda)}, {"conjugate", to_json(conjugate(lambda))}};
        const std::uint64_t f_lambda = standard_count(lambda);
        if (f.n >= 1) {
            entry["bar"] = to_json(bar(lambda));
            entry["h"] = h(lambda);
            entry["hbar"] = hbar(lambda);
        }
        entry["f"] = f_lambda;
        tsv << lambda.to_string() << '\t' << conjugate(lambda).to_string() << '\t'
            << (f.n >= 1 ? std::to_string(h(lambda)) : "") << '\t'
            << (f.n >= 1 ? std::to_string(hbar(lambda)) : "") << '\t' << f_lambda << '\n';
        ascii << lambda.to_string() << "  f=" << f_lambda << '\n' << diagram(lambda) << '\n';
        list.push_back(std::move(entry));
    }
    return Output{Json{{"n", f.n}, {"count", parts.size()}, {"partitions", std::move(list)}}, tsv.str(),
                  ascii.str()};
}

Output cmd_kostka(const Flags& f) {
    const Partition mu = require_partition(f, "--mu", f.mu);
    const Partition lambda = require_partition(f, "--lambda", f.lambda);
    check_limit(mu.n(), limits_from_env().combinatorics, "kostka");
    const std::uint64_t k = kostka(mu, lambda);
    std::ostringstream tsv;
    tsv << "mu\tlambda\tkostka\n" << mu.to_string() << '\t' << lambda.to_string() << '\t' << k << '\n';
    std::ostringstream ascii;
    ascii << "K(" << mu.to_string() << "; " << lambda.to_string() << ") = " << k << '\n';
    return Output{Json{{"mu", to_json(mu)}, {"lambda", to_json(lambda)}, {"kostka", k}}, tsv.str(), ascii.str()};
}

Output cmd_ssyt(const Flags& f) {
    const Partition mu = require_partition(f, "--mu", f.mu);
    const Partition lambda = require_partition(f, "--lambda", f.lambda);
    check_limit(mu.n(), limits_from_env().combinatorics, "ssyt");
    const auto tableaux = enumerate_ssyt(mu, Weight::of(lambda));
    Json list = Json::array();
    std::ostringstream tsv;
    std::ostringstream ascii;
    tsv << "index\ttableau\n";
    for (std::size_t i = 0; i < tableaux.size(); ++i) {
        list.push_back(to_json(tableaux[i]));
        tsv << i << '\t' << tableaux[i].to_string() << '\n';
        ascii << tableaux[i].to_ascii() << '\n';
    }
    return Output{Json{{"shape", to_json(mu)}, {"weight", to_json(lambda)}, {"count", tableaux.size()},
                       {"tableaux", std::move(list)}},
                  tsv.str(), ascii.str()};
}

Output cmd_bijection(const Flags& f) {
    const Partition lambda = require_partition(f, "--lambda", f.lambda);
    const Partition rho = require_partition(f, "--rho", f.rho);
    check_limit(lambda.n(), limits_from_env().combinatorics, "bijection");
    const BijectionCertificate c = theorem4_bijection(lambda, rho);
    const bool verified = verify_certificate(c);
    Json j = to_json(c);
    j["verified"] = verified;
    std::ostringstream tsv;
    std::ostringstream ascii;
    tsv << "mu\tmu_tableau\tremoved_symbol\trho_tableau\n";
    ascii << "lambda " << lambda.to_string() << ", rho " << rho.to_string() << ": " << c.pairs.size()
          << " pairs, method " << to_string(c.method) << '\n';
    for (const BijectionPair& p : c.pairs) {
        tsv << p.mu_tableau.shape().to_string() << '\t' << p.mu_tableau.to_string() << '\t' << p.removed_symbol
            << '\t' << p.rho_tableau.to_string() << '\n';
        ascii << p.mu_tableau.to_ascii() << "  <->  " << p.removed_symbol << " | " << p.rho_tableau.to_ascii()
              << '\n';
    }
    return Output{std::move(j), tsv.str(), ascii.str(), verified ? kExitOk : kExitFailed};
}

Output cmd_character_table(const Flags& f) {
    if (!f.has("--n")) throw UsageError("--n is required");
    if (f.n < 1) throw UsageError("--n must be positive");
    check_limit(f.n, limits_from_env().characters, "character-table");
    const auto table = character_table(f.n);
    std::ostringstream tsv;
    tsv << "lambda";
    for (const Partition& type : table->classes->types) tsv << '\t' << type.to_string();
    tsv << '\n';
    for (std::size_t i = 0; i < table->shapes.size(); ++i) {
        tsv << table->shapes[i].to_string();
        for (const Rational& v : table->characters[i].values()) tsv << '\t' << to_string(v);
        tsv << '\n';
    }
    return Output{to_json(*table), tsv.str(), tsv.str()};
}

VerificationReport verify_report(const std::string& check, const Flags& f) {
    const Limits limits = limits_from_env();
    VerificationReport r;
    r.check_name = check;
    r.parameters = sweep_parameters(f);

    if (check == "theorem1") {
        r.counterexamples = sweep_partitions(degrees(f, 1, limits.characters, check), [](const Partition& lambda) {
            std::vector<Json> bad;
            const Rational value = theorem1_check(lambda);
            const auto common = common_components(lambda);
            const bool unique = common.size() == 1 && common[0].mu == lambda && common[0].in_permutation_module == 1 &&
                                common[0].in_sign_module == 1;
            if (value != 1 || !unique) {
                bad.push_back(Json{{"lambda", to_json(lambda)}, {"inner_product", to_json(value)},
                                   {"common_components", common.size()}});
            }
            return bad;
        });
    } else if (check == "youngs-rule") {
        r.counterexamples = sweep_partitions(degrees(f, 1, limits.characters, check), [](const Partition& lambda) {
            std::vector<Json> bad;
            const MultiplicityTable m = multiplicity_table(lambda.n());
            for (const Partition& mu : m.shapes) {
                const std::int64_t k = static_cast<std::int64_t>(kostka(mu, lambda));
                if (m(mu, lambda) != k) {
                    bad.push_back(Json{{"mu", to_json(mu)}, {"lambda", to_json(lambda)},
                                       {"multiplicity", m(mu, lambda)}, {"kostka", k}});
                }
            }
            return bad;
        });
    } else if (check == "eq1" || check == "eq2") {
        const bool first = check == "eq1";
        const int cap = first ? limits.characters : limits.combinatorics;
        r.counterexamples = sweep_partitions(degrees(f, 2, cap, check), [first](const Partition& lambda) {
            std::vector<Json> bad;
            for (const Partition& rho : enumerate_partitions(lambda.n() - 1)) {
                std::int64_t left = 0;
                std::int64_t right = 0;
                if (first) {
                    std::tie(left, right) = eq1_check(lambda, rho);
                } else {
                    const auto [l, rr] = eq2_check(lambda, rho);
                    left = static_cast<std::int64_t>(l);
                    right = static_cast<std::int64_t>(rr);
                }
                if (left != right) {
                    bad.push_back(Json{{"lambda", to_json(lambda)}, {"rho", to_json(rho)}, {"left", left},
                                       {"right", right}});
                }
            }
            return bad;
        });
    } else if (check == "lemma1") {
        r.counterexamples = sweep_partitions(degrees(f, 2, limits.characters, check), [](const Partition& lambda) {
            std::vector<Json> bad;
            if (!lemma1_check(lambda)) bad.push_back(Json{{"lambda", to_json(lambda)}});
            return bad;
        });
    } else if (check == "dimension") {
        // n f^rho = sum over mu ≻ rho of f^mu, indexed by rho ⊢ n-1.
        const auto ns = degrees(f, 2, limits.combinatorics, check);
        std::vector<int> previous;
        for (int n : ns) previous.push_back(n - 1);
        r.counterexamples = sweep_partitions(previous, [](const Partition& rho) {
            std::vector<Json> bad;
            const std::uint64_t left = static_cast<std::uint64_t>(rho.n() + 1) * standard_count(rho);
            std::uint64_t right = 0;
            for (const Partition& mu : successors(rho)) right += standard_count(mu);
            if (left != right) {
                bad.push_back(Json{{"rho", to_json(rho)}, {"left", left}, {"right", right}});
            }
            return bad;
        });
    } else if (check == "conjugate-twist") {
        const auto ns = degrees(f, 1, limits.characters, check);
        const auto ok = parallel_map(ns.size(), [&](std::size_t i) { return conjugate_twist_check(ns[i]); });
        for (std::size_t i = 0; i < ns.size(); ++i) {
            if (!ok[i]) r.counterexamples.push_back(Json{{"n", ns[i]}});
        }
    } else {
        throw UsageError("unknown check " + check);
    }
    return r;
}

Output cmd_verify(const Flags& f) { return report_output(verify_report(f.check, f)); }

Json kernel_row(const Partition& lambda) {
    const Statement1Report s = statement1_check(lambda);
    return Json{{"lambda", to_json(lambda)}, {"h", h(lambda)},      {"hbar", hbar(lambda)},
                {"bar_bijective", s.bar_bijective}, {"square", s.square}, {"unipotent", s.unipotent},
                {"kernel_dim", s.kernel_dim}};
}

bool statement1_holds(const Json& row) {
    if (!row["bar_bijective"].get<bool>()) return true;
    return row["square"].get<bool>() && row["unipotent"].get<bool>() && row["kernel_dim"].get<std::size_t>() == 0;
}

Output cmd_linsys(const Flags& f) {
    const int cap = limits_from_env().characters;
    if (f.has("--lambda")) {
        const Partition lambda = Partition::parse(f.lambda);
        if (lambda.n() < 2) throw UsageError("--lambda must have size at least 2");
        check_limit(lambda.n(), cap, "linsys");
        const System3 system = build_system3(lambda);
        const Statement1Report s = statement1_check(lambda);
        Json j = to_json(s, system);
        const bool ok = !s.bar_bijective || (s.square && s.unipotent && s.kernel_dim == 0);
        std::ostringstream tsv;
        tsv << "rho\\mu";
        for (const Partition& mu : system.col_index) tsv << '\t' << mu.to_string();
        tsv << '\n';
        for (std::size_t r = 0; r < system.row_index.size(); ++r) {
            tsv << system.row_index[r].to_string();
            for (std::size_t c = 0; c < system.col_index.size(); ++c) tsv << '\t' << to_string(system.matrix(r, c));
            tsv << '\n';
        }
        std::ostringstream ascii;
        ascii << "lambda " << lambda.to_string() << ": " << system.row_index.size() << " x "
              << system.col_index.size() << ", bar-bijective " << (s.bar_bijective ? "yes" : "no")
              << ", kernel " << s.kernel_dim << '\n'
              << tsv.str();
        return Output{std::move(j), tsv.str(), ascii.str(), ok ? kExitOk : kExitFailed};
    }

    // Sweep: the kernel-dimension table is the artifact; failures are
    // bar-bijective shapes whose system is not square unipotent of full rank.
    const auto ns = degrees(f, 2, cap, "linsys");
    std::vector<Partition> items;
    for (int n : ns) {
        for (Partition& lambda : enumerate_partitions(n)) items.push_back(std::move(lambda));
    }
    const auto rows = parallel_map(items.size(), [&](std::size_t i) { return kernel_row(items[i]); });
    VerificationReport r;
    r.check_name = "linsys";
    r.parameters = sweep_parameters(f);
    Json table = Json::array();
    Json long_first_row_not_bijective = Json::array();
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (!statement1_holds(rows[i])) r.counterexamples.push_back(rows[i]);
        if (2 * items[i][0] >= items[i].n() && !rows[i]["bar_bijective"].get<bool>()) {
            long_first_row_not_bijective.push_back(to_json(items[i]));
        }
        table.push_back(rows[i]);
    }
    r.artifact = Json{{"kernel_table", std::move(table)},
                      {"first_row_at_least_half_not_bar_bijective", std::move(long_first_row_not_bijective)}};
    Output out = report_output(r);
    std::ostringstream tsv;
    tsv << "lambda\th\thbar\tbar_bijective\tsquare\tunipotent\tkernel_dim\n";
    for (const Json& row : (*r.artifact)["kernel_table"]) {
        tsv << partition_from_json(row["lambda"]).to_string() << '\t' << row["h"] << '\t' << row["hbar"] << '\t'
            << row["bar_bijective"] << '\t' << row["square"] << '\t' << row["unipotent"] << '\t'
            << row["kernel_dim"] << '\n';
    }
    out.tsv = tsv.str();
    out.ascii = to_ascii(r) + tsv.str();
    return out;
}

Output cmd_polymorphism(const Flags& f) {
    const auto ns = degrees(f, 2, limits_from_env().combinatorics, "polymorphism");
    const auto reports = parallel_map(ns.size(), [&](std::size_t i) { return polymorphism_feasibility(ns[i]); });
    const bool single = f.has("--n");
    VerificationReport r;
    r.check_name = "polymorphism";
    r.parameters = sweep_parameters(f);
    Json results = Json::array();
    std::ostringstream tsv;
    tsv << "n\tfeasible\tmax_flow\tmin_cut\trequired\twitness_verified\n";
    for (const PolymorphismReport& p : reports) {
        // Infeasibility is an answer, not a failure; an unverified witness or a
        // flow that is not certified by a cut of equal capacity is.
        const bool sound = p.max_flow == p.min_cut && p.max_flow <= p.required && p.feasible == (p.max_flow == p.required) &&
                           (!p.feasible || (p.witness && p.witness_verified));
        Json j = to_json(p, single);
        if (!sound) r.counterexamples.push_back(to_json(p, false));
        results.push_back(std::move(j));
        tsv << p.n << '\t' << p.feasible << '\t' << p.max_flow << '\t' << p.min_cut << '\t' << p.required << '\t'
            << p.witness_verified << '\n';
    }
    r.artifact = single ? results[0] : results;
    Output out = report_output(r);
    out.tsv = tsv.str();
    out.ascii = to_ascii(r) + tsv.str();
    return out;
}

Json theorem5_json(const Theorem5Report& t) {
    return Json{{"lambda", to_json(t.lambda)},
                {"l_dim", t.l_dim},
                {"standard_tableaux", t.standard_tableaux},
                {"f_lambda", t.f_lambda},
                {"rank", t.rank},
                {"all_in_l", t.all_in_l},
                {"independent", t.independent},
                {"invariant", t.invariant},
                {"shift_invariant_dim", t.shift_invariant_dim},
                {"equals_shift_invariant", t.equals_shift_invariant},
                {"character_matches", t.character_matches},
                {"ok", t.ok()}};
}

Json example4_json(const Example4Report& e) {
    Json forms = Json::object();
    for (const auto& [name, form] : e.forms) forms[name] = to_json(form);
    Json blocks = Json::array();
    for (const Example4Block& b : e.blocks) {
        blocks.push_back(Json{{"name", b.name},
                              {"shape", to_json(b.shape)},
                              {"generators", b.generator_names},
                              {"dim", b.dim},
                              {"parity", b.even ? "even" : "odd"},
                              {"invariant", b.invariant},
                              {"character_matches", b.character_matches},
                              {"parity_matches", b.parity_matches}});
    }
    Json multiplicities = Json::object();
    for (const auto& [mu, m] : e.multiplicities) multiplicities[mu.to_string()] = m;
    return Json{{"lambda", Json::array({2, 1, 1})},
                {"l_dim", e.l_dim},
                {"total_rank", e.total_rank},
                {"all_in_l", e.all_in_l},
                {"direct_sum", e.direct_sum},
                {"even_dim", e.even_dim},
                {"odd_dim", e.odd_dim},
                {"c3_in_terms_of_c1_c2", Json::array({to_json(e.c3_from_c1), to_json(e.c3_from_c2)})},
                {"c_relation_holds", e.c_relation_holds},
                {"multiplicities", std::move(multiplicities)},
                {"blocks", std::move(blocks)},
                {"forms", std::move(forms)},
                {"ok", e.ok()}};
}

std::string forms_text(const Json& forms) {
    std::string out;
    for (const auto& [name, form] : forms.items()) out += name + " = " + form["text"].get<std::string>() + '\n';
    return out;
}

Output cmd_forms(const Flags& f) {
    const Partition lambda = require_partition(f, "--lambda", f.lambda);
    const Limits limits = limits_from_env();
    if (f.check == "example4") {
        if (lambda != Partition({2, 1, 1})) throw UsageError("the example4 check is defined for --lambda 2,1,1");
        check_limit(4, limits.forms, "forms");
        const Example4Report e = example4_check();
        Json j = example4_json(e);
        std::ostringstream tsv;
        tsv << "block\tshape\tdim\tparity\tinvariant\tcharacter_matches\n";
        for (const Example4Block& b : e.blocks) {
            tsv << b.name << '\t' << b.shape.to_string() << '\t' << b.dim << '\t' << (b.even ? "even" : "odd") << '\t'
                << b.invariant << '\t' << b.character_matches << '\n';
        }
        const std::string ascii = tsv.str() + forms_text(j["forms"]);
        return Output{std::move(j), tsv.str(), ascii, e.ok() ? kExitOk : kExitFailed};
    }
    if (f.check == "statement2") {
        check_limit(lambda.n(), limits.forms, "forms");
        const bool ok = statement2_check(lambda, lambda.n());
        const auto basis = l_basis(lambda);
        const ClassFunction chi = monomial_character(lambda);
        const ClassFunction psi = perm_character(lambda);
        Json character = Json::array();
        Json permutation = Json::array();
        for (const Rational& v : chi.values()) character.push_back(to_json(v));
        for (const Rational& v : psi.values()) permutation.push_back(to_json(v));
        Json types = Json::array();
        for (const Partition& t : chi.classes().types) types.push_back(to_json(t));
        Json j{{"lambda", to_json(lambda)},       {"l_dim", basis->size()},
               {"cycle_types", std::move(types)}, {"monomial_character", std::move(character)},
               {"psi", std::move(permutation)},   {"ok", ok}};
        std::ostringstream tsv;
        tsv << "lambda\tl_dim\tok\n" << lambda.to_string() << '\t' << basis->size() << '\t' << ok << '\n';
        std::ostringstream ascii;
        ascii << "L_" << lambda.to_string() << ": dim " << basis->size() << ", character "
              << (ok ? "matches" : "differs from") << " psi\n";
        for (const Monomial& m : basis->monomials()) ascii << "  " << m.to_string() << '\n';
        return Output{std::move(j), tsv.str(), ascii.str(), ok ? kExitOk : kExitFailed};
    }
    if (f.check == "specht") {
        check_limit(lambda.n(), limits.forms, "forms");
        const Theorem5Report t = theorem5_check(lambda, lambda.n());
        Json j = theorem5_json(t);
        Json polys = Json::array();
        for (const Tableau& tab : enumerate_standard(lambda)) {
            polys.push_back(Json{{"tableau", to_json(tab)}, {"form", to_json(specht_poly(tab))}});
        }
        j["specht_polynomials"] = std::move(polys);
        std::ostringstream tsv;
        tsv << "lambda\tf_lambda\trank\tshift_invariant_dim\tok\n"
            << lambda.to_string() << '\t' << t.f_lambda << '\t' << t.rank << '\t' << t.shift_invariant_dim << '\t'
            << t.ok() << '\n';
        std::ostringstream ascii;
        ascii << tsv.str();
        for (const Json& p : j["specht_polynomials"]) {
            ascii << tableau_from_json(p["tableau"]).to_ascii() << "  ->  " << p["form"]["text"].get<std::string>()
                  << '\n';
        }
        return Output{std::move(j), tsv.str(), ascii.str(), t.ok() ? kExitOk : kExitFailed};
    }
    if (f.check == "two-row") {
        if (lambda.length() > 2 || lambda.empty()) throw UsageError("two-row needs --lambda n-k,k");
        const int n = lambda.n();
        const int k = lambda[1];
        check_limit(n, limits.combinatorics, "forms");
        const TwoRowReport t = two_row_decomposition(n, k);
        Json components = Json::array();
        std::ostringstream tsv;
        tsv << "l\tgenerators\tdim\texpected_dim\tinvariant\tcharacter_matches\n";
        for (const TwoRowComponent& c : t.components) {
            components.push_back(Json{{"l", c.l},
                                      {"generators", c.generators},
                                      {"dim", c.dim},
                                      {"expected_dim", c.expected_dim},
                                      {"invariant", c.invariant},
                                      {"character_matches", c.character_matches}});
            tsv << c.l << '\t' << c.generators << '\t' << c.dim << '\t' << c.expected_dim << '\t' << c.invariant
                << '\t' << c.character_matches << '\n';
        }
        Json j{{"n", n},
               {"k", k},
               {"fk_dim", t.fk_dim},
               {"components", std::move(components)},
               {"direct_sum", t.direct_sum},
               {"pairwise_trivial", t.pairwise_trivial},
               {"top_is_d_kernel", t.top_is_d_kernel ? Json(*t.top_is_d_kernel) : Json(nullptr)},
               {"ok", t.ok()}};
        std::ostringstream ascii;
        ascii << "F_" << k << " in " << n << " variables: dim " << t.fk_dim << '\n' << tsv.str();
        return Output{std::move(j), tsv.str(), ascii.str(), t.ok() ? kExitOk : kExitFailed};
    }
    throw UsageError("unknown forms check " + f.check);
}

void add_common(CLI::App* sub, Flags& f) {
    f.options["--n"] = sub->add_option("--n", f.n, "Degree");
    f.options["--max-n"] = sub->add_option("--max-n", f.max_n, "Sweep degrees up to this bound");
    f.options["--lambda"] = sub->add_option("--lambda", f.lambda, "Partition, e.g. 3,2,1");
    f.options["--rho"] = sub->add_option("--rho", f.rho, "Partition of n-1");
    f.options["--mu"] = sub->add_option("--mu", f.mu, "Partition (shape)");
    sub->add_option("--format", f.format, "Output format")->check(CLI::IsMember({"json", "tsv", "ascii"}));
    sub->add_option("--out", f.out, "Write the payload to this file");
}

void emit_error(std::ostream& err, std::string_view code, const std::string& message) {
    err << Json{{"error", code}, {"message", message}}.dump() << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact computations with Young diagrams, tableaux and symmetric-group characters", "younglab"};
    app.require_subcommand(1);

    using Handler = std::function<Output(const Flags&)>;
    std::map<std::string, Flags> flags;
    std::vector<std::pair<CLI::App*, Handler>> commands;
    auto add = [&](const std::string& name, const std::string& help, Handler handler) {
        CLI::App* sub = app.add_subcommand(name, help);
        add_common(sub, flags[name]);
        commands.emplace_back(sub, std::move(handler));
        return sub;
    };
    add("partitions", "List the partitions of --n", cmd_partitions);
    add("kostka", "Kostka number K(--mu, --lambda)", cmd_kostka);
    add("ssyt", "Semistandard tableaux of shape --mu and weight --lambda", cmd_ssyt);
    add("bijection", "Certified tableau bijection for --lambda and --rho", cmd_bijection);
    add("character-table", "Irreducible characters of degree --n", cmd_character_table);
    add("verify", "Run an identity sweep", cmd_verify)
        ->add_option("check", flags["verify"].check, "Identity to verify")
        ->required()
        ->check(CLI::IsMember({"theorem1", "youngs-rule", "eq1", "eq2", "lemma1", "dimension", "conjugate-twist"}));
    add("linsys", "Multiplicity system for --lambda, or the kernel table up to --max-n", cmd_linsys);
    add("polymorphism", "Transport feasibility on the Young graph", cmd_polymorphism);
    add("forms", "Polylinear form checks for --lambda", cmd_forms)
        ->add_option("--check", flags["forms"].check, "example4, statement2, specht or two-row")
        ->required()
        ->check(CLI::IsMember({"example4", "statement2", "specht", "two-row"}));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        emit_error(err, "Usage", e.what());
        return kExitUsage;
    }

    for (auto& [sub, handler] : commands) {
        if (!sub->parsed()) continue;
        const Flags& f = flags.at(sub->get_name());
        const auto start = std::chrono::steady_clock::now();
        Output result;
        try {
            result = handler(f);
        } catch (const UsageError& e) {
            emit_error(err, "Usage", e.what());
            return kExitUsage;
        } catch (const Error& e) {
            emit_error(err, to_string(e.code()), e.what());
            return kExitUsage;
        } catch (const std::invalid_argument& e) {
            emit_error(err, "Usage", e.what());
            return kExitUsage;
        } catch (const std::exception& e) {
            emit_error(err, "Internal", e.what());
            return kExitFailed;
        }
        const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

        std::string payload;
        if (f.format == "tsv" && !result.tsv.empty()) {
            payload = result.tsv;
        } else if (f.format == "ascii" && !result.ascii.empty()) {
            payload = result.ascii;
        } else {
            payload = dump_pretty(result.json);
        }
        if (f.out.empty()) {
            out << payload;
        } else {
            std::ofstream file(f.out, std::ios::binary);
            file << payload;
            if (!file) {
                emit_error(err, "Io", "cannot write " + f.out);
                return kExitUsage;
            }
        }
        err << Json{{"command", sub->get_name()}, {"timing_ms", ms}}.dump() << '\n';
        return result.status;
    }
    emit_error(err, "Usage", "no command given");
    return kExitUsage;
}

}  // namespace younglab::cli
