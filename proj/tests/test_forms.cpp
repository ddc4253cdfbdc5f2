#include <doctest.h>

#include <fstream>
#include <json.hpp>
#include <random>

#include "oracles.hpp"
#include "younglab/errors.hpp"
#include "younglab/forms.hpp"

using namespace younglab;
using nlohmann::json;

namespace {

json load_golden(const std::string& name) {
    std::ifstream in(std::string(YOUNGLAB_GOLDEN_DIR) + "/" + name);
    REQUIRE(in.good());
    return json::parse(in);
}

Form from_terms(int nvars, const json& terms) {
    Form f(nvars);
    for (const auto& term : terms) {
        f.add_term(Monomial(term[1].get<std::vector<int>>()), parse_rational(term[0].get<std::string>()));
    }
    return f;
}

Form random_form(std::mt19937& rng, int nvars, int max_degree) {
    std::uniform_int_distribution<int> exponent(0, max_degree);
    std::uniform_int_distribution<int> coeff(-3, 3);
    Form f(nvars);
    for (int t = 0; t < 4; ++t) {
        std::vector<int> e(static_cast<std::size_t>(nvars));
        for (int& v : e) v = exponent(rng);
        f.add_term(Monomial(e), coeff(rng));
    }
    return f;
}

ClassFunction mn_class_function(const Partition& lambda) {
    ClassFunction chi(lambda.n());
    const auto& types = chi.classes().types;
    for (std::size_t i = 0; i < types.size(); ++i) chi.at(i) = oracle::mn_character(lambda.parts(), types[i].parts());
    return chi;
}

}  // namespace

TEST_CASE("monomials and forms") {
    const Monomial m({2, 1, 0});
    CHECK(m.degree() == 3);
    CHECK(m.to_string() == "x1^2·x2");
    CHECK(Monomial({0, 0}).to_string() == "1");
    CHECK(Monomial({0, 1}) < Monomial({1, 0}));
    CHECK(Monomial({3, 0}) < Monomial({2, 2}));
    CHECK_THROWS_AS(Monomial({-1}), Error);

    const Form x1 = Form::variable(3, 0);
    const Form x2 = Form::variable(3, 1);
    const Form x3 = Form::variable(3, 2);
    const Form f = x1 * x1 * x2 * Rational(3) - x3;
    CHECK(f.to_string() == "3 * x1^2·x2 + -1 * x3");
    CHECK((f - f).is_zero());
    CHECK((f - f).to_string() == "0");
    CHECK(f.coefficient(Monomial({2, 1, 0})) == 3);
    CHECK(f.coefficient(Monomial({1, 1, 1})) == 0);
    CHECK((x1 + x2) * (x1 - x2) == x1 * x1 - x2 * x2);
    CHECK(-f == f * Rational(-1));
    CHECK_THROWS_AS(x1 * Form::variable(2, 0), Error);
}

TEST_CASE("permutations") {
    CHECK(cycle_type(cycle_type_representative(Partition({3, 2, 1}))) == Partition({3, 2, 1}));
    CHECK(all_permutations(4).size() == 24);
    for (const auto& sigma : all_permutations(4)) {
        CHECK(compose(sigma, identity_permutation(4)) == sigma);
        CHECK(oracle::cycle_type_of(sigma) == cycle_type(sigma).parts());
    }
    CHECK(transposition(3, 0, 2) == Permutation{2, 1, 0});
}

TEST_CASE("substitution action is a left action") {
    std::mt19937 rng(7);
    const auto perms = all_permutations(4);
    std::uniform_int_distribution<std::size_t> pick(0, perms.size() - 1);
    for (int trial = 0; trial < 100; ++trial) {
        const Form f = random_form(rng, 4, 3);
        const Permutation& s = perms[pick(rng)];
        const Permutation& t = perms[pick(rng)];
        CHECK(act(s, act(t, f)) == act(compose(s, t), f));
        CHECK(act(identity_permutation(4), f) == f);
    }
    // x1 -> x2 under the transposition (1 2).
    CHECK(act(transposition(3, 0, 1), Form::variable(3, 0)) == Form::variable(3, 1));
}

TEST_CASE("total derivative") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        const Form f = random_form(rng, 3, 3);
        const Form g = random_form(rng, 3, 3);
        CHECK(total_derivative(f * g) == total_derivative(f) * g + f * total_derivative(g));
        CHECK(total_derivative(f + g) == total_derivative(f) + total_derivative(g));
    }
    // Differences of variables are killed.
    const Form d = Form::variable(3, 0) - Form::variable(3, 2);
    CHECK(total_derivative(d * d * d).is_zero());
    CHECK(total_derivative(Form::constant(2, 5)).is_zero());
}

TEST_CASE("elementary symmetric polynomials and degree substitution") {
    const std::vector<int> all{0, 1, 2, 3, 4};
    CHECK(elementary_symmetric(5, all, 2).terms().size() == 10);
    CHECK(elementary_symmetric(5, all, 0) == Form::constant(5, 1));
    CHECK(elementary_symmetric(5, {0, 1}, 3).is_zero());
    const Form f = Form::monomial(Monomial({2, 1, 0}));
    CHECK(substitute_degrees(f, {{1, 2}, {2, 1}}) == Form::monomial(Monomial({1, 2, 0})));
}

TEST_CASE("monomial spaces realize the permutation modules") {
    for (int n = 1; n <= 6; ++n) {
        for (const Partition& lambda : enumerate_partitions(n)) {
            CAPTURE(lambda.to_string());
            CHECK(statement2_check(lambda, n));
            const auto basis = l_basis(lambda);
            CHECK(static_cast<std::int64_t>(basis->size()) == static_cast<std::int64_t>(oracle::tabloids(lambda.parts()).size()));
            if (n <= 5) CHECK(FormSpace::whole(basis).character() == monomial_character(lambda));
        }
    }
    CHECK_THROWS_AS(x_monomials(Partition({2, 1}), 4), Error);

    // A single row gives the constant monomial and the trivial character.
    const auto row = l_basis(Partition({4}));
    REQUIRE(row->size() == 1);
    CHECK(row->monomials()[0].degree() == 0);
    CHECK(monomial_character(Partition({4})) == trivial_character(4));

    // A single column gives the regular representation.
    const auto column = l_basis(Partition({1, 1, 1, 1}));
    CHECK(column->size() == 24);
    CHECK(column->monomials()[0].degree() == 6);
    const ClassFunction regular = monomial_character(Partition({1, 1, 1, 1}));
    CHECK(regular.degree() == 24);
    for (std::size_t i = 0; i + 1 < regular.values().size(); ++i) CHECK(regular.at(i) == 0);
}

TEST_CASE("monomial basis bookkeeping") {
    const auto basis = l_basis(Partition({2, 1}));
    CHECK(basis->size() == 3);
    CHECK_THROWS_AS(basis->coordinates(Form::variable(3, 0) * Form::variable(3, 1)), Error);
    CHECK_THROWS_AS(MonomialBasis({Monomial({1}), Monomial({1})}), Error);
    const MonomialBasis partial({Monomial({1, 0})});
    CHECK_THROWS_AS(partial.action(transposition(2, 0, 1)), Error);
    const FormSpace whole = FormSpace::whole(basis);
    CHECK(whole.is_invariant());
    CHECK(whole.basis_forms().size() == 3);
    const FormSpace line = FormSpace::span(basis, {Form::variable(3, 0)});
    CHECK_FALSE(line.is_invariant());
    CHECK(line.contains(Form::variable(3, 0) * Rational(2)));
    CHECK_FALSE(line.contains(Form::variable(3, 1)));
    CHECK_THROWS_AS(line.character(), Error);
}

TEST_CASE("Specht polynomials") {
    const Form sp = specht_poly(Tableau::parse("1,4/2/3"));
    const Form x1 = Form::variable(4, 0);
    const Form x2 = Form::variable(4, 1);
    const Form x3 = Form::variable(4, 2);
    CHECK(sp == (x1 - x2) * (x1 - x3) * (x2 - x3));
    CHECK(specht_poly(Tableau::parse("1,2,3")) == Form::constant(3, 1));
    CHECK_THROWS_AS(specht_poly(Tableau::parse("1,1/2")), Error);
    CHECK_THROWS_AS(specht_poly(Tableau::parse("1,3")), Error);

    for (int n = 1; n <= 5; ++n) {
        for (const Partition& lambda : enumerate_partitions(n)) {
            CAPTURE(lambda.to_string());
            const Theorem5Report r = theorem5_check(lambda, n);
            CHECK(r.all_in_l);
            CHECK(r.independent);
            CHECK(r.rank == static_cast<std::size_t>(oracle::hook_formula(lambda.parts())));
            CHECK(r.invariant);
            CHECK(r.equals_shift_invariant);
            CHECK(r.character_matches);
            CHECK(r.ok());
            CHECK(specht_module(lambda, n).character() == mn_class_function(lambda));
        }
    }
}

TEST_CASE("two-row decomposition") {
    for (int n = 1; n <= 7; ++n) {
        for (int k = 0; 2 * k <= n; ++k) {
            CAPTURE(n);
            CAPTURE(k);
            const TwoRowReport r = two_row_decomposition(n, k);
            CHECK(r.ok());
            CHECK(r.components.size() == static_cast<std::size_t>(k + 1));
            for (const TwoRowComponent& c : r.components) {
                CHECK(c.dim == c.expected_dim);
                CHECK(static_cast<std::int64_t>(c.dim) ==
                      oracle::hook_formula(c.l == 0 ? oracle::Shape{n} : oracle::Shape{n - c.l, c.l}));
            }
            CHECK(r.top_is_d_kernel.has_value() == (2 * k == n));
        }
    }
    CHECK_THROWS_AS(two_row_decomposition(4, 3), Error);
    // X_I for one pair out of four variables, k = 1: the differences themselves.
    CHECK(two_row_generators(4, 1, 1).size() == 6);
    CHECK(two_row_generators(4, 2, 2).size() == 3);
}

TEST_CASE("golden decomposition of L_(2,1,1)") {
    const json g = load_golden("example4.json");
    const Example4Report r = example4_check();
    CHECK(r.ok());
    CHECK(r.l_dim == g["l_dim"].get<std::size_t>());
    CHECK(r.all_in_l);
    CHECK(r.total_rank == 12);
    CHECK(r.direct_sum);
    CHECK(r.even_dim == g["even_dim"].get<std::size_t>());
    CHECK(r.odd_dim == g["odd_dim"].get<std::size_t>());
    CHECK(r.c_relation_holds);
    CHECK(to_string(r.c3_from_c1) == g["c3_in_terms_of_c1_c2"][0].get<std::string>());
    CHECK(to_string(r.c3_from_c2) == g["c3_in_terms_of_c1_c2"][1].get<std::string>());

    REQUIRE(r.forms.size() == g["forms"].size());
    for (const auto& [name, form] : r.forms) {
        CAPTURE(name);
        CHECK(form == from_terms(4, g["forms"][name]));
    }

    REQUIRE(r.blocks.size() == g["blocks"].size());
    for (std::size_t i = 0; i < r.blocks.size(); ++i) {
        const Example4Block& b = r.blocks[i];
        const json& expected = g["blocks"][i];
        CAPTURE(b.name);
        CHECK(b.name == expected["name"].get<std::string>());
        CHECK(b.shape == Partition::parse(expected["shape"].get<std::string>()));
        CHECK(b.generator_names == expected["generators"].get<std::vector<std::string>>());
        CHECK(b.dim == expected["dim"].get<std::size_t>());
        CHECK(b.even == (expected["parity"].get<std::string>() == "even"));
        CHECK(b.invariant);
        CHECK(b.character_matches);
        CHECK(b.parity_matches);
    }
    for (const auto& [mu, m] : r.multiplicities) CHECK(m == g["multiplicities"][mu.to_string()].get<std::int64_t>());
}
