#include <doctest.h>

#include <fstream>
#include <json.hpp>
#include <map>
#include <set>

#include "oracles.hpp"
#include "younglab/errors.hpp"
#include "younglab/tableau.hpp"

using namespace younglab;
using nlohmann::json;

namespace {

json load_golden(const std::string& name) {
    std::ifstream in(std::string(YOUNGLAB_GOLDEN_DIR) + "/" + name);
    REQUIRE(in.good());
    return json::parse(in);
}

// Every composition of n with at most k parts, as a weight.
void compositions(int n, int k, std::vector<int>& current, std::vector<Weight>& out) {
    if (k == 0) {
        if (n == 0) out.emplace_back(current);
        return;
    }
    for (int first = 0; first <= n; ++first) {
        current.push_back(first);
        compositions(n - first, k - 1, current, out);
        current.pop_back();
    }
}

}  // namespace

TEST_CASE("tableau validation and parsing") {
    const Tableau t = Tableau::parse("1,1,1,2/2,3");
    CHECK(t.shape() == Partition({4, 2}));
    CHECK(t.is_semistandard());
    CHECK_FALSE(t.is_standard());
    CHECK(t.weight() == Weight({3, 2, 1}));
    CHECK(t.to_ascii() == "1 1 1 2 / 2 3");
    CHECK(Tableau::parse(t.to_string()) == t);

    CHECK_FALSE(Tableau::parse("1,2/1").is_semistandard());
    CHECK_FALSE(Tableau::parse("2,1").is_semistandard());
    CHECK(Tableau::parse("1,3/2,4").is_standard());
    CHECK_THROWS_AS(Tableau({{1}, {2, 3}}), Error);
    CHECK_THROWS_AS(Tableau(std::vector<std::vector<int>>{{0}}), Error);
    CHECK_THROWS_AS(Tableau::parse("1,a"), Error);
}

TEST_CASE("weights") {
    const Weight w = Weight::of(Partition({2, 2, 1}));
    CHECK(w.total() == 5);
    CHECK(w.without(1) == Weight({1, 2, 1}));
    CHECK(w.without(3) == Weight({2, 2}));
    CHECK(w.without(2).sorted() == Partition({2, 1, 1}));
    CHECK_THROWS_AS(Weight({1, 0}).without(2), Error);
}

TEST_CASE("semistandard enumeration agrees with word enumeration") {
    for (int n = 1; n <= 6; ++n) {
        for (const Partition& mu : enumerate_partitions(n)) {
            for (int k = 1; k <= 4; ++k) {
                std::vector<Weight> weights;
                std::vector<int> current;
                compositions(n, k, current, weights);
                for (const Weight& w : weights) {
                    const auto tableaux = enumerate_ssyt(mu, w);
                    CHECK(static_cast<std::int64_t>(tableaux.size()) == oracle::kostka_by_words(mu.parts(), w.counts));
                    std::set<std::vector<std::vector<int>>> distinct;
                    for (const Tableau& t : tableaux) {
                        CHECK(t.is_semistandard());
                        CHECK(t.shape() == mu);
                        CHECK(t.weight() == w);
                        distinct.insert(t.rows());
                    }
                    CHECK(distinct.size() == tableaux.size());
                    for (std::size_t i = 1; i < tableaux.size(); ++i) {
                        CHECK(tableaux[i - 1].reading_word() < tableaux[i].reading_word());
                    }
                }
            }
        }
    }
}

TEST_CASE("Kostka numbers") {
    CHECK(kostka(Partition({4, 2}), Partition({3, 2, 1})) == 2);
    CHECK(kostka(Partition({3, 2}), Partition({2, 2, 1})) == 2);
    CHECK(kostka(Partition({2, 2, 1}), Partition({3, 2})) == 0);
    CHECK(kostka(Partition({3}), Weight({0, 3})) == 1);
    CHECK_THROWS_AS(kostka(Partition({2}), Partition({2, 1})), Error);

    for (int n = 1; n <= 7; ++n) {
        const auto ps = enumerate_partitions(n);
        for (const Partition& mu : ps) {
            CHECK(kostka(mu, mu) == 1);
            for (const Partition& lambda : ps) {
                const std::uint64_t k = kostka(mu, lambda);
                CHECK(static_cast<std::int64_t>(k) == oracle::kostka_by_words(mu.parts(), lambda.parts()));
                // Nonzero exactly on the dominance cone.
                CHECK((k > 0) == dominates(mu, lambda));
            }
            // Symmetry in the weight.
            const Weight w = Weight::of(mu);
            std::vector<int> reversed(w.counts.rbegin(), w.counts.rend());
            for (const Partition& shape : ps) CHECK(kostka(shape, w) == kostka(shape, Weight(reversed)));
        }
    }
}

TEST_CASE("standard tableaux") {
    for (int n = 1; n <= 7; ++n) {
        for (const Partition& lambda : enumerate_partitions(n)) {
            const auto ts = enumerate_standard(lambda);
            CHECK(ts.size() == standard_count(lambda));
            for (const Tableau& t : ts) CHECK(t.is_standard());
        }
    }
}

TEST_CASE("the Kostka recurrence holds on both sides") {
    for (int n = 2; n <= 7; ++n) {
        for (const Partition& lambda : enumerate_partitions(n)) {
            for (const Partition& rho : enumerate_partitions(n - 1)) {
                const auto [left, right] = eq2_check(lambda, rho);
                CHECK(left == right);
            }
        }
    }
    CHECK(eq2_check(Partition({3, 2, 1}), Partition({4, 1})) == std::pair<std::uint64_t, std::uint64_t>{5, 5});
    CHECK(eq2_check(Partition({2, 2, 1}), Partition({3, 1})) == std::pair<std::uint64_t, std::uint64_t>{5, 5});
}

TEST_CASE("cell deletion closes the row") {
    const Tableau t = Tableau::parse("1,1,2/2,3");
    CHECK(delete_cell(t, 0, 1) == Tableau::parse("1,2/2,3"));
    CHECK(delete_cell(Tableau::parse("1,1/2"), 1, 0) == Tableau::parse("1,1"));
}

TEST_CASE("golden bijections from the worked examples") {
    for (const char* name : {"bijection_example1.json", "bijection_example2.json"}) {
        CAPTURE(name);
        const json g = load_golden(name);
        const Partition lambda = Partition::parse(g["lambda"].get<std::string>());
        const Partition rho = Partition::parse(g["rho"].get<std::string>());
        const BijectionCertificate cert = theorem4_bijection(lambda, rho);
        CHECK(cert.canonical);
        CHECK(cert.method == BijectionMethod::Canonical);
        CHECK(verify_certificate(cert));
        REQUIRE(cert.pairs.size() == g["count"].get<std::size_t>());

        std::map<std::string, Tableau> named;
        for (const char* group : {"mu_tableaux", "gamma_tableaux", "rho_tableaux"}) {
            for (const auto& [key, value] : g[group].items()) named.emplace(key, Tableau::parse(value.get<std::string>()));
        }
        std::set<std::pair<std::vector<std::vector<int>>, std::vector<std::vector<int>>>> expected;
        for (const auto& pair : g["pairs"]) {
            expected.emplace(named.at(pair[0]).rows(), named.at(pair[1]).rows());
        }
        std::set<std::pair<std::vector<std::vector<int>>, std::vector<std::vector<int>>>> got;
        for (const BijectionPair& p : cert.pairs) {
            got.emplace(p.mu_tableau.rows(), p.rho_tableau.rows());
            CHECK(p.rho_tableau.weight() == p.gamma_weight);
        }
        CHECK(got == expected);

        // Each gamma tableau has the weight of the rho tableaux it generates.
        for (const auto& [gamma, targets] : g["gamma_to_rho"].items()) {
            const Tableau& x = named.at(gamma);
            CHECK(x.is_semistandard());
            CHECK(covers(lambda, x.shape()));
            for (const auto& target : targets) CHECK(named.at(target).weight() == x.weight());
        }
        if (g.contains("kostka")) {
            for (const auto& [shape, value] : g["kostka"].items()) {
                CHECK(kostka(Partition::parse(shape), lambda) == value.get<std::uint64_t>());
            }
        }
    }
}

TEST_CASE("bijection certificates are total for small n") {
    for (int n = 2; n <= 7; ++n) {
        for (const Partition& lambda : enumerate_partitions(n)) {
            for (const Partition& rho : enumerate_partitions(n - 1)) {
                const BijectionCertificate cert = theorem4_bijection(lambda, rho);
                CHECK(verify_certificate(cert));
                CHECK(cert.pairs.size() == eq2_check(lambda, rho).first);
                CHECK(cert.canonical == (cert.method == BijectionMethod::Canonical));
                CHECK(cert.canonical_successes <= cert.pairs.size());
            }
        }
    }
}

TEST_CASE("canonical rule failure falls back to a certified pairing") {
    // 1 3 / 2 and 1 / 2 / 3 can only lose a cell to become 1 / 2.
    const BijectionCertificate cert = theorem4_bijection(Partition({1, 1, 1}), Partition({1, 1}));
    CHECK_FALSE(cert.canonical);
    CHECK(cert.method == BijectionMethod::Arbitrary);
    CHECK(verify_certificate(cert));

    const BijectionCertificate matched = theorem4_bijection(Partition({1, 1, 1}), Partition({2}));
    CHECK(matched.method == BijectionMethod::Matching);
    CHECK(verify_certificate(matched));

    BijectionCertificate broken = cert;
    broken.pairs.back() = broken.pairs.front();
    CHECK_FALSE(verify_certificate(broken));
}
