#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "younglab/errors.hpp"
#include "younglab/linsys.hpp"

using namespace younglab;

TEST_CASE("system shape and entries") {
    const System3 s = build_system3(Partition({3, 1}));
    CHECK(s.row_index == std::vector<Partition>{Partition({3}), Partition({2, 1})});
    CHECK(s.col_index == std::vector<Partition>{Partition({4}), Partition({3, 1})});
    CHECK(s.matrix == Matrix::from_rows({{1, 1}, {0, 1}}));
    CHECK_THROWS_AS(build_system3(Partition({1})), Error);

    for (int n = 2; n <= 9; ++n) {
        for (const Partition& lambda : enumerate_partitions(n)) {
            const System3 sys = build_system3(lambda);
            CHECK(sys.row_index.size() == hbar(lambda));
            CHECK(sys.col_index.size() == h(lambda));
            for (std::size_t c = 0; c < sys.col_index.size(); ++c) {
                bool any = false;
                for (std::size_t r = 0; r < sys.row_index.size(); ++r) {
                    any = any || sgn(sys.matrix(r, c)) != 0;
                    CHECK((sgn(sys.matrix(r, c)) != 0) == covers(sys.col_index[c], sys.row_index[r]));
                }
                CHECK(any);
            }
        }
    }
}

TEST_CASE("bar-bijective shapes give a unipotent invertible system") {
    for (int n = 2; n <= 10; ++n) {
        for (const Partition& lambda : enumerate_partitions(n)) {
            const Statement1Report r = statement1_check(lambda);
            const System3 sys = build_system3(lambda);
            CHECK(r.kernel_dim == sys.col_index.size() - rank_bareiss(sys.matrix));
            if (r.bar_bijective) {
                CHECK(r.square);
                CHECK(r.unipotent);
                CHECK(r.kernel_dim == 0);
            }
            // Strictly long first rows are always bar-bijective.
            if (2 * lambda[0] > n) CHECK(r.bar_bijective);
        }
    }
}

TEST_CASE("equal halves break the bar bijection") {
    for (const char* text : {"1,1", "2,2", "2,1,1", "3,3", "3,2,1", "4,4"}) {
        CAPTURE(text);
        const Statement1Report r = statement1_check(Partition::parse(text));
        CHECK_FALSE(r.bar_bijective);
        CHECK_FALSE(r.square);
        CHECK(r.kernel_dim > 0);
    }
}

TEST_CASE("multiplicity deviations satisfy the homogeneous system") {
    for (int n = 2; n <= 8; ++n) CHECK(eq3_residual_check(n));
}

TEST_CASE("flow instance") {
    const FlowInstance inst = build_flow_instance(4);
    CHECK(inst.left.size() == 3);
    CHECK(inst.right.size() == 5);
    CHECK(inst.supply == Rational(1, 3));
    CHECK(inst.demand == Rational(1, 5));
    std::size_t edges = 0;
    for (const Partition& gamma : inst.left) edges += successors(gamma).size();
    CHECK(inst.edges.size() == edges);
}

TEST_CASE("transport feasibility with verified witnesses") {
    for (int n = 2; n <= 20; ++n) {
        CAPTURE(n);
        const PolymorphismReport r = polymorphism_feasibility(n);
        CHECK(r.max_flow == r.min_cut);
        CHECK(r.max_flow <= r.required);
        CHECK(r.feasible == (r.max_flow == r.required));
        if (n <= 8) CHECK(r.feasible == oracle::transport_feasible_by_hall(n));
        if (!r.feasible) continue;
        REQUIRE(r.witness.has_value());
        CHECK(r.witness_verified);

        // Independent recheck of sums and support.
        const FlowInstance inst = build_flow_instance(n);
        const Matrix& w = *r.witness;
        for (std::size_t i = 0; i < w.rows(); ++i) {
            Rational row = 0;
            for (std::size_t j = 0; j < w.cols(); ++j) {
                CHECK(sgn(w(i, j)) >= 0);
                if (sgn(w(i, j)) > 0) CHECK(oracle::dominates(inst.right[j].parts(), inst.left[i].parts()));
                if (sgn(w(i, j)) > 0) CHECK(inst.right[j].n() == inst.left[i].n() + 1);
                row += w(i, j);
            }
            CHECK(row == Rational(1, static_cast<unsigned long>(oracle::pentagonal_count(n - 1))));
        }
        for (std::size_t j = 0; j < w.cols(); ++j) {
            Rational col = 0;
            for (std::size_t i = 0; i < w.rows(); ++i) col += w(i, j);
            CHECK(col == Rational(1, static_cast<unsigned long>(oracle::pentagonal_count(n))));
        }
    }
}

TEST_CASE("witness verification rejects bad matrices") {
    const FlowInstance inst = build_flow_instance(5);
    const PolymorphismReport r = polymorphism_feasibility(5);
    REQUIRE(r.witness.has_value());
    CHECK(verify_witness(inst, *r.witness));

    Matrix shifted = *r.witness;
    // Move mass onto a pair that is not an edge.
    std::set<std::pair<std::size_t, std::size_t>> support(inst.edges.begin(), inst.edges.end());
    bool moved = false;
    for (std::size_t i = 0; i < shifted.rows() && !moved; ++i) {
        for (std::size_t j = 0; j < shifted.cols() && !moved; ++j) {
            if (support.count({i, j}) || sgn(shifted(i, 0)) == 0) continue;
            shifted(i, j) += shifted(i, 0);
            shifted(i, 0) = 0;
            moved = true;
        }
    }
    CHECK(moved);
    CHECK_FALSE(verify_witness(inst, shifted));

    Matrix scaled = *r.witness;
    scaled(0, 0) += Rational(1, 1000);
    CHECK_FALSE(verify_witness(inst, scaled));
    CHECK_FALSE(verify_witness(inst, Matrix(1, 1)));
}
