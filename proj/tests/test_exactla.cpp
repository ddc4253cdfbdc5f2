#include <doctest.h>

#include <random>

#include "younglab/errors.hpp"
#include "younglab/exactla.hpp"

using namespace younglab;

namespace {

Matrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int density_percent) {
    std::uniform_int_distribution<int> entry(-4, 4);
    std::uniform_int_distribution<int> denom(1, 3);
    std::uniform_int_distribution<int> coin(0, 99);
    Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            if (coin(rng) < density_percent) m(r, c) = Rational(entry(rng), denom(rng));
        }
    }
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) m(r, c).canonicalize();
    }
    return m;
}

// Low-rank matrix: product of two random factors.
Matrix random_low_rank(std::mt19937& rng, std::size_t rows, std::size_t cols, std::size_t inner) {
    return random_matrix(rng, rows, inner, 80) * random_matrix(rng, inner, cols, 80);
}

bool is_zero(const Vector& v) {
    for (const Rational& x : v) {
        if (sgn(x) != 0) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("rational strings round trip") {
    CHECK(to_string(Rational(3, 4)) == "3/4");
    CHECK(to_string(Rational(-6, 4)) == "-3/2");
    CHECK(to_string(Rational(5)) == "5");
    for (const char* text : {"0", "-7", "12/5", "-1/3"}) CHECK(to_string(parse_rational(text)) == text);
    CHECK(parse_rational("4/6") == Rational(2, 3));
    CHECK_THROWS(parse_rational("1/0"));
    CHECK_THROWS(parse_rational("x"));
    CHECK_THROWS(parse_rational(""));
}

TEST_CASE("matrix basics") {
    const Matrix a = Matrix::from_rows({{1, 2}, {3, 4}});
    const Matrix b = Matrix::from_rows({{0, 1}, {1, 0}});
    CHECK(a * b == Matrix::from_rows({{2, 1}, {4, 3}}));
    CHECK(a.transpose() == Matrix::from_rows({{1, 3}, {2, 4}}));
    CHECK(a * Matrix::identity(2) == a);
    CHECK(a.apply(Vector{1, 1}) == Vector{3, 7});
    CHECK_THROWS_AS(Matrix::from_rows({{1, 2}, {3}}), Error);
}

TEST_CASE("row reduction on a known matrix") {
    const Matrix a = Matrix::from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
    const RrefResult r = rref(a);
    CHECK(r.rank == 2);
    CHECK(r.pivots == std::vector<std::size_t>{0, 1});
    CHECK(r.reduced == Matrix::from_rows({{1, 0, 1}, {0, 1, 1}, {0, 0, 0}}));
    CHECK(rank_bareiss(a) == 2);
    const Subspace k = kernel(a);
    REQUIRE(k.dim() == 1);
    CHECK(is_zero(a.apply(k.basis().row(0))));
}

TEST_CASE("random property checks") {
    std::mt19937 rng(20240611);
    std::uniform_int_distribution<std::size_t> size(1, 7);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t rows = size(rng);
        const std::size_t cols = size(rng);
        const Matrix a = trial % 2 == 0 ? random_matrix(rng, rows, cols, 60)
                                        : random_low_rank(rng, rows, cols, 1 + static_cast<std::size_t>(trial) % 3);
        const std::size_t r = rank(a);
        CHECK(r == rank_bareiss(a));
        CHECK(r == rank(a.transpose()));

        const Subspace ker = kernel(a);
        CHECK(ker.dim() + r == cols);
        for (std::size_t i = 0; i < ker.dim(); ++i) CHECK(is_zero(a.apply(ker.basis().row(i))));

        // Solving for a right-hand side in the column space.
        std::vector<Rational> x(cols);
        for (std::size_t i = 0; i < cols; ++i) x[i] = Rational(static_cast<long>(i % 3) - 1);
        const Vector b = a.apply(x);
        const auto solved = solve(a, b);
        REQUIRE(solved.has_value());
        CHECK(a.apply(*solved) == b);

        // Row space as a subspace.
        const Subspace rows_space = Subspace::span(a);
        CHECK(rows_space.dim() == r);
        for (std::size_t i = 0; i < rows; ++i) CHECK(rows_space.contains(a.row(i)));

        // Dimension formula for sum and intersection.
        const Matrix other = random_matrix(rng, size(rng), cols, 50);
        const Subspace s = Subspace::span(other);
        CHECK(sum(rows_space, s).dim() + intersect(rows_space, s).dim() == rows_space.dim() + s.dim());
        CHECK(intersect(rows_space, s).dim() <= std::min(rows_space.dim(), s.dim()));
        CHECK(sum(rows_space, s).contains(rows_space));
        CHECK(rows_space.contains(intersect(rows_space, s)));
    }
}

TEST_CASE("inconsistent systems have no solution") {
    const Matrix a = Matrix::from_rows({{1, 1}, {2, 2}});
    CHECK_FALSE(solve(a, Vector{1, 3}).has_value());
    CHECK_THROWS_AS(solve(a, Vector{1}), Error);
}

TEST_CASE("subspace coordinates") {
    const Subspace s = Subspace::span({Vector{1, 1, 0}, Vector{0, 1, 1}}, 3);
    CHECK(s.dim() == 2);
    const auto c = s.coordinates(Vector{1, 2, 1});
    REQUIRE(c.has_value());
    Vector rebuilt(3);
    for (std::size_t i = 0; i < s.dim(); ++i) {
        for (std::size_t j = 0; j < 3; ++j) rebuilt[j] += (*c)[i] * s.basis()(i, j);
    }
    CHECK(rebuilt == Vector{1, 2, 1});
    CHECK_FALSE(s.contains(Vector{1, 0, 0}));
    CHECK(Subspace::whole(3).dim() == 3);
    CHECK(Subspace(3).dim() == 0);
    CHECK(Subspace::span({Vector{2, 2, 0}, Vector{0, 3, 3}}, 3) == s);
}

TEST_CASE("restricted traces") {
    // Swap of the first two coordinates on Q^3.
    const std::vector<std::size_t> swap{1, 0, 2};
    CHECK(permute(swap, Vector{1, 2, 3}) == Vector{2, 1, 3});
    CHECK(restricted_trace(swap, Subspace::whole(3)) == 1);
    CHECK(restricted_trace(swap, Subspace::span({Vector{1, 1, 0}}, 3)) == 1);
    CHECK(restricted_trace(swap, Subspace::span({Vector{1, -1, 0}}, 3)) == -1);
    CHECK(restricted_trace(swap, Subspace::span({Vector{1, 1, 0}, Vector{1, -1, 0}}, 3)) == 0);
    CHECK_THROWS_AS(restricted_trace(swap, Subspace::span({Vector{1, 0, 0}}, 3)), Error);

    const Matrix op = Matrix::from_rows({{2, 0}, {0, 3}});
    CHECK(restricted_trace(op, Subspace::whole(2)) == 5);
    CHECK(restricted_trace(op, Subspace::span({Vector{0, 1}}, 2)) == 3);
    CHECK_THROWS_AS(restricted_trace(op, Subspace::span({Vector{1, 1}}, 2)), Error);
}
