#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace younglab {

using Integer = mpz_class;
using Rational = mpq_class;
using Vector = std::vector<Rational>;

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);
/// Inverse of to_string; throws std::invalid_argument on malformed input.
Rational parse_rational(const std::string& text);

/// Dense row-major matrix over the rationals.
class Matrix {
   public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n);
    /// Throws Error{DimensionMismatch} on ragged input.
    static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
    static Matrix from_rows(const std::vector<Vector>& rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<const Rational> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    std::span<Rational> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    Vector row_vector(std::size_t r) const;

    Matrix transpose() const;
    Matrix operator*(const Matrix& other) const;
    /// Matrix times column vector.
    Vector apply(std::span<const Rational> v) const;

    bool operator==(const Matrix&) const = default;

   private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

struct RrefResult {
    Matrix reduced;
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;
};

/// Gauss-Jordan reduction to reduced row echelon form, first nonzero pivot in
/// each column, zero rows at the bottom.
RrefResult rref(Matrix a);

std::size_t rank(const Matrix& a);

/// Rank through fraction-free Bareiss elimination on the row-wise cleared
/// integer matrix. Same answer as rank(); faster on integer-heavy input.
std::size_t rank_bareiss(const Matrix& a);

/// A subspace of Q^d held as a reduced row echelon basis.
class Subspace {
   public:
    explicit Subspace(std::size_t ambient_dim = 0) : ambient_dim_(ambient_dim), basis_(0, ambient_dim) {}

    /// Span of the given vectors (all of length ambient_dim).
    static Subspace span(const std::vector<Vector>& vectors, std::size_t ambient_dim);
    static Subspace span(const Matrix& rows);
    static Subspace whole(std::size_t ambient_dim);

    std::size_t ambient_dim() const noexcept { return ambient_dim_; }
    std::size_t dim() const noexcept { return basis_.rows(); }
    const Matrix& basis() const noexcept { return basis_; }
    const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

    /// Coordinates of v in basis(), or nullopt when v is not in the span.
    std::optional<Vector> coordinates(std::span<const Rational> v) const;
    bool contains(std::span<const Rational> v) const { return coordinates(v).has_value(); }
    bool contains(const Subspace& other) const;

    bool operator==(const Subspace& other) const {
        return ambient_dim_ == other.ambient_dim_ && basis_ == other.basis_;
    }

   private:
    std::size_t ambient_dim_;
    Matrix basis_;
    std::vector<std::size_t> pivots_;
};

/// {x : A x = 0}.
Subspace kernel(const Matrix& a);

/// Some x with A x = b, or nullopt. Throws Error{DimensionMismatch}.
std::optional<Vector> solve(const Matrix& a, const Vector& b);

bool member(const Subspace& s, std::span<const Rational> v);
Subspace intersect(const Subspace& a, const Subspace& b);
Subspace sum(const Subspace& a, const Subspace& b);

/// Trace of the operator A restricted to the invariant subspace S. Throws
/// Error{NotInvariant} when A maps some basis vector of S outside S.
Rational restricted_trace(const Matrix& op, const Subspace& s);
Rational restricted_trace(const Matrix& op, const Matrix& basis_rows);

/// Same for the permutation operator sending coordinate j to image[j].
Rational restricted_trace(std::span<const std::size_t> image, const Subspace& s);

/// Coordinates permuted: out[image[j]] = v[j].
Vector permute(std::span<const std::size_t> image, std::span<const Rational> v);

}  // namespace younglab
