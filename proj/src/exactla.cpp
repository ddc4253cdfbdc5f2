#include "younglab/exactla.hpp"

#include <cassert>
#include <stdexcept>
#include <utility>

#include "younglab/errors.hpp"

namespace younglab {

std::string to_string(const Rational& value) {
    Rational q = value;
    q.canonicalize();
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(const std::string& text) {
    Rational q;
    if (text.empty() || q.set_str(text, 10) != 0) {
        throw std::invalid_argument("malformed rational '" + text + "'");
    }
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
    q.canonicalize();
    return q;
}

// --- Matrix -------------------------------------------------------------

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) {
            throw Error(Errc::DimensionMismatch, "row " + std::to_string(r) + " has length " +
                                                     std::to_string(rows[r].size()) + ", expected " +
                                                     std::to_string(cols));
        }
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows) {
    return from_rows(rows, rows.empty() ? 0 : rows.front().size());
}

Vector Matrix::row_vector(std::size_t r) const {
    auto span = row(r);
    return Vector(span.begin(), span.end());
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    }
    return t;
}

Matrix Matrix::operator*(const Matrix& other) const {
    if (cols_ != other.rows_) throw Error(Errc::DimensionMismatch, "matrix product shape mismatch");
    Matrix out(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& a = (*this)(i, k);
            if (sgn(a) == 0) continue;
            for (std::size_t j = 0; j < other.cols_; ++j) out(i, j) += a * other(k, j);
        }
    }
    return out;
}

Vector Matrix::apply(std::span<const Rational> v) const {
    if (v.size() != cols_) throw Error(Errc::DimensionMismatch, "matrix-vector shape mismatch");
    Vector out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            if (sgn(v[k]) != 0 && sgn((*this)(i, k)) != 0) out[i] += (*this)(i, k) * v[k];
        }
    }
    return out;
}

// --- elimination ----------------------------------------------------------

RrefResult rref(Matrix a) {
    RrefResult result;
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    std::size_t lead = 0;
    for (std::size_t c = 0; c < cols && lead < rows; ++c) {
        std::size_t pivot = lead;
        while (pivot < rows && sgn(a(pivot, c)) == 0) ++pivot;
        if (pivot == rows) continue;
        if (pivot != lead) {
            for (std::size_t j = c; j < cols; ++j) swap(a(pivot, j), a(lead, j));
        }
        const Rational inv = 1 / a(lead, c);
        for (std::size_t j = c; j < cols; ++j) {
            if (sgn(a(lead, j)) != 0) a(lead, j) *= inv;
        }
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == lead || sgn(a(i, c)) == 0) continue;
            const Rational factor = a(i, c);
            for (std::size_t j = c; j < cols; ++j) {
                if (sgn(a(lead, j)) != 0) a(i, j) -= factor * a(lead, j);
            }
        }
        result.pivots.push_back(c);
        ++lead;
    }
    result.rank = lead;
    result.reduced = std::move(a);
    return result;
}

std::size_t rank(const Matrix& a) { return rref(a).rank; }

std::size_t rank_bareiss(const Matrix& a) {
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    std::vector<Integer> m(rows * cols);
    for (std::size_t r = 0; r < rows; ++r) {
        Integer scale = 1;
        for (std::size_t c = 0; c < cols; ++c) {
            mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), a(r, c).get_den_mpz_t());
        }
        for (std::size_t c = 0; c < cols; ++c) {
            m[r * cols + c] = a(r, c).get_num() * (scale / a(r, c).get_den());
        }
    }
    auto at = [&](std::size_t r, std::size_t c) -> Integer& { return m[r * cols + c]; };

    Integer previous = 1;
    std::size_t lead = 0;
    Integer t;
    for (std::size_t c = 0; c < cols && lead < rows; ++c) {
        std::size_t pivot = lead;
        while (pivot < rows && sgn(at(pivot, c)) == 0) ++pivot;
        if (pivot == rows) continue;
        if (pivot != lead) {
            for (std::size_t j = 0; j < cols; ++j) swap(at(pivot, j), at(lead, j));
        }
        for (std::size_t i = lead + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                t = at(lead, c) * at(i, j) - at(i, c) * at(lead, j);
                mpz_divexact(at(i, j).get_mpz_t(), t.get_mpz_t(), previous.get_mpz_t());
            }
            at(i, c) = 0;
        }
        previous = at(lead, c);
        ++lead;
    }
    return lead;
}

// --- Subspace -------------------------------------------------------------

Subspace Subspace::span(const Matrix& rows) {
    RrefResult r = rref(rows);
    Subspace s(rows.cols());
    s.basis_ = Matrix(r.rank, rows.cols());
    for (std::size_t i = 0; i < r.rank; ++i) {
        for (std::size_t j = 0; j < rows.cols(); ++j) s.basis_(i, j) = r.reduced(i, j);
    }
    s.pivots_ = std::move(r.pivots);
    return s;
}

Subspace Subspace::span(const std::vector<Vector>& vectors, std::size_t ambient_dim) {
    return span(Matrix::from_rows(vectors, ambient_dim));
}

Subspace Subspace::whole(std::size_t ambient_dim) { return span(Matrix::identity(ambient_dim)); }

std::optional<Vector> Subspace::coordinates(std::span<const Rational> v) const {
    if (v.size() != ambient_dim_) throw Error(Errc::DimensionMismatch, "vector length differs from ambient dimension");
    Vector coords(dim());
    Vector residual(v.begin(), v.end());
    for (std::size_t i = 0; i < dim(); ++i) {
        coords[i] = residual[pivots_[i]];
        if (sgn(coords[i]) == 0) continue;
        for (std::size_t j = pivots_[i]; j < ambient_dim_; ++j) {
            if (sgn(basis_(i, j)) != 0) residual[j] -= coords[i] * basis_(i, j);
        }
    }
    for (const Rational& x : residual) {
        if (sgn(x) != 0) return std::nullopt;
    }
    return coords;
}

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_dim_ != ambient_dim_) return false;
    for (std::size_t i = 0; i < other.dim(); ++i) {
        if (!contains(other.basis_.row(i))) return false;
    }
    return true;
}

Subspace kernel(const Matrix& a) {
    RrefResult r = rref(a);
    const std::size_t cols = a.cols();
    std::vector<char> is_pivot(cols, 0);
    for (std::size_t p : r.pivots) is_pivot[p] = 1;
    std::vector<Vector> vectors;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        Vector x(cols);
        x[free] = 1;
        for (std::size_t i = 0; i < r.rank; ++i) x[r.pivots[i]] = -r.reduced(i, free);
        vectors.push_back(std::move(x));
    }
    return Subspace::span(vectors, cols);
}

std::optional<Vector> solve(const Matrix& a, const Vector& b) {
    if (b.size() != a.rows()) throw Error(Errc::DimensionMismatch, "right-hand side length differs from row count");
    Matrix augmented(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) augmented(i, j) = a(i, j);
        augmented(i, a.cols()) = b[i];
    }
    RrefResult r = rref(std::move(augmented));
    if (!r.pivots.empty() && r.pivots.back() == a.cols()) return std::nullopt;
    Vector x(a.cols());
    for (std::size_t i = 0; i < r.rank; ++i) x[r.pivots[i]] = r.reduced(i, a.cols());
    assert(a.apply(x) == b);
    return x;
}

bool member(const Subspace& s, std::span<const Rational> v) { return s.contains(v); }

Subspace intersect(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim()) throw Error(Errc::DimensionMismatch, "subspaces live in different spaces");
    const std::size_t d = a.ambient_dim();
    if (a.dim() == 0 || b.dim() == 0) return Subspace(d);
    // x A = y B  <=>  [A^T | -B^T] (x, y) = 0
    Matrix stacked(d, a.dim() + b.dim());
    for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t i = 0; i < a.dim(); ++i) stacked(j, i) = a.basis()(i, j);
        for (std::size_t i = 0; i < b.dim(); ++i) stacked(j, a.dim() + i) = -b.basis()(i, j);
    }
    Subspace relations = kernel(stacked);
    std::vector<Vector> vectors;
    for (std::size_t k = 0; k < relations.dim(); ++k) {
        Vector v(d);
        for (std::size_t i = 0; i < a.dim(); ++i) {
            const Rational& x = relations.basis()(k, i);
            if (sgn(x) == 0) continue;
            for (std::size_t j = 0; j < d; ++j) v[j] += x * a.basis()(i, j);
        }
        vectors.push_back(std::move(v));
    }
    return Subspace::span(vectors, d);
}

Subspace sum(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim()) throw Error(Errc::DimensionMismatch, "subspaces live in different spaces");
    std::vector<Vector> vectors;
    for (std::size_t i = 0; i < a.dim(); ++i) vectors.push_back(a.basis().row_vector(i));
    for (std::size_t i = 0; i < b.dim(); ++i) vectors.push_back(b.basis().row_vector(i));
    return Subspace::span(vectors, a.ambient_dim());
}

// --- restricted traces ------------------------------------------------------

namespace {

template <typename Apply>
Rational trace_on(const Subspace& s, Apply apply) {
    Rational trace = 0;
    for (std::size_t i = 0; i < s.dim(); ++i) {
        const Vector image = apply(s.basis().row(i));
        std::optional<Vector> coords = s.coordinates(image);
        if (!coords) {
            throw Error(Errc::NotInvariant, "operator maps basis vector " + std::to_string(i) +
                                                " outside the subspace");
        }
        trace += (*coords)[i];
    }
    return trace;
}

}  // namespace

Rational restricted_trace(const Matrix& op, const Subspace& s) {
    if (op.rows() != s.ambient_dim() || op.cols() != s.ambient_dim()) {
        throw Error(Errc::DimensionMismatch, "operator size differs from ambient dimension");
    }
    return trace_on(s, [&](std::span<const Rational> v) { return op.apply(v); });
}

Rational restricted_trace(const Matrix& op, const Matrix& basis_rows) {
    return restricted_trace(op, Subspace::span(basis_rows));
}

Vector permute(std::span<const std::size_t> image, std::span<const Rational> v) {
    if (image.size() != v.size()) throw Error(Errc::DimensionMismatch, "permutation size differs from vector length");
    Vector out(v.size());
    for (std::size_t j = 0; j < v.size(); ++j) out[image[j]] = v[j];
    return out;
}

Rational restricted_trace(std::span<const std::size_t> image, const Subspace& s) {
    if (image.size() != s.ambient_dim()) throw Error(Errc::DimensionMismatch, "permutation size differs from ambient dimension");
    return trace_on(s, [&](std::span<const Rational> v) { return permute(image, v); });
}

}  // namespace younglab
