#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "younglab/characters.hpp"
#include "younglab/exactla.hpp"
#include "younglab/partition.hpp"
#include "younglab/tableau.hpp"

namespace younglab {

/// Exponent vector over variables x1..xn.
class Monomial {
   public:
    Monomial() = default;
    explicit Monomial(std::vector<int> exponents);

    const std::vector<int>& exponents() const noexcept { return exponents_; }
    int nvars() const noexcept { return static_cast<int>(exponents_.size()); }
    int degree() const noexcept { return degree_; }

    /// "x1^2·x3"; "1" for the constant monomial.
    std::string to_string() const;

    bool operator==(const Monomial& other) const { return exponents_ == other.exponents_; }
    /// Graded lexicographic: total degree first, then exponents of x1, x2, ...
    bool operator<(const Monomial& other) const {
        if (degree_ != other.degree_) return degree_ < other.degree_;
        return exponents_ < other.exponents_;
    }

   private:
    std::vector<int> exponents_;
    int degree_ = 0;
};

/// 0-based images: the permutation sends i to perm[i].
using Permutation = std::vector<int>;

Permutation identity_permutation(int n);
/// (a b), 0-based.
Permutation transposition(int n, int a, int b);
/// sigma ∘ tau, i.e. i -> sigma(tau(i)).
Permutation compose(const Permutation& sigma, const Permutation& tau);
/// Product of cycles on consecutive points, one per part.
Permutation cycle_type_representative(const Partition& cycle_type);
Partition cycle_type(const Permutation& sigma);
/// All n! permutations in lexicographic order.
std::vector<Permutation> all_permutations(int n);

/// Polynomial in n variables with rational coefficients. Zero coefficients are
/// never stored.
class Form {
   public:
    explicit Form(int nvars = 0) : nvars_(nvars) {}

    static Form constant(int nvars, const Rational& c);
    /// x_{index+1}.
    static Form variable(int nvars, int index);
    static Form monomial(const Monomial& m, const Rational& c = 1);

    int nvars() const noexcept { return nvars_; }
    const std::map<Monomial, Rational>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    Rational coefficient(const Monomial& m) const;

    void add_term(const Monomial& m, const Rational& c);

    Form& operator+=(const Form& other);
    Form& operator-=(const Form& other);
    Form operator+(const Form& other) const;
    Form operator-(const Form& other) const;
    Form operator-() const;
    Form operator*(const Form& other) const;
    Form operator*(const Rational& scalar) const;

    /// Terms in decreasing graded lexicographic order: "3 * x1^2·x2 + -1 * x3".
    std::string to_string() const;

    bool operator==(const Form& other) const { return nvars_ == other.nvars_ && terms_ == other.terms_; }

   private:
    int nvars_;
    std::map<Monomial, Rational> terms_;
};

/// Substitution x_i -> x_{sigma(i)}.
Monomial act(const Permutation& sigma, const Monomial& m);
Form act(const Permutation& sigma, const Form& f);

/// D = sum_i d/dx_i.
Form total_derivative(const Form& f);

/// Elementary symmetric polynomial of the given degree in the listed
/// variables (0-based indices).
Form elementary_symmetric(int nvars, const std::vector<int>& variables, int degree);

/// Replaces every exponent e by exponent_map[e] (exponents outside the map are
/// kept). Swapping 1 and 2 is the degree substitution x_i^2 x_j <-> x_i x_j^2.
Form substitute_degrees(const Form& f, const std::map<int, int>& exponent_map);

/// An ordered monomial basis of an ambient form space.
class MonomialBasis {
   public:
    explicit MonomialBasis(std::vector<Monomial> monomials);

    int nvars() const noexcept { return nvars_; }
    std::size_t size() const noexcept { return monomials_.size(); }
    const std::vector<Monomial>& monomials() const noexcept { return monomials_; }
    std::optional<std::size_t> index_of(const Monomial& m) const;

    /// Throws Error{DimensionMismatch} if f uses a monomial outside the basis.
    Vector coordinates(const Form& f) const;
    Form form(std::span<const Rational> coords) const;

    /// Index permutation induced by sigma. Throws Error{NotInvariant} if the
    /// monomial set is not closed under sigma.
    std::vector<std::size_t> action(const Permutation& sigma) const;

   private:
    int nvars_ = 0;
    std::vector<Monomial> monomials_;
    std::map<Monomial, std::size_t> index_;
};

/// A subspace of the span of an ambient monomial basis.
class FormSpace {
   public:
    FormSpace(std::shared_ptr<const MonomialBasis> ambient, Subspace space);

    static FormSpace span(std::shared_ptr<const MonomialBasis> ambient, const std::vector<Form>& forms);
    static FormSpace whole(std::shared_ptr<const MonomialBasis> ambient);

    const MonomialBasis& ambient() const noexcept { return *ambient_; }
    std::shared_ptr<const MonomialBasis> ambient_ptr() const noexcept { return ambient_; }
    const Subspace& subspace() const noexcept { return space_; }
    std::size_t dim() const noexcept { return space_.dim(); }

    bool contains(const Form& f) const;
    std::vector<Form> basis_forms() const;

    /// Closed under the adjacent transpositions, hence under all of S_n.
    bool is_invariant() const;

    /// Character of the restricted substitution action. Propagates
    /// Error{NotInvariant}.
    ClassFunction character() const;

   private:
    std::shared_ptr<const MonomialBasis> ambient_;
    Subspace space_;
};

/// Monomials of L_lambda: each variable assigned to row i carries exponent
/// i-1; count n! / prod lambda_i!. Sorted. Throws Error{MismatchedSize}.
std::vector<Monomial> x_monomials(const Partition& lambda, int n);

std::shared_ptr<const MonomialBasis> l_basis(const Partition& lambda);

/// Square-free monomials of degree k in n variables.
std::shared_ptr<const MonomialBasis> square_free_basis(int n, int k);

/// Permutation character of S_n on the monomials of L_lambda.
ClassFunction monomial_character(const Partition& lambda);

/// L_lambda has dimension n!/prod lambda_i! (checked as a rank) and its
/// monomial character equals psi_lambda.
bool statement2_check(const Partition& lambda, int n);

/// Product over columns of the Vandermonde products (x_s - x_k), s above k.
/// Throws Error{InvalidFilling} unless the entries are exactly 1..n.
Form specht_poly(const Tableau& filling);

/// {f in span : D f = 0}.
Subspace d_kernel(const MonomialBasis& ambient);

/// Span of the standard Specht polynomials inside L_lambda.
FormSpace specht_module(const Partition& lambda, int n);

struct Theorem5Report {
    Partition lambda;
    std::size_t l_dim = 0;
    std::size_t standard_tableaux = 0;
    std::uint64_t f_lambda = 0;
    std::size_t rank = 0;
    bool all_in_l = false;        // every Specht polynomial lies in L_lambda
    bool independent = false;     // rank == number of standard tableaux == f^lambda
    bool invariant = false;
    std::size_t shift_invariant_dim = 0;
    bool equals_shift_invariant = false;  // span == D-kernel of L_lambda
    bool character_matches = false;       // restricted character == chi^lambda

    bool ok() const {
        return all_in_l && independent && invariant && equals_shift_invariant && character_matches;
    }
};

Theorem5Report theorem5_check(const Partition& lambda, int n);

struct TwoRowComponent {
    int l = 0;
    std::size_t generators = 0;
    std::size_t dim = 0;
    std::uint64_t expected_dim = 0;  // f^(n-l, l)
    bool invariant = false;
    bool character_matches = false;  // chi^(n-l, l)
};

struct TwoRowReport {
    int n = 0;
    int k = 0;
    std::size_t fk_dim = 0;
    std::vector<TwoRowComponent> components;
    bool direct_sum = false;              // dims add up to C(n,k) and together span F_k
    bool pairwise_trivial = false;        // pairwise intersections are zero
    std::optional<bool> top_is_d_kernel;  // n even and k = n/2 only

    bool ok() const;
};

/// X_I = (x_{i1} - x_{i2}) ... (x_{i_{2l-1}} - x_{i_{2l}}) sigma_{k-l}(rest),
/// one per set of l disjoint index pairs.
std::vector<Form> two_row_generators(int n, int k, int l);

/// Requires k <= n/2.
TwoRowReport two_row_decomposition(int n, int k);

struct Example4Block {
    std::string name;
    Partition shape;  // irreducible the block realizes
    std::vector<std::string> generator_names;
    std::size_t dim = 0;
    bool invariant = false;
    bool character_matches = false;
    bool parity_matches = false;  // inside the expected even/odd eigenspace
    bool even = false;
};

struct Example4Report {
    std::vector<std::pair<std::string, Form>> forms;  // D, C1, C2, C3, SP1.., A1.., B1..
    std::vector<Example4Block> blocks;
    std::size_t l_dim = 0;
    std::size_t total_rank = 0;
    bool all_in_l = false;
    bool direct_sum = false;
    std::size_t even_dim = 0;
    std::size_t odd_dim = 0;
    Rational c3_from_c1;  // C3 = a C1 + b C2
    Rational c3_from_c2;
    bool c_relation_holds = false;  // C1 - C2 + C3 == 0
    /// <psi_(2,1,1), chi^mu> for mu = (4), (2,2), (2,1,1), (3,1).
    std::vector<std::pair<Partition, std::int64_t>> multiplicities;

    bool ok() const;
};

Example4Report example4_check();

}  // namespace younglab
