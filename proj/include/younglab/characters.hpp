#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <utility>
#include <vector>

#include "younglab/exactla.hpp"
#include "younglab/partition.hpp"

namespace younglab {

/// Conjugacy classes of the symmetric group of degree n, indexed by cycle
/// type in partition enumeration order.
struct ConjugacyClasses {
    int n = 0;
    std::vector<Partition> types;
    std::vector<Integer> sizes;
    Integer group_order;
    std::map<Partition, std::size_t> index;

    std::size_t index_of(const Partition& cycle_type) const;
};

/// Shared, immutable class data for degree n (computed once per n).
std::shared_ptr<const ConjugacyClasses> conjugacy_classes(int n);

/// n! / z_rho.
Integer class_size(const Partition& cycle_type);

/// (-1)^(n - number of cycles).
int sign_of(const Partition& cycle_type);

/// A rational-valued function on the conjugacy classes of S_n.
class ClassFunction {
   public:
    ClassFunction() = default;
    explicit ClassFunction(int n);
    ClassFunction(std::shared_ptr<const ConjugacyClasses> classes, std::vector<Rational> values);

    int n() const noexcept { return classes_ ? classes_->n : 0; }
    const ConjugacyClasses& classes() const { return *classes_; }
    const std::vector<Rational>& values() const noexcept { return values_; }

    const Rational& operator[](const Partition& cycle_type) const { return values_[classes_->index_of(cycle_type)]; }
    const Rational& at(std::size_t i) const { return values_.at(i); }
    Rational& at(std::size_t i) { return values_.at(i); }

    /// Value at the identity class (the degree for a character).
    const Rational& degree() const { return values_.back(); }

    ClassFunction& operator+=(const ClassFunction& other);
    ClassFunction& operator-=(const ClassFunction& other);
    ClassFunction operator*(const Rational& scalar) const;
    ClassFunction operator+(const ClassFunction& other) const;
    ClassFunction operator-(const ClassFunction& other) const;

    bool is_integral() const;
    bool operator==(const ClassFunction& other) const { return n() == other.n() && values_ == other.values_; }

   private:
    std::shared_ptr<const ConjugacyClasses> classes_;
    std::vector<Rational> values_;
};

ClassFunction trivial_character(int n);
ClassFunction sign_character(int n);

/// psi_lambda: the permutation character on tabloids of shape lambda,
/// evaluated by counting the ways to distribute the cycles of each class
/// among the rows.
ClassFunction perm_character(const Partition& lambda);

/// Pointwise product with the sign character.
ClassFunction sign_twist(const ClassFunction& f);

/// phi_lambda: the character induced from the sign of the column group,
/// sgn * psi_{lambda'}.
ClassFunction ind_sgn_character(const Partition& lambda);

/// (1/n!) sum over classes of |C| f(C) g(C). All class functions here are
/// rational-valued, so no conjugation is applied.
/// Throws Error{DegreeMismatch}.
Rational inner(const ClassFunction& f, const ClassFunction& g);

/// Restriction to S_{n-1}: evaluate on cycle types with a fixed point appended.
ClassFunction restrict_to_previous(const ClassFunction& f);

/// <psi_lambda, phi_lambda>; equals 1 for every lambda.
Rational theorem1_check(const Partition& lambda);

struct CommonComponent {
    Partition mu;
    Integer in_permutation_module;  // <psi_lambda, chi^mu>
    Integer in_sign_module;         // <phi_lambda, chi^mu>
};

/// Irreducibles occurring in both psi_lambda and phi_lambda, in partition
/// order, with their multiplicities.
std::vector<CommonComponent> common_components(const Partition& lambda);

/// Irreducible characters of S_n obtained by peeling dominating irreducibles
/// off permutation characters. Immutable once built.
struct CharacterTable {
    int n = 0;
    std::shared_ptr<const ConjugacyClasses> classes;
    std::vector<Partition> shapes;  // enumeration order, (n) first
    std::vector<ClassFunction> characters;
    std::map<Partition, std::size_t> index;

    const ClassFunction& chi(const Partition& mu) const;
};

/// Cached per degree; safe to call from multiple threads.
/// Throws Error{OrthogonalizationFailure} if a derived character is not a
/// norm-one integer class function.
std::shared_ptr<const CharacterTable> character_table(int n);

std::map<Partition, ClassFunction> irreducible_characters(int n);

/// M(mu, lambda) = <psi_lambda, chi^mu> for all mu, lambda ⊢ n.
struct MultiplicityTable {
    int n = 0;
    std::vector<Partition> shapes;
    std::map<Partition, std::size_t> index;
    std::vector<std::vector<std::int64_t>> entries;  // [mu][lambda]

    std::int64_t operator()(const Partition& mu, const Partition& lambda) const;
};

MultiplicityTable multiplicity_table(int n);

/// M(mu, lambda) == K(mu, lambda) for every pair of partitions of n.
bool youngs_rule_check(int n);

/// Res psi_lambda == sum over gamma ≺ lambda of c(lambda, gamma) psi_gamma.
bool lemma1_check(const Partition& lambda);

/// Both sides of the multiplicity recurrence for lambda ⊢ n, rho ⊢ n-1:
///   left  = sum over mu ≻ rho of M(mu, lambda)
///   right = sum over gamma ≺ lambda of c(lambda, gamma) M(rho, gamma)
std::pair<std::int64_t, std::int64_t> eq1_check(const Partition& lambda, const Partition& rho);

/// sgn * chi^mu == chi^{mu'} for all mu, and <phi_lambda, chi^mu> == K(mu', lambda')
/// for all mu, lambda.
bool conjugate_twist_check(int n);

}  // namespace younglab
