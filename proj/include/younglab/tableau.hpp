#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "younglab/partition.hpp"

namespace younglab {

/// Multiplicities of symbols 1, 2, ...: counts[i] is the number of entries
/// equal to i + 1. Need not be weakly decreasing, and zeros are allowed.
struct Weight {
    std::vector<int> counts;

    Weight() = default;
    explicit Weight(std::vector<int> c);
    /// The weight of a partition: symbol i appears lambda_i times.
    static Weight of(const Partition& lambda);

    int total() const noexcept;
    /// The weight with one occurrence of `symbol` (1-based) removed.
    Weight without(int symbol) const;
    /// Nonzero counts sorted into a partition.
    Partition sorted() const;

    std::string to_string() const;
    bool operator==(const Weight&) const = default;
    auto operator<=>(const Weight&) const = default;
};

/// A filling of a Young diagram by positive integers. Construction checks only
/// that the row lengths form the shape; use the predicates for the ordering
/// conditions.
class Tableau {
   public:
    Tableau() = default;
    explicit Tableau(std::vector<std::vector<int>> rows);

    /// "1,1,1,2/2,3": rows separated by '/', entries by ','.
    static Tableau parse(std::string_view text);

    const Partition& shape() const noexcept { return shape_; }
    const std::vector<std::vector<int>>& rows() const noexcept { return rows_; }
    int size() const noexcept { return shape_.n(); }

    bool is_semistandard() const;
    /// Semistandard with entries exactly 1..n.
    bool is_standard() const;
    Weight weight() const;

    /// Entries read row by row, top to bottom.
    std::vector<int> reading_word() const;

    std::string to_string() const;
    /// "1 1 1 2 / 2 3"
    std::string to_ascii() const;

    bool operator==(const Tableau&) const = default;

   private:
    std::vector<std::vector<int>> rows_;
    Partition shape_;
};

/// All semistandard tableaux of the given shape and weight, ordered
/// lexicographically by reading word. Throws Error{MismatchedSize} when the
/// weight total differs from the shape size.
std::vector<Tableau> enumerate_ssyt(const Partition& shape, const Weight& weight);

/// Standard tableaux of shape lambda (weight 1^n).
std::vector<Tableau> enumerate_standard(const Partition& lambda);

/// K(mu, weight): the number of semistandard tableaux of shape mu and the
/// given weight.
std::uint64_t kostka(const Partition& mu, const Weight& weight);
std::uint64_t kostka(const Partition& mu, const Partition& lambda);

/// Both sides of the Kostka recurrence for lambda ⊢ n and rho ⊢ n-1:
///   left  = sum over mu ≻ rho of K(mu, lambda)
///   right = sum over gamma ≺ lambda of c(lambda, gamma) K(rho, gamma)
std::pair<std::uint64_t, std::uint64_t> eq2_check(const Partition& lambda, const Partition& rho);

struct BijectionPair {
    Tableau mu_tableau;
    int removed_symbol = 0;
    Tableau rho_tableau;
    Weight gamma_weight;
};

enum class BijectionMethod {
    Canonical,  // per-item corner rule succeeded everywhere
    Matching,   // bipartite matching on single-deletion edges
    Arbitrary,  // no single-deletion perfect matching; equal counts paired in order
};

std::string_view to_string(BijectionMethod method);

/// Pairing between semistandard tableaux of weight lambda on every shape
/// mu ≻ rho, and pairs (symbol r, semistandard tableau of shape rho and
/// weight lambda minus one r).
struct BijectionCertificate {
    Partition lambda;
    Partition rho;
    std::vector<BijectionPair> pairs;
    bool canonical = false;
    BijectionMethod method = BijectionMethod::Canonical;
    /// Items on which the corner rule alone produced a valid right element.
    std::size_t canonical_successes = 0;
};

/// Builds the certificate. For T of shape mu whose extra cell over rho lies in
/// row r, the canonical rule deletes the rightmost r from row r of T. When the
/// rule does not yield a bijection, a maximum bipartite matching over edges
/// "delete one occurrence of some symbol from row r" is used instead.
BijectionCertificate theorem4_bijection(const Partition& lambda, const Partition& rho);

/// Checks that every item on both sides appears exactly once and that each
/// pair is consistent (shapes, weights, removed symbol).
bool verify_certificate(const BijectionCertificate& certificate);

/// Tableau with the cell in row `row` (0-based) at column `column` deleted and
/// the row closed up.
Tableau delete_cell(const Tableau& t, int row, int column);

}  // namespace younglab
