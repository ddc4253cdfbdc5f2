#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace younglab {

/// A partition of n: weakly decreasing positive parts. Doubles as a Young
/// diagram (row lengths), as a cycle type, and as a tableau weight.
///
/// Values are immutable once constructed; the default value is the empty
/// partition of 0.
class Partition {
   public:
    Partition() = default;

    /// Throws Error{InvalidPartition} unless `parts` is weakly decreasing and
    /// strictly positive.
    explicit Partition(std::vector<int> parts);

    /// Parses "3,2,1"; the empty string is the empty partition.
    static Partition parse(std::string_view text);

    const std::vector<int>& parts() const noexcept { return parts_; }
    int n() const noexcept { return n_; }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    bool empty() const noexcept { return parts_.empty(); }

    /// Row length at 0-based index i, 0 past the last row.
    int operator[](std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }

    /// Number of rows equal to `value`.
    int multiplicity(int value) const noexcept;

    /// "3,2,1"; "" for the empty partition.
    std::string to_string() const;

    bool operator==(const Partition&) const = default;
    // Lexicographic on parts. Partitions of equal n sort with (1^n) first;
    // enumeration order is the reverse of this.
    std::strong_ordering operator<=>(const Partition& other) const { return parts_ <=> other.parts_; }

   private:
    std::vector<int> parts_;
    int n_ = 0;
};

/// One edge of the Young graph: `upper` is `lower` plus a cell in row
/// `row_index` (1-based).
struct CoverEdge {
    Partition lower;
    Partition upper;
    int row_index = 0;
};

/// A predecessor gamma of lambda with c(lambda, gamma), the number of rows of
/// lambda whose shortening by one cell yields gamma.
struct Predecessor {
    Partition gamma;
    int multiplicity = 0;
};

/// All partitions of n in reverse lexicographic order: (n) first, (1^n) last.
/// This order is a linear extension of reverse dominance.
std::vector<Partition> enumerate_partitions(int n);

/// p(n) without materializing the partitions.
std::uint64_t partition_count(int n);

Partition conjugate(const Partition& lambda);

/// mu ⊵ lambda: every prefix sum of mu is at least that of lambda.
/// Throws Error{MismatchedSize} if the sizes differ.
bool dominates(const Partition& mu, const Partition& lambda);

/// Partitions obtained by removing one corner, ordered by the row of the
/// removed cell (topmost first). This is an increasing chain in dominance.
/// Throws Error{EmptyPartition} for the empty partition.
std::vector<Predecessor> predecessors(const Partition& lambda);

/// Partitions obtained by adding one cell, topmost row first, which is the
/// enumeration order.
std::vector<Partition> successors(const Partition& rho);

/// Cover edges from `rho` to each of its successors.
std::vector<CoverEdge> cover_edges(const Partition& rho);

/// gamma ≺ lambda in the Young graph.
bool covers(const Partition& lambda, const Partition& gamma);

/// Removes a cell from the topmost row i with lambda_i > lambda_{i+1}; this is
/// the dominance-minimum predecessor.
Partition bar(const Partition& lambda);

/// Number of partitions of n dominating lambda.
std::uint64_t h(const Partition& lambda);
/// h(bar(lambda)).
std::uint64_t hbar(const Partition& lambda);

/// f^lambda, the number of paths from the empty diagram to lambda in the
/// Young graph, computed through the branching recursion.
std::uint64_t standard_count(const Partition& lambda);

}  // namespace younglab
