#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "younglab/exactla.hpp"
#include "younglab/partition.hpp"

namespace younglab {

/// The homogeneous system on Y(mu, lambda) = M(mu, lambda) - K(mu, lambda):
/// one equation sum_{mu ≻ rho} Y(mu, lambda) = 0 per rho ⊵ bar(lambda), one
/// unknown per mu ⊵ lambda. Entry (rho, mu) is 1 iff mu ≻ rho.
struct System3 {
    Partition lambda;
    std::vector<Partition> row_index;  // rho ⊢ n-1, rho ⊵ bar(lambda)
    std::vector<Partition> col_index;  // mu ⊢ n, mu ⊵ lambda
    Matrix matrix;
};

/// Rows and columns in partition enumeration order. Requires n >= 2.
System3 build_system3(const Partition& lambda);

struct Statement1Report {
    /// mu -> bar(mu) maps {mu ⊵ lambda} one-to-one onto {rho ⊵ bar(lambda)}.
    bool bar_bijective = false;
    bool square = false;
    std::size_t kernel_dim = 0;
    /// Under the bar identification: unit diagonal, and a nonzero entry in row
    /// rho and column mu only when bar(mu) ⊴ rho. False when not bar-bijective.
    bool unipotent = false;
};

Statement1Report statement1_check(const Partition& lambda);

/// With Y = M - K from the character and tableau modules, checks
/// sum_{mu ≻ rho} Y(mu, lambda) = 0 for every lambda ⊢ n and rho ⊢ n-1.
bool eq3_residual_check(int n);

/// Transport problem from the uniform distribution on partitions of n-1 to
/// the uniform distribution on partitions of n along Young graph edges.
struct FlowInstance {
    int n = 0;
    std::vector<Partition> left;   // partitions of n-1
    std::vector<Partition> right;  // partitions of n
    std::vector<std::pair<std::size_t, std::size_t>> edges;  // (left, right), gamma ≺ lambda
    Rational supply;  // per left node, 1/p(n-1)
    Rational demand;  // per right node, 1/p(n)
};

FlowInstance build_flow_instance(int n);

struct PolymorphismReport {
    int n = 0;
    bool feasible = false;
    /// Max flow in the network scaled by p(n-1) p(n), against the required
    /// total p(n-1) p(n).
    std::int64_t max_flow = 0;
    std::int64_t required = 0;
    /// Capacity of the minimum cut found by the final residual search; equals
    /// max_flow, which certifies optimality.
    std::int64_t min_cut = 0;
    /// Witness c[gamma][lambda] (rows: partitions of n-1) when feasible.
    std::optional<Matrix> witness;
    /// Row/column sums and support of the witness re-checked exactly.
    bool witness_verified = false;
};

/// Decides feasibility with shortest-augmenting-path max flow on the scaled
/// integer network. Requires n >= 2.
PolymorphismReport polymorphism_feasibility(int n);

/// Exact check of a candidate witness against the instance constraints.
bool verify_witness(const FlowInstance& instance, const Matrix& witness);

}  // namespace younglab
