#include "younglab/linsys.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <queue>
#include <set>

#include "younglab/characters.hpp"
#include "younglab/errors.hpp"
#include "younglab/tableau.hpp"

namespace younglab {

System3 build_system3(const Partition& lambda) {
    if (lambda.n() < 2) throw Error(Errc::EmptyPartition, "system (3) needs n >= 2");
    System3 system;
    system.lambda = lambda;
    const Partition lambda_bar = bar(lambda);
    for (const Partition& rho : enumerate_partitions(lambda.n() - 1)) {
        if (dominates(rho, lambda_bar)) system.row_index.push_back(rho);
    }
    for (const Partition& mu : enumerate_partitions(lambda.n())) {
        if (dominates(mu, lambda)) system.col_index.push_back(mu);
    }
    system.matrix = Matrix(system.row_index.size(), system.col_index.size());
    for (std::size_t r = 0; r < system.row_index.size(); ++r) {
        for (std::size_t c = 0; c < system.col_index.size(); ++c) {
            if (covers(system.col_index[c], system.row_index[r])) system.matrix(r, c) = 1;
        }
    }
    return system;
}

Statement1Report statement1_check(const Partition& lambda) {
    const System3 system = build_system3(lambda);
    Statement1Report report;
    report.square = system.row_index.size() == system.col_index.size();
    report.kernel_dim = kernel(system.matrix).dim();

    std::set<Partition> images;
    for (const Partition& mu : system.col_index) images.insert(bar(mu));
    const std::set<Partition> rows(system.row_index.begin(), system.row_index.end());
    report.bar_bijective = images.size() == system.col_index.size() && images == rows;
    if (!report.bar_bijective) return report;

    report.unipotent = true;
    for (std::size_t c = 0; c < system.col_index.size(); ++c) {
        const Partition identified = bar(system.col_index[c]);
        for (std::size_t r = 0; r < system.row_index.size(); ++r) {
            const bool nonzero = sgn(system.matrix(r, c)) != 0;
            const Partition& rho = system.row_index[r];
            if (rho == identified && !nonzero) report.unipotent = false;
            if (nonzero && !dominates(rho, identified)) report.unipotent = false;
        }
    }
    return report;
}

bool eq3_residual_check(int n) {
    if (n < 2) throw Error(Errc::EmptyPartition, "system (3) needs n >= 2");
    const MultiplicityTable m = multiplicity_table(n);
    for (const Partition& lambda : m.shapes) {
        for (const Partition& rho : enumerate_partitions(n - 1)) {
            std::int64_t total = 0;
            for (const Partition& mu : successors(rho)) {
                total += m(mu, lambda) - static_cast<std::int64_t>(kostka(mu, lambda));
            }
            if (total != 0) return false;
        }
    }
    return true;
}

// --- polymorphism problem --------------------------------------------------------

FlowInstance build_flow_instance(int n) {
    if (n < 2) throw Error(Errc::EmptyPartition, "the transport problem needs n >= 2");
    FlowInstance instance;
    instance.n = n;
    instance.left = enumerate_partitions(n - 1);
    instance.right = enumerate_partitions(n);
    std::map<Partition, std::size_t> right_index;
    for (std::size_t j = 0; j < instance.right.size(); ++j) right_index.emplace(instance.right[j], j);
    for (std::size_t i = 0; i < instance.left.size(); ++i) {
        for (const Partition& mu : successors(instance.left[i])) instance.edges.emplace_back(i, right_index.at(mu));
    }
    instance.supply = Rational(1, static_cast<unsigned long>(instance.left.size()));
    instance.demand = Rational(1, static_cast<unsigned long>(instance.right.size()));
    return instance;
}

namespace {

// Edmonds-Karp on an adjacency-list residual graph.
class MaxFlow {
   public:
    explicit MaxFlow(std::size_t nodes) : graph_(nodes) {}

    std::size_t add_edge(std::size_t from, std::size_t to, std::int64_t capacity) {
        graph_[from].push_back({to, capacity, graph_[to].size()});
        graph_[to].push_back({from, 0, graph_[from].size() - 1});
        return graph_[from].size() - 1;
    }

    std::int64_t run(std::size_t source, std::size_t sink) {
        std::int64_t total = 0;
        while (true) {
            std::vector<std::pair<std::size_t, std::size_t>> parent(graph_.size(), {npos, npos});
            parent[source] = {source, npos};
            std::queue<std::size_t> frontier;
            frontier.push(source);
            while (!frontier.empty() && parent[sink].first == npos) {
                const std::size_t u = frontier.front();
                frontier.pop();
                for (std::size_t k = 0; k < graph_[u].size(); ++k) {
                    const Arc& arc = graph_[u][k];
                    if (arc.capacity > 0 && parent[arc.to].first == npos) {
                        parent[arc.to] = {u, k};
                        frontier.push(arc.to);
                    }
                }
            }
            if (parent[sink].first == npos) break;
            std::int64_t bottleneck = std::numeric_limits<std::int64_t>::max();
            for (std::size_t v = sink; v != source; v = parent[v].first) {
                bottleneck = std::min(bottleneck, graph_[parent[v].first][parent[v].second].capacity);
            }
            for (std::size_t v = sink; v != source; v = parent[v].first) {
                Arc& arc = graph_[parent[v].first][parent[v].second];
                arc.capacity -= bottleneck;
                graph_[v][arc.reverse].capacity += bottleneck;
            }
            total += bottleneck;
        }
        return total;
    }

    /// Nodes reachable from source in the residual graph.
    std::vector<char> reachable(std::size_t source) const {
        std::vector<char> seen(graph_.size(), 0);
        std::queue<std::size_t> frontier;
        frontier.push(source);
        seen[source] = 1;
        while (!frontier.empty()) {
            const std::size_t u = frontier.front();
            frontier.pop();
            for (const Arc& arc : graph_[u]) {
                if (arc.capacity > 0 && !seen[arc.to]) {
                    seen[arc.to] = 1;
                    frontier.push(arc.to);
                }
            }
        }
        return seen;
    }

    /// Flow pushed along the forward arc graph_[from][slot].
    std::int64_t flow_on(std::size_t from, std::size_t slot) const {
        const Arc& arc = graph_[from][slot];
        return graph_[arc.to][arc.reverse].capacity;
    }

   private:
    static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();
    struct Arc {
        std::size_t to;
        std::int64_t capacity;
        std::size_t reverse;
    };
    std::vector<std::vector<Arc>> graph_;
};

}  // namespace

PolymorphismReport polymorphism_feasibility(int n) {
    const FlowInstance instance = build_flow_instance(n);
    const auto p_left = static_cast<std::int64_t>(instance.left.size());
    const auto p_right = static_cast<std::int64_t>(instance.right.size());
    const std::int64_t total = p_left * p_right;

    // Scaled by p(n-1) p(n): each left node supplies p(n), each right node
    // absorbs p(n-1).
    const std::size_t source = 0;
    const std::size_t sink = 1;
    const std::size_t left_base = 2;
    const std::size_t right_base = left_base + instance.left.size();
    MaxFlow flow(right_base + instance.right.size());

    struct CapacityEdge {
        std::size_t from, to;
        std::int64_t capacity;
    };
    std::vector<CapacityEdge> capacities;
    for (std::size_t i = 0; i < instance.left.size(); ++i) {
        flow.add_edge(source, left_base + i, p_right);
        capacities.push_back({source, left_base + i, p_right});
    }
    std::vector<std::size_t> edge_slots;
    for (const auto& [i, j] : instance.edges) {
        edge_slots.push_back(flow.add_edge(left_base + i, right_base + j, total));
        capacities.push_back({left_base + i, right_base + j, total});
    }
    for (std::size_t j = 0; j < instance.right.size(); ++j) {
        flow.add_edge(right_base + j, sink, p_left);
        capacities.push_back({right_base + j, sink, p_left});
    }

    PolymorphismReport report;
    report.n = n;
    report.required = total;
    report.max_flow = flow.run(source, sink);
    const std::vector<char> side = flow.reachable(source);
    for (const CapacityEdge& e : capacities) {
        if (side[e.from] && !side[e.to]) report.min_cut += e.capacity;
    }
    report.feasible = report.max_flow == total;
    if (report.feasible) {
        Matrix witness(instance.left.size(), instance.right.size());
        for (std::size_t k = 0; k < instance.edges.size(); ++k) {
            const auto& [i, j] = instance.edges[k];
            witness(i, j) = Rational(flow.flow_on(left_base + i, edge_slots[k])) / Rational(total);
        }
        report.witness_verified = verify_witness(instance, witness);
        report.witness = std::move(witness);
    }
    return report;
}

bool verify_witness(const FlowInstance& instance, const Matrix& witness) {
    if (witness.rows() != instance.left.size() || witness.cols() != instance.right.size()) return false;
    std::set<std::pair<std::size_t, std::size_t>> support(instance.edges.begin(), instance.edges.end());
    for (std::size_t i = 0; i < witness.rows(); ++i) {
        for (std::size_t j = 0; j < witness.cols(); ++j) {
            const int s = sgn(witness(i, j));
            if (s < 0) return false;
            if (s > 0 && (!support.count({i, j}) || !covers(instance.right[j], instance.left[i]))) return false;
        }
    }
    for (std::size_t i = 0; i < witness.rows(); ++i) {
        Rational row = 0;
        for (std::size_t j = 0; j < witness.cols(); ++j) row += witness(i, j);
        if (row != instance.supply) return false;
    }
    for (std::size_t j = 0; j < witness.cols(); ++j) {
        Rational col = 0;
        for (std::size_t i = 0; i < witness.rows(); ++i) col += witness(i, j);
        if (col != instance.demand) return false;
    }
    return true;
}

}  // namespace younglab
