#include "younglab/partition.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>

#include "younglab/errors.hpp"

namespace younglab {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) {
            throw Error(Errc::InvalidPartition, "partition parts must be positive");
        }
        if (i > 0 && parts_[i] > parts_[i - 1]) {
            throw Error(Errc::InvalidPartition, "partition parts must be weakly decreasing");
        }
    }
    n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::parse(std::string_view text) {
    std::vector<int> parts;
    if (text.empty()) return Partition{};
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string_view::npos) comma = text.size();
        std::string_view token = text.substr(pos, comma - pos);
        while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
        while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
        int value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
            throw Error(Errc::InvalidPartition, "cannot parse partition '" + std::string(text) + "'");
        }
        parts.push_back(value);
        pos = comma + 1;
    }
    return Partition(std::move(parts));
}

int Partition::multiplicity(int value) const noexcept {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), value));
}

std::string Partition::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

namespace {

void enumerate_into(int remaining, int max_part, std::vector<int>& current,
                    std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(current);
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        current.push_back(part);
        enumerate_into(remaining - part, part, current, out);
        current.pop_back();
    }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n) {
    if (n < 0) throw Error(Errc::InvalidPartition, "n must be nonnegative");
    std::vector<Partition> out;
    std::vector<int> current;
    enumerate_into(n, n, current, out);
    return out;
}

std::uint64_t partition_count(int n) {
    if (n < 0) return 0;
    // p(n, k): partitions of n with parts at most k
    std::vector<std::uint64_t> ways(static_cast<std::size_t>(n) + 1, 0);
    ways[0] = 1;
    for (int part = 1; part <= n; ++part) {
        for (int total = part; total <= n; ++total) ways[total] += ways[total - part];
    }
    return ways[n];
}

Partition conjugate(const Partition& lambda) {
    std::vector<int> columns;
    const int width = lambda.empty() ? 0 : lambda.parts().front();
    columns.reserve(width);
    for (int j = 1; j <= width; ++j) {
        int height = 0;
        for (int part : lambda.parts()) {
            if (part >= j) ++height;
        }
        columns.push_back(height);
    }
    return Partition(std::move(columns));
}

bool dominates(const Partition& mu, const Partition& lambda) {
    if (mu.n() != lambda.n()) {
        throw Error(Errc::MismatchedSize, "dominance compares partitions of different sizes: " +
                                              mu.to_string() + " vs " + lambda.to_string());
    }
    const std::size_t rows = std::max(mu.parts().size(), lambda.parts().size());
    int mu_sum = 0;
    int lambda_sum = 0;
    for (std::size_t i = 0; i < rows; ++i) {
        mu_sum += mu[i];
        lambda_sum += lambda[i];
        if (mu_sum < lambda_sum) return false;
    }
    return true;
}

std::vector<Predecessor> predecessors(const Partition& lambda) {
    if (lambda.empty()) throw Error(Errc::EmptyPartition, "the empty partition has no predecessors");
    std::vector<Predecessor> out;
    const auto& parts = lambda.parts();
    for (std::size_t i = 0; i < parts.size(); ++i) {
        // Only the last row of each block of equal parts is removable.
        if (i + 1 < parts.size() && parts[i + 1] == parts[i]) continue;
        std::vector<int> shorter = parts;
        if (--shorter[i] == 0) shorter.pop_back();
        out.push_back({Partition(std::move(shorter)), lambda.multiplicity(parts[i])});
    }
    return out;
}

std::vector<Partition> successors(const Partition& rho) {
    std::vector<Partition> out;
    const auto& parts = rho.parts();
    for (std::size_t i = 0; i <= parts.size(); ++i) {
        if (i > 0 && rho[i] == parts[i - 1]) continue;
        std::vector<int> longer = parts;
        if (i == parts.size()) {
            longer.push_back(1);
        } else {
            ++longer[i];
        }
        out.emplace_back(std::move(longer));
    }
    return out;
}

std::vector<CoverEdge> cover_edges(const Partition& rho) {
    std::vector<CoverEdge> out;
    for (Partition& mu : successors(rho)) {
        int row = 0;
        while (mu[static_cast<std::size_t>(row)] == rho[static_cast<std::size_t>(row)]) ++row;
        out.push_back({rho, std::move(mu), row + 1});
    }
    return out;
}

bool covers(const Partition& lambda, const Partition& gamma) {
    if (lambda.n() != gamma.n() + 1) return false;
    int differing = 0;
    const std::size_t rows = std::max(lambda.parts().size(), gamma.parts().size());
    for (std::size_t i = 0; i < rows; ++i) {
        const int diff = lambda[i] - gamma[i];
        if (diff < 0 || diff > 1) return false;
        differing += diff;
    }
    return differing == 1;
}

Partition bar(const Partition& lambda) { return predecessors(lambda).front().gamma; }

std::uint64_t h(const Partition& lambda) {
    std::uint64_t count = 0;
    for (const Partition& mu : enumerate_partitions(lambda.n())) {
        if (dominates(mu, lambda)) ++count;
    }
    return count;
}

std::uint64_t hbar(const Partition& lambda) { return h(bar(lambda)); }

namespace {

std::uint64_t standard_count_memo(const Partition& lambda, std::map<Partition, std::uint64_t>& memo) {
    if (lambda.empty()) return 1;
    if (auto it = memo.find(lambda); it != memo.end()) return it->second;
    std::uint64_t total = 0;
    for (const Predecessor& p : predecessors(lambda)) total += standard_count_memo(p.gamma, memo);
    memo.emplace(lambda, total);
    return total;
}

}  // namespace

std::uint64_t standard_count(const Partition& lambda) {
    std::map<Partition, std::uint64_t> memo;
    return standard_count_memo(lambda, memo);
}

}  // namespace younglab
