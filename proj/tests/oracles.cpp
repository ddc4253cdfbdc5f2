#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

namespace oracle {

std::vector<Shape> partitions_from_compositions(int n) {
    std::vector<Shape> out;
    if (n == 0) return {Shape{}};
    // Bit i set means a cut after position i+1.
    for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
        Shape parts;
        int current = 1;
        for (int i = 0; i < n - 1; ++i) {
            if (mask & (1u << i)) {
                parts.push_back(current);
                current = 1;
            } else {
                ++current;
            }
        }
        parts.push_back(current);
        if (std::is_sorted(parts.begin(), parts.end(), std::greater<>())) out.push_back(parts);
    }
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

std::int64_t pentagonal_count(int n) {
    std::vector<std::int64_t> p(static_cast<std::size_t>(n) + 1, 0);
    p[0] = 1;
    for (int m = 1; m <= n; ++m) {
        std::int64_t total = 0;
        for (int k = 1;; ++k) {
            const int g1 = k * (3 * k - 1) / 2;
            const int g2 = k * (3 * k + 1) / 2;
            if (g1 > m) break;
            const std::int64_t sign = (k % 2 == 1) ? 1 : -1;
            total += sign * p[static_cast<std::size_t>(m - g1)];
            if (g2 <= m) total += sign * p[static_cast<std::size_t>(m - g2)];
        }
        p[static_cast<std::size_t>(m)] = total;
    }
    return p[static_cast<std::size_t>(n)];
}

bool dominates(const Shape& mu, const Shape& lambda) {
    const std::size_t len = std::max(mu.size(), lambda.size());
    int a = 0;
    int b = 0;
    for (std::size_t i = 0; i < len; ++i) {
        a += i < mu.size() ? mu[i] : 0;
        b += i < lambda.size() ? lambda[i] : 0;
        if (a < b) return false;
    }
    return true;
}

Shape conjugate_by_cells(const Shape& lambda) {
    Shape cols;
    for (int len : lambda) {
        for (int j = 0; j < len; ++j) {
            if (static_cast<int>(cols.size()) <= j) cols.push_back(0);
            ++cols[static_cast<std::size_t>(j)];
        }
    }
    return cols;
}

namespace {

bool semistandard_filling(const Shape& shape, const std::vector<int>& word) {
    std::vector<std::vector<int>> rows;
    std::size_t pos = 0;
    for (int len : shape) {
        rows.emplace_back(word.begin() + static_cast<std::ptrdiff_t>(pos),
                          word.begin() + static_cast<std::ptrdiff_t>(pos + static_cast<std::size_t>(len)));
        pos += static_cast<std::size_t>(len);
    }
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t c = 0; c < rows[r].size(); ++c) {
            if (c > 0 && rows[r][c - 1] > rows[r][c]) return false;
            if (r > 0 && rows[r - 1][c] >= rows[r][c]) return false;
        }
    }
    return true;
}

}  // namespace

std::int64_t kostka_by_words(const Shape& mu, const std::vector<int>& weight) {
    std::vector<int> word;
    for (std::size_t i = 0; i < weight.size(); ++i) word.insert(word.end(), static_cast<std::size_t>(weight[i]), static_cast<int>(i) + 1);
    if (static_cast<int>(word.size()) != std::accumulate(mu.begin(), mu.end(), 0)) return 0;
    std::int64_t count = 0;
    do {
        if (semistandard_filling(mu, word)) ++count;
    } while (std::next_permutation(word.begin(), word.end()));
    return count;
}

std::int64_t standard_by_permutations(const Shape& lambda) {
    const int n = std::accumulate(lambda.begin(), lambda.end(), 0);
    return kostka_by_words(lambda, std::vector<int>(static_cast<std::size_t>(n), 1));
}

std::int64_t hook_formula(const Shape& lambda) {
    const Shape cols = conjugate_by_cells(lambda);
    const int n = std::accumulate(lambda.begin(), lambda.end(), 0);
    std::vector<int> hooks;
    for (std::size_t i = 0; i < lambda.size(); ++i) {
        for (int j = 0; j < lambda[i]; ++j) {
            hooks.push_back(lambda[i] - j - 1 + cols[static_cast<std::size_t>(j)] - static_cast<int>(i));
        }
    }
    std::int64_t numerator = 1;
    for (int k = 2; k <= n; ++k) numerator *= k;
    std::int64_t denominator = 1;
    for (int hook : hooks) denominator *= hook;
    return numerator / denominator;
}

std::int64_t mn_character(const Shape& lambda, const Shape& cycle_type) {
    if (cycle_type.empty()) return 1;
    const int k = cycle_type.front();
    const Shape rest(cycle_type.begin() + 1, cycle_type.end());
    const int len = static_cast<int>(lambda.size());
    std::set<int> beta;
    for (int i = 0; i < len; ++i) beta.insert(lambda[static_cast<std::size_t>(i)] + (len - 1 - i));
    std::int64_t total = 0;
    for (int b : beta) {
        const int target = b - k;
        if (target < 0 || beta.count(target)) continue;
        int between = 0;
        for (int other : beta) between += (other > target && other < b) ? 1 : 0;
        std::set<int> next = beta;
        next.erase(b);
        next.insert(target);
        // Back to a shape.
        Shape mu;
        int i = 0;
        for (auto it = next.rbegin(); it != next.rend(); ++it, ++i) {
            const int part = *it - (len - 1 - i);
            if (part > 0) mu.push_back(part);
        }
        total += (between % 2 == 0 ? 1 : -1) * mn_character(mu, rest);
    }
    return total;
}

std::vector<Perm> all_perms(int n) {
    std::vector<Perm> out;
    Perm p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

Shape cycle_type_of(const Perm& p) {
    std::vector<char> seen(p.size(), 0);
    Shape out;
    for (std::size_t i = 0; i < p.size(); ++i) {
        int len = 0;
        for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(p[j])) {
            seen[j] = 1;
            ++len;
        }
        if (len > 0) out.push_back(len);
    }
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

int sign_of(const Perm& p) {
    const Shape type = cycle_type_of(p);
    int even_cycles = 0;
    for (int c : type) even_cycles += c % 2 == 0 ? 1 : 0;
    return even_cycles % 2 == 0 ? 1 : -1;
}

std::vector<std::vector<int>> tabloids(const Shape& lambda) {
    std::vector<int> word;
    for (std::size_t r = 0; r < lambda.size(); ++r) word.insert(word.end(), static_cast<std::size_t>(lambda[r]), static_cast<int>(r));
    std::vector<std::vector<int>> out;
    do {
        out.push_back(word);
    } while (std::next_permutation(word.begin(), word.end()));
    return out;
}

std::int64_t fixed_tabloids(const Shape& lambda, const Perm& p) {
    std::int64_t count = 0;
    for (const auto& rows : tabloids(lambda)) {
        bool fixed = true;
        for (std::size_t i = 0; i < p.size() && fixed; ++i) fixed = rows[static_cast<std::size_t>(p[i])] == rows[i];
        count += fixed ? 1 : 0;
    }
    return count;
}

std::int64_t theorem1_by_group(const Shape& lambda) {
    const Shape dual = conjugate_by_cells(lambda);
    const int n = std::accumulate(lambda.begin(), lambda.end(), 0);
    std::int64_t total = 0;
    std::int64_t order = 0;
    for (const Perm& p : all_perms(n)) {
        total += fixed_tabloids(lambda, p) * sign_of(p) * fixed_tabloids(dual, p);
        ++order;
    }
    if (total % order != 0) throw std::logic_error("non-integral inner product");
    return total / order;
}

std::int64_t class_count(int n, const Shape& cycle_type) {
    std::int64_t count = 0;
    for (const Perm& p : all_perms(n)) count += cycle_type_of(p) == cycle_type ? 1 : 0;
    return count;
}

namespace {

bool covers_by_cells(const Shape& upper, const Shape& lower) {
    int diff = 0;
    for (std::size_t i = 0; i < upper.size(); ++i) {
        const int l = i < lower.size() ? lower[i] : 0;
        if (upper[i] < l) return false;
        diff += upper[i] - l;
    }
    return lower.size() <= upper.size() && diff == 1;
}

}  // namespace

bool transport_feasible_by_hall(int n) {
    const auto left = partitions_from_compositions(n - 1);
    const auto right = partitions_from_compositions(n);
    const auto a = static_cast<std::int64_t>(left.size());
    const auto b = static_cast<std::int64_t>(right.size());
    if (left.size() > 20) throw std::invalid_argument("too many subsets");
    // Supply 1/a per left node, demand 1/b per right node: every left subset S
    // must reach neighbours with |N(S)| / b >= |S| / a.
    for (std::uint32_t mask = 1; mask < (1u << left.size()); ++mask) {
        std::set<std::size_t> neighbours;
        std::int64_t size = 0;
        for (std::size_t i = 0; i < left.size(); ++i) {
            if (!(mask & (1u << i))) continue;
            ++size;
            for (std::size_t j = 0; j < right.size(); ++j) {
                if (covers_by_cells(right[j], left[i])) neighbours.insert(j);
            }
        }
        if (static_cast<std::int64_t>(neighbours.size()) * a < size * b) return false;
    }
    return true;
}

}  // namespace oracle
