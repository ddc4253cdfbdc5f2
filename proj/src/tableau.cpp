#include "younglab/tableau.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "younglab/errors.hpp"

namespace younglab {

// --- Weight ---------------------------------------------------------------

Weight::Weight(std::vector<int> c) : counts(std::move(c)) {
    for (int v : counts) {
        if (v < 0) throw Error(Errc::InvalidTableau, "weight entries must be nonnegative");
    }
    while (!counts.empty() && counts.back() == 0) counts.pop_back();
}

Weight Weight::of(const Partition& lambda) { return Weight(lambda.parts()); }

int Weight::total() const noexcept { return std::accumulate(counts.begin(), counts.end(), 0); }

Weight Weight::without(int symbol) const {
    if (symbol < 1 || symbol > static_cast<int>(counts.size()) || counts[symbol - 1] == 0) {
        throw Error(Errc::InvalidTableau, "symbol " + std::to_string(symbol) + " absent from weight");
    }
    std::vector<int> c = counts;
    --c[symbol - 1];
    return Weight(std::move(c));
}

Partition Weight::sorted() const {
    std::vector<int> parts;
    for (int v : counts) {
        if (v > 0) parts.push_back(v);
    }
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

std::string Weight::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < counts.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(counts[i]);
    }
    return out;
}

// --- Tableau --------------------------------------------------------------

namespace {

Partition shape_of(const std::vector<std::vector<int>>& rows) {
    std::vector<int> lengths;
    lengths.reserve(rows.size());
    for (const auto& row : rows) {
        if (row.empty()) throw Error(Errc::InvalidTableau, "tableau rows must be nonempty");
        lengths.push_back(static_cast<int>(row.size()));
    }
    try {
        return Partition(std::move(lengths));
    } catch (const Error&) {
        throw Error(Errc::InvalidTableau, "tableau row lengths must be weakly decreasing");
    }
}

}  // namespace

Tableau::Tableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)), shape_(shape_of(rows_)) {
    for (const auto& row : rows_) {
        for (int v : row) {
            if (v <= 0) throw Error(Errc::InvalidTableau, "tableau entries must be positive");
        }
    }
}

Tableau Tableau::parse(std::string_view text) {
    std::vector<std::vector<int>> rows;
    if (text.empty()) return Tableau{};
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t slash = text.find('/', pos);
        if (slash == std::string_view::npos) slash = text.size();
        std::string_view row_text = text.substr(pos, slash - pos);
        std::vector<int> row;
        std::size_t p = 0;
        while (p <= row_text.size()) {
            std::size_t sep = row_text.find_first_of(", ", p);
            if (sep == std::string_view::npos) sep = row_text.size();
            std::string_view token = row_text.substr(p, sep - p);
            if (!token.empty()) {
                int value = 0;
                auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
                if (ec != std::errc{} || ptr != token.data() + token.size()) {
                    throw Error(Errc::InvalidTableau, "cannot parse tableau '" + std::string(text) + "'");
                }
                row.push_back(value);
            }
            p = sep + 1;
        }
        rows.push_back(std::move(row));
        pos = slash + 1;
    }
    return Tableau(std::move(rows));
}

bool Tableau::is_semistandard() const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        for (std::size_t j = 0; j < rows_[i].size(); ++j) {
            if (j > 0 && rows_[i][j] < rows_[i][j - 1]) return false;
            if (i > 0 && rows_[i][j] <= rows_[i - 1][j]) return false;
        }
    }
    return true;
}

bool Tableau::is_standard() const {
    if (!is_semistandard()) return false;
    std::vector<int> word = reading_word();
    std::sort(word.begin(), word.end());
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (word[i] != static_cast<int>(i) + 1) return false;
    }
    return true;
}

Weight Tableau::weight() const {
    std::vector<int> counts;
    for (const auto& row : rows_) {
        for (int v : row) {
            if (static_cast<int>(counts.size()) < v) counts.resize(v, 0);
            ++counts[v - 1];
        }
    }
    return Weight(std::move(counts));
}

std::vector<int> Tableau::reading_word() const {
    std::vector<int> word;
    for (const auto& row : rows_) word.insert(word.end(), row.begin(), row.end());
    return word;
}

std::string Tableau::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (i > 0) out += '/';
        for (std::size_t j = 0; j < rows_[i].size(); ++j) {
            if (j > 0) out += ',';
            out += std::to_string(rows_[i][j]);
        }
    }
    return out;
}

std::string Tableau::to_ascii() const {
    std::string out;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (i > 0) out += " / ";
        for (std::size_t j = 0; j < rows_[i].size(); ++j) {
            if (j > 0) out += ' ';
            out += std::to_string(rows_[i][j]);
        }
    }
    return out;
}

Tableau delete_cell(const Tableau& t, int row, int column) {
    auto rows = t.rows();
    auto& r = rows.at(static_cast<std::size_t>(row));
    r.erase(r.begin() + column);
    if (r.empty()) rows.erase(rows.begin() + row);
    return Tableau(std::move(rows));
}

// --- enumeration ------------------------------------------------------------

namespace {

// Fills symbols 1, 2, ... in turn; symbol s occupies a horizontal strip
// between the shape filled so far and the next one. Each complete chain of
// strips is one semistandard tableau.
class StripFiller {
   public:
    using Emit = std::function<void(const std::vector<std::vector<int>>&)>;

    StripFiller(const Partition& shape, const Weight& weight)
        : target_(shape.parts()), counts_(weight.counts) {}

    void run(const Emit& emit) {
        emit_ = &emit;
        strips_.clear();
        place_symbol(0, std::vector<int>(target_.size(), 0));
    }

   private:
    void place_symbol(std::size_t symbol, const std::vector<int>& filled) {
        if (symbol == counts_.size()) {
            (*emit_)(strips_);
            return;
        }
        std::vector<int> next = filled;
        extend_row(symbol, filled, next, 0, counts_[symbol]);
    }

    // Distributes `remaining` cells of the current symbol over rows >= row.
    void extend_row(std::size_t symbol, const std::vector<int>& filled, std::vector<int>& next,
                    std::size_t row, int remaining) {
        if (remaining == 0) {
            strips_.push_back(next);
            const std::vector<int> snapshot = next;
            place_symbol(symbol + 1, snapshot);
            strips_.pop_back();
            return;
        }
        if (row == target_.size()) return;
        // Horizontal strip: a row may not grow past the old length of the row above.
        const int cap = row == 0 ? target_[0] : std::min(target_[row], filled[row - 1]);
        const int room = cap - filled[row];
        for (int take = std::min(room, remaining); take >= 0; --take) {
            next[row] = filled[row] + take;
            extend_row(symbol, filled, next, row + 1, remaining - take);
        }
        next[row] = filled[row];
    }

    std::vector<int> target_;
    std::vector<int> counts_;
    std::vector<std::vector<int>> strips_;
    const Emit* emit_ = nullptr;
};

void check_sizes(const Partition& shape, const Weight& weight) {
    if (shape.n() != weight.total()) {
        throw Error(Errc::MismatchedSize, "shape " + shape.to_string() + " has " +
                                              std::to_string(shape.n()) + " cells but weight " +
                                              weight.to_string() + " has total " +
                                              std::to_string(weight.total()));
    }
}

}  // namespace

std::vector<Tableau> enumerate_ssyt(const Partition& shape, const Weight& weight) {
    check_sizes(shape, weight);
    std::vector<Tableau> out;
    if (shape.empty()) {
        out.emplace_back();
        return out;
    }
    StripFiller filler(shape, weight);
    filler.run([&](const std::vector<std::vector<int>>& chain) {
        std::vector<std::vector<int>> rows(shape.parts().size());
        std::vector<int> previous(shape.parts().size(), 0);
        for (std::size_t s = 0; s < chain.size(); ++s) {
            for (std::size_t i = 0; i < rows.size(); ++i) {
                for (int j = previous[i]; j < chain[s][i]; ++j) rows[i].push_back(static_cast<int>(s) + 1);
            }
            previous = chain[s];
        }
        out.emplace_back(std::move(rows));
    });
    std::sort(out.begin(), out.end(),
              [](const Tableau& a, const Tableau& b) { return a.reading_word() < b.reading_word(); });
    return out;
}

std::vector<Tableau> enumerate_standard(const Partition& lambda) {
    return enumerate_ssyt(lambda, Weight(std::vector<int>(static_cast<std::size_t>(lambda.n()), 1)));
}

std::uint64_t kostka(const Partition& mu, const Weight& weight) {
    check_sizes(mu, weight);
    if (mu.empty()) return 1;
    std::uint64_t count = 0;
    StripFiller filler(mu, weight);
    filler.run([&](const std::vector<std::vector<int>>&) { ++count; });
    return count;
}

std::uint64_t kostka(const Partition& mu, const Partition& lambda) { return kostka(mu, Weight::of(lambda)); }

std::pair<std::uint64_t, std::uint64_t> eq2_check(const Partition& lambda, const Partition& rho) {
    if (lambda.n() != rho.n() + 1) {
        throw Error(Errc::MismatchedSize, "eq2 needs |lambda| = |rho| + 1");
    }
    std::uint64_t left = 0;
    for (const Partition& mu : successors(rho)) left += kostka(mu, lambda);
    std::uint64_t right = 0;
    for (const Predecessor& p : predecessors(lambda)) {
        right += static_cast<std::uint64_t>(p.multiplicity) * kostka(rho, p.gamma);
    }
    return {left, right};
}

// --- bijection ------------------------------------------------------------

std::string_view to_string(BijectionMethod method) {
    switch (method) {
        case BijectionMethod::Canonical: return "canonical";
        case BijectionMethod::Matching: return "matching";
        case BijectionMethod::Arbitrary: return "arbitrary";
    }
    return "unknown";
}

namespace {

struct LeftItem {
    Tableau tableau;
    int corner_row = 0;  // 1-based
};

struct RightItem {
    int symbol = 0;
    Tableau tableau;
};

using RightKey = std::pair<int, std::vector<std::vector<int>>>;

// Deletes the rightmost occurrence of `symbol` in 1-based row `row`; returns
// false when the row does not contain it.
bool delete_symbol(const Tableau& t, int row, int symbol, Tableau& out) {
    const auto& cells = t.rows()[static_cast<std::size_t>(row - 1)];
    for (int j = static_cast<int>(cells.size()) - 1; j >= 0; --j) {
        if (cells[static_cast<std::size_t>(j)] == symbol) {
            out = delete_cell(t, row - 1, j);
            return true;
        }
    }
    return false;
}

// Kuhn's augmenting-path matching; returns match_of_left with -1 for free.
std::vector<int> max_matching(const std::vector<std::vector<int>>& adjacency, std::size_t right_count) {
    std::vector<int> match_left(adjacency.size(), -1);
    std::vector<int> match_right(right_count, -1);
    std::vector<char> seen;
    std::function<bool(int)> augment = [&](int u) {
        for (int v : adjacency[static_cast<std::size_t>(u)]) {
            if (seen[static_cast<std::size_t>(v)]) continue;
            seen[static_cast<std::size_t>(v)] = 1;
            if (match_right[static_cast<std::size_t>(v)] < 0 || augment(match_right[static_cast<std::size_t>(v)])) {
                match_left[static_cast<std::size_t>(u)] = v;
                match_right[static_cast<std::size_t>(v)] = u;
                return true;
            }
        }
        return false;
    };
    for (std::size_t u = 0; u < adjacency.size(); ++u) {
        seen.assign(right_count, 0);
        augment(static_cast<int>(u));
    }
    return match_left;
}

}  // namespace

BijectionCertificate theorem4_bijection(const Partition& lambda, const Partition& rho) {
    if (lambda.n() != rho.n() + 1) {
        throw Error(Errc::MismatchedSize, "bijection needs |lambda| = |rho| + 1");
    }
    const Weight lambda_weight = Weight::of(lambda);

    std::vector<LeftItem> left;
    for (const CoverEdge& edge : cover_edges(rho)) {
        for (Tableau& t : enumerate_ssyt(edge.upper, lambda_weight)) left.push_back({std::move(t), edge.row_index});
    }
    std::vector<RightItem> right;
    std::map<RightKey, int> right_index;
    for (int symbol = 1; symbol <= lambda.length(); ++symbol) {
        for (Tableau& s : enumerate_ssyt(rho, lambda_weight.without(symbol))) {
            right_index.emplace(RightKey{symbol, s.rows()}, static_cast<int>(right.size()));
            right.push_back({symbol, std::move(s)});
        }
    }

    BijectionCertificate cert;
    cert.lambda = lambda;
    cert.rho = rho;

    // Canonical rule, item by item.
    std::vector<int> canonical_target(left.size(), -1);
    std::set<int> used;
    bool injective = true;
    for (std::size_t i = 0; i < left.size(); ++i) {
        Tableau image;
        const int r = left[i].corner_row;
        if (!delete_symbol(left[i].tableau, r, r, image) || !image.is_semistandard()) continue;
        auto it = right_index.find(RightKey{r, image.rows()});
        if (it == right_index.end()) continue;
        canonical_target[i] = it->second;
        ++cert.canonical_successes;
        if (!used.insert(it->second).second) injective = false;
    }

    std::vector<int> assignment;
    if (injective && cert.canonical_successes == left.size() && left.size() == right.size()) {
        cert.canonical = true;
        cert.method = BijectionMethod::Canonical;
        assignment = canonical_target;
    } else {
        std::vector<std::vector<int>> adjacency(left.size());
        for (std::size_t i = 0; i < left.size(); ++i) {
            if (canonical_target[i] >= 0) adjacency[i].push_back(canonical_target[i]);
            const int r = left[i].corner_row;
            std::set<int> symbols(left[i].tableau.rows()[static_cast<std::size_t>(r - 1)].begin(),
                                  left[i].tableau.rows()[static_cast<std::size_t>(r - 1)].end());
            for (int symbol : symbols) {
                Tableau image;
                delete_symbol(left[i].tableau, r, symbol, image);
                if (!image.is_semistandard()) continue;
                auto it = right_index.find(RightKey{symbol, image.rows()});
                if (it != right_index.end() && it->second != canonical_target[i]) adjacency[i].push_back(it->second);
            }
        }
        assignment = max_matching(adjacency, right.size());
        const bool perfect = left.size() == right.size() &&
                             std::none_of(assignment.begin(), assignment.end(), [](int v) { return v < 0; });
        cert.canonical = false;
        cert.method = perfect ? BijectionMethod::Matching : BijectionMethod::Arbitrary;
        if (!perfect) {
            // Counts agree by the recurrence; pair the leftovers in order.
            std::vector<char> taken(right.size(), 0);
            for (int v : assignment) {
                if (v >= 0) taken[static_cast<std::size_t>(v)] = 1;
            }
            std::size_t next_free = 0;
            for (int& v : assignment) {
                if (v >= 0) continue;
                while (next_free < right.size() && taken[next_free]) ++next_free;
                if (next_free == right.size()) break;
                v = static_cast<int>(next_free);
                taken[next_free] = 1;
            }
        }
    }

    for (std::size_t i = 0; i < left.size(); ++i) {
        if (assignment[i] < 0) continue;
        const RightItem& target = right[static_cast<std::size_t>(assignment[i])];
        cert.pairs.push_back({left[i].tableau, target.symbol, target.tableau, lambda_weight.without(target.symbol)});
    }
    return cert;
}

bool verify_certificate(const BijectionCertificate& cert) {
    const Partition& lambda = cert.lambda;
    const Partition& rho = cert.rho;
    if (lambda.n() != rho.n() + 1) return false;
    const Weight lambda_weight = Weight::of(lambda);

    std::multiset<std::vector<std::vector<int>>> left_expected;
    for (const Partition& mu : successors(rho)) {
        for (const Tableau& t : enumerate_ssyt(mu, lambda_weight)) left_expected.insert(t.rows());
    }
    std::multiset<RightKey> right_expected;
    for (int symbol = 1; symbol <= lambda.length(); ++symbol) {
        for (const Tableau& s : enumerate_ssyt(rho, lambda_weight.without(symbol))) {
            right_expected.insert(RightKey{symbol, s.rows()});
        }
    }
    if (left_expected.size() != cert.pairs.size() || right_expected.size() != cert.pairs.size()) return false;

    std::multiset<std::vector<std::vector<int>>> left_seen;
    std::multiset<RightKey> right_seen;
    for (const BijectionPair& p : cert.pairs) {
        if (!covers(p.mu_tableau.shape(), rho) || p.rho_tableau.shape() != rho) return false;
        if (!p.mu_tableau.is_semistandard() || !p.rho_tableau.is_semistandard()) return false;
        if (p.mu_tableau.weight() != lambda_weight) return false;
        if (p.gamma_weight != lambda_weight.without(p.removed_symbol)) return false;
        if (p.rho_tableau.weight() != p.gamma_weight) return false;
        left_seen.insert(p.mu_tableau.rows());
        right_seen.insert(RightKey{p.removed_symbol, p.rho_tableau.rows()});
    }
    return left_seen == left_expected && right_seen == right_expected;
}

}  // namespace younglab
