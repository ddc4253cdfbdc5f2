#include "younglab/characters.hpp"

#include <mutex>

#include "younglab/errors.hpp"
#include "younglab/tableau.hpp"

namespace younglab {

// --- conjugacy classes -------------------------------------------------------

std::size_t ConjugacyClasses::index_of(const Partition& cycle_type) const {
    auto it = index.find(cycle_type);
    if (it == index.end()) {
        throw Error(Errc::DegreeMismatch, "cycle type " + cycle_type.to_string() + " is not a class of S_" +
                                              std::to_string(n));
    }
    return it->second;
}

Integer class_size(const Partition& cycle_type) {
    Integer n_factorial;
    mpz_fac_ui(n_factorial.get_mpz_t(), static_cast<unsigned long>(cycle_type.n()));
    Integer z = 1;
    const auto& parts = cycle_type.parts();
    for (std::size_t i = 0; i < parts.size();) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        const auto m = static_cast<unsigned long>(j - i);
        Integer power;
        mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(parts[i]), m);
        Integer m_factorial;
        mpz_fac_ui(m_factorial.get_mpz_t(), m);
        z *= power * m_factorial;
        i = j;
    }
    return n_factorial / z;
}

int sign_of(const Partition& cycle_type) { return (cycle_type.n() - cycle_type.length()) % 2 == 0 ? 1 : -1; }

namespace {

std::shared_ptr<const ConjugacyClasses> build_classes(int n) {
    auto classes = std::make_shared<ConjugacyClasses>();
    classes->n = n;
    classes->types = enumerate_partitions(n);
    mpz_fac_ui(classes->group_order.get_mpz_t(), static_cast<unsigned long>(n));
    for (std::size_t i = 0; i < classes->types.size(); ++i) {
        classes->sizes.push_back(class_size(classes->types[i]));
        classes->index.emplace(classes->types[i], i);
    }
    return classes;
}

template <typename T>
class DegreeCache {
   public:
    template <typename Build>
    std::shared_ptr<const T> get(int n, Build build) {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = cache_.find(n);
        if (it != cache_.end()) return it->second;
        std::shared_ptr<const T> value = build(n);
        cache_.emplace(n, value);
        return value;
    }

   private:
    std::mutex mutex_;
    std::map<int, std::shared_ptr<const T>> cache_;
};

}  // namespace

std::shared_ptr<const ConjugacyClasses> conjugacy_classes(int n) {
    if (n < 0) throw Error(Errc::InvalidPartition, "degree must be nonnegative");
    static DegreeCache<ConjugacyClasses> cache;
    return cache.get(n, build_classes);
}

// --- ClassFunction -----------------------------------------------------------

ClassFunction::ClassFunction(int n) : classes_(conjugacy_classes(n)), values_(classes_->types.size()) {}

ClassFunction::ClassFunction(std::shared_ptr<const ConjugacyClasses> classes, std::vector<Rational> values)
    : classes_(std::move(classes)), values_(std::move(values)) {
    if (values_.size() != classes_->types.size()) {
        throw Error(Errc::DimensionMismatch, "class function needs one value per class");
    }
}

namespace {

void require_same_degree(const ClassFunction& f, const ClassFunction& g) {
    if (f.n() != g.n()) {
        throw Error(Errc::DegreeMismatch, "class functions of degrees " + std::to_string(f.n()) + " and " +
                                              std::to_string(g.n()));
    }
}

}  // namespace

ClassFunction& ClassFunction::operator+=(const ClassFunction& other) {
    require_same_degree(*this, other);
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += other.values_[i];
    return *this;
}

ClassFunction& ClassFunction::operator-=(const ClassFunction& other) {
    require_same_degree(*this, other);
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= other.values_[i];
    return *this;
}

ClassFunction ClassFunction::operator*(const Rational& scalar) const {
    ClassFunction out = *this;
    for (Rational& v : out.values_) v *= scalar;
    return out;
}

ClassFunction ClassFunction::operator+(const ClassFunction& other) const {
    ClassFunction out = *this;
    out += other;
    return out;
}

ClassFunction ClassFunction::operator-(const ClassFunction& other) const {
    ClassFunction out = *this;
    out -= other;
    return out;
}

bool ClassFunction::is_integral() const {
    for (const Rational& v : values_) {
        if (v.get_den() != 1) return false;
    }
    return true;
}

ClassFunction trivial_character(int n) {
    ClassFunction f(n);
    for (std::size_t i = 0; i < f.values().size(); ++i) f.at(i) = 1;
    return f;
}

ClassFunction sign_character(int n) {
    ClassFunction f(n);
    for (std::size_t i = 0; i < f.values().size(); ++i) f.at(i) = sign_of(f.classes().types[i]);
    return f;
}

// --- permutation characters --------------------------------------------------

namespace {

// Assignments of the (distinguishable) cycles cycles[from..] to rows whose
// remaining capacities are `room`, filling every row exactly.
class CycleDistributor {
   public:
    explicit CycleDistributor(std::vector<int> cycles) : cycles_(std::move(cycles)) {}

    Integer count(std::size_t from, std::vector<int>& room) {
        if (from == cycles_.size()) return 1;
        auto key = std::make_pair(from, room);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        Integer total = 0;
        for (int& r : room) {
            if (r < cycles_[from]) continue;
            r -= cycles_[from];
            total += count(from + 1, room);
            r += cycles_[from];
        }
        memo_.emplace(std::move(key), total);
        return total;
    }

   private:
    std::vector<int> cycles_;
    std::map<std::pair<std::size_t, std::vector<int>>, Integer> memo_;
};

}  // namespace

ClassFunction perm_character(const Partition& lambda) {
    ClassFunction psi(lambda.n());
    const auto& types = psi.classes().types;
    for (std::size_t i = 0; i < types.size(); ++i) {
        CycleDistributor distributor(types[i].parts());
        std::vector<int> room = lambda.parts();
        psi.at(i) = Rational(distributor.count(0, room));
    }
    return psi;
}

ClassFunction sign_twist(const ClassFunction& f) {
    ClassFunction out = f;
    const auto& types = f.classes().types;
    for (std::size_t i = 0; i < types.size(); ++i) {
        if (sign_of(types[i]) < 0) out.at(i) = -out.at(i);
    }
    return out;
}

ClassFunction ind_sgn_character(const Partition& lambda) { return sign_twist(perm_character(conjugate(lambda))); }

Rational inner(const ClassFunction& f, const ClassFunction& g) {
    require_same_degree(f, g);
    const ConjugacyClasses& classes = f.classes();
    Rational total = 0;
    for (std::size_t i = 0; i < classes.types.size(); ++i) {
        total += Rational(classes.sizes[i]) * f.at(i) * g.at(i);
    }
    return total / Rational(classes.group_order);
}

ClassFunction restrict_to_previous(const ClassFunction& f) {
    if (f.n() < 1) throw Error(Errc::EmptyPartition, "cannot restrict a class function of degree 0");
    ClassFunction out(f.n() - 1);
    const auto& types = out.classes().types;
    for (std::size_t i = 0; i < types.size(); ++i) {
        std::vector<int> extended = types[i].parts();
        extended.push_back(1);
        out.at(i) = f[Partition(std::move(extended))];
    }
    return out;
}

Rational theorem1_check(const Partition& lambda) {
    return inner(perm_character(lambda), ind_sgn_character(lambda));
}

// --- irreducible characters ----------------------------------------------------

const ClassFunction& CharacterTable::chi(const Partition& mu) const {
    auto it = index.find(mu);
    if (it == index.end()) {
        throw Error(Errc::DegreeMismatch, "no irreducible " + mu.to_string() + " in degree " + std::to_string(n));
    }
    return characters[it->second];
}

namespace {

std::shared_ptr<const CharacterTable> build_table(int n) {
    if (n < 1) throw Error(Errc::EmptyPartition, "character tables need n >= 1");
    auto table = std::make_shared<CharacterTable>();
    table->n = n;
    table->classes = conjugacy_classes(n);
    table->shapes = enumerate_partitions(n);
    for (std::size_t k = 0; k < table->shapes.size(); ++k) {
        const Partition& lambda = table->shapes[k];
        const ClassFunction psi = perm_character(lambda);
        ClassFunction chi = psi;
        // Everything processed earlier comes before lambda in a linear
        // extension of reverse dominance; only strict dominators contribute.
        for (std::size_t j = 0; j < k; ++j) {
            if (!dominates(table->shapes[j], lambda)) continue;
            const Rational m = inner(psi, table->characters[j]);
            if (sgn(m) != 0) chi -= table->characters[j] * m;
        }
        if (!chi.is_integral() || inner(chi, chi) != 1 || sgn(chi.degree()) <= 0) {
            throw Error(Errc::OrthogonalizationFailure, "derived class function for " + lambda.to_string() +
                                                            " is not an irreducible character");
        }
        table->index.emplace(lambda, k);
        table->characters.push_back(std::move(chi));
    }
    return table;
}

Integer to_integer(const Rational& q, const char* what) {
    if (q.get_den() != 1) throw Error(Errc::OrthogonalizationFailure, std::string(what) + " is not an integer");
    return q.get_num();
}

std::shared_ptr<const MultiplicityTable> build_multiplicities(int n) {
    auto table = character_table(n);
    auto m = std::make_shared<MultiplicityTable>();
    m->n = n;
    m->shapes = table->shapes;
    m->index = table->index;
    m->entries.assign(m->shapes.size(), std::vector<std::int64_t>(m->shapes.size(), 0));
    for (std::size_t l = 0; l < m->shapes.size(); ++l) {
        const ClassFunction psi = perm_character(m->shapes[l]);
        for (std::size_t u = 0; u < m->shapes.size(); ++u) {
            m->entries[u][l] = to_integer(inner(psi, table->characters[u]), "multiplicity").get_si();
        }
    }
    return m;
}

std::shared_ptr<const MultiplicityTable> cached_multiplicities(int n) {
    static DegreeCache<MultiplicityTable> cache;
    return cache.get(n, build_multiplicities);
}

}  // namespace

std::shared_ptr<const CharacterTable> character_table(int n) {
    static DegreeCache<CharacterTable> cache;
    return cache.get(n, build_table);
}

std::map<Partition, ClassFunction> irreducible_characters(int n) {
    auto table = character_table(n);
    std::map<Partition, ClassFunction> out;
    for (std::size_t i = 0; i < table->shapes.size(); ++i) out.emplace(table->shapes[i], table->characters[i]);
    return out;
}

std::vector<CommonComponent> common_components(const Partition& lambda) {
    auto table = character_table(lambda.n());
    const ClassFunction psi = perm_character(lambda);
    const ClassFunction phi = ind_sgn_character(lambda);
    std::vector<CommonComponent> out;
    for (std::size_t i = 0; i < table->shapes.size(); ++i) {
        const Integer a = to_integer(inner(psi, table->characters[i]), "multiplicity");
        const Integer b = to_integer(inner(phi, table->characters[i]), "multiplicity");
        if (a > 0 && b > 0) out.push_back({table->shapes[i], a, b});
    }
    return out;
}

// --- multiplicities and recurrences --------------------------------------------

std::int64_t MultiplicityTable::operator()(const Partition& mu, const Partition& lambda) const {
    auto u = index.find(mu);
    auto l = index.find(lambda);
    if (u == index.end() || l == index.end()) {
        throw Error(Errc::MismatchedSize, "multiplicity table of degree " + std::to_string(n) +
                                              " has no entry for (" + mu.to_string() + ", " +
                                              lambda.to_string() + ")");
    }
    return entries[u->second][l->second];
}

MultiplicityTable multiplicity_table(int n) { return *cached_multiplicities(n); }

bool youngs_rule_check(int n) {
    auto m = cached_multiplicities(n);
    for (const Partition& mu : m->shapes) {
        for (const Partition& lambda : m->shapes) {
            if (static_cast<std::uint64_t>((*m)(mu, lambda)) != kostka(mu, lambda) || (*m)(mu, lambda) < 0) {
                return false;
            }
        }
    }
    return true;
}

bool lemma1_check(const Partition& lambda) {
    const ClassFunction restricted = restrict_to_previous(perm_character(lambda));
    ClassFunction expected(lambda.n() - 1);
    for (const Predecessor& p : predecessors(lambda)) expected += perm_character(p.gamma) * Rational(p.multiplicity);
    return restricted == expected;
}

std::pair<std::int64_t, std::int64_t> eq1_check(const Partition& lambda, const Partition& rho) {
    if (lambda.n() != rho.n() + 1 || lambda.n() < 2) {
        throw Error(Errc::MismatchedSize, "eq1 needs |lambda| = |rho| + 1 >= 2");
    }
    auto upper = cached_multiplicities(lambda.n());
    auto lower = cached_multiplicities(rho.n());
    std::int64_t left = 0;
    for (const Partition& mu : successors(rho)) left += (*upper)(mu, lambda);
    std::int64_t right = 0;
    for (const Predecessor& p : predecessors(lambda)) right += p.multiplicity * (*lower)(rho, p.gamma);
    return {left, right};
}

bool conjugate_twist_check(int n) {
    auto table = character_table(n);
    for (const Partition& mu : table->shapes) {
        if (sign_twist(table->chi(mu)) != table->chi(conjugate(mu))) return false;
    }
    for (const Partition& lambda : table->shapes) {
        const ClassFunction phi = ind_sgn_character(lambda);
        for (const Partition& mu : table->shapes) {
            if (inner(phi, table->chi(mu)) != Rational(kostka(conjugate(mu), conjugate(lambda)))) return false;
        }
    }
    return true;
}

}  // namespace younglab
