#include "younglab/forms.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "younglab/errors.hpp"

namespace younglab {

// --- Monomial ----------------------------------------------------------------

Monomial::Monomial(std::vector<int> exponents) : exponents_(std::move(exponents)) {
    for (int e : exponents_) {
        if (e < 0) throw Error(Errc::InvalidFilling, "negative exponent");
    }
    degree_ = std::accumulate(exponents_.begin(), exponents_.end(), 0);
}

std::string Monomial::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < exponents_.size(); ++i) {
        if (exponents_[i] == 0) continue;
        if (!out.empty()) out += "·";
        out += "x" + std::to_string(i + 1);
        if (exponents_[i] > 1) out += "^" + std::to_string(exponents_[i]);
    }
    return out.empty() ? "1" : out;
}

// --- permutations ------------------------------------------------------------

Permutation identity_permutation(int n) {
    Permutation p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    return p;
}

Permutation transposition(int n, int a, int b) {
    Permutation p = identity_permutation(n);
    std::swap(p[static_cast<std::size_t>(a)], p[static_cast<std::size_t>(b)]);
    return p;
}

Permutation compose(const Permutation& sigma, const Permutation& tau) {
    Permutation out(tau.size());
    for (std::size_t i = 0; i < tau.size(); ++i) out[i] = sigma[static_cast<std::size_t>(tau[i])];
    return out;
}

Permutation cycle_type_representative(const Partition& cycle_type) {
    Permutation p(static_cast<std::size_t>(cycle_type.n()));
    int start = 0;
    for (int length : cycle_type.parts()) {
        for (int k = 0; k < length; ++k) p[static_cast<std::size_t>(start + k)] = start + (k + 1) % length;
        start += length;
    }
    return p;
}

Partition cycle_type(const Permutation& sigma) {
    std::vector<char> seen(sigma.size(), 0);
    std::vector<int> lengths;
    for (std::size_t i = 0; i < sigma.size(); ++i) {
        if (seen[i]) continue;
        int length = 0;
        for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(sigma[j])) {
            seen[j] = 1;
            ++length;
        }
        lengths.push_back(length);
    }
    std::sort(lengths.begin(), lengths.end(), std::greater<>());
    return Partition(std::move(lengths));
}

std::vector<Permutation> all_permutations(int n) {
    std::vector<Permutation> out;
    Permutation p = identity_permutation(n);
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

// --- Form ----------------------------------------------------------------------

Form Form::constant(int nvars, const Rational& c) {
    Form f(nvars);
    f.add_term(Monomial(std::vector<int>(static_cast<std::size_t>(nvars), 0)), c);
    return f;
}

Form Form::variable(int nvars, int index) {
    std::vector<int> e(static_cast<std::size_t>(nvars), 0);
    e.at(static_cast<std::size_t>(index)) = 1;
    return monomial(Monomial(std::move(e)));
}

Form Form::monomial(const Monomial& m, const Rational& c) {
    Form f(m.nvars());
    f.add_term(m, c);
    return f;
}

Rational Form::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Form::add_term(const Monomial& m, const Rational& c) {
    if (m.nvars() != nvars_) throw Error(Errc::DimensionMismatch, "monomial has the wrong number of variables");
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (inserted) return;
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
}

Form& Form::operator+=(const Form& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
}

Form& Form::operator-=(const Form& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, -c);
    return *this;
}

Form Form::operator+(const Form& other) const {
    Form out = *this;
    out += other;
    return out;
}

Form Form::operator-(const Form& other) const {
    Form out = *this;
    out -= other;
    return out;
}

Form Form::operator-() const { return *this * Rational(-1); }

Form Form::operator*(const Form& other) const {
    if (nvars_ != other.nvars_) throw Error(Errc::DimensionMismatch, "forms in different numbers of variables");
    Form out(nvars_);
    std::vector<int> e(static_cast<std::size_t>(nvars_));
    for (const auto& [a, ca] : terms_) {
        for (const auto& [b, cb] : other.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = a.exponents()[i] + b.exponents()[i];
            out.add_term(Monomial(e), ca * cb);
        }
    }
    return out;
}

Form Form::operator*(const Rational& scalar) const {
    Form out(nvars_);
    if (sgn(scalar) == 0) return out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, c * scalar);
    return out;
}

std::string Form::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!out.empty()) out += " + ";
        out += younglab::to_string(it->second) + " * " + it->first.to_string();
    }
    return out;
}

Monomial act(const Permutation& sigma, const Monomial& m) {
    if (static_cast<int>(sigma.size()) != m.nvars()) {
        throw Error(Errc::DimensionMismatch, "permutation degree differs from number of variables");
    }
    std::vector<int> e(sigma.size());
    for (std::size_t i = 0; i < sigma.size(); ++i) e[static_cast<std::size_t>(sigma[i])] = m.exponents()[i];
    return Monomial(std::move(e));
}

Form act(const Permutation& sigma, const Form& f) {
    Form out(f.nvars());
    for (const auto& [m, c] : f.terms()) out.add_term(act(sigma, m), c);
    return out;
}

Form total_derivative(const Form& f) {
    Form out(f.nvars());
    for (const auto& [m, c] : f.terms()) {
        for (std::size_t i = 0; i < m.exponents().size(); ++i) {
            const int e = m.exponents()[i];
            if (e == 0) continue;
            std::vector<int> lowered = m.exponents();
            --lowered[i];
            out.add_term(Monomial(std::move(lowered)), c * e);
        }
    }
    return out;
}

Form elementary_symmetric(int nvars, const std::vector<int>& variables, int degree) {
    Form out(nvars);
    if (degree < 0 || degree > static_cast<int>(variables.size())) return out;
    std::vector<char> chosen(variables.size(), 0);
    std::fill(chosen.begin(), chosen.begin() + degree, 1);
    do {
        std::vector<int> e(static_cast<std::size_t>(nvars), 0);
        for (std::size_t i = 0; i < variables.size(); ++i) {
            if (chosen[i]) e[static_cast<std::size_t>(variables[i])] = 1;
        }
        out.add_term(Monomial(std::move(e)), 1);
    } while (std::prev_permutation(chosen.begin(), chosen.end()));
    return out;
}

Form substitute_degrees(const Form& f, const std::map<int, int>& exponent_map) {
    Form out(f.nvars());
    for (const auto& [m, c] : f.terms()) {
        std::vector<int> e = m.exponents();
        for (int& x : e) {
            if (auto it = exponent_map.find(x); it != exponent_map.end()) x = it->second;
        }
        out.add_term(Monomial(std::move(e)), c);
    }
    return out;
}

// --- MonomialBasis / FormSpace ----------------------------------------------------

MonomialBasis::MonomialBasis(std::vector<Monomial> monomials) : monomials_(std::move(monomials)) {
    nvars_ = monomials_.empty() ? 0 : monomials_.front().nvars();
    for (std::size_t i = 0; i < monomials_.size(); ++i) {
        if (!index_.emplace(monomials_[i], i).second) {
            throw Error(Errc::DimensionMismatch, "duplicate monomial " + monomials_[i].to_string() + " in basis");
        }
    }
}

std::optional<std::size_t> MonomialBasis::index_of(const Monomial& m) const {
    auto it = index_.find(m);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

Vector MonomialBasis::coordinates(const Form& f) const {
    Vector v(monomials_.size());
    for (const auto& [m, c] : f.terms()) {
        auto i = index_of(m);
        if (!i) throw Error(Errc::DimensionMismatch, "monomial " + m.to_string() + " is outside the ambient space");
        v[*i] = c;
    }
    return v;
}

Form MonomialBasis::form(std::span<const Rational> coords) const {
    Form f(nvars_);
    for (std::size_t i = 0; i < coords.size(); ++i) f.add_term(monomials_[i], coords[i]);
    return f;
}

std::vector<std::size_t> MonomialBasis::action(const Permutation& sigma) const {
    std::vector<std::size_t> image(monomials_.size());
    for (std::size_t i = 0; i < monomials_.size(); ++i) {
        auto j = index_of(act(sigma, monomials_[i]));
        if (!j) throw Error(Errc::NotInvariant, "monomial set is not closed under the substitution");
        image[i] = *j;
    }
    return image;
}

FormSpace::FormSpace(std::shared_ptr<const MonomialBasis> ambient, Subspace space)
    : ambient_(std::move(ambient)), space_(std::move(space)) {
    if (space_.ambient_dim() != ambient_->size()) {
        throw Error(Errc::DimensionMismatch, "subspace does not live in the given ambient space");
    }
}

FormSpace FormSpace::span(std::shared_ptr<const MonomialBasis> ambient, const std::vector<Form>& forms) {
    std::vector<Vector> rows;
    rows.reserve(forms.size());
    for (const Form& f : forms) rows.push_back(ambient->coordinates(f));
    const std::size_t dim = ambient->size();
    return FormSpace(std::move(ambient), Subspace::span(rows, dim));
}

FormSpace FormSpace::whole(std::shared_ptr<const MonomialBasis> ambient) {
    const std::size_t dim = ambient->size();
    return FormSpace(std::move(ambient), Subspace::whole(dim));
}

bool FormSpace::contains(const Form& f) const {
    for (const auto& [m, c] : f.terms()) {
        if (!ambient_->index_of(m)) return false;
    }
    return space_.contains(ambient_->coordinates(f));
}

std::vector<Form> FormSpace::basis_forms() const {
    std::vector<Form> out;
    for (std::size_t i = 0; i < space_.dim(); ++i) out.push_back(ambient_->form(space_.basis().row(i)));
    return out;
}

bool FormSpace::is_invariant() const {
    const int n = ambient_->nvars();
    for (int a = 0; a + 1 < n; ++a) {
        std::vector<std::size_t> image;
        try {
            image = ambient_->action(transposition(n, a, a + 1));
        } catch (const Error&) {
            return false;
        }
        for (std::size_t i = 0; i < space_.dim(); ++i) {
            if (!space_.contains(permute(image, space_.basis().row(i)))) return false;
        }
    }
    return true;
}

ClassFunction FormSpace::character() const {
    ClassFunction chi(ambient_->nvars());
    const auto& types = chi.classes().types;
    for (std::size_t i = 0; i < types.size(); ++i) {
        const std::vector<std::size_t> image = ambient_->action(cycle_type_representative(types[i]));
        chi.at(i) = restricted_trace(image, space_);
    }
    return chi;
}

// --- L_lambda -------------------------------------------------------------------

namespace {

void assign_rows(int variable, std::vector<int>& room, std::vector<int>& exponents, std::vector<Monomial>& out) {
    if (variable == static_cast<int>(exponents.size())) {
        out.emplace_back(exponents);
        return;
    }
    for (std::size_t row = 0; row < room.size(); ++row) {
        if (room[row] == 0) continue;
        --room[row];
        exponents[static_cast<std::size_t>(variable)] = static_cast<int>(row);
        assign_rows(variable + 1, room, exponents, out);
        ++room[row];
    }
}

}  // namespace

std::vector<Monomial> x_monomials(const Partition& lambda, int n) {
    if (lambda.n() != n) {
        throw Error(Errc::MismatchedSize, "partition " + lambda.to_string() + " is not a partition of " + std::to_string(n));
    }
    std::vector<Monomial> out;
    std::vector<int> room = lambda.parts();
    std::vector<int> exponents(static_cast<std::size_t>(n), 0);
    assign_rows(0, room, exponents, out);
    std::sort(out.begin(), out.end());
    if (std::adjacent_find(out.begin(), out.end()) != out.end()) {
        throw Error(Errc::DimensionMismatch, "row assignments produced a repeated monomial");
    }
    return out;
}

std::shared_ptr<const MonomialBasis> l_basis(const Partition& lambda) {
    return std::make_shared<const MonomialBasis>(x_monomials(lambda, lambda.n()));
}

std::shared_ptr<const MonomialBasis> square_free_basis(int n, int k) {
    std::vector<Monomial> monomials;
    std::vector<int> all(static_cast<std::size_t>(n));
    std::iota(all.begin(), all.end(), 0);
    const Form e = elementary_symmetric(n, all, k);
    for (const auto& [m, c] : e.terms()) monomials.push_back(m);
    return std::make_shared<const MonomialBasis>(std::move(monomials));
}

ClassFunction monomial_character(const Partition& lambda) {
    auto basis = l_basis(lambda);
    ClassFunction chi(lambda.n());
    const auto& types = chi.classes().types;
    for (std::size_t i = 0; i < types.size(); ++i) {
        const std::vector<std::size_t> image = basis->action(cycle_type_representative(types[i]));
        std::size_t fixed = 0;
        for (std::size_t j = 0; j < image.size(); ++j) fixed += image[j] == j ? 1 : 0;
        chi.at(i) = Rational(static_cast<unsigned long>(fixed));
    }
    return chi;
}

bool statement2_check(const Partition& lambda, int n) {
    const std::vector<Monomial> monomials = x_monomials(lambda, n);
    Integer expected;
    mpz_fac_ui(expected.get_mpz_t(), static_cast<unsigned long>(n));
    for (int part : lambda.parts()) {
        Integer f;
        mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(part));
        expected /= f;
    }
    auto basis = std::make_shared<const MonomialBasis>(monomials);
    std::vector<Form> forms;
    for (const Monomial& m : monomials) forms.push_back(Form::monomial(m));
    const std::size_t dim = FormSpace::span(basis, forms).dim();
    if (Integer(static_cast<unsigned long>(dim)) != expected) return false;
    return monomial_character(lambda) == perm_character(lambda);
}

// --- Specht polynomials -----------------------------------------------------------

Form specht_poly(const Tableau& filling) {
    const int n = filling.size();
    std::vector<int> entries = filling.reading_word();
    std::sort(entries.begin(), entries.end());
    for (int i = 0; i < n; ++i) {
        if (entries[static_cast<std::size_t>(i)] != i + 1) {
            throw Error(Errc::InvalidFilling, "a Specht filling must use each of 1.." + std::to_string(n) + " once");
        }
    }
    Form product = Form::constant(n, 1);
    const auto& rows = filling.rows();
    const int width = rows.empty() ? 0 : static_cast<int>(rows.front().size());
    for (int j = 0; j < width; ++j) {
        std::vector<int> column;
        for (const auto& row : rows) {
            if (static_cast<int>(row.size()) > j) column.push_back(row[static_cast<std::size_t>(j)] - 1);
        }
        for (std::size_t s = 0; s < column.size(); ++s) {
            for (std::size_t k = s + 1; k < column.size(); ++k) {
                product = product * (Form::variable(n, column[s]) - Form::variable(n, column[k]));
            }
        }
    }
    return product;
}

Subspace d_kernel(const MonomialBasis& ambient) {
    // Columns: ambient monomials. Rows: monomials reached by D.
    std::map<Monomial, std::size_t> targets;
    std::vector<Form> images;
    for (const Monomial& m : ambient.monomials()) {
        images.push_back(total_derivative(Form::monomial(m)));
        for (const auto& [t, c] : images.back().terms()) targets.emplace(t, 0);
    }
    std::size_t next = 0;
    for (auto& [t, index] : targets) index = next++;
    Matrix d(targets.size(), ambient.size());
    for (std::size_t j = 0; j < images.size(); ++j) {
        for (const auto& [t, c] : images[j].terms()) d(targets.at(t), j) = c;
    }
    return kernel(d);
}

FormSpace specht_module(const Partition& lambda, int n) {
    if (lambda.n() != n) throw Error(Errc::MismatchedSize, "partition size differs from n");
    std::vector<Form> polys;
    for (const Tableau& t : enumerate_standard(lambda)) polys.push_back(specht_poly(t));
    return FormSpace::span(l_basis(lambda), polys);
}

Theorem5Report theorem5_check(const Partition& lambda, int n) {
    if (lambda.n() != n) throw Error(Errc::MismatchedSize, "partition size differs from n");
    Theorem5Report report;
    report.lambda = lambda;
    auto basis = l_basis(lambda);
    report.l_dim = basis->size();

    const std::vector<Tableau> standard = enumerate_standard(lambda);
    report.standard_tableaux = standard.size();
    report.f_lambda = standard_count(lambda);

    std::vector<Form> polys;
    report.all_in_l = true;
    for (const Tableau& t : standard) {
        polys.push_back(specht_poly(t));
        for (const auto& [m, c] : polys.back().terms()) {
            if (!basis->index_of(m)) report.all_in_l = false;
        }
    }
    if (!report.all_in_l) return report;

    const FormSpace specht = FormSpace::span(basis, polys);
    report.rank = specht.dim();
    report.independent = report.rank == standard.size() && report.rank == report.f_lambda;
    report.invariant = specht.is_invariant();

    const Subspace shift_invariant = d_kernel(*basis);
    report.shift_invariant_dim = shift_invariant.dim();
    report.equals_shift_invariant = shift_invariant == specht.subspace();

    report.character_matches = specht.character() == character_table(n)->chi(lambda);
    return report;
}

// --- two-row diagrams -----------------------------------------------------------

namespace {

// Sets of l disjoint pairs {a < b}, each set listed with increasing first
// elements.
void disjoint_pairs(int n, int l, std::vector<char>& used, std::vector<std::pair<int, int>>& current,
                    std::vector<std::vector<std::pair<int, int>>>& out) {
    if (static_cast<int>(current.size()) == l) {
        out.push_back(current);
        return;
    }
    const int first_min = current.empty() ? 0 : current.back().first + 1;
    for (int a = first_min; a < n; ++a) {
        if (used[static_cast<std::size_t>(a)]) continue;
        used[static_cast<std::size_t>(a)] = 1;
        for (int b = a + 1; b < n; ++b) {
            if (used[static_cast<std::size_t>(b)]) continue;
            used[static_cast<std::size_t>(b)] = 1;
            current.emplace_back(a, b);
            disjoint_pairs(n, l, used, current, out);
            current.pop_back();
            used[static_cast<std::size_t>(b)] = 0;
        }
        used[static_cast<std::size_t>(a)] = 0;
    }
}

std::uint64_t binomial(int n, int k) {
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    return r;
}

}  // namespace

std::vector<Form> two_row_generators(int n, int k, int l) {
    std::vector<std::vector<std::pair<int, int>>> pairings;
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    std::vector<std::pair<int, int>> current;
    disjoint_pairs(n, l, used, current, pairings);

    std::vector<Form> out;
    for (const auto& pairing : pairings) {
        Form f = Form::constant(n, 1);
        std::vector<char> in_pair(static_cast<std::size_t>(n), 0);
        for (const auto& [a, b] : pairing) {
            f = f * (Form::variable(n, a) - Form::variable(n, b));
            in_pair[static_cast<std::size_t>(a)] = in_pair[static_cast<std::size_t>(b)] = 1;
        }
        std::vector<int> rest;
        for (int i = 0; i < n; ++i) {
            if (!in_pair[static_cast<std::size_t>(i)]) rest.push_back(i);
        }
        out.push_back(f * elementary_symmetric(n, rest, k - l));
    }
    return out;
}

bool TwoRowReport::ok() const {
    if (!direct_sum || !pairwise_trivial) return false;
    if (top_is_d_kernel.has_value() && !*top_is_d_kernel) return false;
    return std::all_of(components.begin(), components.end(), [](const TwoRowComponent& c) {
        return c.dim == c.expected_dim && c.invariant && c.character_matches;
    });
}

TwoRowReport two_row_decomposition(int n, int k) {
    if (k < 0 || 2 * k > n) throw Error(Errc::MismatchedSize, "two-row decomposition needs 0 <= k <= n/2");
    TwoRowReport report;
    report.n = n;
    report.k = k;
    auto fk = square_free_basis(n, k);
    report.fk_dim = fk->size();
    auto table = character_table(n);

    std::vector<FormSpace> spaces;
    std::size_t dim_total = 0;
    Subspace combined(fk->size());
    for (int l = 0; l <= k; ++l) {
        const std::vector<Form> generators = two_row_generators(n, k, l);
        FormSpace space = FormSpace::span(fk, generators);
        TwoRowComponent component;
        component.l = l;
        component.generators = generators.size();
        component.dim = space.dim();
        const Partition shape(l == 0 ? std::vector<int>{n} : std::vector<int>{n - l, l});
        component.expected_dim = standard_count(shape);
        component.invariant = space.is_invariant();
        component.character_matches = component.invariant && space.character() == table->chi(shape);
        report.components.push_back(component);
        dim_total += space.dim();
        combined = sum(combined, space.subspace());
        spaces.push_back(std::move(space));
    }
    report.direct_sum = dim_total == binomial(n, k) && combined.dim() == fk->size();
    report.pairwise_trivial = true;
    for (std::size_t a = 0; a < spaces.size(); ++a) {
        for (std::size_t b = a + 1; b < spaces.size(); ++b) {
            if (intersect(spaces[a].subspace(), spaces[b].subspace()).dim() != 0) report.pairwise_trivial = false;
        }
    }
    if (n % 2 == 0 && 2 * k == n) report.top_is_d_kernel = d_kernel(*fk) == spaces.back().subspace();
    return report;
}

// --- Decomposition of L_(2,1,1) ----------------------------------------------------

namespace {

constexpr int kVars = 4;

Form x(int i) { return Form::variable(kVars, i - 1); }

Form sum_x() { return x(1) + x(2) + x(3) + x(4); }

Form sq(int i) { return x(i) * x(i); }

}  // namespace

bool Example4Report::ok() const {
    if (!all_in_l || !direct_sum || !c_relation_holds || even_dim != 6 || odd_dim != 6 || l_dim != 12) return false;
    return std::all_of(blocks.begin(), blocks.end(), [](const Example4Block& b) {
        return b.invariant && b.character_matches && b.parity_matches;
    });
}

Example4Report example4_check() {
    Example4Report report;
    const Partition lambda({2, 1, 1});
    auto basis = l_basis(lambda);
    report.l_dim = basis->size();

    Form d(kVars);
    for (int i = 1; i <= kVars; ++i) {
        for (int j = 1; j <= kVars; ++j) {
            if (i != j) d += sq(i) * x(j);
        }
    }
    const Form c1 = (x(1) - x(2)) * (x(3) - x(4)) * sum_x();
    const Form c2 = (x(1) - x(3)) * (x(2) - x(4)) * sum_x();
    const Form c3 = (x(1) - x(4)) * (x(2) - x(3)) * sum_x();
    const Form sp1 = (x(1) - x(2)) * (x(1) - x(3)) * (x(2) - x(3));
    const Form sp2 = (x(2) - x(3)) * (x(2) - x(4)) * (x(3) - x(4));
    const Form sp3 = (x(1) - x(3)) * (x(1) - x(4)) * (x(3) - x(4));
    // A_k carries the squared variable so that it lies in L_lambda.
    auto a_form = [](int k) {
        Form f(kVars);
        for (int i = 1; i <= kVars; ++i) {
            for (int j = 1; j <= kVars; ++j) {
                if (i == j) continue;
                const Rational eps = (i == k || j == k) ? 1 : -1;
                f += sq(i) * x(j) * eps;
            }
        }
        return f;
    };
    auto b_form = [](int k) {
        Form linear(kVars);
        Form squares(kVars);
        for (int i = 1; i <= kVars; ++i) {
            if (i == k) continue;
            linear += x(i);
            squares += sq(i);
        }
        return sq(k) * linear - x(k) * squares;
    };

    report.forms = {{"D", d},          {"C1", c1},         {"C2", c2},         {"C3", c3},
                    {"SP1", sp1},      {"SP2", sp2},       {"SP3", sp3},       {"A1", a_form(1)},
                    {"A2", a_form(2)}, {"A3", a_form(3)},  {"B1", b_form(1)},  {"B2", b_form(2)},
                    {"B3", b_form(3)}};
    auto named = [&](const std::string& name) -> const Form& {
        for (const auto& [n, f] : report.forms) {
            if (n == name) return f;
        }
        throw Error(Errc::InvalidFilling, "unknown form " + name);
    };

    report.all_in_l = true;
    for (const auto& [name, f] : report.forms) {
        for (const auto& [m, c] : f.terms()) {
            if (!basis->index_of(m)) report.all_in_l = false;
        }
    }
    if (!report.all_in_l) return report;

    // Degree substitution x_i^2 x_j <-> x_i x_j^2 as a matrix on L_lambda.
    const std::map<int, int> swap12{{1, 2}, {2, 1}};
    Matrix tau(basis->size(), basis->size());
    for (std::size_t j = 0; j < basis->size(); ++j) {
        const Vector image = basis->coordinates(substitute_degrees(Form::monomial(basis->monomials()[j]), swap12));
        for (std::size_t i = 0; i < basis->size(); ++i) tau(i, j) = image[i];
    }
    Matrix tau_minus = tau;
    Matrix tau_plus = tau;
    for (std::size_t i = 0; i < basis->size(); ++i) {
        tau_minus(i, i) -= 1;
        tau_plus(i, i) += 1;
    }
    const Subspace even = kernel(tau_minus);
    const Subspace odd = kernel(tau_plus);
    report.even_dim = even.dim();
    report.odd_dim = odd.dim();

    auto table = character_table(kVars);
    struct Spec {
        std::string name;
        Partition shape;
        std::vector<std::string> generators;
        bool even;
    };
    const std::vector<Spec> specs = {
        {"pi1", Partition({4}), {"D"}, true},
        {"pi2", Partition({2, 2}), {"C1", "C2"}, true},
        {"pi3", Partition({2, 1, 1}), {"SP1", "SP2", "SP3"}, false},
        {"pi4A", Partition({3, 1}), {"A1", "A2", "A3"}, true},
        {"pi4B", Partition({3, 1}), {"B1", "B2", "B3"}, false},
    };
    std::vector<Vector> all_rows;
    std::size_t dim_total = 0;
    for (const Spec& spec : specs) {
        std::vector<Form> generators;
        for (const std::string& g : spec.generators) generators.push_back(named(g));
        const FormSpace space = FormSpace::span(basis, generators);
        Example4Block block;
        block.name = spec.name;
        block.shape = spec.shape;
        block.generator_names = spec.generators;
        block.dim = space.dim();
        block.invariant = space.is_invariant();
        block.character_matches = block.invariant && space.character() == table->chi(spec.shape);
        block.even = spec.even;
        block.parity_matches = (spec.even ? even : odd).contains(space.subspace());
        report.blocks.push_back(block);
        dim_total += space.dim();
        for (const Form& g : generators) all_rows.push_back(basis->coordinates(g));
    }
    report.total_rank = Subspace::span(all_rows, basis->size()).dim();
    report.direct_sum = report.total_rank == basis->size() && dim_total == basis->size();

    // Solve C3 = a C1 + b C2.
    Matrix system(basis->size(), 2);
    const Vector v1 = basis->coordinates(c1);
    const Vector v2 = basis->coordinates(c2);
    for (std::size_t i = 0; i < basis->size(); ++i) {
        system(i, 0) = v1[i];
        system(i, 1) = v2[i];
    }
    if (auto solution = solve(system, basis->coordinates(c3))) {
        report.c3_from_c1 = (*solution)[0];
        report.c3_from_c2 = (*solution)[1];
    }
    report.c_relation_holds = (c1 - c2 + c3).is_zero();

    const MultiplicityTable m = multiplicity_table(kVars);
    for (const Partition& mu : {Partition({4}), Partition({2, 2}), Partition({2, 1, 1}), Partition({3, 1})}) {
        report.multiplicities.emplace_back(mu, m(mu, lambda));
    }
    return report;
}

}  // namespace younglab
