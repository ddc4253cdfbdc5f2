#include "younglab/serialize.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "younglab/errors.hpp"

namespace younglab {

namespace {

std::vector<int> int_array(const Json& j, Errc code, const char* what) {
    if (!j.is_array()) throw Error(code, std::string(what) + " must be a JSON array");
    std::vector<int> out;
    out.reserve(j.size());
    for (const Json& v : j) {
        if (!v.is_number_integer()) throw Error(code, std::string(what) + " entries must be integers");
        out.push_back(v.get<int>());
    }
    return out;
}

bool is_flat(const Json& j) {
    if (!j.is_array()) return j.is_primitive();
    for (const Json& v : j) {
        if (!v.is_primitive() && !(v.is_array() && std::all_of(v.begin(), v.end(), [](const Json& x) {
                                       return x.is_primitive();
                                   }))) {
            return false;
        }
    }
    return true;
}

void dump_into(const Json& j, int indent, std::string& out) {
    const std::string pad(static_cast<std::size_t>(indent + 2), ' ');
    if (j.is_object() && !j.empty()) {
        out += "{\n";
        std::size_t i = 0;
        for (const auto& [key, value] : j.items()) {
            out += pad + Json(key).dump() + ": ";
            dump_into(value, indent + 2, out);
            out += ++i < j.size() ? ",\n" : "\n";
        }
        out += std::string(static_cast<std::size_t>(indent), ' ') + "}";
    } else if (j.is_array() && !j.empty() && !is_flat(j)) {
        out += "[\n";
        for (std::size_t i = 0; i < j.size(); ++i) {
            out += pad;
            dump_into(j[i], indent + 2, out);
            out += i + 1 < j.size() ? ",\n" : "\n";
        }
        out += std::string(static_cast<std::size_t>(indent), ' ') + "]";
    } else {
        out += j.dump();
    }
}

}  // namespace

std::string dump_pretty(const Json& j) {
    std::string out;
    dump_into(j, 0, out);
    return out + '\n';
}

Json to_json(const Partition& p) { return Json(p.parts()); }

Partition partition_from_json(const Json& j) {
    return Partition(int_array(j, Errc::InvalidPartition, "partition"));
}

Json to_json(const Weight& w) { return Json(w.counts); }

Weight weight_from_json(const Json& j) { return Weight(int_array(j, Errc::InvalidFilling, "weight")); }

Json to_json(const Tableau& t) { return Json(t.rows()); }

Tableau tableau_from_json(const Json& j) {
    if (!j.is_array()) throw Error(Errc::InvalidTableau, "tableau must be an array of rows");
    std::vector<std::vector<int>> rows;
    for (const Json& row : j) rows.push_back(int_array(row, Errc::InvalidTableau, "tableau row"));
    return Tableau(std::move(rows));
}

Json to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (!j.is_string()) throw Error(Errc::DimensionMismatch, "rational must be a \"p/q\" string");
    return parse_rational(j.get<std::string>());
}

Json to_json(const Matrix& m) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
        rows.push_back(std::move(row));
    }
    return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

Matrix matrix_from_json(const Json& j) {
    const auto rows = j.at("rows").get<std::size_t>();
    const auto cols = j.at("cols").get<std::size_t>();
    const Json& entries = j.at("entries");
    if (entries.size() != rows) throw Error(Errc::DimensionMismatch, "matrix row count mismatch");
    Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        if (entries[r].size() != cols) throw Error(Errc::DimensionMismatch, "matrix column count mismatch");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = rational_from_json(entries[r][c]);
    }
    return m;
}

Json to_json(const BijectionCertificate& c) {
    Json pairs = Json::array();
    for (const BijectionPair& p : c.pairs) {
        pairs.push_back(Json{{"mu", to_json(p.mu_tableau.shape())},
                             {"mu_tableau", to_json(p.mu_tableau)},
                             {"removed_symbol", p.removed_symbol},
                             {"gamma_weight", to_json(p.gamma_weight)},
                             {"rho_tableau", to_json(p.rho_tableau)}});
    }
    return Json{{"lambda", to_json(c.lambda)},
                {"rho", to_json(c.rho)},
                {"count", c.pairs.size()},
                {"method", std::string(to_string(c.method))},
                {"canonical", c.canonical},
                {"canonical_successes", c.canonical_successes},
                {"pairs", std::move(pairs)}};
}

BijectionCertificate certificate_from_json(const Json& j) {
    BijectionCertificate c;
    c.lambda = partition_from_json(j.at("lambda"));
    c.rho = partition_from_json(j.at("rho"));
    c.canonical = j.at("canonical").get<bool>();
    c.canonical_successes = j.at("canonical_successes").get<std::size_t>();
    const auto method = j.at("method").get<std::string>();
    bool known = false;
    for (BijectionMethod m : {BijectionMethod::Canonical, BijectionMethod::Matching, BijectionMethod::Arbitrary}) {
        if (to_string(m) == method) {
            c.method = m;
            known = true;
        }
    }
    if (!known) throw Error(Errc::InvalidTableau, "unknown bijection method " + method);
    for (const Json& p : j.at("pairs")) {
        c.pairs.push_back(BijectionPair{tableau_from_json(p.at("mu_tableau")), p.at("removed_symbol").get<int>(),
                                        tableau_from_json(p.at("rho_tableau")),
                                        weight_from_json(p.at("gamma_weight"))});
    }
    return c;
}

Json to_json(const CharacterTable& table) {
    Json classes = Json::array();
    for (std::size_t i = 0; i < table.classes->types.size(); ++i) {
        classes.push_back(Json{{"cycle_type", to_json(table.classes->types[i])},
                               {"class_size", table.classes->sizes[i].get_str()}});
    }
    Json characters = Json::array();
    for (std::size_t i = 0; i < table.shapes.size(); ++i) {
        Json values = Json::array();
        for (const Rational& v : table.characters[i].values()) values.push_back(to_json(v));
        characters.push_back(Json{{"lambda", to_json(table.shapes[i])}, {"values", std::move(values)}});
    }
    return Json{{"n", table.n},
                {"group_order", table.classes->group_order.get_str()},
                {"classes", std::move(classes)},
                {"characters", std::move(characters)}};
}

Json to_json(const Form& f) {
    Json terms = Json::array();
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        terms.push_back(Json::array({to_string(it->second), it->first.exponents()}));
    }
    return Json{{"nvars", f.nvars()}, {"text", f.to_string()}, {"terms", std::move(terms)}};
}

Form form_from_json(const Json& j) {
    Form f(j.at("nvars").get<int>());
    for (const Json& term : j.at("terms")) {
        f.add_term(Monomial(term.at(1).get<std::vector<int>>()), rational_from_json(term.at(0)));
    }
    return f;
}

Json to_json(const Statement1Report& r, const System3& system) {
    Json rows = Json::array();
    for (const Partition& rho : system.row_index) rows.push_back(to_json(rho));
    Json cols = Json::array();
    for (const Partition& mu : system.col_index) cols.push_back(to_json(mu));
    return Json{{"lambda", to_json(system.lambda)},
                {"bar_lambda", to_json(bar(system.lambda))},
                {"h", h(system.lambda)},
                {"hbar", hbar(system.lambda)},
                {"row_index", std::move(rows)},
                {"col_index", std::move(cols)},
                {"matrix", to_json(system.matrix)},
                {"bar_bijective", r.bar_bijective},
                {"square", r.square},
                {"unipotent", r.unipotent},
                {"kernel_dim", r.kernel_dim}};
}

Json to_json(const PolymorphismReport& r, bool include_witness) {
    Json j{{"n", r.n},
           {"feasible", r.feasible},
           {"max_flow", r.max_flow},
           {"min_cut", r.min_cut},
           {"required", r.required},
           {"witness_verified", r.witness_verified}};
    if (include_witness && r.witness) {
        const FlowInstance inst = build_flow_instance(r.n);
        Json left = Json::array();
        for (const Partition& gamma : inst.left) left.push_back(to_json(gamma));
        Json right = Json::array();
        for (const Partition& lambda : inst.right) right.push_back(to_json(lambda));
        j["witness"] = Json{{"rows", std::move(left)}, {"cols", std::move(right)}, {"matrix", to_json(*r.witness)}};
    }
    return j;
}

}  // namespace younglab
