#pragma once

// JSON encodings shared by the CLI and its tests. Rationals travel as "p/q"
// strings; partitions as arrays of parts; tableaux as arrays of rows.

#include <json.hpp>

#include "younglab/characters.hpp"
#include "younglab/exactla.hpp"
#include "younglab/forms.hpp"
#include "younglab/linsys.hpp"
#include "younglab/partition.hpp"
#include "younglab/tableau.hpp"

namespace younglab {

using Json = nlohmann::ordered_json;

Json to_json(const Partition& p);
Partition partition_from_json(const Json& j);

Json to_json(const Weight& w);
Weight weight_from_json(const Json& j);

Json to_json(const Tableau& t);
Tableau tableau_from_json(const Json& j);

Json to_json(const Rational& q);
Rational rational_from_json(const Json& j);

Json to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

Json to_json(const BijectionCertificate& c);
BijectionCertificate certificate_from_json(const Json& j);

Json to_json(const CharacterTable& table);

/// Terms as [coefficient, exponents] pairs in decreasing graded lexicographic
/// order, plus the printed form.
Json to_json(const Form& f);
Form form_from_json(const Json& j);

/// Indented JSON with arrays of scalars (partitions, tableau rows, matrix
/// rows) kept on one line. Ends with a newline.
std::string dump_pretty(const Json& j);

Json to_json(const Statement1Report& r, const System3& system);
Json to_json(const PolymorphismReport& r, bool include_witness);

}  // namespace younglab
