#pragma once

#include <filesystem>
#include <memory>
#include <string>
#include <vector>

#include "json.hpp"
#include "levikit/cohomology.hpp"
#include "levikit/hopf.hpp"
#include "levikit/levi.hpp"
#include "levikit/lie_algebra.hpp"
#include "levikit/structure.hpp"

/// JSON file formats. Indices are 0-based; rationals are written as strings "p/q" or "p"
/// and read from strings or JSON integers. Malformed documents throw Parse, unreadable files Io.
namespace levikit::io {

using Json = nlohmann::ordered_json;

Json read_json(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, const std::string& text);
/// Two-space indentation with a trailing newline.
std::string dump(const Json& j);

Json rational_to_json(const Rational& q);
Rational rational_from_json(const Json& j);
Json vector_to_json(const Vector& v);
Vector vector_from_json(const Json& j, size_t expected);
Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j, size_t rows, size_t cols);
/// Basis rows of the canonical echelon form.
Json subspace_to_json(const Subspace& s);
Subspace subspace_from_json(const Json& j, size_t ambient);

/// {"dim", "labels", "bracket": [{"i", "j", "c": {"k": value}}]} with i < j only.
Json algebra_to_json(const LieAlgebra& l);
LieAlgebra algebra_from_json(const Json& j);

/// {"dim", "labels", "mult": [[i, j, k, c]], "unit", "comult": [[i, j, k, c]], "counit", "antipode": rows}.
Json hopf_to_json(const HopfAlgebra& h);
HopfAlgebra hopf_from_json(const Json& j);

/// {"kind": "finite_table", "labels", "table"} or {"kind": "free_abelian", "rank"}.
Json group_to_json(const GroupBackend& g);
GroupBackend group_from_json(const Json& j);

/// {"group": ..., "degrees": [...]}: labels for finite groups, integer vectors for Z^k.
Json grading_to_json(const Grading& g);
Grading grading_from_json(const Json& j);

/// {"dim", "coaction": [[i, j, k, c]]}: rho(e_i) has coefficient c on e_j (x) h_k.
Json comodule_to_json(const ComoduleStructure& c);
ComoduleStructure comodule_from_json(const Json& j, std::shared_ptr<const HopfAlgebra> hopf);

/// {"dim", "action": [[h, i, j, c]]}: entry (i, j) of the matrix of h_h.
Json module_to_json(const ModuleStructure& m);
ModuleStructure module_from_json(const Json& j, std::shared_ptr<const HopfAlgebra> hopf);

/// {"dim", "matrix": rows}.
Json automorphism_to_json(const CyclicAction& a);
CyclicAction automorphism_from_json(const Json& j);

/// {"dim", "matrices": [rows per basis element of L]}: a representation on F^dim.
Json representation_to_json(const std::vector<Matrix>& psi);
std::vector<Matrix> representation_from_json(const Json& j, size_t algebra_dim);

/// {"degree", "algebra_dim", "space_dim", "values": [{"args": [i, j], "value": vector}]}.
Json cochain_to_json(const Cochain& c);
Cochain cochain_from_json(const Json& j);

/// {"B", "R", "S", "N", "components", "report": [{"check", "pass"}]}.
Json decomposition_to_json(const LeviDecomposition& d);
LeviDecomposition decomposition_from_json(const Json& j, size_t ambient);

}  // namespace levikit::io
