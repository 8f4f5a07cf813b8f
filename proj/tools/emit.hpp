#pragma once

#include <string>

#include "json.hpp"
#include "qbraid/matrix.hpp"

namespace qbraid::cli {

enum class MatrixMode { Json, Pretty, Latex };

MatrixMode mode_from_name(const std::string& name);

// Canonical scalar strings throughout. Json mode returns a compact array of rows.
std::string emit_matrix(const ExactMatrix& m, MatrixMode mode);
nlohmann::json matrix_json(const ExactMatrix& m);
nlohmann::json vector_json(const std::vector<Scalar>& v);

}  // namespace qbraid::cli
