#include "emit.hpp"

#include <algorithm>
#include <sstream>

namespace qbraid::cli {

MatrixMode mode_from_name(const std::string& name) {
    if (name == "json") return MatrixMode::Json;
    if (name == "pretty") return MatrixMode::Pretty;
    if (name == "latex") return MatrixMode::Latex;
    throw std::invalid_argument("unknown matrix mode: " + name);
}

nlohmann::json matrix_json(const ExactMatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
        rows.push_back(row);
    }
    return rows;
}

nlohmann::json vector_json(const std::vector<Scalar>& v) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& x : v) out.push_back(x.str());
    return out;
}

std::string emit_matrix(const ExactMatrix& m, MatrixMode mode) {
    if (mode == MatrixMode::Json) return matrix_json(m).dump();
    std::vector<std::vector<std::string>> cells(m.rows());
    std::vector<std::size_t> width(m.cols(), 0);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            cells[i].push_back(m(i, j).str());
            width[j] = std::max(width[j], cells[i][j].size());
        }
    std::ostringstream os;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (mode == MatrixMode::Latex) {
                if (j) os << " & ";
                os << cells[i][j];
            } else {
                if (j) os << ' ';
                os << std::string(width[j] - cells[i][j].size(), ' ') << cells[i][j];
            }
        }
        if (mode == MatrixMode::Latex && i + 1 < m.rows()) os << " \\\\";
        os << '\n';
    }
    return os.str();
}

}  // namespace qbraid::cli
