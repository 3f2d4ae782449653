#pragma once

#include <string>

#include "json.hpp"
#include "yba/serre.hpp"

namespace yba {

const char* tool_name();
const char* tool_version();

/// R-matrix document: {"dim": n, "entries": [{"i","j","k","l","value"}...]}.
/// Omitted entries are zero; a duplicate (i,j,k,l) is an error.
/// Returns the raw matrix with no YBE/invertibility validation.
std::pair<int, ExactMatrix> rmatrix_from_json(const nlohmann::json& doc);
std::pair<int, ExactMatrix> rmatrix_from_string(const std::string& text);
std::pair<int, ExactMatrix> rmatrix_from_file(const std::string& path);

/// Fully validated load (parse + invertibility + Yang-Baxter).
RMatrix load_rmatrix(const nlohmann::json& doc);
RMatrix load_rmatrix_file(const std::string& path);

nlohmann::json rmatrix_to_json(int n, const ExactMatrix& m);
nlohmann::json matrix_to_json(const ExactMatrix& m);
nlohmann::json relator_to_json(const Relator& rel);

/// Fixed-width human rendering; at_q, when set, specializes the display.
std::string matrix_to_text(const ExactMatrix& m, const std::optional<Rational>& at_q = {});

}  // namespace yba
