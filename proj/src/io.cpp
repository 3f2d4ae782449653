#include "yba/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace yba {

const char* tool_name() { return "yba"; }
const char* tool_version() { return "0.1.0"; }

std::pair<int, ExactMatrix> rmatrix_from_json(const nlohmann::json& doc) {
    if (!doc.is_object() || !doc.contains("dim"))
        throw std::invalid_argument("R-matrix document must be an object with a 'dim' field");
    const int n = doc.at("dim").get<int>();
    if (n < 1) throw std::invalid_argument("R-matrix dimension must be positive");
    ExactMatrix m(n * n, n * n);
    std::set<std::array<int, 4>> seen;
    if (doc.contains("entries")) {
        for (const auto& e : doc.at("entries")) {
            const int i = e.at("i").get<int>();
            const int j = e.at("j").get<int>();
            const int k = e.at("k").get<int>();
            const int l = e.at("l").get<int>();
            if (i < 0 || j < 0 || k < 0 || l < 0 || i >= n || j >= n || k >= n || l >= n)
                throw std::invalid_argument("R-matrix entry index out of range");
            if (!seen.insert({i, j, k, l}).second)
                throw std::invalid_argument(
                    "duplicate R-matrix entry (" + std::to_string(i) + "," + std::to_string(j) +
                    "," + std::to_string(k) + "," + std::to_string(l) + ")");
            m.at(i * n + j, k * n + l) = parse_scalar(e.at("value").get<std::string>());
        }
    }
    m.tag_tensor(n, 2);
    return {n, std::move(m)};
}

std::pair<int, ExactMatrix> rmatrix_from_string(const std::string& text) {
    return rmatrix_from_json(nlohmann::json::parse(text));
}

std::pair<int, ExactMatrix> rmatrix_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    nlohmann::json doc;
    in >> doc;
    return rmatrix_from_json(doc);
}

RMatrix load_rmatrix(const nlohmann::json& doc) {
    auto [n, m] = rmatrix_from_json(doc);
    (void)n;
    return RMatrix::validated(std::move(m));
}

RMatrix load_rmatrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    nlohmann::json doc;
    in >> doc;
    return load_rmatrix(doc);
}

nlohmann::json rmatrix_to_json(int n, const ExactMatrix& m) {
    nlohmann::json entries = nlohmann::json::array();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    const Scalar& v = m.at(i * n + j, k * n + l);
                    if (v.is_zero()) continue;
                    entries.push_back({{"i", i}, {"j", j}, {"k", k}, {"l", l},
                                       {"value", v.to_string()}});
                }
    return {{"dim", n}, {"entries", std::move(entries)}};
}

nlohmann::json matrix_to_json(const ExactMatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).to_string());
        rows.push_back(std::move(row));
    }
    nlohmann::json out{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
    if (m.tensor_shape())
        out["tensor"] = {{"dim", m.tensor_shape()->dim}, {"legs", m.tensor_shape()->legs}};
    return out;
}

nlohmann::json relator_to_json(const Relator& rel) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (std::size_t a = 0; a < rel.coefficients.size(); ++a) {
        if (rel.coefficients[a].is_zero()) continue;
        coeffs.push_back({{"indices", tensor_digits(static_cast<int>(a), rel.n, rel.degree)},
                          {"value", rel.coefficients[a].to_string()}});
    }
    return {{"side", rel.side == RelatorSide::E ? "E" : "F"},
            {"degree", rel.degree},
            {"coefficients", std::move(coeffs)},
            {"rendering", rel.rendering.to_string()}};
}

std::string matrix_to_text(const ExactMatrix& m, const std::optional<Rational>& at_q) {
    std::vector<std::vector<std::string>> cells(static_cast<std::size_t>(m.rows()));
    std::size_t width = 1;
    for (int i = 0; i < m.rows(); ++i) {
        cells[static_cast<std::size_t>(i)].reserve(static_cast<std::size_t>(m.cols()));
        for (int j = 0; j < m.cols(); ++j) {
            std::string s = at_q ? rational_to_string(m.at(i, j).evaluate_at(*at_q))
                                 : m.at(i, j).to_string();
            width = std::max(width, s.size());
            cells[static_cast<std::size_t>(i)].push_back(std::move(s));
        }
    }
    std::ostringstream out;
    for (int i = 0; i < m.rows(); ++i) {
        out << "[ ";
        for (int j = 0; j < m.cols(); ++j) {
            const std::string& s = cells[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            out << s;
            if (j + 1 < m.cols()) out << std::string(width - s.size(), ' ') << "  ";
        }
        out << " ]\n";
    }
    return out.str();
}

}  // namespace yba
