#include "yba/rmatrix.hpp"

#include <cmath>

namespace yba {

namespace {

int leg_dim_of(const ExactMatrix& m) {
    if (m.rows() != m.cols() || m.rows() <= 0)
        throw std::invalid_argument("two-leg operator must be square");
    const int n = static_cast<int>(std::lround(std::sqrt(static_cast<double>(m.rows()))));
    if (n * n != m.rows())
        throw std::invalid_argument("two-leg operator dimension is not a perfect square");
    return n;
}

std::optional<EquationWitness> first_difference(const ExactMatrix& lhs, const ExactMatrix& rhs,
                                                int n) {
    for (int r = 0; r < lhs.rows(); ++r)
        for (int c = 0; c < lhs.cols(); ++c) {
            if (lhs.at(r, c) == rhs.at(r, c)) continue;
            EquationWitness w;
            auto rd = tensor_digits(r, n, 3);
            auto cd = tensor_digits(c, n, 3);
            w.row = {rd[0], rd[1], rd[2]};
            w.col = {cd[0], cd[1], cd[2]};
            w.lhs = lhs.at(r, c);
            w.rhs = rhs.at(r, c);
            return w;
        }
    return std::nullopt;
}

}  // namespace

std::string EquationWitness::describe() const {
    auto triple = [](const std::array<int, 3>& t) {
        return "(" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," +
               std::to_string(t[2]) + ")";
    };
    return "at row " + triple(row) + " col " + triple(col) + ": lhs = " + lhs.to_string() +
           ", rhs = " + rhs.to_string();
}

std::optional<EquationWitness> check_ybe(const ExactMatrix& r) {
    const int n = leg_dim_of(r);
    const ExactMatrix r12 = embed_at(r, 1, 3, n);
    const ExactMatrix r23 = embed_at(r, 2, 3, n);
    const ExactMatrix r13 = embed_two_legs(r, 0, 2, 3, n);
    const ExactMatrix lhs = matmul(matmul(r12, r13), r23);
    const ExactMatrix rhs = matmul(matmul(r23, r13), r12);
    return first_difference(lhs, rhs, n);
}

std::optional<EquationWitness> check_braid(const ExactMatrix& b) {
    const int n = leg_dim_of(b);
    const ExactMatrix b1 = embed_at(b, 1, 3, n);
    const ExactMatrix b2 = embed_at(b, 2, 3, n);
    const ExactMatrix lhs = matmul(matmul(b1, b2), b1);
    const ExactMatrix rhs = matmul(matmul(b2, b1), b2);
    return first_difference(lhs, rhs, n);
}

RMatrix RMatrix::validated(ExactMatrix entries) {
    const int n = leg_dim_of(entries);
    ExactMatrix inv = [&] {
        try {
            return inverse(entries);
        } catch (const std::domain_error&) {
            throw std::domain_error("R-matrix is singular");
        }
    }();
    if (auto w = check_ybe(entries)) throw YbeError(*w);
    entries.tag_tensor(n, 2);
    inv.tag_tensor(n, 2);
    return RMatrix(n, std::move(entries), std::move(inv));
}

ExactMatrix flip_matrix(int n) {
    ExactMatrix p(n * n, n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) p.at(i * n + j, j * n + i) = Scalar::one();
    p.tag_tensor(n, 2);
    return p;
}

ExactMatrix flip_upper_indices(const ExactMatrix& m) {
    const int n = leg_dim_of(m);
    ExactMatrix out(n * n, n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int c = 0; c < n * n; ++c) out.at(i * n + j, c) = m.at(j * n + i, c);
    return out;
}

BraidMatrix BraidMatrix::from_r(const RMatrix& r) {
    ExactMatrix b = flip_upper_indices(r.matrix());
    if (auto w = check_braid(b))
        throw std::logic_error("braid relation violated for a validated R-matrix " +
                               w->describe());
    b.tag_tensor(r.dim(), 2);
    return BraidMatrix(r.dim(), std::move(b));
}

BraidMatrix BraidMatrix::validated(ExactMatrix entries) {
    const int n = leg_dim_of(entries);
    if (auto w = check_braid(entries))
        throw std::runtime_error("braid relation violated " + w->describe());
    entries.tag_tensor(n, 2);
    return BraidMatrix(n, std::move(entries));
}

// ---------------------------------------------------------------------------
// Catalog

RMatrix catalog_identity(int n) {
    if (n < 1) throw std::invalid_argument("catalog dimension must be positive");
    ExactMatrix m = ExactMatrix::identity(n * n);
    return RMatrix::validated(std::move(m));
}

RMatrix catalog_flip(int n) {
    if (n < 1) throw std::invalid_argument("catalog dimension must be positive");
    return RMatrix::validated(flip_matrix(n));
}

RMatrix catalog_diagonal(int n, const std::vector<Scalar>& params) {
    if (n < 1) throw std::invalid_argument("catalog dimension must be positive");
    if (static_cast<int>(params.size()) != n * n)
        throw std::invalid_argument("diagonal catalog entry needs n^2 parameters");
    ExactMatrix m(n * n, n * n);
    for (int i = 0; i < n * n; ++i) {
        if (params[static_cast<std::size_t>(i)].is_zero())
            throw std::invalid_argument("diagonal parameters must be nonzero");
        m.at(i, i) = params[static_cast<std::size_t>(i)];
    }
    return RMatrix::validated(std::move(m));
}

RMatrix catalog_sln_standard(int n) {
    if (n < 2) throw std::invalid_argument("sln catalog entries need n >= 2");
    const Scalar q = Scalar::q();
    const Scalar qdiff = q - q.inverse();  // q - q^-1
    ExactMatrix m(n * n, n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            m.at(i * n + j, i * n + j) = (i == j) ? q : Scalar::one();
            if (i < j) m.at(i * n + j, j * n + i) = qdiff;
        }
    return RMatrix::validated(std::move(m));
}

RMatrix catalog_sln_quantum_plane(int n) {
    const RMatrix std_r = catalog_sln_standard(n);
    return RMatrix::validated(std_r.matrix().scaled(Scalar::q()));
}

namespace {

std::vector<Scalar> parse_diagonal_params(const std::string& inner) {
    std::vector<Scalar> params;
    std::size_t start = 0;
    int depth = 0;
    for (std::size_t i = 0; i <= inner.size(); ++i) {
        if (i == inner.size() || (inner[i] == ',' && depth == 0)) {
            params.push_back(parse_scalar(inner.substr(start, i - start)));
            start = i + 1;
        } else if (inner[i] == '(') {
            ++depth;
        } else if (inner[i] == ')') {
            --depth;
        }
    }
    return params;
}

}  // namespace

RMatrix catalog_lookup(const std::string& name, int n) {
    if (name == "identity") return catalog_identity(n);
    if (name == "flip") return catalog_flip(n);
    if (name == "sln_standard") return catalog_sln_standard(n);
    if (name == "sln_quantum_plane") return catalog_sln_quantum_plane(n);
    if (name.rfind("diagonal(", 0) == 0 && name.back() == ')')
        return catalog_diagonal(
            n, parse_diagonal_params(name.substr(9, name.size() - 10)));
    throw std::invalid_argument("unknown catalog entry '" + name + "'");
}

std::vector<std::pair<std::string, std::string>> catalog_descriptions() {
    return {
        {"identity", "identity on V(x)V; braid matrix is the flip"},
        {"flip", "flip operator P; braid matrix is the identity"},
        {"diagonal(r00,r01,...)", "diagonal R^{ij}_{ij} = r_ij, n^2 nonzero parameters"},
        {"sln_standard", "standard U_q(sl_n) vector solution"},
        {"sln_quantum_plane", "sln_standard scaled by q; braid matrix has eigenvalue -1"},
    };
}

}  // namespace yba
