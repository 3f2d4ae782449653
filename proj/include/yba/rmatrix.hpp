#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "yba/matrix.hpp"

namespace yba {

/// First differing entry of a failed operator identity on V^{(x)3},
/// reported as row/column triples of leg indices.
struct EquationWitness {
    std::array<int, 3> row{};
    std::array<int, 3> col{};
    Scalar lhs;
    Scalar rhs;

    std::string describe() const;
};

/// pass == empty optional; fail carries the first differing component.
std::optional<EquationWitness> check_ybe(const ExactMatrix& r);
std::optional<EquationWitness> check_braid(const ExactMatrix& b);

class YbeError : public std::runtime_error {
public:
    YbeError(const EquationWitness& w)
        : std::runtime_error("Yang-Baxter equation violated " + w.describe()), witness_(w) {}
    const EquationWitness& witness() const { return witness_; }

private:
    EquationWitness witness_;
};

/// Validated invertible solution of the Yang-Baxter equation on V(x)V.
/// Entry R^{ij}_{kl} sits at composite row (i,j), composite column (k,l).
class RMatrix {
public:
    /// Runs both mandatory checks; throws std::domain_error (singular),
    /// YbeError (with witness) or std::invalid_argument (bad shape).
    static RMatrix validated(ExactMatrix entries);

    int dim() const { return n_; }
    const ExactMatrix& matrix() const { return mat_; }
    const ExactMatrix& inverse_matrix() const { return inv_; }
    const Scalar& entry(int i, int j, int k, int l) const {
        return mat_.at(i * n_ + j, k * n_ + l);
    }

private:
    RMatrix(int n, ExactMatrix mat, ExactMatrix inv)
        : n_(n), mat_(std::move(mat)), inv_(std::move(inv)) {}
    int n_;
    ExactMatrix mat_;
    ExactMatrix inv_;
};

/// Braid matrix B^{ij}_{kl} = R^{ji}_{kl}, i.e. B = P R with P the flip.
/// Satisfies B1 B2 B1 = B2 B1 B2 by construction from a validated R.
class BraidMatrix {
public:
    static BraidMatrix from_r(const RMatrix& r);
    /// Wrap an explicit matrix; verifies the braid relation.
    static BraidMatrix validated(ExactMatrix entries);

    int dim() const { return n_; }
    const ExactMatrix& matrix() const { return mat_; }
    const Scalar& entry(int i, int j, int k, int l) const {
        return mat_.at(i * n_ + j, k * n_ + l);
    }

private:
    BraidMatrix(int n, ExactMatrix mat) : n_(n), mat_(std::move(mat)) {}
    int n_;
    ExactMatrix mat_;
};

inline BraidMatrix braid_from_r(const RMatrix& r) { return BraidMatrix::from_r(r); }

/// The flip operator P^{ij}_{kl} = d^i_l d^j_k.
ExactMatrix flip_matrix(int n);

/// Transpose the upper (row) index pair: out^{ij}_{kl} = in^{ji}_{kl}.
ExactMatrix flip_upper_indices(const ExactMatrix& m);

// Built-in catalog. Every entry is returned validated.
RMatrix catalog_identity(int n);
RMatrix catalog_flip(int n);
/// Diagonal R^{ij}_{ij} = r_{ij}; params row-major over (i,j), all nonzero.
RMatrix catalog_diagonal(int n, const std::vector<Scalar>& params);
/// Standard U_q(sl_n) vector solution: q on matching pairs, 1 on off-diagonal
/// transpositions, q - q^-1 on the upper-triangular part.
RMatrix catalog_sln_standard(int n);
/// sln_standard rescaled by q, the unique monomial making -1 a braid
/// eigenvalue (so that degree-2 relators exist).
RMatrix catalog_sln_quantum_plane(int n);

/// Resolve a catalog name; "diagonal(expr,...)" carries its parameters
/// inline. Throws std::invalid_argument for unknown names or bad dimensions.
RMatrix catalog_lookup(const std::string& name, int n);

std::vector<std::pair<std::string, std::string>> catalog_descriptions();

}  // namespace yba
