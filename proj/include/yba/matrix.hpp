#pragma once

#include <optional>
#include <vector>

#include "yba/scalar.hpp"

namespace yba {

/// Tensor-power annotation for square matrices acting on V^{(x)N}, dim V = n.
struct TensorShape {
    int dim;   // n
    int legs;  // N
};

/// Dense matrix over Q(q). Composite indices on tensor powers are big-endian:
/// the multi-index (i_1,...,i_N) maps to i_1*n^{N-1} + ... + i_N.
class ExactMatrix {
public:
    ExactMatrix() : rows_(0), cols_(0) {}
    ExactMatrix(int rows, int cols);

    static ExactMatrix identity(int k);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Scalar& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Scalar& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

    const std::optional<TensorShape>& tensor_shape() const { return shape_; }
    ExactMatrix& tag_tensor(int n, int legs);

    bool operator==(const ExactMatrix& o) const;
    bool operator!=(const ExactMatrix& o) const { return !(*this == o); }

    ExactMatrix operator+(const ExactMatrix& o) const;
    ExactMatrix operator-(const ExactMatrix& o) const;
    ExactMatrix scaled(const Scalar& c) const;
    ExactMatrix transposed() const;

    bool is_zero() const;

private:
    int rows_, cols_;
    std::vector<Scalar> a_;
    std::optional<TensorShape> shape_;
};

/// Exact matrix product; throws std::invalid_argument on a shape mismatch.
ExactMatrix matmul(const ExactMatrix& a, const ExactMatrix& b);

/// Kronecker product with big-endian composite indices:
/// (A(x)B)[(i,k),(j,l)] = A[i,j]*B[k,l].
ExactMatrix kron(const ExactMatrix& a, const ExactMatrix& b);

/// Embed a two-leg operator at adjacent legs (m, m+1), 1 <= m <= N-1:
/// id^{(x)(m-1)} (x) B (x) id^{(x)(N-m-1)}.
ExactMatrix embed_at(const ExactMatrix& b, int m, int N, int n);

/// Embed a two-leg operator at arbitrary legs a < b (0-based) of V^{(x)N}.
ExactMatrix embed_two_legs(const ExactMatrix& m2, int a, int b, int N, int n);

/// Matrix-vector and vector-matrix products for kernel verification.
std::vector<Scalar> matvec(const ExactMatrix& m, const std::vector<Scalar>& v);
std::vector<Scalar> vecmat(const std::vector<Scalar>& v, const ExactMatrix& m);

enum class KernelSide { Left, Right };

/// Basis of a null space: independent vectors in normalized reduced form.
struct KernelBasis {
    KernelSide side;
    int ambient = 0;
    std::vector<std::vector<Scalar>> vectors;

    int dimension() const { return static_cast<int>(vectors.size()); }
};

/// Basis of { v : M v = 0 } over Q(q); empty on full column rank.
KernelBasis right_nullspace(const ExactMatrix& m);
/// Basis of { v : v^T M = 0 } over Q(q).
KernelBasis left_nullspace(const ExactMatrix& m);

/// Rank over Q(q), computed by the same elimination as the nullspaces.
int rank(const ExactMatrix& m);

/// Inverse over Q(q); throws std::domain_error when singular.
ExactMatrix inverse(const ExactMatrix& m);

/// Rescale a vector over Q(q) to its canonical representative: polynomial
/// entries with no common polynomial factor, integer content 1, and a
/// positive leading coefficient on the first nonzero entry.
std::vector<Scalar> normalize_kernel_vector(std::vector<Scalar> v);

/// Incrementally maintained row space in reduced echelon form.
class LinearSpan {
public:
    explicit LinearSpan(int dim) : dim_(dim) {}

    /// Residue of v after reduction against the span.
    std::vector<Scalar> reduce(std::vector<Scalar> v) const;
    /// Reduce and, if the residue is nonzero, add it; true when dim grew.
    bool insert(std::vector<Scalar> v);

    int dimension() const { return static_cast<int>(rows_.size()); }
    int ambient() const { return dim_; }

private:
    int dim_;
    std::vector<std::vector<Scalar>> rows_;  // pivot entry 1, pivots strictly increasing
    std::vector<int> pivots_;
};

/// Composite index helpers for the big-endian encoding.
std::vector<int> tensor_digits(int index, int n, int legs);
int tensor_index(const std::vector<int>& digits, int n);

}  // namespace yba
