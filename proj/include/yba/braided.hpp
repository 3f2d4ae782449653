#pragma once

#include <mutex>
#include <vector>

#include "yba/rmatrix.hpp"

namespace yba {

/// Braided integer [N]_B = sum_{k=1..N} B_k B_{k+1} ... B_{N-1} on V^{(x)N};
/// the k = N summand is the empty product (identity).
ExactMatrix braided_integer(const BraidMatrix& b, int N);

enum class FactorialProvenance { ProductForm, OracleRecursion };

struct BraidedFactorial {
    int n = 0;
    int N = 0;
    ExactMatrix matrix;
    FactorialProvenance provenance = FactorialProvenance::ProductForm;
};

/// Braided factorial [N!]_B with [1!]_B = id and
/// [N!]_B = [N]_B ([((N-1))!]_B (x) id). Equals the degree-N Gram matrix of
/// the skew pairing between F-words and E-words; the pairing-recursion
/// oracle below is the arbiter for that identification.
BraidedFactorial braided_factorial(const BraidMatrix& b, int N);

/// Independent Gram-matrix oracle: evaluates the pairing recursion by its
/// verbatim index contraction (a sum over chains of B entries that move one
/// slot to the last position), memoized per degree. Deliberately shares no
/// code with braided_integer / braided_factorial.
class GramOracle {
public:
    explicit GramOracle(BraidMatrix b);

    /// G_N with rows indexed by F-word indices, columns by E-word indices.
    const ExactMatrix& gram(int N);

private:
    ExactMatrix compute(int N) const;

    BraidMatrix b_;
    std::vector<ExactMatrix> memo_;  // memo_[k] holds G_{k+1}
    std::mutex mu_;
};

/// One-shot oracle evaluation (fresh memo table).
ExactMatrix pairing_gram_oracle(const BraidMatrix& b, int N);

/// Factorial carrying the oracle-recursion provenance; used when
/// cross-checking the product form.
BraidedFactorial braided_factorial_from_oracle(const BraidMatrix& b, int N);

}  // namespace yba
