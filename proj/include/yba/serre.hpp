#pragma once

#include <map>

#include "yba/braided.hpp"
#include "yba/freealg.hpp"

namespace yba {

enum class RelatorSide : unsigned char { E, F };

/// Kernel vector of a braided factorial rendered as a degree-N word
/// polynomial: sum_a w^{a_1..a_N} E_{a_1}...E_{a_N} (or the F mirror).
struct Relator {
    RelatorSide side = RelatorSide::E;
    int n = 0;
    int degree = 0;
    std::vector<Scalar> coefficients;  // length n^degree, normalized
    FreePoly rendering;
};

/// Right-kernel relators of [N!]_B (condition [N!]_B w = 0), N >= 2.
std::vector<Relator> e_relators(const RMatrix& r, int N);
/// Left-kernel relators (condition eta [N!]_B = 0).
std::vector<Relator> f_relators(const RMatrix& r, int N);

/// Basis of ker [N!]_B modulo the two-sided placements of all lower-degree
/// kernels: sum over d < N and positions p of V^{(x)p} (x) K_d (x) V^{(x)rest}.
/// `lower` must hold the full E-side kernel basis for every degree in [2, N).
std::vector<Relator> new_relators(const RMatrix& r, int N,
                                  const std::map<int, std::vector<std::vector<Scalar>>>& lower);

/// Gram matrix of the skew pairing between all degree-d u-monomials (rows)
/// and degree-d t-monomials (columns), in canonical word order. Its left and
/// right nullspaces are the degree-d pieces of the pure null bi-ideals.
ExactMatrix tu_null_gram(const RMatrix& r, int d);

/// Rebuild the coefficient vector of a rendered relator polynomial.
std::vector<Scalar> relator_coefficients_from_poly(const FreePoly& p, int n, int degree,
                                                   RelatorSide side);

FreePoly render_relator(const std::vector<Scalar>& coeffs, int n, int degree, RelatorSide side);

}  // namespace yba
