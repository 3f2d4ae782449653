#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "yba/braided.hpp"

using namespace yba;

namespace {

BraidMatrix one_dim_braid(const std::string& value) {
    ExactMatrix m(1, 1);
    m.at(0, 0) = parse_scalar(value);
    return BraidMatrix::validated(std::move(m));
}

// Classical q-factorial prod_{k<=N} (1 + b + ... + b^{k-1}), built directly
// from scalar arithmetic as the one-dimensional reference value.
Scalar classical_factorial(const Scalar& b, int N) {
    Scalar prod = Scalar::one();
    for (int k = 1; k <= N; ++k) {
        Scalar sum;
        for (int i = 0; i < k; ++i) sum += b.pow(i);
        prod *= sum;
    }
    return prod;
}

}  // namespace

TEST_CASE("braided integer base cases") {
    const BraidMatrix b = braid_from_r(catalog_sln_standard(2));
    CHECK(braided_integer(b, 1) == ExactMatrix::identity(2).tag_tensor(2, 1));
    CHECK(braided_integer(b, 2) ==
          (ExactMatrix::identity(4) + b.matrix()).tag_tensor(2, 2));
}

TEST_CASE("one-dimensional braided integer expands to 1 + b + b^2") {
    const BraidMatrix b = one_dim_braid("q");
    const ExactMatrix n3 = braided_integer(b, 3);
    CHECK(n3.at(0, 0) == parse_scalar("1 + q + q^2"));
}

TEST_CASE("braided factorial base cases") {
    const BraidMatrix b = braid_from_r(catalog_sln_quantum_plane(2));
    const BraidedFactorial f2 = braided_factorial(b, 2);
    CHECK(f2.matrix == (ExactMatrix::identity(4) + b.matrix()).tag_tensor(2, 2));
    CHECK(f2.provenance == FactorialProvenance::ProductForm);

    CHECK(braided_factorial(b, 1).matrix == ExactMatrix::identity(2).tag_tensor(2, 1));
}

TEST_CASE("one-dimensional braided factorials match the classical q-factorial") {
    const BraidMatrix bq = one_dim_braid("q");
    CHECK(braided_factorial(bq, 3).matrix.at(0, 0) == parse_scalar("(1+q)*(1+q+q^2)"));
    for (int N = 1; N <= 5; ++N)
        CHECK(braided_factorial(bq, N).matrix.at(0, 0) == classical_factorial(Scalar::q(), N));

    const BraidMatrix bneg = one_dim_braid("-1");
    CHECK(braided_factorial(bneg, 2).matrix.at(0, 0) == Scalar::zero());

    const BraidMatrix brat = one_dim_braid("(q+1)/(q-1)");
    for (int N = 1; N <= 4; ++N)
        CHECK(braided_factorial(brat, N).matrix.at(0, 0) ==
              classical_factorial(parse_scalar("(q+1)/(q-1)"), N));
}

TEST_CASE("gram oracle base cases") {
    const BraidMatrix b = braid_from_r(catalog_sln_standard(2));
    GramOracle oracle(b);
    CHECK(oracle.gram(1) == ExactMatrix::identity(2).tag_tensor(2, 1));
    CHECK(oracle.gram(2) == (ExactMatrix::identity(4) + b.matrix()).tag_tensor(2, 2));
}

TEST_CASE("oracle equals the product recursion on small cases") {
    // The full sweep (N <= 4, n <= 3, all catalog families) runs in the
    // acceptance suite; this pins a representative sample.
    const std::vector<BraidMatrix> braids = {
        braid_from_r(catalog_sln_standard(2)),
        braid_from_r(catalog_sln_quantum_plane(2)),
        braid_from_r(catalog_flip(2)),
        braid_from_r(catalog_identity(2)),
        braid_from_r(catalog_diagonal(2, {parse_scalar("q"), parse_scalar("-1"),
                                          parse_scalar("2*q^2"), parse_scalar("q+1")})),
    };
    for (const auto& b : braids) {
        GramOracle oracle(b);
        for (int N = 1; N <= 4; ++N)
            CHECK(oracle.gram(N) == braided_factorial(b, N).matrix);
    }
}

TEST_CASE("flip braid gives N! times the identity") {
    const BraidMatrix b = braid_from_r(catalog_flip(2));  // B = identity
    CHECK(braided_factorial(b, 3).matrix == ExactMatrix::identity(8).scaled(Scalar(6)));
    CHECK(pairing_gram_oracle(b, 3) == ExactMatrix::identity(8).scaled(Scalar(6)));
}

TEST_CASE("factorials commute with diagonal scalar actions") {
    const BraidMatrix b = braid_from_r(catalog_sln_standard(2));
    const ExactMatrix f3 = braided_factorial(b, 3).matrix;
    ExactMatrix diag = ExactMatrix::identity(2).scaled(parse_scalar("q+1"));
    ExactMatrix action = diag;
    for (int i = 1; i < 3; ++i) action = kron(action, diag);
    CHECK(matmul(f3, action) == matmul(action, f3));
}

TEST_CASE("quantum plane [2!] kernel has dimension one") {
    const BraidMatrix b = braid_from_r(catalog_sln_quantum_plane(2));
    const ExactMatrix f2 = braided_factorial(b, 2).matrix;
    CHECK(right_nullspace(f2).dimension() == 1);

    // Hecke relation (B + 1)(B - q^2) = 0 pins the eigenvalues.
    const ExactMatrix lhs = matmul(
        ExactMatrix::identity(4) + b.matrix(),
        b.matrix() - ExactMatrix::identity(4).scaled(Scalar::q().pow(2)));
    CHECK(lhs.is_zero());
}

TEST_CASE("oracle-backed factorial carries its provenance") {
    const BraidMatrix b = braid_from_r(catalog_sln_standard(2));
    const BraidedFactorial f = braided_factorial_from_oracle(b, 3);
    CHECK(f.provenance == FactorialProvenance::OracleRecursion);
    CHECK(f.matrix == braided_factorial(b, 3).matrix);
}

TEST_CASE("degree bounds are enforced") {
    const BraidMatrix b = braid_from_r(catalog_identity(2));
    CHECK_THROWS_AS(braided_integer(b, 0), std::invalid_argument);
    CHECK_THROWS_AS(braided_factorial(b, 0), std::invalid_argument);
    CHECK_THROWS_AS(pairing_gram_oracle(b, 0), std::invalid_argument);
}
