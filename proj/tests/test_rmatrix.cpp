#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "yba/rmatrix.hpp"

using namespace yba;

namespace {

std::vector<Scalar> random_nonzero_params(std::mt19937& rng, int count) {
    std::uniform_int_distribution<int> coef(1, 3);
    std::uniform_int_distribution<int> sign(0, 1);
    std::uniform_int_distribution<int> deg(0, 2);
    std::vector<Scalar> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        Scalar s = Scalar(coef(rng)) * Scalar::q().pow(deg(rng));
        if (sign(rng)) s = -s;
        out.push_back(std::move(s));
    }
    return out;
}

}  // namespace

TEST_CASE("identity and flip solve the Yang-Baxter equation") {
    for (int n = 1; n <= 3; ++n) {
        CHECK_FALSE(check_ybe(ExactMatrix::identity(n * n)).has_value());
        CHECK_FALSE(check_ybe(flip_matrix(n)).has_value());
    }
}

TEST_CASE("diagonal R-matrices pass all checks") {
    std::mt19937 rng(5u);
    for (int n = 2; n <= 3; ++n)
        for (int iter = 0; iter < 5; ++iter) {
            const RMatrix r = catalog_diagonal(n, random_nonzero_params(rng, n * n));
            CHECK_FALSE(check_ybe(r.matrix()).has_value());
            const BraidMatrix b = braid_from_r(r);
            CHECK_FALSE(check_braid(b.matrix()).has_value());
        }
}

TEST_CASE("catalog sln entries validate") {
    for (int n = 2; n <= 3; ++n) {
        const RMatrix std_r = catalog_sln_standard(n);
        CHECK_FALSE(check_ybe(std_r.matrix()).has_value());
        CHECK_FALSE(check_braid(braid_from_r(std_r).matrix()).has_value());
        const RMatrix qp = catalog_sln_quantum_plane(n);
        CHECK_FALSE(check_ybe(qp.matrix()).has_value());
    }
    CHECK_THROWS_AS(catalog_sln_standard(1), std::invalid_argument);
}

TEST_CASE("perturbing one sl2 entry breaks the Yang-Baxter equation") {
    ExactMatrix m = catalog_sln_standard(2).matrix();
    m.at(0, 0) += Scalar::one();
    const auto witness = check_ybe(m);
    REQUIRE(witness.has_value());
    CHECK(witness->lhs != witness->rhs);
    CHECK_THROWS_AS(RMatrix::validated(m), YbeError);

    // Doubling entry (0,0) fails as well.
    ExactMatrix d = catalog_sln_standard(2).matrix();
    d.at(0, 0) *= Scalar(2);
    CHECK(check_ybe(d).has_value());
}

TEST_CASE("check_ybe rejects bad shapes") {
    CHECK_THROWS_AS(check_ybe(ExactMatrix(3, 4)), std::invalid_argument);
    CHECK_THROWS_AS(check_ybe(ExactMatrix(3, 3)), std::invalid_argument);
}

TEST_CASE("braid_from_r on reference points") {
    // R = identity gives the flip.
    CHECK(braid_from_r(catalog_identity(2)).matrix() == flip_matrix(2));
    // R = flip gives the identity.
    CHECK(braid_from_r(catalog_flip(2)).matrix() ==
          ExactMatrix::identity(4).tag_tensor(2, 2));
    // One dimension: no index transposition.
    const RMatrix r1 = catalog_diagonal(1, {parse_scalar("3*q")});
    CHECK(braid_from_r(r1).matrix().at(0, 0) == parse_scalar("3*q"));
}

TEST_CASE("upper-index transposition is an involution") {
    const ExactMatrix r = catalog_sln_standard(3).matrix();
    CHECK(flip_upper_indices(flip_upper_indices(r)) == r);
}

TEST_CASE("diagonal braid matrix closed form") {
    std::mt19937 rng(11u);
    const int n = 3;
    const auto params = random_nonzero_params(rng, n * n);
    const RMatrix r = catalog_diagonal(n, params);
    const BraidMatrix b = braid_from_r(r);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    const Scalar expected = (i == l && j == k)
                                                ? params[static_cast<std::size_t>(j * n + i)]
                                                : Scalar::zero();
                    CHECK(b.entry(i, j, k, l) == expected);
                }
}

TEST_CASE("singular input is rejected") {
    ExactMatrix z(4, 4);
    CHECK_THROWS_AS(RMatrix::validated(z), std::domain_error);
}

TEST_CASE("quantum plane braid matrix has a one-dimensional -1 eigenspace") {
    const RMatrix qp = catalog_sln_quantum_plane(2);
    const BraidMatrix b = braid_from_r(qp);
    const ExactMatrix one_plus_b = ExactMatrix::identity(4) + b.matrix();
    const KernelBasis kb = right_nullspace(one_plus_b);
    REQUIRE(kb.dimension() == 1);
    const std::vector<Scalar> expected{Scalar::zero(), Scalar::q(), Scalar(-1), Scalar::zero()};
    CHECK(kb.vectors[0] == expected);
}

TEST_CASE("catalog_lookup resolves names and parameters") {
    CHECK(catalog_lookup("identity", 2).matrix() ==
          ExactMatrix::identity(4).tag_tensor(2, 2));
    CHECK(catalog_lookup("flip", 3).matrix() == flip_matrix(3));
    const RMatrix d = catalog_lookup("diagonal(q, 1, 1, q^2)", 2);
    CHECK(d.entry(0, 0, 0, 0) == Scalar::q());
    CHECK(d.entry(1, 1, 1, 1) == Scalar::q() * Scalar::q());
    CHECK_THROWS_AS(catalog_lookup("nope", 2), std::invalid_argument);
    CHECK_THROWS_AS(catalog_lookup("diagonal(q)", 2), std::invalid_argument);
    CHECK_THROWS_AS(catalog_lookup("diagonal(q, 0, 1, 1)", 2), std::invalid_argument);
}
