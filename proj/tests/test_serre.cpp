#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "yba/serre.hpp"

using namespace yba;

namespace {

RMatrix one_dim_r(const std::string& value) {
    ExactMatrix m(1, 1);
    m.at(0, 0) = parse_scalar(value);
    return RMatrix::validated(std::move(m));
}

bool vector_is_zero(const std::vector<Scalar>& v) {
    for (const auto& c : v)
        if (!c.is_zero()) return false;
    return true;
}

}  // namespace

TEST_CASE("one-dimensional relators at a degenerate point") {
    const RMatrix r = one_dim_r("-1");
    const auto e2 = e_relators(r, 2);
    REQUIRE(e2.size() == 1);
    CHECK(e2[0].side == RelatorSide::E);
    CHECK(e2[0].coefficients == std::vector<Scalar>{Scalar::one()});
    CHECK(e2[0].rendering.to_string() == "E[0]*E[0]");

    const auto f2 = f_relators(r, 2);
    REQUIRE(f2.size() == 1);
    CHECK(f2[0].rendering.to_string() == "F[0]*F[0]");
}

TEST_CASE("generic q gives no one-dimensional relators") {
    const RMatrix r = one_dim_r("q");
    for (int N = 2; N <= 5; ++N) {
        CHECK(e_relators(r, N).empty());
        CHECK(f_relators(r, N).empty());
    }
}

TEST_CASE("quantum plane degree-2 relator") {
    const RMatrix r = catalog_sln_quantum_plane(2);
    const auto e2 = e_relators(r, 2);
    REQUIRE(e2.size() == 1);
    const std::vector<Scalar> expected{Scalar::zero(), Scalar::q(), Scalar(-1), Scalar::zero()};
    CHECK(e2[0].coefficients == expected);
    CHECK(e2[0].rendering.to_string() == "q*E[0]*E[1] - E[1]*E[0]");

    const auto f2 = f_relators(r, 2);
    REQUIRE(f2.size() == 1);
    CHECK(f2[0].rendering.to_string() == "q*F[0]*F[1] - F[1]*F[0]");

    // Kernel conditions hold exactly.
    const BraidMatrix b = braid_from_r(r);
    const ExactMatrix f2m = braided_factorial(b, 2).matrix;
    CHECK(vector_is_zero(matvec(f2m, e2[0].coefficients)));
    CHECK(vector_is_zero(vecmat(f2[0].coefficients, f2m)));
}

TEST_CASE("left and right relator counts agree") {
    for (const RMatrix& r : {catalog_sln_quantum_plane(2), catalog_flip(2), one_dim_r("-1")})
        for (int N = 2; N <= 3; ++N)
            CHECK(e_relators(r, N).size() == f_relators(r, N).size());
}

TEST_CASE("new_relators drops consequences of lower degrees") {
    // n = 1, R = [[-1]]: ker [3!] is everything, but V(x)K2 + K2(x)V already
    // spans it.
    const RMatrix r = one_dim_r("-1");
    std::map<int, std::vector<std::vector<Scalar>>> lower;
    std::vector<std::vector<Scalar>> k2;
    for (const auto& rel : e_relators(r, 2)) k2.push_back(rel.coefficients);
    lower[2] = k2;
    CHECK(new_relators(r, 3, lower).empty());

    // Degree bookkeeping: missing lower degrees are an error.
    CHECK_THROWS_AS(new_relators(r, 4, lower), std::invalid_argument);
    std::vector<std::vector<Scalar>> k3;
    for (const auto& rel : e_relators(r, 3)) k3.push_back(rel.coefficients);
    lower[3] = k3;
    CHECK(new_relators(r, 4, lower).empty());
}

TEST_CASE("new_relators at degree 2 returns the full kernel") {
    const RMatrix r = catalog_sln_quantum_plane(2);
    const auto fresh = new_relators(r, 2, {});
    REQUIRE(fresh.size() == 1);
    CHECK(fresh[0].rendering.to_string() == "q*E[0]*E[1] - E[1]*E[0]");
}

TEST_CASE("quantum plane has no new relators at degree 3") {
    const RMatrix r = catalog_sln_quantum_plane(2);
    std::map<int, std::vector<std::vector<Scalar>>> lower;
    std::vector<std::vector<Scalar>> k2;
    for (const auto& rel : e_relators(r, 2)) k2.push_back(rel.coefficients);
    lower[2] = k2;
    CHECK(new_relators(r, 3, lower).empty());

    // Independent dimension cross-check: the two-sided placements of the
    // degree-2 kernel span exactly ker [3!].
    LinearSpan span(8);
    for (const auto& v : k2) {
        for (int tail = 0; tail < 2; ++tail) {
            std::vector<Scalar> w(8);
            for (int a = 0; a < 4; ++a) w[static_cast<std::size_t>(a * 2 + tail)] = v[a];
            span.insert(std::move(w));
        }
        for (int head = 0; head < 2; ++head) {
            std::vector<Scalar> w(8);
            for (int a = 0; a < 4; ++a) w[static_cast<std::size_t>(head * 4 + a)] = v[a];
            span.insert(std::move(w));
        }
    }
    const int kernel_dim = static_cast<int>(e_relators(r, 3).size());
    CHECK(span.dimension() == kernel_dim);
}

TEST_CASE("tu_null_gram degree 1 is the rearranged R-matrix") {
    const RMatrix r = catalog_sln_standard(2);
    const ExactMatrix g = tu_null_gram(r, 1);
    REQUIRE(g.rows() == 4);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l)
                    CHECK(g.at(i * 2 + j, k * 2 + l) == r.entry(i, k, j, l));

    // The rearrangement is not full-rank for triangular R: u^1_0 and t^0_1
    // pair to zero with everything at degree 1.
    CHECK(left_nullspace(g).dimension() == 1);
    CHECK(right_nullspace(g).dimension() == 1);
}

TEST_CASE("tu_null_gram degree 1 for the flip is a permutation") {
    const RMatrix r = catalog_flip(2);
    const ExactMatrix g = tu_null_gram(r, 1);
    CHECK(rank(g) == 4);
    CHECK(right_nullspace(g).dimension() == 0);
    CHECK(left_nullspace(g).dimension() == 0);
}

TEST_CASE("tu_null_gram in one dimension is a power of r") {
    // Grouplike generators pair like characters: <u^d, t^d> = r^(d*d).
    const RMatrix r = one_dim_r("3*q");
    for (int d = 1; d <= 3; ++d) {
        const ExactMatrix g = tu_null_gram(r, d);
        REQUIRE(g.rows() == 1);
        CHECK(g.at(0, 0) == parse_scalar("3*q").pow(d * d));
    }
    CHECK(right_nullspace(tu_null_gram(r, 2)).dimension() == 0);
}

TEST_CASE("RTT relator components lie in the degree-2 gram kernel") {
    const int n = 2;
    const RMatrix r = catalog_sln_standard(n);
    const ExactMatrix g = tu_null_gram(r, 2);

    // Coefficient vector of each RTT component over the t-word basis.
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    std::vector<Scalar> v(static_cast<std::size_t>(n * n * n * n));
                    for (int m = 0; m < n; ++m)
                        for (int w = 0; w < n; ++w) {
                            v[static_cast<std::size_t>((m * n + k) * n * n + (w * n + l))] +=
                                r.entry(i, j, m, w);
                            v[static_cast<std::size_t>((j * n + w) * n * n + (i * n + m))] -=
                                r.entry(m, w, k, l);
                        }
                    CHECK(vector_is_zero(matvec(g, v)));
                }
}

TEST_CASE("degree-3 relators pair to zero against F-words with u-word tails") {
    const int n = 2;
    const RMatrix r = catalog_sln_quantum_plane(n);
    PairingEvaluator ev(r);
    const auto rels = e_relators(r, 3);
    REQUIRE(rels.size() == 4);

    std::vector<FreeMonomial> probes;
    for (const auto& f : enumerate_words(Gen::F, 3, n)) {
        probes.push_back(f);
        for (const auto& u : enumerate_words(Gen::U, 1, n)) probes.push_back(f.concat(u));
    }
    for (const auto& rel : rels)
        for (const auto& x : probes)
            CHECK(ev.pair(FreePoly(x), rel.rendering) == Scalar::zero());
}

TEST_CASE("relator renderings round-trip to their coefficient vectors") {
    const RMatrix r = catalog_sln_quantum_plane(2);
    for (int N = 2; N <= 3; ++N)
        for (const auto& rel : e_relators(r, N)) {
            const FreePoly parsed = parse_free_poly(rel.rendering.to_string(), Side::Minus);
            CHECK(relator_coefficients_from_poly(parsed, rel.n, rel.degree, RelatorSide::E) ==
                  rel.coefficients);
        }
    for (const auto& rel : f_relators(r, 2)) {
        const FreePoly parsed = parse_free_poly(rel.rendering.to_string(), Side::Plus);
        CHECK(relator_coefficients_from_poly(parsed, rel.n, rel.degree, RelatorSide::F) ==
              rel.coefficients);
    }
}

TEST_CASE("relator degree bounds") {
    const RMatrix r = catalog_sln_quantum_plane(2);
    CHECK_THROWS_AS(e_relators(r, 1), std::invalid_argument);
    CHECK_THROWS_AS(f_relators(r, 0), std::invalid_argument);
    CHECK_THROWS_AS(tu_null_gram(r, 0), std::invalid_argument);
}
