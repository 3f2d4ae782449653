#include "yba/braided.hpp"

namespace yba {

ExactMatrix braided_integer(const BraidMatrix& b, int N) {
    if (N < 1) throw std::invalid_argument("braided integer needs N >= 1");
    const int n = b.dim();
    int dim = 1;
    for (int i = 0; i < N; ++i) dim *= n;
    // partial_k = B_k B_{k+1} ... B_{N-1}, built right to left.
    ExactMatrix partial = ExactMatrix::identity(dim);
    ExactMatrix sum = partial;  // k = N term
    for (int k = N - 1; k >= 1; --k) {
        partial = matmul(embed_at(b.matrix(), k, N, n), partial);
        sum = sum + partial;
    }
    sum.tag_tensor(n, N);
    return sum;
}

BraidedFactorial braided_factorial(const BraidMatrix& b, int N) {
    if (N < 1) throw std::invalid_argument("braided factorial needs N >= 1");
    const int n = b.dim();
    ExactMatrix fact = ExactMatrix::identity(n);
    for (int m = 2; m <= N; ++m)
        fact = matmul(braided_integer(b, m), kron(fact, ExactMatrix::identity(n)));
    fact.tag_tensor(n, N);
    return BraidedFactorial{n, N, std::move(fact), FactorialProvenance::ProductForm};
}

GramOracle::GramOracle(BraidMatrix b) : b_(std::move(b)) {}

const ExactMatrix& GramOracle::gram(int N) {
    if (N < 1) throw std::invalid_argument("gram oracle needs N >= 1");
    std::lock_guard<std::mutex> lock(mu_);
    while (static_cast<int>(memo_.size()) < N)
        memo_.push_back(compute(static_cast<int>(memo_.size()) + 1));
    return memo_[static_cast<std::size_t>(N - 1)];
}

ExactMatrix GramOracle::compute(int N) const {
    const int n = b_.dim();
    if (N == 1) {
        ExactMatrix g = ExactMatrix::identity(n);
        g.tag_tensor(n, 1);
        return g;
    }
    const ExactMatrix& prev = memo_[static_cast<std::size_t>(N - 2)];  // G_{N-1}
    int dim = 1;
    for (int i = 0; i < N; ++i) dim *= n;
    ExactMatrix g(dim, dim);

    std::vector<int> p(static_cast<std::size_t>(N), 0);  // p_k..p_{N-1}, 1-based slots

    for (int row = 0; row < dim; ++row) {
        const std::vector<int> qv = tensor_digits(row, n, N);  // q_1..q_N (0-based storage)
        for (int col = 0; col < dim; ++col) {
            const std::vector<int> av = tensor_digits(col, n, N);  // a_1..a_N
            Scalar acc;

            // k = N term: chain is d^{q_N}_{a_N}.
            if (qv[static_cast<std::size_t>(N - 1)] == av[static_cast<std::size_t>(N - 1)]) {
                std::vector<int> grow(qv.begin(), qv.end() - 1);
                std::vector<int> gcol(av.begin(), av.end() - 1);
                acc += prev.at(tensor_index(grow, n), tensor_index(gcol, n));
            }

            // k < N: chains B^{q_k q_{k+1}}_{p_k b_{k+1}} B^{b_{k+1} q_{k+2}}_{p_{k+1} b_{k+2}}
            //        ... B^{b_{N-1} q_N}_{p_{N-1} a_N}, summed over all p and b.
            for (int k = 1; k <= N - 1; ++k) {
                // walk(j, upper_first, coef): factor j in 0..N-k-1; upper_first is
                // q_k for j = 0 and the contracted b index afterwards.
                auto walk = [&](auto&& self, int j, int upper_first, const Scalar& coef) -> void {
                    const int slot = k + j;  // 1-based slot of q_{slot+1} and p_{slot}
                    const int upper_second = qv[static_cast<std::size_t>(slot)];  // q_{k+j+1}
                    const bool last = (j == N - k - 1);
                    for (int pv = 0; pv < n; ++pv) {
                        if (last) {
                            const Scalar& f = b_.matrix().at(
                                upper_first * n + upper_second,
                                pv * n + av[static_cast<std::size_t>(N - 1)]);
                            if (f.is_zero()) continue;
                            p[static_cast<std::size_t>(slot - 1)] = pv;
                            // G_{N-1} argument (q_1..q_{k-1}, p_k..p_{N-1}).
                            std::vector<int> grow(static_cast<std::size_t>(N - 1));
                            for (int t = 0; t < k - 1; ++t)
                                grow[static_cast<std::size_t>(t)] = qv[static_cast<std::size_t>(t)];
                            for (int t = k - 1; t < N - 1; ++t)
                                grow[static_cast<std::size_t>(t)] = p[static_cast<std::size_t>(t)];
                            std::vector<int> gcol(av.begin(), av.end() - 1);
                            const Scalar& gprev =
                                prev.at(tensor_index(grow, n), tensor_index(gcol, n));
                            if (gprev.is_zero()) continue;
                            acc += coef * f * gprev;
                        } else {
                            for (int bv = 0; bv < n; ++bv) {
                                const Scalar& f = b_.matrix().at(
                                    upper_first * n + upper_second, pv * n + bv);
                                if (f.is_zero()) continue;
                                p[static_cast<std::size_t>(slot - 1)] = pv;
                                self(self, j + 1, bv, coef * f);
                            }
                        }
                    }
                };
                walk(walk, 0, qv[static_cast<std::size_t>(k - 1)], Scalar::one());
            }

            if (!acc.is_zero()) g.at(row, col) = std::move(acc);
        }
    }
    g.tag_tensor(n, N);
    return g;
}

ExactMatrix pairing_gram_oracle(const BraidMatrix& b, int N) {
    GramOracle oracle(b);
    return oracle.gram(N);
}

BraidedFactorial braided_factorial_from_oracle(const BraidMatrix& b, int N) {
    return BraidedFactorial{b.dim(), N, pairing_gram_oracle(b, N),
                            FactorialProvenance::OracleRecursion};
}

}  // namespace yba
