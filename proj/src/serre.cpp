#include "yba/serre.hpp"

namespace yba {

FreePoly render_relator(const std::vector<Scalar>& coeffs, int n, int degree, RelatorSide side) {
    FreePoly p(side == RelatorSide::E ? Side::Minus : Side::Plus);
    for (std::size_t a = 0; a < coeffs.size(); ++a) {
        if (coeffs[a].is_zero()) continue;
        const std::vector<int> digits = tensor_digits(static_cast<int>(a), n, degree);
        std::vector<Letter> word;
        word.reserve(static_cast<std::size_t>(degree));
        for (int d : digits)
            word.push_back(side == RelatorSide::E ? letter_e(d) : letter_f(d));
        p.add_term(FreeMonomial(p.side(), std::move(word)), coeffs[a]);
    }
    return p;
}

std::vector<Scalar> relator_coefficients_from_poly(const FreePoly& p, int n, int degree,
                                                   RelatorSide side) {
    long long dim = 1;
    for (int i = 0; i < degree; ++i) dim *= n;
    std::vector<Scalar> coeffs(static_cast<std::size_t>(dim));
    const Gen expect = side == RelatorSide::E ? Gen::E : Gen::F;
    for (const auto& [m, c] : p.terms()) {
        if (static_cast<int>(m.length()) != degree)
            throw std::invalid_argument("relator polynomial is not homogeneous of the degree");
        std::vector<int> digits;
        digits.reserve(m.length());
        for (const Letter& l : m.word()) {
            if (l.kind != expect)
                throw std::invalid_argument("relator polynomial has a foreign generator");
            digits.push_back(l.i);
        }
        coeffs[static_cast<std::size_t>(tensor_index(digits, n))] = c;
    }
    return coeffs;
}

namespace {

std::vector<Relator> wrap_kernel(const KernelBasis& kb, const RMatrix& r, int N,
                                 RelatorSide side) {
    std::vector<Relator> out;
    out.reserve(kb.vectors.size());
    for (const auto& v : kb.vectors) {
        Relator rel;
        rel.side = side;
        rel.n = r.dim();
        rel.degree = N;
        rel.coefficients = v;
        rel.rendering = render_relator(v, r.dim(), N, side);
        out.push_back(std::move(rel));
    }
    return out;
}

}  // namespace

std::vector<Relator> e_relators(const RMatrix& r, int N) {
    if (N < 2) throw std::invalid_argument("relators start at degree 2");
    const BraidMatrix b = braid_from_r(r);
    const BraidedFactorial f = braided_factorial(b, N);
    return wrap_kernel(right_nullspace(f.matrix), r, N, RelatorSide::E);
}

std::vector<Relator> f_relators(const RMatrix& r, int N) {
    if (N < 2) throw std::invalid_argument("relators start at degree 2");
    const BraidMatrix b = braid_from_r(r);
    const BraidedFactorial f = braided_factorial(b, N);
    return wrap_kernel(left_nullspace(f.matrix), r, N, RelatorSide::F);
}

std::vector<Relator> new_relators(const RMatrix& r, int N,
                                  const std::map<int, std::vector<std::vector<Scalar>>>& lower) {
    if (N < 2) throw std::invalid_argument("relators start at degree 2");
    for (int d = 2; d < N; ++d)
        if (!lower.count(d))
            throw std::invalid_argument("lower kernel basis missing for degree " +
                                        std::to_string(d));
    const int n = r.dim();
    long long dim = 1;
    for (int i = 0; i < N; ++i) dim *= n;

    // Spanning set of the ideal component: every lower-degree kernel vector
    // inserted at every tensor position with free legs on both sides.
    LinearSpan span(static_cast<int>(dim));
    for (int d = 2; d < N; ++d) {
        long long middle = 1;
        for (int i = 0; i < d; ++i) middle *= n;
        for (const auto& v : lower.at(d)) {
            if (static_cast<long long>(v.size()) != middle)
                throw std::invalid_argument("lower kernel vector has wrong dimension");
            for (int p = 0; p + d <= N; ++p) {
                long long left = 1;
                for (int i = 0; i < p; ++i) left *= n;
                long long right = 1;
                for (int i = 0; i < N - d - p; ++i) right *= n;
                for (long long L = 0; L < left; ++L)
                    for (long long Rt = 0; Rt < right; ++Rt) {
                        std::vector<Scalar> w(static_cast<std::size_t>(dim));
                        for (long long a = 0; a < middle; ++a)
                            w[static_cast<std::size_t>((L * middle + a) * right + Rt)] =
                                v[static_cast<std::size_t>(a)];
                        span.insert(std::move(w));
                    }
            }
        }
    }

    const BraidMatrix b = braid_from_r(r);
    const BraidedFactorial f = braided_factorial(b, N);
    const KernelBasis kb = right_nullspace(f.matrix);

    std::vector<Relator> out;
    for (const auto& v : kb.vectors) {
        std::vector<Scalar> residue = span.reduce(v);
        bool zero = true;
        for (const auto& c : residue)
            if (!c.is_zero()) {
                zero = false;
                break;
            }
        if (zero) continue;
        Relator rel;
        rel.side = RelatorSide::E;
        rel.n = n;
        rel.degree = N;
        rel.coefficients = normalize_kernel_vector(residue);
        rel.rendering = render_relator(rel.coefficients, n, N, RelatorSide::E);
        out.push_back(std::move(rel));
        span.insert(std::move(residue));
    }
    return out;
}

ExactMatrix tu_null_gram(const RMatrix& r, int d) {
    if (d < 1) throw std::invalid_argument("gram degree must be positive");
    PairingEvaluator ev(r);
    const std::vector<FreeMonomial> urows = enumerate_words(Gen::U, d, r.dim());
    const std::vector<FreeMonomial> tcols = enumerate_words(Gen::T, d, r.dim());
    ExactMatrix g(static_cast<int>(urows.size()), static_cast<int>(tcols.size()));
    for (std::size_t i = 0; i < urows.size(); ++i)
        for (std::size_t j = 0; j < tcols.size(); ++j) {
            Scalar v = ev.pair(urows[i], tcols[j]);
            if (!v.is_zero()) g.at(static_cast<int>(i), static_cast<int>(j)) = std::move(v);
        }
    return g;
}

}  // namespace yba
