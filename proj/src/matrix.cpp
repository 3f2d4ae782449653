#include "yba/matrix.hpp"

#include <algorithm>

namespace yba {

ExactMatrix::ExactMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
    a_.assign(static_cast<std::size_t>(rows) * cols, Scalar());
}

ExactMatrix ExactMatrix::identity(int k) {
    ExactMatrix m(k, k);
    for (int i = 0; i < k; ++i) m.at(i, i) = Scalar::one();
    return m;
}

ExactMatrix& ExactMatrix::tag_tensor(int n, int legs) {
    long long size = 1;
    for (int i = 0; i < legs; ++i) size *= n;
    if (size != rows_ || size != cols_)
        throw std::invalid_argument("tensor tag inconsistent with matrix shape");
    shape_ = TensorShape{n, legs};
    return *this;
}

bool ExactMatrix::operator==(const ExactMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("matrix addition shape mismatch");
    ExactMatrix r(*this);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
    return r;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("matrix subtraction shape mismatch");
    ExactMatrix r(*this);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
    return r;
}

ExactMatrix ExactMatrix::scaled(const Scalar& c) const {
    ExactMatrix r(*this);
    for (auto& e : r.a_) e *= c;
    return r;
}

ExactMatrix ExactMatrix::transposed() const {
    ExactMatrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

bool ExactMatrix::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const Scalar& s) { return s.is_zero(); });
}

ExactMatrix matmul(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matmul shape mismatch");
    ExactMatrix r(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int k = 0; k < a.cols(); ++k) {
            const Scalar& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < b.cols(); ++j) {
                const Scalar& bkj = b.at(k, j);
                if (bkj.is_zero()) continue;
                r.at(i, j) += aik * bkj;
            }
        }
    }
    return r;
}

ExactMatrix kron(const ExactMatrix& a, const ExactMatrix& b) {
    ExactMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            const Scalar& aij = a.at(i, j);
            if (aij.is_zero()) continue;
            for (int k = 0; k < b.rows(); ++k)
                for (int l = 0; l < b.cols(); ++l) {
                    const Scalar& bkl = b.at(k, l);
                    if (bkl.is_zero()) continue;
                    r.at(i * b.rows() + k, j * b.cols() + l) = aij * bkl;
                }
        }
    return r;
}

std::vector<int> tensor_digits(int index, int n, int legs) {
    std::vector<int> d(static_cast<std::size_t>(legs));
    for (int p = legs - 1; p >= 0; --p) {
        d[static_cast<std::size_t>(p)] = index % n;
        index /= n;
    }
    return d;
}

int tensor_index(const std::vector<int>& digits, int n) {
    int idx = 0;
    for (int d : digits) idx = idx * n + d;
    return idx;
}

ExactMatrix embed_two_legs(const ExactMatrix& m2, int a, int b, int N, int n) {
    if (m2.rows() != n * n || m2.cols() != n * n)
        throw std::invalid_argument("two-leg operator must be n^2 x n^2");
    if (a < 0 || b >= N || a >= b) throw std::invalid_argument("embed legs out of range");
    int dim = 1;
    for (int i = 0; i < N; ++i) dim *= n;
    ExactMatrix r(dim, dim);
    // Enumerate the identity-leg assignment and the four acting-leg digits.
    const int rest = dim / (n * n);
    std::vector<int> digits(static_cast<std::size_t>(N), 0);
    for (int other = 0; other < rest; ++other) {
        int x = other;
        for (int p = N - 1; p >= 0; --p) {
            if (p == a || p == b) continue;
            digits[static_cast<std::size_t>(p)] = x % n;
            x /= n;
        }
        for (int ra = 0; ra < n; ++ra)
            for (int rb = 0; rb < n; ++rb) {
                const int mrow = ra * n + rb;
                std::vector<int> rd = digits;
                rd[static_cast<std::size_t>(a)] = ra;
                rd[static_cast<std::size_t>(b)] = rb;
                const int row = tensor_index(rd, n);
                for (int ca = 0; ca < n; ++ca)
                    for (int cb = 0; cb < n; ++cb) {
                        const Scalar& v = m2.at(mrow, ca * n + cb);
                        if (v.is_zero()) continue;
                        std::vector<int> cd = digits;
                        cd[static_cast<std::size_t>(a)] = ca;
                        cd[static_cast<std::size_t>(b)] = cb;
                        r.at(row, tensor_index(cd, n)) = v;
                    }
            }
    }
    r.tag_tensor(n, N);
    return r;
}

ExactMatrix embed_at(const ExactMatrix& b, int m, int N, int n) {
    if (m < 1 || m > N - 1) throw std::invalid_argument("embed position out of range");
    return embed_two_legs(b, m - 1, m, N, n);
}

std::vector<Scalar> matvec(const ExactMatrix& m, const std::vector<Scalar>& v) {
    if (static_cast<int>(v.size()) != m.cols())
        throw std::invalid_argument("matvec shape mismatch");
    std::vector<Scalar> r(static_cast<std::size_t>(m.rows()));
    for (int i = 0; i < m.rows(); ++i) {
        Scalar acc;
        for (int j = 0; j < m.cols(); ++j) {
            if (m.at(i, j).is_zero() || v[static_cast<std::size_t>(j)].is_zero()) continue;
            acc += m.at(i, j) * v[static_cast<std::size_t>(j)];
        }
        r[static_cast<std::size_t>(i)] = acc;
    }
    return r;
}

std::vector<Scalar> vecmat(const std::vector<Scalar>& v, const ExactMatrix& m) {
    if (static_cast<int>(v.size()) != m.rows())
        throw std::invalid_argument("vecmat shape mismatch");
    std::vector<Scalar> r(static_cast<std::size_t>(m.cols()));
    for (int i = 0; i < m.rows(); ++i) {
        if (v[static_cast<std::size_t>(i)].is_zero()) continue;
        for (int j = 0; j < m.cols(); ++j) {
            if (m.at(i, j).is_zero()) continue;
            r[static_cast<std::size_t>(j)] += v[static_cast<std::size_t>(i)] * m.at(i, j);
        }
    }
    return r;
}

// ---------------------------------------------------------------------------
// Fraction-free elimination

namespace {

struct ForwardElim {
    std::vector<std::vector<Poly>> rows;  // echelon rows in pivot order
    std::vector<int> pivot_cols;          // pivot column per echelon row
    int cols = 0;
};

struct PivotMeasure {
    int degree;
    std::size_t bits;
    int row;
    int col;

    bool operator<(const PivotMeasure& o) const {
        if (degree != o.degree) return degree < o.degree;
        if (bits != o.bits) return bits < o.bits;
        if (row != o.row) return row < o.row;
        return col < o.col;
    }
};

// Clear denominators row by row, then run fraction-free Bareiss elimination
// with full pivoting. The pivot is the nonzero candidate of minimal (degree,
// total coefficient bit size), ties broken by lowest row then column index.
//
// Rows are kept in a lazily scaled state: a row stores its exact Bareiss
// value as of the last step that touched it (tag). Untouched rows skip the
// per-step piv/prev rescaling entirely; when a row is touched at step t,
// the update (piv_t * row - f * pivrow) divides by the row's own last pivot,
// which telescopes the skipped scalings and stays an exact division. Row
// scaling does not move the row space, so ranks, the reduced echelon form
// and the kernels are identical to the eagerly scaled algorithm.
ForwardElim bareiss_forward(const ExactMatrix& m) {
    const int R = m.rows(), C = m.cols();
    std::vector<std::vector<Poly>> a(static_cast<std::size_t>(R),
                                     std::vector<Poly>(static_cast<std::size_t>(C)));
    for (int i = 0; i < R; ++i) {
        Poly l(Rational(1));
        for (int j = 0; j < C; ++j) l = Poly::lcm(l, m.at(i, j).den());
        for (int j = 0; j < C; ++j) {
            const Scalar& s = m.at(i, j);
            if (s.is_zero()) continue;
            a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                s.num() * Poly::exact_div(l, s.den());
        }
    }

    ForwardElim out;
    out.cols = C;
    std::vector<bool> col_used(static_cast<std::size_t>(C), false);
    std::vector<Poly> hist{Poly(Rational(1))};  // hist[t] = pivot of step t, hist[0] = 1
    std::vector<int> tag(static_cast<std::size_t>(R), 0);
    int step = 0;
    while (step < R) {
        std::optional<PivotMeasure> best;
        for (int i = step; i < R; ++i)
            for (int j = 0; j < C; ++j) {
                if (col_used[static_cast<std::size_t>(j)]) continue;
                const Poly& p = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                if (p.is_zero()) continue;
                PivotMeasure cand{p.degree(), p.coeff_bit_size(), i, j};
                if (!best || cand < *best) best = cand;
            }
        if (!best) break;
        const int t = step + 1;  // 1-based step about to run
        std::swap(a[static_cast<std::size_t>(step)], a[static_cast<std::size_t>(best->row)]);
        std::swap(tag[static_cast<std::size_t>(step)], tag[static_cast<std::size_t>(best->row)]);
        const int pc = best->col;

        // Materialize the pivot row at its true pre-step state.
        auto& prow = a[static_cast<std::size_t>(step)];
        const int sp = tag[static_cast<std::size_t>(step)];
        if (sp != t - 1) {
            for (auto& e : prow) {
                if (e.is_zero()) continue;
                e = Poly::exact_div(e * hist[static_cast<std::size_t>(t - 1)],
                                    hist[static_cast<std::size_t>(sp)]);
            }
            tag[static_cast<std::size_t>(step)] = t - 1;
        }
        const Poly piv = prow[static_cast<std::size_t>(pc)];

        for (int i = step + 1; i < R; ++i) {
            auto& row = a[static_cast<std::size_t>(i)];
            const Poly f = row[static_cast<std::size_t>(pc)];
            if (f.is_zero()) continue;  // stays at its lazy scale
            const Poly& own = hist[static_cast<std::size_t>(tag[static_cast<std::size_t>(i)])];
            for (int j = 0; j < C; ++j) {
                if (j == pc) continue;
                Poly& rj = row[static_cast<std::size_t>(j)];
                const Poly& pj = prow[static_cast<std::size_t>(j)];
                if (rj.is_zero() && pj.is_zero()) continue;
                Poly num = piv * rj - f * pj;
                rj = num.is_zero() ? Poly() : Poly::exact_div(num, own);
            }
            row[static_cast<std::size_t>(pc)] = Poly();
            tag[static_cast<std::size_t>(i)] = t;
        }
        hist.push_back(piv);
        col_used[static_cast<std::size_t>(pc)] = true;
        out.pivot_cols.push_back(pc);
        ++step;
    }
    out.rows.assign(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(out.pivot_cols.size()));
    return out;
}

struct Rref {
    std::vector<std::vector<Scalar>> rows;
    std::vector<int> pivot_cols;  // strictly increasing
    int cols = 0;
};

// Canonical reduced row echelon form of the row space found by the forward
// pass; division back into Q(q) happens only here.
Rref rref_of(const ForwardElim& fe) {
    Rref out;
    out.cols = fe.cols;
    const int r = static_cast<int>(fe.rows.size());
    std::vector<std::vector<Scalar>> rows(static_cast<std::size_t>(r),
                                          std::vector<Scalar>(static_cast<std::size_t>(fe.cols)));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < fe.cols; ++j)
            rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                Scalar(fe.rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);

    int next = 0;
    for (int c = 0; c < fe.cols && next < r; ++c) {
        int sel = -1;
        for (int i = next; i < r; ++i)
            if (!rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)].is_zero()) {
                sel = i;
                break;
            }
        if (sel < 0) continue;
        std::swap(rows[static_cast<std::size_t>(next)], rows[static_cast<std::size_t>(sel)]);
        auto& prow = rows[static_cast<std::size_t>(next)];
        const Scalar inv = prow[static_cast<std::size_t>(c)].inverse();
        for (int j = 0; j < fe.cols; ++j) prow[static_cast<std::size_t>(j)] *= inv;
        for (int i = 0; i < r; ++i) {
            if (i == next) continue;
            const Scalar f = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)];
            if (f.is_zero()) continue;
            for (int j = 0; j < fe.cols; ++j)
                rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -=
                    f * prow[static_cast<std::size_t>(j)];
        }
        out.pivot_cols.push_back(c);
        ++next;
    }
    rows.resize(out.pivot_cols.size());
    out.rows = std::move(rows);
    return out;
}

}  // namespace

std::vector<Scalar> normalize_kernel_vector(std::vector<Scalar> v) {
    Poly l(Rational(1));
    for (const auto& s : v)
        if (!s.is_zero()) l = Poly::lcm(l, s.den());
    std::vector<Poly> w(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) w[i] = v[i].num() * Poly::exact_div(l, v[i].den());

    Poly g;
    for (const auto& p : w)
        if (!p.is_zero()) g = Poly::gcd(g, p);
    if (g.is_zero()) return v;  // zero vector
    for (auto& p : w) p = p.is_zero() ? Poly() : Poly::exact_div(p, g);

    Integer num_gcd(0), den_lcm(1);
    for (const auto& p : w)
        for (const auto& c : p.coeffs()) {
            if (c == 0) continue;
            Integer n = abs(c.get_num());
            mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
        }
    Rational scale(den_lcm, num_gcd == 0 ? Integer(1) : num_gcd);
    scale.canonicalize();

    bool flip = false;
    for (const auto& p : w)
        if (!p.is_zero()) {
            flip = p.leading() * scale < 0;
            break;
        }
    if (flip) scale = -scale;

    std::vector<Scalar> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        out[i] = Scalar(w[i] * Poly(scale));
    return out;
}

KernelBasis right_nullspace(const ExactMatrix& m) {
    const Rref rr = rref_of(bareiss_forward(m));
    KernelBasis kb;
    kb.side = KernelSide::Right;
    kb.ambient = m.cols();
    std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
    for (int c : rr.pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;
    for (int f = 0; f < m.cols(); ++f) {
        if (is_pivot[static_cast<std::size_t>(f)]) continue;
        std::vector<Scalar> v(static_cast<std::size_t>(m.cols()));
        v[static_cast<std::size_t>(f)] = Scalar::one();
        for (std::size_t k = 0; k < rr.pivot_cols.size(); ++k)
            v[static_cast<std::size_t>(rr.pivot_cols[k])] =
                -rr.rows[k][static_cast<std::size_t>(f)];
        kb.vectors.push_back(normalize_kernel_vector(std::move(v)));
    }
    return kb;
}

KernelBasis left_nullspace(const ExactMatrix& m) {
    KernelBasis kb = right_nullspace(m.transposed());
    kb.side = KernelSide::Left;
    return kb;
}

int rank(const ExactMatrix& m) {
    return static_cast<int>(bareiss_forward(m).pivot_cols.size());
}

ExactMatrix inverse(const ExactMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
    const int k = m.rows();
    ExactMatrix a(m);
    ExactMatrix inv = ExactMatrix::identity(k);
    for (int c = 0; c < k; ++c) {
        int sel = -1;
        for (int i = c; i < k; ++i)
            if (!a.at(i, c).is_zero()) {
                sel = i;
                break;
            }
        if (sel < 0) throw std::domain_error("singular matrix");
        if (sel != c)
            for (int j = 0; j < k; ++j) {
                std::swap(a.at(c, j), a.at(sel, j));
                std::swap(inv.at(c, j), inv.at(sel, j));
            }
        const Scalar p = a.at(c, c).inverse();
        for (int j = 0; j < k; ++j) {
            a.at(c, j) *= p;
            inv.at(c, j) *= p;
        }
        for (int i = 0; i < k; ++i) {
            if (i == c) continue;
            const Scalar f = a.at(i, c);
            if (f.is_zero()) continue;
            for (int j = 0; j < k; ++j) {
                a.at(i, j) -= f * a.at(c, j);
                inv.at(i, j) -= f * inv.at(c, j);
            }
        }
    }
    return inv;
}

std::vector<Scalar> LinearSpan::reduce(std::vector<Scalar> v) const {
    if (static_cast<int>(v.size()) != dim_) throw std::invalid_argument("span dimension mismatch");
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        const Scalar f = v[static_cast<std::size_t>(pivots_[k])];
        if (f.is_zero()) continue;
        for (int j = 0; j < dim_; ++j)
            v[static_cast<std::size_t>(j)] -= f * rows_[k][static_cast<std::size_t>(j)];
    }
    return v;
}

bool LinearSpan::insert(std::vector<Scalar> v) {
    v = reduce(std::move(v));
    int p = -1;
    for (int j = 0; j < dim_; ++j)
        if (!v[static_cast<std::size_t>(j)].is_zero()) {
            p = j;
            break;
        }
    if (p < 0) return false;
    const Scalar inv = v[static_cast<std::size_t>(p)].inverse();
    for (auto& e : v) e *= inv;
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        const Scalar f = rows_[k][static_cast<std::size_t>(p)];
        if (f.is_zero()) continue;
        for (int j = 0; j < dim_; ++j)
            rows_[k][static_cast<std::size_t>(j)] -= f * v[static_cast<std::size_t>(j)];
    }
    auto it = std::upper_bound(pivots_.begin(), pivots_.end(), p);
    const std::size_t at = static_cast<std::size_t>(it - pivots_.begin());
    pivots_.insert(it, p);
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(at), std::move(v));
    return true;
}

}  // namespace yba
