#pragma once

#include <map>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "yba/rmatrix.hpp"

namespace yba {

/// Generator kinds: t^i_j and E_i span the minus bialgebra Y_-,
/// u^i_j and F^i the plus bialgebra Y_+.
enum class Gen : unsigned char { T, U, E, F };

enum class Side : unsigned char { Minus, Plus, Mixed };

Side side_of(Gen kind);
bool gen_has_column_index(Gen kind);  // E and F carry a single index

struct Letter {
    Gen kind;
    int i;  // row index (E_i / F^i use this slot)
    int j;  // column index; 0 for E and F

    bool operator==(const Letter& o) const { return kind == o.kind && i == o.i && j == o.j; }
    bool operator<(const Letter& o) const {
        if (kind != o.kind) return kind < o.kind;
        if (i != o.i) return i < o.i;
        return j < o.j;
    }
};

Letter letter_t(int i, int j);
Letter letter_u(int i, int j);
Letter letter_e(int i);
Letter letter_f(int i);

/// Word in the free algebra of one side; the empty word is the unit.
class FreeMonomial {
public:
    FreeMonomial() : side_(Side::Minus) {}
    FreeMonomial(Side side, std::vector<Letter> word);

    static FreeMonomial unit(Side side) { return FreeMonomial(side, {}); }
    static FreeMonomial single(Letter l) { return FreeMonomial(side_of(l.kind), {l}); }

    Side side() const { return side_; }
    const std::vector<Letter>& word() const { return word_; }
    std::size_t length() const { return word_.size(); }
    bool is_unit() const { return word_.empty(); }

    int degree_of(Gen kind) const;
    int max_index() const;

    FreeMonomial concat(const FreeMonomial& o) const;

    /// Canonical order: length first, then lexicographic on (kind, i, j).
    bool operator<(const FreeMonomial& o) const;
    bool operator==(const FreeMonomial& o) const {
        return side_ == o.side_ && word_ == o.word_;
    }

    std::string to_string() const;

private:
    Side side_;
    std::vector<Letter> word_;
};

/// Linear combination of words with Scalar coefficients; no zero terms kept.
class FreePoly {
public:
    FreePoly() : side_(Side::Minus) {}
    explicit FreePoly(Side side) : side_(side) {}
    explicit FreePoly(const FreeMonomial& m) : side_(m.side()) { add_term(m, Scalar::one()); }

    Side side() const { return side_; }
    const std::map<FreeMonomial, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const FreeMonomial& m, const Scalar& c);
    FreePoly operator+(const FreePoly& o) const;
    FreePoly operator-(const FreePoly& o) const;
    FreePoly scaled(const Scalar& c) const;
    bool operator==(const FreePoly& o) const { return side_ == o.side_ && terms_ == o.terms_; }

    std::string to_string() const;

private:
    Side side_;
    std::map<FreeMonomial, Scalar> terms_;
};

/// Element of Y (x) Y, used for coproducts.
class TensorPoly {
public:
    TensorPoly() : side_(Side::Minus) {}
    explicit TensorPoly(Side side) : side_(side) {}

    Side side() const { return side_; }
    const std::map<std::pair<FreeMonomial, FreeMonomial>, Scalar>& terms() const {
        return terms_;
    }

    void add_term(const FreeMonomial& a, const FreeMonomial& b, const Scalar& c);
    TensorPoly product(const TensorPoly& o) const;  // componentwise concatenation

private:
    Side side_;
    std::map<std::pair<FreeMonomial, FreeMonomial>, Scalar> terms_;
};

/// Coproduct per the generator rules, extended multiplicatively:
/// D(t^i_j) = sum_k t^i_k (x) t^k_j,  D(E_i) = sum_k E_k (x) t^k_i + 1 (x) E_i,
/// D(u^i_j) = sum_k u^i_k (x) u^k_j,  D(F^i) = F^i (x) 1 + sum_k u^i_k (x) F^k.
TensorPoly coproduct(const FreeMonomial& m, int n);
TensorPoly coproduct(const FreePoly& p, int n);

/// Counit: eps(t^i_j) = eps(u^i_j) = d^i_j, eps(E) = eps(F) = 0, multiplicative.
Scalar counit(const FreeMonomial& m);
Scalar counit(const FreePoly& p);

/// Skew pairing <,> and its convolution inverse <,>^- between Y_+ and Y_-.
/// Generator values: <u^i_j, t^k_l> = R^{ik}_{jl}, <F^i, E_j> = d^i_j,
/// <1, a> = eps(a), <x, 1> = eps(x); the inverse uses R^-1 and -d.
/// Composite arguments are reduced by the coproduct recursions; results
/// are memoized per evaluator instance.
class PairingEvaluator {
public:
    explicit PairingEvaluator(const RMatrix& r);

    Scalar pair(const FreeMonomial& x, const FreeMonomial& a);
    Scalar pair(const FreePoly& x, const FreePoly& a);
    Scalar pair_inverse(const FreeMonomial& x, const FreeMonomial& a);
    Scalar pair_inverse(const FreePoly& x, const FreePoly& a);

    /// Both convolution products of Eq-style identity:
    /// sum <x1,a1>^- <x2,a2>  and  sum <x1,a1> <x2,a2>^-.
    std::pair<Scalar, Scalar> convolution_products(const FreeMonomial& x, const FreeMonomial& a);

    int dim() const { return n_; }
    const RMatrix& rmatrix() const { return r_; }

private:
    Scalar pair_words(const std::vector<Letter>& x, const std::vector<Letter>& a);
    Scalar pair_inverse_words(const std::vector<Letter>& x, const std::vector<Letter>& a);
    void require_sides(const FreeMonomial& x, const FreeMonomial& a) const;
    const TensorPoly& cached_coproduct(Side side, const std::vector<Letter>& w);

    RMatrix r_;
    int n_;
    std::unordered_map<std::string, Scalar> memo_;
    std::unordered_map<std::string, Scalar> memo_inv_;
    std::unordered_map<std::string, TensorPoly> coproducts_;
};

/// One defining relation family, fully index-expanded into relators.
struct RelatorFamily {
    std::string key;       // short identifier, e.g. "rtt"
    std::string equation;  // display form, e.g. "R12 T1 T2 = T2 T1 R12"
    std::vector<FreePoly> relators;
};

/// The four defining families of each bialgebra plus the four
/// cross-multiplication families (mixed words over the union alphabet).
std::vector<RelatorFamily> relator_catalog(const RMatrix& r);

/// All words of the given kinds and length in canonical order
/// (matrix kinds enumerate both indices).
std::vector<FreeMonomial> enumerate_words(Gen kind, int length, int n);

/// Parse "1" or letters t[i,j] / u[i,j] / E[i] / F[i] joined by '*'.
/// unit_side resolves the side of the bare unit "1".
FreeMonomial parse_free_monomial(std::string_view text, Side unit_side);

/// Parse a linear combination of monomials with scalar coefficients, e.g.
/// "q*E[0]*E[1] - E[1]*E[0]". Coefficient factors other than integers and
/// plain powers of q must be parenthesized.
FreePoly parse_free_poly(std::string_view text, Side unit_side);

}  // namespace yba
