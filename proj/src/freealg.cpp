#include "yba/freealg.hpp"

#include <algorithm>
#include <cctype>

namespace yba {

Side side_of(Gen kind) {
    return (kind == Gen::T || kind == Gen::E) ? Side::Minus : Side::Plus;
}

bool gen_has_column_index(Gen kind) { return kind == Gen::T || kind == Gen::U; }

Letter letter_t(int i, int j) { return Letter{Gen::T, i, j}; }
Letter letter_u(int i, int j) { return Letter{Gen::U, i, j}; }
Letter letter_e(int i) { return Letter{Gen::E, i, 0}; }
Letter letter_f(int i) { return Letter{Gen::F, i, 0}; }

FreeMonomial::FreeMonomial(Side side, std::vector<Letter> word)
    : side_(side), word_(std::move(word)) {
    if (side_ != Side::Mixed)
        for (const Letter& l : word_)
            if (side_of(l.kind) != side_)
                throw std::invalid_argument("letter does not belong to the declared side");
}

int FreeMonomial::degree_of(Gen kind) const {
    return static_cast<int>(
        std::count_if(word_.begin(), word_.end(), [&](const Letter& l) { return l.kind == kind; }));
}

int FreeMonomial::max_index() const {
    int m = -1;
    for (const Letter& l : word_) m = std::max({m, l.i, l.j});
    return m;
}

FreeMonomial FreeMonomial::concat(const FreeMonomial& o) const {
    Side s = side_;
    if (side_ != o.side_) {
        if (is_unit())
            s = o.side_;
        else if (!o.is_unit())
            throw std::invalid_argument("cannot concatenate words of different sides");
    }
    std::vector<Letter> w = word_;
    w.insert(w.end(), o.word_.begin(), o.word_.end());
    return FreeMonomial(s, std::move(w));
}

bool FreeMonomial::operator<(const FreeMonomial& o) const {
    if (word_.size() != o.word_.size()) return word_.size() < o.word_.size();
    return std::lexicographical_compare(word_.begin(), word_.end(), o.word_.begin(),
                                        o.word_.end());
}

std::string FreeMonomial::to_string() const {
    if (word_.empty()) return "1";
    std::string out;
    for (const Letter& l : word_) {
        if (!out.empty()) out += "*";
        switch (l.kind) {
            case Gen::T: out += "t[" + std::to_string(l.i) + "," + std::to_string(l.j) + "]"; break;
            case Gen::U: out += "u[" + std::to_string(l.i) + "," + std::to_string(l.j) + "]"; break;
            case Gen::E: out += "E[" + std::to_string(l.i) + "]"; break;
            case Gen::F: out += "F[" + std::to_string(l.i) + "]"; break;
        }
    }
    return out;
}

void FreePoly::add_term(const FreeMonomial& m, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

FreePoly FreePoly::operator+(const FreePoly& o) const {
    FreePoly r(*this);
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

FreePoly FreePoly::operator-(const FreePoly& o) const {
    FreePoly r(*this);
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

FreePoly FreePoly::scaled(const Scalar& c) const {
    FreePoly r(side_);
    if (c.is_zero()) return r;
    for (const auto& [m, v] : terms_) r.add_term(m, v * c);
    return r;
}

namespace {

// A coefficient factor is rendered bare only when it survives '*'-splitting
// in the term grammar: a nonnegative integer or a plain power of q.
std::string coefficient_factor(const Scalar& c) {
    const Poly& num = c.num();
    if (c.den().is_one() && num.degree() >= 0) {
        int nonzero = 0;
        for (int d = 0; d <= num.degree(); ++d)
            if (num.coeff(d) != 0) ++nonzero;
        if (nonzero == 1) {
            const int d = num.degree();
            const Rational lead = num.coeff(d);
            if (lead == 1 && d >= 1) return d == 1 ? "q" : "q^" + std::to_string(d);
            if (d == 0 && lead > 0 && lead.get_den() == 1) return rational_to_string(lead);
        }
    }
    return "(" + c.to_string() + ")";
}

}  // namespace

std::string FreePoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
        // Pull out a leading minus when the canonical numerator is negative.
        const bool neg = !c.is_zero() && c.num().leading() < 0;
        const Scalar mag = neg ? -c : c;
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        if (mag.is_one() && !m.is_unit()) {
            out += m.to_string();
        } else if (m.is_unit()) {
            out += coefficient_factor(mag);
        } else {
            out += coefficient_factor(mag) + "*" + m.to_string();
        }
    }
    return out;
}

void TensorPoly::add_term(const FreeMonomial& a, const FreeMonomial& b, const Scalar& c) {
    if (c.is_zero()) return;
    auto key = std::make_pair(a, b);
    auto [it, inserted] = terms_.emplace(std::move(key), c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

TensorPoly TensorPoly::product(const TensorPoly& o) const {
    TensorPoly r(side_);
    for (const auto& [ab, c] : terms_)
        for (const auto& [cd, d] : o.terms_)
            r.add_term(ab.first.concat(cd.first), ab.second.concat(cd.second), c * d);
    return r;
}

namespace {

TensorPoly letter_coproduct(const Letter& l, int n) {
    const Side s = side_of(l.kind);
    TensorPoly out(s);
    switch (l.kind) {
        case Gen::T:
            for (int k = 0; k < n; ++k)
                out.add_term(FreeMonomial::single(letter_t(l.i, k)),
                             FreeMonomial::single(letter_t(k, l.j)), Scalar::one());
            break;
        case Gen::U:
            for (int k = 0; k < n; ++k)
                out.add_term(FreeMonomial::single(letter_u(l.i, k)),
                             FreeMonomial::single(letter_u(k, l.j)), Scalar::one());
            break;
        case Gen::E:
            for (int k = 0; k < n; ++k)
                out.add_term(FreeMonomial::single(letter_e(k)),
                             FreeMonomial::single(letter_t(k, l.i)), Scalar::one());
            out.add_term(FreeMonomial::unit(s), FreeMonomial::single(letter_e(l.i)),
                         Scalar::one());
            break;
        case Gen::F:
            out.add_term(FreeMonomial::single(letter_f(l.i)), FreeMonomial::unit(s),
                         Scalar::one());
            for (int k = 0; k < n; ++k)
                out.add_term(FreeMonomial::single(letter_u(l.i, k)),
                             FreeMonomial::single(letter_f(k)), Scalar::one());
            break;
    }
    return out;
}

}  // namespace

TensorPoly coproduct(const FreeMonomial& m, int n) {
    if (m.max_index() >= n) throw std::invalid_argument("letter index out of range");
    TensorPoly acc(m.side());
    acc.add_term(FreeMonomial::unit(m.side()), FreeMonomial::unit(m.side()), Scalar::one());
    for (const Letter& l : m.word()) acc = acc.product(letter_coproduct(l, n));
    return acc;
}

TensorPoly coproduct(const FreePoly& p, int n) {
    TensorPoly acc(p.side());
    for (const auto& [m, c] : p.terms()) {
        const TensorPoly dm = coproduct(m, n);
        for (const auto& [ab, v] : dm.terms()) acc.add_term(ab.first, ab.second, v * c);
    }
    return acc;
}

Scalar counit(const FreeMonomial& m) {
    for (const Letter& l : m.word()) {
        if (l.kind == Gen::E || l.kind == Gen::F) return Scalar::zero();
        if (l.i != l.j) return Scalar::zero();
    }
    return Scalar::one();
}

Scalar counit(const FreePoly& p) {
    Scalar acc;
    for (const auto& [m, c] : p.terms())
        if (!counit(m).is_zero()) acc += c;
    return acc;
}

// ---------------------------------------------------------------------------
// Pairing

PairingEvaluator::PairingEvaluator(const RMatrix& r) : r_(r), n_(r.dim()) {}

void PairingEvaluator::require_sides(const FreeMonomial& x, const FreeMonomial& a) const {
    if (x.side() == Side::Mixed || a.side() == Side::Mixed)
        throw std::invalid_argument("pairing is defined between pure plus and minus elements");
    if (!x.is_unit() && x.side() != Side::Plus)
        throw std::invalid_argument("pairing: first argument must be a plus-side element");
    if (!a.is_unit() && a.side() != Side::Minus)
        throw std::invalid_argument("pairing: second argument must be a minus-side element");
    if (x.max_index() >= n_ || a.max_index() >= n_)
        throw std::invalid_argument("pairing: letter index out of range");
}

namespace {

Scalar counit_word(const std::vector<Letter>& w) {
    for (const Letter& l : w) {
        if (l.kind == Gen::E || l.kind == Gen::F) return Scalar::zero();
        if (l.i != l.j) return Scalar::zero();
    }
    return Scalar::one();
}

std::string word_key(const std::vector<Letter>& w) {
    std::string s;
    s.reserve(w.size() * 3);
    for (const Letter& l : w) {
        s.push_back(static_cast<char>(l.kind));
        s.push_back(static_cast<char>(l.i));
        s.push_back(static_cast<char>(l.j));
    }
    return s;
}

std::string pair_key(const std::vector<Letter>& x, const std::vector<Letter>& a) {
    std::string s = word_key(x);
    s.push_back('\x7f');
    s += word_key(a);
    return s;
}

}  // namespace

const TensorPoly& PairingEvaluator::cached_coproduct(Side side, const std::vector<Letter>& w) {
    const std::string key = word_key(w);
    auto it = coproducts_.find(key);
    if (it == coproducts_.end())
        it = coproducts_.emplace(key, coproduct(FreeMonomial(side, w), n_)).first;
    return it->second;
}

Scalar PairingEvaluator::pair(const FreeMonomial& x, const FreeMonomial& a) {
    require_sides(x, a);
    return pair_words(x.word(), a.word());
}

Scalar PairingEvaluator::pair_words(const std::vector<Letter>& x, const std::vector<Letter>& a) {
    if (x.empty()) return counit_word(a);
    if (a.empty()) return counit_word(x);

    const std::string key = pair_key(x, a);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    Scalar result;
    if (x.size() == 1 && a.size() == 1) {
        const Letter& xl = x[0];
        const Letter& al = a[0];
        if (xl.kind == Gen::U && al.kind == Gen::T)
            result = r_.matrix().at(xl.i * n_ + al.i, xl.j * n_ + al.j);  // R^{ik}_{jl}
        else if (xl.kind == Gen::F && al.kind == Gen::E)
            result = (xl.i == al.i) ? Scalar::one() : Scalar::zero();
        // all other generator pairs vanish
    } else if (x.size() >= 2) {
        // <l y, a> = sum <l, a_(1)> <y, a_(2)>, peeling the leftmost letter of x.
        const std::vector<Letter> head{x.front()};
        const std::vector<Letter> tail(x.begin() + 1, x.end());
        const TensorPoly& da = cached_coproduct(Side::Minus, a);
        for (const auto& [pairm, c] : da.terms()) {
            const Scalar left = pair_words(head, pairm.first.word());
            if (left.is_zero()) continue;
            const Scalar right = pair_words(tail, pairm.second.word());
            if (right.is_zero()) continue;
            result += c * left * right;
        }
    } else {
        // Single plus letter against a longer word: <l, b w> = <D(l), w (x) b>.
        const Letter b = a.front();
        const std::vector<Letter> rest(a.begin() + 1, a.end());
        const TensorPoly& dl = cached_coproduct(Side::Plus, x);
        const std::vector<Letter> bw{b};
        for (const auto& [pairm, c] : dl.terms()) {
            const Scalar left = pair_words(pairm.first.word(), rest);
            if (left.is_zero()) continue;
            const Scalar right = pair_words(pairm.second.word(), bw);
            if (right.is_zero()) continue;
            result += c * left * right;
        }
    }

    memo_.emplace(key, result);
    return result;
}

Scalar PairingEvaluator::pair_inverse(const FreeMonomial& x, const FreeMonomial& a) {
    require_sides(x, a);
    return pair_inverse_words(x.word(), a.word());
}

Scalar PairingEvaluator::pair_inverse_words(const std::vector<Letter>& x,
                                            const std::vector<Letter>& a) {
    if (x.empty()) return counit_word(a);
    if (a.empty()) return counit_word(x);

    const std::string key = pair_key(x, a);
    if (auto it = memo_inv_.find(key); it != memo_inv_.end()) return it->second;

    Scalar result;
    if (x.size() == 1 && a.size() == 1) {
        const Letter& xl = x[0];
        const Letter& al = a[0];
        if (xl.kind == Gen::U && al.kind == Gen::T)
            result = r_.inverse_matrix().at(xl.i * n_ + al.i, xl.j * n_ + al.j);
        else if (xl.kind == Gen::F && al.kind == Gen::E)
            result = (xl.i == al.i) ? Scalar(-1) : Scalar::zero();
    } else if (x.size() >= 2) {
        // Anti-multiplicative extension: <l y, a>^- = sum <y, a_(1)>^- <l, a_(2)>^-.
        const std::vector<Letter> head{x.front()};
        const std::vector<Letter> tail(x.begin() + 1, x.end());
        const TensorPoly& da = cached_coproduct(Side::Minus, a);
        for (const auto& [pairm, c] : da.terms()) {
            const Scalar left = pair_inverse_words(tail, pairm.first.word());
            if (left.is_zero()) continue;
            const Scalar right = pair_inverse_words(head, pairm.second.word());
            if (right.is_zero()) continue;
            result += c * left * right;
        }
    } else {
        // <l, b w>^- = sum <l_(2), w>^- <l_(1), b>^-.
        const Letter b = a.front();
        const std::vector<Letter> rest(a.begin() + 1, a.end());
        const TensorPoly& dl = cached_coproduct(Side::Plus, x);
        const std::vector<Letter> bw{b};
        for (const auto& [pairm, c] : dl.terms()) {
            const Scalar left = pair_inverse_words(pairm.second.word(), rest);
            if (left.is_zero()) continue;
            const Scalar right = pair_inverse_words(pairm.first.word(), bw);
            if (right.is_zero()) continue;
            result += c * left * right;
        }
    }

    memo_inv_.emplace(key, result);
    return result;
}

Scalar PairingEvaluator::pair(const FreePoly& x, const FreePoly& a) {
    Scalar acc;
    for (const auto& [mx, cx] : x.terms())
        for (const auto& [ma, ca] : a.terms()) {
            const Scalar p = pair(mx, ma);
            if (!p.is_zero()) acc += cx * ca * p;
        }
    return acc;
}

Scalar PairingEvaluator::pair_inverse(const FreePoly& x, const FreePoly& a) {
    Scalar acc;
    for (const auto& [mx, cx] : x.terms())
        for (const auto& [ma, ca] : a.terms()) {
            const Scalar p = pair_inverse(mx, ma);
            if (!p.is_zero()) acc += cx * ca * p;
        }
    return acc;
}

std::pair<Scalar, Scalar> PairingEvaluator::convolution_products(const FreeMonomial& x,
                                                                 const FreeMonomial& a) {
    require_sides(x, a);
    const TensorPoly dx = coproduct(x, n_);
    const TensorPoly da = coproduct(a, n_);
    Scalar inv_first, inv_second;
    for (const auto& [xp, cx] : dx.terms())
        for (const auto& [ap, ca] : da.terms()) {
            const Scalar c = cx * ca;
            const Scalar p11 = pair_inverse(xp.first, ap.first);
            if (!p11.is_zero()) {
                const Scalar p22 = pair(xp.second, ap.second);
                if (!p22.is_zero()) inv_first += c * p11 * p22;
            }
            const Scalar q11 = pair(xp.first, ap.first);
            if (!q11.is_zero()) {
                const Scalar q22 = pair_inverse(xp.second, ap.second);
                if (!q22.is_zero()) inv_second += c * q11 * q22;
            }
        }
    return {inv_first, inv_second};
}

// ---------------------------------------------------------------------------
// Relator catalog

namespace {

FreeMonomial mixed_word(std::vector<Letter> ls) { return FreeMonomial(Side::Mixed, std::move(ls)); }

}  // namespace

std::vector<RelatorFamily> relator_catalog(const RMatrix& r) {
    const int n = r.dim();
    auto R = [&](int i, int j, int k, int l) { return r.entry(i, j, k, l); };
    std::vector<RelatorFamily> out;

    {  // R12 T1 T2 = T2 T1 R12
        RelatorFamily fam{"rtt", "R12 T1 T2 = T2 T1 R12", {}};
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k)
                    for (int l = 0; l < n; ++l) {
                        FreePoly p(Side::Minus);
                        for (int m = 0; m < n; ++m)
                            for (int v = 0; v < n; ++v) {
                                p.add_term(FreeMonomial(Side::Minus,
                                                        {letter_t(m, k), letter_t(v, l)}),
                                           R(i, j, m, v));
                                p.add_term(FreeMonomial(Side::Minus,
                                                        {letter_t(j, v), letter_t(i, m)}),
                                           -R(m, v, k, l));
                            }
                        fam.relators.push_back(std::move(p));
                    }
        out.push_back(std::move(fam));
    }
    {  // E1 T2 = T2 E1 R12
        RelatorFamily fam{"et", "E1 T2 = T2 E1 R12", {}};
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    FreePoly p(Side::Minus);
                    p.add_term(FreeMonomial(Side::Minus, {letter_e(k), letter_t(j, l)}),
                               Scalar::one());
                    for (int m = 0; m < n; ++m)
                        for (int v = 0; v < n; ++v)
                            p.add_term(FreeMonomial(Side::Minus, {letter_t(j, v), letter_e(m)}),
                                       -R(m, v, k, l));
                    fam.relators.push_back(std::move(p));
                }
        out.push_back(std::move(fam));
    }
    {  // R12 U1 U2 = U2 U1 R12
        RelatorFamily fam{"ruu", "R12 U1 U2 = U2 U1 R12", {}};
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k)
                    for (int l = 0; l < n; ++l) {
                        FreePoly p(Side::Plus);
                        for (int m = 0; m < n; ++m)
                            for (int v = 0; v < n; ++v) {
                                p.add_term(FreeMonomial(Side::Plus,
                                                        {letter_u(m, k), letter_u(v, l)}),
                                           R(i, j, m, v));
                                p.add_term(FreeMonomial(Side::Plus,
                                                        {letter_u(j, v), letter_u(i, m)}),
                                           -R(m, v, k, l));
                            }
                        fam.relators.push_back(std::move(p));
                    }
        out.push_back(std::move(fam));
    }
    {  // F2 U1 = R12 U1 F2
        RelatorFamily fam{"fu", "F2 U1 = R12 U1 F2", {}};
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k) {
                    FreePoly p(Side::Plus);
                    p.add_term(FreeMonomial(Side::Plus, {letter_f(j), letter_u(i, k)}),
                               Scalar::one());
                    for (int m = 0; m < n; ++m)
                        for (int v = 0; v < n; ++v)
                            p.add_term(FreeMonomial(Side::Plus, {letter_u(m, k), letter_f(v)}),
                                       -R(i, j, m, v));
                    fam.relators.push_back(std::move(p));
                }
        out.push_back(std::move(fam));
    }
    {  // R12 U1 T2 = T2 U1 R12
        RelatorFamily fam{"rut", "R12 U1 T2 = T2 U1 R12", {}};
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k)
                    for (int l = 0; l < n; ++l) {
                        FreePoly p(Side::Mixed);
                        for (int m = 0; m < n; ++m)
                            for (int v = 0; v < n; ++v) {
                                p.add_term(mixed_word({letter_u(m, k), letter_t(v, l)}),
                                           R(i, j, m, v));
                                p.add_term(mixed_word({letter_t(j, v), letter_u(i, m)}),
                                           -R(m, v, k, l));
                            }
                        fam.relators.push_back(std::move(p));
                    }
        out.push_back(std::move(fam));
    }
    {  // T2 F1 = R12 F1 T2
        RelatorFamily fam{"tf", "T2 F1 = R12 F1 T2", {}};
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int l = 0; l < n; ++l) {
                    FreePoly p(Side::Mixed);
                    p.add_term(mixed_word({letter_t(j, l), letter_f(i)}), Scalar::one());
                    for (int m = 0; m < n; ++m)
                        for (int v = 0; v < n; ++v)
                            p.add_term(mixed_word({letter_f(m), letter_t(v, l)}),
                                       -R(i, j, m, v));
                    fam.relators.push_back(std::move(p));
                }
        out.push_back(std::move(fam));
    }
    {  // E F - F E = T - U
        RelatorFamily fam{"ef", "E F - F E = T - U", {}};
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                FreePoly p(Side::Mixed);
                p.add_term(mixed_word({letter_e(i), letter_f(j)}), Scalar::one());
                p.add_term(mixed_word({letter_f(j), letter_e(i)}), Scalar(-1));
                p.add_term(mixed_word({letter_t(j, i)}), Scalar(-1));
                p.add_term(mixed_word({letter_u(j, i)}), Scalar::one());
                fam.relators.push_back(std::move(p));
            }
        out.push_back(std::move(fam));
    }
    {  // U1 E2 = E2 U1 R12
        RelatorFamily fam{"ue", "U1 E2 = E2 U1 R12", {}};
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    FreePoly p(Side::Mixed);
                    p.add_term(mixed_word({letter_u(i, k), letter_e(l)}), Scalar::one());
                    for (int m = 0; m < n; ++m)
                        for (int v = 0; v < n; ++v)
                            p.add_term(mixed_word({letter_e(v), letter_u(i, m)}),
                                       -R(m, v, k, l));
                    fam.relators.push_back(std::move(p));
                }
        out.push_back(std::move(fam));
    }
    return out;
}

std::vector<FreeMonomial> enumerate_words(Gen kind, int length, int n) {
    const bool two = gen_has_column_index(kind);
    const int per_letter = two ? n * n : n;
    long long total = 1;
    for (int i = 0; i < length; ++i) total *= per_letter;
    std::vector<FreeMonomial> out;
    out.reserve(static_cast<std::size_t>(total));
    for (long long w = 0; w < total; ++w) {
        std::vector<Letter> ls(static_cast<std::size_t>(length));
        long long x = w;
        for (int p = length - 1; p >= 0; --p) {
            const int code = static_cast<int>(x % per_letter);
            x /= per_letter;
            ls[static_cast<std::size_t>(p)] =
                two ? Letter{kind, code / n, code % n} : Letter{kind, code, 0};
        }
        out.emplace_back(side_of(kind), std::move(ls));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Text parsing

namespace {

struct WordParser {
    std::string_view s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }

    bool at_letter() {
        const char c = peek();
        if (c != 't' && c != 'u' && c != 'E' && c != 'F') return false;
        std::size_t look = pos + 1;
        while (look < s.size() && std::isspace(static_cast<unsigned char>(s[look]))) ++look;
        return look < s.size() && s[look] == '[';
    }

    int index() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) throw ParseError("expected generator index", pos);
        return std::stoi(std::string(s.substr(start, pos - start)));
    }

    void expect(char c) {
        if (peek() != c) throw ParseError(std::string("expected '") + c + "'", pos);
        ++pos;
    }

    Letter letter() {
        const char kind_char = peek();
        ++pos;
        expect('[');
        const int i = index();
        Letter l{};
        switch (kind_char) {
            case 't': l = letter_t(i, (expect(','), index())); break;
            case 'u': l = letter_u(i, (expect(','), index())); break;
            case 'E': l = letter_e(i); break;
            case 'F': l = letter_f(i); break;
            default: throw ParseError("expected generator letter", pos);
        }
        expect(']');
        return l;
    }
};

Side join_sides(Side a, Side b) {
    if (a == b) return a;
    return Side::Mixed;
}

}  // namespace

FreeMonomial parse_free_monomial(std::string_view text, Side unit_side) {
    WordParser p{text};
    p.skip_ws();
    if (p.peek() == '1') {
        ++p.pos;
        p.skip_ws();
        if (p.pos != text.size()) throw ParseError("unexpected trailing input", p.pos);
        return FreeMonomial::unit(unit_side);
    }
    std::vector<Letter> word;
    word.push_back(p.letter());
    while (p.peek() == '*') {
        ++p.pos;
        word.push_back(p.letter());
    }
    p.skip_ws();
    if (p.pos != text.size()) throw ParseError("unexpected trailing input", p.pos);
    Side side = side_of(word[0].kind);
    for (const Letter& l : word) side = join_sides(side, side_of(l.kind));
    return FreeMonomial(side, std::move(word));
}

FreePoly parse_free_poly(std::string_view text, Side unit_side) {
    WordParser p{text};
    FreePoly out(unit_side);
    bool first = true;
    std::vector<std::pair<FreeMonomial, Scalar>> collected;
    Side seen = unit_side;
    bool any_letter = false;

    while (true) {
        p.skip_ws();
        if (p.pos == text.size()) {
            if (first) throw ParseError("empty expression", p.pos);
            break;
        }
        Scalar sign = Scalar::one();
        if (p.peek() == '+') {
            if (first) throw ParseError("unexpected '+'", p.pos);
            ++p.pos;
        } else if (p.peek() == '-') {
            sign = Scalar(-1);
            ++p.pos;
        } else if (!first) {
            throw ParseError("expected '+' or '-' between terms", p.pos);
        }
        first = false;

        Scalar coeff = sign;
        std::vector<Letter> word;
        bool expect_factor = true;
        while (expect_factor) {
            p.skip_ws();
            if (p.at_letter()) {
                word.push_back(p.letter());
            } else if (p.peek() == '(') {
                // Parenthesized scalar factor; find the matching ')'.
                int depth = 0;
                std::size_t start = p.pos;
                std::size_t i = p.pos;
                for (; i < text.size(); ++i) {
                    if (text[i] == '(') ++depth;
                    if (text[i] == ')' && --depth == 0) break;
                }
                if (depth != 0) throw ParseError("unbalanced parentheses", start);
                coeff *= parse_scalar(text.substr(start, i - start + 1));
                p.pos = i + 1;
            } else {
                // Bare scalar factor: integer or power of q.
                std::size_t start = p.pos;
                if (p.peek() == 'q') {
                    ++p.pos;
                    if (p.peek() == '^') {
                        ++p.pos;
                        if (p.peek() == '-') ++p.pos;
                        p.index();
                    }
                } else if (std::isdigit(static_cast<unsigned char>(p.peek()))) {
                    p.index();
                } else {
                    throw ParseError("expected factor", p.pos);
                }
                coeff *= parse_scalar(text.substr(start, p.pos - start));
            }
            p.skip_ws();
            if (p.peek() == '*') {
                ++p.pos;
            } else {
                expect_factor = false;
            }
        }
        Side side = unit_side;
        if (!word.empty()) {
            side = side_of(word[0].kind);
            for (const Letter& l : word) side = join_sides(side, side_of(l.kind));
            if (!any_letter) {
                seen = side;
                any_letter = true;
            } else {
                seen = join_sides(seen, side);
            }
        }
        collected.emplace_back(FreeMonomial(side, std::move(word)), coeff);
    }

    FreePoly result(any_letter ? seen : unit_side);
    for (auto& [m, c] : collected) {
        // Rebuild with the final side so unit terms and mixed terms coalesce.
        FreeMonomial mm = m.is_unit() ? FreeMonomial::unit(result.side())
                                      : FreeMonomial(result.side() == Side::Mixed ? Side::Mixed
                                                                                  : m.side(),
                                                     m.word());
        result.add_term(mm, c);
    }
    return result;
}

}  // namespace yba
