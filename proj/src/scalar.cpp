#include "yba/scalar.hpp"

#include <algorithm>
#include <cctype>

namespace yba {

// ---------------------------------------------------------------------------
// Poly

Poly::Poly(const Rational& c) {
    if (c != 0) coeffs_.push_back(c);
}

Poly::Poly(long c) {
    if (c != 0) coeffs_.push_back(Rational(c));
}

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly Poly::variable() { return monomial(Rational(1), 1); }

Poly Poly::monomial(const Rational& c, int d) {
    Poly p;
    if (c != 0) {
        p.coeffs_.assign(static_cast<std::size_t>(d) + 1, Rational(0));
        p.coeffs_.back() = c;
    }
    return p;
}

bool Poly::is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }

Rational Poly::coeff(int d) const {
    if (d < 0 || d >= static_cast<int>(coeffs_.size())) return Rational(0);
    return coeffs_[static_cast<std::size_t>(d)];
}

const Rational& Poly::leading() const {
    if (is_zero()) throw std::logic_error("leading coefficient of zero polynomial");
    return coeffs_.back();
}

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly Poly::operator-() const {
    Poly r(*this);
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Poly Poly::operator+(const Poly& o) const {
    Poly r(*this);
    r += o;
    return r;
}

Poly Poly::operator-(const Poly& o) const {
    Poly r(*this);
    r -= o;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    Poly r;
    r.coeffs_.assign(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
            if (o.coeffs_[j] == 0) continue;
            r.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
        }
    }
    r.trim();
    return r;
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

void Poly::divrem(const Poly& a, const Poly& b, Poly& quo, Poly& rem) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    quo = Poly();
    rem = a;
    if (a.degree() < b.degree()) return;
    quo.coeffs_.assign(static_cast<std::size_t>(a.degree() - b.degree()) + 1, Rational(0));
    const Rational& lb = b.leading();
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        int d = rem.degree() - b.degree();
        Rational c = rem.leading() / lb;
        quo.coeffs_[static_cast<std::size_t>(d)] = c;
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i)
            rem.coeffs_[static_cast<std::size_t>(d) + i] -= c * b.coeffs_[i];
        rem.trim();
    }
    quo.trim();
}

Poly Poly::exact_div(const Poly& a, const Poly& b) {
    Poly q, r;
    divrem(a, b, q, r);
    if (!r.is_zero()) throw std::logic_error("polynomial division expected to be exact");
    return q;
}

Poly Poly::gcd(const Poly& a, const Poly& b) {
    Poly g = a, h = b;
    while (!h.is_zero()) {
        Poly q, r;
        divrem(g, h, q, r);
        g = h;
        h = r.is_zero() ? Poly() : r.monic();
    }
    return g.is_zero() ? g : g.monic();
}

Poly Poly::lcm(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    Poly g = gcd(a, b);
    return (exact_div(a, g) * b).monic();
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    Poly r(*this);
    const Rational lc = coeffs_.back();
    for (auto& c : r.coeffs_) c /= lc;
    return r;
}

Poly Poly::pow(unsigned e) const {
    Poly r(Rational(1));
    Poly base(*this);
    while (e > 0) {
        if (e & 1u) r *= base;
        base *= base;
        e >>= 1u;
    }
    return r;
}

Rational Poly::eval(const Rational& q0) const {
    Rational acc(0);
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * q0 + coeffs_[i];
    return acc;
}

std::size_t Poly::coeff_bit_size() const {
    std::size_t total = 0;
    for (const auto& c : coeffs_) {
        total += mpz_sizeinbase(c.get_num().get_mpz_t(), 2);
        total += mpz_sizeinbase(c.get_den().get_mpz_t(), 2);
    }
    return total;
}

std::string rational_to_string(const Rational& r) {
    return r.get_str();
}

std::string Poly::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (int d = degree(); d >= 0; --d) {
        const Rational c = coeff(d);
        if (c == 0) continue;
        const bool neg = c < 0;
        const Rational mag = neg ? Rational(-c) : c;
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        if (d == 0) {
            out += rational_to_string(mag);
        } else {
            if (mag != 1) out += rational_to_string(mag) + "*";
            out += (d == 1) ? "q" : "q^" + std::to_string(d);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Scalar

Scalar::Scalar(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("scalar with zero denominator");
    canonicalize();
}

void Scalar::canonicalize() {
    if (num_.is_zero()) {
        den_ = Poly(Rational(1));
        return;
    }
    Poly g = Poly::gcd(num_, den_);
    if (!g.is_one()) {
        num_ = Poly::exact_div(num_, g);
        den_ = Poly::exact_div(den_, g);
    }
    const Rational lc = den_.leading();
    if (lc != 1) {
        std::vector<Rational> nc = num_.coeffs();
        for (auto& c : nc) c /= lc;
        num_ = Poly(std::move(nc));
        den_ = den_.monic();
    }
}

Scalar Scalar::operator-() const {
    Scalar r(*this);
    r.num_ = -r.num_;
    return r;
}

Scalar Scalar::operator+(const Scalar& o) const {
    return Scalar(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Scalar Scalar::operator-(const Scalar& o) const {
    return Scalar(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

Scalar Scalar::operator*(const Scalar& o) const {
    if (is_zero() || o.is_zero()) return Scalar();
    return Scalar(num_ * o.num_, den_ * o.den_);
}

Scalar Scalar::operator/(const Scalar& o) const {
    if (o.is_zero()) throw std::domain_error("division by zero scalar");
    return Scalar(num_ * o.den_, den_ * o.num_);
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero scalar");
    return Scalar(den_, num_);
}

Scalar Scalar::pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    return Scalar(num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e)));
}

Rational Scalar::evaluate_at(const Rational& q0) const {
    const Rational d = den_.eval(q0);
    if (d == 0)
        throw std::domain_error("pole at q = " + rational_to_string(q0));
    return num_.eval(q0) / d;
}

std::string Scalar::to_string() const {
    if (den_.is_one()) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

// ---------------------------------------------------------------------------
// Expression parser

namespace {

class ScalarParser {
public:
    explicit ScalarParser(std::string_view text) : s_(text) {}

    Scalar run() {
        Scalar v = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    bool consume(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Integer digits() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected integer");
        return Integer(std::string(s_.substr(start, pos_ - start)), 10);
    }

    int exponent() {
        bool neg = consume('-');
        Integer e = digits();
        if (e > 4096) fail("exponent too large");
        int v = static_cast<int>(e.get_si());
        return neg ? -v : v;
    }

    Scalar atom() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            Scalar v = expr();
            if (!consume(')')) fail("expected ')'");
            return v;
        }
        if (c == 'q') {
            ++pos_;
            return Scalar::q();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return Scalar(Rational(digits()));
        fail("expected integer, 'q' or '('");
    }

    Scalar factor() {
        bool neg = consume('-');
        Scalar v = atom();
        if (consume('^')) {
            std::size_t at = pos_;
            int e = exponent();
            if (v.is_zero() && e < 0) throw ParseError("zero raised to a negative power", at);
            v = v.pow(e);
        }
        return neg ? -v : v;
    }

    Scalar term() {
        Scalar v = factor();
        for (;;) {
            if (consume('*')) {
                v *= factor();
            } else if (consume('/')) {
                std::size_t at = pos_ - 1;
                Scalar d = factor();
                if (d.is_zero()) throw ParseError("division by zero", at);
                v /= d;
            } else {
                return v;
            }
        }
    }

    Scalar expr() {
        Scalar v = term();
        for (;;) {
            if (consume('+')) {
                v += term();
            } else if (consume('-')) {
                v -= term();
            } else {
                return v;
            }
        }
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace

Scalar parse_scalar(std::string_view text) { return ScalarParser(text).run(); }

Rational parse_rational(std::string_view text) {
    std::string t(text);
    // mpq accepts "p" and "p/q"; strip whitespace first to be forgiving.
    t.erase(std::remove_if(t.begin(), t.end(),
                           [](unsigned char c) { return std::isspace(c); }),
            t.end());
    if (t.empty()) throw ParseError("empty rational", 0);
    Rational r;
    if (mpq_set_str(r.get_mpq_t(), t.c_str(), 10) != 0)
        throw ParseError("invalid rational '" + t + "'", 0);
    if (r.get_den() == 0) throw std::domain_error("rational with zero denominator");
    r.canonicalize();
    return r;
}

}  // namespace yba
