#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace yba {

using Integer = mpz_class;
using Rational = mpq_class;

/// Error with a byte offset into the offending input text.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"),
          pos_(pos) {}
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

/// Dense univariate polynomial in q with exact rational coefficients.
/// Coefficients are stored in ascending degree with no trailing zeros;
/// the zero polynomial has an empty coefficient vector.
class Poly {
public:
    Poly() = default;
    explicit Poly(const Rational& c);
    explicit Poly(long c);
    explicit Poly(std::vector<Rational> coeffs);

    static Poly variable();                          // q
    static Poly monomial(const Rational& c, int d);  // c * q^d

    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const;
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
    Rational coeff(int d) const;
    const Rational& leading() const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    bool operator==(const Poly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    /// Euclidean division; divisor must be nonzero.
    static void divrem(const Poly& a, const Poly& b, Poly& quo, Poly& rem);
    /// Division known to be exact; throws std::logic_error on a nonzero remainder.
    static Poly exact_div(const Poly& a, const Poly& b);
    /// Monic greatest common divisor; gcd(0,0) = 0.
    static Poly gcd(const Poly& a, const Poly& b);
    /// Monic least common multiple.
    static Poly lcm(const Poly& a, const Poly& b);

    Poly monic() const;
    Poly pow(unsigned e) const;
    Rational eval(const Rational& q0) const;

    /// Sum of numerator+denominator bit lengths over all coefficients.
    std::size_t coeff_bit_size() const;

    std::string to_string() const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

/// Element of the field Q(q): a ratio of polynomials kept in canonical form
/// (numerator and denominator coprime, denominator monic, zero is 0/1).
class Scalar {
public:
    Scalar() : num_(), den_(Rational(1)) {}
    Scalar(int v) : Scalar(Rational(v)) {}
    Scalar(long v) : Scalar(Rational(v)) {}
    explicit Scalar(const Rational& c) : num_(c), den_(Rational(1)) {}
    explicit Scalar(Poly num) : num_(std::move(num)), den_(Rational(1)) {}
    Scalar(Poly num, Poly den);

    static Scalar q() { return Scalar(Poly::variable()); }
    static Scalar zero() { return Scalar(); }
    static Scalar one() { return Scalar(1); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    /// Throws std::domain_error when dividing by zero.
    Scalar operator/(const Scalar& o) const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    bool operator==(const Scalar& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    Scalar inverse() const;
    Scalar pow(int e) const;

    /// Exact value at q = q0; throws std::domain_error at a pole.
    Rational evaluate_at(const Rational& q0) const;

    std::string to_string() const;

private:
    void canonicalize();
    Poly num_;
    Poly den_;
};

/// Parse a scalar expression:
///   expr := term (('+'|'-') term)* ; term := factor (('*'|'/') factor)* ;
///   factor := '-'? atom ('^' int)? ; atom := int | 'q' | '(' expr ')'.
/// Whitespace is insignificant. Throws ParseError / std::domain_error.
Scalar parse_scalar(std::string_view text);

/// Parse an exact rational "p" or "p/q" (used for numeric specialization).
Rational parse_rational(std::string_view text);

std::string rational_to_string(const Rational& r);

}  // namespace yba
