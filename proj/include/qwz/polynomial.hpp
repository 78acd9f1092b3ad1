#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "qwz/rational.hpp"

namespace qwz {

/// Univariate polynomial over Q, coefficients in ascending degree.
/// The zero polynomial has no coefficients; otherwise the leading
/// coefficient is nonzero.
class RatPolynomial {
public:
    RatPolynomial() = default;
    RatPolynomial(std::initializer_list<Rational> ascending);
    explicit RatPolynomial(std::vector<Rational> ascending);

    static RatPolynomial constant(const Rational& c);
    static RatPolynomial monomial(const Rational& c, std::size_t degree);
    /// x - root
    static RatPolynomial linear_factor(const Rational& root);

    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// Degree; -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
    /// Coefficient of x^i (zero past the degree).
    Rational coeff(std::size_t i) const;
    const Rational& leading() const;

    Rational evaluate(const Rational& x) const;
    RatPolynomial derivative() const;
    RatPolynomial monic() const;
    RatPolynomial pow(unsigned exponent) const;
    /// p(-x)
    RatPolynomial negate_argument() const;
    /// x^deg * p(1/x)
    RatPolynomial reversed() const;

    RatPolynomial& operator+=(const RatPolynomial& other);
    RatPolynomial& operator-=(const RatPolynomial& other);
    RatPolynomial& operator*=(const RatPolynomial& other);
    RatPolynomial& operator*=(const Rational& scalar);

    friend RatPolynomial operator+(RatPolynomial a, const RatPolynomial& b) { return a += b; }
    friend RatPolynomial operator-(RatPolynomial a, const RatPolynomial& b) { return a -= b; }
    friend RatPolynomial operator-(RatPolynomial a) { return a *= Rational(-1); }
    friend RatPolynomial operator*(RatPolynomial a, const RatPolynomial& b) { return a *= b; }
    friend RatPolynomial operator*(RatPolynomial a, const Rational& s) { return a *= s; }
    friend RatPolynomial operator*(const Rational& s, RatPolynomial a) { return a *= s; }
    friend bool operator==(const RatPolynomial& a, const RatPolynomial& b) = default;

    /// Human-readable form in the given variable, e.g. "x^2 - 2/3*x + 1".
    std::string to_string(const std::string& var = "x") const;

private:
    void normalize();
    std::vector<Rational> coeffs_;
};

struct PolyDivision {
    RatPolynomial quotient;
    RatPolynomial remainder;
};

PolyDivision divmod(const RatPolynomial& p, const RatPolynomial& q);

/// Quotient p / q; throws IdentityViolation (quoting the remainder) unless
/// q divides p exactly.
RatPolynomial poly_divexact(const RatPolynomial& p, const RatPolynomial& q);

/// Monic greatest common divisor (zero if both inputs are zero).
RatPolynomial gcd(const RatPolynomial& a, const RatPolynomial& b);

/// Yun decomposition p = c * prod f_i^{m_i} with monic squarefree,
/// pairwise coprime f_i. Returns (f_i, m_i) for the nonconstant factors.
std::vector<std::pair<RatPolynomial, unsigned>> squarefree_decomposition(const RatPolynomial& p);

/// num / den with den monic and gcd(num, den) = 1.
class RationalFunction {
public:
    RationalFunction();
    RationalFunction(const RatPolynomial& num);  // NOLINT(google-explicit-constructor)
    RationalFunction(const RatPolynomial& num, const RatPolynomial& den);

    const RatPolynomial& num() const noexcept { return num_; }
    const RatPolynomial& den() const noexcept { return den_; }
    bool is_polynomial() const { return den_.degree() == 0; }
    /// Throws IdentityViolation if the denominator is not constant.
    RatPolynomial as_polynomial() const;

    /// p^e for an integer exponent (negative exponents invert).
    static RationalFunction power(const RatPolynomial& p, long exponent);

    RationalFunction& operator*=(const RationalFunction& other);
    RationalFunction& operator/=(const RationalFunction& other);
    friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
    friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend bool operator==(const RationalFunction& a, const RationalFunction& b) = default;

private:
    void reduce();
    RatPolynomial num_;
    RatPolynomial den_;
};

}  // namespace qwz
