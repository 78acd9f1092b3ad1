#include "qwz/polynomial.hpp"

#include <sstream>
#include <stdexcept>

#include "qwz/errors.hpp"

namespace qwz {

RatPolynomial::RatPolynomial(std::initializer_list<Rational> ascending) : coeffs_(ascending) {
    normalize();
}

RatPolynomial::RatPolynomial(std::vector<Rational> ascending) : coeffs_(std::move(ascending)) {
    normalize();
}

RatPolynomial RatPolynomial::constant(const Rational& c) { return RatPolynomial{c}; }

RatPolynomial RatPolynomial::monomial(const Rational& c, std::size_t degree) {
    std::vector<Rational> v(degree + 1);
    v[degree] = c;
    return RatPolynomial(std::move(v));
}

RatPolynomial RatPolynomial::linear_factor(const Rational& root) { return RatPolynomial{-root, 1}; }

void RatPolynomial::normalize() {
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Rational RatPolynomial::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

const Rational& RatPolynomial::leading() const {
    if (coeffs_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

Rational RatPolynomial::evaluate(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    return acc;
}

RatPolynomial RatPolynomial::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Rational> v(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
    return RatPolynomial(std::move(v));
}

RatPolynomial RatPolynomial::monic() const {
    if (is_zero()) return {};
    RatPolynomial out = *this;
    const Rational lead = leading();
    for (auto& c : out.coeffs_) c /= lead;
    return out;
}

RatPolynomial RatPolynomial::pow(unsigned exponent) const {
    RatPolynomial result{1};
    RatPolynomial base = *this;
    while (exponent != 0) {
        if (exponent & 1U) result *= base;
        exponent >>= 1U;
        if (exponent != 0) base *= base;
    }
    return result;
}

RatPolynomial RatPolynomial::negate_argument() const {
    RatPolynomial out = *this;
    for (std::size_t i = 1; i < out.coeffs_.size(); i += 2) out.coeffs_[i] = -out.coeffs_[i];
    return out;
}

RatPolynomial RatPolynomial::reversed() const {
    return RatPolynomial(std::vector<Rational>(coeffs_.rbegin(), coeffs_.rend()));
}

RatPolynomial& RatPolynomial::operator+=(const RatPolynomial& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    normalize();
    return *this;
}

RatPolynomial& RatPolynomial::operator-=(const RatPolynomial& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
    normalize();
    return *this;
}

RatPolynomial& RatPolynomial::operator*=(const RatPolynomial& other) {
    if (is_zero() || other.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Rational> out(coeffs_.size() + other.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (sgn(coeffs_[i]) == 0) continue;
        for (std::size_t j = 0; j < other.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * other.coeffs_[j];
    }
    coeffs_ = std::move(out);
    normalize();
    return *this;
}

RatPolynomial& RatPolynomial::operator*=(const Rational& scalar) {
    for (auto& c : coeffs_) c *= scalar;
    normalize();
    return *this;
}

std::string RatPolynomial::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        const Rational& c = coeffs_[k];
        if (sgn(c) == 0) continue;
        Rational mag = abs(c);
        if (first) {
            if (sgn(c) < 0) os << "-";
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
        }
        first = false;
        const bool unit = mag == 1;
        if (k == 0) {
            os << mag.get_str();
            continue;
        }
        if (!unit) os << mag.get_str() << "*";
        os << var;
        if (k > 1) os << "^" << k;
    }
    return os.str();
}

PolyDivision divmod(const RatPolynomial& p, const RatPolynomial& q) {
    if (q.is_zero()) throw std::domain_error("polynomial division by zero");
    if (p.degree() < q.degree()) return {RatPolynomial{}, p};
    std::vector<Rational> rem = p.coefficients();
    const auto& qc = q.coefficients();
    const std::size_t dq = qc.size() - 1;
    std::vector<Rational> quot(rem.size() - dq);
    const Rational lead = qc.back();
    for (std::size_t k = quot.size(); k-- > 0;) {
        Rational factor = rem[k + dq] / lead;
        quot[k] = factor;
        if (sgn(factor) == 0) continue;
        for (std::size_t j = 0; j <= dq; ++j) rem[k + j] -= factor * qc[j];
    }
    rem.resize(dq);
    return {RatPolynomial(std::move(quot)), RatPolynomial(std::move(rem))};
}

RatPolynomial poly_divexact(const RatPolynomial& p, const RatPolynomial& q) {
    PolyDivision d = divmod(p, q);
    if (!d.remainder.is_zero()) {
        throw IdentityViolation("inexact polynomial division, remainder " + d.remainder.to_string());
    }
    return std::move(d.quotient);
}

namespace {

// Scale to an integer polynomial with content 1 and positive leading
// coefficient. Keeps Euclid's remainder sequence from blowing up.
RatPolynomial primitive_part(const RatPolynomial& p) {
    if (p.is_zero()) return {};
    Integer den_lcm = 1;
    for (const auto& c : p.coefficients()) den_lcm = lcm(den_lcm, c.get_den());
    std::vector<Integer> ints;
    ints.reserve(p.coefficients().size());
    Integer content = 0;
    for (const auto& c : p.coefficients()) {
        Integer v = c.get_num() * (den_lcm / c.get_den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
        ints.push_back(std::move(v));
    }
    if (sgn(ints.back()) < 0) content = -content;
    std::vector<Rational> out;
    out.reserve(ints.size());
    for (auto& v : ints) out.emplace_back(Integer(v / content));
    return RatPolynomial(std::move(out));
}

}  // namespace

RatPolynomial gcd(const RatPolynomial& a, const RatPolynomial& b) {
    RatPolynomial x = primitive_part(a);
    RatPolynomial y = primitive_part(b);
    while (!y.is_zero()) {
        RatPolynomial r = primitive_part(divmod(x, y).remainder);
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

std::vector<std::pair<RatPolynomial, unsigned>> squarefree_decomposition(const RatPolynomial& p) {
    std::vector<std::pair<RatPolynomial, unsigned>> out;
    if (p.degree() < 1) return out;
    const RatPolynomial f = p.monic();
    const RatPolynomial df = f.derivative();
    RatPolynomial a = gcd(f, df);
    RatPolynomial b = poly_divexact(f, a);
    RatPolynomial c = poly_divexact(df, a);
    RatPolynomial d = c - b.derivative();
    unsigned multiplicity = 1;
    while (b.degree() >= 1) {
        RatPolynomial factor = gcd(b, d);
        b = poly_divexact(b, factor);
        c = poly_divexact(d, factor);
        d = c - b.derivative();
        if (factor.degree() >= 1) out.emplace_back(std::move(factor), multiplicity);
        ++multiplicity;
    }
    return out;
}

RationalFunction::RationalFunction() : num_{}, den_{1} {}

RationalFunction::RationalFunction(const RatPolynomial& num) : num_(num), den_{1} {}

RationalFunction::RationalFunction(const RatPolynomial& num, const RatPolynomial& den) : num_(num), den_(den) {
    if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
    reduce();
}

void RationalFunction::reduce() {
    if (num_.is_zero()) {
        den_ = RatPolynomial{1};
        return;
    }
    RatPolynomial g = gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = poly_divexact(num_, g);
        den_ = poly_divexact(den_, g);
    }
    const Rational lead = den_.leading();
    if (lead != 1) {
        num_ *= Rational(1 / lead);
        den_ *= Rational(1 / lead);
    }
}

RatPolynomial RationalFunction::as_polynomial() const {
    if (!is_polynomial()) {
        throw IdentityViolation("rational function does not reduce to a polynomial: (" + num_.to_string() + ") / (" +
                                den_.to_string() + ")");
    }
    return num_;
}

RationalFunction RationalFunction::power(const RatPolynomial& p, long exponent) {
    if (exponent >= 0) return RationalFunction(p.pow(static_cast<unsigned>(exponent)));
    return RationalFunction(RatPolynomial{1}, p.pow(static_cast<unsigned>(-exponent)));
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& other) {
    num_ *= other.num_;
    den_ *= other.den_;
    reduce();
    return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& other) {
    if (other.num_.is_zero()) throw std::domain_error("rational function division by zero");
    num_ *= other.den_;
    den_ *= other.num_;
    reduce();
    return *this;
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

}  // namespace qwz
