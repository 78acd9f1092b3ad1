#include "qwz/rational.hpp"

#include <string>

#include "qwz/errors.hpp"

namespace qwz {

std::string to_pq_string(const Rational& value) {
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw ParseError("empty rational literal");
    Rational out;
    if (out.set_str(s, 10) != 0 || out.get_den() == 0) {
        throw ParseError("invalid rational literal: " + s);
    }
    out.canonicalize();
    return out;
}

Integer lcm(const Integer& a, const Integer& b) {
    Integer out;
    mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return out;
}

}  // namespace qwz
