#include "cfcolor/rational.hpp"

namespace cfcolor {

std::string to_fraction_string(const Rational& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

Rational rational_pow(const Rational& base, unsigned exp) {
    Rational result(1);
    Rational b = base;
    while (exp > 0) {
        if (exp & 1u) result *= b;
        b *= b;
        exp >>= 1u;
    }
    return result;
}

BigInt bigint_pow(const BigInt& base, unsigned exp) {
    BigInt result(1);
    BigInt b = base;
    while (exp > 0) {
        if (exp & 1u) result *= b;
        b *= b;
        exp >>= 1u;
    }
    return result;
}

}  // namespace cfcolor
