#ifndef QES_NUMERIC_HPP
#define QES_NUMERIC_HPP

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <cmath>
#include <stdexcept>
#include <string>

namespace qes {

// Exact arithmetic: GMP-backed integers and rationals.  mpq_rational is
// always stored reduced with positive denominator.
using Integer  = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

// Arbitrary-precision binary float with runtime-selectable precision.
using BigFloat = boost::multiprecision::mpfr_float;

inline Integer numerator(const Rational& r)   { return boost::multiprecision::numerator(r); }
inline Integer denominator(const Rational& r) { return boost::multiprecision::denominator(r); }

// Sets the working mantissa size for all subsequently constructed BigFloats
// (thread-local).  `bits` is a binary precision; mpfr_float counts decimal
// digits, so convert with a guard digit.
inline void set_precision_bits(unsigned bits) {
    if (bits < 24) bits = 24;
    const unsigned digits10 = static_cast<unsigned>(bits * 0.30103) + 4;
    BigFloat::default_precision(digits10);
}

inline unsigned default_precision_bits() { return 256; }

// Scopes BigFloat construction precision to `bits`; restores on exit.
class PrecisionGuard {
public:
    explicit PrecisionGuard(unsigned bits)
        : saved_(BigFloat::default_precision()) { set_precision_bits(bits); }
    ~PrecisionGuard() { BigFloat::default_precision(saved_); }
    PrecisionGuard(const PrecisionGuard&) = delete;
    PrecisionGuard& operator=(const PrecisionGuard&) = delete;
private:
    unsigned saved_;
};

inline BigFloat to_bigfloat(const Rational& r) {
    return BigFloat(r);
}

inline int sign(const Rational& r) {
    return r.sign();
}

// 2^(-bits) as an exact rational, used for interval width targets.
inline Rational pow2_inv(unsigned bits) {
    Rational r(1);
    r /= Rational(Integer(1) << bits);
    return r;
}

inline std::string to_string(const Rational& r) {
    return r.str();
}

} // namespace qes

#endif // QES_NUMERIC_HPP
