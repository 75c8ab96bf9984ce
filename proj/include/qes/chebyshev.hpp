#ifndef QES_CHEBYSHEV_HPP
#define QES_CHEBYSHEV_HPP

#include "qes/polynomial.hpp"

#include <vector>

namespace qes {

// T_n by the three-term recurrence T_{n+1} = 2x T_n - T_{n-1}, T_0 = 1, T_1 = x.
inline Poly chebyshev_T(unsigned n, const std::string& var = "x") {
    Poly x = Poly::variable(var);
    Poly prev = Poly::constant(1, var);
    if (n == 0) return prev;
    Poly cur = x;
    for (unsigned k = 1; k < n; ++k) {
        Poly next = Rational(2) * x * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

// U_n with U_0 = 1, U_1 = 2x.
inline Poly chebyshev_U(unsigned n, const std::string& var = "x") {
    Poly x = Poly::variable(var);
    Poly prev = Poly::constant(1, var);
    if (n == 0) return prev;
    Poly cur = Rational(2) * x;
    for (unsigned k = 1; k < n; ++k) {
        Poly next = Rational(2) * x * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

} // namespace qes

#endif // QES_CHEBYSHEV_HPP
