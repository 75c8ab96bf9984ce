#ifndef QES_ROOTS_HPP
#define QES_ROOTS_HPP

#include "qes/numeric.hpp"
#include "qes/polynomial.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

namespace qes {

// A real algebraic number, certified by a square-free defining polynomial
// and an isolating interval.  lo == hi marks an exact rational root.
struct AlgebraicRoot {
    Poly defining;
    Rational lo, hi;
    BigFloat value;

    bool exact() const { return lo == hi; }
    Rational rational_value() const {
        if (!exact()) throw std::logic_error("AlgebraicRoot: not an exact rational root");
        return lo;
    }
};

namespace detail {

// content normalization by a positive factor only: Sturm counting depends on
// the signs, so the leading coefficient must keep its orientation
inline Poly positive_scale(const Poly& p) {
    Poly pp = p.primitive_part();
    if (!p.is_zero() && p.leading() < 0) pp = -pp;
    return pp;
}

inline std::vector<Poly> sturm_sequence(const Poly& p) {
    std::vector<Poly> seq;
    seq.push_back(positive_scale(p));
    Poly d = p.derivative();
    if (d.is_zero()) return seq;
    seq.push_back(positive_scale(d));
    while (true) {
        const Poly& a = seq[seq.size() - 2];
        const Poly& b = seq[seq.size() - 1];
        Poly r = a.divmod(b).second;
        if (r.is_zero()) break;
        seq.push_back(positive_scale(-r));
        if (seq.back().degree() == 0) break;
    }
    return seq;
}

inline int sign_variations_at(const std::vector<Poly>& seq, const Rational& x) {
    int var = 0, last = 0;
    for (const Poly& p : seq) {
        const int s = sign(p.evaluate(x));
        if (s != 0) {
            if (last != 0 && s != last) ++var;
            last = s;
        }
    }
    return var;
}

// number of distinct real roots in (lo, hi]
inline int count_roots(const std::vector<Poly>& seq, const Rational& lo, const Rational& hi) {
    return sign_variations_at(seq, lo) - sign_variations_at(seq, hi);
}

// strict bound on the magnitude of every root
inline Rational cauchy_bound(const Poly& p) {
    Rational maxr(0);
    const Rational lead = p.leading();
    for (int i = 0; i < p.degree(); ++i) {
        Rational r = p.coeff(i) / lead;
        if (r < 0) r = -r;
        if (r > maxr) maxr = r;
    }
    return maxr + 2;
}

// divisors of |n|, ascending; n must fit the enumeration budget
inline std::vector<Integer> small_divisors(Integer n) {
    if (n < 0) n = -n;
    std::vector<Integer> lo_divs, hi_divs;
    for (Integer d(1); d * d <= n; ++d) {
        if (n % d == 0) {
            lo_divs.push_back(d);
            if (d * d != n) hi_divs.push_back(n / d);
        }
    }
    lo_divs.insert(lo_divs.end(), hi_divs.rbegin(), hi_divs.rend());
    return lo_divs;
}

// Rational-root extraction on an integer-primitive square-free polynomial.
// Returns the found roots and divides them out of p in place.  Skipped when
// the trailing/leading coefficients are too large to enumerate divisors.
inline std::vector<Rational> extract_rational_roots(Poly& p) {
    std::vector<Rational> found;
    // roots at zero
    while (!p.is_zero() && p.degree() >= 1 && p.coeff(0) == 0) {
        found.push_back(Rational(0));
        p = p.exact_divide(Poly::variable(p.var()));
        break; // square-free input: zero is a simple root
    }
    if (p.degree() < 1) return found;
    const Integer c0 = numerator(p.coeff(0));
    const Integer cn = numerator(p.leading());
    const Integer budget(1000000);
    if (boost::multiprecision::abs(c0) > budget || boost::multiprecision::abs(cn) > budget)
        return found;
    for (const Integer& u : small_divisors(c0)) {
        for (const Integer& v : small_divisors(cn)) {
            for (int sgn : {1, -1}) {
                if (p.degree() < 1) return found;
                Rational cand = Rational(sgn * u) / Rational(v);
                if (p.evaluate(cand) == 0) {
                    found.push_back(cand);
                    Poly lin({-cand, Rational(1)}, p.var());
                    p = p.exact_divide(lin);
                }
            }
        }
    }
    return found;
}

struct Interval { Rational lo, hi; };

// Isolating intervals for all real roots of a square-free polynomial with no
// rational roots left in it.  Each returned interval (lo, hi) carries exactly
// one root and a sign change across its endpoints.
inline std::vector<Interval> isolate_roots(const Poly& p) {
    std::vector<Interval> out;
    if (p.degree() < 1) return out;
    const auto seq = sturm_sequence(p);
    const Rational bound = cauchy_bound(p);
    std::vector<Interval> work{{-bound, bound}};
    while (!work.empty()) {
        Interval iv = work.back();
        work.pop_back();
        const int n = count_roots(seq, iv.lo, iv.hi);
        if (n == 0) continue;
        if (n == 1 && p.evaluate(iv.lo) * p.evaluate(iv.hi) < 0) {
            out.push_back(iv);
            continue;
        }
        Rational mid = (iv.lo + iv.hi) / 2;
        // rational roots were divided out, so p(mid) != 0 cannot persist
        // along a strictly shrinking chain; nudge if we hit a root exactly
        while (p.evaluate(mid) == 0)
            mid = (iv.lo + 3 * mid) / 4;
        work.push_back({iv.lo, mid});
        work.push_back({mid, iv.hi});
    }
    std::sort(out.begin(), out.end(),
              [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
    return out;
}

// Bisection to width <= 2^-bits.  Never widens; keeps the sign change.
inline Interval refine_interval(const Poly& p, Interval iv, unsigned bits) {
    const Rational target = pow2_inv(bits);
    int slo = sign(p.evaluate(iv.lo));
    while (iv.hi - iv.lo > target) {
        const Rational mid = (iv.lo + iv.hi) / 2;
        const int sm = sign(p.evaluate(mid));
        if (sm == 0) { // landed on the root exactly
            iv.lo = iv.hi = mid;
            return iv;
        }
        if (sm == slo) iv.lo = mid; else iv.hi = mid;
    }
    return iv;
}

} // namespace detail

// Complete list of distinct real roots of a nonzero univariate polynomial,
// ascending, each refined to an isolating interval of width <= 2^-precision_bits.
inline std::vector<AlgebraicRoot> real_roots(const Poly& input,
                                             unsigned precision_bits = 256) {
    if (input.is_zero())
        throw std::invalid_argument("real_roots: zero polynomial");
    if (input.degree() == 0) return {};
    const PrecisionGuard guard(precision_bits);
    Poly p = input.square_free();
    std::vector<AlgebraicRoot> roots;
    for (const Rational& r : detail::extract_rational_roots(p)) {
        AlgebraicRoot ar;
        ar.defining = input.square_free();
        ar.lo = ar.hi = r;
        ar.value = to_bigfloat(r);
        roots.push_back(std::move(ar));
    }
    for (const auto& iv0 : detail::isolate_roots(p)) {
        const auto iv = detail::refine_interval(p, iv0, precision_bits);
        AlgebraicRoot ar;
        ar.defining = p;
        ar.lo = iv.lo;
        ar.hi = iv.hi;
        ar.value = iv.lo == iv.hi ? to_bigfloat(iv.lo)
                                  : to_bigfloat((iv.lo + iv.hi) / 2);
        roots.push_back(std::move(ar));
    }
    std::sort(roots.begin(), roots.end(),
              [](const AlgebraicRoot& a, const AlgebraicRoot& b) { return a.lo < b.lo; });
    return roots;
}

// Distinct-real-root count without refinement (Sturm at the outer bound).
inline int count_real_roots(const Poly& input) {
    if (input.is_zero())
        throw std::invalid_argument("count_real_roots: zero polynomial");
    Poly p = input.square_free();
    if (p.degree() < 1) return 0;
    const auto seq = detail::sturm_sequence(p);
    const Rational b = detail::cauchy_bound(p);
    return detail::count_roots(seq, -b, b);
}

} // namespace qes

#endif // QES_ROOTS_HPP
