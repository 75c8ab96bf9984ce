#ifndef QES_SECULAR_HPP
#define QES_SECULAR_HPP

#include "qes/chebyshev.hpp"
#include "qes/msystem.hpp"
#include "qes/recurrences.hpp"
#include "qes/roots.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qes {

class ConsistencyError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Branch { q4k, q4k1, q4k2, q4k3 };

inline const char* branch_name(Branch b) {
    switch (b) {
        case Branch::q4k:  return "4K";
        case Branch::q4k1: return "4K+1";
        case Branch::q4k2: return "4K+2";
        case Branch::q4k3: return "4K+3";
    }
    return "?";
}

// The N=3 matching condition for a given q.  Even q works in the variable
// s = a directly; odd q works in xi = a*atilde.  Normalized to leading
// coefficient +1.
struct SecularProblem {
    unsigned q = 0;
    unsigned K = 0;
    Branch branch = Branch::q4k;
    char var = 's'; // 's' or 'x' (xi)
    Poly secular;
};

inline SecularProblem secular_poly(unsigned q) {
    if (q < 1) throw std::invalid_argument("secular_poly: q must be >= 1");
    SecularProblem prob;
    prob.q = q;
    const unsigned r = q % 4;
    const unsigned K = q / 4;
    prob.K = K;
    const SigmaTable tab(K + 2);
    const Poly s = Poly::variable("s");
    const Poly s2 = Poly::monomial(1, 2, "s");
    switch (r) {
        case 0: // a*sigma_{K+1}(a^2) = Sigma_K(a^2)
            prob.branch = Branch::q4k;
            prob.var = 's';
            prob.secular = s * tab.sigma(K + 1).substitute(s2) - tab.Sigma(K).substitute(s2);
            break;
        case 1: // Sigma_{K+1}(xi) = Sigma_K(xi)
            prob.branch = Branch::q4k1;
            prob.var = 'x';
            prob.secular = tab.Sigma(K + 1) - tab.Sigma(K);
            break;
        case 2: // a*sigma_{K+1}(a^2) = Sigma_{K+1}(a^2)
            prob.branch = Branch::q4k2;
            prob.var = 's';
            prob.secular = s * tab.sigma(K + 1).substitute(s2) - tab.Sigma(K + 1).substitute(s2);
            break;
        case 3: // sigma_{K+2}(xi) = sigma_{K+1}(xi)
            prob.branch = Branch::q4k3;
            prob.var = 'x';
            prob.secular = tab.sigma(K + 2) - tab.sigma(K + 1);
            break;
    }
    if (prob.secular.leading() < 0) prob.secular = -prob.secular;
    return prob;
}

// One admissible (s_1, rho) pair extracted from the secular polynomial.
struct QERootSeed {
    AlgebraicRoot s1;
    int rho = 1;
};

struct ExcludedRoot {
    AlgebraicRoot xi;
    std::string reason;
};

struct QERootSet {
    std::vector<QERootSeed> seeds;
    std::vector<ExcludedRoot> excluded;
};

// Real (s_1, rho) seeds of a secular problem.  Even q: the roots are s = a
// themselves, rho = 1.  Odd q: each positive xi-root gives the pair
// s_1 = +-sqrt(xi) with rho = 1; a negative root is admissible only at
// q = 4K+3 where rho = -1 restores a^2 = rho*xi > 0.
inline QERootSet qe_roots(const SecularProblem& prob, unsigned precision_bits = 256) {
    QERootSet out;
    if (prob.var == 's') {
        for (auto& r : real_roots(prob.secular, precision_bits))
            out.seeds.push_back({std::move(r), 1});
        return out;
    }
    const auto xi_roots = real_roots(prob.secular, precision_bits);
    bool has_pos = false, has_neg = false;
    for (const auto& xr : xi_roots) {
        if (xr.hi <= 0 && !(xr.exact() && xr.lo == 0)) {
            if (prob.branch == Branch::q4k3) has_neg = true;
            else out.excluded.push_back({xr, "negative xi root outside the 4K+3 branch: no real coupling vector"});
        } else {
            has_pos = true;
        }
    }
    const Poly s2 = Poly::monomial(1, 2, "s");
    if (has_pos) {
        const Poly pos = prob.secular.substitute(s2); // roots s with s^2 = xi > 0
        for (auto& r : real_roots(pos, precision_bits))
            out.seeds.push_back({std::move(r), 1});
    }
    if (has_neg) {
        const Poly neg = prob.secular.substitute(Poly::monomial(-1, 2, "s"));
        for (auto& r : real_roots(neg, precision_bits))
            out.seeds.push_back({std::move(r), -1});
    }
    return out;
}

// Full QE solution: couplings, p-vector and certified residual bound.
struct QESolution {
    unsigned q = 0;
    int rho = 1;
    AlgebraicRoot s1;
    bool exact = false;                 // rational root: everything exact
    std::vector<Rational> s_exact, p_exact;
    std::vector<BigFloat> s, p;
    BigFloat xi;
    BigFloat residual_bound;            // max-norm of the banded residual
};

// Coupling reconstruction s_{2j-1} = a rho^{j-1} sigma_j(xi),
// s_{2j} = rho^j Sigma_j(xi) with xi = rho a^2, p = (-1/a, 1, -rho/a).
inline QESolution couplings_from_root(unsigned q, const QERootSeed& seed,
                                      unsigned precision_bits = 256) {
    if (q < 1) throw std::invalid_argument("couplings_from_root: q must be >= 1");
    const PrecisionGuard guard(precision_bits);
    QESolution sol;
    sol.q = q;
    sol.rho = seed.rho;
    sol.s1 = seed.s1;
    const unsigned jmax = (q + 1) / 2;
    const SigmaTable tab(jmax + 1);
    const Rational rho(seed.rho);

    if (seed.s1.exact()) {
        const Rational a = seed.s1.rational_value();
        if (a == 0) throw ConsistencyError("couplings_from_root: s_1 = 0 is degenerate");
        const Rational xi = rho * a * a;
        sol.exact = true;
        sol.s_exact.assign(q, Rational(0));
        Rational rp(1); // rho^{j-1}
        for (unsigned j = 1; 2 * j - 1 <= q; ++j) {
            sol.s_exact[2 * j - 2] = a * rp * tab.sigma(j).evaluate(xi);
            if (2 * j <= q) sol.s_exact[2 * j - 1] = rp * rho * tab.Sigma(j).evaluate(xi);
            rp *= rho;
        }
        sol.p_exact = {Rational(-1) / a, Rational(1), -rho / a};
        const BandedSystem<Rational> sys(3, static_cast<int>(q), sol.s_exact);
        for (const auto& r : residual(sys, sol.p_exact))
            if (r != 0)
                throw ConsistencyError("couplings_from_root: exact residual is nonzero at q=" +
                                       std::to_string(q));
        sol.residual_bound = 0;
        sol.xi = to_bigfloat(xi);
        for (const auto& v : sol.s_exact) sol.s.push_back(to_bigfloat(v));
        for (const auto& v : sol.p_exact) sol.p.push_back(to_bigfloat(v));
        return sol;
    }

    const BigFloat a = seed.s1.value;
    const BigFloat xi = BigFloat(seed.rho) * a * a;
    sol.xi = xi;
    sol.s.assign(q, BigFloat(0));
    BigFloat rp(1);
    for (unsigned j = 1; 2 * j - 1 <= q; ++j) {
        sol.s[2 * j - 2] = a * rp * tab.sigma(j).evaluate_as<BigFloat>(xi);
        if (2 * j <= q)
            sol.s[2 * j - 1] = rp * BigFloat(seed.rho) * tab.Sigma(j).evaluate_as<BigFloat>(xi);
        rp *= BigFloat(seed.rho);
    }
    sol.p = {BigFloat(-1) / a, BigFloat(1), BigFloat(-seed.rho) / a};
    const BandedSystem<BigFloat> sys(3, static_cast<int>(q), sol.s);
    BigFloat maxr(0);
    for (const auto& r : residual(sys, sol.p)) {
        BigFloat ar = boost::multiprecision::abs(r);
        if (ar > maxr) maxr = ar;
    }
    sol.residual_bound = maxr;
    const BigFloat tol = to_bigfloat(pow2_inv(precision_bits / 2));
    if (maxr > tol)
        throw ConsistencyError("couplings_from_root: residual above tolerance at q=" +
                               std::to_string(q));
    return sol;
}

// All QE solutions of the N=3 secular pipeline at a given q (degenerate
// p_1 = 0 families live in n3_degenerate, not here).
inline std::vector<QESolution> qe_solutions(unsigned q, unsigned precision_bits = 256) {
    const auto prob = secular_poly(q);
    const auto seeds = qe_roots(prob, precision_bits);
    std::vector<QESolution> out;
    out.reserve(seeds.seeds.size());
    for (const auto& seed : seeds.seeds)
        out.push_back(couplings_from_root(q, seed, precision_bits));
    return out;
}

// Even-q secular divided exactly by (s-2); the quotient has the integer
// coefficients of the double Pascal triangle, leading +1, listed c_0..c_{q/2}.
inline std::vector<Integer> reduced_even_secular(unsigned q) {
    if (q < 2 || q % 2 != 0)
        throw std::invalid_argument("reduced_even_secular: q must be even and >= 2");
    const auto prob = secular_poly(q);
    const Poly lin({Rational(-2), Rational(1)}, "s");
    const Poly quo = prob.secular.exact_divide(lin);
    std::vector<Integer> c;
    for (int i = 0; i <= quo.degree(); ++i) {
        const Rational& ci = quo.coeff(i);
        if (denominator(ci) != 1)
            throw std::runtime_error("reduced_even_secular: non-integer coefficient at q=" +
                                     std::to_string(q));
        c.push_back(numerator(ci));
    }
    if (c.empty() || c.back() != 1)
        throw std::runtime_error("reduced_even_secular: leading coefficient is not +1");
    return c;
}

inline Integer binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    Integer r(1);
    for (unsigned i = 0; i < k; ++i) {
        r *= Integer(n - i);
        r /= Integer(i + 1);
    }
    return r;
}

// Coefficient (K+1)-plet of the bracket factor, read from xi^K down to xi^0:
// d_m = (-1)^{K-m} C(K+m, K-m).
inline std::vector<Integer> kappa_coefficients(unsigned K) {
    std::vector<Integer> d;
    for (unsigned m = K + 1; m-- > 0;) {
        Integer v = binomial(K + m, K - m);
        if ((K - m) % 2 == 1) v = -v;
        d.push_back(v);
    }
    return d;
}

// Compact binomial form of the q = 4K+1 secular polynomial:
//   (xi-4) * sum_{m=0}^{K} (-1)^{K-m} C(K+m, K-m) xi^m.
inline Poly compact_form_4k1(unsigned K) {
    Poly bracket("xi");
    const auto d = kappa_coefficients(K); // d[0] = d_K ... d[K] = d_0
    for (unsigned m = 0; m <= K; ++m)
        bracket += Poly::monomial(Rational(d[K - m]), m, "xi");
    const Poly lin({Rational(-4), Rational(1)}, "xi");
    return lin * bracket;
}

struct ConjectureReport {
    unsigned K = 0;
    bool holds = false;
    bool exact_identity = false; // nontrivial factor equals U_K((2-xi)/2) exactly
    bool reflection = false;     // nontrivial factor invariant under xi -> 4-xi
    std::vector<BigFloat> matched_roots;
    std::vector<BigFloat> leftover_secular, leftover_chebyshev;
};

namespace detail {

// strips every exact (xi - r) factor, returns multiplicity removed
inline int strip_linear_factor(Poly& p, const Rational& r) {
    const Poly lin({-r, Rational(1)}, p.var());
    int mult = 0;
    while (p.degree() >= 1 && p.evaluate(r) == 0) {
        p = p.exact_divide(lin);
        ++mult;
    }
    return mult;
}

} // namespace detail

// The nontrivial part of the q = 4K+3 secular polynomial (xi = 0 and xi = 4
// removed) against the root set of U_K((2-xi)/2), plus the reflection
// symmetry about xi_c = 2.
inline ConjectureReport conjecture_check(unsigned K, unsigned precision_bits = 256) {
    if (K < 1) throw std::invalid_argument("conjecture_check: K must be >= 1");
    ConjectureReport rep;
    rep.K = K;
    Poly lhs = secular_poly(4 * K + 3).secular;
    detail::strip_linear_factor(lhs, Rational(4));
    detail::strip_linear_factor(lhs, Rational(0));
    lhs = lhs.monic();

    // U_K((2-xi)/2) as an exact polynomial in xi
    const Poly half_shift({Rational(1), Rational(-1, 2)}, "xi"); // (2-xi)/2
    Poly rhs = chebyshev_U(K).substitute(half_shift).monic();
    rep.exact_identity = (lhs == rhs);

    // reflection: lhs(4 - xi) == (-1)^deg * lhs(xi)
    const Poly refl_arg({Rational(4), Rational(-1)}, "xi");
    Poly refl = lhs.substitute(refl_arg);
    if (lhs.degree() % 2 == 1) refl = -refl;
    rep.reflection = (refl == lhs);

    if (rep.exact_identity) {
        rep.holds = true;
        for (const auto& r : real_roots(lhs, precision_bits))
            rep.matched_roots.push_back(r.value);
        return rep;
    }

    // fall back to certified numeric matching of the two root sets
    auto lroots = real_roots(lhs, precision_bits);
    auto rroots = real_roots(rhs, precision_bits);
    const BigFloat tol = to_bigfloat(Rational(1, 10000000000LL)); // 1e-10
    std::vector<bool> used(rroots.size(), false);
    for (const auto& lr : lroots) {
        bool found = false;
        for (size_t i = 0; i < rroots.size(); ++i) {
            if (!used[i] && boost::multiprecision::abs(lr.value - rroots[i].value) <= tol) {
                used[i] = true;
                rep.matched_roots.push_back(lr.value);
                found = true;
                break;
            }
        }
        if (!found) rep.leftover_secular.push_back(lr.value);
    }
    for (size_t i = 0; i < rroots.size(); ++i)
        if (!used[i]) rep.leftover_chebyshev.push_back(rroots[i].value);
    rep.holds = rep.leftover_secular.empty() && rep.leftover_chebyshev.empty();
    return rep;
}

} // namespace qes

#endif // QES_SECULAR_HPP
