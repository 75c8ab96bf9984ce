#ifndef QES_RECURRENCES_HPP
#define QES_RECURRENCES_HPP

#include "qes/bipoly.hpp"
#include "qes/chebyshev.hpp"
#include "qes/msystem.hpp"
#include "qes/polynomial.hpp"

#include <stdexcept>
#include <vector>

namespace qes {

inline constexpr unsigned kMaxTableTerms = 10000;

// Coupled sequences Sigma_k, sigma_k in xi:
//   Sigma_k = xi*sigma_k - Sigma_{k-1},  sigma_{k+1} = Sigma_k - sigma_k,
// seeded by Sigma_0 = 2, sigma_1 = 1.  sigma(0) is not defined.
class SigmaTable {
public:
    explicit SigmaTable(unsigned kmax) {
        if (kmax < 1) throw std::invalid_argument("SigmaTable: kmax must be >= 1");
        if (kmax > kMaxTableTerms) throw std::invalid_argument("SigmaTable: kmax exceeds term cap");
        const Poly xi = Poly::variable("xi");
        Sigma_.reserve(kmax + 1);
        sigma_.reserve(kmax + 2);
        Sigma_.push_back(Poly::constant(2, "xi"));       // Sigma_0
        sigma_.push_back(Poly("xi"));                    // placeholder for sigma_0
        sigma_.push_back(Poly::constant(1, "xi"));       // sigma_1
        for (unsigned k = 1; k <= kmax; ++k) {
            Sigma_.push_back(xi * sigma_[k] - Sigma_[k - 1]);
            sigma_.push_back(Sigma_[k] - sigma_[k]);
        }
    }

    unsigned kmax() const { return static_cast<unsigned>(Sigma_.size()) - 1; }
    // Sigma_k, 0 <= k <= kmax
    const Poly& Sigma(unsigned k) const { return Sigma_.at(k); }
    // sigma_k, 1 <= k <= kmax+1
    const Poly& sigma(unsigned k) const {
        if (k < 1) throw std::out_of_range("SigmaTable: sigma_0 is not defined");
        return sigma_.at(k);
    }

private:
    std::vector<Poly> Sigma_, sigma_;
};

inline SigmaTable sigma_table(unsigned kmax) { return SigmaTable(kmax); }

// Exact identity Sigma_k(4x^2) = 2 T_{2k}(x) and sigma_k(4x^2) x = T_{2k-1}(x).
inline bool chebyshev_reduction(unsigned k) {
    if (k < 1) throw std::invalid_argument("chebyshev_reduction: k must be >= 1");
    const SigmaTable tab(k);
    const Poly fourx2 = Poly::monomial(4, 2, "x");
    const Poly x = Poly::variable("x");
    const bool big = tab.Sigma(k).substitute(fourx2) == Rational(2) * chebyshev_T(2 * k);
    const bool small = tab.sigma(k).substitute(fourx2) * x == chebyshev_T(2 * k - 1);
    return big && small;
}

// One real branch of the N=2 or degenerate N=3 chain.
struct ChainBranch {
    Rational root;           // alpha (N=2) or rho (degenerate N=3)
    std::vector<Rational> s; // full coupling vector s_1..s_q
    std::vector<Rational> p; // coefficient vector, len N
};

// N=2 chain: s_k = alpha^k with the boundary condition alpha^{q+1} = 1.
// Real roots: alpha = 1 always, alpha = -1 exactly at odd q.
inline std::vector<ChainBranch> n2_chain(unsigned q) {
    if (q < 1) throw std::invalid_argument("n2_chain: q must be >= 1");
    std::vector<ChainBranch> out;
    std::vector<int> alphas{1};
    if (q % 2 == 1) alphas.push_back(-1);
    for (int a : alphas) {
        ChainBranch br;
        br.root = a;
        Rational pw(1);
        for (unsigned k = 1; k <= q; ++k) {
            pw *= a;
            br.s.push_back(pw);
        }
        br.p = {Rational(-1) / Rational(a), Rational(1)};
        out.push_back(std::move(br));
    }
    return out;
}

// Degenerate N=3 branch with p_1 = 0: requires odd q = 2Q+1, zeroes the odd
// couplings and reduces to an N=2 chain in rho with s_{2k} = 2 rho^k,
// rho^{Q+1} = 1.  Real roots: rho = 1 always, rho = -1 when Q+1 is even.
inline std::vector<ChainBranch> n3_degenerate(unsigned q) {
    std::vector<ChainBranch> out;
    if (q % 2 == 0 || q < 1) return out;
    const unsigned Q = (q - 1) / 2;
    std::vector<int> rhos{1};
    if ((Q + 1) % 2 == 0) rhos.push_back(-1);
    for (int rho : rhos) {
        ChainBranch br;
        br.root = rho;
        br.s.assign(q, Rational(0));
        Rational pw(1);
        for (unsigned k = 1; k <= Q; ++k) {
            pw *= rho;
            br.s[2 * k - 1] = 2 * pw; // s_{2k}
        }
        br.p = {Rational(1), Rational(0), Rational(-rho)};
        out.push_back(std::move(br));
    }
    return out;
}

// N=4 sequences P_n(Y,Z), Q_n(Y,Z):
//   P_{n+1} = Y Z Q_n + Z^2 P_n - Y Z^2 Q_{n-1}
//   Q_{n+1} = Z P_{n+1} + Z^2 Q_n - Z^2 P_n
// from Q_{-1} = 1/Z, P_0 = Y+2, Q_0 = YZ+3Z-3.  The Laurent seed is folded
// symbolically; every row n >= 0 is a genuine polynomial.
class N4Table {
public:
    explicit N4Table(unsigned nmax) {
        if (nmax > kMaxTableTerms) throw std::invalid_argument("N4Table: nmax exceeds term cap");
        const BiPoly Y = BiPoly::Y(), Z = BiPoly::Z();
        const BiPoly Z2 = Z * Z;
        BiPoly Qprev = BiPoly::term(1, 0, -1); // Q_{-1} = 1/Z
        P_.push_back(Y + BiPoly::constant(2));
        Q_.push_back(Y * Z + BiPoly::term(3, 0, 1) - BiPoly::constant(3));
        for (unsigned n = 0; n < nmax; ++n) {
            BiPoly Pn1 = Y * Z * Q_[n] + Z2 * P_[n] - Y * Z2 * Qprev;
            BiPoly Qn1 = Z * Pn1 + Z2 * Q_[n] - Z2 * P_[n];
            Qprev = Q_[n];
            P_.push_back(std::move(Pn1));
            Q_.push_back(std::move(Qn1));
        }
    }

    unsigned nmax() const { return static_cast<unsigned>(P_.size()) - 1; }
    const BiPoly& P(unsigned n) const { return P_.at(n); }
    const BiPoly& Q(unsigned n) const { return Q_.at(n); }

    // Half-integer grading: W_{2m+1} = P_{m+1}/sqrt(Y), W_{2m+2} = Q_{m+1};
    // valid for k >= 1 with 2*nmax >= k.
    BiPoly W(unsigned k) const {
        if (k < 1) throw std::out_of_range("N4Table: W defined for k >= 1 here");
        if (k % 2 == 1) return P_.at((k + 1) / 2).divide_sqrt_y();
        return Q_.at(k / 2);
    }

private:
    std::vector<BiPoly> P_, Q_;
};

inline N4Table n4_table(unsigned nmax) { return N4Table(nmax); }

struct DivisibilityCheck {
    bool holds = true;
    int failing_w_index = -1;
    int required_z_power = 0;
};

// W_{3n} and W_{3n-1} are divisible by Z^{2n}; W_{3n-2} by Z^{2n-1}.
inline DivisibilityCheck n4_divisibility(unsigned n) {
    DivisibilityCheck res;
    if (n == 0) return res; // vacuous
    const N4Table tab((3 * n) / 2 + 1);
    const auto check = [&](unsigned widx, int zpow) {
        if (!res.holds) return;
        if (!tab.W(widx).divisible_by_z(zpow)) {
            res.holds = false;
            res.failing_w_index = static_cast<int>(widx);
            res.required_z_power = zpow;
        }
    };
    check(3 * n, 2 * static_cast<int>(n));
    check(3 * n - 1, 2 * static_cast<int>(n));
    check(3 * n - 2, 2 * static_cast<int>(n) - 1);
    return res;
}

// The unified W recurrence with the Laurent/half-integer seeds
//   W_{-2} = 1/Z, W_{-1} = sqrt(Y) + 2/sqrt(Y), W_0 = YZ+3Z-3,
//   W_{n+1} = sqrt(Y) Z W_n + Z^2 W_{n-1} - sqrt(Y) Z^2 W_{n-2}.
// Returns W_{-2}..W_{nmax} (index shifted by 2).
inline std::vector<BiPoly> w_sequence(unsigned nmax) {
    if (nmax > kMaxTableTerms) throw std::invalid_argument("w_sequence: nmax exceeds term cap");
    const BiPoly sY = BiPoly::sqrtY(), Z = BiPoly::Z();
    const BiPoly Z2 = Z * Z;
    std::vector<BiPoly> W;
    W.push_back(BiPoly::term(1, 0, -1));                          // W_{-2}
    W.push_back(BiPoly::term(1, 1, 0) + BiPoly::term(2, -1, 0));  // W_{-1}
    W.push_back(BiPoly::Y() * Z + BiPoly::term(3, 0, 1) - BiPoly::constant(3)); // W_0
    for (unsigned n = 0; n + 1 <= nmax; ++n) {
        const size_t i = W.size();
        W.push_back(sY * Z * W[i - 1] + Z2 * W[i - 2] - sY * Z2 * W[i - 3]);
    }
    return W;
}

} // namespace qes

#endif // QES_RECURRENCES_HPP
