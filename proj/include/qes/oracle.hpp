#ifndef QES_ORACLE_HPP
#define QES_ORACLE_HPP

#include "qes/msystem.hpp"
#include "qes/recurrences.hpp"
#include "qes/secular.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <thread>
#include <vector>

namespace qes {

// Brute-force solver of the raw banded system.  Couplings are forward-filled
// from the top rows and backward-filled from the bottom rows in terms of the
// boundary parameters (N=2: a; N=3: a, atilde; N=4: a, atilde, b with
// btilde = 1/b); the unused middle rows form the Newton residual.
struct OracleConfig {
    long double lo = -6.0L, hi = 6.0L;
    long double step = 0.05L;
    long double newton_tol = 1e-12L;
    long double dedup_tol = 1e-8L;
    long double residual_cert = 1e-10L;
    int max_newton_iters = 48;
    size_t max_seeds = 4000000;
    unsigned threads = 1;
};

struct OracleSolution {
    int N = 3;
    unsigned q = 0;
    bool degenerate = false;            // p_1 = 0 family (N=3)
    std::vector<long double> params;
    std::vector<long double> s;
    std::vector<long double> p;
    long double residual = 0;           // max-norm over all rows
};

struct OracleReport {
    std::vector<OracleSolution> solutions;
    size_t seeds_tried = 0;
    size_t seeds_converged = 0;
    size_t seeds_discarded = 0;
    long double effective_step = 0;
};

namespace oracle_detail {

constexpr unsigned kMaxQ = 32;

struct Fill {
    std::array<long double, kMaxQ> s{};
    std::array<long double, 4> p{};
    std::array<int, 3> rr{}; // 1-based residual row indices
    int nrr = 0;
    bool valid = false;
};

// row i (1-based) of the banded matrix dotted with p, same entry rule as
// build_matrix but allocation-free
inline long double row_dot(int N, int q, const Fill& f, int i) {
    long double acc = 0;
    for (int j = 1; j <= N; ++j) {
        long double v = 0;
        if (j == i + 1 && i <= N - 1) v += static_cast<long double>(i);
        if (i - j == q) v += static_cast<long double>(q + N - i);
        const int a = i - j + 1;
        if (a >= 1 && a <= q) v += f.s[static_cast<size_t>(a - 1)];
        acc += v * f.p[static_cast<size_t>(j - 1)];
    }
    return acc;
}

inline long double full_residual_norm(int N, int q, const Fill& f) {
    long double m = 0;
    for (int i = 1; i <= q + N - 1; ++i)
        m = std::max(m, std::fabs(row_dot(N, q, f, i)));
    return m;
}

inline bool fill_generic(int N, int q, const long double* par, Fill& f) {
    constexpr long double eps = 1e-9L;
    constexpr long double cap = 1e12L;
    f.valid = false;
    if (N == 2) {
        const long double a = par[0];
        if (std::fabs(a) < eps) return false;
        f.p = {-1.0L / a, 1.0L, 0, 0};
        const int t = (q + 1) / 2;
        f.s[0] = a;
        for (int i = 2; i <= t; ++i) f.s[i - 1] = a * f.s[i - 2];
        if (t < q) {
            f.s[q - 1] = 1.0L / a;
            for (int r = q; r >= t + 2; --r) f.s[r - 2] = f.s[r - 1] / a;
        }
        f.rr = {t + 1, 0, 0};
        f.nrr = 1;
    } else if (N == 3) {
        const long double a = par[0], at = par[1];
        if (std::fabs(a) < eps || std::fabs(at) < eps) return false;
        f.p = {-1.0L / a, 1.0L, -1.0L / at, 0};
        const int t = (q + 1) / 2;
        f.s[0] = a;
        if (t >= 2) f.s[1] = a * (f.s[0] + 2.0L * f.p[2]);
        for (int i = 3; i <= t; ++i)
            f.s[i - 1] = a * (f.s[i - 2] + f.s[i - 3] * f.p[2]);
        if (t < q) {
            f.s[q - 1] = at;
            if (t < q - 1) f.s[q - 2] = at * (f.s[q - 1] + 2.0L * f.p[0]);
            for (int r = q; r >= t + 3; --r)
                f.s[r - 3] = at * (f.s[r - 2] + f.s[r - 1] * f.p[0]);
        }
        f.rr = {t + 1, t + 2, 0};
        f.nrr = 2;
    } else { // N == 4, q >= 4
        const long double a = par[0], at = par[1], b = par[2];
        if (std::fabs(a) < eps || std::fabs(at) < eps || std::fabs(b) < eps) return false;
        const long double bt = 1.0L / b;
        f.p = {-bt / a, bt, 1.0L, -1.0L / at};
        f.s[0] = a;
        f.s[1] = a * a + 2.0L * b * a;
        f.s[q - 1] = at;
        f.s[q - 2] = at * at + 2.0L * bt * at;
        const int t = 2 + (q - 3) / 2;
        for (int i = 3; i <= t; ++i) {
            const long double third = (i == 3) ? 3.0L * f.p[3] : f.s[i - 4] * f.p[3];
            f.s[i - 1] = -(f.s[i - 2] * f.p[1] + f.s[i - 3] * f.p[2] + third) / f.p[0];
        }
        for (int r = q + 1; r >= t + 4; --r) {
            const long double first = (r == q + 1) ? 3.0L * f.p[0] : f.s[r - 1] * f.p[0];
            f.s[r - 4] = -(first + f.s[r - 2] * f.p[1] + f.s[r - 3] * f.p[2]) / f.p[3];
        }
        f.rr = {t + 1, t + 2, t + 3};
        f.nrr = 3;
    }
    for (int i = 0; i < q; ++i)
        if (!(std::fabs(f.s[static_cast<size_t>(i)]) < cap)) return false;
    f.valid = true;
    return true;
}

// degenerate N=3 parametrization: p = (1, 0, u), s_1 = 0, s_2 = -2u,
// s_i = -u s_{i-2}; residuals are the last two rows
inline bool fill_degenerate(int q, long double u, Fill& f) {
    f.valid = false;
    f.p = {1.0L, 0.0L, u, 0};
    f.s.fill(0.0L);
    if (q >= 2) f.s[1] = -2.0L * u;
    for (int i = 3; i <= q; ++i) f.s[i - 1] = -u * f.s[i - 3];
    for (int i = 0; i < q; ++i)
        if (!(std::fabs(f.s[static_cast<size_t>(i)]) < 1e12L)) return false;
    f.rr = {q + 1, q + 2, 0};
    f.nrr = 2;
    f.valid = true;
    return true;
}

// dense LU solve, d <= 3
inline bool solve_linear(long double A[3][3], long double b[3], long double x[3], int d) {
    int perm[3] = {0, 1, 2};
    for (int k = 0; k < d; ++k) {
        int piv = k;
        for (int i = k + 1; i < d; ++i)
            if (std::fabs(A[i][k]) > std::fabs(A[piv][k])) piv = i;
        if (std::fabs(A[piv][k]) < 1e-300L) return false;
        if (piv != k) {
            for (int j = 0; j < d; ++j) std::swap(A[k][j], A[piv][j]);
            std::swap(b[k], b[piv]);
            std::swap(perm[k], perm[piv]);
        }
        for (int i = k + 1; i < d; ++i) {
            const long double fct = A[i][k] / A[k][k];
            for (int j = k; j < d; ++j) A[i][j] -= fct * A[k][j];
            b[i] -= fct * b[k];
        }
    }
    for (int i = d - 1; i >= 0; --i) {
        long double acc = b[i];
        for (int j = i + 1; j < d; ++j) acc -= A[i][j] * x[j];
        x[i] = acc / A[i][i];
    }
    return true;
}

template <class Eval>
inline bool eval_rows(int N, int q, Eval&& make, const long double* par,
                      long double* out, int& d) {
    Fill f;
    if (!make(par, f)) return false;
    d = f.nrr;
    for (int k = 0; k < f.nrr; ++k)
        out[k] = row_dot(N, q, f, f.rr[static_cast<size_t>(k)]);
    return true;
}

// damped Newton with forward-difference Jacobian; deterministic
template <class Eval>
inline bool newton(int N, int q, Eval&& make, long double* par, int dim,
                   const OracleConfig& cfg) {
    long double fv[3];
    int d = 0;
    if (!eval_rows(N, q, make, par, fv, d)) return false;
    auto norm = [](const long double* v, int n) {
        long double m = 0;
        for (int i = 0; i < n; ++i) m = std::max(m, std::fabs(v[i]));
        return m;
    };
    for (int iter = 0; iter < cfg.max_newton_iters; ++iter) {
        const long double fn = norm(fv, d);
        if (fn <= cfg.newton_tol) return true;
        if (iter > 4 && fn > 1e8L) return false; // hopeless seed
        long double J[3][3] = {};
        for (int j = 0; j < dim; ++j) {
            const long double h = 1e-7L * std::max(1.0L, std::fabs(par[j]));
            long double pj[3] = {par[0], par[1], par[2]};
            pj[j] += h;
            long double fj[3];
            int dj = 0;
            if (!eval_rows(N, q, make, pj, fj, dj)) return false;
            for (int i = 0; i < d; ++i) J[i][j] = (fj[i] - fv[i]) / h;
        }
        long double rhs[3] = {fv[0], fv[1], fv[2]};
        long double step[3];
        if (!solve_linear(J, rhs, step, d)) return false;
        long double lambda = 1.0L;
        bool moved = false;
        while (lambda > 1e-4L) {
            long double cand[3] = {par[0], par[1], par[2]};
            for (int j = 0; j < dim; ++j) cand[j] -= lambda * step[j];
            long double fc[3];
            int dc = 0;
            if (eval_rows(N, q, make, cand, fc, dc) && norm(fc, dc) < fn) {
                for (int j = 0; j < dim; ++j) par[j] = cand[j];
                for (int i = 0; i < d; ++i) fv[i] = fc[i];
                moved = true;
                break;
            }
            lambda *= 0.5L;
        }
        if (!moved) return false;
    }
    return norm(fv, d) <= cfg.newton_tol;
}

} // namespace oracle_detail

inline OracleReport oracle_solve(int N, unsigned q, const OracleConfig& cfg = {}) {
    using namespace oracle_detail;
    if (N < 2 || N > 4) throw std::invalid_argument("oracle_solve: N must be 2..4");
    if (q < 1 || q > kMaxQ) throw std::invalid_argument("oracle_solve: q out of range");
    if (N == 4 && q < 4) throw std::invalid_argument("oracle_solve: N=4 needs q >= 4");

    OracleReport rep;
    const int dim = N - 1;
    const int iq = static_cast<int>(q);

    // seed lattice; the step widens if the configured one exceeds the seed cap
    long double step = cfg.step;
    auto axis_count = [&](long double st) {
        return static_cast<size_t>(std::floor((cfg.hi - cfg.lo) / st + 1e-9L)) + 1;
    };
    while (true) {
        size_t total = 1;
        for (int k = 0; k < dim; ++k) total *= axis_count(step);
        if (total <= cfg.max_seeds) break;
        step *= 2.0L;
    }
    rep.effective_step = step;
    const size_t n_axis = axis_count(step);
    size_t total_seeds = 1;
    for (int k = 0; k < dim; ++k) total_seeds *= n_axis;

    auto make_generic = [&](const long double* par, Fill& f) {
        return fill_generic(N, iq, par, f);
    };

    using Params = std::array<long double, 3>;
    const unsigned nthreads = std::max(1u, cfg.threads);
    std::vector<std::vector<Params>> conv_per(nthreads);
    std::vector<size_t> bad_per(nthreads, 0);
    auto worker = [&](unsigned tid) {
        for (size_t idx = tid; idx < total_seeds; idx += nthreads) {
            Params par{};
            size_t rem = idx;
            for (int k = 0; k < dim; ++k) {
                par[static_cast<size_t>(k)] =
                    cfg.lo + step * static_cast<long double>(rem % n_axis);
                rem /= n_axis;
            }
            if (newton(N, iq, make_generic, par.data(), dim, cfg))
                conv_per[tid].push_back(par);
            else
                ++bad_per[tid];
        }
    };
    if (nthreads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned tid = 0; tid < nthreads; ++tid) pool.emplace_back(worker, tid);
        for (auto& th : pool) th.join();
    }

    std::vector<Params> converged;
    size_t ok = 0, bad = 0;
    for (unsigned tid = 0; tid < nthreads; ++tid) {
        ok += conv_per[tid].size();
        bad += bad_per[tid];
        converged.insert(converged.end(), conv_per[tid].begin(), conv_per[tid].end());
    }
    // deterministic merge regardless of scheduling
    std::sort(converged.begin(), converged.end());

    auto accept = [&](const Fill& f, const long double* par, bool degen) {
        const long double res = full_residual_norm(N, iq, f);
        if (res > cfg.residual_cert) return;
        for (const auto& prev : rep.solutions) {
            if (prev.degenerate != degen) continue;
            long double ds = 0, dp = 0;
            for (int i = 0; i < iq; ++i)
                ds = std::max(ds, std::fabs(prev.s[static_cast<size_t>(i)] - f.s[static_cast<size_t>(i)]));
            for (int i = 0; i < N; ++i)
                dp = std::max(dp, std::fabs(prev.p[static_cast<size_t>(i)] - f.p[static_cast<size_t>(i)]));
            if (ds < cfg.dedup_tol && dp < cfg.dedup_tol) return;
        }
        OracleSolution sol;
        sol.N = N;
        sol.q = q;
        sol.degenerate = degen;
        sol.params.assign(par, par + dim);
        sol.s.assign(f.s.begin(), f.s.begin() + iq);
        sol.p.assign(f.p.begin(), f.p.begin() + N);
        sol.residual = res;
        rep.solutions.push_back(std::move(sol));
    };

    Fill f;
    for (const auto& par : converged)
        if (fill_generic(N, iq, par.data(), f)) accept(f, par.data(), false);

    // second pass: the p_1 = 0 family the generic normalization cannot see
    size_t degen_tried = 0;
    if (N == 3) {
        auto make_degen = [&](const long double* par, Fill& ff) {
            return fill_degenerate(iq, par[0], ff);
        };
        std::vector<Params> dconv;
        for (size_t i = 0; i < n_axis; ++i) {
            Params par{cfg.lo + step * static_cast<long double>(i), 0, 0};
            ++degen_tried;
            if (newton(N, iq, make_degen, par.data(), 1, cfg)) {
                ++ok;
                dconv.push_back(par);
            } else {
                ++bad;
            }
        }
        std::sort(dconv.begin(), dconv.end());
        for (const auto& par : dconv)
            if (fill_degenerate(iq, par[0], f)) accept(f, par.data(), true);
    }

    rep.seeds_tried = total_seeds + degen_tried;
    rep.seeds_converged = ok;
    rep.seeds_discarded = bad;
    std::sort(rep.solutions.begin(), rep.solutions.end(),
              [](const OracleSolution& a, const OracleSolution& b) {
                  if (a.degenerate != b.degenerate) return !a.degenerate;
                  return a.s < b.s;
              });
    return rep;
}

// One side of the certification comparison: a closed-form coupling vector.
struct ClosedFormSolution {
    std::vector<long double> s;
    bool degenerate = false;
    std::string label;
};

struct CompareReport {
    unsigned q = 0;
    int N = 3;
    std::vector<std::pair<ClosedFormSolution, OracleSolution>> matched;
    std::vector<ClosedFormSolution> missing_in_oracle;
    std::vector<OracleSolution> missing_in_closed_form;
    OracleReport oracle;
    bool agrees() const {
        return missing_in_oracle.empty() && missing_in_closed_form.empty();
    }
};

inline std::vector<ClosedFormSolution> closed_form_solutions(int N, unsigned q,
                                                             unsigned precision_bits = 256) {
    std::vector<ClosedFormSolution> out;
    if (N == 2) {
        for (const auto& br : n2_chain(q)) {
            ClosedFormSolution c;
            for (const auto& v : br.s)
                c.s.push_back(static_cast<long double>(static_cast<double>(to_bigfloat(v))));
            c.label = "alpha=" + br.root.str();
            out.push_back(std::move(c));
        }
        return out;
    }
    if (N == 3) {
        for (const auto& sol : qe_solutions(q, precision_bits)) {
            ClosedFormSolution c;
            for (const auto& v : sol.s)
                c.s.push_back(static_cast<long double>(static_cast<double>(v)));
            c.label = "secular rho=" + std::to_string(sol.rho);
            out.push_back(std::move(c));
        }
        for (const auto& br : n3_degenerate(q)) {
            ClosedFormSolution c;
            c.degenerate = true;
            for (const auto& v : br.s)
                c.s.push_back(static_cast<long double>(static_cast<double>(to_bigfloat(v))));
            c.label = "degenerate rho=" + br.root.str();
            out.push_back(std::move(c));
        }
        return out;
    }
    throw std::invalid_argument("closed_form_solutions: no closed form at N=4");
}

// Bipartite matching of full coupling vectors within tol (max-norm).
inline CompareReport oracle_compare(int N, unsigned q, long double tol = 1e-6L,
                                    const OracleConfig& cfg = {},
                                    unsigned precision_bits = 256) {
    CompareReport rep;
    rep.q = q;
    rep.N = N;
    rep.oracle = oracle_solve(N, q, cfg);
    auto closed = closed_form_solutions(N, q, precision_bits);
    std::vector<bool> used(rep.oracle.solutions.size(), false);
    for (auto& c : closed) {
        bool found = false;
        for (size_t i = 0; i < rep.oracle.solutions.size(); ++i) {
            if (used[i]) continue;
            const auto& o = rep.oracle.solutions[i];
            if (o.s.size() != c.s.size()) continue;
            long double d = 0;
            for (size_t k = 0; k < c.s.size(); ++k)
                d = std::max(d, std::fabs(c.s[k] - o.s[k]));
            if (d <= tol) {
                used[i] = true;
                rep.matched.emplace_back(c, o);
                found = true;
                break;
            }
        }
        if (!found) rep.missing_in_oracle.push_back(c);
    }
    for (size_t i = 0; i < rep.oracle.solutions.size(); ++i)
        if (!used[i]) rep.missing_in_closed_form.push_back(rep.oracle.solutions[i]);
    return rep;
}

} // namespace qes

#endif // QES_ORACLE_HPP
