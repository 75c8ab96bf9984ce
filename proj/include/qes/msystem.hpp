#ifndef QES_MSYSTEM_HPP
#define QES_MSYSTEM_HPP

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace qes {

// The (q+N-1) x N banded system over a coupling vector s_1..s_q.  The scalar
// type is generic: exact rationals for symbolic identities, big floats for
// irrational roots, long double inside the numeric oracle.
template <class T>
struct BandedSystem {
    int N = 2;
    int q = 1;
    std::vector<T> s; // s[0] = s_1, ..., s[q-1] = s_q

    BandedSystem(int N_, int q_, std::vector<T> s_)
        : N(N_), q(q_), s(std::move(s_)) {
        if (N < 2) throw std::invalid_argument("BandedSystem: N must be >= 2");
        if (q < 1) throw std::invalid_argument("BandedSystem: q must be >= 1");
        if (static_cast<int>(s.size()) != q)
            throw std::invalid_argument("BandedSystem: coupling vector length != q");
    }

    int rows() const { return q + N - 1; }
    int cols() const { return N; }
};

template <class T>
using Matrix = std::vector<std::vector<T>>;

// Entry rule, 1-based (i, j):
//   + i          when j == i+1 and i <= N-1      (integer superdiagonal)
//   + (q+N-i)    when i-j == q                   (integer subband)
//   + s_{i-j+1}  when 1 <= i-j+1 <= q            (coupling band)
// Overlaps sum; this happens only for q <= N-2.
template <class T>
Matrix<T> build_matrix(const BandedSystem<T>& sys) {
    const int R = sys.rows(), C = sys.cols(), q = sys.q, N = sys.N;
    Matrix<T> m(static_cast<size_t>(R), std::vector<T>(static_cast<size_t>(C), T(0)));
    for (int i = 1; i <= R; ++i) {
        for (int j = 1; j <= C; ++j) {
            T v(0);
            if (j == i + 1 && i <= N - 1) v = v + T(i);
            if (i - j == q) v = v + T(q + N - i);
            const int a = i - j + 1;
            if (a >= 1 && a <= q) v = v + sys.s[static_cast<size_t>(a - 1)];
            m[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] = v;
        }
    }
    return m;
}

// M . p; a valid QE solution yields the zero vector.
template <class T>
std::vector<T> residual(const BandedSystem<T>& sys, const std::vector<T>& p) {
    if (static_cast<int>(p.size()) != sys.N)
        throw std::invalid_argument("residual: p-vector length != N");
    const auto m = build_matrix(sys);
    std::vector<T> r(m.size(), T(0));
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < p.size(); ++j)
            r[i] = r[i] + m[i][j] * p[j];
    return r;
}

// Upside-down transposition: reverses the coupling sequence.  The matrix of
// the result is the original matrix reversed in both row and column order.
template <class T>
BandedSystem<T> tilde(const BandedSystem<T>& sys) {
    std::vector<T> rs(sys.s.rbegin(), sys.s.rend());
    return BandedSystem<T>(sys.N, sys.q, std::move(rs));
}

} // namespace qes

#endif // QES_MSYSTEM_HPP
