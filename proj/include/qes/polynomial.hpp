#ifndef QES_POLYNOMIAL_HPP
#define QES_POLYNOMIAL_HPP

#include "qes/numeric.hpp"

#include <algorithm>
#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qes {

class Poly;

// Thrown by exact division when the remainder is nonzero; carries it.
class DivisibilityError : public std::runtime_error {
public:
    DivisibilityError(std::string what, std::vector<Rational> remainder)
        : std::runtime_error(std::move(what)), remainder_(std::move(remainder)) {}
    const std::vector<Rational>& remainder_coeffs() const { return remainder_; }
private:
    std::vector<Rational> remainder_;
};

// Univariate polynomial with exact rational coefficients, stored densely in
// ascending order with no trailing zeros.  The variable name is cosmetic but
// carried through arithmetic (mixing two named variables is an error).
class Poly {
public:
    Poly() = default;
    explicit Poly(std::string var) : var_(std::move(var)) {}
    Poly(std::vector<Rational> coeffs, std::string var = "x")
        : var_(std::move(var)), c_(std::move(coeffs)) { trim(); }
    Poly(std::initializer_list<Rational> coeffs, std::string var = "x")
        : var_(std::move(var)), c_(coeffs) { trim(); }

    static Poly constant(const Rational& v, std::string var = "x") {
        return Poly({v}, std::move(var));
    }
    static Poly variable(std::string var = "x") {
        return Poly({Rational(0), Rational(1)}, std::move(var));
    }
    // c * var^n
    static Poly monomial(const Rational& c, unsigned n, std::string var = "x") {
        std::vector<Rational> v(n + 1, Rational(0));
        v[n] = c;
        return Poly(std::move(v), std::move(var));
    }

    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    // degree of the zero polynomial is -1
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::string& var() const { return var_; }
    void set_var(std::string v) { var_ = std::move(v); }

    Rational coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c_.size())) return Rational(0);
        return c_[static_cast<size_t>(i)];
    }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational leading() const {
        return c_.empty() ? Rational(0) : c_.back();
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::string v = join_vars(a, b);
        std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()), Rational(0));
        for (size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
        return Poly(std::move(r), std::move(v));
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        std::string v = join_vars(a, b);
        std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()), Rational(0));
        for (size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
        return Poly(std::move(r), std::move(v));
    }
    Poly operator-() const {
        Poly r(*this);
        for (auto& x : r.c_) x = -x;
        return r;
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly(join_vars(a, b));
        std::string v = join_vars(a, b);
        std::vector<Rational> r(a.c_.size() + b.c_.size() - 1, Rational(0));
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j)
                r[i + j] += a.c_[i] * b.c_[j];
        return Poly(std::move(r), std::move(v));
    }
    friend Poly operator*(const Rational& k, const Poly& a) {
        Poly r(a);
        for (auto& x : r.c_) x *= k;
        r.trim();
        return r;
    }
    friend Poly operator*(const Poly& a, const Rational& k) { return k * a; }

    Poly& operator+=(const Poly& o) { *this = *this + o; return *this; }
    Poly& operator-=(const Poly& o) { *this = *this - o; return *this; }
    Poly& operator*=(const Poly& o) { *this = *this * o; return *this; }

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.c_ == b.c_ && (a.is_constant() || b.is_constant() || a.var_ == b.var_);
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    // quotient/remainder with exact rational arithmetic
    std::pair<Poly, Poly> divmod(const Poly& d) const {
        if (d.is_zero()) throw std::invalid_argument("Poly: division by zero polynomial");
        Poly q(var_), r(*this);
        std::vector<Rational> qc;
        if (degree() >= d.degree())
            qc.assign(static_cast<size_t>(degree() - d.degree() + 1), Rational(0));
        while (!r.is_zero() && r.degree() >= d.degree()) {
            const int k = r.degree() - d.degree();
            const Rational f = r.leading() / d.leading();
            qc[static_cast<size_t>(k)] = f;
            r -= Poly::monomial(f, static_cast<unsigned>(k), var_) * d;
        }
        return {Poly(std::move(qc), var_), r};
    }

    Poly exact_divide(const Poly& d) const {
        auto [q, r] = divmod(d);
        if (!r.is_zero())
            throw DivisibilityError("Poly: exact division left nonzero remainder", r.c_);
        return q;
    }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly(var_);
        std::vector<Rational> r(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i)
            r[i - 1] = c_[i] * Rational(static_cast<long>(i));
        return Poly(std::move(r), var_);
    }

    // composition: this(u), Horner over polynomials
    Poly substitute(const Poly& u) const {
        Poly acc(u.var());
        for (size_t i = c_.size(); i-- > 0;) {
            acc = acc * u + Poly::constant(c_[i], u.var());
        }
        return acc;
    }

    // exact evaluation at a rational point
    Rational evaluate(const Rational& x) const {
        Rational acc(0);
        for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }
    // Horner in any ring supporting +,* and construction from Rational
    template <class T>
    T evaluate_as(const T& x) const {
        T acc(0);
        for (size_t i = c_.size(); i-- > 0;) acc = acc * x + T(c_[i]);
        return acc;
    }

    // scales coefficients to relatively prime integers, positive leading
    Poly primitive_part() const {
        if (is_zero()) return *this;
        Integer num_gcd(0), den_lcm(1);
        for (const auto& c : c_) {
            num_gcd = boost::multiprecision::gcd(num_gcd, numerator(c));
            den_lcm = boost::multiprecision::lcm(den_lcm, denominator(c));
        }
        Rational scale = Rational(den_lcm) / Rational(num_gcd);
        if (leading() < 0) scale = -scale;
        return *this * scale;
    }

    Poly monic() const {
        if (is_zero()) return *this;
        return *this * (Rational(1) / leading());
    }

    static Poly gcd(Poly a, Poly b) {
        while (!b.is_zero()) {
            Poly r = a.divmod(b).second;
            a = std::move(b);
            b = std::move(r);
        }
        if (a.is_zero()) return a;
        return a.primitive_part();
    }

    // p / gcd(p, p'): same roots, all simple
    Poly square_free() const {
        if (is_zero()) throw std::invalid_argument("Poly: square_free of zero polynomial");
        Poly g = gcd(*this, derivative());
        if (g.degree() <= 0) return primitive_part();
        return exact_divide(g).primitive_part();
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (size_t i = c_.size(); i-- > 0;) {
            const Rational& c = c_[i];
            if (c == 0) continue;
            Rational a = c < 0 ? Rational(-c) : c;
            if (first) {
                if (c < 0) os << "-";
                first = false;
            } else {
                os << (c < 0 ? " - " : " + ");
            }
            if (i == 0 || a != 1) os << a.str();
            if (i > 0) {
                if (a != 1) os << "*";
                os << var_;
                if (i > 1) os << "^" << i;
            }
        }
        return os.str();
    }

private:
    static std::string join_vars(const Poly& a, const Poly& b) {
        if (a.is_constant()) return b.var_;
        if (b.is_constant()) return a.var_;
        if (a.var_ != b.var_)
            throw std::invalid_argument("Poly: mixed variables '" + a.var_ + "' and '" + b.var_ + "'");
        return a.var_;
    }
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::string var_ = "x";
    std::vector<Rational> c_;
};

} // namespace qes

#endif // QES_POLYNOMIAL_HPP
