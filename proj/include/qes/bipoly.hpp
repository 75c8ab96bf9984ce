#ifndef QES_BIPOLY_HPP
#define QES_BIPOLY_HPP

#include "qes/numeric.hpp"

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

namespace qes {

// Bivariate exact polynomial in (Y, Z).  Y exponents are stored doubled so
// that half-integer powers of Y stay integral; Z exponents may be negative
// (the recurrence seeds demand 1/Z and 1/sqrt(Y)).
class BiPoly {
public:
    // key: (doubled Y exponent, Z exponent)
    using Key = std::pair<int, int>;

    BiPoly() = default;

    static BiPoly term(const Rational& c, int y2, int z) {
        BiPoly p;
        if (c != 0) p.t_[{y2, z}] = c;
        return p;
    }
    static BiPoly constant(const Rational& c) { return term(c, 0, 0); }
    static BiPoly Y() { return term(1, 2, 0); }
    static BiPoly Z() { return term(1, 0, 1); }
    static BiPoly sqrtY() { return term(1, 1, 0); }

    bool is_zero() const { return t_.empty(); }
    const std::map<Key, Rational>& terms() const { return t_; }

    friend BiPoly operator+(const BiPoly& a, const BiPoly& b) {
        BiPoly r(a);
        for (const auto& [k, c] : b.t_) r.add_term(k, c);
        return r;
    }
    friend BiPoly operator-(const BiPoly& a, const BiPoly& b) {
        BiPoly r(a);
        for (const auto& [k, c] : b.t_) r.add_term(k, -c);
        return r;
    }
    BiPoly operator-() const {
        BiPoly r(*this);
        for (auto& [k, c] : r.t_) c = -c;
        return r;
    }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
        BiPoly r;
        for (const auto& [ka, ca] : a.t_)
            for (const auto& [kb, cb] : b.t_)
                r.add_term({ka.first + kb.first, ka.second + kb.second}, ca * cb);
        return r;
    }
    friend BiPoly operator*(const Rational& k, const BiPoly& a) {
        BiPoly r;
        if (k == 0) return r;
        r.t_ = a.t_;
        for (auto& [key, c] : r.t_) c *= k;
        return r;
    }

    friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.t_ == b.t_; }
    friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }

    int min_z_exponent() const {
        if (is_zero()) throw std::logic_error("BiPoly: min_z_exponent of zero");
        int m = t_.begin()->first.second;
        for (const auto& [k, c] : t_) m = std::min(m, k.second);
        return m;
    }

    bool divisible_by_z(int k) const {
        return is_zero() || min_z_exponent() >= k;
    }

    // exact division by Z^k; remainder terms (those with smaller Z power)
    // must be absent
    BiPoly divide_z(int k) const {
        BiPoly r, rem;
        for (const auto& [key, c] : t_) {
            if (key.second >= k) r.t_[{key.first, key.second - k}] = c;
            else rem.t_[key] = c;
        }
        if (!rem.is_zero())
            throw std::runtime_error("BiPoly: not divisible by Z^" + std::to_string(k) +
                                     ", remainder " + rem.str());
        return r;
    }

    // division by sqrt(Y): shift every doubled Y exponent down by one
    BiPoly divide_sqrt_y() const {
        BiPoly r;
        for (const auto& [key, c] : t_) r.t_[{key.first - 1, key.second}] = c;
        return r;
    }
    BiPoly times_sqrt_y() const {
        BiPoly r;
        for (const auto& [key, c] : t_) r.t_[{key.first + 1, key.second}] = c;
        return r;
    }

    // true when every Y exponent is a genuine integer and every Z exponent
    // is nonnegative
    bool is_polynomial() const {
        for (const auto& [key, c] : t_)
            if (key.first % 2 != 0 || key.first < 0 || key.second < 0) return false;
        return true;
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
            const auto& [key, c] = *it;
            Rational a = c < 0 ? Rational(-c) : c;
            if (first) { if (c < 0) os << "-"; first = false; }
            else os << (c < 0 ? " - " : " + ");
            bool wrote = false;
            if (a != 1 || (key.first == 0 && key.second == 0)) {
                os << a.str();
                wrote = true;
            }
            if (key.first != 0) {
                if (wrote) os << "*";
                if (key.first % 2 == 0) {
                    os << "Y";
                    if (key.first != 2) os << "^" << key.first / 2;
                } else {
                    os << "Y^(" << key.first << "/2)";
                }
                wrote = true;
            }
            if (key.second != 0) {
                if (wrote) os << "*";
                os << "Z";
                if (key.second != 1) os << "^" << key.second;
            }
        }
        return os.str();
    }

private:
    void add_term(const Key& k, const Rational& c) {
        auto it = t_.find(k);
        if (it == t_.end()) {
            if (c != 0) t_[k] = c;
        } else {
            it->second += c;
            if (it->second == 0) t_.erase(it);
        }
    }

    std::map<Key, Rational> t_;
};

} // namespace qes

#endif // QES_BIPOLY_HPP
