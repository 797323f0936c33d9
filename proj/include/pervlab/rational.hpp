/*
   Copyright 2026 the pervlab authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef PERVLAB_RATIONAL_HPP
#define PERVLAB_RATIONAL_HPP

#include <cstdint>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace pervlab {

/// Exact rational number over int64. All quantities handled here (totients,
/// B-values, bookkeeping scalars) are tiny, so no big-integer backend is
/// needed; overflow in intermediate products is avoided by cross-reduction.
class Rational {
   public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(long long n, long long d) : num_(n), den_(d) { normalize(); }

    long long num() const { return num_; }
    long long den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    bool is_negative() const { return num_ < 0; }

    /// Exact integer value; throws if the denominator is not 1.
    long long as_integer() const {
        if (den_ != 1) throw std::domain_error("Rational::as_integer: value " + to_string() + " is not an integer");
        return num_;
    }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    Rational operator-() const { return Rational(-num_, den_, raw_tag{}); }

    Rational& operator+=(const Rational& o) {
        long long g = std::gcd(den_, o.den_);
        long long lhs = num_ * (o.den_ / g);
        long long rhs = o.num_ * (den_ / g);
        num_ = lhs + rhs;
        den_ = den_ / g * o.den_;
        normalize();
        return *this;
    }
    Rational& operator-=(const Rational& o) { return *this += -o; }
    Rational& operator*=(const Rational& o) {
        long long g1 = std::gcd(std::abs(num_), o.den_);
        long long g2 = std::gcd(o.den_ == 0 ? 1 : std::abs(o.num_), den_);
        num_ = (num_ / g1) * (o.num_ / g2);
        den_ = (den_ / g2) * (o.den_ / g1);
        normalize();
        return *this;
    }
    Rational& operator/=(const Rational& o) {
        if (o.num_ == 0) throw std::domain_error("Rational: division by zero");
        return *this *= Rational(o.den_, o.num_);
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) { return a.num_ * b.den_ < b.num_ * a.den_; }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    std::string to_string() const {
        std::ostringstream os;
        os << num_;
        if (den_ != 1) os << '/' << den_;
        return os.str();
    }

    /// Parses "a" or "a/b".
    static Rational parse(const std::string& s) {
        auto slash = s.find('/');
        try {
            if (slash == std::string::npos) return Rational(std::stoll(s));
            return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
        } catch (const std::exception&) {
            throw std::invalid_argument("Rational::parse: bad input '" + s + "'");
        }
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

   private:
    struct raw_tag {};
    Rational(long long n, long long d, raw_tag) : num_(n), den_(d) {}

    void normalize() {
        if (den_ == 0) throw std::domain_error("Rational: zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        long long g = std::gcd(std::abs(num_), den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
        if (num_ == 0) den_ = 1;
    }

    long long num_;
    long long den_;
};

/// Euler's totient.
inline long long euler_phi(long long r) {
    if (r <= 0) throw std::domain_error("euler_phi: argument must be positive");
    long long result = r, n = r;
    for (long long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            result -= result / p;
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

/// Count of k in [1, bound] coprime to r (bound may exceed r).
inline long long coprime_count_upto(long long r, long long bound) {
    if (bound <= 0) return 0;
    long long c = 0;
    for (long long k = 1; k <= bound; ++k)
        if (std::gcd(k, r) == 1) ++c;
    return c;
}

}  // namespace pervlab

#endif
