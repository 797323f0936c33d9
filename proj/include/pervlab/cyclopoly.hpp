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

#ifndef PERVLAB_CYCLOPOLY_HPP
#define PERVLAB_CYCLOPOLY_HPP

#include <array>
#include <cmath>
#include <complex>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rational.hpp"

namespace pervlab {

// ===========================================================================
// Factors
//
// A factor is either a plain cyclotomic polynomial Phi_r, or one of the six
// quadratic-field factors arising from the splittings
//
//   Phi_8  = (q^2 + r2 q + 1)(q^2 - r2 q + 1)                over Q(sqrt 2)
//   Phi_12 = (q^2 + r3 q + 1)(q^2 - r3 q + 1)                over Q(sqrt 3)
//   Phi_24 = (q^4 + r2 q^3 + q^2 + r2 q + 1)(q^4 - ...)      over Q(sqrt 2)
//
// The '+' factor of each pair is written P8a/P12a/P24a, the '-' factor
// P8b/P12b/P24b.
// ===========================================================================

enum class Twist : int { none = 0, a = 1, b = 2 };

struct CycloFactor {
    long long r = 1;
    Twist twist = Twist::none;

    CycloFactor() = default;
    explicit CycloFactor(long long r_, Twist t = Twist::none) : r(r_), twist(t) {
        if (r < 1) throw std::domain_error("CycloFactor: index must be >= 1");
        if (twist != Twist::none && r != 8 && r != 12 && r != 24)
            throw std::domain_error("CycloFactor: twisted factors exist only for indices 8, 12, 24");
    }

    bool twisted() const { return twist != Twist::none; }

    /// Degree as a polynomial in q.
    long long degree() const {
        if (!twisted()) return euler_phi(r);
        return r == 24 ? 4 : 2;
    }

    /// 2 or 3 for twisted factors (the square root in the coefficients), 1 otherwise.
    int field() const {
        if (!twisted()) return 1;
        return r == 12 ? 3 : 2;
    }

    friend bool operator==(const CycloFactor& x, const CycloFactor& y) { return x.r == y.r && x.twist == y.twist; }
    friend bool operator!=(const CycloFactor& x, const CycloFactor& y) { return !(x == y); }
    friend bool operator<(const CycloFactor& x, const CycloFactor& y) {
        if (x.r != y.r) return x.r < y.r;
        return static_cast<int>(x.twist) < static_cast<int>(y.twist);
    }

    std::string to_string() const {
        std::string s = "P" + std::to_string(r);
        if (twist == Twist::a) s += 'a';
        if (twist == Twist::b) s += 'b';
        return s;
    }

    /// Parses "P6", "P8a", "P24b".
    static CycloFactor parse(const std::string& s) {
        if (s.size() < 2 || s[0] != 'P') throw std::invalid_argument("CycloFactor::parse: bad token '" + s + "'");
        std::string body = s.substr(1);
        Twist t = Twist::none;
        if (body.back() == 'a') {
            t = Twist::a;
            body.pop_back();
        } else if (body.back() == 'b') {
            t = Twist::b;
            body.pop_back();
        }
        return CycloFactor(std::stoll(body), t);
    }
};

/// Arguments of the zeros of a twisted factor, as exact fractions of a full
/// turn. Hard-coded from the explicit quadratic/quartic forms; see
/// validate_twisted_data() which re-expands each factor from these roots and
/// compares against the printed coefficients.
inline const std::vector<Rational>& twisted_root_turns(const CycloFactor& f) {
    static const std::vector<Rational> r8a{{3, 8}, {5, 8}};
    static const std::vector<Rational> r8b{{1, 8}, {7, 8}};
    static const std::vector<Rational> r12a{{5, 12}, {7, 12}};
    static const std::vector<Rational> r12b{{1, 12}, {11, 12}};
    static const std::vector<Rational> r24a{{5, 24}, {11, 24}, {13, 24}, {19, 24}};
    static const std::vector<Rational> r24b{{1, 24}, {7, 24}, {17, 24}, {23, 24}};
    if (!f.twisted()) throw std::domain_error("twisted_root_turns: plain factor");
    if (f.r == 8) return f.twist == Twist::a ? r8a : r8b;
    if (f.r == 12) return f.twist == Twist::a ? r12a : r12b;
    return f.twist == Twist::a ? r24a : r24b;
}

// ===========================================================================
// Scalars a + b*sqrt(m)
// ===========================================================================

/// Element of Q, Q(sqrt 2) or Q(sqrt 3), stored as a + b*sqrt(m). Purely
/// rational values are canonicalized to m = 1. Mixing different square roots
/// in one product is rejected.
struct QuadScalar {
    Rational a;
    Rational b;
    int m = 1;

    QuadScalar() : a(1), b(0), m(1) {}
    QuadScalar(Rational a_) : a(a_), b(0), m(1) {}
    QuadScalar(Rational a_, Rational b_, int m_) : a(a_), b(b_), m(m_) { normalize(); }

    static QuadScalar one() { return QuadScalar(Rational(1)); }
    static QuadScalar sqrt_of(int m_) { return QuadScalar(Rational(0), Rational(1), m_); }

    bool is_zero() const { return a.is_zero() && b.is_zero(); }
    bool is_rational() const { return b.is_zero(); }

    double to_double() const { return a.to_double() + b.to_double() * std::sqrt(static_cast<double>(m)); }

    QuadScalar operator-() const { return QuadScalar(-a, -b, m); }

    QuadScalar& operator*=(const QuadScalar& o) {
        if (!b.is_zero() && !o.b.is_zero() && m != o.m)
            throw std::domain_error("QuadScalar: product would mix sqrt(" + std::to_string(m) + ") and sqrt(" +
                                    std::to_string(o.m) + ")");
        int mm = b.is_zero() ? o.m : m;
        Rational na = a * o.a + b * o.b * Rational(mm);
        Rational nb = a * o.b + b * o.a;
        a = na;
        b = nb;
        m = mm;
        normalize();
        return *this;
    }
    friend QuadScalar operator*(QuadScalar x, const QuadScalar& y) { return x *= y; }

    QuadScalar inverse() const {
        // 1/(a + b sqrt m) = (a - b sqrt m)/(a^2 - m b^2)
        Rational nrm = a * a - b * b * Rational(m);
        if (nrm.is_zero()) throw std::domain_error("QuadScalar: inverse of zero");
        return QuadScalar(a / nrm, -b / nrm, m);
    }

    friend bool operator==(const QuadScalar& x, const QuadScalar& y) {
        return x.a == y.a && x.b == y.b && (x.b.is_zero() || x.m == y.m);
    }
    friend bool operator!=(const QuadScalar& x, const QuadScalar& y) { return !(x == y); }

    /// "(a)" / "(a+b r2)" / "(a-b r3)"; "1" prints as empty contribution.
    std::string to_string() const {
        std::ostringstream os;
        os << '(' << a.to_string();
        if (!b.is_zero()) {
            os << (b.is_negative() ? "-" : "+");
            Rational ab = b.is_negative() ? -b : b;
            os << ab.to_string() << " r" << m;
        }
        os << ')';
        return os.str();
    }

    static QuadScalar parse(std::string s);

   private:
    void normalize() {
        if (b.is_zero())
            m = 1;
        else if (m != 2 && m != 3)
            throw std::domain_error("QuadScalar: sqrt index must be 2 or 3");
    }
};

inline QuadScalar QuadScalar::parse(std::string s) {
    if (!s.empty() && s.front() == '(') s = s.substr(1, s.size() - 2);
    // split at the last '+'/'-' that is not at position 0
    size_t split = std::string::npos;
    for (size_t i = 1; i < s.size(); ++i)
        if (s[i] == '+' || s[i] == '-') split = i;
    auto rpos = s.find(" r");
    if (rpos == std::string::npos) return QuadScalar(Rational::parse(s));
    std::string left = s.substr(0, split);
    std::string mid = s.substr(split, rpos - split);
    int m = std::stoi(s.substr(rpos + 2));
    Rational b = Rational::parse(mid == "+" || mid == "-" ? mid + "1" : mid);
    return QuadScalar(Rational::parse(left), b, m);
}

// ===========================================================================
// ScaledCycloProduct
// ===========================================================================

/// A product  scalar * q^e * prod Phi^mult.  Multiplicities may be negative,
/// so quotients of such products stay in the same representation; values with
/// all multiplicities non-negative are honest polynomials in q.
class ScaledCycloProduct {
   public:
    ScaledCycloProduct() : scalar_(QuadScalar::one()), qexp_(0) {}

    static ScaledCycloProduct one() { return ScaledCycloProduct(); }

    static ScaledCycloProduct q_power(long long e) {
        ScaledCycloProduct f;
        f.qexp_ = e;
        return f;
    }

    static ScaledCycloProduct cyclotomic(const CycloFactor& c, long long mult = 1) {
        ScaledCycloProduct f;
        if (mult != 0) f.factors_[c] = mult;
        return f;
    }
    static ScaledCycloProduct cyclotomic(long long r, long long mult = 1) {
        return cyclotomic(CycloFactor(r), mult);
    }

    static ScaledCycloProduct constant(const QuadScalar& s) {
        if (s.is_zero()) throw std::domain_error("ScaledCycloProduct: zero scalar");
        ScaledCycloProduct f;
        f.scalar_ = s;
        return f;
    }

    const QuadScalar& scalar() const { return scalar_; }
    long long qexp() const { return qexp_; }
    const std::map<CycloFactor, long long>& factors() const { return factors_; }

    long long multiplicity(const CycloFactor& c) const {
        auto it = factors_.find(c);
        return it == factors_.end() ? 0 : it->second;
    }

    bool is_polynomial() const {
        if (qexp_ < 0) return false;
        for (auto& [c, m] : factors_)
            if (m < 0) return false;
        return true;
    }

    bool has_twisted_factor() const {
        for (auto& [c, m] : factors_)
            if (c.twisted()) return true;
        return false;
    }

    /// Total degree in q (exact; negative multiplicities subtract).
    long long degree() const {
        long long deg = qexp_;
        for (auto& [c, m] : factors_) deg += m * c.degree();
        return deg;
    }

    ScaledCycloProduct& operator*=(const ScaledCycloProduct& o) {
        scalar_ *= o.scalar_;
        qexp_ += o.qexp_;
        for (auto& [c, m] : o.factors_) {
            long long nm = (factors_[c] += m);
            if (nm == 0) factors_.erase(c);
        }
        return *this;
    }
    friend ScaledCycloProduct operator*(ScaledCycloProduct x, const ScaledCycloProduct& y) { return x *= y; }

    ScaledCycloProduct& operator/=(const ScaledCycloProduct& o) {
        scalar_ *= o.scalar_.inverse();
        qexp_ -= o.qexp_;
        for (auto& [c, m] : o.factors_) {
            long long nm = (factors_[c] -= m);
            if (nm == 0) factors_.erase(c);
        }
        return *this;
    }
    friend ScaledCycloProduct operator/(ScaledCycloProduct x, const ScaledCycloProduct& y) { return x /= y; }

    ScaledCycloProduct& negate() {
        scalar_ = -scalar_;
        return *this;
    }

    friend bool operator==(const ScaledCycloProduct& x, const ScaledCycloProduct& y) {
        return x.scalar_ == y.scalar_ && x.qexp_ == y.qexp_ && x.factors_ == y.factors_;
    }
    friend bool operator!=(const ScaledCycloProduct& x, const ScaledCycloProduct& y) { return !(x == y); }

    std::complex<double> evaluate_at(std::complex<double> z) const;
    double evaluate_at(double q) const { return evaluate_at(std::complex<double>(q, 0.0)).real(); }

    std::string to_string() const;
    static ScaledCycloProduct parse(const std::string& text);

   private:
    QuadScalar scalar_;
    long long qexp_;
    std::map<CycloFactor, long long> factors_;
};

inline std::complex<double> ScaledCycloProduct::evaluate_at(std::complex<double> z) const {
    std::complex<double> v(scalar_.to_double(), 0.0);
    v *= std::pow(z, std::complex<double>(static_cast<double>(qexp_), 0.0));
    constexpr double two_pi = 6.283185307179586476925286766559;
    for (auto& [c, m] : factors_) {
        std::complex<double> fv;
        if (!c.twisted()) {
            fv = 1.0;
            for (long long k = 1; k <= c.r; ++k)
                if (std::gcd(k, c.r) == 1) fv *= z - std::polar(1.0, two_pi * static_cast<double>(k) / static_cast<double>(c.r));
        } else {
            double rt = std::sqrt(static_cast<double>(c.field()));
            double sign = c.twist == Twist::a ? 1.0 : -1.0;
            if (c.r == 24)
                fv = (((z + sign * rt) * z + 1.0) * z + sign * rt) * z + 1.0;
            else
                fv = (z + sign * rt) * z + 1.0;
        }
        fv = std::pow(fv, std::complex<double>(static_cast<double>(m), 0.0));
        v *= fv;
    }
    return v;
}

inline std::string ScaledCycloProduct::to_string() const {
    std::ostringstream os;
    bool first = true;
    if (!(scalar_ == QuadScalar::one())) {
        os << scalar_.to_string();
        first = false;
    }
    if (qexp_ != 0) {
        if (!first) os << ' ';
        os << 'q';
        if (qexp_ != 1) os << '^' << qexp_;
        first = false;
    }
    for (auto& [c, m] : factors_) {
        if (!first) os << ' ';
        os << c.to_string();
        if (m != 1) os << '^' << m;
        first = false;
    }
    if (first) os << '1';
    return os.str();
}

inline ScaledCycloProduct ScaledCycloProduct::parse(const std::string& text) {
    ScaledCycloProduct f;
    std::istringstream is(text);
    std::string tok;
    while (is >> tok) {
        if (tok == "1") continue;
        if (tok.front() == '(') {
            while (tok.back() != ')') {  // scalar tokens may contain a space, as in "(0+1/2 r2)"
                std::string more;
                if (!(is >> more)) throw std::invalid_argument("ScaledCycloProduct::parse: unterminated scalar");
                tok += ' ' + more;
            }
            f.scalar_ *= QuadScalar::parse(tok);
            continue;
        }
        long long exp = 1;
        auto caret = tok.find('^');
        if (caret != std::string::npos) {
            exp = std::stoll(tok.substr(caret + 1));
            tok = tok.substr(0, caret);
        }
        if (tok == "q") {
            f.qexp_ += exp;
        } else if (tok.front() == 'P') {
            CycloFactor c = CycloFactor::parse(tok);
            long long nm = (f.factors_[c] += exp);
            if (nm == 0) f.factors_.erase(c);
        } else {
            // bare rational scalar such as "2" or "1/2"
            f.scalar_ *= QuadScalar(Rational::parse(tok));
        }
    }
    if (f.scalar_.is_zero()) throw std::domain_error("ScaledCycloProduct::parse: zero scalar");
    return f;
}

// ===========================================================================
// Standard factorizations and the -q substitution
// ===========================================================================

/// Exact factorization of q^a + sign*q^b into a q-power and plain cyclotomic
/// factors: q^a - q^b = q^b prod_{m | a-b} Phi_m, and q^a + q^b uses the
/// divisors of 2(a-b) not dividing (a-b). For a = b with sign +1 the result
/// is the constant 2 times q^a.
inline ScaledCycloProduct factor_q_power_difference(long long a, long long b, int sign) {
    if (sign != 1 && sign != -1) throw std::domain_error("factor_q_power_difference: sign must be +1 or -1");
    if (a < b) {
        if (sign == -1) throw std::domain_error("factor_q_power_difference: q^a - q^b with a < b is negative");
        std::swap(a, b);
    }
    if (a == b && sign == -1) throw std::domain_error("factor_q_power_difference: zero polynomial");
    ScaledCycloProduct f = ScaledCycloProduct::q_power(b);
    long long n = a - b;
    if (sign == -1) {
        for (long long m = 1; m <= n; ++m)
            if (n % m == 0) f *= ScaledCycloProduct::cyclotomic(m);
    } else if (n == 0) {
        f *= ScaledCycloProduct::constant(QuadScalar(Rational(2)));
    } else {
        for (long long m = 1; m <= 2 * n; ++m)
            if ((2 * n) % m == 0 && n % m != 0) f *= ScaledCycloProduct::cyclotomic(m);
    }
    return f;
}

/// Replaces q by -q in a plain product: Phi_r <-> Phi_2r for odd r,
/// Phi_r -> Phi_{r/2} for r = 2 mod 4, fixed when 4 | r. The scalar sign is
/// adjusted so the result evaluates positive whenever the input did.
inline ScaledCycloProduct substitute_neg_q(const ScaledCycloProduct& f) {
    if (f.has_twisted_factor()) throw std::domain_error("substitute_neg_q: plain factors only");
    ScaledCycloProduct out = ScaledCycloProduct::q_power(f.qexp());
    long long sign_flips = f.qexp();
    for (auto& [c, m] : f.factors()) {
        long long r = c.r;
        long long image;
        if (r % 2 == 1)
            image = 2 * r;
        else if (r % 4 == 2)
            image = r / 2;
        else
            image = r;
        if (r == 1 || r == 2) sign_flips += m;  // Phi_1(-q) = -Phi_2(q), Phi_2(-q) = -Phi_1(q)
        out *= ScaledCycloProduct::cyclotomic(image, m);
    }
    QuadScalar s = f.scalar();
    bool positive_before = s.to_double() > 0;
    if (sign_flips % 2 != 0) s = -s;
    if (positive_before && s.to_double() < 0) s = -s;  // keep degrees positive
    out *= ScaledCycloProduct::constant(s);
    return out;
}

// ===========================================================================
// The B homomorphism
// ===========================================================================

/// B-values are exact rationals with denominator 1 or 2.
struct BValue {
    Rational value;

    BValue() = default;
    explicit BValue(Rational v) : value(v) {
        if (v.den() != 1 && v.den() != 2)
            throw std::logic_error("BValue: denominator must divide 2, got " + v.to_string());
    }
};

/// Designates which B function to apply: B_d for a plain positive integer d,
/// or the twisted variant attached to one of the six quadratic factors. The
/// twisted variant attached to alpha is determined by the pair (d, k) where
/// 2*k*pi/d is the argument of the zero of alpha of least argument.
struct BKind {
    int d = 1;
    int k = 1;
    std::optional<CycloFactor> alpha;

    static BKind plain(int d) {
        if (d < 1) throw std::domain_error("BKind: d must be >= 1");
        BKind b;
        b.d = d;
        b.k = 1;
        return b;
    }

    static BKind twisted(const CycloFactor& alpha) {
        if (!alpha.twisted()) throw std::domain_error("BKind::twisted: factor is not twisted");
        BKind b;
        b.alpha = alpha;
        b.d = static_cast<int>(alpha.r);
        // least argument 2k*pi/d of a zero of alpha
        Rational least = twisted_root_turns(alpha).front();
        for (auto& t : twisted_root_turns(alpha))
            if (t < least) least = t;
        b.k = static_cast<int>((least * Rational(b.d)).as_integer());
        return b;
    }

    bool is_twisted() const { return alpha.has_value(); }

    /// CLI spelling: "6", "8a", "24b", ...
    std::string tag() const {
        std::string s = std::to_string(d);
        if (alpha) s += alpha->twist == Twist::a ? "a" : "b";
        return s;
    }

    static BKind parse_tag(const std::string& tag) {
        if (tag.empty()) throw std::invalid_argument("BKind: empty tag");
        char last = tag.back();
        if (last == 'a' || last == 'b') {
            long long d = std::stoll(tag.substr(0, tag.size() - 1));
            return twisted(CycloFactor(d, last == 'a' ? Twist::a : Twist::b));
        }
        return plain(std::stoi(tag));
    }
};

/// Modified totient: the number of naturals coprime to r that are at most
/// r/d, with the convention phi_d(1) = 1/2. For d = 1 this is phi(r) for
/// r > 1 (the case the general definition leaves implicit).
inline Rational phi_d_totient(long long r, long long d) {
    if (r < 1 || d < 1) throw std::domain_error("phi_d_totient: arguments must be positive");
    if (r == 1) return Rational(1, 2);
    return Rational(coprime_count_upto(r, r / d));
}

namespace detail {

/// B applied to a single factor, by the zero-counting rule: k*deg + d * #{
/// zeros with argument in (0, 2k*pi/d] }, except that Phi_1 is k + d/2.
inline Rational b_of_factor(const BKind& kind, const CycloFactor& c) {
    const long long d = kind.d, k = kind.k;
    if (!c.twisted()) {
        if (c.r == 1) return Rational(k) + Rational(d, 2);
        // zeros of Phi_r at turns j/r, gcd(j,r)=1; count j/r <= k/d
        long long count = 0;
        for (long long j = 1; j * d <= c.r * k && j <= c.r; ++j)
            if (std::gcd(j, c.r) == 1) ++count;
        return Rational(k * c.degree() + d * count);
    }
    long long count = 0;
    for (auto& t : twisted_root_turns(c))
        if (t <= Rational(k, d)) ++count;
    return Rational(k * c.degree() + d * count);
}

}  // namespace detail

/// The homomorphism B applied to a ScaledCycloProduct; the scalar is ignored
/// and B(q) = 2k. Additive over multiplication by construction.
inline BValue b_value(const BKind& kind, const ScaledCycloProduct& f) {
    if (kind.alpha) {
        if (f.multiplicity(*kind.alpha) > 0)
            throw std::domain_error("b_value: input divisible by " + kind.alpha->to_string() + "; not considered");
        for (auto& [c, m] : f.factors())
            if (c.twisted() && c.field() != kind.alpha->field())
                throw std::domain_error("b_value: twisted factor " + c.to_string() + " lies over a different quadratic field than " +
                                        kind.alpha->to_string());
    }
    Rational total = Rational(2 * kind.k) * Rational(f.qexp());
    for (auto& [c, m] : f.factors()) total += Rational(m) * detail::b_of_factor(kind, c);
    return BValue(total);
}

/// Plain B_d, defined on products of plain cyclotomic factors and powers of
/// q. A twisted factor in the input is a domain error; use b_twisted.
inline BValue b_d(int d, const ScaledCycloProduct& f) {
    if (f.has_twisted_factor())
        throw std::domain_error("b_d: input has a twisted factor; use b_twisted with the block's alpha");
    return b_value(BKind::plain(d), f);
}

/// Twisted B attached to alpha (one of P8a/P8b/P12a/P12b/P24a/P24b).
inline BValue b_twisted(const CycloFactor& alpha, const ScaledCycloProduct& f) {
    return b_value(BKind::twisted(alpha), f);
}

// ===========================================================================
// Startup validation of the twisted data
// ===========================================================================

/// Re-expands each twisted factor from its stored root set and compares the
/// coefficients with the explicit quadratic/quartic forms. Throws on any
/// mismatch; cheap enough to run in tests and at CLI startup.
inline void validate_twisted_data() {
    constexpr double tol = 1e-12;
    constexpr double two_pi = 6.283185307179586476925286766559;
    for (long long r : {8LL, 12LL, 24LL}) {
        for (Twist t : {Twist::a, Twist::b}) {
            CycloFactor c(r, t);
            const auto& roots = twisted_root_turns(c);
            std::vector<std::complex<double>> coeff{1.0};
            for (auto& turn : roots) {
                std::complex<double> z = std::polar(1.0, two_pi * turn.to_double());
                coeff.push_back(0.0);
                for (size_t i = coeff.size() - 1; i > 0; --i) coeff[i] = coeff[i - 1] - z * coeff[i];
                coeff[0] = -z * coeff[0];
            }
            // coeff holds prod (x - z), constant term first.
            double rt = std::sqrt(static_cast<double>(c.field()));
            double s = t == Twist::a ? 1.0 : -1.0;
            std::vector<double> expect;
            if (r == 24)
                expect = {1.0, s * rt, 1.0, s * rt, 1.0};
            else
                expect = {1.0, s * rt, 1.0};
            if (coeff.size() != expect.size()) throw std::logic_error("validate_twisted_data: degree mismatch for " + c.to_string());
            for (size_t i = 0; i < expect.size(); ++i) {
                if (std::abs(coeff[i].real() - expect[i]) > tol || std::abs(coeff[i].imag()) > tol)
                    throw std::logic_error("validate_twisted_data: coefficient mismatch for " + c.to_string());
            }
        }
    }
}

}  // namespace pervlab

#endif
