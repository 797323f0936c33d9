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

#ifndef PERVLAB_PERVERSITY_HPP
#define PERVLAB_PERVERSITY_HPP

#include <complex>
#include <optional>

#include "unideg.hpp"

namespace pervlab {

/// Raised when a computation contradicts a structural guarantee (a
/// non-integral perversity value, a non-real sign evaluation, ...). These
/// are theorem violations, not user errors, and are surfaced loudly.
struct InvariantViolation : std::logic_error {
    using std::logic_error::logic_error;
};

struct PiValue {
    long long value;
};

/// pi = (B(chi) - B(psi)) / d, which is guaranteed to be an integer; a
/// fractional result throws InvariantViolation.
inline PiValue pi_from_degrees(const BKind& kind, const ScaledCycloProduct& chi_degree,
                               const ScaledCycloProduct& psi_degree) {
    Rational diff = b_value(kind, chi_degree).value - b_value(kind, psi_degree).value;
    Rational ratio = diff / Rational(kind.d);
    if (!ratio.is_integer())
        throw InvariantViolation("perversity is not an integer: (" + diff.to_string() + ")/" + std::to_string(kind.d) +
                                 " for degree " + chi_degree.to_string());
    return PiValue{ratio.as_integer()};
}

inline PiValue pi(const BlockSpec& block, const CharLabel& chi) {
    return pi_from_degrees(block.kind(), degree_of(block.family, chi), block.cuspidal_degree);
}

// ===========================================================================
// Closed combinatorial forms
// ===========================================================================

namespace detail {

inline long long position_in_descending(const std::vector<long long>& desc, long long x) {
    for (size_t i = 0; i < desc.size(); ++i)
        if (desc[i] == x) return static_cast<long long>(i) + 1;
    throw std::logic_error("position_in_descending: element not found");
}

/// #{v in vals : parity matches and 0 < 2(v - x) < 2*upper_num/upper_den}
/// with the bound upper = numerator/2 (so callers pass doubled bounds and we
/// stay in integers).
inline long long count_in_open_window(const std::vector<long long>& vals, long long x, bool odd_elems,
                                      long long twice_lo, long long twice_hi) {
    long long c = 0;
    for (long long v : vals) {
        if ((std::llabs(v) % 2 == 1) != odd_elems) continue;
        long long twice_diff = 2 * (v - x);
        if (twice_diff > twice_lo && twice_diff < twice_hi) ++c;
    }
    return c;
}

}  // namespace detail

/// Closed form for the linear family: the branch-j character obtained by
/// adding the d-hook at the j-th largest hookable position of the d-core.
inline long long pi_closed_gl(const BetaSet& core, int d, int j) {
    BetaSet X = core.padded_for_hooks(d);
    auto hook = X.hookable_positions(d);
    if (static_cast<int>(hook.size()) != d) throw std::logic_error("pi_closed_gl: normalization failed");
    if (j < 1 || j > d) throw std::domain_error("pi_closed_gl: branch index out of range");
    long long x = hook[static_cast<size_t>(j - 1)];
    long long n = X.rank();
    long long s = static_cast<long long>(X.size());
    long long idx = detail::position_in_descending(X.elements(), x);
    return 2 * (n - x + s - idx) + (j - 1);
}

/// Closed form for the unitary family. The branch is selected by the parity
/// of the hookable positions (even positions form one branch, odd the
/// other); i is the 1-based index along the branch, largest position first.
inline long long pi_closed_gu(const BetaSet& core, int d, bool odd_branch, int i) {
    const int e = e_from_d(Family::GU, d);
    BetaSet X = core.padded_for_hooks(e);
    if (odd_branch) X = X.shifted(1);  // swaps the two branches
    auto hook = X.hookable_positions(e);
    if (static_cast<int>(hook.size()) != e) throw std::logic_error("pi_closed_gu: normalization failed");
    std::vector<long long> branch;
    for (long long h : hook)
        if (h % 2 == 0) branch.push_back(h);
    if (i < 1 || i > static_cast<int>(branch.size())) throw std::domain_error("pi_closed_gu: branch index out of range");
    long long x = branch[static_cast<size_t>(i - 1)];
    long long n = X.rank();
    long long s = static_cast<long long>(X.size());
    long long alpha = detail::position_in_descending(X.elements(), x);
    const auto& xs = X.elements();

    if (d % 4 == 0) {  // e = d
        long long f2 = detail::count_in_open_window(xs, x, true, 0, d);       // odd, (0, d/2)
        long long f3 = detail::count_in_open_window(xs, x, false, 0, 2 * d);  // even, (0, d)
        return 2 * (n - x) + 2 * (s - alpha) + 2 * f2 + f3;
    }
    if (d % 2 == 0) {  // e = d/2
        long long f2 = detail::count_in_open_window(xs, x, true, 0, d);  // odd, (0, d/2)
        return (n - x) + (s - alpha) + f2;
    }
    // d odd, e = 2d
    long long f2 = detail::count_in_open_window(xs, x, true, 0, d);           // odd, (0, d/2)
    long long f3 = detail::count_in_open_window(xs, x, false, 0, 2 * d);      // even, (0, d)
    long long f4 = detail::count_in_open_window(xs, x, true, d, 3 * d);       // odd, (d/2, 3d/2)
    long long f5 = detail::count_in_open_window(xs, x, false, 2 * d, 4 * d);  // even, (d, 2d)
    return 4 * (n - x) + 4 * (s - alpha) + 4 * f2 + 3 * f3 + 2 * f4 + f5;
}

namespace detail {

/// #{y in other row : x - y > -d/2}, i.e. y < x + d/2.
inline long long f1_count(const std::vector<long long>& other, long long x, int d) {
    long long c = 0;
    for (long long y : other)
        if (2 * y < 2 * x + d) ++c;
    return c;
}

inline std::vector<long long> cross_addables(const BetaSet& from, const BetaSet& to, int e) {
    std::vector<long long> out;
    for (long long x : from.elements())
        if (!to.contains(x + e)) out.push_back(x);
    return out;
}

/// Pads a fixed representative (both rows shifted together, bypassing symbol
/// canonicalization) until the addable-position counts reach their stable
/// values: e per row for hooks, e +/- (row size difference) for cohooks.
/// Returns the rows with `side` first.
inline std::pair<BetaSet, BetaSet> pad_symbol_rows(const Symbol& sym, int e, bool cocores, Side side) {
    BetaSet r1 = sym.row(side);
    BetaSet r2 = sym.row(side == Side::X ? Side::Y : Side::X);
    long long delta = static_cast<long long>(r1.size()) - static_cast<long long>(r2.size());
    for (long long guard = 0; guard < 8 * e + 16 + std::llabs(delta); ++guard) {
        bool ready;
        if (cocores)
            ready = static_cast<long long>(cross_addables(r1, r2, e).size()) == e + delta &&
                    static_cast<long long>(cross_addables(r2, r1, e).size()) == e - delta;
        else
            ready = static_cast<long long>(r1.hookable_positions(e).size()) == e &&
                    static_cast<long long>(r2.hookable_positions(e).size()) == e;
        if (ready) return {r1, r2};
        r1 = r1.shifted(1);
        r2 = r2.shifted(1);
    }
    throw std::logic_error("pad_symbol_rows: failed to normalize " + sym.to_string());
}

}  // namespace detail

/// Closed form for types B/C. For odd d the core's branch positions are the
/// within-row hookable positions; for even d (cocore blocks) they are the
/// cross-row cohookable ones. Side::X refers to the canonical first row.
inline long long pi_closed_bc(const Symbol& core, int d, Side side, int i) {
    const int e = d % 2 == 1 ? d : d / 2;
    const bool cocores = d % 2 == 0;
    auto [row, other] = detail::pad_symbol_rows(core, e, cocores, side);
    std::vector<long long> branch =
        cocores ? detail::cross_addables(row, other, e) : row.hookable_positions(e);
    if (i < 1 || i > static_cast<int>(branch.size())) throw std::domain_error("pi_closed_bc: branch index out of range");
    long long x = branch[static_cast<size_t>(i - 1)];
    long long n = core.rank();
    long long s = static_cast<long long>(row.size());
    long long alpha = detail::position_in_descending(row.elements(), x);
    long long f1 = detail::f1_count(other.elements(), x, d);
    if (d % 2 == 1) return 4 * (n - x) + 2 * (s - alpha + f1) + (i - 1);
    return 2 * (n - x) + (s - alpha) + f1;
}

/// Closed form for the even orthogonal types: the B/C form shifted by the
/// change in the leading order factor (-2 for odd d, -1 for even d).
inline long long pi_closed_d(const Symbol& core, int d, Side side, int i) {
    return pi_closed_bc(core, d, side, i) - (d % 2 == 1 ? 2 : 1);
}

inline long long pi_closed(Family f, const CharLabel& core, int d, Side side_or_parity, int i) {
    switch (f) {
        case Family::GL: return pi_closed_gl(BetaSet::from_partition(std::get<Partition>(core),
                                                                     std::get<Partition>(core).length()),
                                             d, i);
        case Family::GU: return pi_closed_gu(BetaSet::from_partition(std::get<Partition>(core),
                                                                     std::get<Partition>(core).length()),
                                             d, side_or_parity == Side::Y, i);
        case Family::BC: return pi_closed_bc(std::get<Symbol>(core), d, side_or_parity, i);
        default: return pi_closed_d(std::get<Symbol>(core), d, side_or_parity, i);
    }
}

// ===========================================================================
// Theorem checkers
// ===========================================================================

struct CheckReport {
    long long checked = 0;
    long long skipped = 0;
    std::vector<std::string> violations;

    bool ok() const { return violations.empty(); }
};

/// Integrality of pi across a block (the computation itself throws on a
/// fractional value; this wrapper reports instead).
inline CheckReport check_integrality(const BlockSpec& block) {
    CheckReport rep;
    for (const CharLabel& chi : block.characters) {
        try {
            pi(block, chi);
            ++rep.checked;
        } catch (const InvariantViolation& e) {
            rep.violations.push_back(label_to_string(chi) + ": " + e.what());
        }
    }
    return rep;
}

/// Sign test: the degree quotient chi(1)/psi(1), evaluated at the primitive
/// d-th root of unity, must be real with sign (-1)^pi. Characters whose
/// quotient is divisible by the d-th cyclotomic factor are skipped with a
/// flag (the congruence behind the test does not apply there).
inline CheckReport check_parity(const BlockSpec& block, double tol = 1e-8) {
    CheckReport rep;
    const std::complex<double> zeta = std::polar(1.0, 2.0 * 3.14159265358979323846 / block.d);
    for (const CharLabel& chi : block.characters) {
        ScaledCycloProduct quotient = degree_of(block.family, chi) / block.cuspidal_degree;
        if (quotient.multiplicity(CycloFactor(block.d)) > 0) {
            ++rep.skipped;
            continue;
        }
        long long p = pi(block, chi).value;
        std::complex<double> v = quotient.evaluate_at(zeta);
        if (std::abs(v.imag()) > tol * std::abs(v)) {
            rep.violations.push_back(label_to_string(chi) + ": quotient evaluates off the real line, " +
                                     std::to_string(v.real()) + " + " + std::to_string(v.imag()) + "i");
            continue;
        }
        double expected_sign = p % 2 == 0 ? 1.0 : -1.0;
        if (v.real() * expected_sign <= 0) {
            rep.violations.push_back(label_to_string(chi) + ": sign mismatch, value " + std::to_string(v.real()) +
                                     " vs (-1)^" + std::to_string(p));
            continue;
        }
        ++rep.checked;
    }
    return rep;
}

/// For d in {1,2} and the principal block, pi must equal 2 deg(chi(1))/d.
inline CheckReport check_d12_shortcut(const BlockSpec& block) {
    if (block.d != 1 && block.d != 2) throw std::domain_error("check_d12_shortcut: requires d in {1,2}");
    if (!block.principal) throw std::domain_error("check_d12_shortcut: requires the principal block");
    CheckReport rep;
    for (const CharLabel& chi : block.characters) {
        long long lhs = pi(block, chi).value;
        ScaledCycloProduct deg = degree_of(block.family, chi);
        long long rhs_num = 2 * deg.degree();
        if (rhs_num % block.d != 0 || lhs != rhs_num / block.d) {
            rep.violations.push_back(label_to_string(chi) + ": pi = " + std::to_string(lhs) + " but 2 deg/d = " +
                                     std::to_string(rhs_num) + "/" + std::to_string(block.d));
            continue;
        }
        ++rep.checked;
    }
    return rep;
}

}  // namespace pervlab

#endif
