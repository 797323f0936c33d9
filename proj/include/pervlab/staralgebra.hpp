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

#ifndef PERVLAB_STARALGEBRA_HPP
#define PERVLAB_STARALGEBRA_HPP

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace pervlab {

// The group algebra of Z_ell x| Z_d over a field of characteristic dividing
// ell is modeled purely combinatorially: every indecomposable module is
// uniserial and is pinned down by its socle index and length, and every fact
// the perverse-equivalence machinery consumes is a statement about the
// uniserial lattice. No field arithmetic is required.

/// The star algebra k(Z_ell x| Z_d): d simple modules T_1..T_d, projectives
/// uniserial of length ell = d*m + 1 with radical layers cycling
/// i, i+1, ..., top and socle both T_i.
struct StarAlgebra {
    int d;
    long long ell;

    StarAlgebra(int d_, long long ell_) : d(d_), ell(ell_) {
        if (d < 1) throw std::domain_error("StarAlgebra: d must be >= 1");
        if (ell < 2 || (ell - 1) % d != 0)
            throw std::domain_error("StarAlgebra: need d | ell-1 and ell >= 2");
    }

    long long multiplicity() const { return (ell - 1) / d; }

    /// Representative of i in 1..d.
    int idx(long long i) const {
        long long v = (i - 1) % d;
        if (v < 0) v += d;
        return static_cast<int>(v) + 1;
    }
};

/// Uniserial module with the given socle; length 0 is the zero module and
/// length ell the projective cover of its socle. Radical layers, top to
/// bottom, are T_{socle-length+1}, ..., T_{socle} with indices mod d.
struct UniserialModule {
    int socle = 0;      // 1..d; 0 for the zero module
    long long length = 0;

    bool is_zero() const { return length == 0; }

    friend bool operator==(const UniserialModule& a, const UniserialModule& b) {
        if (a.length == 0 && b.length == 0) return true;
        return a.socle == b.socle && a.length == b.length;
    }
    friend bool operator!=(const UniserialModule& a, const UniserialModule& b) { return !(a == b); }
};

inline UniserialModule zero_module() { return UniserialModule{0, 0}; }

inline UniserialModule simple_module(const StarAlgebra& alg, long long i) { return UniserialModule{alg.idx(i), 1}; }

/// U_{i,j}: unique uniserial module with socle T_i and j layers.
inline UniserialModule uniserial(const StarAlgebra& alg, long long socle, long long length) {
    if (length < 0 || length > alg.ell) throw std::domain_error("uniserial: length out of range 0..ell");
    if (length == 0) return zero_module();
    return UniserialModule{alg.idx(socle), length};
}

/// Unique uniserial module determined by (top, length) instead.
inline UniserialModule uniserial_from_top(const StarAlgebra& alg, long long top, long long length) {
    if (length == 0) return zero_module();
    return uniserial(alg, top + length - 1, length);
}

inline UniserialModule proj(const StarAlgebra& alg, long long i) { return uniserial(alg, i, alg.ell); }

inline bool is_projective(const StarAlgebra& alg, const UniserialModule& m) { return m.length == alg.ell; }

inline int top(const StarAlgebra& alg, const UniserialModule& m) {
    if (m.is_zero()) throw std::domain_error("top: zero module");
    return alg.idx(m.socle - m.length + 1);
}

/// Radical layers, top to bottom.
inline std::vector<int> layers(const StarAlgebra& alg, const UniserialModule& m) {
    std::vector<int> out;
    out.reserve(static_cast<size_t>(m.length));
    for (long long j = m.length - 1; j >= 0; --j) out.push_back(alg.idx(m.socle - j));
    return out;
}

/// The unique submodule of each length (bottom k layers).
inline UniserialModule submodule_of_length(const StarAlgebra& alg, const UniserialModule& m, long long k) {
    if (k < 0 || k > m.length) throw std::domain_error("submodule_of_length: k out of range");
    return uniserial(alg, m.socle, k);
}

/// Quotient by the unique submodule of length k.
inline UniserialModule quotient_by_bottom(const StarAlgebra& alg, const UniserialModule& m, long long k) {
    if (k < 0 || k > m.length) throw std::domain_error("quotient_by_bottom: k out of range");
    if (k == m.length) return zero_module();
    return uniserial(alg, m.socle - k, m.length - k);
}

/// Heller translate: kernel of the projective cover map Proj(top M) -> M.
inline UniserialModule omega(const StarAlgebra& alg, const UniserialModule& m) {
    if (m.is_zero() || is_projective(alg, m))
        throw std::domain_error("omega: defined only for proper nonzero modules");
    int t = top(alg, m);
    return uniserial(alg, t, alg.ell - m.length);
}

/// Inverse Heller translate: Proj(socle M) / M. Satisfies
/// omega_inv(omega(M)) = M and omega_inv^2(T_i) = T_{i-1}.
inline UniserialModule omega_inv(const StarAlgebra& alg, const UniserialModule& m) {
    if (m.is_zero() || is_projective(alg, m))
        throw std::domain_error("omega_inv: defined only for proper nonzero modules");
    return uniserial(alg, m.socle - m.length, alg.ell - m.length);
}

/// Debug form "U(socle=5,len=3 | 3/4/5)".
inline std::string to_string(const StarAlgebra& alg, const UniserialModule& m) {
    if (m.is_zero()) return "U(0)";
    std::ostringstream os;
    os << "U(socle=" << m.socle << ",len=" << m.length << " | ";
    auto ls = layers(alg, m);
    for (size_t i = 0; i < ls.size(); ++i) {
        if (i) os << '/';
        os << ls[i];
    }
    os << ')';
    return os.str();
}

}  // namespace pervlab

#endif
