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

#ifndef PERVLAB_PERVERSE_HPP
#define PERVLAB_PERVERSE_HPP

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "staralgebra.hpp"

namespace pervlab {

// ===========================================================================
// Complexes produced by the algorithm
// ===========================================================================

/// Image of the simple sitting in slot i, as a complex over the star algebra:
/// projectives in degrees -pi(i)..-1 and a uniserial module in degree 0.
/// Cohomology is recorded per degree (key j stands for degree -j; the key 0
/// appears only for pi(i) = 0, where the complex is the simple itself).
struct StarComplex {
    int index = 0;
    long long pi = 0;
    std::vector<int> projective_terms;  // socle indices, degree -pi(i) first
    UniserialModule degree0;
    std::map<long long, UniserialModule> cohomology;
};

/// Signed multiset of simple modules, indexed 1..d.
struct VirtualCharacter {
    std::map<int, long long> coeff;

    long long operator[](int i) const {
        auto it = coeff.find(i);
        return it == coeff.end() ? 0 : it->second;
    }

    void add(int i, long long c) {
        if (c == 0) return;
        long long n = (coeff[i] += c);
        if (n == 0) coeff.erase(i);
    }

    friend bool operator==(const VirtualCharacter& a, const VirtualCharacter& b) { return a.coeff == b.coeff; }
    friend bool operator!=(const VirtualCharacter& a, const VirtualCharacter& b) { return !(a == b); }

    /// Text form like "5-4-3-2+1", highest index first.
    std::string to_string() const {
        if (coeff.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = coeff.rbegin(); it != coeff.rend(); ++it) {
            long long c = it->second;
            if (c >= 0 && !first) os << '+';
            if (c == -1)
                os << '-';
            else if (c != 1)
                os << c << '*';
            os << it->first;
            first = false;
        }
        return os.str();
    }
};

// ===========================================================================
// The algorithm
// ===========================================================================

/// Runs the perverse-equivalence algorithm for the simple in slot i of the
/// star algebra, with perversity values pi[0..d-1] attached to the slots.
///
/// The first term is Proj(T_i) in degree -pi(i); its kernel M consists of
/// T_i in the socle together with the largest extension whose added layers
/// all have perversity below pi(i). Each later term is the injective hull of
/// the image L of the previous map, enlarged greedily while added layers
/// have perversity below the degree, and the degree-0 term is the final
/// cokernel (the Green correspondent). For pi(i) = 0 the complex is the
/// simple module itself in degree 0.
inline StarComplex run_one(const StarAlgebra& alg, const std::vector<long long>& pi, int i) {
    if (static_cast<int>(pi.size()) != alg.d) throw std::domain_error("run_one: pi must have d entries");
    for (long long v : pi)
        if (v < 0) throw std::domain_error("run_one: perversity values must be non-negative");
    auto pi_of = [&](long long slot) { return pi[static_cast<size_t>(alg.idx(slot) - 1)]; };

    StarComplex out;
    out.index = alg.idx(i);
    out.pi = pi_of(i);

    if (out.pi == 0) {
        out.degree0 = simple_module(alg, i);
        out.cohomology[0] = out.degree0;
        return out;
    }

    // Degree -pi(i): the projective cover of T_i.
    out.projective_terms.push_back(alg.idx(i));
    long long r = 0;
    while (r + 1 < alg.d && pi_of(i - r - 1) < out.pi) ++r;
    UniserialModule m = uniserial(alg, i, r + 1);
    out.cohomology[out.pi] = m;
    UniserialModule l = omega_inv(alg, m);

    for (long long j = out.pi - 1; j >= 1; --j) {
        // Degree -j: injective hull of L(j+1), which is Proj(socle L).
        out.projective_terms.push_back(l.socle);
        long long s = 0;
        int t = top(alg, l);
        while (s + 1 < alg.d && l.length + s < alg.ell && pi_of(t - s - 1) < j) ++s;
        if (l.length + s >= alg.ell)
            throw std::logic_error("run_one: cohomology extension reached the full projective");
        UniserialModule mj{l.socle, l.length + s};
        if (s > 0) out.cohomology[j] = uniserial(alg, t - 1, s);
        l = omega_inv(alg, mj);
    }
    out.degree0 = l;
    return out;
}

inline std::vector<StarComplex> run_algorithm(const StarAlgebra& alg, const std::vector<long long>& pi) {
    std::vector<StarComplex> out;
    out.reserve(static_cast<size_t>(alg.d));
    for (int i = 1; i <= alg.d; ++i) out.push_back(run_one(alg, pi, i));
    return out;
}

/// Alternating sum of the cohomology: each composition factor T_a of
/// H^{-j} contributes (-1)^{j - pi(a)}.
inline VirtualCharacter alternating_sum(const StarAlgebra& alg, const std::vector<long long>& pi,
                                        const StarComplex& x) {
    VirtualCharacter v;
    for (auto& [j, h] : x.cohomology) {
        for (int a : layers(alg, h)) {
            long long sign_exp = j - pi[static_cast<size_t>(a - 1)];
            v.add(a, (sign_exp % 2 == 0) ? 1 : -1);
        }
    }
    return v;
}

/// Dimension bookkeeping: the alternating sum of term dimensions must equal
/// the alternating sum of cohomology dimensions.
inline bool dimension_identity_holds(const StarAlgebra& alg, const StarComplex& x) {
    long long terms = x.degree0.length;
    long long sign = -1;
    for (auto it = x.projective_terms.rbegin(); it != x.projective_terms.rend(); ++it) {
        terms += sign * alg.ell;
        sign = -sign;
    }
    long long coh = 0;
    for (auto& [j, h] : x.cohomology) coh += (j % 2 == 0 ? 1 : -1) * h.length;
    return terms == coh;
}

// ===========================================================================
// Decomposition matrices
// ===========================================================================

/// Solves for the rows of a decomposition matrix from the alternating sums:
/// the sum of the rows, weighted by the Total column of complex i, must be
/// the i-th unit vector. Requires the totals to be unitriangular when the
/// indices are ordered by weakly increasing perversity; rows must come out
/// non-negative.
inline std::vector<std::vector<long long>> decomposition_matrix(const std::vector<VirtualCharacter>& totals,
                                                                const std::vector<long long>& pi) {
    const size_t n = totals.size();
    if (pi.size() != n) throw std::domain_error("decomposition_matrix: size mismatch");
    std::vector<size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) { return pi[a] < pi[b]; });

    for (size_t p = 0; p < n; ++p) {
        size_t i = order[p];
        if (totals[i][static_cast<int>(i) + 1] != 1)
            throw std::domain_error("decomposition_matrix: total of complex " + std::to_string(i + 1) +
                                    " lacks a unit diagonal entry");
        for (size_t qq = p + 1; qq < n; ++qq) {
            size_t j = order[qq];
            if (j != i && totals[i][static_cast<int>(j) + 1] != 0)
                throw std::domain_error("decomposition_matrix: totals are not unitriangular under the perversity order");
        }
    }

    std::vector<std::vector<long long>> rows(n, std::vector<long long>(n, 0));
    for (size_t p = 0; p < n; ++p) {
        size_t i = order[p];
        // row_i = e_i - sum_{j earlier} c_{i,j} row_j
        rows[i][i] = 1;
        for (size_t qq = 0; qq < p; ++qq) {
            size_t j = order[qq];
            long long c = totals[i][static_cast<int>(j) + 1];
            if (c == 0) continue;
            for (size_t col = 0; col < n; ++col) rows[i][col] -= c * rows[j][col];
        }
        for (long long v : rows[i])
            if (v < 0)
                throw std::domain_error("decomposition_matrix: negative entry in row " + std::to_string(i + 1) +
                                        "; decomposition numbers must be non-negative");
    }
    return rows;
}

// ===========================================================================
// Genericity across the order of the cyclic normal subgroup
// ===========================================================================

struct GenericityReport {
    bool projectives_match = true;   // identical projective-term index sequences
    bool cohomology_match = true;    // identified cohomology modules
    bool degree0_match = true;       // identified degree-0 data (parity rule)
    std::vector<std::string> violations;

    bool ok() const { return projectives_match && cohomology_match && degree0_match; }
};

/// Runs the algorithm over k(Z_ell1 x| Z_d) and k(Z_ell2 x| Z_d) with the
/// same perversity function and compares the outputs under the natural
/// identification of the simple modules: (i) projective terms, (ii)
/// cohomology, (iii) degree-0 terms directly when pi(i) is even, after one
/// Heller translate when pi(i) is odd.
inline GenericityReport genericity_check(int d, const std::vector<long long>& pi, long long ell1, long long ell2) {
    StarAlgebra a1(d, ell1), a2(d, ell2);
    GenericityReport rep;
    for (int i = 1; i <= d; ++i) {
        StarComplex x1 = run_one(a1, pi, i);
        StarComplex x2 = run_one(a2, pi, i);
        if (x1.projective_terms != x2.projective_terms) {
            rep.projectives_match = false;
            rep.violations.push_back("projective terms differ for slot " + std::to_string(i));
        }
        if (x1.cohomology != x2.cohomology) {
            rep.cohomology_match = false;
            rep.violations.push_back("cohomology differs for slot " + std::to_string(i));
        }
        bool deg0_ok;
        if (pi[static_cast<size_t>(i - 1)] % 2 == 0) {
            deg0_ok = x1.degree0 == x2.degree0;
        } else {
            deg0_ok = omega(a1, x1.degree0) == omega(a2, x2.degree0);
        }
        if (!deg0_ok) {
            rep.degree0_match = false;
            rep.violations.push_back("degree-0 terms not identified for slot " + std::to_string(i));
        }
    }
    return rep;
}

// ===========================================================================
// Equivalent orderings (canonical perversity vs. admissible bumps)
// ===========================================================================

/// Assignment of block simples to star slots: slot_of[i-1] is the slot of
/// the simple with canonical position i (both 1-based).
struct EquivalentOrdering {
    std::vector<int> slot_of;
};

/// Constructive recipe behind the equivalence of perversity functions:
/// simples whose bumped value meets the canonical one are frozen in their
/// current slots; the rest have 2 subtracted and are cycled one slot along,
/// and the process repeats. pi0 and piP are indexed by canonical position.
inline EquivalentOrdering derive_equivalent_ordering(const std::vector<long long>& pi0,
                                                     const std::vector<long long>& piP) {
    const size_t n = pi0.size();
    if (piP.size() != n) throw std::domain_error("derive_equivalent_ordering: size mismatch");
    for (size_t i = 0; i < n; ++i) {
        if (piP[i] < pi0[i] || (piP[i] - pi0[i]) % 2 != 0)
            throw std::domain_error("derive_equivalent_ordering: bumped values must exceed canonical ones by even non-negatives");
    }
    EquivalentOrdering out;
    out.slot_of.assign(n, 0);

    std::vector<size_t> simples(n);   // canonical positions still in play
    std::vector<int> slots(n);       // their current slots, aligned with simples
    std::iota(simples.begin(), simples.end(), 0);
    std::iota(slots.begin(), slots.end(), 1);
    std::vector<long long> residual(piP);
    long long rounds = 0;

    while (!simples.empty()) {
        std::vector<size_t> keep;
        for (size_t k = 0; k < simples.size(); ++k) {
            size_t i = simples[k];
            if (residual[i] == pi0[i]) {
                out.slot_of[i] = slots[k];
            } else {
                keep.push_back(k);
            }
        }
        std::vector<size_t> ns;
        std::vector<int> nslots;
        for (size_t k : keep) {
            ns.push_back(simples[k]);
            nslots.push_back(slots[k]);
        }
        simples.swap(ns);
        slots.swap(nslots);
        if (simples.empty()) break;
        for (size_t i : simples) residual[i] -= 2;
        // cycle the remaining simples one slot along (in slot order)
        std::rotate(simples.begin(), simples.begin() + (simples.size() - 1), simples.end());
        ++rounds;
        if (rounds > 1 + *std::max_element(piP.begin(), piP.end()))
            throw std::logic_error("derive_equivalent_ordering: recipe failed to terminate");
    }
    return out;
}

/// Checks the two clauses of algorithmic equivalence for an ordering: with
/// simple i placed in slot_of[i], (i) the degree-0 terms agree with the
/// canonical run's on the nose, and (ii) the alternating sums agree as
/// virtual characters once the simples of the two runs are identified via
/// the ordering itself.
inline bool orderings_algorithmically_equivalent(const StarAlgebra& alg, const std::vector<long long>& pi0,
                                                 const std::vector<long long>& piP,
                                                 const EquivalentOrdering& ord) {
    const size_t n = pi0.size();
    std::vector<long long> slot_pi(n, 0);
    for (size_t i = 0; i < n; ++i) slot_pi[static_cast<size_t>(ord.slot_of[i] - 1)] = piP[i];
    auto base = run_algorithm(alg, pi0);
    auto derived = run_algorithm(alg, slot_pi);
    for (size_t i = 0; i < n; ++i) {
        const StarComplex& xb = base[i];
        const StarComplex& xd = derived[static_cast<size_t>(ord.slot_of[i] - 1)];
        if (!(xb.degree0 == xd.degree0)) return false;
        VirtualCharacter relabelled;
        for (auto& [k, c] : alternating_sum(alg, pi0, xb).coeff)
            relabelled.add(ord.slot_of[static_cast<size_t>(k - 1)], c);
        if (!(alternating_sum(alg, slot_pi, xd) == relabelled)) return false;
    }
    return true;
}

}  // namespace pervlab

#endif
