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

#ifndef PERVLAB_UNIDEG_HPP
#define PERVLAB_UNIDEG_HPP

#include <map>
#include <set>
#include <variant>
#include <vector>

#include "betacombinat.hpp"
#include "cyclopoly.hpp"

namespace pervlab {

// ===========================================================================
// Families and labels
// ===========================================================================

/// The classical families handled generically. BC covers both odd orthogonal
/// and symplectic groups (identical unipotent combinatorics); Dplus/Dminus
/// are the two even orthogonal types.
enum class Family { GL, GU, BC, Dplus, Dminus };

inline std::string family_name(Family f) {
    switch (f) {
        case Family::GL: return "GL";
        case Family::GU: return "GU";
        case Family::BC: return "BC";
        case Family::Dplus: return "D+";
        default: return "D-";
    }
}

inline Family family_parse(const std::string& s) {
    if (s == "GL") return Family::GL;
    if (s == "GU") return Family::GU;
    if (s == "BC" || s == "B" || s == "C" || s == "Sp" || s == "SO") return Family::BC;
    if (s == "D+" || s == "Dplus") return Family::Dplus;
    if (s == "D-" || s == "Dminus") return Family::Dminus;
    throw std::invalid_argument("unknown family '" + s + "'");
}

/// Unipotent character label: a partition for the linear/unitary families, a
/// symbol otherwise.
using CharLabel = std::variant<Partition, Symbol>;

inline std::string label_to_string(const CharLabel& l) {
    if (std::holds_alternative<Partition>(l)) return std::get<Partition>(l).to_string();
    return std::get<Symbol>(l).to_string();
}

inline bool label_less(const CharLabel& a, const CharLabel& b) {
    if (a.index() != b.index()) return a.index() < b.index();
    if (std::holds_alternative<Partition>(a)) return std::get<Partition>(a) < std::get<Partition>(b);
    return std::get<Symbol>(a) < std::get<Symbol>(b);
}

/// The hook size controlling block partition, derived from the order d of q:
/// for GU it is the order of -q, for BC/D the order of q^2.
inline int e_from_d(Family f, int d) {
    if (d < 1) throw std::domain_error("e_from_d: d must be >= 1");
    switch (f) {
        case Family::GL: return d;
        case Family::GU:
            if (d % 4 == 0) return d;
            if (d % 2 == 1) return 2 * d;
            return d / 2;
        default:
            return d % 2 == 1 ? d : d / 2;
    }
}

/// Whether blocks of this family at this d are governed by cocores rather
/// than cores.
inline bool uses_cocores(Family f, int d) {
    return (f == Family::BC || f == Family::Dplus || f == Family::Dminus) && d % 2 == 0;
}

// ===========================================================================
// Degrees
// ===========================================================================

namespace detail {

/// Sum of C(k,2) for k = k0, k0 - step, ..., while k >= 2.
inline long long binomial_tower(long long k0, long long step) {
    long long total = 0;
    for (long long k = k0; k >= 2; k -= step) total += k * (k - 1) / 2;
    return total;
}

inline ScaledCycloProduct q2i_chain(long long upto) {  // prod_{j=1..upto} (q^{2j} - 1)
    ScaledCycloProduct f;
    for (long long j = 1; j <= upto; ++j) f *= factor_q_power_difference(2 * j, 0, -1);
    return f;
}

inline ScaledCycloProduct pair_differences(const std::vector<long long>& desc) {
    ScaledCycloProduct f;
    for (size_t i = 0; i < desc.size(); ++i)
        for (size_t j = i + 1; j < desc.size(); ++j) f *= factor_q_power_difference(desc[i], desc[j], -1);
    return f;
}

/// Shared core of the symbol degree formulas; `lead` is the family-specific
/// first numerator term and `log2_c` the power of 2 in the denominator.
inline ScaledCycloProduct symbol_degree(const Symbol& sym, const ScaledCycloProduct& lead, long long log2_c) {
    const auto& X = sym.X().elements();
    const auto& Y = sym.Y().elements();
    ScaledCycloProduct num = lead;
    num *= pair_differences(X);
    num *= pair_differences(Y);
    for (long long x : X)
        for (long long y : Y) num *= factor_q_power_difference(x, y, +1);

    ScaledCycloProduct den = ScaledCycloProduct::q_power(
        binomial_tower(static_cast<long long>(X.size() + Y.size()) - 2, 2));
    den *= ScaledCycloProduct::constant(QuadScalar(Rational(1LL << log2_c)));
    for (long long x : X) den *= q2i_chain(x);
    for (long long y : Y) den *= q2i_chain(y);

    ScaledCycloProduct deg = num / den;
    if (!deg.is_polynomial())
        throw std::logic_error("symbol_degree: quotient is not polynomial for " + sym.to_string());
    return deg;
}

}  // namespace detail

/// Unipotent character degree for the linear family, computed directly in
/// factored form (no polynomial expansion). Representative-invariant.
inline ScaledCycloProduct degree_gl(const Partition& lambda) {
    const long long n = lambda.size();
    BetaSet X = BetaSet::from_partition(lambda, lambda.length());
    const auto& xs = X.elements();
    const long long s = static_cast<long long>(xs.size());

    ScaledCycloProduct num;
    for (long long i = 1; i <= n; ++i) num *= factor_q_power_difference(i, 0, -1);
    num *= detail::pair_differences(xs);

    ScaledCycloProduct den = ScaledCycloProduct::q_power(detail::binomial_tower(s - 1, 1));
    for (long long x : xs)
        for (long long j = 1; j <= x; ++j) den *= factor_q_power_difference(j, 0, -1);

    ScaledCycloProduct deg = num / den;
    if (!deg.is_polynomial()) throw std::logic_error("degree_gl: quotient is not polynomial");
    return deg;
}

/// Unitary degrees arise from the linear ones by the -q substitution.
inline ScaledCycloProduct degree_gu(const Partition& lambda) { return substitute_neg_q(degree_gl(lambda)); }

/// Degree for odd-defect symbols (types B/C).
inline ScaledCycloProduct degree_bc(const Symbol& sym) {
    if (sym.defect() % 2 == 0) throw std::domain_error("degree_bc: symbol must have odd defect");
    const long long n = sym.rank();
    const long long st = static_cast<long long>(sym.X().size() + sym.Y().size());
    ScaledCycloProduct lead = detail::q2i_chain(n);
    return detail::symbol_degree(sym, lead, (st - 1) / 2);
}

/// Degree for defect = 0 mod 4 symbols (type D); a degenerate symbol labels
/// two characters of this same degree.
inline ScaledCycloProduct degree_dplus(const Symbol& sym) {
    if (sym.defect() % 4 != 0) throw std::domain_error("degree_dplus: symbol defect must be divisible by 4");
    const long long n = sym.rank();
    if (n == 0) return ScaledCycloProduct::one();
    const long long st = static_cast<long long>(sym.X().size() + sym.Y().size());
    long long c = sym.degenerate() ? static_cast<long long>(sym.X().size()) : (st - 1) / 2;
    ScaledCycloProduct lead = factor_q_power_difference(n, 0, -1) * detail::q2i_chain(n - 1);
    return detail::symbol_degree(sym, lead, c);
}

/// Degree for defect = 2 mod 4 symbols (type twisted D).
inline ScaledCycloProduct degree_dminus(const Symbol& sym) {
    if (sym.defect() % 4 != 2) throw std::domain_error("degree_dminus: symbol defect must be 2 mod 4");
    const long long n = sym.rank();
    const long long st = static_cast<long long>(sym.X().size() + sym.Y().size());
    ScaledCycloProduct lead = factor_q_power_difference(n, 0, +1) * detail::q2i_chain(n - 1);
    return detail::symbol_degree(sym, lead, (st - 2) / 2);
}

/// Degree of a symbol according to the family its defect pins down. Used for
/// cuspidal cores, whose family may differ from the block's own (an e-cohook
/// flips the even orthogonal type).
inline ScaledCycloProduct degree_of_symbol(const Symbol& sym) {
    long long def = sym.defect();
    if (def % 2 == 1) return degree_bc(sym);
    if (def % 4 == 0) return degree_dplus(sym);
    return degree_dminus(sym);
}

inline ScaledCycloProduct degree_of(Family f, const CharLabel& label) {
    if (f == Family::GL) return degree_gl(std::get<Partition>(label));
    if (f == Family::GU) return degree_gu(std::get<Partition>(label));
    return degree_of_symbol(std::get<Symbol>(label));
}

/// Generic order polynomial of the ambient group (q-part and Phi-part).
inline ScaledCycloProduct group_order_poly(Family f, long long n) {
    ScaledCycloProduct order;
    switch (f) {
        case Family::GL:
            order *= ScaledCycloProduct::q_power(n * (n - 1) / 2);
            for (long long i = 1; i <= n; ++i) order *= factor_q_power_difference(i, 0, -1);
            break;
        case Family::GU: {
            order *= ScaledCycloProduct::q_power(n * (n - 1) / 2);
            for (long long i = 1; i <= n; ++i) order *= factor_q_power_difference(i, 0, i % 2 == 0 ? -1 : +1);
            break;
        }
        case Family::BC:
            order *= ScaledCycloProduct::q_power(n * n);
            order *= detail::q2i_chain(n);
            break;
        case Family::Dplus:
            order *= ScaledCycloProduct::q_power(n * (n - 1));
            order *= factor_q_power_difference(n, 0, -1);
            order *= detail::q2i_chain(n - 1);
            break;
        case Family::Dminus:
            order *= ScaledCycloProduct::q_power(n * (n - 1));
            order *= factor_q_power_difference(n, 0, +1);
            order *= detail::q2i_chain(n - 1);
            break;
    }
    return order;
}

// ===========================================================================
// Labels of a given rank
// ===========================================================================

/// All symbols of the given rank whose defect is `residue` mod `modulus`
/// (modulus 2 with residue 1 for BC; modulus 4 with residue 0 or 2 for the
/// two D types).
inline std::vector<Symbol> symbols_of_rank(long long n, int residue, int modulus) {
    std::set<Symbol> out;
    for (long long delta = 0;; ++delta) {
        long long base = (delta * delta) / 4;
        if (base > n) break;
        if (delta % modulus != residue) continue;
        long long rest = n - base;
        for (long long a = 0; a <= rest; ++a) {
            for (const Partition& mu : Partition::all_of(a)) {
                for (const Partition& nu : Partition::all_of(rest - a)) {
                    long long t = std::max<long long>(static_cast<long long>(nu.length()),
                                                      static_cast<long long>(mu.length()) - delta);
                    BetaSet X = BetaSet::from_partition(mu, static_cast<size_t>(t + delta));
                    BetaSet Y = BetaSet::from_partition(nu, static_cast<size_t>(t));
                    Symbol sym(X, Y);
                    if (sym.rank() != n) throw std::logic_error("symbols_of_rank: rank bookkeeping error");
                    out.insert(sym);
                }
            }
        }
    }
    return std::vector<Symbol>(out.begin(), out.end());
}

inline std::vector<CharLabel> labels_of_rank(Family f, long long n) {
    std::vector<CharLabel> out;
    if (f == Family::GL || f == Family::GU) {
        for (auto& p : Partition::all_of(n)) out.push_back(p);
        return out;
    }
    int residue = f == Family::BC ? 1 : (f == Family::Dplus ? 0 : 2);
    int modulus = f == Family::BC ? 2 : 4;
    for (auto& s : symbols_of_rank(n, residue, modulus)) out.push_back(s);
    return out;
}

/// The label of the trivial character.
inline CharLabel trivial_label(Family f, long long n) {
    switch (f) {
        case Family::GL:
        case Family::GU: return Partition({n});
        case Family::BC: return Symbol(BetaSet({n}), BetaSet(std::vector<long long>{}));
        case Family::Dplus: return Symbol(BetaSet({n}), BetaSet({0}));
        default: return Symbol(BetaSet({n, 0}), BetaSet(std::vector<long long>{}));
    }
}

// ===========================================================================
// Blocks
// ===========================================================================

/// A unipotent block: family, ambient rank, d (and derived hook size e), the
/// core or cocore labelling the cuspidal pair, and the characters it
/// contains. A degenerate symbol label stands for two characters of equal
/// degree and appears twice in `characters`.
struct BlockSpec {
    Family family;
    long long rank;
    int d;
    int e;
    bool cocore_block;
    CharLabel core;
    ScaledCycloProduct cuspidal_degree;
    std::vector<CharLabel> characters;
    long long weight;
    bool principal;

    BKind kind() const { return BKind::plain(d); }
};

/// Partition of all unipotent labels of the given rank into blocks keyed by
/// the d-core / e-core / e-cocore, per the family block law.
inline std::vector<BlockSpec> block_characters(Family f, long long rank, int d) {
    const int e = e_from_d(f, d);
    const bool cocores = uses_cocores(f, d);
    std::map<std::string, BlockSpec> by_core;

    auto core_of = [&](const CharLabel& label) -> CharLabel {
        if (f == Family::GL || f == Family::GU) {
            BetaSet b = BetaSet::from_partition(std::get<Partition>(label), std::get<Partition>(label).length());
            return b.core(e).canonical().to_partition();
        }
        const Symbol& sym = std::get<Symbol>(label);
        return cocores ? sym.cocore(e) : sym.core(e);
    };

    for (const CharLabel& label : labels_of_rank(f, rank)) {
        CharLabel core = core_of(label);
        std::string key = label_to_string(core);
        auto it = by_core.find(key);
        if (it == by_core.end()) {
            BlockSpec blk;
            blk.family = f;
            blk.rank = rank;
            blk.d = d;
            blk.e = e;
            blk.cocore_block = cocores;
            blk.core = core;
            long long core_rank = std::holds_alternative<Partition>(core) ? std::get<Partition>(core).size()
                                                                          : std::get<Symbol>(core).rank();
            blk.weight = (rank - core_rank) / e;
            if (f == Family::GL)
                blk.cuspidal_degree = degree_gl(std::get<Partition>(core));
            else if (f == Family::GU)
                blk.cuspidal_degree = degree_gu(std::get<Partition>(core));
            else
                blk.cuspidal_degree = std::get<Symbol>(core).rank() == 0 && std::get<Symbol>(core).defect() % 2 == 0
                                          ? ScaledCycloProduct::one()
                                          : degree_of_symbol(std::get<Symbol>(core));
            blk.principal = false;
            it = by_core.emplace(key, std::move(blk)).first;
        }
        bool degenerate_pair =
            f == Family::Dplus && std::holds_alternative<Symbol>(label) && std::get<Symbol>(label).degenerate();
        it->second.characters.push_back(label);
        if (degenerate_pair) it->second.characters.push_back(label);
    }

    CharLabel triv = trivial_label(f, rank);
    std::vector<BlockSpec> out;
    out.reserve(by_core.size());
    for (auto& [key, blk] : by_core) {
        for (auto& c : blk.characters)
            if (!label_less(c, triv) && !label_less(triv, c)) blk.principal = true;
        out.push_back(std::move(blk));
    }
    return out;
}

/// JSON text for a block (degrees in the canonical product format). Label
/// and degree strings contain no characters needing JSON escapes.
inline std::string block_to_json(const BlockSpec& blk) {
    std::ostringstream os;
    os << "{\"family\":\"" << family_name(blk.family) << "\",\"n\":" << blk.rank << ",\"d\":" << blk.d
       << ",\"e\":" << blk.e << ",\"weight\":" << blk.weight << ",\"core\":\"" << label_to_string(blk.core)
       << "\",\"cuspidal_degree\":\"" << blk.cuspidal_degree.to_string() << "\",\"characters\":[";
    for (size_t i = 0; i < blk.characters.size(); ++i) {
        if (i) os << ',';
        os << "{\"label\":\"" << label_to_string(blk.characters[i]) << "\",\"degree\":\""
           << degree_of(blk.family, blk.characters[i]).to_string() << "\"}";
    }
    os << "]}";
    return os.str();
}

}  // namespace pervlab

#endif
