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

#ifndef PERVLAB_VERIFY_HPP
#define PERVLAB_VERIFY_HPP

#include <atomic>
#include <functional>
#include <random>
#include <thread>

#include "fixtures.hpp"
#include "perverse.hpp"

// The verification suites bundled here are what the CLI `verify` command and
// the acceptance test binary run. Each suite pins its scan ranges and
// tolerances in code; a suite passes only if every single instance checks
// out, and failures carry enough context to reproduce.

namespace pervlab {

struct SuiteResult {
    std::string name;
    bool pass = true;
    long long checked = 0;
    std::vector<std::string> failures;

    SuiteResult() = default;
    explicit SuiteResult(std::string name_) : name(std::move(name_)) {}

    void fail(const std::string& msg) {
        pass = false;
        if (failures.size() < 25) failures.push_back(msg);
    }
    void merge(const SuiteResult& o) {
        pass = pass && o.pass;
        checked += o.checked;
        for (auto& f : o.failures) fail(f);
    }
    std::string summary() const {
        std::string s = std::string(pass ? "[PASS] " : "[FAIL] ") + name + " (" + std::to_string(checked) + " checks";
        if (!failures.empty()) s += ", first failure: " + failures.front();
        s += ")";
        return s;
    }
};

namespace detail {

/// Deterministic fan-out: jobs indexed 0..n-1 run on worker threads, each
/// writing into its own slot; results merge in index order.
inline std::vector<SuiteResult> parallel_map(long long n, const std::function<SuiteResult(long long)>& job,
                                             unsigned threads = std::thread::hardware_concurrency()) {
    if (threads == 0) threads = 1;
    std::vector<SuiteResult> slots(static_cast<size_t>(n));
    std::atomic<long long> next{0};
    auto worker = [&] {
        for (;;) {
            long long i = next.fetch_add(1);
            if (i >= n) return;
            slots[static_cast<size_t>(i)] = job(i);
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads && t < n; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    return slots;
}

inline std::string char_context(const BlockSpec& blk, const CharLabel& chi) {
    return family_name(blk.family) + std::to_string(blk.rank) + " d=" + std::to_string(blk.d) + " core=" +
           label_to_string(blk.core) + " chi=" + label_to_string(chi);
}

}  // namespace detail

// ===========================================================================
// 1. The worked six-character example over Z_13 x| Z_6
// ===========================================================================

inline SuiteResult verify_worked_example() {
    SuiteResult res("worked-example (l=13, d=6, pi=0,3,3,3,4,4)");
    StarAlgebra alg(6, 13);
    const std::vector<long long> pi{0, 3, 3, 3, 4, 4};
    auto xs = run_algorithm(alg, pi);

    auto expect_projs = [&](int i, std::vector<int> want) {
        ++res.checked;
        if (xs[static_cast<size_t>(i - 1)].projective_terms != want) res.fail("complex shape X_" + std::to_string(i));
    };
    expect_projs(2, {2, 6, 6});
    expect_projs(3, {3, 2, 2});
    expect_projs(4, {4, 3, 3});
    expect_projs(5, {5, 6, 4, 5});
    expect_projs(6, {6, 5, 5, 4});
    if (!xs[0].projective_terms.empty()) res.fail("X_1 should be concentrated in degree 0");

    auto expect_deg0 = [&](int i, long long dim, int topi, int soc) {
        ++res.checked;
        const auto& m = xs[static_cast<size_t>(i - 1)].degree0;
        if (m.length != dim || m.socle != soc || top(alg, m) != topi)
            res.fail("degree-0 term of X_" + std::to_string(i) + " is " + to_string(alg, m));
    };
    expect_deg0(1, 1, 1, 1);
    expect_deg0(2, 12, 6, 5);
    expect_deg0(3, 11, 2, 6);
    expect_deg0(4, 12, 3, 2);
    expect_deg0(5, 5, 5, 3);
    expect_deg0(6, 1, 4, 4);

    auto expect_cohom = [&](int i, std::map<long long, UniserialModule> want) {
        ++res.checked;
        auto got = xs[static_cast<size_t>(i - 1)].cohomology;
        got.erase(0);
        if (got != want) res.fail("cohomology of X_" + std::to_string(i));
    };
    expect_cohom(1, {});
    expect_cohom(2, {{3, {2, 2}}, {2, {1, 1}}});
    expect_cohom(3, {{3, {3, 1}}, {1, {1, 1}}});
    expect_cohom(4, {{3, {4, 1}}});
    expect_cohom(5, {{4, {5, 5}}});
    expect_cohom(6, {{4, {6, 1}}});

    std::vector<VirtualCharacter> totals;
    for (auto& x : xs) totals.push_back(alternating_sum(alg, pi, x));
    const std::vector<std::string> want_tot{"1", "2", "3-1", "4", "5-4-3-2+1", "6"};
    for (int i = 0; i < 6; ++i) {
        ++res.checked;
        if (totals[static_cast<size_t>(i)].to_string() != want_tot[static_cast<size_t>(i)])
            res.fail("total of X_" + std::to_string(i + 1) + " is " + totals[static_cast<size_t>(i)].to_string());
    }

    const std::vector<std::vector<long long>> want_matrix{
        {1, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0}, {1, 0, 1, 0, 0, 0},
        {0, 0, 0, 1, 0, 0}, {0, 1, 1, 1, 1, 0}, {0, 0, 0, 0, 0, 1},
    };
    ++res.checked;
    if (decomposition_matrix(totals, pi) != want_matrix) res.fail("decomposition matrix");

    for (auto& x : xs) {
        ++res.checked;
        if (!dimension_identity_holds(alg, x)) res.fail("dimension identity for X_" + std::to_string(x.index));
    }
    return res;
}

// ===========================================================================
// Sweep geometry shared by several suites
// ===========================================================================

struct SweepSpec {
    long long gl_max_n = 20;
    long long gu_max_n = 16;
    long long symbol_max_n = 12;
};

namespace detail {

inline std::vector<int> valid_ds(Family f, long long n) {
    std::vector<int> ds;
    int dmax = static_cast<int>(f == Family::GL ? n : 2 * n);
    for (int d = 1; d <= dmax; ++d)
        if (e_from_d(f, d) <= n) ds.push_back(d);
    return ds;
}

template <class Fn>
inline SuiteResult sweep_blocks(const std::string& name, const SweepSpec& spec, Fn&& per_block) {
    struct Task {
        Family f;
        long long n;
        int d;
    };
    std::vector<Task> tasks;
    auto add = [&](Family f, long long maxn) {
        for (long long n = 1; n <= maxn; ++n)
            for (int d : valid_ds(f, n)) tasks.push_back({f, n, d});
    };
    add(Family::GL, spec.gl_max_n);
    add(Family::GU, spec.gu_max_n);
    add(Family::BC, spec.symbol_max_n);
    add(Family::Dplus, spec.symbol_max_n);
    add(Family::Dminus, spec.symbol_max_n);

    auto slots = parallel_map(static_cast<long long>(tasks.size()), [&](long long ti) {
        SuiteResult local;
        const Task& t = tasks[static_cast<size_t>(ti)];
        for (const BlockSpec& blk : block_characters(t.f, t.n, t.d)) per_block(blk, local);
        return local;
    });
    SuiteResult res(name);
    for (auto& s : slots) res.merge(s);
    return res;
}

}  // namespace detail

// ===========================================================================
// 2. Integrality sweep
// ===========================================================================

inline SuiteResult verify_integrality(const SweepSpec& spec = {}) {
    return detail::sweep_blocks("integrality", spec, [](const BlockSpec& blk, SuiteResult& local) {
        for (const CharLabel& chi : blk.characters) {
            try {
                pi(blk, chi);
                ++local.checked;
            } catch (const InvariantViolation& e) {
                local.fail(detail::char_context(blk, chi) + ": " + e.what());
            }
        }
    });
}

// ===========================================================================
// 3. Sign / parity sweep (weight-1 blocks)
// ===========================================================================

inline SuiteResult verify_parity(const SweepSpec& spec = {}) {
    return detail::sweep_blocks("parity", spec, [](const BlockSpec& blk, SuiteResult& local) {
        if (blk.weight != 1) return;
        CheckReport rep = check_parity(blk);
        local.checked += rep.checked;
        for (auto& v : rep.violations)
            local.fail(family_name(blk.family) + std::to_string(blk.rank) + " d=" + std::to_string(blk.d) + ": " + v);
    });
}

// ===========================================================================
// 4. Closed-form oracle
// ===========================================================================

inline SuiteResult verify_closed_forms(unsigned seed = 20260809) {
    SuiteResult res("closed-forms");

    // Exhaustive d-cores of rank <= 15 for the linear family, d <= 10.
    for (int d = 2; d <= 10; ++d) {
        for (long long n = 0; n <= 15; ++n) {
            for (const Partition& lam : Partition::all_of(n)) {
                BetaSet b = BetaSet::from_partition(lam, lam.length());
                if (!b.is_core(d)) continue;
                BlockSpec blk;
                blk.family = Family::GL;
                blk.rank = n + d;
                blk.d = d;
                blk.e = d;
                blk.cocore_block = false;
                blk.core = lam;
                blk.cuspidal_degree = degree_gl(lam);
                blk.weight = 1;
                BetaSet X = b.padded_for_hooks(d);
                auto hooks = X.hookable_positions(d);
                for (int j = 1; j <= d; ++j) {
                    Partition mu = X.add_hook(hooks[static_cast<size_t>(j - 1)], d).canonical().to_partition();
                    long long direct = pi_from_degrees(BKind::plain(d), degree_gl(mu), blk.cuspidal_degree).value;
                    ++res.checked;
                    if (direct != pi_closed_gl(b, d, j))
                        res.fail("GL closed form: core " + lam.to_string() + " d=" + std::to_string(d) +
                                 " j=" + std::to_string(j));
                }
            }
        }
    }

    // 500 random cores/cocores per remaining classical family.
    std::mt19937 rng(seed);
    auto random_partition = [&](long long maxsize) {
        std::vector<long long> parts;
        long long budget = static_cast<long long>(rng() % static_cast<unsigned long>(maxsize + 1));
        long long prev = 6;
        while (budget > 0) {
            long long p = 1 + static_cast<long long>(rng() % static_cast<unsigned long>(std::min(budget, prev)));
            parts.push_back(p);
            prev = p;
            budget -= p;
        }
        std::sort(parts.begin(), parts.end(), std::greater<>());
        return Partition(parts);
    };

    for (int trial = 0; trial < 500; ++trial) {
        // unitary family
        {
            int d = 2 + static_cast<int>(rng() % 11);
            int e = e_from_d(Family::GU, d);
            if (e <= 10) {
                Partition seed_part = random_partition(12);
                BetaSet core =
                    BetaSet::from_partition(seed_part, seed_part.length()).core(e).canonical();
                Partition core_part = core.to_partition();
                ScaledCycloProduct psi = degree_gu(core_part);
                for (bool odd_branch : {false, true}) {
                    BetaSet X = core.padded_for_hooks(e);
                    if (odd_branch) X = X.shifted(1);
                    auto hooks = X.hookable_positions(e);
                    int i = 0;
                    for (long long h : hooks) {
                        if (h % 2 != 0) continue;
                        ++i;
                        Partition mu = X.add_hook(h, e).canonical().to_partition();
                        long long direct = pi_from_degrees(BKind::plain(d), degree_gu(mu), psi).value;
                        ++res.checked;
                        if (direct != pi_closed_gu(core, d, odd_branch, i))
                            res.fail("GU closed form: core " + core_part.to_string() + " d=" + std::to_string(d));
                    }
                }
            }
        }
        // symbol families
        for (Family fam : {Family::BC, Family::Dplus, Family::Dminus}) {
            int d = 1 + static_cast<int>(rng() % 12);
            int e = e_from_d(fam, d);
            if (e > 9) continue;
            int residue = fam == Family::BC ? 1 : (fam == Family::Dplus ? 0 : 2);
            int modulus = fam == Family::BC ? 2 : 4;
            long long delta = residue + modulus * static_cast<long long>(rng() % 2);
            Partition mu = random_partition(8), nu = random_partition(8);
            long long t = std::max<long long>(static_cast<long long>(nu.length()),
                                              static_cast<long long>(mu.length()) - delta);
            Symbol sym(BetaSet::from_partition(mu, static_cast<size_t>(t + delta)),
                       BetaSet::from_partition(nu, static_cast<size_t>(t)));
            bool cocores = uses_cocores(fam, d);
            Symbol core = cocores ? sym.cocore(e) : sym.core(e);
            if (static_cast<int>(core.defect()) % modulus != residue) continue;  // cocore may land in the twin type
            ScaledCycloProduct psi = core.rank() == 0 && core.defect() % 2 == 0 ? ScaledCycloProduct::one()
                                                                                : degree_of_symbol(core);
            for (Side side : {Side::X, Side::Y}) {
                if (core.degenerate() && side == Side::Y) continue;
                auto [row, other] = detail::pad_symbol_rows(core, e, cocores, side);
                std::vector<long long> branch =
                    cocores ? detail::cross_addables(row, other, e) : row.hookable_positions(e);
                for (int i = 1; i <= static_cast<int>(branch.size()); ++i) {
                    long long x = branch[static_cast<size_t>(i - 1)];
                    Symbol added;
                    if (cocores) {
                        std::vector<long long> f = row.elements(), tt = other.elements();
                        f.erase(std::find(f.begin(), f.end(), x));
                        tt.push_back(x + e);
                        added = Symbol(BetaSet(f), BetaSet(tt));
                    } else {
                        added = Symbol(row.add_hook(x, e), other);
                    }
                    long long closed = fam == Family::BC ? pi_closed_bc(core, d, side, i) : pi_closed_d(core, d, side, i);
                    long long direct = pi_from_degrees(BKind::plain(d), degree_of_symbol(added), psi).value;
                    ++res.checked;
                    if (closed != direct)
                        res.fail(family_name(fam) + " closed form: core " + core.to_string() + " d=" +
                                 std::to_string(d) + " i=" + std::to_string(i));
                }
            }
        }
    }
    return res;
}

// ===========================================================================
// 5. Tree conditions across the sweep and the bundled fixtures
// ===========================================================================

inline SuiteResult verify_tree_monotonicity(const SweepSpec& spec = {}) {
    SuiteResult res = detail::sweep_blocks("tree-monotonicity", spec, [](const BlockSpec& blk, SuiteResult& local) {
        if (blk.weight != 1) return;
        BrauerTree t = build_tree(blk);
        auto rep = verify_perverse_conditions(t);
        ++local.checked;
        if (!rep.ok()) local.fail(t.block_name + ": " + rep.violations.front());
        if (t.edges.size() != blk.characters.size())
            local.fail(t.block_name + ": edge count " + std::to_string(t.edges.size()) + " != characters " +
                       std::to_string(blk.characters.size()));

        // shorter-branch bound pi(tau_1) >= 2 delta for cocore blocks
        if (blk.cocore_block) {
            const Symbol& core = std::get<Symbol>(blk.core);
            long long delta = core.defect();
            if (delta > 0 && !core.degenerate()) {
                auto [row, other] = detail::pad_symbol_rows(core, blk.e, true, Side::Y);
                auto branch = detail::cross_addables(row, other, blk.e);
                if (!branch.empty()) {
                    long long tau1 = blk.family == Family::BC ? pi_closed_bc(core, blk.d, Side::Y, 1)
                                                              : pi_closed_d(core, blk.d, Side::Y, 1);
                    ++local.checked;
                    if (tau1 < 2 * delta)
                        local.fail(t.block_name + ": pi(tau_1) = " + std::to_string(tau1) + " < 2*defect = " +
                                   std::to_string(2 * delta));
                }
            }
        }
    });

    for (auto& [group, ds] : fixture_index()) {
        for (auto& d : ds) {
            FixtureFile fx = load_fixture(group, d);
            for (auto& ft : fx.trees) {
                auto rep = verify_perverse_conditions(ft.tree);
                ++res.checked;
                if (!rep.ok()) res.fail(ft.tree.block_name + ": " + rep.violations.front());
            }
        }
    }
    return res;
}

// ===========================================================================
// 6. Argument identity on the unit circle
// ===========================================================================

inline SuiteResult verify_argument_identity(unsigned seed = 20260809, int trials = 10000) {
    SuiteResult res("argument-identity");
    std::mt19937 rng(seed);
    constexpr double two_pi = 6.283185307179586476925286766559;
    for (int t = 0; t < trials; ++t) {
        int d = 2 + static_cast<int>(rng() % 29);
        ScaledCycloProduct f = ScaledCycloProduct::q_power(static_cast<long long>(rng() % 5));
        int nfac = 1 + static_cast<int>(rng() % 8);
        for (int k = 0; k < nfac; ++k) {
            long long r = 1 + static_cast<long long>(rng() % 30);
            if (r == d) continue;  // keep the product coprime to Phi_d
            f *= ScaledCycloProduct::cyclotomic(r);
        }
        std::complex<double> zeta = std::polar(1.0, two_pi / d);
        std::complex<double> val = f.evaluate_at(zeta);
        double b = b_d(d, f).value.to_double();
        std::complex<double> predicted = std::polar(1.0, b * two_pi / (2.0 * d));
        ++res.checked;
        if (std::abs(predicted - val / std::abs(val)) > 1e-9) {
            res.fail("f = " + f.to_string() + ", d = " + std::to_string(d));
        }
    }
    return res;
}

// ===========================================================================
// 7. B-function identities
// ===========================================================================

namespace detail {

/// B_d of |q^i - q^j| (sign dropped; B ignores scalars).
inline Rational bd_abs_diff(int d, long long i, long long j) {
    if (i == j) throw std::domain_error("bd_abs_diff: zero");
    return b_d(d, factor_q_power_difference(std::max(i, j), std::min(i, j), -1)).value;
}

inline Rational bd_sum(int d, long long i, long long j) {
    return b_d(d, factor_q_power_difference(std::max(i, j), std::min(i, j), +1)).value;
}

}  // namespace detail

inline SuiteResult verify_b_identities() {
    SuiteResult res("b-identities");

    // B_d(q^r - 1) = r + d floor(r/d) + d/2. This needs d >= 2: at d = 1 the
    // half-value at Phi_1 shifts the total to 2r - 1/2.
    for (int d = 2; d <= 50; ++d)
        for (long long r = 1; r <= 200; ++r) {
            Rational want = Rational(r) + Rational(d) * Rational(r / d) + Rational(d, 2);
            ++res.checked;
            if (b_d(d, factor_q_power_difference(r, 0, -1)).value != want)
                res.fail("B_d(q^r-1) at d=" + std::to_string(d) + " r=" + std::to_string(r));
        }

    // divisor sum of the coprime counts equals floor(r/d)
    for (int d = 1; d <= 20; ++d)
        for (long long r = 1; r <= 500; ++r) {
            long long total = 0;
            for (long long i = 1; i <= r; ++i)
                if (r % i == 0) total += coprime_count_upto(i, i / d);
            ++res.checked;
            if (total != r / d) res.fail("divisor sum at d=" + std::to_string(d) + " r=" + std::to_string(r));
        }

    // step-by-d differences
    for (int d = 1; d <= 20; ++d) {
        for (long long i = 0; i <= 40; ++i) {
            for (long long j = 0; j <= 40; ++j) {
                if (i != j && i + d != j) {  // the stated cases omit i - j = -d
                    Rational diff = detail::bd_abs_diff(d, i + d, j) - detail::bd_abs_diff(d, i, j);
                    Rational want = i > j ? Rational(2 * d) : (i - j > -d ? Rational(d) : Rational(0));
                    ++res.checked;
                    if (diff != want)
                        res.fail("difference (minus) at d=" + std::to_string(d) + " i=" + std::to_string(i) +
                                 " j=" + std::to_string(j));
                }
                {
                    Rational diff = detail::bd_sum(d, i + d, j) - detail::bd_sum(d, i, j);
                    Rational want = 2 * (i - j) > -d ? Rational(2 * d)
                                                     : (2 * (i - j) == -d ? Rational(d) : Rational(0));
                    ++res.checked;
                    if (diff != want)
                        res.fail("difference (plus) at d=" + std::to_string(d) + " i=" + std::to_string(i) +
                                 " j=" + std::to_string(j));
                }
            }
        }
    }

    // product identities (d >= 2 for the same reason as the first identity)
    for (int d = 2; d <= 20; ++d) {
        for (long long n = 0; n <= 40; ++n) {
            ScaledCycloProduct f;
            for (long long i = n + 1; i <= n + d; ++i) f *= factor_q_power_difference(i, 0, -1);
            Rational want = Rational(2 * n * d + static_cast<long long>(d) * d) + Rational(3 * d, 2);
            ++res.checked;
            if (b_d(d, f).value != want) res.fail("product identity at d=" + std::to_string(d) + " n=" + std::to_string(n));

            int e = d % 2 == 1 ? d : d / 2;
            ScaledCycloProduct g;
            for (long long i = n + 1; i <= n + e; ++i) g *= factor_q_power_difference(2 * i, 0, -1);
            Rational want2 = Rational(4 * n * e + 2LL * e * e + 2 * e) + Rational(d, 2);
            ++res.checked;
            if (b_d(d, g).value != want2)
                res.fail("even product identity at d=" + std::to_string(d) + " n=" + std::to_string(n));
        }
    }

    // cohook differences, d even (the first identity excludes j > i with
    // e | i - j, per its hypothesis)
    for (int d = 2; d <= 20; d += 2) {
        int e = d / 2;
        for (long long i = 0; i <= 40; ++i) {
            for (long long j = 0; j <= 40; ++j) {
                if (i != j && !(j > i && (j - i) % e == 0)) {
                    Rational diff = detail::bd_sum(d, i + e, j) - detail::bd_abs_diff(d, i, j);
                    Rational want = i > j ? Rational(d) : Rational(0);
                    ++res.checked;
                    if (diff != want)
                        res.fail("cohook difference 1 at d=" + std::to_string(d) + " i=" + std::to_string(i) +
                                 " j=" + std::to_string(j));
                }
                if (i + e != j) {  // the stated cases omit i - j = -e
                    Rational diff = detail::bd_abs_diff(d, i + e, j) - detail::bd_sum(d, i, j);
                    Rational want = i - j > -e ? Rational(d) : Rational(0);
                    ++res.checked;
                    if (diff != want)
                        res.fail("cohook difference 2 at d=" + std::to_string(d) + " i=" + std::to_string(i) +
                                 " j=" + std::to_string(j));
                }
            }
        }
    }

    // twisted value tables, entry for entry
    struct Entry {
        const char* alpha;
        const char* f;
        long long value;
    };
    const Entry table[] = {
        {"8a", "q", 6},    {"8a", "P1", 7},   {"8a", "P2", 3},   {"8a", "P4", 14},  {"8a", "P8b", 14},
        {"8a", "P12", 20}, {"8a", "P24a", 20},{"8a", "P24b", 28},
        {"24a", "q", 10},  {"24a", "P1", 17}, {"24a", "P2", 5},  {"24a", "P4", 10}, {"24a", "P8a", 10},
        {"24a", "P8b", 34},{"24a", "P12", 44},{"24a", "P24b", 44},
        {"12a", "q", 10},  {"12a", "P1", 11}, {"12a", "P2", 5},  {"12a", "P4", 22}, {"12a", "P12b", 22},
    };
    for (const Entry& en : table) {
        ++res.checked;
        if (b_value(BKind::parse_tag(en.alpha), ScaledCycloProduct::parse(en.f)).value != Rational(en.value))
            res.fail(std::string("twisted table: B_") + en.alpha + "(" + en.f + ")");
    }
    return res;
}

// ===========================================================================
// 8. The d = 1, 2 shortcut on principal blocks
// ===========================================================================

inline SuiteResult verify_d12_shortcut() {
    SuiteResult res("d12-shortcut");
    for (Family f : {Family::GL, Family::GU}) {
        for (long long n = 1; n <= 10; ++n) {
            for (int d : {1, 2}) {
                if (e_from_d(f, d) > n) continue;
                for (const BlockSpec& blk : block_characters(f, n, d)) {
                    if (!blk.principal) continue;
                    CheckReport rep = check_d12_shortcut(blk);
                    res.checked += rep.checked;
                    for (auto& v : rep.violations)
                        res.fail(family_name(f) + std::to_string(n) + " d=" + std::to_string(d) + ": " + v);
                }
            }
        }
    }
    return res;
}

// ===========================================================================
// 9. Genericity across the cyclic-subgroup order
// ===========================================================================

inline SuiteResult verify_genericity(unsigned seed = 20260809) {
    SuiteResult res("genericity");
    struct Case {
        int d;
        long long ell1, ell2;
    };
    for (const Case& c : {Case{4, 5, 13}, Case{6, 13, 19}}) {
        std::mt19937 rng(seed + static_cast<unsigned>(c.d));
        for (int trial = 0; trial < 200; ++trial) {
            std::vector<long long> pi(static_cast<size_t>(c.d));
            for (auto& v : pi) v = static_cast<long long>(rng() % 9);
            GenericityReport rep = genericity_check(c.d, pi, c.ell1, c.ell2);
            ++res.checked;
            if (!rep.ok()) {
                std::string ctx = "d=" + std::to_string(c.d) + " pi=";
                for (auto v : pi) ctx += std::to_string(v) + ",";
                res.fail(ctx + " " + rep.violations.front());
            }
        }
    }
    return res;
}

// ===========================================================================
// 10. Equivalent orderings for bumped perversity functions
// ===========================================================================

inline SuiteResult verify_equivalent_orderings(unsigned seed = 20260809) {
    SuiteResult res("equivalent-orderings");
    for (int d = 2; d <= 8; ++d) {
        std::mt19937 rng(seed + static_cast<unsigned>(d));
        StarAlgebra alg(d, 2LL * d + 1);
        std::vector<long long> pi0(static_cast<size_t>(d));
        for (int i = 0; i < d; ++i) pi0[static_cast<size_t>(i)] = i;  // canonical values for a line
        int done = 0;
        while (done < 100) {
            std::vector<long long> piP(static_cast<size_t>(d));
            bool admissible = true;
            for (int i = 0; i < d; ++i) {
                piP[static_cast<size_t>(i)] = pi0[static_cast<size_t>(i)] + 2 * static_cast<long long>(rng() % 4);
                if (i > 0 && piP[static_cast<size_t>(i)] <= piP[static_cast<size_t>(i - 1)]) admissible = false;
            }
            if (!admissible) continue;
            ++done;
            auto ord = derive_equivalent_ordering(pi0, piP);
            ++res.checked;
            if (!orderings_algorithmically_equivalent(alg, pi0, piP, ord)) {
                std::string ctx = "d=" + std::to_string(d) + " pi'=";
                for (auto v : piP) ctx += std::to_string(v) + ",";
                res.fail(ctx);
            }
        }
    }
    return res;
}

// ===========================================================================
// 11. Fixture label recomputation
// ===========================================================================

inline SuiteResult verify_fixture_recomputation() {
    SuiteResult res("fixture-recomputation");
    for (auto& [group, ds] : fixture_index()) {
        for (auto& d : ds) {
            FixtureFile fx = load_fixture(group, d);
            auto rep = recompute_fixture_pi(fx);
            res.checked += rep.matched;
            for (auto& m : rep.mismatches) res.fail(m);
        }
    }
    return res;
}

// ===========================================================================
// Suite registry
// ===========================================================================

inline std::vector<std::string> verify_suite_names() {
    return {"worked-example", "integrality",      "parity",          "closed-forms",
            "tree-monotonicity", "argument-identity", "b-identities", "d12-shortcut",
            "genericity",      "equivalent-orderings", "fixture-recomputation"};
}

inline SuiteResult run_verify_suite(const std::string& name, const SweepSpec& spec = {}, unsigned seed = 20260809) {
    if (name == "worked-example") return verify_worked_example();
    if (name == "integrality") return verify_integrality(spec);
    if (name == "parity") return verify_parity(spec);
    if (name == "closed-forms") return verify_closed_forms(seed);
    if (name == "tree-monotonicity") return verify_tree_monotonicity(spec);
    if (name == "argument-identity") return verify_argument_identity(seed);
    if (name == "b-identities") return verify_b_identities();
    if (name == "d12-shortcut") return verify_d12_shortcut();
    if (name == "genericity") return verify_genericity(seed);
    if (name == "equivalent-orderings") return verify_equivalent_orderings(seed);
    if (name == "fixture-recomputation") return verify_fixture_recomputation();
    throw std::invalid_argument("unknown verify suite '" + name + "'");
}

}  // namespace pervlab

#endif
