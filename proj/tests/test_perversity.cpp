#include <catch2/catch_amalgamated.hpp>

#include "pervlab/perversity.hpp"

using namespace pervlab;

TEST_CASE("pi from degrees", "[perversity]") {
    // principal-block values pinned by the six-character table
    CHECK(pi_from_degrees(BKind::plain(3), ScaledCycloProduct::parse("(1/2) q P2^2 P6"),
                          ScaledCycloProduct::one())
              .value == 3);
    CHECK(pi_from_degrees(BKind::plain(3), ScaledCycloProduct::one(), ScaledCycloProduct::one()).value == 0);
    CHECK(pi_from_degrees(BKind::parse_tag("8a"), ScaledCycloProduct::parse("q^2 P12 P24a P24b"),
                          ScaledCycloProduct::one())
              .value == 10);
    // a fractional value is an invariant violation, surfaced loudly
    CHECK_THROWS_AS(pi_from_degrees(BKind::plain(3), ScaledCycloProduct::cyclotomic(1), ScaledCycloProduct::one()),
                    InvariantViolation);
}

TEST_CASE("closed form for the linear family on principal cores", "[perversity]") {
    for (int d = 2; d <= 6; ++d) {
        for (long long r = 0; r < d; ++r) {
            BetaSet core = r == 0 ? BetaSet(std::vector<long long>{}) : BetaSet::from_partition(Partition({r}), 1);
            CHECK(pi_closed_gl(core, d, 1) == 0);
            for (int j = 2; j <= d; ++j) CHECK(pi_closed_gl(core, d, j) == 2 * r + j - 1);
        }
    }
}

TEST_CASE("closed forms agree with degree-based pi on small blocks", "[perversity]") {
    // one pinned unitary case: GU_3 at d=6 (e=3), empty core
    BetaSet empty = BetaSet(std::vector<long long>{});
    auto blocks = block_characters(Family::GU, 3, 6);
    REQUIRE(blocks.size() == 1);
    // even positions of {2,1,0} are {2,0} (hooks land on [3] and [1,1,1]);
    // the odd one is {1} (hook lands on [2,1])
    CHECK(pi_closed_gu(empty, 6, false, 1) == pi(blocks[0], CharLabel(Partition({3}))).value);
    CHECK(pi_closed_gu(empty, 6, false, 2) == pi(blocks[0], CharLabel(Partition({1, 1, 1}))).value);
    CHECK(pi_closed_gu(empty, 6, true, 1) == pi(blocks[0], CharLabel(Partition({2, 1}))).value);
    std::vector<long long> got{pi_closed_gu(empty, 6, false, 1), pi_closed_gu(empty, 6, false, 2),
                               pi_closed_gu(empty, 6, true, 1)};
    std::vector<long long> all = got;
    std::sort(all.begin(), all.end());
    CHECK(all == std::vector<long long>{0, 1, 1});

    CHECK_THROWS_AS(pi_closed_gu(empty, 6, false, 3), std::domain_error);
}

TEST_CASE("symbol closed forms: monotone with alternating parity", "[perversity][property]") {
    for (int d : {3, 5, 4, 6}) {
        int e = d % 2 == 1 ? d : d / 2;
        bool cocores = d % 2 == 0;
        for (long long n = 0; n <= 4; ++n) {
            for (const Symbol& sym : symbols_of_rank(n, 1, 2)) {
                Symbol core = cocores ? sym.cocore(e) : sym.core(e);
                if (!(core == sym)) continue;
                for (Side side : {Side::X, Side::Y}) {
                    auto [row, other] = detail::pad_symbol_rows(core, e, cocores, side);
                    size_t count = cocores ? detail::cross_addables(row, other, e).size()
                                           : row.hookable_positions(e).size();
                    long long prev = 0;
                    for (int i = 1; i <= static_cast<int>(count); ++i) {
                        long long v = pi_closed_bc(core, d, side, i);
                        if (i > 1) {
                            CHECK(v > prev);                  // strictly increasing toward the node
                            CHECK((v - prev) % 2 == 1);       // adjacent values have opposite parity
                        }
                        prev = v;
                    }
                }
            }
        }
    }
}

TEST_CASE("integrality and parity checks on blocks", "[perversity]") {
    for (auto& blk : block_characters(Family::GL, 6, 3)) {
        CHECK(check_integrality(blk).ok());
        if (blk.weight == 1) {
            auto rep = check_parity(blk);
            CHECK(rep.ok());
            CHECK(rep.checked > 0);
        }
    }

    // GL_2 at d=2: the nontrivial character has quotient q, which evaluates
    // to -1 at the primitive square root of unity; pi = 1
    auto blocks = block_characters(Family::GL, 2, 2);
    REQUIRE(blocks.size() == 1);
    CHECK(pi(blocks[0], CharLabel(Partition({1, 1}))).value == 1);
    CHECK(pi(blocks[0], CharLabel(Partition({2}))).value == 0);
    CHECK(check_parity(blocks[0]).ok());
}

TEST_CASE("d = 1, 2 shortcut on principal blocks", "[perversity]") {
    for (Family f : {Family::GL, Family::GU}) {
        for (long long n = 1; n <= 8; ++n) {
            for (int d : {1, 2}) {
                if (e_from_d(f, d) > n) continue;
                for (auto& blk : block_characters(f, n, d)) {
                    if (!blk.principal) continue;
                    auto rep = check_d12_shortcut(blk);
                    CHECK(rep.ok());
                    CHECK(rep.checked == static_cast<long long>(blk.characters.size()));
                }
            }
        }
    }
    // spot values: GL_2, d=2: deg q = 1, so pi((1,1)) = 2*1/2 = 1
    auto blocks = block_characters(Family::GL, 2, 2);
    CHECK(check_d12_shortcut(blocks[0]).ok());
    CHECK_THROWS_AS(check_d12_shortcut(block_characters(Family::GL, 3, 3)[0]), std::domain_error);
}

TEST_CASE("two-row helper inequalities on enumerated cores", "[perversity][property]") {
    // parts-sum bounds behind the unitary boundary estimate, checked on all
    // small cores for odd e
    for (int e : {3, 5, 7}) {
        for (long long n = 0; n <= 10; ++n) {
            for (const Partition& lam : Partition::all_of(n)) {
                BetaSet b = BetaSet::from_partition(lam, lam.length());
                if (!b.is_core(e)) continue;
                BetaSet padded = b.padded_for_hooks(e);
                auto hooks = padded.hookable_positions(e);
                long long ysz = 0, zsz = 0;
                for (long long h : hooks) (h % 2 == 0 ? ysz : zsz)++;
                long long m = std::llabs(ysz - zsz);
                CHECK(e >= m);

                // a gap of depth > e below the top bead forces a large rank
                if (!b.elements().empty()) {
                    long long x1 = b.elements().front();
                    bool deep_gap = false;
                    for (long long x = 1; x <= x1; ++x)
                        if (!b.contains(x) && x1 - x >= e + 1) deep_gap = true;
                    if (deep_gap) CHECK(n >= e + 1);
                }

                // on a two-row representative with full second row, the parts
                // carried by the majority parity weigh at least m - 2
                for (size_t s = lam.length(); s <= static_cast<size_t>(2 * e); ++s) {
                    BetaSet rep = BetaSet::from_partition(lam, s);
                    const auto& el = rep.elements();
                    if (el.empty() || el.front() != 2 * e - 1) continue;
                    bool full_second = true;
                    for (long long x = e; x < 2 * e; ++x)
                        if (!rep.contains(x)) full_second = false;
                    if (!full_second) continue;
                    long long rep_y = 0, rep_z = 0;  // the split must use this representative
                    for (long long h : rep.hookable_positions(e)) (h % 2 == 0 ? rep_y : rep_z)++;
                    long long rep_m = std::llabs(rep_y - rep_z);
                    long long rs = static_cast<long long>(el.size());
                    long long even_parts = 0, odd_parts = 0;
                    for (size_t i = 0; i < el.size(); ++i) {
                        long long part = el[i] - (rs - 1 - static_cast<long long>(i));
                        (el[i] % 2 == 0 ? even_parts : odd_parts) += part;
                    }
                    if (rep_y > rep_z) CHECK(even_parts >= rep_m - 2);
                    if (rep_z > rep_y) CHECK(odd_parts >= rep_m - 2);
                }
            }
        }
    }
}
