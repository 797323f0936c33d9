#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "oracles.hpp"
#include "pervlab/unideg.hpp"

using namespace pervlab;

TEST_CASE("hook size from the order of q", "[unideg]") {
    CHECK(e_from_d(Family::GU, 6) == 3);
    CHECK(e_from_d(Family::GU, 5) == 10);
    CHECK(e_from_d(Family::GU, 4) == 4);
    CHECK(e_from_d(Family::BC, 8) == 4);
    CHECK(e_from_d(Family::BC, 7) == 7);
    CHECK(e_from_d(Family::GL, 9) == 9);
    CHECK(uses_cocores(Family::Dminus, 6));
    CHECK(!uses_cocores(Family::Dminus, 7));
    CHECK(!uses_cocores(Family::GU, 6));
}

TEST_CASE("linear degrees in factored form", "[unideg]") {
    CHECK(degree_gl(Partition({4})) == ScaledCycloProduct::one());
    CHECK(degree_gl(Partition({1, 1})) == ScaledCycloProduct::parse("q"));
    CHECK(degree_gl(Partition({2, 1})) == ScaledCycloProduct::parse("q P2"));
    for (long long n : {2, 3, 5, 7}) {
        std::vector<long long> ones(static_cast<size_t>(n), 1);
        CHECK(degree_gl(Partition(ones)) == ScaledCycloProduct::q_power(n * (n - 1) / 2));
    }
}

TEST_CASE("unitary degrees via the -q substitution", "[unideg]") {
    CHECK(degree_gu(Partition({1, 1})) == ScaledCycloProduct::parse("q"));
    CHECK(degree_gu(Partition({2, 1})) == ScaledCycloProduct::parse("q P1"));
    for (long long n : {3, 6}) {
        std::vector<long long> ones(static_cast<size_t>(n), 1);
        CHECK(degree_gu(Partition(ones)) == ScaledCycloProduct::q_power(n * (n - 1) / 2));
    }
}

TEST_CASE("factored degrees agree with the raw formulas exactly", "[unideg][oracle]") {
    for (long long n = 0; n <= 7; ++n) {
        for (const Partition& lam : Partition::all_of(n)) {
            ScaledCycloProduct deg = degree_gl(lam);
            for (long long qi : {2, 3, 5}) {
                mpz_class q(static_cast<long>(qi));
                auto raw = oracles::raw_degree_gl(lam, q);
                auto fac = oracles::evaluate_exact(deg, q);
                REQUIRE(raw.den != 0);
                CHECK(raw.num * fac.den == fac.num * raw.den);
            }
        }
    }
    for (long long n = 1; n <= 5; ++n) {
        for (int kind : {0, +1, -1}) {
            int residue = kind == 0 ? 1 : (kind > 0 ? 0 : 2);
            for (const Symbol& sym : symbols_of_rank(n, residue, kind == 0 ? 2 : 4)) {
                ScaledCycloProduct deg = kind == 0 ? degree_bc(sym) : (kind > 0 ? degree_dplus(sym) : degree_dminus(sym));
                for (long long qi : {2, 3}) {
                    mpz_class q(static_cast<long>(qi));
                    auto raw = oracles::raw_degree_symbol(sym, kind, q);
                    auto fac = oracles::evaluate_exact(deg, q);
                    CHECK(raw.num * fac.den == fac.num * raw.den);
                }
            }
        }
    }
}

TEST_CASE("symbol degrees: pinned values and error paths", "[unideg]") {
    CHECK(degree_bc(Symbol(BetaSet({3}), BetaSet(std::vector<long long>{}))) == ScaledCycloProduct::one());
    // the rank-2 symbol {{2,1,0},{2,1}} carries the q^4 character
    CHECK(degree_bc(Symbol(BetaSet({2, 1, 0}), BetaSet({2, 1}))) == ScaledCycloProduct::q_power(4));
    CHECK(degree_dplus(Symbol(BetaSet({4}), BetaSet({0}))) == ScaledCycloProduct::one());
    CHECK(degree_dminus(Symbol(BetaSet({4, 0}), BetaSet(std::vector<long long>{}))) == ScaledCycloProduct::one());
    // a degenerate symbol labels two characters of one degree
    CHECK(degree_dplus(Symbol(BetaSet({1}), BetaSet({1}))) == ScaledCycloProduct::parse("q"));
    CHECK_THROWS_AS(degree_bc(Symbol(BetaSet({1}), BetaSet({0}))), std::domain_error);
    CHECK_THROWS_AS(degree_dplus(Symbol(BetaSet({1, 0}), BetaSet(std::vector<long long>{}))), std::domain_error);
}

TEST_CASE("degrees are positive integers at small q", "[unideg][oracle]") {
    auto check_label = [&](Family f, const CharLabel& label) {
        ScaledCycloProduct deg = degree_of(f, label);
        for (long long qi : {2, 3, 4, 5}) {
            auto v = oracles::evaluate_exact(deg, mpz_class(static_cast<long>(qi)));
            REQUIRE(v.is_integer());
            CHECK(v.integer() > 0);
        }
    };
    for (Family f : {Family::GL, Family::GU, Family::BC, Family::Dplus, Family::Dminus})
        for (long long n = 1; n <= 6; ++n)
            for (const CharLabel& label : labels_of_rank(f, n)) check_label(f, label);
}

TEST_CASE("degrees divide the generic group order", "[unideg]") {
    auto divides = [](const ScaledCycloProduct& deg, const ScaledCycloProduct& order) {
        if (deg.qexp() > order.qexp()) return false;
        for (auto& [c, m] : deg.factors())
            if (m > order.multiplicity(c)) return false;
        return true;
    };
    for (Family f : {Family::GL, Family::GU, Family::BC, Family::Dplus, Family::Dminus}) {
        for (long long n = 1; n <= 6; ++n) {
            ScaledCycloProduct order = group_order_poly(f, n);
            for (const CharLabel& label : labels_of_rank(f, n)) CHECK(divides(degree_of(f, label), order));
        }
    }
}

TEST_CASE("block partition by cores and cocores", "[unideg]") {
    auto blocks_gl2 = block_characters(Family::GL, 2, 2);
    REQUIRE(blocks_gl2.size() == 1);
    CHECK(blocks_gl2[0].characters.size() == 2);

    auto blocks_gu3 = block_characters(Family::GU, 3, 6);
    REQUIRE(blocks_gu3.size() == 1);
    CHECK(blocks_gu3[0].e == 3);
    CHECK(blocks_gu3[0].characters.size() == 3);

    auto blocks_gl3 = block_characters(Family::GL, 3, 2);
    REQUIRE(blocks_gl3.size() == 2);
    bool found_21 = false;
    for (auto& blk : blocks_gl3) {
        if (blk.characters.size() == 1) {
            CHECK(label_to_string(blk.characters[0]) == "[2,1]");
            CHECK(blk.weight == 0);
            found_21 = true;
        } else {
            CHECK(blk.characters.size() == 2);
        }
    }
    CHECK(found_21);
}

TEST_CASE("weight-1 block sizes follow the hook counts", "[unideg][property]") {
    for (long long n = 1; n <= 6; ++n) {
        for (int d = 1; d <= 2 * n; ++d) {
            for (Family f : {Family::GL, Family::GU, Family::BC, Family::Dplus, Family::Dminus}) {
                if (e_from_d(f, d) > n) continue;
                if (f == Family::GL && d > n) continue;
                for (auto& blk : block_characters(f, n, d)) {
                    if (blk.weight != 1) continue;
                    size_t want;
                    if (f == Family::GL || f == Family::GU)
                        want = static_cast<size_t>(blk.e);
                    else if (std::holds_alternative<Symbol>(blk.core) && std::get<Symbol>(blk.core).degenerate())
                        want = static_cast<size_t>(blk.e);
                    else
                        want = static_cast<size_t>(2 * blk.e);
                    CHECK(blk.characters.size() == want);
                }
            }
        }
    }
}

TEST_CASE("block JSON emission is stable", "[unideg]") {
    auto blocks = block_characters(Family::GL, 2, 2);
    CHECK(block_to_json(blocks[0]) ==
          "{\"family\":\"GL\",\"n\":2,\"d\":2,\"e\":2,\"weight\":1,\"core\":\"[]\",\"cuspidal_degree\":\"1\","
          "\"characters\":[{\"label\":\"[2]\",\"degree\":\"1\"},{\"label\":\"[1,1]\",\"degree\":\"q\"}]}");
}
