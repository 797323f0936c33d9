#include <catch2/catch_amalgamated.hpp>

#include "pervlab/staralgebra.hpp"

using namespace pervlab;

TEST_CASE("projective covers are uniserial of length ell", "[staralgebra]") {
    StarAlgebra alg(6, 13);
    UniserialModule p2 = proj(alg, 2);
    CHECK(p2.length == 13);
    CHECK(p2.socle == 2);
    CHECK(top(alg, p2) == 2);
    CHECK(proj(StarAlgebra(6, 7), 1).length == 7);

    // layer list of Proj(T_1) starts 1,2,3,4,5,6,1,...
    auto ls = layers(alg, proj(alg, 1));
    std::vector<int> head(ls.begin(), ls.begin() + 7);
    CHECK(head == std::vector<int>{1, 2, 3, 4, 5, 6, 1});

    CHECK_THROWS_AS(StarAlgebra(6, 12), std::domain_error);  // needs d | ell-1
}

TEST_CASE("Heller translates", "[staralgebra]") {
    StarAlgebra alg(6, 13);
    for (int i = 1; i <= 6; ++i) {
        // omega_inv^2 rotates a simple one step back
        UniserialModule s = simple_module(alg, i);
        UniserialModule o2 = omega_inv(alg, omega_inv(alg, s));
        CHECK(o2 == simple_module(alg, i - 1));
        // dimension bookkeeping
        UniserialModule m = uniserial(alg, i, 5);
        CHECK(m.length + omega_inv(alg, m).length == alg.ell);
        CHECK(omega(alg, omega_inv(alg, m)) == m);
        CHECK(omega_inv(alg, omega(alg, m)) == m);
    }
    CHECK(omega(alg, omega(alg, uniserial(alg, 1, 1))) == uniserial(alg, 2, 1));
    CHECK_THROWS_AS(omega_inv(alg, proj(alg, 1)), std::domain_error);
    CHECK_THROWS_AS(omega_inv(alg, zero_module()), std::domain_error);
    CHECK_THROWS_AS(omega(alg, proj(alg, 3)), std::domain_error);
}

TEST_CASE("uniserial lattice navigation", "[staralgebra]") {
    StarAlgebra alg(6, 13);
    CHECK(submodule_of_length(alg, proj(alg, 4), 1) == simple_module(alg, 4));
    CHECK(quotient_by_bottom(alg, proj(alg, 4), 13).is_zero());
    CHECK(layers(alg, uniserial(alg, 5, 3)) == std::vector<int>{3, 4, 5});
    CHECK(quotient_by_bottom(alg, uniserial(alg, 5, 3), 1) == uniserial(alg, 4, 2));
    CHECK_THROWS_AS(submodule_of_length(alg, uniserial(alg, 5, 3), 4), std::domain_error);
    CHECK(to_string(alg, uniserial(alg, 5, 3)) == "U(socle=5,len=3 | 3/4/5)");
}

TEST_CASE("(dimension, socle) and (dimension, top) determine the same module", "[staralgebra][property]") {
    StarAlgebra alg(5, 11);
    for (int i = 1; i <= 5; ++i) {
        for (long long len = 1; len <= 11; ++len) {
            UniserialModule m = uniserial(alg, i, len);
            CHECK(uniserial_from_top(alg, top(alg, m), len) == m);
        }
    }
}

TEST_CASE("navigation below length d is independent of ell", "[staralgebra][property]") {
    for (int d : {4, 6}) {
        StarAlgebra a1(d, d + 1), a2(d, 5 * d + 1);
        for (int i = 1; i <= d; ++i) {
            for (long long j = 1; j <= d; ++j) {
                UniserialModule m1 = uniserial(a1, i, j), m2 = uniserial(a2, i, j);
                CHECK(m1 == m2);
                CHECK(top(a1, m1) == top(a2, m2));
                CHECK(layers(a1, m1) == layers(a2, m2));
                CHECK(quotient_by_bottom(a1, m1, j / 2) == quotient_by_bottom(a2, m2, j / 2));
            }
        }
    }
}
