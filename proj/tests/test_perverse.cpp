#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "pervlab/perverse.hpp"
#include "pervlab/verify.hpp"

using namespace pervlab;

TEST_CASE("the six-character worked example reproduces exactly", "[perverse]") {
    SuiteResult r = verify_worked_example();
    for (auto& f : r.failures) UNSCOPED_INFO(f);
    CHECK(r.pass);

    // spot checks straight on the API
    StarAlgebra alg(6, 13);
    std::vector<long long> pv{0, 3, 3, 3, 4, 4};
    auto x3 = run_one(alg, pv, 3);
    CHECK(alternating_sum(alg, pv, x3).to_string() == "3-1");
    auto x5 = run_one(alg, pv, 5);
    CHECK(alternating_sum(alg, pv, x5).to_string() == "5-4-3-2+1");
}

TEST_CASE("zero perversity yields the simple in degree 0", "[perverse]") {
    StarAlgebra alg(5, 11);
    std::vector<long long> pv{0, 0, 0, 0, 0};
    auto xs = run_algorithm(alg, pv);
    for (auto& x : xs) {
        CHECK(x.projective_terms.empty());
        CHECK(x.degree0 == simple_module(alg, x.index));
        VirtualCharacter v = alternating_sum(alg, pv, x);
        CHECK(v.coeff.size() == 1);
        CHECK(v[x.index] == 1);
    }
    CHECK(decomposition_matrix({alternating_sum(alg, pv, xs[0]), alternating_sum(alg, pv, xs[1]),
                                alternating_sum(alg, pv, xs[2]), alternating_sum(alg, pv, xs[3]),
                                alternating_sum(alg, pv, xs[4])},
                               pv) ==
          std::vector<std::vector<long long>>{{1, 0, 0, 0, 0},
                                              {0, 1, 0, 0, 0},
                                              {0, 0, 1, 0, 0},
                                              {0, 0, 0, 1, 0},
                                              {0, 0, 0, 0, 1}});
}

TEST_CASE("structural rules of the algorithm", "[perverse][property]") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 300; ++trial) {
        int d = 2 + static_cast<int>(rng() % 6);
        long long m = 1 + rng() % 3;
        StarAlgebra alg(d, static_cast<long long>(d) * m + 1);
        std::vector<long long> pv(static_cast<size_t>(d));
        for (auto& v : pv) v = rng() % 7;

        for (int i = 1; i <= d; ++i) {
            StarComplex x = run_one(alg, pv, i);
            CHECK(dimension_identity_holds(alg, x));

            // socle rule: the injective in degree -j has socle with pi > j
            for (size_t k = 1; k < x.projective_terms.size(); ++k) {
                long long j = x.pi - static_cast<long long>(k);
                CHECK(pv[static_cast<size_t>(x.projective_terms[k] - 1)] > j);
            }

            // one copy of T_i at degree -pi(i), all other factors in degrees
            // strictly above their own perversity value
            long long own_copies = 0;
            for (auto& [j, h] : x.cohomology) {
                for (int a : layers(alg, h)) {
                    if (a == x.index && j == x.pi) {
                        ++own_copies;
                        continue;
                    }
                    CHECK(pv[static_cast<size_t>(a - 1)] < j);
                }
            }
            CHECK(own_copies == 1);
        }
    }
}

TEST_CASE("decomposition solver rejects bad systems", "[perverse]") {
    // totals forcing a negative row
    VirtualCharacter t1, t2;
    t1.add(1, 1);
    t2.add(2, 1);
    t2.add(1, 1);
    CHECK_THROWS_WITH(decomposition_matrix({t1, t2}, {0, 1}), Catch::Matchers::ContainsSubstring("negative"));

    // totals that are not unitriangular under the perversity order
    VirtualCharacter u1, u2;
    u1.add(1, 1);
    u1.add(2, 1);
    u2.add(2, 1);
    CHECK_THROWS_WITH(decomposition_matrix({u1, u2}, {0, 1}), Catch::Matchers::ContainsSubstring("unitriangular"));
}

TEST_CASE("genericity across the cyclic order", "[perverse]") {
    // the worked example's perversity function, over two different orders
    GenericityReport rep = genericity_check(6, {0, 3, 3, 3, 4, 4}, 13, 19);
    CHECK(rep.ok());
    CHECK(genericity_check(4, {0, 0, 0, 0}, 5, 13).ok());

    std::mt19937 rng(41);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<long long> pv(4);
        for (auto& v : pv) v = rng() % 9;
        GenericityReport r = genericity_check(4, pv, 5, 13);
        CHECK(r.ok());
        // cohomology lengths never exceed d, keeping the identification
        // across different orders meaningful
        StarAlgebra alg(4, 13);
        for (int i = 1; i <= 4; ++i)
            for (auto& [j, h] : run_one(alg, pv, i).cohomology) CHECK(h.length <= 4);
    }
}

TEST_CASE("derived orderings are algorithmically equivalent", "[perverse]") {
    // identical functions give the identity assignment
    std::vector<long long> pi0{0, 1, 2, 3};
    auto same = derive_equivalent_ordering(pi0, pi0);
    CHECK(same.slot_of == std::vector<int>{1, 2, 3, 4});

    StarAlgebra alg(4, 13);
    // a single bump at the deep end
    auto ord = derive_equivalent_ordering(pi0, {0, 1, 2, 5});
    CHECK(orderings_algorithmically_equivalent(alg, pi0, {0, 1, 2, 5}, ord));

    // a uniform bump by 2 cycles everything one slot along
    auto cyc = derive_equivalent_ordering(pi0, {2, 3, 4, 5});
    CHECK(cyc.slot_of == std::vector<int>{2, 3, 4, 1});
    CHECK(orderings_algorithmically_equivalent(alg, pi0, {2, 3, 4, 5}, cyc));

    CHECK_THROWS_AS(derive_equivalent_ordering(pi0, {0, 1, 2, 4}), std::domain_error);  // odd bump
    CHECK_THROWS_AS(derive_equivalent_ordering(pi0, {0, 1, 0, 3}), std::domain_error);  // below canonical
}
