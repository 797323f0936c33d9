// Acceptance suite: each criterion runs at its stated scale and prints one
// pass/fail line. A failure carries the first offending instances.

#include <catch2/catch_amalgamated.hpp>

#include <iostream>

#include "pervlab/verify.hpp"

using namespace pervlab;

namespace {

void run(int number, const std::string& suite) {
    SuiteResult r = run_verify_suite(suite);
    std::cout << (r.pass ? "[PASS]" : "[FAIL]") << " criterion " << number << ": " << r.name << " ("
              << r.checked << " checks)" << std::endl;
    for (auto& f : r.failures) {
        std::cout << "       " << f << std::endl;
        UNSCOPED_INFO(f);
    }
    CHECK(r.pass);
}

}  // namespace

TEST_CASE("criterion 1: worked example over Z_13 x| Z_6", "[acceptance]") { run(1, "worked-example"); }

TEST_CASE("criterion 2: integrality across the block sweep", "[acceptance]") { run(2, "integrality"); }

TEST_CASE("criterion 3: sign at the root of unity", "[acceptance]") { run(3, "parity"); }

TEST_CASE("criterion 4: closed forms equal degree-based values", "[acceptance]") { run(4, "closed-forms"); }

TEST_CASE("criterion 5: tree conditions and the short-branch bound", "[acceptance]") {
    run(5, "tree-monotonicity");
}

TEST_CASE("criterion 6: argument identity on the unit circle", "[acceptance]") { run(6, "argument-identity"); }

TEST_CASE("criterion 7: B-function identities and twisted tables", "[acceptance]") { run(7, "b-identities"); }

TEST_CASE("criterion 8: d = 1, 2 shortcut", "[acceptance]") { run(8, "d12-shortcut"); }

TEST_CASE("criterion 9: genericity across the cyclic order", "[acceptance]") { run(9, "genericity"); }

TEST_CASE("criterion 10: equivalent orderings from bumped functions", "[acceptance]") {
    run(10, "equivalent-orderings");
}

TEST_CASE("criterion 11: fixture labels recompute from printed degrees", "[acceptance]") {
    run(11, "fixture-recomputation");
}
