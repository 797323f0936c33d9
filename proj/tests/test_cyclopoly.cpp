#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "pervlab/cyclopoly.hpp"

using namespace pervlab;

TEST_CASE("rational arithmetic and parsing", "[rational]") {
    CHECK(Rational(6, 4) == Rational(3, 2));
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(-4, 6).to_string() == "-2/3");
    CHECK(Rational::parse("7/2") == Rational(7, 2));
    CHECK(Rational::parse("-3") == Rational(-3));
    CHECK(Rational(4, 2).as_integer() == 2);
    CHECK_THROWS_AS(Rational(1, 2).as_integer(), std::domain_error);
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("modified totient", "[cyclopoly]") {
    CHECK(phi_d_totient(1, 3) == Rational(1, 2));
    CHECK(phi_d_totient(6, 3) == Rational(1));  // k <= 2 coprime to 6 is {1}
    for (long long r : {5, 7, 9}) CHECK(phi_d_totient(r, 2) == Rational(euler_phi(r), 2));
}

TEST_CASE("plain B values", "[cyclopoly]") {
    CHECK(b_d(3, ScaledCycloProduct::parse("q P2^2 P6")).value == Rational(9));
    CHECK(b_d(17, ScaledCycloProduct::one()).value == Rational(0));
    // q^3 - 1 = P1 P3, total 3 + 3 + 3/2
    CHECK(b_d(3, factor_q_power_difference(3, 0, -1)).value == Rational(15, 2));
    // scalar is ignored
    CHECK(b_d(3, ScaledCycloProduct::parse("(1/2) q P2^2 P6")).value == Rational(9));
    CHECK_THROWS_WITH(b_d(4, ScaledCycloProduct::parse("P12a")), Catch::Matchers::ContainsSubstring("b_twisted"));
}

TEST_CASE("twisted B values reproduce the tabulated rows", "[cyclopoly]") {
    validate_twisted_data();
    BKind a8 = BKind::parse_tag("8a");
    CHECK(b_value(a8, ScaledCycloProduct::parse("q")).value == Rational(6));
    CHECK(b_value(a8, ScaledCycloProduct::parse("P1")).value == Rational(7));
    CHECK(b_value(a8, ScaledCycloProduct::parse("P2")).value == Rational(3));
    CHECK(b_value(a8, ScaledCycloProduct::parse("P4")).value == Rational(14));
    CHECK(b_value(a8, ScaledCycloProduct::parse("P8b")).value == Rational(14));
    CHECK(b_value(a8, ScaledCycloProduct::parse("P12")).value == Rational(20));
    CHECK(b_value(a8, ScaledCycloProduct::parse("P24a")).value == Rational(20));
    CHECK(b_value(a8, ScaledCycloProduct::parse("P24b")).value == Rational(28));

    CHECK(b_twisted(CycloFactor(8, Twist::a), ScaledCycloProduct::parse("q^2 P12 P24a P24b")).value == Rational(80));
    CHECK(b_twisted(CycloFactor(8, Twist::b), ScaledCycloProduct::parse("q^2 P12 P24a P24b")).value == Rational(32));

    CHECK_THROWS_WITH(b_twisted(CycloFactor(8, Twist::a), ScaledCycloProduct::parse("P8a P12")),
                      Catch::Matchers::ContainsSubstring("not considered"));
    CHECK_THROWS_WITH(b_twisted(CycloFactor(8, Twist::a), ScaledCycloProduct::parse("P12b")),
                      Catch::Matchers::ContainsSubstring("quadratic field"));
}

TEST_CASE("factorization of q-power sums and differences", "[cyclopoly]") {
    CHECK(factor_q_power_difference(3, 0, -1) == ScaledCycloProduct::parse("P1 P3"));
    CHECK(factor_q_power_difference(5, 2, +1) == ScaledCycloProduct::parse("q^2 P2 P6"));
    CHECK(factor_q_power_difference(4, 4, +1) == ScaledCycloProduct::parse("(2) q^4"));
    CHECK_THROWS_AS(factor_q_power_difference(4, 4, -1), std::domain_error);

    // numeric cross-check at a few points
    std::mt19937 rng(7);
    for (int t = 0; t < 50; ++t) {
        long long a = rng() % 12, b = rng() % 12;
        int sign = rng() % 2 == 0 ? 1 : -1;
        if (sign == -1 && a == b) continue;
        if (a < b) std::swap(a, b);
        double q = 2.0 + (rng() % 30) / 10.0;
        double want = std::pow(q, a) + sign * std::pow(q, b);
        double got = factor_q_power_difference(a, b, sign).evaluate_at(q);
        CHECK(std::abs(want - got) < 1e-9 * std::abs(want));
    }
}

TEST_CASE("the -q substitution", "[cyclopoly]") {
    CHECK(substitute_neg_q(ScaledCycloProduct::parse("q P2")) == ScaledCycloProduct::parse("q P1"));
    CHECK(substitute_neg_q(ScaledCycloProduct::parse("q^6")) == ScaledCycloProduct::parse("q^6"));
    CHECK(substitute_neg_q(ScaledCycloProduct::parse("P4")) == ScaledCycloProduct::parse("P4"));
    // GL_3 chi_{(2,1)} = q(q+1); its unitary partner has degree |(-q)((-q)+1)| = q(q-1)
    double q = 3.0;
    CHECK(substitute_neg_q(ScaledCycloProduct::parse("q P2")).evaluate_at(q) ==
          Catch::Approx(std::abs((-q) * (-q + 1))));
    CHECK_THROWS_AS(substitute_neg_q(ScaledCycloProduct::parse("P8a")), std::domain_error);
}

TEST_CASE("evaluation at roots of unity", "[cyclopoly]") {
    const std::complex<double> i(0, 1);
    auto v = ScaledCycloProduct::cyclotomic(1).evaluate_at(i);
    CHECK(std::abs(v - (i - 1.0)) < 1e-12);
    CHECK(std::arg(v) == Catch::Approx(3 * 3.14159265358979 / 4).margin(1e-9));
    CHECK(b_d(4, ScaledCycloProduct::cyclotomic(1)).value == Rational(3));  // (3/4)*pi = B*pi/4

    // any product avoiding Phi_1 is a positive real at 1
    CHECK(ScaledCycloProduct::parse("q^3 P2 P5 P12").evaluate_at(1.0) > 0);

    // (q^{rd}-1)/(q^d-1) evaluates to r at a primitive d-th root of unity
    for (int d : {3, 5}) {
        for (int r : {2, 4}) {
            ScaledCycloProduct f =
                factor_q_power_difference(static_cast<long long>(r) * d, 0, -1) / factor_q_power_difference(d, 0, -1);
            auto z = f.evaluate_at(std::polar(1.0, 2 * 3.14159265358979323846 / d));
            CHECK(std::abs(z - std::complex<double>(r, 0)) < 1e-9);
        }
    }
}

TEST_CASE("B is a homomorphism", "[cyclopoly][property]") {
    std::mt19937 rng(20260809);
    auto random_product = [&](bool twisted_ok) {
        ScaledCycloProduct f = ScaledCycloProduct::q_power(rng() % 4);
        int n = 1 + rng() % 5;
        for (int k = 0; k < n; ++k) {
            if (twisted_ok && rng() % 4 == 0) {
                long long base[] = {8, 24};
                f *= ScaledCycloProduct::cyclotomic(CycloFactor(base[rng() % 2], rng() % 2 ? Twist::a : Twist::b));
            } else {
                f *= ScaledCycloProduct::cyclotomic(1 + rng() % 20);
            }
        }
        return f;
    };
    for (int t = 0; t < 200; ++t) {
        int d = 2 + rng() % 20;
        ScaledCycloProduct f = random_product(false), g = random_product(false);
        CHECK(b_d(d, f * g).value == b_d(d, f).value + b_d(d, g).value);
        // denominators divide 2
        Rational v = b_d(d, f).value;
        CHECK((v.den() == 1 || v.den() == 2));
    }
    for (int t = 0; t < 200; ++t) {
        CycloFactor alpha(t % 2 ? 8 : 24, t % 4 < 2 ? Twist::a : Twist::b);
        ScaledCycloProduct f = random_product(true), g = random_product(true);
        if (f.multiplicity(alpha) > 0 || g.multiplicity(alpha) > 0) continue;
        CHECK(b_twisted(alpha, f * g).value == b_twisted(alpha, f).value + b_twisted(alpha, g).value);
    }
}

TEST_CASE("canonical text format round-trips", "[cyclopoly][property]") {
    for (const char* text : {"1", "q", "q^4", "(3/2) q^4 P1^2 P2 P8a P24b", "(0+1/2 r2) q P1 P2 P4^2 P12",
                             "(1/6) q P1^2 P6", "(2) q^4", "P2^-1 q^-2", "(-1/3) P7"}) {
        ScaledCycloProduct f = ScaledCycloProduct::parse(text);
        CHECK(ScaledCycloProduct::parse(f.to_string()) == f);
    }
    std::mt19937 rng(99);
    for (int t = 0; t < 100; ++t) {
        ScaledCycloProduct f = ScaledCycloProduct::q_power(rng() % 6);
        for (int k = 0; k < 4; ++k) f *= ScaledCycloProduct::cyclotomic(1 + rng() % 25);
        f *= ScaledCycloProduct::constant(QuadScalar(Rational(1 + rng() % 9, 1 + rng() % 9)));
        CHECK(ScaledCycloProduct::parse(f.to_string()) == f);
    }
}

TEST_CASE("quotients cancel exactly", "[cyclopoly]") {
    ScaledCycloProduct f = ScaledCycloProduct::parse("(1/2) q^3 P1^2 P2 P6");
    ScaledCycloProduct g = ScaledCycloProduct::parse("(1/2) q P1 P2");
    CHECK(f / g == ScaledCycloProduct::parse("q^2 P1 P6"));
    CHECK((f / f) == ScaledCycloProduct::one());
    CHECK((f / g * g) == f);
}
