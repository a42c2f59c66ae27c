#include "doctest.h"

#include "padiq/families.hpp"
#include "padiq/modular.hpp"
#include "padiq/oracle.hpp"
#include "padiq/padic.hpp"
#include "padiq/primes.hpp"

#include <algorithm>
#include <array>
#include <cstdint>

using namespace padiq;

TEST_CASE("decide: arithmetic progressions") {
    CHECK(decide(ArithmeticProgression{8, 1}, 3).status == DensityStatus::Dense);
    CHECK(decide(ArithmeticProgression{1, 0}, 7).status == DensityStatus::Dense);

    auto v = decide(ArithmeticProgression{4, 3}, 2);
    REQUIRE(v.status == DensityStatus::NotDense);
    auto cert = std::get<ValuationObstruction>(*v.certificate);
    CHECK(cert.period == 0);
    CHECK(cert.residue == 0);

    CHECK_THROWS_AS(decide(ArithmeticProgression{0, 3}, 2), domain_error);
    CHECK_THROWS_AS(decide(ArithmeticProgression{4, 3}, 9), domain_error);

    // common p-power is divided out first: {6n + 3} at p = 3 reduces to {2n + 1}
    CHECK(decide(ArithmeticProgression{6, 3}, 3).status == DensityStatus::Dense);
    // {9n + 3} reduces to {3n + 1}: still a multiple-of-3 step, so every
    // element keeps valuation exactly 1
    auto w = decide(ArithmeticProgression{9, 3}, 3);
    REQUIRE(w.status == DensityStatus::NotDense);
    CHECK(std::get<ValuationObstruction>(*w.certificate).residue == 1);
    CHECK(decide(ArithmeticProgression{5, 0}, 5).status == DensityStatus::Dense);
}

TEST_CASE("decide: geometric progressions are never dense") {
    auto v = decide(GeometricProgression{1, 3}, 5);
    REQUIRE(v.status == DensityStatus::NotDense);
    CHECK(std::get<ValuationObstruction>(*v.certificate).residue == 0);

    auto w = decide(GeometricProgression{3, 2}, 2);
    REQUIRE(w.status == DensityStatus::NotDense);
    auto ba = std::get<BoundedAwayFrom>(*w.certificate);
    CHECK(ba.target == Rational(-1));

    CHECK_THROWS_AS(decide(GeometricProgression{1, 1}, 3), domain_error);
}

TEST_CASE("decide: sums of squares") {
    for (long p : {2, 3, 5, 7, 13})
        CHECK(decide(SumOfSquares{1}, Int(p)).status == DensityStatus::NotDense);

    CHECK(decide(SumOfSquares{2}, 13).status == DensityStatus::Dense);
    CHECK(decide(SumOfSquares{2}, 5).status == DensityStatus::Dense);
    CHECK(decide(SumOfSquares{2}, 2).status == DensityStatus::NotDense);
    CHECK(decide(SumOfSquares{2}, 3).status == DensityStatus::NotDense);
    CHECK(decide(SumOfSquares{2}, 7).status == DensityStatus::NotDense);
    CHECK(decide(SumOfSquares{2}, 13).theorem_tag == "Thm SOS(b)");

    for (long p : {2, 3, 5, 7, 13}) {
        CHECK(decide(SumOfSquares{3}, Int(p)).status == DensityStatus::Dense);
        CHECK(decide(SumOfSquares{4}, Int(p)).status == DensityStatus::Dense);
    }
}

TEST_CASE("decide: sums of cubes") {
    for (long p : {2, 3, 5, 7, 13})
        CHECK(decide(SumOfCubes{1}, Int(p)).status == DensityStatus::NotDense);

    CHECK(decide(SumOfCubes{2}, 7).status == DensityStatus::Dense);
    CHECK(decide(SumOfCubes{2}, 2).status == DensityStatus::Dense);
    auto v = decide(SumOfCubes{2}, 3);
    REQUIRE(v.status == DensityStatus::NotDense);
    auto cert = std::get<ResidueObstruction>(*v.certificate);
    CHECK(cert.modulus == 9);
    CHECK(cert.allowed == std::vector<Int>{0, 1, 2, 7, 8});

    for (long p : {2, 3, 5, 7, 13})
        CHECK(decide(SumOfCubes{3}, Int(p)).status == DensityStatus::Dense);
}

TEST_CASE("decide: prime power unions") {
    CHECK(decide(PrimePowerUnion{7, 5}, 7).status == DensityStatus::Dense);
    CHECK(decide(PrimePowerUnion{5, 7}, 5).status == DensityStatus::NotDense);
    CHECK(decide(PrimePowerUnion{2, 3}, 2).status == DensityStatus::UndecidedByTheory);
    CHECK_THROWS_AS(decide(PrimePowerUnion{5, 10}, 5), domain_error);

    // 7 generates mod 5 but not mod 25, so quotients avoid p + 1 = 6
    auto v = decide(PrimePowerUnion{5, 7}, 5);
    auto ba = std::get<BoundedAwayFrom>(*v.certificate);
    CHECK(ba.target == Rational(6));
    CHECK(ba.radius_exponent == 2);

    // 7 = 1 mod 3 generates nothing mod 3; 2 is already unreachable
    auto w = decide(PrimePowerUnion{3, 7}, 3);
    auto ba2 = std::get<BoundedAwayFrom>(*w.certificate);
    CHECK(ba2.target == Rational(2));
    CHECK(ba2.radius_exponent == 1);
}

TEST_CASE("prime power union matches the primitive-root test definitionally") {
    long mismatches = 0;
    for (std::uint64_t p : primes_up_to(199)) {
        if (p == 2) continue;
        const Int pz(static_cast<unsigned long>(p));
        const Int p2 = pz * pz;
        for (Int b = 2; b < p2; ++b) {
            if (gcd(b, pz) != 1) continue;
            auto verdict = decide(PrimePowerUnion{pz, b}, pz);
            if ((verdict.status == DensityStatus::Dense) != is_primitive_root(b, p2))
                ++mismatches;
        }
    }
    CHECK(mismatches == 0);
}

TEST_CASE("is_sum_of_three_squares: Legendre criterion") {
    CHECK_FALSE(is_sum_of_three_squares(7));
    CHECK_FALSE(is_sum_of_three_squares(28));
    CHECK_FALSE(is_sum_of_three_squares(112));
    for (long k = 0; k <= 1000; ++k) CHECK(is_sum_of_three_squares(Int(8 * k + 1)));
    CHECK(is_sum_of_three_squares(3));
}

TEST_CASE("enumerate_power_sums") {
    auto s4 = enumerate_power_sums(4, 2, 50);
    CHECK(s4.elements.size() == 50);  // Lagrange: everything

    auto c1 = enumerate_power_sums(1, 3, 30);
    CHECK(c1.elements == std::vector<Int>{1, 8, 27});

    auto s3 = enumerate_power_sums(3, 2, 16);
    std::vector<Int> expect;
    for (long n = 1; n <= 16; ++n)
        if (n != 7 && n != 15) expect.emplace_back(n);
    CHECK(s3.elements == expect);
}

TEST_CASE("enumerate_power_sums matches the three-square criterion") {
    auto s3 = enumerate_power_sums(3, 2, 10000);
    std::size_t idx = 0;
    for (long n = 1; n <= 10000; ++n) {
        const bool in_set = idx < s3.elements.size() && s3.elements[idx] == n;
        if (in_set) ++idx;
        CHECK(in_set == is_sum_of_three_squares(Int(n)));
    }
}

TEST_CASE("lift_two_squares") {
    CHECK(lift_two_squares(0, 5, 1) == std::pair<Int, Int>{1, 2});
    auto [x, y] = lift_two_squares(7, 13, 3);
    CHECK((x * x + y * y - 7) % 2197 == 0);
    CHECK(x % 13 != 0);
    CHECK_THROWS_AS(lift_two_squares(1, 7, 2), domain_error);
    CHECK_THROWS_AS(lift_two_squares(1, 2, 2), domain_error);

    // lifting extends: the solution mod p^(r+1) reduces to the one mod p^r
    auto [x3, y3] = lift_two_squares(11, 5, 3);
    auto [x4, y4] = lift_two_squares(11, 5, 4);
    CHECK((x4 - x3) % 125 == 0);
    CHECK(y4 == y3);
}

TEST_CASE("lift_two_cubes_mod7") {
    CHECK(lift_two_cubes_mod7(2, 1) == std::pair<Int, Int>{1, 1});
    auto [x, y] = lift_two_cubes_mod7(6, 3);
    CHECK((x * x * x + y * y * y - 6) % 343 == 0);
    CHECK(x % 7 != 0);
    CHECK_THROWS_AS(lift_two_cubes_mod7(3, 1), domain_error);
    CHECK_THROWS_AS(lift_two_cubes_mod7(4, 2), domain_error);
}

TEST_CASE("lift_three_cubes_mod3") {
    auto sol = lift_three_cubes_mod3(3, 2);
    CHECK(sol == std::array<Int, 3>{1, 1, 1});
    auto [x, y, z] = lift_three_cubes_mod3(8, 4);
    CHECK((x * x * x + y * y * y + z * z * z - 8) % 81 == 0);
    CHECK(x % 3 != 0);
    CHECK_THROWS_AS(lift_three_cubes_mod3(4, 2), domain_error);
    CHECK_THROWS_AS(lift_three_cubes_mod3(13, 2), domain_error);  // 13 = 4 mod 9
    CHECK_THROWS_AS(lift_three_cubes_mod3(1, 1), domain_error);   // needs r >= 2
}

TEST_CASE("two-cube congruence solvable for every n iff neither 7 nor 9 divides m") {
    // empirical check of the solvability criterion for moduli <= 10^4;
    // "not divisible by 7 or 9" reads as divisible by neither
    for (std::uint64_t m : {2ull, 9ull, 27ull, 49ull, 63ull, 126ull, 441ull, 5000ull, 9261ull}) {
        std::vector<bool> hit(m, false);
        for (std::uint64_t x = 0; x < m; ++x) {
            const std::uint64_t x3 = x * x % m * x % m;
            for (std::uint64_t y = 0; y <= x; ++y) {
                hit[(x3 + y * y % m * y) % m] = true;
            }
        }
        const bool all = std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
        const bool criterion = (m % 7 != 0) && (m % 9 != 0);
        CHECK(all == criterion);
    }
}

TEST_CASE("S_m density is monotone in m") {
    for (unsigned m = 1; m <= 3; ++m) {
        for (long p : {2, 3, 5, 7, 13}) {
            if (decide(SumOfSquares{m}, Int(p)).status == DensityStatus::Dense)
                CHECK(decide(SumOfSquares{m + 1}, Int(p)).status == DensityStatus::Dense);
        }
    }
}

TEST_CASE("family_sample feeds the oracle") {
    PrimePower pp(5, 2);
    auto sample = family_sample(PrimePowerUnion{5, 7}, pp, 2, 10000);
    // powers of 7 mod 25 cycle with order 4
    CHECK(sample.elements.size() == 3 + 4 - 1);  // {1, 5, 25} u {7, 24, 18, 1}
    auto report = coverage_check(sample, pp, 2);
    CHECK_FALSE(report.fully_covered());

    auto ap = family_sample(ArithmeticProgression{4, 3}, pp, 2, 100);
    CHECK(ap.elements.front() == 3);
    CHECK(ap.elements.back() == 99);
}
