/*
   Copyright 2026 The polygauss authors

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

#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "polygauss/cyclotomic.hpp"

using polygauss::BigInt;
using polygauss::CycloPoly;
using polygauss::CyclotomicInt;

namespace {

CyclotomicInt zeta(long m, long k) { return CyclotomicInt::root_of_unity(m, k); }
CyclotomicInt integer(long m, long v) { return CyclotomicInt::from_integer(m, v); }

CyclotomicInt random_value(long order, std::mt19937& rng) {
    std::uniform_int_distribution<long> coeff(-4, 4);
    std::vector<BigInt> c(static_cast<size_t>(order));
    for (auto& v : c) v = coeff(rng);
    return CyclotomicInt(order, std::move(c));
}

}  // namespace

TEST_CASE("root_of_unity basics") {
    CHECK(zeta(1, 0).equals(integer(1, 1)));
    CHECK(zeta(4, 2).equals(integer(4, -1)));
    CHECK(zeta(6, 7).equals(zeta(6, 1)));
    CHECK_THROWS_AS(CyclotomicInt::root_of_unity(0, 0), std::invalid_argument);
}

TEST_CASE("additive operations") {
    auto sum = zeta(3, 1) + (zeta(3, 2) + integer(3, 1));
    CHECK(sum.is_zero());
    CHECK(integer(5, 1).scaled(7).equals(integer(5, 7)));
    CHECK((-zeta(4, 2)).equals(integer(4, 1)));
    CHECK_THROWS_AS(zeta(3, 1) + zeta(6, 1), std::invalid_argument);
}

TEST_CASE("multiplication is cyclic convolution") {
    CHECK((zeta(6, 1) * zeta(6, 5)).equals(integer(6, 1)));
    auto minus_one = zeta(3, 1) + zeta(3, 2);  // = -1
    CHECK((minus_one * minus_one).equals(integer(3, 1)));
    CHECK((CyclotomicInt(5) * zeta(5, 3)).is_zero());
    CHECK_THROWS_AS(zeta(3, 1) * zeta(4, 1), std::invalid_argument);
}

TEST_CASE("conjugation") {
    CHECK(zeta(4, 1).conj().equals(zeta(4, 3)));
    CHECK(integer(8, 5).conj().equals(integer(8, 5)));
    // |1 + zeta_8|^2 expands to 2 + zeta_8 + zeta_8^7.
    auto z = zeta(8, 1) + integer(8, 1);
    auto expected = integer(8, 2) + zeta(8, 1) + zeta(8, 7);
    CHECK((z * z.conj()).equals(expected));
}

TEST_CASE("powers") {
    CHECK(zeta(5, 1).pow(5).equals(integer(5, 1)));
    CHECK(integer(7, -1).pow(3).equals(integer(7, -1)));
    auto minus_one = zeta(3, 1) + zeta(3, 2);
    CHECK(minus_one.pow(2).equals(integer(3, 1)));
    CHECK(zeta(12, 5).pow(0).equals(integer(12, 1)));
}

TEST_CASE("cyclotomic polynomials") {
    auto check_coeffs = [](long m, std::vector<long> want) {
        const auto& got = CycloPoly::of(m).coeffs();
        REQUIRE(got.size() == want.size());
        for (size_t i = 0; i < want.size(); ++i) CHECK(got[i] == want[i]);
    };
    check_coeffs(1, {-1, 1});
    check_coeffs(4, {1, 0, 1});
    check_coeffs(6, {1, -1, 1});
    CHECK(CycloPoly::of(12).degree() == polygauss::euler_totient(12));

    // Independent oracle: prod_{d | M} Phi_d == x^M - 1.
    for (long m : {2L, 3L, 8L, 9L, 10L, 12L, 15L, 24L, 30L}) {
        std::vector<BigInt> prod{1};
        for (long d = 1; d <= m; ++d) {
            if (m % d != 0) continue;
            const auto& phi = CycloPoly::of(d).coeffs();
            std::vector<BigInt> next(prod.size() + phi.size() - 1);
            for (size_t i = 0; i < prod.size(); ++i)
                for (size_t j = 0; j < phi.size(); ++j) next[i + j] += prod[i] * phi[j];
            prod = std::move(next);
        }
        REQUIRE(prod.size() == static_cast<size_t>(m) + 1);
        CHECK(prod.front() == -1);
        CHECK(prod.back() == 1);
        for (size_t i = 1; i < static_cast<size_t>(m); ++i) CHECK(prod[i] == 0);
    }
}

TEST_CASE("equality oracle") {
    CHECK(zeta(4, 2).equals(integer(4, -1)));
    CHECK_FALSE(zeta(6, 1).embedded(6).equals(zeta(3, 1).embedded(6)));
    CHECK((integer(3, 1) + zeta(3, 1) + zeta(3, 2)).is_zero());
    for (long m = 2; m <= 60; ++m) {
        CyclotomicInt sum(m);
        for (long k = 0; k < m; ++k) sum = sum + zeta(m, k);
        CHECK(sum.is_zero());
    }
}

TEST_CASE("embedding") {
    CHECK(zeta(2, 1).embedded(6).equals(zeta(6, 3)));
    CHECK(integer(1, 1).embedded(9).equals(integer(9, 1)));
    CHECK(zeta(3, 1).embedded(12).equals(zeta(12, 4)));
    CHECK_THROWS_AS(zeta(4, 1).embedded(6), std::invalid_argument);
}

TEST_CASE("algebraic properties on random values") {
    std::mt19937 rng(20260810);
    for (long order : {2L, 3L, 5L, 8L, 12L, 20L}) {
        for (int trial = 0; trial < 20; ++trial) {
            auto a = random_value(order, rng);
            auto b = random_value(order, rng);
            auto c = random_value(order, rng);
            CHECK(a.equals(b) == (a - b).is_zero());
            CHECK((a * b).equals(b * a));
            CHECK(((a * b) * c).equals(a * (b * c)));
            CHECK((a * b).conj().equals(a.conj() * b.conj()));
            // embed respects equality both ways
            long target = order * 3;
            CHECK(a.embedded(target).equals(b.embedded(target)) == a.equals(b));
        }
    }
}

TEST_CASE("canonical text form") {
    CHECK(integer(4, 3).str() == "cyclo(4)[3,0]");
    CHECK(zeta(4, 2).str() == "cyclo(4)[-1,0]");
    CHECK((zeta(8, 1) + integer(8, 1)).str() == "cyclo(8)[1,1,0,0]");
}

TEST_CASE("rational products reduce to constant form") {
    // (zeta_8 + zeta_8^3)(conj) has absolute value squared 2: after reduction
    // every non-constant coefficient vanishes
    auto z = zeta(8, 1) + zeta(8, 3);
    auto norm2 = z * z.conj();
    auto red = norm2.reduced();
    REQUIRE(red.size() == 4);
    CHECK(red[0] == 2);
    for (size_t i = 1; i < red.size(); ++i) CHECK(red[i] == 0);
    CHECK(norm2.str() == "cyclo(8)[2,0,0,0]");
}
