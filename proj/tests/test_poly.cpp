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

#include <numeric>
#include <random>

#include "polygauss/poly.hpp"

using namespace polygauss;

namespace {

Poly P(const FieldPtr& f, const std::string& lit) { return Poly::parse(f, lit); }

Poly random_poly(const FieldPtr& f, int max_deg, std::mt19937& rng) {
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::uniform_int_distribution<long> code(0, f->cardinality() - 1);
    int d = deg(rng);
    std::vector<long> c(static_cast<size_t>(d) + 1);
    for (auto& v : c) v = code(rng);
    return Poly(f, std::move(c));
}

}  // namespace

TEST_CASE("basic arithmetic and division") {
    auto f2 = build_field(2, 1);
    CHECK(Poly::gcd(P(f2, "0,1,1"), P(f2, "0,1")) == P(f2, "0,1"));  // gcd(x^2+x, x) = x

    auto [q, r] = P(f2, "1,1,0,1").divmod(P(f2, "1,0,1"));  // (x^3+x+1) / (x^2+1)
    CHECK(q == P(f2, "0,1"));
    CHECK(r == Poly::one(f2));

    auto [g, u, v] = Poly::egcd(P(f2, "0,1"), P(f2, "1,1"));
    CHECK(g.is_one());
    CHECK(u * P(f2, "0,1") + v * P(f2, "1,1") == g);

    CHECK_THROWS_AS(P(f2, "1").divmod(Poly::zero(f2)), std::domain_error);
    CHECK_THROWS_AS(Poly::zero(f2).degree(), std::invalid_argument);
}

TEST_CASE("gcd and egcd exhaustively over F_2 up to degree 3") {
    auto f2 = build_field(2, 1);
    std::vector<Poly> all;
    for (long c = 0; c < 16; ++c) {
        std::vector<long> codes{c & 1, (c >> 1) & 1, (c >> 2) & 1, (c >> 3) & 1};
        all.emplace_back(f2, codes);
    }
    for (const auto& a : all)
        for (const auto& b : all) {
            if (a.is_zero() && b.is_zero()) continue;
            auto g = Poly::gcd(a, b);
            if (!a.is_zero()) CHECK((a % g).is_zero());
            if (!b.is_zero()) CHECK((b % g).is_zero());
            auto [g2, u, v] = Poly::egcd(a, b);
            CHECK(g2 == g);
            CHECK(u * a + v * b == g2);
        }
}

TEST_CASE("is_positive means monic") {
    auto f3 = build_field(3, 1);
    CHECK(is_positive(P(f3, "1,0,1")));
    CHECK_FALSE(is_positive(P(f3, "0,2")));
    CHECK_FALSE(is_positive(Poly::zero(f3)));
}

TEST_CASE("coefficient-wise frobenius") {
    auto f2 = build_field(2, 1);
    auto f4 = extend_field(f2, 2);
    // polynomials with base coefficients are fixed
    auto a = P(f4, "1,0,1");
    CHECK(sigma_poly(a) == a);
    // sigma(w x + 1) = (w+1) x + 1
    CHECK(sigma_poly(P(f4, "1,2")) == P(f4, "1,3"));

    auto f9 = extend_field(build_field(3, 1), 2);
    std::mt19937 rng(11);
    for (int t = 0; t < 20; ++t) {
        auto b = random_poly(f9, 4, rng);
        CHECK(sigma_poly(sigma_poly(b)) == b);
        auto c = random_poly(f9, 4, rng);
        CHECK(sigma_poly(b * c) == sigma_poly(b) * sigma_poly(c));
    }
}

TEST_CASE("polynomial trace and norm") {
    auto f2 = build_field(2, 1);
    auto f4 = extend_field(f2, 2);
    CHECK(poly_trace(P(f4, "0,2")) == P(f2, "0,1"));   // tr(w x) = x
    CHECK(poly_norm(P(f4, "2,1")) == P(f2, "1,1,1"));  // (x+w)(x+w^2) = x^2+x+1

    // A in F_q[x]: trace = n*A, norm = A^n
    auto f3 = build_field(3, 1);
    auto f9t = extend_field(f3, 2);
    for (long c = 0; c < 27; ++c) {
        std::vector<long> codes{c % 3, (c / 3) % 3, (c / 9) % 3};
        Poly a(f3, codes);
        Poly lifted = lift(a, f9t);
        CHECK(poly_trace(lifted) == a + a);
        CHECK(poly_norm(lifted) == a * a);
        if (!a.is_zero()) CHECK(poly_norm(lifted).degree() == 2 * a.degree());
    }
}

TEST_CASE("irreducibility and factorization") {
    auto f2 = build_field(2, 1);
    CHECK(is_irreducible(P(f2, "1,1,1")));
    CHECK_FALSE(is_irreducible(P(f2, "1,0,1")));  // (x+1)^2

    // x^2+x+1 splits into two distinct monic linear factors over F_4
    auto f4 = extend_field(f2, 2);
    auto fac = factor(P(f4, "1,1,1"));
    REQUIRE(fac.factors.size() == 2);
    CHECK(fac.factors[0].first.degree() == 1);
    CHECK(fac.factors[1].first.degree() == 1);
    CHECK(fac.factors[0].second == 1);
    CHECK(fac.factors[1].second == 1);
    CHECK(fac.factors[0].first != fac.factors[1].first);

    auto f3 = build_field(3, 1);
    auto fx2 = factor(P(f3, "0,0,1"));
    REQUIRE(fx2.factors.size() == 1);
    CHECK(fx2.unit.is_one());
    CHECK(fx2.factors[0].first == P(f3, "0,1"));
    CHECK(fx2.factors[0].second == 2);
    CHECK(fx2.str() == "1 * (0,1)^2");

    CHECK_THROWS_AS(factor(Poly::zero(f2)), std::invalid_argument);
}

TEST_CASE("factor re-multiplies to the input") {
    std::mt19937 rng(20260810);
    for (auto f : {build_field(2, 1), build_field(3, 1), FieldPtr(extend_field(build_field(2, 1), 2))}) {
        for (int t = 0; t < 500; ++t) {
            auto a = random_poly(f, 6, rng);
            if (a.is_zero()) continue;
            auto fac = factor(a);  // throws internally if re-multiplication fails
            Poly prod = Poly::constant(fac.unit);
            for (const auto& [p, k] : fac.factors) {
                CHECK(p.is_monic());
                CHECK(is_irreducible(p));
                for (int i = 0; i < k; ++i) prod = prod * p;
            }
            CHECK(prod == a);
        }
    }
}

TEST_CASE("euler phi") {
    auto f2 = build_field(2, 1);
    CHECK(euler_phi(P(f2, "0,0,1")) == 2);  // units mod x^2: {1, x+1}
    // irreducible of degree h: q^h - 1
    auto f3 = build_field(3, 1);
    CHECK(euler_phi(min_irreducible(f3, 2)) == 8);
    // phi over F_4 of x^2 = 16 - 4
    auto f4 = extend_field(f2, 2);
    CHECK(euler_phi(P(f4, "0,0,1")) == 12);

    // brute-force oracle over all H with 1 <= deg <= 3
    for (auto f : {build_field(2, 1), build_field(3, 1)}) {
        for (int d = 1; d <= 3; ++d) {
            long count = 1;
            for (int i = 0; i <= d; ++i) count *= f->cardinality();
            for (long c = count / f->cardinality(); c < count; ++c) {  // degree exactly d
                std::vector<long> codes;
                long v = c;
                for (int i = 0; i <= d; ++i) {
                    codes.push_back(v % f->cardinality());
                    v /= f->cardinality();
                }
                Poly H(f, codes);
                CHECK(euler_phi(H) == static_cast<long>(units(H).size()));
            }
        }
    }
    CHECK_THROWS_AS(euler_phi(Poly::zero(f2)), std::invalid_argument);
}

TEST_CASE("residues and units") {
    auto f2 = build_field(2, 1);
    auto rs = residues(P(f2, "0,1"));
    REQUIRE(rs.size() == 2);
    CHECK(rs[0].is_zero());
    CHECK(rs[1].is_one());

    auto rs2 = residues(P(f2, "0,0,1"));
    REQUIRE(rs2.size() == 4);
    CHECK(rs2[2] == P(f2, "0,1"));
    CHECK(rs2[3] == P(f2, "1,1"));
    auto us = units(P(f2, "0,0,1"));
    REQUIRE(us.size() == 2);
    CHECK(us[0].is_one());
    CHECK(us[1] == P(f2, "1,1"));

    // |residues| over the lifted ring is q^{n m}
    auto f4 = extend_field(f2, 2);
    CHECK(residues(P(f4, "0,0,1")).size() == 16);

    CHECK_THROWS_AS(residues(Poly::one(f2)), std::invalid_argument);
    CHECK_THROWS_AS(units(Poly::zero(f2)), std::invalid_argument);
}

TEST_CASE("lift and min_irreducible") {
    auto f2 = build_field(2, 1);
    auto f4 = extend_field(f2, 2);
    auto a = P(f2, "1,0,1");
    CHECK(lift(a, f4).coeff_codes() == a.coeff_codes());
    CHECK(min_irreducible(f2, 2) == P(f2, "1,1,1"));
    CHECK(min_irreducible(build_field(3, 1), 1) == P(build_field(3, 1), "0,1"));
    CHECK_THROWS_AS(lift(a, build_field(5, 1)), std::invalid_argument);

    // splitting count: an irreducible of degree h over F_q factors over
    // F_{q^n} into gcd(h, n) distinct irreducibles
    for (long p : {2L, 3L}) {
        auto base = build_field(p, 1);
        for (int h = 1; h <= 4; ++h) {
            auto P_h = min_irreducible(base, h);
            for (int n = 1; n <= 4; ++n) {
                auto ext = extend_field(base, n);
                auto fac = factor(lift(P_h, ext));
                CHECK(fac.factors.size() == static_cast<size_t>(std::gcd(h, n)));
                for (const auto& [pp, k] : fac.factors) CHECK(k == 1);
            }
        }
    }
}

TEST_CASE("literals") {
    auto f2 = build_field(2, 1);
    CHECK(P(f2, "1,1,0,1").literal() == "1,1,0,1");
    CHECK(Poly::zero(f2).literal() == "0");
    CHECK(P(f2, "0").is_zero());
    CHECK_THROWS_AS(P(f2, "2,1"), std::invalid_argument);
    CHECK_THROWS_AS(P(f2, "1,x"), std::invalid_argument);
}
