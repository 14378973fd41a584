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

#include "polygauss/verify.hpp"

using namespace polygauss;

namespace {

Poly P(const FieldPtr& f, const std::string& lit) { return Poly::parse(f, lit); }

Json strip_volatile(const Report& report) {
    Json j = report_to_json(report);
    j.erase("generated_at");
    for (auto& rec : j["records"]) rec.erase("micros");
    return j;
}

}  // namespace

TEST_CASE("classical identity records") {
    // F_3, n = 2: one non-principal chi and two non-principal psi give two
    // in-hypothesis records, all passing
    auto records = verify_classical(3, 1, 2);
    REQUIRE(records.size() == 6);  // 2 mult chars x 3 add chars
    long pass = 0, excluded = 0;
    for (const auto& r : records) {
        CHECK(r.identity == "classical");
        if (r.verdict == "pass") ++pass;
        if (r.verdict == "hypothesis-excluded") ++excluded;
        CHECK(r.verdict != "fail");
    }
    CHECK(pass == 2);
    CHECK(excluded == 4);

    // F_2 has no non-principal multiplicative character: everything excluded
    for (const auto& r : verify_classical(2, 1, 2)) CHECK(r.verdict == "hypothesis-excluded");

    // n = 3 over F_3 passes as well
    for (const auto& r : verify_classical(3, 1, 3)) CHECK(r.verdict != "fail");

    CHECK_THROWS_AS(verify_classical(3, 1, 20), ConfigError);  // budget
}

TEST_CASE("hayes identity") {
    auto f2 = build_field(2, 1);
    auto H = P(f2, "0,1");  // x
    auto records = verify_hayes_all(f2, H, 2, {});
    REQUIRE(records.size() == 1);  // phi(x) = 1: only the principal character
    CHECK(records[0].verdict == "pass");
    // G(chi_0, E) = -1 over a degree-1 modulus; both sides reduce to 1
    CHECK(records[0].m == 1);

    auto f3 = build_field(3, 1);
    auto H3 = P(f3, "1,0,1");  // x^2 + 1, irreducible over F_3
    auto r3 = verify_hayes_all(f3, H3, 2, {});
    REQUIRE(r3.size() == 8);
    for (const auto& r : r3) CHECK(r.verdict == "pass");

    auto H2 = P(f2, "0,0,1");
    for (const auto& r : verify_hayes_all(f2, H2, 2, {})) CHECK(r.verdict == "pass");
}

TEST_CASE("main identity") {
    auto f2 = build_field(2, 1);
    auto H = P(f2, "0,0,1");  // x^2
    auto records = verify_main_all(f2, H, 2, {}, {});
    REQUIRE(records.size() == 8);  // 2 characters x 4 residues G

    for (const auto& r : records) {
        if (r.chi_index == 0 && r.psi_G == "0")
            CHECK(r.verdict == "hypothesis-excluded");
        else
            CHECK(r.verdict == "pass");
        if (r.psi_G == "0,1") {
            CHECK(r.m == 2);
            CHECK(r.m1 == 1);
            CHECK(r.N == "0,1");
        }
    }

    // chi non-principal with psi principal: both sides vanish but stay in hypothesis
    auto r_np = verify_main(f2, H, 2, mult_group(H)[1], Poly::zero(f2));
    CHECK(r_np.verdict == "pass");
    CHECK(r_np.lhs == r_np.rhs);

    // every in-hypothesis instance over small F_3 boxes passes
    auto f3 = build_field(3, 1);
    for (const auto& r : verify_main_all(f3, P(f3, "0,0,1"), 2, {}, {})) CHECK(r.verdict != "fail");
}

TEST_CASE("prime power identity") {
    auto f2 = build_field(2, 1);
    // phi-ratio example at H = x^2 over F_2, n = 2:
    // phi_2(x) * phi(x^2)^2 = 3 * 4 = 12 = phi_2(x^2) * phi(x)^2 = 12 * 1
    auto x = P(f2, "0,1");
    auto records = verify_prime_power_all(f2, x, 2, 2, {}, {});
    for (const auto& r : records) {
        if (r.verdict == "hypothesis-excluded") continue;
        CHECK(r.verdict == "pass");
        if (r.psi_G == "0,1") {
            CHECK(r.phi_n_N == 3);
            CHECK(r.phi_H == 2);
            CHECK(r.phi_n_H == 12);
            CHECK(r.phi_N == 1);
        }
    }

    // chi non-principal and H | G: both sides zero, recorded as pass
    auto H = x * x;
    auto chars = mult_group(H);
    auto zero_rec = verify_prime_power(f2, x, 2, 2, chars[1], Poly::zero(f2));
    CHECK(zero_rec.verdict == "pass");
    CHECK(zero_rec.lhs == zero_rec.rhs);

    // all chi, all G over F_3 at P = x, k = 2, n = 2
    auto f3 = build_field(3, 1);
    for (const auto& r : verify_prime_power_all(f3, P(f3, "0,1"), 2, 2, {}, {})) CHECK(r.verdict != "fail");

    CHECK_THROWS_AS(verify_prime_power(f2, H, 1, 2, chars[0], Poly::zero(f2)), std::invalid_argument);
}

TEST_CASE("lemma suite") {
    auto f2 = build_field(2, 1);
    auto records = verify_lemma_suite(f2, P(f2, "0,1,1"), 2);  // x^2 + x
    CHECK(!records.empty());
    for (const auto& r : records) CHECK(r.verdict == "pass");

    bool saw_conductor = false, saw_split = false, saw_orth = false;
    for (const auto& r : records) {
        if (r.identity == "conductor-stability") saw_conductor = true;
        if (r.identity == "irreducible-splitting") saw_split = true;
        if (r.identity == "additive-orthogonality") saw_orth = true;
    }
    CHECK(saw_conductor);
    CHECK(saw_split);
    CHECK(saw_orth);

    auto f3 = build_field(3, 1);
    for (const auto& r : verify_lemma_suite(f3, P(f3, "0,0,1"), 2)) CHECK(r.verdict == "pass");
}

TEST_CASE("sweep configuration validation") {
    SweepConfig cfg;
    cfg.characteristics = {2};
    cfg.ext_degrees = {2};
    cfg.identities = {"main"};
    cfg.moduli = {"0,1"};

    CHECK(run_sweep(cfg).all_pass());

    SweepConfig bad = cfg;
    bad.identities = {"nonsense"};
    CHECK_THROWS_AS(run_sweep(bad), ConfigError);

    bad = cfg;
    bad.budget = 2;  // q^{n m} = 4 > 2
    CHECK_THROWS_AS(run_sweep(bad), ConfigError);

    bad = cfg;
    bad.moduli = {"1"};
    CHECK_THROWS_AS(run_sweep(bad), ConfigError);

    bad = cfg;
    bad.moduli.clear();
    CHECK_THROWS_AS(run_sweep(bad), ConfigError);  // no modulus source

    bad = cfg;
    bad.format = "xml";
    CHECK_THROWS_AS(run_sweep(bad), ConfigError);

    // empty identity selection: empty report, overall pass
    SweepConfig empty = cfg;
    empty.identities = {};
    auto report = run_sweep(empty);
    CHECK(report.records.empty());
    CHECK(report.all_pass());
    CHECK(exit_code(report) == 0);
}

TEST_CASE("sweep determinism and parallelism") {
    SweepConfig cfg;
    cfg.characteristics = {2, 3};
    cfg.ext_degrees = {2};
    cfg.max_modulus_degree = 2;
    cfg.identities = {"classical", "hayes", "main", "prime_power"};

    auto a = run_sweep(cfg);
    auto b = run_sweep(cfg);
    CHECK(strip_volatile(a).dump() == strip_volatile(b).dump());

    SweepConfig parallel = cfg;
    parallel.jobs = 4;
    auto c = run_sweep(parallel);
    // job count must not affect the report (the config echo records it)
    auto ja = strip_volatile(a);
    auto jc = strip_volatile(c);
    ja.erase("config");
    jc.erase("config");
    CHECK(ja.dump() == jc.dump());

    CHECK(a.all_pass());
}

TEST_CASE("self-test hook forces failure") {
    SweepConfig cfg;
    cfg.characteristics = {2};
    cfg.ext_degrees = {2};
    cfg.moduli = {"0,0,1"};
    cfg.identities = {"main"};
    cfg.selftest_negate_lhs = true;

    auto report = run_sweep(cfg);
    CHECK_FALSE(report.all_pass());
    CHECK(exit_code(report) == 1);
    long fails = 0;
    for (const auto& r : report.records)
        if (r.verdict == "fail") ++fails;
    CHECK(fails > 0);

    // the honest run passes and exits 0
    cfg.selftest_negate_lhs = false;
    CHECK(exit_code(run_sweep(cfg)) == 0);
}

TEST_CASE("report serialization") {
    SweepConfig cfg;
    cfg.characteristics = {2};
    cfg.ext_degrees = {2};
    cfg.moduli = {"0,1"};
    cfg.identities = {"main", "hayes"};
    auto report = run_sweep(cfg);

    auto j = report_to_json(report);
    REQUIRE(j.contains("records"));
    REQUIRE(!j["records"].empty());
    const auto& rec = j["records"][0];
    for (const char* key : {"identity", "q", "l", "n", "H", "chi_index", "psi_G", "m", "m1", "N", "phi_H", "phi_N",
                            "phi_n_H", "phi_n_N", "lhs", "rhs", "verdict", "micros"})
        CHECK(rec.contains(key));
    CHECK(j["overall"] == "pass");
    CHECK(j["totals"].contains("main"));

    auto csv = emit_csv(report);
    CHECK(csv.rfind("identity,q,l,n,H,", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == static_cast<long>(report.records.size()) + 1);

    auto text = emit_text(report);
    CHECK(text.find("overall: pass") != std::string::npos);
    CHECK_THROWS_AS(emit(report, "xml"), ConfigError);

    // config round-trip through JSON
    auto cfg2 = SweepConfig::from_json(report.config_echo);
    CHECK(cfg2.characteristics == cfg.characteristics);
    CHECK(cfg2.moduli == cfg.moduli);
    CHECK(cfg2.identities == cfg.identities);
}

TEST_CASE("cross-multiplied verdict agrees with the direct coprime form") {
    // for gcd(G, H) = 1 the main identity reduces to the sign-m form used by
    // the hayes route; both must pass together
    for (auto f : {build_field(2, 1), build_field(3, 1)}) {
        auto ext = extend_field(f, 2);
        for (int d = 1; d <= 2; ++d) {
            for_each_residue(Poly::monomial(f, d), [&](const Poly& low) {
                Poly H = low + Poly::monomial(f, d);
                Poly H_ext = lift(H, ext);
                for (const auto& chi : mult_group(H)) {
                    for_each_residue(H, [&](const Poly& G) {
                        if (G.is_zero() || !Poly::gcd(G, H).is_one()) return;
                        auto rec = verify_main(f, H, 2, chi, G);
                        CHECK(rec.verdict == "pass");
                        auto base = gauss_sum(chi, AdditiveChar(H, G)).value;
                        auto lifted = gauss_sum(chi.lifted(ext), AdditiveChar(H_ext, lift(G, ext))).value;
                        bool neg = H.degree() % 2 != 0;
                        auto lhs = neg ? -lifted : lifted;
                        auto rhs = (neg ? -base : base).pow(2);
                        CHECK(lhs.equals(rhs));
                    });
                }
            });
        }
    }
}
