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

#ifndef POLYGAUSS_VERIFY_HPP
#define POLYGAUSS_VERIFY_HPP

#include <atomic>
#include <chrono>
#include <cstdint>
#include <ctime>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "polygauss/gauss_sums.hpp"

namespace polygauss {

using Json = nlohmann::ordered_json;

/// Raised when a requested configuration is rejected before any verification
/// work starts (unknown identity, malformed selection, budget violation, ...).
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

struct VerifyOptions {
    long budget = 1'000'000;  // max residue-system terms per Gauss sum
    bool negate_lhs = false;  // self-test hook: corrupt the left side before comparing
};

/// One theorem-instance check: the full parameter tuple, both sides in
/// canonical cyclotomic text form, and the verdict. "hypothesis-excluded" is
/// reserved for parameter combinations outside a theorem's stated hypotheses;
/// both sides are still attached for inspection.
struct VerificationRecord {
    std::string identity;
    long q = 0;
    int l = 1;
    int n = 1;
    std::string H;
    long chi_index = -1;
    std::string psi_G;
    int m = 0;
    int m1 = 0;
    std::string N;
    std::uint64_t phi_H = 0;
    std::uint64_t phi_N = 0;
    std::uint64_t phi_n_H = 0;
    std::uint64_t phi_n_N = 0;
    std::string lhs;
    std::string rhs;
    std::string verdict;
    std::int64_t micros = 0;
};

namespace detail {

class StopWatch {
   public:
    std::int64_t micros() const {
        return std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start_).count();
    }

   private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

inline long checked_pow_terms(long base, int exp, long budget, const char* what) {
    long terms = 1;
    for (int i = 0; i < exp; ++i) {
        if (terms > budget / base) throw ConfigError(std::string(what) + ": term count exceeds the budget");
        terms *= base;
    }
    if (terms > budget) throw ConfigError(std::string(what) + ": term count exceeds the budget");
    return terms;
}

inline std::uint64_t phi_u64(const Poly& H) {
    BigInt v = euler_phi(H);
    return static_cast<std::uint64_t>(v);
}

inline BigInt bigint_pow(BigInt base, int e) {
    BigInt acc = 1;
    for (int i = 0; i < e; ++i) acc *= base;
    return acc;
}

inline std::vector<Poly> all_monic_of_degree(const FieldPtr& f, int deg) {
    std::vector<Poly> out;
    for_each_residue(Poly::monomial(f, deg), [&](const Poly& low) { out.push_back(low + Poly::monomial(f, deg)); });
    return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Classical Davenport-Hasse over F_q: -tau(chi^(n), psi^(n)) = (-tau(chi, psi))^n
// for every pair of non-principal characters; principal pairs are recorded as
// hypothesis-excluded.
// ---------------------------------------------------------------------------
inline std::vector<VerificationRecord> verify_classical(long p, int l, int n, const VerifyOptions& opts = {}) {
    auto field = build_field(p, l);
    const long q = field->cardinality();
    detail::checked_pow_terms(q, n, opts.budget, "classical");
    auto ext = extend_field(field, n);

    std::vector<VerificationRecord> out;
    const long mult_count = std::max(q - 1, 1L);
    for (long j = 0; j < mult_count; ++j) {
        FieldMultChar chi(field, j);
        for (long b = 0; b < q; ++b) {
            FieldAddChar psi(field, b);
            detail::StopWatch watch;
            VerificationRecord rec;
            rec.identity = "classical";
            rec.q = q;
            rec.l = l;
            rec.n = n;
            rec.chi_index = j;
            rec.psi_G = std::to_string(b);

            CyclotomicInt base = tau(chi, psi);
            CyclotomicInt lifted = tau_lifted(chi, psi, ext);
            CyclotomicInt lhs = -lifted;
            if (opts.negate_lhs) lhs = -lhs;
            CyclotomicInt rhs = (-base).pow(static_cast<unsigned long>(n));
            rec.lhs = lhs.str();
            rec.rhs = rhs.str();
            if (chi.is_principal() || psi.is_principal())
                rec.verdict = "hypothesis-excluded";
            else
                rec.verdict = lhs.equals(rhs) ? "pass" : "fail";
            rec.micros = watch.micros();
            out.push_back(std::move(rec));
        }
    }
    return out;
}

namespace detail {

struct MainSides {
    CyclotomicInt lhs;  // cross-multiplied left side
    CyclotomicInt rhs;
    CyclotomicInt raw_base;    // G(chi, psi)
    CyclotomicInt raw_lifted;  // G(chi^(n), psi^(n))
    int m = 0;
    int m1 = 0;
    Poly N;
    BigInt phi_H, phi_N, phi_n_H, phi_n_N;
};

/// Both sides of the cross-multiplied main identity
///   (-1)^(m-m1) phi_n(N) phi(H)^n G(chi^(n), psi^(n))
///     = (-1)^(n(m-m1)) phi_n(H) phi(N)^n G(chi, psi)^n
/// computed exactly in Z[zeta_M].
inline MainSides main_sides(const MultChar& chi, const Poly& G, int n, const FieldPtr& ext) {
    const Poly& H = chi.basis().modulus();
    const FieldPtr& f = H.field();
    MainSides s{CyclotomicInt(1), CyclotomicInt(1), CyclotomicInt(1), CyclotomicInt(1), 0, 0, Poly::one(f), 0, 0, 0, 0};

    s.m = H.degree();
    Poly G_red = G % H;
    Poly gcdGH = G_red.is_zero() ? H.monic() : Poly::gcd(G_red, H);
    s.m1 = gcdGH.is_constant() ? 0 : gcdGH.degree();
    s.N = (H / gcdGH).monic();

    s.phi_H = euler_phi(H);
    s.phi_N = euler_phi(s.N);
    Poly H_ext = lift(H, ext);
    Poly N_ext = lift(s.N, ext);
    s.phi_n_H = euler_phi(H_ext);
    s.phi_n_N = euler_phi(N_ext);

    auto chi_n = chi.lifted(ext);
    s.raw_base = gauss_sum(chi, AdditiveChar(H, G_red)).value;
    s.raw_lifted = gauss_sum(chi_n, AdditiveChar(H_ext, lift(G_red, ext))).value;

    const bool lhs_neg = ((s.m - s.m1) % 2) != 0;
    const bool rhs_neg = ((static_cast<long>(n) * (s.m - s.m1)) % 2) != 0;
    BigInt lhs_scale = s.phi_n_N * detail::bigint_pow(s.phi_H, n);
    BigInt rhs_scale = s.phi_n_H * detail::bigint_pow(s.phi_N, n);
    s.lhs = s.raw_lifted.scaled(lhs_neg ? -lhs_scale : lhs_scale);
    s.rhs = s.raw_base.pow(static_cast<unsigned long>(n)).scaled(rhs_neg ? -rhs_scale : rhs_scale);
    return s;
}

inline void fill_common(VerificationRecord& rec, const FieldPtr& field, const Poly& H, int n, const MultChar& chi,
                        const Poly& G) {
    rec.q = field->cardinality();
    rec.l = field->degree();
    rec.n = n;
    rec.H = H.literal();
    rec.chi_index = chi.index();
    rec.psi_G = (G % H).literal();
}

}  // namespace detail

/// Main identity, cross-multiplied. The hypothesis "not both principal" gates
/// the verdict; excluded pairs still carry both computed sides.
inline VerificationRecord verify_main(const FieldPtr& field, const Poly& H, int n, const MultChar& chi, const Poly& G,
                                      const VerifyOptions& opts = {}) {
    detail::checked_pow_terms(field->cardinality(), n * H.degree(), opts.budget, "main");
    auto ext = extend_field(field, n);
    detail::StopWatch watch;
    auto sides = detail::main_sides(chi, G, n, ext);

    VerificationRecord rec;
    rec.identity = "main";
    detail::fill_common(rec, field, H, n, chi, G);
    rec.m = sides.m;
    rec.m1 = sides.m1;
    rec.N = sides.N.literal();
    rec.phi_H = static_cast<std::uint64_t>(sides.phi_H);
    rec.phi_N = static_cast<std::uint64_t>(sides.phi_N);
    rec.phi_n_H = static_cast<std::uint64_t>(sides.phi_n_H);
    rec.phi_n_N = static_cast<std::uint64_t>(sides.phi_n_N);
    CyclotomicInt lhs = opts.negate_lhs ? -sides.lhs : sides.lhs;
    rec.lhs = lhs.str();
    rec.rhs = sides.rhs.str();

    const bool psi_principal = (G % H).is_zero();
    if (chi.is_principal() && psi_principal)
        rec.verdict = "hypothesis-excluded";
    else
        rec.verdict = lhs.equals(sides.rhs) ? "pass" : "fail";
    rec.micros = watch.micros();
    return rec;
}

inline std::vector<VerificationRecord> verify_main_all(const FieldPtr& field, const Poly& H, int n,
                                                       const std::vector<long>& chi_sel, const std::vector<Poly>& psi_sel,
                                                       const VerifyOptions& opts = {}) {
    std::vector<VerificationRecord> out;
    auto chars = mult_group(H);
    for (const auto& chi : chars) {
        if (!chi_sel.empty() && std::find(chi_sel.begin(), chi_sel.end(), chi.index()) == chi_sel.end()) continue;
        if (psi_sel.empty()) {
            for_each_residue(H, [&](const Poly& G) { out.push_back(verify_main(field, H, n, chi, G, opts)); });
        } else {
            for (const auto& G : psi_sel) out.push_back(verify_main(field, H, n, chi, G, opts));
        }
    }
    return out;
}

/// Hayes' identity: (-1)^m G(chi^(n), E^(n)) = ((-1)^m G(chi, E))^n with
/// E = E_lambda(1, H). Holds for every chi; no hypothesis exclusion.
inline VerificationRecord verify_hayes(const FieldPtr& field, const Poly& H, int n, const MultChar& chi,
                                       const VerifyOptions& opts = {}) {
    detail::checked_pow_terms(field->cardinality(), n * H.degree(), opts.budget, "hayes");
    auto ext = extend_field(field, n);
    detail::StopWatch watch;
    const Poly one = Poly::one(field);
    Poly H_ext = lift(H, ext);

    auto base = gauss_sum(chi, AdditiveChar(H, one)).value;
    auto lifted = gauss_sum(chi.lifted(ext), AdditiveChar(H_ext, lift(one, ext))).value;
    const int m = H.degree();
    const bool neg = (m % 2) != 0;
    CyclotomicInt lhs = neg ? -lifted : lifted;
    if (opts.negate_lhs) lhs = -lhs;
    CyclotomicInt rhs = (neg ? -base : base).pow(static_cast<unsigned long>(n));

    VerificationRecord rec;
    rec.identity = "hayes";
    detail::fill_common(rec, field, H, n, chi, one);
    rec.m = m;
    rec.m1 = 0;
    rec.N = H.monic().literal();
    rec.phi_H = detail::phi_u64(H);
    rec.phi_N = rec.phi_H;
    rec.phi_n_H = detail::phi_u64(H_ext);
    rec.phi_n_N = rec.phi_n_H;
    rec.lhs = lhs.str();
    rec.rhs = rhs.str();
    rec.verdict = lhs.equals(rhs) ? "pass" : "fail";
    rec.micros = watch.micros();
    return rec;
}

inline std::vector<VerificationRecord> verify_hayes_all(const FieldPtr& field, const Poly& H, int n,
                                                        const std::vector<long>& chi_sel, const VerifyOptions& opts = {}) {
    std::vector<VerificationRecord> out;
    for (const auto& chi : mult_group(H)) {
        if (!chi_sel.empty() && std::find(chi_sel.begin(), chi_sel.end(), chi.index()) == chi_sel.end()) continue;
        out.push_back(verify_hayes(field, H, n, chi, opts));
    }
    return out;
}

/// Prime-power case H = P^k: the phi-ratio drops out, so the comparison is
/// direct, and the integer identity phi_n(N) phi(H)^n = phi_n(H) phi(N)^n must
/// hold whenever H does not divide G. Both checks feed one verdict.
inline VerificationRecord verify_prime_power(const FieldPtr& field, const Poly& P, int k, int n, const MultChar& chi,
                                             const Poly& G, const VerifyOptions& opts = {}) {
    if (!is_irreducible(P)) throw std::invalid_argument("verify_prime_power: P must be irreducible");
    Poly H = Poly::one(field);
    for (int i = 0; i < k; ++i) H = H * P;
    if (chi.basis().modulus() != H) throw std::invalid_argument("verify_prime_power: chi is not a character mod P^k");
    detail::checked_pow_terms(field->cardinality(), n * H.degree(), opts.budget, "prime_power");
    auto ext = extend_field(field, n);
    detail::StopWatch watch;
    auto sides = detail::main_sides(chi, G, n, ext);

    const bool neg = ((sides.m - sides.m1) % 2) != 0;
    CyclotomicInt lhs = neg ? -sides.raw_lifted : sides.raw_lifted;
    if (opts.negate_lhs) lhs = -lhs;
    CyclotomicInt rhs = (neg ? -sides.raw_base : sides.raw_base).pow(static_cast<unsigned long>(n));

    VerificationRecord rec;
    rec.identity = "prime_power";
    detail::fill_common(rec, field, H, n, chi, G);
    rec.m = sides.m;
    rec.m1 = sides.m1;
    rec.N = sides.N.literal();
    rec.phi_H = static_cast<std::uint64_t>(sides.phi_H);
    rec.phi_N = static_cast<std::uint64_t>(sides.phi_N);
    rec.phi_n_H = static_cast<std::uint64_t>(sides.phi_n_H);
    rec.phi_n_N = static_cast<std::uint64_t>(sides.phi_n_N);
    rec.lhs = lhs.str();
    rec.rhs = rhs.str();

    const bool psi_principal = (G % H).is_zero();
    if (chi.is_principal() && psi_principal) {
        rec.verdict = "hypothesis-excluded";
    } else {
        bool ok = lhs.equals(rhs);
        if (!psi_principal) {
            // the phi-ratio identity, as exact integers
            ok = ok && sides.phi_n_N * detail::bigint_pow(sides.phi_H, n) == sides.phi_n_H * detail::bigint_pow(sides.phi_N, n);
        }
        rec.verdict = ok ? "pass" : "fail";
    }
    rec.micros = watch.micros();
    return rec;
}

inline std::vector<VerificationRecord> verify_prime_power_all(const FieldPtr& field, const Poly& P, int k, int n,
                                                              const std::vector<long>& chi_sel,
                                                              const std::vector<Poly>& psi_sel,
                                                              const VerifyOptions& opts = {}) {
    Poly H = Poly::one(field);
    for (int i = 0; i < k; ++i) H = H * P;
    std::vector<VerificationRecord> out;
    for (const auto& chi : mult_group(H)) {
        if (!chi_sel.empty() && std::find(chi_sel.begin(), chi_sel.end(), chi.index()) == chi_sel.end()) continue;
        if (psi_sel.empty()) {
            for_each_residue(H, [&](const Poly& G) { out.push_back(verify_prime_power(field, P, k, n, chi, G, opts)); });
        } else {
            for (const auto& G : psi_sel) out.push_back(verify_prime_power(field, P, k, n, chi, G, opts));
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Supporting-lemma suite for one (field, H, n) instance.
// ---------------------------------------------------------------------------
inline std::vector<VerificationRecord> verify_lemma_suite(const FieldPtr& field, const Poly& H, int n,
                                                          const VerifyOptions& opts = {}) {
    // the shift-invariance check enumerates residues of degree m+1 moduli
    detail::checked_pow_terms(field->cardinality(), n * (H.degree() + 1), opts.budget, "lemmas");
    auto ext = extend_field(field, n);
    const Poly H_ext = lift(H, ext);
    const long p = field->characteristic();
    std::vector<VerificationRecord> out;

    auto make = [&](const std::string& identity, long chi_index, const std::string& lhs, const std::string& rhs,
                    bool ok, std::int64_t micros) {
        VerificationRecord rec;
        rec.identity = identity;
        rec.q = field->cardinality();
        rec.l = field->degree();
        rec.n = n;
        rec.H = H.literal();
        rec.chi_index = chi_index;
        rec.m = H.degree();
        rec.N = H.monic().literal();
        rec.phi_H = detail::phi_u64(H);
        rec.phi_N = rec.phi_H;
        rec.phi_n_H = detail::phi_u64(H_ext);
        rec.phi_n_N = rec.phi_n_H;
        rec.lhs = lhs;
        rec.rhs = rhs;
        rec.verdict = ok ? "pass" : "fail";
        rec.micros = micros;
        out.push_back(std::move(rec));
    };

    {  // the q^m additive characters are pairwise distinct as functions
        detail::StopWatch watch;
        auto group = additive_group(H);
        auto residue_list = residues(H);
        long separated = 0, pairs = 0;
        for (size_t i = 0; i < group.size(); ++i)
            for (size_t j = i + 1; j < group.size(); ++j) {
                ++pairs;
                for (const auto& A : residue_list)
                    if (group[i].eval_exponent(A) != group[j].eval_exponent(A)) {
                        ++separated;
                        break;
                    }
            }
        make("additive-chars-distinct", -1, "separated=" + std::to_string(separated) + "/" + std::to_string(pairs),
             "separated=" + std::to_string(pairs) + "/" + std::to_string(pairs), separated == pairs, watch.micros());
    }

    {  // shift invariance E(GA, HA) = E(G, H), base ring and lifted ring
        detail::StopWatch watch;
        std::vector<Poly> shifts{Poly::one(field)};
        for (const auto& A : detail::all_monic_of_degree(field, 1)) shifts.push_back(A);
        long checked = 0, equal = 0;
        for_each_residue(H, [&](const Poly& G) {
            for (const auto& A : shifts) {
                AdditiveChar coarse(H, G), fine(H * A, G * A);
                bool same = true;
                for_each_residue(H * A, [&](const Poly& B) {
                    if (same && fine.eval_exponent(B) != coarse.eval_exponent(B)) same = false;
                });
                AdditiveChar coarse_n = coarse.lifted(ext), fine_n = fine.lifted(ext);
                for_each_residue(lift(H * A, ext), [&](const Poly& B) {
                    if (same && fine_n.eval_exponent(B) != coarse_n.eval_exponent(B)) same = false;
                });
                ++checked;
                if (same) ++equal;
            }
        });
        make("shift-invariance", -1, "equal=" + std::to_string(equal) + "/" + std::to_string(checked),
             "equal=" + std::to_string(checked) + "/" + std::to_string(checked), equal == checked, watch.micros());
    }

    {  // orthogonality: sum over G of psi_G(A) is |H| when H | A, else 0
        detail::StopWatch watch;
        auto group = additive_group(H);
        long big = 1;
        for (int i = 0; i < H.degree(); ++i) big *= field->cardinality();
        bool ok = true;
        for_each_residue(H * H, [&](const Poly& A) {
            if (!ok) return;
            CyclotomicInt sum(p);
            for (const auto& psi : group) sum = sum + psi(A);
            if ((A % H).is_zero())
                ok = sum.equals(CyclotomicInt::from_integer(p, big));
            else
                ok = sum.is_zero();
        });
        make("additive-orthogonality", -1, ok ? "orthogonal" : "violated", "orthogonal", ok, watch.micros());
    }

    auto chars = mult_group(H);

    for (const auto& chi : chars) {  // |G(chi, psi_1)|^2 = q^m for primitive chi
        if (!is_primitive(chi)) continue;
        detail::StopWatch watch;
        long big = 1;
        for (int i = 0; i < H.degree(); ++i) big *= field->cardinality();
        auto v = gauss_sum(chi, AdditiveChar(H, Poly::one(field))).value;
        auto prod = v * v.conj();
        make("primitive-gauss-modulus", chi.index(), prod.str(), CyclotomicInt::from_integer(prod.order(), big).str(),
             prod.equals(CyclotomicInt::from_integer(prod.order(), big)), watch.micros());
    }

    for (const auto& chi : chars) {  // separability with conjugate factor for coprime G
        detail::StopWatch watch;
        long checked = 0, good = 0;
        for_each_residue(H, [&](const Poly& G) {
            if (G.is_zero() || !Poly::gcd(G, H).is_one()) return;
            ++checked;
            if (is_separable(chi, G)) ++good;
        });
        make("coprime-separability", chi.index(), "separable=" + std::to_string(good) + "/" + std::to_string(checked),
             "separable=" + std::to_string(checked) + "/" + std::to_string(checked), good == checked, watch.micros());
    }

    for (const auto& chi : chars) {  // conductor reduction with exact integer scaling
        auto C = conductor(chi).conductor;
        if (C == H.monic()) continue;  // primitive: nothing to reduce
        detail::StopWatch watch;
        if (C.is_one()) {
            auto v = gauss_sum(chi, AdditiveChar(H, H)).value;
            auto expect = CyclotomicInt::from_integer(v.order(), static_cast<long>(detail::phi_u64(H)));
            make("conductor-reduction", chi.index(), v.str(), expect.str(), v.equals(expect), watch.micros());
            continue;
        }
        auto delta = restrict_char(chi, C);
        auto lhs = gauss_sum(chi, AdditiveChar(H, H / C)).value;
        auto rhs_sum = gauss_sum(delta, AdditiveChar(C, Poly::one(field))).value;
        BigInt phiH = euler_phi(H), phiC = euler_phi(C);
        bool divides = phiH % phiC == 0;
        const long M = std::lcm(lhs.order(), rhs_sum.order());
        auto rhs = rhs_sum.embedded(M).scaled(phiH / phiC);
        make("conductor-reduction", chi.index(), lhs.embedded(M).str(), rhs.str(),
             divides && lhs.embedded(M).equals(rhs), watch.micros());
    }

    {  // norm congruence: unit A = 1 (mod N) over the extension ring
        detail::StopWatch watch;
        long checked = 0, good = 0;
        for (const auto& N : monic_divisors(H)) {
            if (N.is_constant()) continue;
            Poly N_ext = lift(N, ext);
            const Poly one_ext = Poly::one(ext);
            for_each_residue(H_ext, [&](const Poly& A) {
                if (!((A - one_ext) % N_ext).is_zero()) return;
                if (A.is_zero() || !Poly::gcd(A, H_ext).is_one()) return;
                ++checked;
                if (((poly_norm(A) - Poly::one(field)) % N).is_zero()) ++good;
            });
        }
        make("norm-congruence", -1, "congruent=" + std::to_string(good) + "/" + std::to_string(checked),
             "congruent=" + std::to_string(checked) + "/" + std::to_string(checked), good == checked, watch.micros());
    }

    for (const auto& chi : chars) {  // induced moduli survive the lift
        detail::StopWatch watch;
        auto lifted = chi.lifted(ext);
        long checked = 0, good = 0;
        for (const auto& N : monic_divisors(H)) {
            if (!is_induced_modulus(N, chi)) continue;
            ++checked;
            if (is_induced_modulus(lift(N, ext), lifted)) ++good;
        }
        make("induced-modulus-lift", chi.index(), "lifted=" + std::to_string(good) + "/" + std::to_string(checked),
             "lifted=" + std::to_string(checked) + "/" + std::to_string(checked), good == checked, watch.micros());
    }

    for (const auto& chi : chars) {  // the conductor is stable under lifting
        detail::StopWatch watch;
        auto c_base = conductor(chi).conductor;
        auto c_ext = conductor(chi.lifted(ext)).conductor;
        make("conductor-stability", chi.index(), c_ext.literal(), lift(c_base, ext).literal(),
             c_ext == lift(c_base, ext), watch.micros());
    }

    for (const auto& chi : chars) {  // separability agrees between base and lift
        detail::StopWatch watch;
        auto lifted = chi.lifted(ext);
        long checked = 0, agree = 0;
        for_each_residue(H, [&](const Poly& G) {
            ++checked;
            if (is_separable(chi, G) == is_separable(lifted, lift(G, ext))) ++agree;
        });
        make("separability-lift", chi.index(), "agree=" + std::to_string(agree) + "/" + std::to_string(checked),
             "agree=" + std::to_string(checked) + "/" + std::to_string(checked), agree == checked, watch.micros());
    }

    for (const auto& chi : chars) {  // nonvanishing forces the induced modulus on both levels
        detail::StopWatch watch;
        auto lifted = chi.lifted(ext);
        long checked = 0, good = 0;
        for_each_residue(H, [&](const Poly& G) {
            if (!G.is_zero() && Poly::gcd(G, H).is_one()) return;
            auto v_base = gauss_sum(chi, AdditiveChar(H, G)).value;
            auto v_ext = gauss_sum(lifted, AdditiveChar(H_ext, lift(G, ext))).value;
            if (v_base.is_zero() && v_ext.is_zero()) return;
            ++checked;
            Poly gcdGH = G.is_zero() ? H.monic() : Poly::gcd(G, H);
            Poly N = (H / gcdGH).monic();
            if (is_induced_modulus(N, chi) && is_induced_modulus(lift(N, ext), lifted)) ++good;
        });
        make("nonvanishing-induced", chi.index(), "induced=" + std::to_string(good) + "/" + std::to_string(checked),
             "induced=" + std::to_string(checked) + "/" + std::to_string(checked), good == checked, watch.micros());
    }

    {  // each irreducible factor of H splits into gcd(h, n) distinct factors
        detail::StopWatch watch;
        long checked = 0, good = 0;
        for (const auto& [P, k] : factor(H).factors) {
            (void)k;
            ++checked;
            auto fac = factor(lift(P, ext));
            bool square_free = true;
            for (const auto& [pp, mult] : fac.factors) {
                (void)pp;
                if (mult != 1) square_free = false;
            }
            if (square_free && fac.factors.size() == static_cast<size_t>(std::gcd(P.degree(), n))) ++good;
        }
        make("irreducible-splitting", -1, "split=" + std::to_string(good) + "/" + std::to_string(checked),
             "split=" + std::to_string(checked) + "/" + std::to_string(checked), good == checked, watch.micros());
    }

    (void)opts;
    return out;
}

// ---------------------------------------------------------------------------
// Sweep configuration, report, serialization.
// ---------------------------------------------------------------------------

struct SweepConfig {
    std::vector<long> characteristics;
    std::vector<int> base_degrees{1};
    std::vector<int> ext_degrees;
    std::vector<std::string> moduli;  // explicit literals; empty means "all monic up to max_modulus_degree"
    int max_modulus_degree = 0;
    std::vector<long> chi_indices;    // empty means all
    std::vector<std::string> psi_g;   // literals; empty means all residues
    std::vector<std::string> identities;
    std::string format = "json";
    int jobs = 1;
    long budget = 1'000'000;
    bool selftest_negate_lhs = false;

    static SweepConfig from_json(const Json& j) {
        SweepConfig cfg;
        if (!j.contains("characteristics")) throw ConfigError("sweep config: missing 'characteristics'");
        cfg.characteristics = j.at("characteristics").get<std::vector<long>>();
        if (j.contains("base_degrees")) cfg.base_degrees = j.at("base_degrees").get<std::vector<int>>();
        if (j.contains("ext_degrees")) cfg.ext_degrees = j.at("ext_degrees").get<std::vector<int>>();
        if (j.contains("moduli")) cfg.moduli = j.at("moduli").get<std::vector<std::string>>();
        if (j.contains("max_modulus_degree")) cfg.max_modulus_degree = j.at("max_modulus_degree").get<int>();
        if (j.contains("chi")) {
            if (j.at("chi").is_string()) {
                if (j.at("chi").get<std::string>() != "all") throw ConfigError("sweep config: 'chi' must be \"all\" or an index array");
            } else {
                cfg.chi_indices = j.at("chi").get<std::vector<long>>();
            }
        }
        if (j.contains("psi_g")) {
            if (j.at("psi_g").is_string()) {
                if (j.at("psi_g").get<std::string>() != "all") throw ConfigError("sweep config: 'psi_g' must be \"all\" or a literal array");
            } else {
                cfg.psi_g = j.at("psi_g").get<std::vector<std::string>>();
            }
        }
        if (!j.contains("identities")) throw ConfigError("sweep config: missing 'identities'");
        cfg.identities = j.at("identities").get<std::vector<std::string>>();
        if (j.contains("format")) cfg.format = j.at("format").get<std::string>();
        if (j.contains("jobs")) cfg.jobs = j.at("jobs").get<int>();
        if (j.contains("budget")) cfg.budget = j.at("budget").get<long>();
        return cfg;
    }

    Json to_json() const {
        Json j;
        j["characteristics"] = characteristics;
        j["base_degrees"] = base_degrees;
        j["ext_degrees"] = ext_degrees;
        if (!moduli.empty()) j["moduli"] = moduli;
        if (max_modulus_degree > 0) j["max_modulus_degree"] = max_modulus_degree;
        if (chi_indices.empty())
            j["chi"] = "all";
        else
            j["chi"] = chi_indices;
        if (psi_g.empty())
            j["psi_g"] = "all";
        else
            j["psi_g"] = psi_g;
        j["identities"] = identities;
        j["format"] = format;
        j["jobs"] = jobs;
        j["budget"] = budget;
        return j;
    }
};

struct Report {
    Json config_echo;
    std::vector<VerificationRecord> records;

    std::map<std::string, std::map<std::string, long>> totals() const {
        std::map<std::string, std::map<std::string, long>> t;
        for (const auto& r : records) ++t[r.identity][r.verdict];
        return t;
    }
    bool all_pass() const {
        for (const auto& r : records)
            if (r.verdict == "fail") return false;
        return true;
    }
};

inline int exit_code(const Report& report) { return report.all_pass() ? 0 : 1; }

namespace detail {

inline void sort_records(std::vector<VerificationRecord>& records) {
    std::sort(records.begin(), records.end(), [](const VerificationRecord& a, const VerificationRecord& b) {
        auto key = [](const VerificationRecord& r) {
            return std::tie(r.identity, r.q, r.l, r.n, r.H, r.chi_index, r.psi_G);
        };
        return key(a) < key(b);
    });
}

}  // namespace detail

/// Run every selected identity over the configured parameter box. All budget
/// checks happen before any verification work; violations throw ConfigError.
/// Record order is deterministic (sorted), independent of the job count.
inline Report run_sweep(const SweepConfig& cfg) {
    for (const auto& id : cfg.identities) {
        if (id != "classical" && id != "hayes" && id != "main" && id != "prime_power" && id != "lemmas")
            throw ConfigError("sweep config: unknown identity '" + id + "'");
    }
    if (cfg.format != "json" && cfg.format != "csv" && cfg.format != "text")
        throw ConfigError("sweep config: unknown format '" + cfg.format + "'");
    if (cfg.jobs < 1) throw ConfigError("sweep config: jobs must be >= 1");
    if (cfg.budget < 1) throw ConfigError("sweep config: budget must be >= 1");
    if (cfg.ext_degrees.empty()) throw ConfigError("sweep config: missing 'ext_degrees'");

    VerifyOptions opts;
    opts.budget = cfg.budget;
    opts.negate_lhs = cfg.selftest_negate_lhs;

    const bool wants_modular = std::find_if(cfg.identities.begin(), cfg.identities.end(), [](const std::string& id) {
                                   return id != "classical";
                               }) != cfg.identities.end();

    // resolve the parameter box up front so every budget violation is caught
    // before any Gauss sum is computed
    struct Task {
        std::function<std::vector<VerificationRecord>()> run;
    };
    std::vector<Task> tasks;

    for (long p : cfg.characteristics) {
        for (int l : cfg.base_degrees) {
            auto field = build_field(p, l);
            const long q = field->cardinality();

            std::vector<Poly> moduli;
            if (wants_modular) {
                if (!cfg.moduli.empty()) {
                    for (const auto& lit : cfg.moduli) {
                        Poly H = Poly::parse(field, lit);
                        if (H.is_zero() || H.is_constant()) throw ConfigError("sweep config: modulus '" + lit + "' must have degree >= 1");
                        moduli.push_back(H);
                    }
                } else if (cfg.max_modulus_degree > 0) {
                    for (int d = 1; d <= cfg.max_modulus_degree; ++d)
                        for (const auto& H : detail::all_monic_of_degree(field, d)) moduli.push_back(H);
                } else {
                    throw ConfigError("sweep config: need 'moduli' or 'max_modulus_degree' for modular identities");
                }
            }

            for (int n : cfg.ext_degrees) {
                for (const auto& id : cfg.identities) {
                    if (id == "classical") {
                        detail::checked_pow_terms(q, n, cfg.budget, "classical");
                        tasks.push_back({[=]() { return verify_classical(p, l, n, opts); }});
                        continue;
                    }
                    for (const auto& H : moduli) {
                        detail::checked_pow_terms(q, id == "lemmas" ? n * (H.degree() + 1) : n * H.degree(), cfg.budget,
                                                  id.c_str());
                        std::vector<Poly> psi_sel;
                        for (const auto& lit : cfg.psi_g) psi_sel.push_back(Poly::parse(field, lit));
                        if (id == "main") {
                            tasks.push_back({[=]() { return verify_main_all(field, H, n, cfg.chi_indices, psi_sel, opts); }});
                        } else if (id == "hayes") {
                            tasks.push_back({[=]() { return verify_hayes_all(field, H, n, cfg.chi_indices, opts); }});
                        } else if (id == "prime_power") {
                            auto fac = factor(H);
                            if (fac.factors.size() != 1) continue;  // not a prime power: out of this identity's scope
                            Poly P = fac.factors[0].first;
                            int k = fac.factors[0].second;
                            tasks.push_back({[=]() { return verify_prime_power_all(field, P, k, n, cfg.chi_indices, psi_sel, opts); }});
                        } else if (id == "lemmas") {
                            tasks.push_back({[=]() { return verify_lemma_suite(field, H, n, opts); }});
                        }
                    }
                }
            }
        }
    }

    std::vector<std::vector<VerificationRecord>> results(tasks.size());
    if (cfg.jobs <= 1) {
        for (size_t i = 0; i < tasks.size(); ++i) results[i] = tasks[i].run();
    } else {
        std::atomic<size_t> next{0};
        auto worker = [&]() {
            while (true) {
                size_t i = next.fetch_add(1);
                if (i >= tasks.size()) return;
                results[i] = tasks[i].run();
            }
        };
        std::vector<std::thread> pool;
        const int width = std::min<int>(cfg.jobs, static_cast<int>(tasks.size()));
        pool.reserve(static_cast<size_t>(width));
        for (int t = 0; t < width; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    Report report;
    report.config_echo = cfg.to_json();
    for (auto& chunk : results)
        for (auto& rec : chunk) report.records.push_back(std::move(rec));
    detail::sort_records(report.records);
    return report;
}

// ---------------------------------------------------------------------------
// Emission.
// ---------------------------------------------------------------------------

inline Json record_to_json(const VerificationRecord& r) {
    Json j;
    j["identity"] = r.identity;
    j["q"] = r.q;
    j["l"] = r.l;
    j["n"] = r.n;
    j["H"] = r.H;
    j["chi_index"] = r.chi_index;
    j["psi_G"] = r.psi_G;
    j["m"] = r.m;
    j["m1"] = r.m1;
    j["N"] = r.N;
    j["phi_H"] = r.phi_H;
    j["phi_N"] = r.phi_N;
    j["phi_n_H"] = r.phi_n_H;
    j["phi_n_N"] = r.phi_n_N;
    j["lhs"] = r.lhs;
    j["rhs"] = r.rhs;
    j["verdict"] = r.verdict;
    j["micros"] = r.micros;
    return j;
}

inline Json report_to_json(const Report& report) {
    Json j;
    j["config"] = report.config_echo;
    std::time_t now = std::time(nullptr);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    j["generated_at"] = buf;

    // unit-group basis orders per modulus, so chi_index values are auditable
    Json bases = Json::object();
    for (const auto& r : report.records) {
        if (r.H.empty() || r.chi_index < 0) continue;
        std::string key = std::to_string(r.q) + ":" + r.H;
        if (bases.contains(key)) continue;
        long p = r.q;
        for (long cand = 2; cand * cand <= r.q; ++cand) {
            if (r.q % cand == 0) {
                p = cand;
                break;
            }
        }
        int l = 0;
        for (long v = r.q; v > 1; v /= p) ++l;
        auto basis = UnitBasis::make(Poly::parse(build_field(p, l), r.H));
        bases[key] = basis->orders();
    }
    j["basis_orders"] = std::move(bases);
    Json recs = Json::array();
    for (const auto& r : report.records) recs.push_back(record_to_json(r));
    j["records"] = std::move(recs);
    Json totals;
    for (const auto& [identity, counts] : report.totals()) {
        Json c;
        for (const auto& [verdict, count] : counts) c[verdict] = count;
        totals[identity] = std::move(c);
    }
    j["totals"] = std::move(totals);
    j["overall"] = report.all_pass() ? "pass" : "fail";
    return j;
}

inline std::string emit_json(const Report& report) { return report_to_json(report).dump(2) + "\n"; }

inline std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

inline std::string emit_csv(const Report& report) {
    std::ostringstream os;
    os << "identity,q,l,n,H,chi_index,psi_G,m,m1,N,phi_H,phi_N,phi_n_H,phi_n_N,lhs,rhs,verdict,micros\n";
    for (const auto& r : report.records) {
        os << r.identity << ',' << r.q << ',' << r.l << ',' << r.n << ',' << csv_quote(r.H) << ',' << r.chi_index << ','
           << csv_quote(r.psi_G) << ',' << r.m << ',' << r.m1 << ',' << csv_quote(r.N) << ',' << r.phi_H << ','
           << r.phi_N << ',' << r.phi_n_H << ',' << r.phi_n_N << ',' << csv_quote(r.lhs) << ',' << csv_quote(r.rhs)
           << ',' << r.verdict << ',' << r.micros << '\n';
    }
    return os.str();
}

inline std::string emit_text(const Report& report) {
    std::ostringstream os;
    for (const auto& r : report.records) {
        os << '[' << r.verdict << "] " << r.identity << " q=" << r.q << " l=" << r.l << " n=" << r.n;
        if (!r.H.empty()) os << " H=" << r.H;
        if (r.chi_index >= 0) os << " chi=" << r.chi_index;
        if (!r.psi_G.empty()) os << " psiG=" << r.psi_G;
        os << " lhs=" << r.lhs << " rhs=" << r.rhs << " (" << r.micros << "us)\n";
    }
    os << "--\n";
    for (const auto& [identity, counts] : report.totals()) {
        os << identity << ':';
        for (const auto& [verdict, count] : counts) os << ' ' << verdict << '=' << count;
        os << '\n';
    }
    os << "overall: " << (report.all_pass() ? "pass" : "fail") << '\n';
    return os.str();
}

inline std::string emit(const Report& report, const std::string& format) {
    if (format == "json") return emit_json(report);
    if (format == "csv") return emit_csv(report);
    if (format == "text") return emit_text(report);
    throw ConfigError("emit: unknown format '" + format + "'");
}

}  // namespace polygauss

#endif  // POLYGAUSS_VERIFY_HPP
