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

#ifndef POLYGAUSS_GAUSS_SUMS_HPP
#define POLYGAUSS_GAUSS_SUMS_HPP

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "polygauss/characters.hpp"

namespace polygauss {

// ---------------------------------------------------------------------------
// Field-level characters and the classical Gauss sum tau(chi, psi).
//
// Multiplicative characters of F_q^* are indexed against the canonically
// smallest generator g: chi_j(g^k) = zeta_{q-1}^{jk}. Additive characters are
// psi_b(a) = lambda(b*a). These are kept separate from the polynomial
// characters mod H; the classical theorem needs only this direct dual.
// ---------------------------------------------------------------------------

class FieldMultChar {
   public:
    FieldMultChar(FieldPtr field, long index) : field_(std::move(field)), index_(index) {
        const long order = field_->cardinality() - 1;
        if (index_ < 0 || (order > 0 && index_ >= order) || (order == 0 && index_ != 0))
            throw std::invalid_argument("FieldMultChar: index out of range");
    }

    const FieldPtr& field() const { return field_; }
    long index() const { return index_; }
    bool is_principal() const { return index_ == 0; }
    long value_order() const { return std::max(field_->cardinality() - 1, 1L); }

    std::optional<long> eval_exponent(const FieldElem& a) const {
        if (a.field().get() != field_.get()) throw std::invalid_argument("FieldMultChar: wrong field");
        if (a.is_zero()) return std::nullopt;
        const long order = value_order();
        return (index_ * field_->dlog(a.code())) % order;
    }

    CyclotomicInt operator()(const FieldElem& a) const {
        auto e = eval_exponent(a);
        if (!e) return CyclotomicInt(value_order());
        return CyclotomicInt::root_of_unity(value_order(), *e);
    }

   private:
    FieldPtr field_;
    long index_;
};

class FieldAddChar {
   public:
    FieldAddChar(FieldPtr field, long shift_code) : field_(std::move(field)), shift_(shift_code) {
        if (shift_ < 0 || shift_ >= field_->cardinality()) throw std::invalid_argument("FieldAddChar: shift out of range");
    }

    const FieldPtr& field() const { return field_; }
    long shift_code() const { return shift_; }
    bool is_principal() const { return shift_ == 0; }
    long value_order() const { return field_->characteristic(); }

    long eval_exponent(const FieldElem& a) const {
        if (a.field().get() != field_.get()) throw std::invalid_argument("FieldAddChar: wrong field");
        return field_->abs_trace(field_->mul_code(shift_, a.code()));
    }

    CyclotomicInt operator()(const FieldElem& a) const { return CyclotomicInt::root_of_unity(value_order(), eval_exponent(a)); }

   private:
    FieldPtr field_;
    long shift_;
};

/// tau(chi, psi) = sum over a in F_q^* of chi(a) psi(a), exactly in Z[zeta_M],
/// M = lcm(p, q-1).
inline CyclotomicInt tau(const FieldMultChar& chi, const FieldAddChar& psi) {
    if (chi.field().get() != psi.field().get()) throw std::invalid_argument("tau: characters over different fields");
    const FieldPtr& f = chi.field();
    const long M = std::lcm(chi.value_order(), psi.value_order());
    const long mult_stride = M / chi.value_order();
    const long add_stride = M / psi.value_order();
    std::vector<BigInt> coeffs(static_cast<size_t>(M));
    for (long a = 1; a < f->cardinality(); ++a) {
        auto e = chi.eval_exponent(f->element(a));
        long k = (*e * mult_stride + psi.eval_exponent(f->element(a)) * add_stride) % M;
        coeffs[static_cast<size_t>(k)] += 1;
    }
    return CyclotomicInt(M, std::move(coeffs));
}

/// tau(chi^(n), psi^(n)) over an extension, the lifts evaluated through the
/// norm and the trace.
inline CyclotomicInt tau_lifted(const FieldMultChar& chi, const FieldAddChar& psi, const FieldPtr& ext) {
    if (chi.field().get() != psi.field().get()) throw std::invalid_argument("tau_lifted: characters over different fields");
    if (!ext->is_tower() || ext->base().get() != chi.field().get())
        throw std::invalid_argument("tau_lifted: extension must be a tower over the characters' field");
    const FieldPtr& f = chi.field();
    const long M = std::lcm(chi.value_order(), psi.value_order());
    const long mult_stride = M / chi.value_order();
    const long add_stride = M / psi.value_order();
    std::vector<BigInt> coeffs(static_cast<size_t>(M));
    for (long a = 1; a < ext->cardinality(); ++a) {
        auto e = chi.eval_exponent(f->element(ext->norm_code(a)));
        if (!e) continue;  // norm of a nonzero element is nonzero; kept for symmetry
        long k = (*e * mult_stride + psi.eval_exponent(f->element(ext->trace_code(a))) * add_stride) % M;
        coeffs[static_cast<size_t>(k)] += 1;
    }
    return CyclotomicInt(M, std::move(coeffs));
}

// ---------------------------------------------------------------------------
// Polynomial Gauss sums mod H.
// ---------------------------------------------------------------------------

struct GaussSumResult {
    CyclotomicInt value;
    Poly modulus;      // in the ring summed over
    long chi_index;    // lexicographic index of chi
    Poly psi_assoc;    // associated polynomial of psi, in the same ring
    FieldPtr ring;     // coefficient field of the residue system
    long term_count;   // |H| in that ring
};

/// G(chi, psi) = sum of chi(D) psi(D) over a complete residue system mod H in
/// the tagged ring, accumulated exactly in Z[zeta_M], M = lcm(p, value order
/// of chi). Deterministic: residues are visited in canonical order.
inline GaussSumResult gauss_sum(const MultChar& chi, const AdditiveChar& psi) {
    const Poly H = chi.modulus_in_ring();
    if (H != psi.modulus()) throw std::invalid_argument("gauss_sum: chi and psi have different moduli or rings");
    const long M = std::lcm(psi.value_order(), chi.value_order());
    const long mult_stride = M / chi.value_order();
    const long add_stride = M / psi.value_order();
    std::vector<BigInt> coeffs(static_cast<size_t>(M));
    long terms = 0;
    for_each_residue(H, [&](const Poly& D) {
        ++terms;
        auto e = chi.eval_exponent(D);
        if (!e) return;
        long k = (*e * mult_stride + psi.eval_exponent(D) * add_stride) % M;
        coeffs[static_cast<size_t>(k)] += 1;
    });
    return GaussSumResult{CyclotomicInt(M, std::move(coeffs)), H, chi.index(), psi.assoc(), H.field(), terms};
}

/// G(chi, psi_G) is separable when it equals conj(chi)(G) * G(chi, psi_1).
inline bool is_separable(const MultChar& chi, const Poly& G) {
    const Poly H = chi.modulus_in_ring();
    if (G.field().get() != H.field().get()) throw std::invalid_argument("is_separable: G from a different ring");
    auto lhs = gauss_sum(chi, AdditiveChar(H, G)).value;
    auto base = gauss_sum(chi, AdditiveChar(H, Poly::one(H.field()))).value;
    auto scale = chi.conj()(G);
    return lhs.equals(scale.embedded(lhs.order()) * base);
}

/// All monic divisors of H, sorted by degree then canonical order. Includes 1
/// and the monic normalization of H.
inline std::vector<Poly> monic_divisors(const Poly& H) {
    if (H.is_zero()) throw std::invalid_argument("monic_divisors: zero polynomial");
    auto fac = factor(H);
    std::vector<Poly> divs{Poly::one(H.field())};
    for (const auto& [p, k] : fac.factors) {
        std::vector<Poly> next;
        next.reserve(divs.size() * static_cast<size_t>(k + 1));
        for (const auto& d : divs) {
            Poly acc = d;
            next.push_back(acc);
            for (int i = 1; i <= k; ++i) {
                acc = acc * p;
                next.push_back(acc);
            }
        }
        divs = std::move(next);
    }
    std::sort(divs.begin(), divs.end(), [](const Poly& a, const Poly& b) {
        if (a.is_constant() != b.is_constant()) return a.is_constant();
        return a < b;
    });
    return divs;
}

/// N (monic, dividing H in chi's ring) is an induced modulus when chi(A) = 1
/// for every unit A mod H with A = 1 (mod N); checked by exhaustive
/// enumeration of the residue system.
inline bool is_induced_modulus(const Poly& N, const MultChar& chi) {
    const Poly H = chi.modulus_in_ring();
    if (N.field().get() != H.field().get()) throw std::invalid_argument("is_induced_modulus: N from a different ring");
    if (N.is_zero() || !N.is_monic()) throw std::domain_error("is_induced_modulus: N must be monic");
    if (!(H % N).is_zero()) throw std::domain_error("is_induced_modulus: N does not divide H");
    const Poly one = Poly::one(H.field());
    bool induced = true;
    for_each_residue(H, [&](const Poly& A) {
        if (!induced) return;
        if (!((A - one) % N).is_zero()) return;
        auto e = chi.eval_exponent(A);
        if (!e) return;  // not a unit mod H
        if (*e != 0) induced = false;
    });
    return induced;
}

struct ConductorResult {
    Poly conductor;
    std::vector<Poly> induced_moduli;  // every induced modulus among the monic divisors of H
};

/// The least-degree induced modulus of chi. Enumerates the monic divisors of H
/// (the conductor divides H since H is induced), then re-checks that the
/// minimum divides every induced modulus found, failing loudly otherwise.
inline ConductorResult conductor(const MultChar& chi) {
    const Poly H = chi.modulus_in_ring();
    ConductorResult out{Poly::one(H.field()), {}};
    for (const auto& N : monic_divisors(H)) {
        if (is_induced_modulus(N, chi)) out.induced_moduli.push_back(N);
    }
    if (out.induced_moduli.empty()) throw std::logic_error("conductor: H itself must be an induced modulus");
    out.conductor = out.induced_moduli.front();  // sorted by degree, then canonical order
    for (const auto& N : out.induced_moduli) {
        if (!(N % out.conductor).is_zero())
            throw std::logic_error("conductor: minimal induced modulus fails to divide another induced modulus");
    }
    return out;
}

inline bool is_primitive(const MultChar& chi) {
    const Poly H = chi.modulus_in_ring();
    return conductor(chi).conductor == H.monic();
}

/// First B = A + R*N in canonical order with gcd(B, H) = 1. The search widens
/// its degree bound if needed; CRT guarantees a representative exists.
inline Poly coprime_representative(const Poly& A, const Poly& N, const Poly& H) {
    int bound = 1;
    if (!N.is_constant()) bound = H.degree() - N.degree() + 1;
    for (; bound <= H.degree() + 2; ++bound) {
        Poly found = Poly::zero(H.field());
        bool ok = false;
        for_each_residue(Poly::monomial(H.field(), bound), [&](const Poly& R) {
            if (ok) return;
            Poly B = A + R * N;
            if (B.is_zero()) return;
            if (Poly::gcd(B, H).is_one()) {
                found = B;
                ok = true;
            }
        });
        if (ok) return found;
    }
    throw std::logic_error("coprime_representative: search exhausted (CRT violation?)");
}

/// The delta of chi = chi_0 * delta: the character mod N that chi factors
/// through. Defined on units mod N by delta(A) = chi(B) with B a coprime-to-H
/// representative of A; requires N to be an induced modulus of chi.
inline MultChar restrict_char(const MultChar& chi, const Poly& N) {
    if (chi.is_lifted()) throw std::invalid_argument("restrict_char: restriction applies to base-ring characters");
    const Poly& H = chi.basis().modulus();
    if (N.field().get() != H.field().get()) throw std::invalid_argument("restrict_char: N from a different ring");
    if (N.is_zero() || !N.is_monic()) throw std::domain_error("restrict_char: N must be monic");
    if (!(H % N).is_zero()) throw std::domain_error("restrict_char: N does not divide H");
    if (!is_induced_modulus(N, chi)) throw std::domain_error("restrict_char: N is not an induced modulus of chi");
    if (N == H.monic() && H.is_monic()) return chi;

    auto basis = UnitBasis::make(N);
    const long L = chi.value_order();
    std::vector<long> exps;
    exps.reserve(basis->orders().size());
    for (size_t i = 0; i < basis->generators().size(); ++i) {
        const Poly& g = basis->generators()[i];
        const long d = basis->orders()[i];
        Poly B = coprime_representative(g, N, H);
        auto u = chi.eval_exponent(B);
        if (!u) throw std::logic_error("restrict_char: representative is not a unit (search bug)");
        if ((*u * d) % L != 0) throw std::logic_error("restrict_char: chi value is not a d-th root of unity");
        exps.push_back((*u * d / L) % d);
    }
    MultChar delta(basis, std::move(exps));

    // chi = chi_0 * delta on a full residue system mod H
    const long LL = std::lcm(L, delta.value_order());
    bool consistent = true;
    for_each_residue(H, [&](const Poly& A) {
        if (!consistent) return;
        auto cu = chi.eval_exponent(A);
        if (!cu) return;  // chi_0(A) = 0 makes the product 0 too
        auto du = delta.eval_exponent(A);
        if (!du) {
            consistent = false;  // unit mod H must be a unit mod N | H
            return;
        }
        if ((*cu * (LL / L)) % LL != (*du * (LL / delta.value_order())) % LL) consistent = false;
    });
    if (!consistent) throw std::logic_error("restrict_char: decomposition chi = chi_0 * delta failed its post-check");
    return delta;
}

}  // namespace polygauss

#endif  // POLYGAUSS_GAUSS_SUMS_HPP
