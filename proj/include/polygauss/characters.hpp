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

#ifndef POLYGAUSS_CHARACTERS_HPP
#define POLYGAUSS_CHARACTERS_HPP

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "polygauss/poly.hpp"

namespace polygauss {

/// t(A) = the coefficient of x^(m-1) in the remainder of A mod H, m = deg(H).
/// Additive in A, constant on residue classes, zero when H | A.
inline FieldElem t_func(const Poly& A, const Poly& H) {
    if (H.is_zero() || H.is_constant()) throw std::invalid_argument("t_func: modulus must have degree >= 1");
    if (A.field().get() != H.field().get()) throw std::invalid_argument("t_func: mixed rings");
    Poly r = A % H;
    return r.coeff(H.degree() - 1);
}

/// An additive character mod H: the function A -> lambda(t(G*A)) determined by
/// its associated polynomial G (kept reduced mod H). Every additive character
/// mod H arises this way for exactly one G, so identity of characters is
/// identity of associated polynomials. The ring it acts on is the ring of H.
class AdditiveChar {
   public:
    AdditiveChar(const Poly& H, const Poly& G) : H_(H), G_(G % H) {
        if (H.is_zero() || H.is_constant()) throw std::invalid_argument("AdditiveChar: modulus must have degree >= 1");
        if (G.field().get() != H.field().get()) throw std::invalid_argument("AdditiveChar: G and H live in different rings");
    }

    const Poly& modulus() const { return H_; }
    const Poly& assoc() const { return G_; }
    bool is_principal() const { return G_.is_zero(); }
    /// Values are p-th roots of unity.
    long value_order() const { return H_.field()->characteristic(); }

    long eval_exponent(const Poly& A) const {
        if (A.field().get() != H_.field().get()) throw std::invalid_argument("AdditiveChar: argument from a different ring");
        Poly r = (G_ * (A % H_)) % H_;
        return H_.field()->abs_trace(r.coeff_code(H_.degree() - 1));
    }

    CyclotomicInt operator()(const Poly& A) const { return CyclotomicInt::root_of_unity(value_order(), eval_exponent(A)); }

    /// Associated polynomials add: psi_G1 * psi_G2 = psi_{G1+G2}.
    AdditiveChar operator*(const AdditiveChar& rhs) const {
        if (H_ != rhs.H_) throw std::invalid_argument("AdditiveChar: modulus mismatch");
        return AdditiveChar(H_, G_ + rhs.G_);
    }
    /// Conjugate character: psi_{-G}.
    AdditiveChar conj() const { return AdditiveChar(H_, -G_); }

    bool operator==(const AdditiveChar& rhs) const { return H_ == rhs.H_ && G_ == rhs.G_; }

    /// The character mod H on the extension ring with associated polynomial
    /// lift(G); evaluating it agrees with psi(trace(A)).
    AdditiveChar lifted(const FieldPtr& ext) const { return AdditiveChar(lift(H_, ext), lift(G_, ext)); }

   private:
    Poly H_, G_;
};

/// All |H| additive characters mod H over the ring of H, one per residue G,
/// in canonical residue order.
inline std::vector<AdditiveChar> additive_group(const Poly& H) {
    std::vector<AdditiveChar> out;
    for_each_residue(H, [&](const Poly& G) { out.emplace_back(H, G); });
    return out;
}

/// A validated decomposition of the unit group (F[x]/H)^* as a direct product
/// of cyclic groups, with a full discrete-log table built at construction.
/// The basis itself is not canonical; what is guaranteed (and checked here) is
/// that prod(orders) = phi(H), every generator has exactly its stated order,
/// and unit -> exponent vector is a bijection onto prod Z/d_i.
class UnitBasis {
   public:
    static std::shared_ptr<const UnitBasis> make(const Poly& H) {
        if (H.is_zero()) throw std::invalid_argument("UnitBasis: zero modulus");
        static std::mutex mu;
        static std::map<std::pair<const FieldSpec*, std::string>, std::shared_ptr<const UnitBasis>> cache;
        std::lock_guard<std::mutex> lock(mu);
        auto key = std::make_pair(H.field().get(), H.literal());
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
        auto basis = std::shared_ptr<const UnitBasis>(new UnitBasis(H));
        cache.emplace(std::move(key), basis);
        return basis;
    }

    const Poly& modulus() const { return H_; }
    const std::vector<Poly>& generators() const { return gens_; }
    const std::vector<long>& orders() const { return orders_; }
    long unit_count() const { return phi_; }
    /// lcm of the basis orders; all multiplicative character values mod H are
    /// roots of unity of this order.
    long value_order() const { return value_order_; }

    /// Exponent vector of a unit A; nullptr when gcd(A, H) != 1.
    const std::vector<long>* dlog(const Poly& A) const {
        if (A.field().get() != H_.field().get()) throw std::invalid_argument("UnitBasis: argument from a different ring");
        Poly r = A % H_;
        long idx = r.residue_index(deg_m_);
        long serial = serial_of_[static_cast<size_t>(idx)];
        if (serial < 0) return nullptr;
        return &exps_[static_cast<size_t>(serial)];
    }

    /// The unit with the given exponent vector (recomposition).
    Poly compose(const std::vector<long>& exps) const {
        if (exps.size() != gens_.size()) throw std::invalid_argument("UnitBasis: exponent tuple has wrong length");
        if (deg_m_ == 0) return Poly::zero(H_.field());
        Poly acc = Poly::one(H_.field());
        for (size_t i = 0; i < gens_.size(); ++i) acc = mod_mul(acc, detail_pow(gens_[i], exps[i]));
        return acc;
    }

   private:
    explicit UnitBasis(const Poly& H) : H_(H), deg_m_(H.is_constant() ? 0 : H.degree()) {
        build();
    }

    Poly mod_mul(const Poly& a, const Poly& b) const { return (a * b) % H_; }
    Poly detail_pow(Poly base, long e) const {
        Poly acc = Poly::one(H_.field()) % H_;
        while (e > 0) {
            if (e & 1L) acc = mod_mul(acc, base);
            e >>= 1L;
            if (e > 0) base = mod_mul(base, base);
        }
        return acc;
    }

    void build() {
        const FieldPtr& f = H_.field();
        // constant modulus: the trivial one-element group
        if (deg_m_ == 0) {
            phi_ = 1;
            value_order_ = 1;
            serial_of_.assign(1, 0);
            exps_.assign(1, {});
            return;
        }

        std::vector<Poly> unit_list;
        long residue_count = 1;
        for (int i = 0; i < deg_m_; ++i) {
            if (residue_count > (1L << 40)) throw std::domain_error("UnitBasis: residue system too large");
            residue_count *= f->cardinality();
        }
        serial_of_.assign(static_cast<size_t>(residue_count), -1);
        for_each_residue(H_, [&](const Poly& r) {
            if (!r.is_zero() && Poly::gcd(r, H_).is_one()) unit_list.push_back(r);
        });
        phi_ = static_cast<long>(unit_list.size());

        // multiplicative order of each unit, via the factorization of phi
        std::vector<long> prime_factors;
        long rest = phi_;
        for (long d = 2; d * d <= rest; ++d)
            if (rest % d == 0) {
                prime_factors.push_back(d);
                while (rest % d == 0) rest /= d;
            }
        if (rest > 1) prime_factors.push_back(rest);
        const Poly one = Poly::one(f);
        auto order_of = [&](const Poly& u) {
            long ord = phi_;
            for (long r : prime_factors) {
                while (ord % r == 0 && detail_pow(u, ord / r) == one) ord /= r;
            }
            return ord;
        };

        std::map<long, std::vector<long>> generated;  // residue index -> exponent vector
        generated[one.residue_index(deg_m_)] = {};

        while (static_cast<long>(generated.size()) < phi_) {
            // element of maximal order in the quotient by the generated subgroup
            long best_d = 0;
            const Poly* best_u = nullptr;
            for (const auto& u : unit_list) {
                if (generated.count(u.residue_index(deg_m_))) continue;
                long ord = order_of(u);
                long d = 0;
                for (long cand = 1; cand <= ord; ++cand) {
                    if (ord % cand != 0) continue;
                    if (generated.count(detail_pow(u, cand).residue_index(deg_m_))) {
                        d = cand;
                        break;
                    }
                }
                if (d > best_d) {
                    best_d = d;
                    best_u = &u;
                }
            }
            if (!best_u) throw std::logic_error("UnitBasis: basis extraction stalled (construction bug)");

            // adjust u by a d-th root in the generated subgroup so the new
            // generator has order exactly d
            Poly u = *best_u;
            Poly u_d = detail_pow(u, best_d);
            Poly adjusted = Poly::zero(f);
            bool fixed = false;
            if (u_d == one) {
                adjusted = u;
                fixed = true;
            } else {
                for (const auto& entry : generated) {
                    Poly t = residue_from_index(entry.first);
                    if (detail_pow(t, best_d) == u_d) {
                        auto [g, tinv, vv] = Poly::egcd(t, H_);
                        (void)vv;
                        if (!g.is_one()) throw std::logic_error("UnitBasis: non-unit in generated set");
                        adjusted = mod_mul(u, tinv % H_);
                        fixed = true;
                        break;
                    }
                }
            }
            if (!fixed) throw std::logic_error("UnitBasis: no d-th root for the adjustment step (construction bug)");
            if (detail_pow(adjusted, best_d) != one) throw std::logic_error("UnitBasis: adjusted generator has wrong order");

            // extend the generated subgroup by the new cyclic factor
            std::map<long, std::vector<long>> extended;
            Poly power = one;
            for (long j = 0; j < best_d; ++j) {
                for (const auto& [idx, vec] : generated) {
                    Poly elem = mod_mul(residue_from_index(idx), power);
                    auto key = elem.residue_index(deg_m_);
                    auto vec2 = vec;
                    vec2.push_back(j);
                    if (!extended.emplace(key, std::move(vec2)).second)
                        throw std::logic_error("UnitBasis: direct product collision (construction bug)");
                }
                power = mod_mul(power, adjusted);
            }
            generated = std::move(extended);
            gens_.push_back(adjusted);
            orders_.push_back(best_d);
        }

        // pad earlier exponent vectors to the final generator count
        long product = 1;
        for (long d : orders_) product *= d;
        if (product != phi_) throw std::logic_error("UnitBasis: order product does not match phi (construction bug)");
        exps_.resize(static_cast<size_t>(phi_));
        long serial = 0;
        for (auto& [idx, vec] : generated) {
            vec.resize(gens_.size(), 0);
            serial_of_[static_cast<size_t>(idx)] = serial;
            exps_[static_cast<size_t>(serial)] = vec;
            ++serial;
        }

        value_order_ = 1;
        for (long d : orders_) value_order_ = std::lcm(value_order_, d);

        // post-hoc validation: orders exact, dlog recomposition closes
        for (size_t i = 0; i < gens_.size(); ++i) {
            if (order_of(gens_[i]) != orders_[i]) throw std::logic_error("UnitBasis: generator order mismatch");
        }
    }

    Poly residue_from_index(long idx) const {
        const long card = H_.field()->cardinality();
        std::vector<long> codes(static_cast<size_t>(deg_m_));
        for (int i = 0; i < deg_m_; ++i) {
            codes[static_cast<size_t>(i)] = idx % card;
            idx /= card;
        }
        return Poly(H_.field(), std::move(codes));
    }

    Poly H_;
    int deg_m_ = 0;
    long phi_ = 0;
    long value_order_ = 1;
    std::vector<Poly> gens_;
    std::vector<long> orders_;
    std::vector<long> serial_of_;          // residue index -> serial (or -1)
    std::vector<std::vector<long>> exps_;  // serial -> exponent vector
};

inline std::shared_ptr<const UnitBasis> unit_basis(const Poly& H) { return UnitBasis::make(H); }

/// A multiplicative character mod H: an exponent tuple (e_1..e_r) against the
/// unit-group basis, with chi(A) = prod zeta_{d_i}^{e_i * dlog_i(A)} on units
/// and chi(A) = 0 when gcd(A, H) != 1. A lifted character chi^(n) keeps the
/// same tuple but accepts arguments from F_{q^n}[x], evaluating through the
/// polynomial norm: chi^(n)(A) = chi(N(A)).
class MultChar {
   public:
    MultChar(std::shared_ptr<const UnitBasis> basis, std::vector<long> exps)
        : basis_(std::move(basis)), exps_(std::move(exps)), ring_(basis_->modulus().field()) {
        if (exps_.size() != basis_->orders().size()) throw std::invalid_argument("MultChar: exponent tuple has wrong length");
        for (size_t i = 0; i < exps_.size(); ++i)
            if (exps_[i] < 0 || exps_[i] >= basis_->orders()[i]) throw std::invalid_argument("MultChar: exponent out of range");
    }

    static MultChar principal(const Poly& H) {
        auto basis = UnitBasis::make(H);
        return MultChar(basis, std::vector<long>(basis->orders().size(), 0));
    }

    const UnitBasis& basis() const { return *basis_; }
    const std::shared_ptr<const UnitBasis>& basis_ptr() const { return basis_; }
    /// The coefficient field of accepted arguments (the base ring, or the
    /// extension for a lifted character).
    const FieldPtr& ring() const { return ring_; }
    /// Modulus in the ring the character acts on.
    Poly modulus_in_ring() const {
        const Poly& H = basis_->modulus();
        return ring_.get() == H.field().get() ? H : lift(H, ring_);
    }
    const std::vector<long>& exponents() const { return exps_; }
    bool is_lifted() const { return ring_.get() != basis_->modulus().field().get(); }
    int lift_degree() const { return is_lifted() ? ring_->degree() : 1; }

    bool is_principal() const {
        for (long e : exps_)
            if (e != 0) return false;
        return true;
    }

    /// Values are roots of unity of this order (the basis value order).
    long value_order() const { return basis_->value_order(); }

    /// Lexicographic index among all phi(H) characters; 0 is the principal one.
    long index() const {
        long idx = 0;
        for (size_t i = 0; i < exps_.size(); ++i) idx = idx * basis_->orders()[i] + exps_[i];
        return idx;
    }

    /// Exponent of the value as a power of zeta_{value_order()}; nullopt when
    /// the value is 0.
    std::optional<long> eval_exponent(const Poly& A) const {
        const Poly& H = basis_->modulus();
        if (!is_lifted()) {
            if (A.field().get() != H.field().get()) throw std::invalid_argument("MultChar: argument from a different ring");
            return unit_exponent(A);
        }
        if (A.field().get() != ring_.get()) throw std::invalid_argument("MultChar: argument from a different ring");
        Poly reduced = A % lift(H, ring_);
        return unit_exponent(poly_norm(reduced));
    }

    CyclotomicInt operator()(const Poly& A) const {
        auto e = eval_exponent(A);
        if (!e) return CyclotomicInt(value_order());
        return CyclotomicInt::root_of_unity(value_order(), *e);
    }

    /// Conjugate character: every exponent negated mod its order.
    MultChar conj() const {
        std::vector<long> e = exps_;
        for (size_t i = 0; i < e.size(); ++i) e[i] = (basis_->orders()[i] - e[i]) % basis_->orders()[i];
        MultChar out(basis_, std::move(e));
        out.ring_ = ring_;
        return out;
    }

    MultChar operator*(const MultChar& rhs) const {
        if (basis_.get() != rhs.basis_.get() || ring_.get() != rhs.ring_.get())
            throw std::invalid_argument("MultChar: mismatched characters in product");
        std::vector<long> e = exps_;
        for (size_t i = 0; i < e.size(); ++i) e[i] = (e[i] + rhs.exps_[i]) % basis_->orders()[i];
        MultChar out(basis_, std::move(e));
        out.ring_ = ring_;
        return out;
    }

    /// The character chi^(n) mod H on the extension ring.
    MultChar lifted(const FieldPtr& ext) const {
        if (is_lifted()) throw std::invalid_argument("MultChar: already lifted");
        const FieldPtr& base = basis_->modulus().field();
        if (!ext->is_tower() || ext->base().get() != base.get())
            throw std::invalid_argument("MultChar: lift target must be a tower over the character's ring");
        MultChar out(basis_, exps_);
        out.ring_ = ext;
        return out;
    }

    bool operator==(const MultChar& rhs) const {
        return basis_.get() == rhs.basis_.get() && ring_.get() == rhs.ring_.get() && exps_ == rhs.exps_;
    }

   private:
    std::optional<long> unit_exponent(const Poly& A) const {
        const std::vector<long>* k = basis_->dlog(A);
        if (!k) return std::nullopt;
        const long L = value_order();
        long acc = 0;
        for (size_t i = 0; i < exps_.size(); ++i) {
            long di = basis_->orders()[i];
            acc = (acc + (exps_[i] * (*k)[i]) % di * (L / di)) % L;
        }
        return acc;
    }

    std::shared_ptr<const UnitBasis> basis_;
    std::vector<long> exps_;
    FieldPtr ring_;
};

/// All phi(H) multiplicative characters mod H, exponent tuples in
/// lexicographic order; index 0 is the principal character.
inline std::vector<MultChar> mult_group(const Poly& H) {
    auto basis = UnitBasis::make(H);
    const auto& orders = basis->orders();
    std::vector<MultChar> out;
    out.reserve(static_cast<size_t>(basis->unit_count()));
    std::vector<long> exps(orders.size(), 0);
    while (true) {
        out.emplace_back(basis, exps);
        size_t i = orders.size();
        while (i > 0) {
            --i;
            if (++exps[i] < orders[i]) break;
            exps[i] = 0;
            if (i == 0) return out;
        }
        if (orders.empty()) return out;
    }
}

inline AdditiveChar lift_char(const AdditiveChar& psi, int n) {
    return psi.lifted(extend_field(psi.modulus().field(), n));
}
inline MultChar lift_char(const MultChar& chi, int n) {
    return chi.lifted(extend_field(chi.basis().modulus().field(), n));
}

}  // namespace polygauss

#endif  // POLYGAUSS_CHARACTERS_HPP
