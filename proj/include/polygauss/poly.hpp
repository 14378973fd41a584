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

#ifndef POLYGAUSS_POLY_HPP
#define POLYGAUSS_POLY_HPP

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "polygauss/finite_field.hpp"

namespace polygauss {

/// A polynomial over a FieldSpec, stored as ascending coefficient codes with
/// no trailing zeros (the zero polynomial has an empty vector). The degree of
/// the zero polynomial is deliberately not an integer: degree() throws, so a
/// forgotten zero check can never leak a bogus -1 into degree arithmetic.
class Poly {
   public:
    Poly() = default;
    explicit Poly(FieldPtr field) : field_(std::move(field)) {}
    Poly(FieldPtr field, std::vector<long> codes) : field_(std::move(field)), coeffs_(std::move(codes)) {
        for (long c : coeffs_)
            if (c < 0 || c >= field_->cardinality()) throw std::invalid_argument("Poly: coefficient code out of range");
        normalize();
    }

    static Poly zero(const FieldPtr& f) { return Poly(f); }
    static Poly one(const FieldPtr& f) { return Poly(f, {1}); }
    static Poly x(const FieldPtr& f) { return Poly(f, {0, 1}); }
    static Poly constant(const FieldElem& c) { return Poly(c.field(), {c.code()}); }
    static Poly monomial(const FieldPtr& f, int deg, long coeff_code = 1) {
        std::vector<long> v(static_cast<size_t>(deg) + 1, 0);
        v.back() = coeff_code;
        return Poly(f, std::move(v));
    }

    /// Parse the literal grammar: comma-separated coefficient codes ascending
    /// in degree, e.g. "1,1,0,1" = 1 + x + x^3.
    static Poly parse(const FieldPtr& f, const std::string& literal) {
        std::vector<long> codes;
        std::stringstream ss(literal);
        std::string part;
        while (std::getline(ss, part, ',')) {
            size_t pos = 0;
            long v = std::stol(part, &pos);
            while (pos < part.size() && std::isspace(static_cast<unsigned char>(part[pos]))) ++pos;
            if (pos != part.size()) throw std::invalid_argument("Poly: bad literal '" + literal + "'");
            codes.push_back(v);
        }
        if (codes.empty()) throw std::invalid_argument("Poly: empty literal");
        return Poly(f, std::move(codes));
    }

    std::string literal() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        for (size_t i = 0; i < coeffs_.size(); ++i) {
            if (i) os << ',';
            os << coeffs_[i];
        }
        return os.str();
    }

    const FieldPtr& field() const { return field_; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }
    bool is_constant() const { return coeffs_.size() <= 1; }

    int degree() const {
        if (is_zero()) throw std::invalid_argument("Poly: the zero polynomial has no degree");
        return static_cast<int>(coeffs_.size()) - 1;
    }

    long coeff_code(int i) const {
        if (i < 0 || static_cast<size_t>(i) >= coeffs_.size()) return 0;
        return coeffs_[static_cast<size_t>(i)];
    }
    FieldElem coeff(int i) const { return field_->element(coeff_code(i)); }
    FieldElem leading() const { return field_->element(is_zero() ? 0 : coeffs_.back()); }
    const std::vector<long>& coeff_codes() const { return coeffs_; }

    bool is_monic() const { return !is_zero() && coeffs_.back() == 1; }
    Poly monic() const {
        if (is_zero()) throw std::invalid_argument("Poly: cannot normalize the zero polynomial");
        if (is_monic()) return *this;
        long inv = field_->inv_code(coeffs_.back());
        Poly out(field_);
        out.coeffs_.reserve(coeffs_.size());
        for (long c : coeffs_) out.coeffs_.push_back(field_->mul_code(c, inv));
        return out;
    }

    Poly operator+(const Poly& rhs) const {
        require_same_field(rhs);
        Poly out(field_);
        out.coeffs_.resize(std::max(coeffs_.size(), rhs.coeffs_.size()), 0);
        for (size_t i = 0; i < out.coeffs_.size(); ++i)
            out.coeffs_[i] = field_->add_code(i < coeffs_.size() ? coeffs_[i] : 0, i < rhs.coeffs_.size() ? rhs.coeffs_[i] : 0);
        out.normalize();
        return out;
    }
    Poly operator-(const Poly& rhs) const {
        require_same_field(rhs);
        Poly out(field_);
        out.coeffs_.resize(std::max(coeffs_.size(), rhs.coeffs_.size()), 0);
        for (size_t i = 0; i < out.coeffs_.size(); ++i)
            out.coeffs_[i] = field_->sub_code(i < coeffs_.size() ? coeffs_[i] : 0, i < rhs.coeffs_.size() ? rhs.coeffs_[i] : 0);
        out.normalize();
        return out;
    }
    Poly operator-() const { return Poly::zero(field_) - *this; }

    Poly operator*(const Poly& rhs) const {
        require_same_field(rhs);
        if (is_zero() || rhs.is_zero()) return Poly(field_);
        Poly out(field_);
        out.coeffs_.assign(coeffs_.size() + rhs.coeffs_.size() - 1, 0);
        for (size_t i = 0; i < coeffs_.size(); ++i) {
            if (coeffs_[i] == 0) continue;
            for (size_t j = 0; j < rhs.coeffs_.size(); ++j) {
                if (rhs.coeffs_[j] == 0) continue;
                out.coeffs_[i + j] = field_->add_code(out.coeffs_[i + j], field_->mul_code(coeffs_[i], rhs.coeffs_[j]));
            }
        }
        out.normalize();
        return out;
    }
    Poly operator*(const FieldElem& s) const {
        Poly out(field_);
        out.coeffs_.reserve(coeffs_.size());
        for (long c : coeffs_) out.coeffs_.push_back(field_->mul_code(c, s.code()));
        out.normalize();
        return out;
    }

    std::pair<Poly, Poly> divmod(const Poly& b) const {
        require_same_field(b);
        if (b.is_zero()) throw std::domain_error("Poly: division by the zero polynomial");
        Poly rem = *this;
        Poly quot(field_);
        const int db = b.degree();
        if (!is_zero() && degree() >= db) quot.coeffs_.assign(static_cast<size_t>(degree() - db) + 1, 0);
        const long lead_inv = field_->inv_code(b.coeffs_.back());
        while (!rem.is_zero() && rem.degree() >= db) {
            const int shift = rem.degree() - db;
            const long c = field_->mul_code(rem.coeffs_.back(), lead_inv);
            quot.coeffs_[static_cast<size_t>(shift)] = c;
            for (int j = 0; j <= db; ++j) {
                size_t k = static_cast<size_t>(shift + j);
                rem.coeffs_[k] = field_->sub_code(rem.coeffs_[k], field_->mul_code(c, b.coeffs_[static_cast<size_t>(j)]));
            }
            rem.normalize();
        }
        quot.normalize();
        return {quot, rem};
    }
    Poly operator/(const Poly& b) const { return divmod(b).first; }
    Poly operator%(const Poly& b) const { return divmod(b).second; }

    bool operator==(const Poly& rhs) const { return field_.get() == rhs.field_.get() && coeffs_ == rhs.coeffs_; }
    bool operator!=(const Poly& rhs) const { return !(*this == rhs); }

    /// Monic greatest common divisor.
    static Poly gcd(Poly a, Poly b) {
        if (a.is_zero() && b.is_zero()) throw std::invalid_argument("Poly: gcd(0, 0) is undefined");
        a.require_same_field(b);
        while (!b.is_zero()) {
            Poly r = a % b;
            a = std::move(b);
            b = std::move(r);
        }
        return a.monic();
    }

    /// Extended Euclid: returns (g, u, v) with u*a + v*b = g, g monic.
    static std::tuple<Poly, Poly, Poly> egcd(const Poly& a, const Poly& b) {
        if (a.is_zero() && b.is_zero()) throw std::invalid_argument("Poly: egcd(0, 0) is undefined");
        a.require_same_field(b);
        const FieldPtr& f = a.field();
        Poly r0 = a, r1 = b;
        Poly u0 = Poly::one(f), u1 = Poly::zero(f);
        Poly v0 = Poly::zero(f), v1 = Poly::one(f);
        while (!r1.is_zero()) {
            auto [q, r] = r0.divmod(r1);
            r0 = std::move(r1);
            r1 = std::move(r);
            Poly u2 = u0 - q * u1;
            u0 = std::move(u1);
            u1 = std::move(u2);
            Poly v2 = v0 - q * v1;
            v0 = std::move(v1);
            v1 = std::move(v2);
        }
        FieldElem lead = r0.leading();
        FieldElem scale = lead.inverse();
        return {r0 * scale, u0 * scale, v0 * scale};
    }

    /// Coefficient-wise Frobenius; an F_q[x]-automorphism of F_{q^n}[x].
    Poly sigma() const {
        Poly out(field_);
        out.coeffs_.reserve(coeffs_.size());
        for (long c : coeffs_) out.coeffs_.push_back(field_->frobenius_code(c));
        out.normalize();
        return out;
    }

    /// Relative trace to F_q[x], coefficient-wise; asserts the result lands in the base ring.
    Poly trace_to_base() const {
        const FieldPtr& base = field_->base();
        Poly out(base);
        out.coeffs_.reserve(coeffs_.size());
        for (long c : coeffs_) out.coeffs_.push_back(field_->trace_code(c));
        out.normalize();
        return out;
    }

    /// Relative norm to F_q[x]: the product of all sigma-conjugates.
    Poly norm_to_base() const {
        Poly acc = *this;
        Poly conj = *this;
        for (int i = 1; i < field_->degree(); ++i) {
            conj = conj.sigma();
            acc = acc * conj;
        }
        const FieldPtr& base = field_->base();
        Poly out(base);
        out.coeffs_.reserve(acc.coeffs_.size());
        for (long c : acc.coeffs_) {
            auto d = field_->digits(c);
            for (size_t i = 1; i < d.size(); ++i)
                if (d[i] != 0) throw std::logic_error("Poly: norm left the base ring (construction bug)");
            out.coeffs_.push_back(d[0]);
        }
        out.normalize();
        return out;
    }

    /// Re-type over a tower extension of this ring's field (constants keep their codes).
    Poly lifted(const FieldPtr& ext) const {
        if (ext.get() == field_.get()) return *this;
        if (!ext->is_tower() || ext->base().get() != field_.get())
            throw std::invalid_argument("Poly: lift target must be a tower over this coefficient field");
        Poly out(ext);
        out.coeffs_ = coeffs_;  // constants embed with identical codes
        return out;
    }

    /// Canonical order: by degree, then by coefficient codes from the top down
    /// (equivalently, by the integer whose base-|F| digits are the coefficients).
    int compare(const Poly& rhs) const {
        require_same_field(rhs);
        if (coeffs_.size() != rhs.coeffs_.size()) return coeffs_.size() < rhs.coeffs_.size() ? -1 : 1;
        for (size_t i = coeffs_.size(); i-- > 0;) {
            if (coeffs_[i] != rhs.coeffs_[i]) return coeffs_[i] < rhs.coeffs_[i] ? -1 : 1;
        }
        return 0;
    }
    bool operator<(const Poly& rhs) const { return compare(rhs) < 0; }

    /// Index of this polynomial among all polynomials of degree < m in code order.
    long residue_index(int m) const {
        long idx = 0;
        for (int i = m - 1; i >= 0; --i) idx = idx * field_->cardinality() + coeff_code(i);
        return idx;
    }

   private:
    void normalize() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }
    void require_same_field(const Poly& rhs) const {
        if (field_.get() != rhs.field_.get()) throw std::invalid_argument("Poly: mixed coefficient fields");
    }

    FieldPtr field_;
    std::vector<long> coeffs_;
};

/// "Positive polynomial": nonzero with unit leading coefficient normalized to
/// 1, i.e. monic.
inline bool is_positive(const Poly& a) { return a.is_monic(); }

inline Poly sigma_poly(const Poly& a) { return a.sigma(); }
inline Poly poly_trace(const Poly& a) { return a.trace_to_base(); }
inline Poly poly_norm(const Poly& a) { return a.norm_to_base(); }
inline Poly lift(const Poly& a, const FieldPtr& ext) { return a.lifted(ext); }

namespace detail {

inline Poly poly_powmod(const Poly& base, long e, const Poly& mod) {
    Poly acc = Poly::one(base.field());
    Poly b = base % mod;
    while (e > 0) {
        if (e & 1L) acc = (acc * b) % mod;
        e >>= 1L;
        if (e > 0) b = (b * b) % mod;
    }
    return acc;
}

}  // namespace detail

/// Rabin test: f of degree d is irreducible iff x^(s^d) = x mod f and
/// gcd(x^(s^(d/r)) - x, f) = 1 for every prime r | d, s = |F|.
inline bool is_irreducible(const Poly& a) {
    if (a.is_zero()) throw std::invalid_argument("is_irreducible: zero polynomial");
    if (a.is_constant()) return false;
    const Poly f = a.monic();
    const int d = f.degree();
    if (d == 1) return true;
    const long s = f.field()->cardinality();
    const Poly x = Poly::x(f.field());

    std::vector<Poly> frob_steps{x};  // x^(s^j) mod f
    for (int j = 1; j <= d; ++j) frob_steps.push_back(detail::poly_powmod(frob_steps.back(), s, f));
    if (frob_steps[static_cast<size_t>(d)] != x) return false;
    for (int r = 2; r <= d; ++r) {
        if (d % r != 0) continue;
        bool prime = true;
        for (int t = 2; t * t <= r; ++t)
            if (r % t == 0) prime = false;
        if (!prime) continue;
        Poly diff = frob_steps[static_cast<size_t>(d / r)] - x;
        if (diff.is_zero()) return false;
        if (Poly::gcd(diff, f).degree() != 0) return false;
    }
    return true;
}

/// unit * product of monic irreducible prime powers.
struct FactoredPoly {
    FieldElem unit;
    std::vector<std::pair<Poly, int>> factors;  // (monic irreducible, multiplicity), sorted canonically

    std::string str() const {
        std::ostringstream os;
        os << unit.code();
        for (const auto& [p, k] : factors) os << " * (" << p.literal() << ")^" << k;
        return os.str();
    }
};

/// Deterministic factorization by trial division with ascending monic
/// candidates; the result is re-multiplied and checked against the input.
inline FactoredPoly factor(const Poly& a) {
    if (a.is_zero()) throw std::invalid_argument("factor: zero polynomial");
    const FieldPtr& f = a.field();
    FactoredPoly out{a.leading(), {}};
    Poly rest = a.monic();

    while (!rest.is_constant()) {
        if (is_irreducible(rest)) {
            out.factors.emplace_back(rest, 1);
            rest = Poly::one(f);
            break;
        }
        bool found = false;
        for (int d = 1; 2 * d <= rest.degree() && !found; ++d) {
            long count = 1;
            for (int i = 0; i < d; ++i) count *= f->cardinality();
            for (long c = 0; c < count && !found; ++c) {
                std::vector<long> codes;
                long v = c;
                for (int i = 0; i < d; ++i) {
                    codes.push_back(v % f->cardinality());
                    v /= f->cardinality();
                }
                codes.push_back(1);
                Poly cand(f, std::move(codes));
                std::pair<Poly, Poly> qr = rest.divmod(cand);
                if (!qr.second.is_zero()) continue;
                int mult = 0;
                while (qr.second.is_zero()) {
                    ++mult;
                    rest = qr.first;
                    if (rest.is_constant()) break;
                    qr = rest.divmod(cand);
                }
                out.factors.emplace_back(std::move(cand), mult);
                found = true;
            }
        }
        if (!found) {
            // no divisor up to half degree: remainder is irreducible
            out.factors.emplace_back(rest, 1);
            rest = Poly::one(f);
        }
    }

    std::sort(out.factors.begin(), out.factors.end(),
              [](const auto& lhs, const auto& rhs) { return lhs.first < rhs.first; });

    Poly check = Poly::constant(out.unit);
    for (const auto& [p, k] : out.factors)
        for (int i = 0; i < k; ++i) check = check * p;
    if (check != a) throw std::logic_error("factor: re-multiplication check failed");
    return out;
}

/// Number of residues mod H coprime to H, via the factorization of H.
inline BigInt euler_phi(const Poly& H) {
    if (H.is_zero()) throw std::invalid_argument("euler_phi: zero modulus");
    if (H.is_constant()) return 1;
    BigInt phi = 1;
    const BigInt q = H.field()->cardinality();
    for (const auto& [p, k] : factor(H).factors) {
        BigInt pk = 1, pk1 = 1;
        for (int i = 0; i < k * p.degree(); ++i) pk *= q;
        for (int i = 0; i < (k - 1) * p.degree(); ++i) pk1 *= q;
        phi *= pk - pk1;
    }
    return phi;
}

inline long euler_phi_long(const Poly& H) {
    BigInt phi = euler_phi(H);
    if (phi > std::numeric_limits<long>::max()) throw std::domain_error("euler_phi: count exceeds desk scale");
    return static_cast<long>(phi);
}

/// Visit all |F|^m polynomials of degree < m = deg(H) in canonical code order.
template <class Fn>
inline void for_each_residue(const Poly& H, Fn&& fn) {
    if (H.is_zero() || H.is_constant()) throw std::invalid_argument("residues: modulus must have degree >= 1");
    const FieldPtr& f = H.field();
    const int m = H.degree();
    const long card = f->cardinality();
    double size_estimate = 1;
    for (int i = 0; i < m; ++i) size_estimate *= static_cast<double>(card);
    if (size_estimate > 4.6e18) throw std::domain_error("residues: residue system too large to enumerate");

    std::vector<long> digits(static_cast<size_t>(m), 0);
    while (true) {
        fn(Poly(f, digits));
        int i = 0;
        while (i < m && digits[static_cast<size_t>(i)] == card - 1) {
            digits[static_cast<size_t>(i)] = 0;
            ++i;
        }
        if (i == m) break;
        ++digits[static_cast<size_t>(i)];
    }
}

inline std::vector<Poly> residues(const Poly& H) {
    std::vector<Poly> out;
    for_each_residue(H, [&](const Poly& r) { out.push_back(r); });
    return out;
}

inline std::vector<Poly> units(const Poly& H) {
    std::vector<Poly> out;
    for_each_residue(H, [&](const Poly& r) {
        if (!r.is_zero() && Poly::gcd(r, H).is_one()) out.push_back(r);
    });
    return out;
}

/// Canonically minimal monic irreducible of degree d (same order as build_field).
inline Poly min_irreducible(const FieldPtr& f, int d) {
    if (d < 1) throw std::invalid_argument("min_irreducible: degree must be >= 1");
    long count = 1;
    for (int i = 0; i < d; ++i) count *= f->cardinality();
    for (long c = 0; c < count; ++c) {
        std::vector<long> codes;
        long v = c;
        for (int i = 0; i < d; ++i) {
            codes.push_back(v % f->cardinality());
            v /= f->cardinality();
        }
        codes.push_back(1);
        Poly cand(f, std::move(codes));
        if (is_irreducible(cand)) return cand;
    }
    throw std::logic_error("min_irreducible: none found");
}

}  // namespace polygauss

#endif  // POLYGAUSS_POLY_HPP
