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

#ifndef POLYGAUSS_FINITE_FIELD_HPP
#define POLYGAUSS_FINITE_FIELD_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "polygauss/cyclotomic.hpp"

namespace polygauss {

class FieldSpec;
using FieldPtr = std::shared_ptr<const FieldSpec>;

class FieldElem;

/// A finite field F_{p^l}, or a tower extension F_{q^n} = F_q[y]/(g) over a
/// previously built F_q. Elements are addressed by canonical integer codes:
/// little-endian digits in base |coefficient field|. Construction is
/// deterministic — the defining polynomial is the canonically minimal monic
/// irreducible of the requested degree (minimal by the integer whose
/// base-|coefficient field| digits are the coefficients, constant term least
/// significant). Specs are immutable and cached per process, so pointer
/// equality is field equality.
class FieldSpec : public std::enable_shared_from_this<FieldSpec> {
   public:
    /// F_{p^l}. For l = 1 this is F_p with no defining polynomial.
    static FieldPtr build(long p, int l);

    /// Degree-n tower F_{q^n} over a base-level field F_q.
    static FieldPtr extend(const FieldPtr& base, int n);

    long characteristic() const { return p_; }
    long cardinality() const { return card_; }
    /// Extension degree over the coefficient field (l, or n for towers).
    int degree() const { return deg_; }
    bool is_tower() const { return kind_ == Kind::Tower; }
    /// Base field of a tower.
    const FieldPtr& base() const {
        if (kind_ != Kind::Tower) throw std::logic_error("FieldSpec: base() requires a tower extension");
        return base_;
    }
    long coeff_cardinality() const { return sub_card_; }
    /// Defining polynomial as coefficient-field codes, ascending; empty for F_p.
    const std::vector<long>& defining_poly() const { return def_poly_; }

    std::string name() const;

    FieldElem zero() const;
    FieldElem one() const;
    FieldElem element(long code) const;
    FieldElem from_coeffs(const std::vector<long>& digits) const;
    std::vector<FieldElem> elements() const;

    // ---- code-level arithmetic ----
    long add_code(long a, long b) const {
        return pair_tables_ ? add_tab_[static_cast<size_t>(a * card_ + b)] : add_structural(a, b);
    }
    long mul_code(long a, long b) const {
        return pair_tables_ ? mul_tab_[static_cast<size_t>(a * card_ + b)] : mul_structural(a, b);
    }
    long neg_code(long a) const { return sub_code(0, a); }
    long sub_code(long a, long b) const;
    long inv_code(long a) const;
    long div_code(long a, long b) const;
    long pow_code(long a, long e) const;

    /// a^q for a tower over F_q; sigma generates Gal(F_{q^n}/F_q).
    long frobenius_code(long a) const {
        require_tower("frobenius");
        return unary_tables_ ? frob_tab_[static_cast<size_t>(a)] : pow_code(a, sub_card_);
    }
    /// Relative trace to the base field; returns a base-field code.
    long trace_code(long a) const {
        require_tower("trace");
        return unary_tables_ ? trace_tab_[static_cast<size_t>(a)] : trace_structural(a);
    }
    /// Relative norm to the base field; returns a base-field code.
    long norm_code(long a) const {
        require_tower("norm");
        return unary_tables_ ? norm_tab_[static_cast<size_t>(a)] : norm_structural(a);
    }
    /// Absolute trace down to F_p, as an integer in [0, p).
    long abs_trace(long a) const { return unary_tables_ ? abs_trace_tab_[static_cast<size_t>(a)] : abs_trace_structural(a); }

    /// Smallest-code generator of the multiplicative group.
    long generator_code() const {
        require_small("generator_code");
        return gen_code_;
    }
    /// Discrete log of a nonzero code against generator_code().
    long dlog(long a) const {
        require_small("dlog");
        if (a == 0) throw std::domain_error("FieldSpec: dlog of zero");
        return dlog_tab_[static_cast<size_t>(a)];
    }

    std::vector<long> digits(long code) const {
        std::vector<long> d(static_cast<size_t>(deg_));
        for (int i = 0; i < deg_; ++i) {
            d[static_cast<size_t>(i)] = code % sub_card_;
            code /= sub_card_;
        }
        return d;
    }
    long code_of(const std::vector<long>& d) const {
        long c = 0;
        for (int i = deg_ - 1; i >= 0; --i) c = c * sub_card_ + d[static_cast<size_t>(i)];
        return c;
    }

   private:
    enum class Kind { Prime, BaseExt, Tower };

    FieldSpec() = default;

    // ---- coefficient-field arithmetic ----
    long cadd(long a, long b) const { return kind_ == Kind::Tower ? base_->add_code(a, b) : (a + b) % p_; }
    long csub(long a, long b) const { return kind_ == Kind::Tower ? base_->sub_code(a, b) : ((a - b) % p_ + p_) % p_; }
    long cmul(long a, long b) const { return kind_ == Kind::Tower ? base_->mul_code(a, b) : (a * b) % p_; }

    long add_structural(long a, long b) const {
        auto da = digits(a), db = digits(b);
        for (int i = 0; i < deg_; ++i) da[static_cast<size_t>(i)] = cadd(da[static_cast<size_t>(i)], db[static_cast<size_t>(i)]);
        return code_of(da);
    }
    long sub_structural(long a, long b) const {
        auto da = digits(a), db = digits(b);
        for (int i = 0; i < deg_; ++i) da[static_cast<size_t>(i)] = csub(da[static_cast<size_t>(i)], db[static_cast<size_t>(i)]);
        return code_of(da);
    }
    long mul_structural(long a, long b) const {
        if (deg_ == 1) {
            if (kind_ == Kind::Tower) return base_->mul_code(a, b);
            return (a * b) % p_;
        }
        auto da = digits(a), db = digits(b);
        std::vector<long> prod(static_cast<size_t>(2 * deg_ - 1), 0);
        for (int i = 0; i < deg_; ++i) {
            if (da[static_cast<size_t>(i)] == 0) continue;
            for (int j = 0; j < deg_; ++j)
                prod[static_cast<size_t>(i + j)] = cadd(prod[static_cast<size_t>(i + j)], cmul(da[static_cast<size_t>(i)], db[static_cast<size_t>(j)]));
        }
        // reduce modulo the monic defining polynomial
        for (int i = 2 * deg_ - 2; i >= deg_; --i) {
            long c = prod[static_cast<size_t>(i)];
            if (c == 0) continue;
            prod[static_cast<size_t>(i)] = 0;
            for (int j = 0; j < deg_; ++j)
                prod[static_cast<size_t>(i - deg_ + j)] = csub(prod[static_cast<size_t>(i - deg_ + j)], cmul(c, def_poly_[static_cast<size_t>(j)]));
        }
        prod.resize(static_cast<size_t>(deg_));
        return code_of(prod);
    }

    long trace_structural(long a) const {
        long acc = a, conj = a;
        for (int i = 1; i < deg_; ++i) {
            conj = pow_code(conj, sub_card_);
            acc = add_code(acc, conj);
        }
        return project_to_coeff_field(acc, "trace");
    }
    long norm_structural(long a) const {
        long acc = a, conj = a;
        for (int i = 1; i < deg_; ++i) {
            conj = pow_code(conj, sub_card_);
            acc = mul_code(acc, conj);
        }
        return project_to_coeff_field(acc, "norm");
    }
    long abs_trace_structural(long a) const {
        if (kind_ == Kind::Prime) return a;
        if (kind_ == Kind::Tower) return base_->abs_trace(trace_structural(a));
        long acc = a, conj = a;
        for (int i = 1; i < deg_; ++i) {
            conj = pow_code(conj, p_);
            acc = add_code(acc, conj);
        }
        return project_to_coeff_field(acc, "absolute trace");
    }
    long project_to_coeff_field(long code, const char* what) const {
        auto d = digits(code);
        for (int i = 1; i < deg_; ++i)
            if (d[static_cast<size_t>(i)] != 0)
                throw std::logic_error(std::string("FieldSpec: ") + what + " left the coefficient field (construction bug)");
        return d[0];
    }

    void require_tower(const char* what) const {
        if (kind_ != Kind::Tower)
            throw std::logic_error(std::string("FieldSpec: ") + what + " requires a tower extension with a declared base field");
    }
    void require_small(const char* what) const {
        if (!unary_tables_)
            throw std::domain_error(std::string("FieldSpec: ") + what + " is only available for desk-scale fields");
    }

    void init_tables();

    // Canonically minimal monic irreducible of degree d, as coefficient codes
    // (ascending, length d+1), over either F_p or a built base field.
    struct CoeffArith {
        long card;
        const FieldSpec* field;  // null => integers mod p
        long p;
        long add(long a, long b) const { return field ? field->add_code(a, b) : (a + b) % p; }
        long sub(long a, long b) const { return field ? field->sub_code(a, b) : ((a - b) % p + p) % p; }
        long mul(long a, long b) const { return field ? field->mul_code(a, b) : (a * b) % p; }
        long inv(long a) const;
    };
    static std::vector<long> min_irreducible_codes(const CoeffArith& F, int d);
    static bool irreducible_codes(const CoeffArith& F, const std::vector<long>& f);

    Kind kind_ = Kind::Prime;
    long p_ = 0;
    long card_ = 0;
    int deg_ = 1;
    long sub_card_ = 0;
    FieldPtr base_;
    std::vector<long> def_poly_;

    bool pair_tables_ = false;
    bool unary_tables_ = false;
    std::vector<int32_t> add_tab_, mul_tab_;
    std::vector<int32_t> inv_tab_, neg_tab_;
    std::vector<int32_t> frob_tab_, trace_tab_, norm_tab_, abs_trace_tab_;
    long gen_code_ = -1;
    std::vector<int32_t> dlog_tab_;

    static constexpr long kPairTableLimit = 1024;
    static constexpr long kUnaryTableLimit = 4096;
};

/// An element of a FieldSpec: an immutable (field, code) pair. The coefficient
/// vector on the power basis of the defining polynomial is recoverable through
/// coeffs(); arithmetic mixes only elements of the identical spec.
class FieldElem {
   public:
    FieldElem() = default;
    FieldElem(FieldPtr field, long code) : field_(std::move(field)), code_(code) {
        if (code_ < 0 || code_ >= field_->cardinality()) throw std::invalid_argument("FieldElem: code out of range");
    }

    const FieldPtr& field() const { return field_; }
    long code() const { return code_; }
    std::vector<long> coeffs() const { return field_->digits(code_); }
    bool is_zero() const { return code_ == 0; }
    bool is_one() const { return code_ == 1; }

    FieldElem operator+(const FieldElem& rhs) const { return with(field_->add_code(code_, same(rhs))); }
    FieldElem operator-(const FieldElem& rhs) const { return with(field_->sub_code(code_, same(rhs))); }
    FieldElem operator*(const FieldElem& rhs) const { return with(field_->mul_code(code_, same(rhs))); }
    FieldElem operator/(const FieldElem& rhs) const { return with(field_->div_code(code_, same(rhs))); }
    FieldElem operator-() const { return with(field_->neg_code(code_)); }
    FieldElem inverse() const { return with(field_->inv_code(code_)); }
    FieldElem pow(long e) const { return with(field_->pow_code(code_, e)); }

    bool operator==(const FieldElem& rhs) const { return field_.get() == rhs.field_.get() && code_ == rhs.code_; }
    bool operator!=(const FieldElem& rhs) const { return !(*this == rhs); }

   private:
    FieldElem with(long code) const { return FieldElem(field_, code); }
    long same(const FieldElem& rhs) const {
        if (field_.get() != rhs.field_.get()) throw std::invalid_argument("FieldElem: mixed fields in arithmetic");
        return rhs.code_;
    }

    FieldPtr field_;
    long code_ = 0;
};

// ---------------------------------------------------------------------------

inline long FieldSpec::CoeffArith::inv(long a) const {
    if (field) return field->inv_code(a);
    // extended Euclid mod p
    long t = 0, new_t = 1, r = p, new_r = a % p;
    while (new_r != 0) {
        long q = r / new_r;
        t -= q * new_t;
        std::swap(t, new_t);
        r -= q * new_r;
        std::swap(r, new_r);
    }
    if (r != 1) throw std::domain_error("CoeffArith: not invertible");
    return ((t % p) + p) % p;
}

inline bool FieldSpec::irreducible_codes(const CoeffArith& F, const std::vector<long>& f) {
    const int d = static_cast<int>(f.size()) - 1;
    if (d < 1) return false;
    if (d == 1) return true;

    auto mulmod = [&](const std::vector<long>& a, const std::vector<long>& b) -> std::vector<long> {
        if (a.empty() || b.empty()) return {};
        std::vector<long> prod(a.size() + b.size() - 1, 0);
        for (size_t i = 0; i < a.size(); ++i) {
            if (a[i] == 0) continue;
            for (size_t j = 0; j < b.size(); ++j) prod[i + j] = F.add(prod[i + j], F.mul(a[i], b[j]));
        }
        for (int i = static_cast<int>(prod.size()) - 1; i >= d; --i) {
            long c = prod[static_cast<size_t>(i)];
            if (c == 0) continue;
            prod[static_cast<size_t>(i)] = 0;
            for (int j = 0; j < d; ++j)
                prod[static_cast<size_t>(i - d + j)] = F.sub(prod[static_cast<size_t>(i - d + j)], F.mul(c, f[static_cast<size_t>(j)]));
        }
        prod.resize(static_cast<size_t>(d));
        while (!prod.empty() && prod.back() == 0) prod.pop_back();
        return prod;
    };
    auto powq = [&](std::vector<long> h) {  // h^card mod f
        std::vector<long> acc{1};
        long e = F.card;
        while (e > 0) {
            if (e & 1L) acc = mulmod(acc, h);
            e >>= 1L;
            if (e > 0) h = mulmod(h, h);
        }
        return acc;
    };
    auto gcd_poly = [&](std::vector<long> a, std::vector<long> b) {
        while (!b.empty()) {
            // a mod b
            long lead_inv = F.inv(b.back());
            int db = static_cast<int>(b.size()) - 1;
            while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
                long c = F.mul(a.back(), lead_inv);
                int shift = static_cast<int>(a.size()) - 1 - db;
                for (int j = 0; j <= db; ++j)
                    a[static_cast<size_t>(shift + j)] = F.sub(a[static_cast<size_t>(shift + j)], F.mul(c, b[static_cast<size_t>(j)]));
                while (!a.empty() && a.back() == 0) a.pop_back();
            }
            std::swap(a, b);
        }
        return a;
    };
    auto sub_x = [&](std::vector<long> h) {
        if (h.size() < 2) h.resize(2, 0);
        h[1] = F.sub(h[1], 1);
        while (!h.empty() && h.back() == 0) h.pop_back();
        return h;
    };

    // x^(card^d) == x mod f, and gcd(x^(card^(d/r)) - x, f) == 1 for primes r | d.
    std::vector<long> frob{0, 1};  // x
    std::vector<std::vector<long>> frob_steps{frob};
    for (int j = 1; j <= d; ++j) {
        frob = powq(std::move(frob));
        frob_steps.push_back(frob);
    }
    std::vector<long> x{0, 1};
    if (frob_steps[static_cast<size_t>(d)] != x) return false;
    for (int r = 2; r <= d; ++r) {
        if (d % r != 0) continue;
        bool prime = true;
        for (int s = 2; s * s <= r; ++s)
            if (r % s == 0) prime = false;
        if (!prime) continue;
        auto g = gcd_poly(sub_x(frob_steps[static_cast<size_t>(d / r)]), f);
        if (!(g.size() == 1)) return false;
    }
    return true;
}

inline std::vector<long> FieldSpec::min_irreducible_codes(const CoeffArith& F, int d) {
    long count = 1;
    for (int i = 0; i < d; ++i) {
        if (count > (1L << 40) / F.card) throw std::domain_error("FieldSpec: irreducible search space too large");
        count *= F.card;
    }
    for (long c = 0; c < count; ++c) {
        std::vector<long> f(static_cast<size_t>(d) + 1);
        long rest = c;
        for (int i = 0; i < d; ++i) {
            f[static_cast<size_t>(i)] = rest % F.card;
            rest /= F.card;
        }
        f[static_cast<size_t>(d)] = 1;
        if (irreducible_codes(F, f)) return f;
    }
    throw std::logic_error("FieldSpec: no irreducible polynomial found");
}

inline FieldPtr FieldSpec::build(long p, int l) {
    if (p < 2) throw std::invalid_argument("FieldSpec: characteristic must be a prime >= 2");
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) throw std::invalid_argument("FieldSpec: characteristic " + std::to_string(p) + " is not prime");
    if (l < 1) throw std::invalid_argument("FieldSpec: extension degree must be >= 1");

    static std::mutex mu;
    static std::map<std::pair<long, int>, FieldPtr> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(p, l);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    auto spec = std::shared_ptr<FieldSpec>(new FieldSpec());
    spec->p_ = p;
    spec->deg_ = l;
    spec->sub_card_ = p;
    long card = 1;
    for (int i = 0; i < l; ++i) {
        if (card > (1L << 62) / p) throw std::domain_error("FieldSpec: cardinality overflow");
        card *= p;
    }
    spec->card_ = card;
    if (l == 1) {
        spec->kind_ = Kind::Prime;
    } else {
        spec->kind_ = Kind::BaseExt;
        CoeffArith F{p, nullptr, p};
        spec->def_poly_ = min_irreducible_codes(F, l);
    }
    spec->init_tables();
    FieldPtr out = spec;
    cache.emplace(key, out);
    return out;
}

inline FieldPtr FieldSpec::extend(const FieldPtr& base, int n) {
    if (!base) throw std::invalid_argument("FieldSpec: null base field");
    if (base->is_tower()) throw std::invalid_argument("FieldSpec: towers over towers are not supported; extend a base-level field");
    if (n < 1) throw std::invalid_argument("FieldSpec: extension degree must be >= 1");

    static std::mutex mu;
    static std::map<std::pair<const FieldSpec*, int>, FieldPtr> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(base.get(), n);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    auto spec = std::shared_ptr<FieldSpec>(new FieldSpec());
    spec->kind_ = Kind::Tower;
    spec->p_ = base->characteristic();
    spec->deg_ = n;
    spec->sub_card_ = base->cardinality();
    spec->base_ = base;
    long card = 1;
    for (int i = 0; i < n; ++i) {
        if (card > (1L << 62) / spec->sub_card_) throw std::domain_error("FieldSpec: cardinality overflow");
        card *= spec->sub_card_;
    }
    spec->card_ = card;
    CoeffArith F{spec->sub_card_, base.get(), spec->p_};
    spec->def_poly_ = min_irreducible_codes(F, n);
    spec->init_tables();
    FieldPtr out = spec;
    cache.emplace(key, out);
    return out;
}

inline void FieldSpec::init_tables() {
    if (card_ > kUnaryTableLimit) return;
    unary_tables_ = true;

    inv_tab_.assign(static_cast<size_t>(card_), -1);
    neg_tab_.resize(static_cast<size_t>(card_));
    for (long a = 0; a < card_; ++a) neg_tab_[static_cast<size_t>(a)] = static_cast<int32_t>(sub_structural(0, a));
    abs_trace_tab_.resize(static_cast<size_t>(card_));
    if (kind_ == Kind::Tower) {
        frob_tab_.resize(static_cast<size_t>(card_));
        trace_tab_.resize(static_cast<size_t>(card_));
        norm_tab_.resize(static_cast<size_t>(card_));
    }
    for (long a = 0; a < card_; ++a) {
        if (a != 0) {
            long e = card_ - 2;
            long acc = 1, b = a;
            while (e > 0) {
                if (e & 1L) acc = mul_structural(acc, b);
                e >>= 1L;
                if (e > 0) b = mul_structural(b, b);
            }
            inv_tab_[static_cast<size_t>(a)] = static_cast<int32_t>(acc);
        }
        if (kind_ == Kind::Tower) {
            long fr = a;
            long e = sub_card_;
            long acc = 1, b = a;
            while (e > 0) {
                if (e & 1L) acc = mul_structural(acc, b);
                e >>= 1L;
                if (e > 0) b = mul_structural(b, b);
            }
            fr = acc;
            frob_tab_[static_cast<size_t>(a)] = static_cast<int32_t>(fr);
        }
    }
    for (long a = 0; a < card_; ++a) {
        if (kind_ == Kind::Tower) {
            long tr = a, nm = a, conj = a;
            for (int i = 1; i < deg_; ++i) {
                conj = frob_tab_[static_cast<size_t>(conj)];
                tr = add_structural(tr, conj);
                nm = mul_structural(nm, conj);
            }
            trace_tab_[static_cast<size_t>(a)] = static_cast<int32_t>(project_to_coeff_field(tr, "trace"));
            norm_tab_[static_cast<size_t>(a)] = static_cast<int32_t>(project_to_coeff_field(nm, "norm"));
        }
        abs_trace_tab_[static_cast<size_t>(a)] = static_cast<int32_t>(abs_trace_structural(a));
    }

    if (card_ <= kPairTableLimit) {
        pair_tables_ = true;
        add_tab_.resize(static_cast<size_t>(card_ * card_));
        mul_tab_.resize(static_cast<size_t>(card_ * card_));
        for (long a = 0; a < card_; ++a)
            for (long b = 0; b < card_; ++b) {
                add_tab_[static_cast<size_t>(a * card_ + b)] = static_cast<int32_t>(add_structural(a, b));
                mul_tab_[static_cast<size_t>(a * card_ + b)] = static_cast<int32_t>(mul_structural(a, b));
            }
    }

    // Smallest-code generator of the (cyclic) multiplicative group, plus dlogs.
    std::vector<long> prime_factors;
    long g_order = card_ - 1;
    long rest = g_order;
    for (long d = 2; d * d <= rest; ++d)
        if (rest % d == 0) {
            prime_factors.push_back(d);
            while (rest % d == 0) rest /= d;
        }
    if (rest > 1) prime_factors.push_back(rest);
    for (long g = 1; g < card_; ++g) {
        bool generates = true;
        for (long r : prime_factors) {
            if (pow_code(g, g_order / r) == 1) {
                generates = false;
                break;
            }
        }
        if (generates) {
            gen_code_ = g;
            break;
        }
    }
    if (gen_code_ < 0) throw std::logic_error("FieldSpec: multiplicative group has no generator (construction bug)");
    dlog_tab_.assign(static_cast<size_t>(card_), -1);
    long acc = 1;
    for (long k = 0; k < g_order; ++k) {
        dlog_tab_[static_cast<size_t>(acc)] = static_cast<int32_t>(k);
        acc = mul_code(acc, gen_code_);
    }
}

inline long FieldSpec::sub_code(long a, long b) const {
    if (unary_tables_) return add_code(a, neg_tab_[static_cast<size_t>(b)]);
    return sub_structural(a, b);
}

inline long FieldSpec::inv_code(long a) const {
    if (a == 0) throw std::domain_error("FieldSpec: division by zero");
    if (unary_tables_) return inv_tab_[static_cast<size_t>(a)];
    long e = card_ - 2;
    long acc = 1, b = a;
    while (e > 0) {
        if (e & 1L) acc = mul_code(acc, b);
        e >>= 1L;
        if (e > 0) b = mul_code(b, b);
    }
    return acc;
}

inline long FieldSpec::div_code(long a, long b) const { return mul_code(a, inv_code(b)); }

inline long FieldSpec::pow_code(long a, long e) const {
    if (e < 0) throw std::invalid_argument("FieldSpec: negative exponent");
    long acc = 1, b = a;
    while (e > 0) {
        if (e & 1L) acc = mul_code(acc, b);
        e >>= 1L;
        if (e > 0) b = mul_code(b, b);
    }
    return acc;
}

inline std::string FieldSpec::name() const {
    if (kind_ == Kind::Tower) return "F_" + std::to_string(sub_card_) + "^" + std::to_string(deg_);
    return "F_" + std::to_string(card_);
}

inline FieldElem FieldSpec::zero() const { return FieldElem(shared_from_this(), 0); }
inline FieldElem FieldSpec::one() const { return FieldElem(shared_from_this(), 1); }
inline FieldElem FieldSpec::element(long code) const { return FieldElem(shared_from_this(), code); }
inline FieldElem FieldSpec::from_coeffs(const std::vector<long>& digits) const {
    if (static_cast<int>(digits.size()) != deg_) throw std::invalid_argument("FieldSpec: coefficient vector has wrong length");
    for (long d : digits)
        if (d < 0 || d >= sub_card_) throw std::invalid_argument("FieldSpec: coefficient code out of range");
    return FieldElem(shared_from_this(), code_of(digits));
}
inline std::vector<FieldElem> FieldSpec::elements() const {
    std::vector<FieldElem> out;
    out.reserve(static_cast<size_t>(card_));
    for (long c = 0; c < card_; ++c) out.emplace_back(shared_from_this(), c);
    return out;
}

// ---- spec-level free functions ----

inline FieldPtr build_field(long p, int l) { return FieldSpec::build(p, l); }
inline FieldPtr extend_field(const FieldPtr& base, int n) { return FieldSpec::extend(base, n); }

inline FieldElem frobenius(const FieldElem& a) { return FieldElem(a.field(), a.field()->frobenius_code(a.code())); }

inline FieldElem trace(const FieldElem& a) { return FieldElem(a.field()->base(), a.field()->trace_code(a.code())); }

inline FieldElem norm(const FieldElem& a) { return FieldElem(a.field()->base(), a.field()->norm_code(a.code())); }

/// The fixed non-principal additive character lambda(a) = zeta_p^{T(a)},
/// T the absolute trace to F_p.
inline CyclotomicInt lambda_char(const FieldElem& a) {
    return CyclotomicInt::root_of_unity(a.field()->characteristic(), a.field()->abs_trace(a.code()));
}

}  // namespace polygauss

#endif  // POLYGAUSS_FINITE_FIELD_HPP
