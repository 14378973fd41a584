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

#ifndef POLYGAUSS_CYCLOTOMIC_HPP
#define POLYGAUSS_CYCLOTOMIC_HPP

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace polygauss {

using BigInt = boost::multiprecision::cpp_int;

/// Euler totient of a positive integer (trial factorization; desk scale).
inline long euler_totient(long m) {
    if (m < 1) throw std::invalid_argument("euler_totient: argument must be positive");
    long result = m;
    long n = m;
    for (long d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            result -= result / d;
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

/// The M-th cyclotomic polynomial with exact integer coefficients,
/// computed by the division recursion Phi_M = (x^M - 1) / prod_{d|M, d<M} Phi_d
/// and memoized per process. Monic, degree phi(M).
class CycloPoly {
   public:
    long order() const { return order_; }
    /// Coefficients ascending in degree; back() == 1.
    const std::vector<BigInt>& coeffs() const { return coeffs_; }
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }

    static const CycloPoly& of(long order) {
        if (order < 1) throw std::invalid_argument("CycloPoly: order must be >= 1");
        static std::mutex mu;
        static std::map<long, std::unique_ptr<CycloPoly>> cache;
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(order);
        if (it != cache.end()) return *it->second;
        // Fill every divisor bottom-up so each step only needs cached entries.
        std::vector<long> divisors;
        for (long d = 1; d <= order; ++d)
            if (order % d == 0) divisors.push_back(d);
        for (long d : divisors) {
            if (cache.count(d)) continue;
            std::vector<BigInt> num(static_cast<size_t>(d) + 1);
            num.front() = -1;
            num.back() = 1;
            for (long e : divisors) {
                if (e < d && d % e == 0) num = exact_divide(num, cache.at(e)->coeffs_);
            }
            auto phi = std::unique_ptr<CycloPoly>(new CycloPoly(d, std::move(num)));
            cache.emplace(d, std::move(phi));
        }
        return *cache.at(order);
    }

   private:
    CycloPoly(long order, std::vector<BigInt> coeffs) : order_(order), coeffs_(std::move(coeffs)) {}

    // Exact division of integer polynomials, divisor monic; remainder must vanish.
    static std::vector<BigInt> exact_divide(std::vector<BigInt> num, const std::vector<BigInt>& den) {
        const long dn = static_cast<long>(num.size()) - 1;
        const long dd = static_cast<long>(den.size()) - 1;
        std::vector<BigInt> quot(static_cast<size_t>(dn - dd) + 1);
        for (long i = dn; i >= dd; --i) {
            BigInt c = num[static_cast<size_t>(i)];
            if (c == 0) continue;
            quot[static_cast<size_t>(i - dd)] = c;
            for (long j = 0; j <= dd; ++j) num[static_cast<size_t>(i - dd + j)] -= c * den[static_cast<size_t>(j)];
        }
        for (const BigInt& c : num)
            if (c != 0) throw std::logic_error("CycloPoly: division recursion left a remainder");
        return quot;
    }

    long order_;
    std::vector<BigInt> coeffs_;
};

/// An exact element of Z[zeta_M] in the group-ring representation: one signed
/// integer coefficient per power zeta_M^k, never reduced during arithmetic.
/// Equality is decided by reducing, exactly, modulo the M-th cyclotomic
/// polynomial. Values are immutable and safe to share between threads.
class CyclotomicInt {
   public:
    /// The zero value of the given order.
    explicit CyclotomicInt(long order) : order_(order), coeffs_(checked_size(order)) {}

    CyclotomicInt(long order, std::vector<BigInt> coeffs) : order_(order), coeffs_(std::move(coeffs)) {
        checked_size(order);
        if (static_cast<long>(coeffs_.size()) != order_)
            throw std::invalid_argument("CyclotomicInt: coefficient vector must have length equal to the order");
    }

    /// zeta_M^(k mod M).
    static CyclotomicInt root_of_unity(long order, long k) {
        CyclotomicInt z(order);
        long e = k % order;
        if (e < 0) e += order;
        z.coeffs_[static_cast<size_t>(e)] = 1;
        return z;
    }

    /// The rational integer v, embedded at exponent 0.
    static CyclotomicInt from_integer(long order, BigInt v) {
        CyclotomicInt z(order);
        z.coeffs_[0] = std::move(v);
        return z;
    }

    long order() const { return order_; }
    const std::vector<BigInt>& coeffs() const { return coeffs_; }

    CyclotomicInt operator+(const CyclotomicInt& rhs) const {
        require_same_order(rhs);
        CyclotomicInt out(order_);
        for (long k = 0; k < order_; ++k) out.coeffs_[static_cast<size_t>(k)] = coeffs_[static_cast<size_t>(k)] + rhs.coeffs_[static_cast<size_t>(k)];
        return out;
    }

    CyclotomicInt operator-() const {
        CyclotomicInt out(order_);
        for (long k = 0; k < order_; ++k) out.coeffs_[static_cast<size_t>(k)] = -coeffs_[static_cast<size_t>(k)];
        return out;
    }

    CyclotomicInt operator-(const CyclotomicInt& rhs) const { return *this + (-rhs); }

    /// Cyclic convolution: exponents add mod M.
    CyclotomicInt operator*(const CyclotomicInt& rhs) const {
        require_same_order(rhs);
        CyclotomicInt out(order_);
        for (long i = 0; i < order_; ++i) {
            const BigInt& a = coeffs_[static_cast<size_t>(i)];
            if (a == 0) continue;
            for (long j = 0; j < order_; ++j) {
                const BigInt& b = rhs.coeffs_[static_cast<size_t>(j)];
                if (b == 0) continue;
                long k = i + j;
                if (k >= order_) k -= order_;
                out.coeffs_[static_cast<size_t>(k)] += a * b;
            }
        }
        return out;
    }

    CyclotomicInt scaled(const BigInt& s) const {
        CyclotomicInt out(order_);
        for (long k = 0; k < order_; ++k) out.coeffs_[static_cast<size_t>(k)] = coeffs_[static_cast<size_t>(k)] * s;
        return out;
    }

    /// Complex conjugation: exponent k -> (M - k) mod M.
    CyclotomicInt conj() const {
        CyclotomicInt out(order_);
        for (long k = 0; k < order_; ++k) out.coeffs_[static_cast<size_t>((order_ - k) % order_)] = coeffs_[static_cast<size_t>(k)];
        return out;
    }

    CyclotomicInt pow(unsigned long e) const {
        CyclotomicInt acc = from_integer(order_, 1);
        CyclotomicInt base = *this;
        while (e > 0) {
            if (e & 1UL) acc = acc * base;
            e >>= 1UL;
            if (e > 0) base = base * base;
        }
        return acc;
    }

    /// Re-express in Z[zeta_M2] for M | M2 via zeta_M -> zeta_M2^(M2/M).
    CyclotomicInt embedded(long target_order) const {
        if (target_order < 1 || target_order % order_ != 0)
            throw std::invalid_argument("CyclotomicInt: embedding target order must be a multiple of the current order");
        const long stride = target_order / order_;
        CyclotomicInt out(target_order);
        for (long k = 0; k < order_; ++k) out.coeffs_[static_cast<size_t>(k * stride)] = coeffs_[static_cast<size_t>(k)];
        return out;
    }

    /// Canonical coefficients modulo Phi_M: exactly phi(M) entries, ascending.
    std::vector<BigInt> reduced() const {
        const CycloPoly& phi = CycloPoly::of(order_);
        const long dd = phi.degree();
        std::vector<BigInt> work = coeffs_;
        for (long i = order_ - 1; i >= dd; --i) {
            BigInt c = work[static_cast<size_t>(i)];
            if (c == 0) continue;
            for (long j = 0; j <= dd; ++j) work[static_cast<size_t>(i - dd + j)] -= c * phi.coeffs()[static_cast<size_t>(j)];
        }
        work.resize(static_cast<size_t>(dd));
        return work;
    }

    bool is_zero() const {
        for (const BigInt& c : reduced())
            if (c != 0) return false;
        return true;
    }

    bool equals(const CyclotomicInt& rhs) const { return (*this - rhs).is_zero(); }

    /// Canonical text form: cyclo(M)[c0,c1,...,c_{phi(M)-1}].
    std::string str() const {
        std::ostringstream os;
        os << "cyclo(" << order_ << ")[";
        const auto red = reduced();
        for (size_t i = 0; i < red.size(); ++i) {
            if (i) os << ',';
            os << red[i];
        }
        os << ']';
        return os.str();
    }

   private:
    static long checked_size(long order) {
        if (order < 1) throw std::invalid_argument("CyclotomicInt: order must be >= 1");
        return order;
    }

    void require_same_order(const CyclotomicInt& rhs) const {
        if (order_ != rhs.order_)
            throw std::invalid_argument("CyclotomicInt: order mismatch (embed into a common order first)");
    }

    long order_;
    std::vector<BigInt> coeffs_;
};

inline long lcm_long(long a, long b) { return std::lcm(a, b); }

}  // namespace polygauss

#endif  // POLYGAUSS_CYCLOTOMIC_HPP
