#pragma once

// Exact arithmetic in Q(zeta_L), stored in the power basis of Q[x]/Phi_L(x).

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "qweyl/errors.hpp"

namespace qweyl {

using Rational = mpq_class;
using Integer = mpz_class;

/// Coefficients low degree first.
using RationalPoly = std::vector<Rational>;

inline std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

inline std::int64_t euler_phi(std::int64_t n) {
    std::int64_t result = n;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

inline std::vector<std::int64_t> divisors(std::int64_t n) {
    std::vector<std::int64_t> out;
    for (std::int64_t d = 1; d <= n; ++d)
        if (n % d == 0) out.push_back(d);
    return out;
}

namespace poly {

inline void trim(RationalPoly& p) {
    while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

inline RationalPoly mul(const RationalPoly& a, const RationalPoly& b) {
    if (a.empty() || b.empty()) return {};
    RationalPoly out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    trim(out);
    return out;
}

inline RationalPoly sub(const RationalPoly& a, const RationalPoly& b) {
    RationalPoly out(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
    trim(out);
    return out;
}

/// Long division: returns (quotient, remainder). Divisor must be nonzero.
inline std::pair<RationalPoly, RationalPoly> divmod(RationalPoly num, RationalPoly den) {
    trim(num);
    trim(den);
    if (den.empty()) throw DivisionByZero();
    if (num.size() < den.size()) return {RationalPoly{}, num};
    RationalPoly quot(num.size() - den.size() + 1);
    const Rational lead = den.back();
    for (std::size_t shift = quot.size(); shift-- > 0;) {
        const std::size_t k = shift + den.size() - 1;
        if (sgn(num[k]) == 0) continue;
        Rational c = num[k] / lead;
        quot[shift] = c;
        for (std::size_t j = 0; j < den.size(); ++j) num[shift + j] -= c * den[j];
    }
    trim(quot);
    num.resize(den.size() - 1);
    trim(num);
    return {quot, num};
}

} // namespace poly

/// Phi_L with integer coefficients, by exact division of x^L - 1 by Phi_d for the proper divisors d.
inline std::vector<Integer> cyclotomic_polynomial(std::int64_t L) {
    if (L < 1) throw InputError("cyclotomic order must be positive");
    RationalPoly num(static_cast<std::size_t>(L) + 1);
    num[0] = -1;
    num[static_cast<std::size_t>(L)] = 1;
    for (std::int64_t d : divisors(L)) {
        if (d == L) continue;
        auto phi_d = cyclotomic_polynomial(d);
        RationalPoly den(phi_d.begin(), phi_d.end());
        auto [q, r] = poly::divmod(num, den);
        if (!r.empty()) throw VerificationError("cyclotomic division left a remainder");
        num = std::move(q);
    }
    std::vector<Integer> out;
    out.reserve(num.size());
    for (const auto& c : num) {
        if (c.get_den() != 1) throw VerificationError("non-integral cyclotomic coefficient");
        out.push_back(c.get_num());
    }
    return out;
}

/// Immutable per-order context. Instances are memoized for the lifetime of the program.
class CyclotomicField {
public:
    static const CyclotomicField& get(std::int64_t order) {
        static std::mutex mutex;
        static std::map<std::int64_t, std::unique_ptr<CyclotomicField>> cache;
        std::lock_guard<std::mutex> lock(mutex);
        auto it = cache.find(order);
        if (it == cache.end())
            it = cache.emplace(order, std::unique_ptr<CyclotomicField>(new CyclotomicField(order))).first;
        return *it->second;
    }

    std::int64_t order() const { return order_; }
    std::size_t degree() const { return degree_; }
    const RationalPoly& modulus() const { return modulus_; }

    /// Power-basis coefficients of zeta^k, 0 <= k < order.
    const RationalPoly& root_coeffs(std::int64_t k) const {
        return roots_[static_cast<std::size_t>(mod_floor(k, order_))];
    }

    /// Reduces a polynomial of any degree modulo Phi_L into exactly degree() coefficients.
    RationalPoly reduce(RationalPoly p) const {
        for (std::size_t k = p.size(); k-- > degree_;) {
            if (sgn(p[k]) == 0) continue;
            const Rational c = p[k];
            std::size_t shift = k - degree_;
            for (std::size_t j = 0; j < degree_; ++j)
                if (sgn(modulus_[j]) != 0) p[shift + j] -= c * modulus_[j];
            p[k] = 0;
        }
        p.resize(degree_);
        return p;
    }

private:
    explicit CyclotomicField(std::int64_t order) : order_(order) {
        auto phi = cyclotomic_polynomial(order);
        modulus_.assign(phi.begin(), phi.end());
        degree_ = modulus_.size() - 1;
        roots_.reserve(static_cast<std::size_t>(order));
        for (std::int64_t k = 0; k < order; ++k) {
            RationalPoly mono(static_cast<std::size_t>(k) + 1);
            mono[static_cast<std::size_t>(k)] = 1;
            roots_.push_back(reduce(std::move(mono)));
        }
    }

    std::int64_t order_;
    std::size_t degree_ = 0;
    RationalPoly modulus_;
    std::vector<RationalPoly> roots_;
};

/// An element of Q(zeta_L). Canonical: equal values have equal coefficient vectors.
class CycloNum {
public:
    /// Zero of Q (order 1).
    CycloNum() : CycloNum(CyclotomicField::get(1)) {}

    explicit CycloNum(const CyclotomicField& field) : field_(&field), coeffs_(field.degree()) {}

    CycloNum(const CyclotomicField& field, const Rational& value) : CycloNum(field) {
        coeffs_[0] = value;
        coeffs_[0].canonicalize();
    }

    /// Takes arbitrary-length power-basis coefficients and reduces them.
    CycloNum(const CyclotomicField& field, RationalPoly coeffs) : field_(&field) {
        coeffs_ = field.reduce(std::move(coeffs));
    }

    static CycloNum zero(std::int64_t order) { return CycloNum(CyclotomicField::get(order)); }
    static CycloNum one(std::int64_t order) { return CycloNum(CyclotomicField::get(order), Rational(1)); }
    static CycloNum rational(std::int64_t order, const Rational& r) {
        return CycloNum(CyclotomicField::get(order), r);
    }

    const CyclotomicField& field() const { return *field_; }
    std::int64_t order() const { return field_->order(); }
    const RationalPoly& coeffs() const { return coeffs_; }

    bool is_zero() const {
        for (const auto& c : coeffs_)
            if (sgn(c) != 0) return false;
        return true;
    }

    bool is_rational() const {
        for (std::size_t i = 1; i < coeffs_.size(); ++i)
            if (sgn(coeffs_[i]) != 0) return false;
        return true;
    }

    bool is_one() const { return is_rational() && coeffs_[0] == 1; }

    /// Constant coefficient; meaningful when is_rational().
    const Rational& rational_part() const { return coeffs_[0]; }

    CycloNum& operator+=(const CycloNum& o) {
        require_same(o);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        return *this;
    }

    CycloNum& operator-=(const CycloNum& o) {
        require_same(o);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        return *this;
    }

    CycloNum& operator*=(const CycloNum& o) {
        *this = *this * o;
        return *this;
    }

    CycloNum& operator*=(const Rational& r) {
        for (auto& c : coeffs_) c *= r;
        return *this;
    }

    friend CycloNum operator+(CycloNum a, const CycloNum& b) { return a += b; }
    friend CycloNum operator-(CycloNum a, const CycloNum& b) { return a -= b; }

    friend CycloNum operator-(CycloNum a) {
        for (auto& c : a.coeffs_) c = -c;
        return a;
    }

    friend CycloNum operator*(const CycloNum& a, const CycloNum& b) {
        a.require_same(b);
        const std::size_t deg = a.coeffs_.size();
        if (deg == 1) return CycloNum(*a.field_, Rational(a.coeffs_[0] * b.coeffs_[0]));
        RationalPoly prod(2 * deg - 1);
        bool any = false;
        for (std::size_t i = 0; i < deg; ++i) {
            if (sgn(a.coeffs_[i]) == 0) continue;
            for (std::size_t j = 0; j < deg; ++j) {
                if (sgn(b.coeffs_[j]) == 0) continue;
                prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
                any = true;
            }
        }
        if (!any) return CycloNum(*a.field_);
        return CycloNum(*a.field_, std::move(prod));
    }

    friend CycloNum operator*(CycloNum a, const Rational& r) { return a *= r; }
    friend CycloNum operator*(const Rational& r, CycloNum a) { return a *= r; }

    friend bool operator==(const CycloNum& a, const CycloNum& b) {
        return a.order() == b.order() && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const CycloNum& a, const CycloNum& b) { return !(a == b); }

    std::string to_string() const {
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (sgn(coeffs_[i]) == 0) continue;
            Rational c = coeffs_[i];
            if (!first) os << (sgn(c) < 0 ? " - " : " + ");
            else if (sgn(c) < 0) os << "-";
            c = abs(c);
            if (i == 0) os << c.get_str();
            else {
                if (c != 1) os << c.get_str() << "*";
                os << "z" << order();
                if (i > 1) os << "^" << i;
            }
            first = false;
        }
        return first ? "0" : os.str();
    }

private:
    void require_same(const CycloNum& o) const {
        if (field_ != o.field_)
            throw InputError("cyclotomic order mismatch: " + std::to_string(order()) + " vs " +
                             std::to_string(o.order()));
    }

    const CyclotomicField* field_;
    RationalPoly coeffs_;
};

/// zeta_L^k in canonical form.
inline CycloNum make_root(std::int64_t L, std::int64_t k) {
    if (L < 1) throw InputError("cyclotomic order must be positive");
    const auto& field = CyclotomicField::get(L);
    return CycloNum(field, field.root_coeffs(k));
}

/// Multiplicative inverse via the extended Euclidean algorithm against Phi_L.
inline CycloNum inverse(const CycloNum& a) {
    if (a.is_zero()) throw DivisionByZero();
    const auto& field = a.field();
    if (a.is_rational()) return CycloNum(field, Rational(1 / a.rational_part()));

    RationalPoly r0 = field.modulus();
    RationalPoly r1 = a.coeffs();
    poly::trim(r1);
    RationalPoly s0{};   // coefficient of a in r0
    RationalPoly s1{1};  // coefficient of a in r1
    while (!r1.empty()) {
        auto [q, r] = poly::divmod(r0, r1);
        RationalPoly s2 = poly::sub(s0, poly::mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // r0 is the gcd; Phi_L is irreducible so it is a nonzero constant.
    if (r0.size() != 1) throw VerificationError("cyclotomic modulus is not irreducible");
    Rational scale = 1 / r0[0];
    for (auto& c : s0) c *= scale;
    return CycloNum(field, std::move(s0));
}

inline CycloNum operator/(const CycloNum& a, const CycloNum& b) { return a * inverse(b); }

/// Integer power; negative exponents invert.
inline CycloNum pow(const CycloNum& base, std::int64_t e) {
    if (e < 0) return pow(inverse(base), -e);
    CycloNum result = CycloNum::one(base.order());
    CycloNum b = base;
    while (e > 0) {
        if (e & 1) result *= b;
        e >>= 1;
        if (e) b *= b;
    }
    return result;
}

/// Image under Q(zeta_L) -> Q(zeta_L'), zeta_L |-> zeta_L'^(L'/L).
inline CycloNum embed(const CycloNum& a, std::int64_t target) {
    if (target < 1 || target % a.order() != 0)
        throw InputError("cannot embed order " + std::to_string(a.order()) + " into order " +
                         std::to_string(target));
    if (target == a.order()) return a;
    const auto& dst = CyclotomicField::get(target);
    const std::int64_t step = target / a.order();
    RationalPoly out(dst.degree());
    for (std::size_t k = 0; k < a.coeffs().size(); ++k) {
        if (sgn(a.coeffs()[k]) == 0) continue;
        const auto& img = dst.root_coeffs(step * static_cast<std::int64_t>(k));
        for (std::size_t j = 0; j < img.size(); ++j) out[j] += a.coeffs()[k] * img[j];
    }
    return CycloNum(dst, std::move(out));
}

/// 1 + q + ... + q^(k-1).
inline CycloNum q_integer(const CycloNum& q, std::int64_t k) {
    CycloNum sum = CycloNum::zero(q.order());
    CycloNum term = CycloNum::one(q.order());
    for (std::int64_t i = 0; i < k; ++i) {
        sum += term;
        term *= q;
    }
    return sum;
}

/// Exact k-th root of a rational if one exists in Q.
inline std::optional<Rational> rational_root(const Rational& value, std::int64_t k) {
    if (k < 1) return std::nullopt;
    if (sgn(value) == 0) return Rational(0);
    if (sgn(value) < 0 && k % 2 == 0) return std::nullopt;
    auto int_root = [k](Integer v) -> std::optional<Integer> {
        bool neg = sgn(v) < 0;
        v = abs(v);
        Integer r;
        if (mpz_root(r.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(k)) == 0) return std::nullopt;
        return neg ? Integer(-r) : r;
    };
    auto num = int_root(value.get_num());
    auto den = int_root(value.get_den());
    if (!num || !den) return std::nullopt;
    Rational r(*num, *den);
    r.canonicalize();
    return r;
}

/// All elements r * zeta_L^j (r rational) whose k-th power equals value. Other roots are not searched.
inline std::vector<CycloNum> roots_of_unity_times_rational(const CycloNum& value, std::int64_t k) {
    std::vector<CycloNum> out;
    const std::int64_t L = value.order();
    for (std::int64_t j = 0; j < L; ++j) {
        CycloNum shifted = value * make_root(L, -j * k);
        if (!shifted.is_rational()) continue;
        auto r = rational_root(shifted.rational_part(), k);
        if (!r) continue;
        CycloNum cand = make_root(L, j) * *r;
        bool dup = false;
        for (const auto& c : out) dup = dup || c == cand;
        if (!dup) out.push_back(std::move(cand));
    }
    return out;
}

} // namespace qweyl
