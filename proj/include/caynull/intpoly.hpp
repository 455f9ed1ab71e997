#pragma once

/**
 * @file intpoly.hpp
 * @brief Exact integer-coefficient polynomial arithmetic.
 *
 * Polynomials are dense coefficient sequences over arbitrary-precision
 * integers (index = degree). The canonical form has no trailing zero
 * coefficients; the zero polynomial is the empty sequence and reports
 * degree -1. All arithmetic is exact: add, subtract, multiply, and
 * division by a monic divisor never round.
 *
 * Also provides the number-theoretic helpers the cyclotomic machinery
 * needs: cyclotomic polynomials Phi_d (memoized, computed by recursive
 * exact division of x^d - 1), Euler's totient, divisor enumeration, and
 * evaluation at roots of unity (the one deliberately inexact operation,
 * for display and numeric cross-checks only).
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <cstddef>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace caynull {

using bigint = boost::multiprecision::cpp_int;

class int_polynomial {
public:
    int_polynomial() = default;

    explicit int_polynomial(std::vector<bigint> coeffs) : coeffs_(std::move(coeffs)) {
        trim();
    }

    /// c * x^degree
    static int_polynomial monomial(int degree, bigint c = 1) {
        if (degree < 0) throw std::invalid_argument("monomial: negative degree");
        std::vector<bigint> v(static_cast<std::size_t>(degree) + 1);
        v.back() = std::move(c);
        return int_polynomial(std::move(v));
    }

    /// sum of x^k over the exponent set (all coefficients 0/1)
    static int_polynomial from_exponents(const std::set<int>& exponents) {
        if (exponents.empty()) return {};
        std::vector<bigint> v(static_cast<std::size_t>(*exponents.rbegin()) + 1);
        for (int k : exponents) {
            if (k < 0) throw std::invalid_argument("from_exponents: negative exponent");
            v[static_cast<std::size_t>(k)] = 1;
        }
        return int_polynomial(std::move(v));
    }

    bool is_zero() const { return coeffs_.empty(); }

    /// Degree of the zero polynomial is the distinguished value -1.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

    /// Coefficient of x^k; zero outside the stored range.
    const bigint& coeff(int k) const {
        static const bigint zero{0};
        if (k < 0 || static_cast<std::size_t>(k) >= coeffs_.size()) return zero;
        return coeffs_[static_cast<std::size_t>(k)];
    }

    const std::vector<bigint>& coefficients() const { return coeffs_; }

    friend int_polynomial operator+(const int_polynomial& a, const int_polynomial& b) {
        std::vector<bigint> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i < a.coeffs_.size()) v[i] += a.coeffs_[i];
            if (i < b.coeffs_.size()) v[i] += b.coeffs_[i];
        }
        return int_polynomial(std::move(v));
    }

    friend int_polynomial operator-(const int_polynomial& a, const int_polynomial& b) {
        std::vector<bigint> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i < a.coeffs_.size()) v[i] += a.coeffs_[i];
            if (i < b.coeffs_.size()) v[i] -= b.coeffs_[i];
        }
        return int_polynomial(std::move(v));
    }

    friend int_polynomial operator-(const int_polynomial& a) {
        std::vector<bigint> v(a.coeffs_);
        for (auto& c : v) c = -c;
        return int_polynomial(std::move(v));
    }

    friend int_polynomial operator*(const int_polynomial& a, const int_polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<bigint> v(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                v[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return int_polynomial(std::move(v));
    }

    friend bool operator==(const int_polynomial& a, const int_polynomial& b) {
        return a.coeffs_ == b.coeffs_;
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<bigint> coeffs_;
};

/// x^n - 1
inline int_polynomial power_minus_one(int n) {
    if (n < 1) throw std::invalid_argument("power_minus_one: n must be positive");
    std::vector<bigint> v(static_cast<std::size_t>(n) + 1);
    v[0] = -1;
    v.back() = 1;
    return int_polynomial(std::move(v));
}

struct poly_division {
    int_polynomial quotient;
    int_polynomial remainder;
};

/// Long division by a monic divisor. Exact over the integers because the
/// leading coefficient is 1; throws if the divisor is not monic.
inline poly_division divmod_monic(const int_polynomial& dividend, const int_polynomial& divisor) {
    if (!divisor.is_monic())
        throw std::invalid_argument("divmod_monic: divisor must be monic and nonzero");
    if (dividend.is_zero() || dividend.degree() < divisor.degree())
        return {int_polynomial{}, dividend};

    std::vector<bigint> rem(dividend.coefficients());
    const int dd = divisor.degree();
    std::vector<bigint> quot(rem.size() - static_cast<std::size_t>(dd));
    for (int k = static_cast<int>(rem.size()) - 1; k >= dd; --k) {
        bigint c = rem[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        quot[static_cast<std::size_t>(k - dd)] = c;
        for (int j = 0; j <= dd; ++j)
            rem[static_cast<std::size_t>(k - dd + j)] -= c * divisor.coeff(j);
    }
    return {int_polynomial(std::move(quot)), int_polynomial(std::move(rem))};
}

/// True iff q = p * h for some integer polynomial h. The zero polynomial is
/// divisible by every p. p must be monic (all callers pass cyclotomics).
inline bool divides(const int_polynomial& p, const int_polynomial& q) {
    if (!p.is_monic())
        throw std::invalid_argument("divides: divisor must be monic and nonzero");
    if (q.is_zero()) return true;
    if (q.degree() < p.degree()) return false;
    return divmod_monic(q, p).remainder.is_zero();
}

/// All positive divisors of n, ascending.
inline std::vector<int> divisors(int n) {
    if (n < 1) throw std::invalid_argument("divisors: n must be positive");
    std::vector<int> small, large;
    for (int d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        small.push_back(d);
        if (d != n / d) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

/// Euler's totient by prime factorization.
inline int totient(int n) {
    if (n < 1) throw std::invalid_argument("totient: n must be positive");
    int result = n;
    int m = n;
    for (int p = 2; p * p <= m; ++p) {
        if (m % p != 0) continue;
        while (m % p == 0) m /= p;
        result -= result / p;
    }
    if (m > 1) result -= result / m;
    return result;
}

namespace detail {

inline std::map<int, int_polynomial>& cyclotomic_cache() {
    static std::map<int, int_polynomial> cache;
    return cache;
}

inline std::shared_mutex& cyclotomic_mutex() {
    static std::shared_mutex m;
    return m;
}

}  // namespace detail

/// The d-th cyclotomic polynomial: Phi_d = (x^d - 1) / prod of Phi_e over
/// proper divisors e of d. Monic with integer coefficients; memoized
/// process-wide (census runs re-query the same d constantly).
inline int_polynomial cyclotomic(int d) {
    if (d < 1) throw std::invalid_argument("cyclotomic: d must be positive");
    {
        std::shared_lock lock(detail::cyclotomic_mutex());
        auto it = detail::cyclotomic_cache().find(d);
        if (it != detail::cyclotomic_cache().end()) return it->second;
    }
    int_polynomial result;
    if (d == 1) {
        result = int_polynomial(std::vector<bigint>{-1, 1});
    } else {
        int_polynomial num = power_minus_one(d);
        for (int e : divisors(d)) {
            if (e == d) continue;
            auto div = divmod_monic(num, cyclotomic(e));
            num = std::move(div.quotient);  // remainder is zero by construction
        }
        result = std::move(num);
    }
    std::unique_lock lock(detail::cyclotomic_mutex());
    return detail::cyclotomic_cache().emplace(d, std::move(result)).first->second;
}

/// p evaluated at e^{2*pi*i*j/n}. Floating-point; zero tests against this
/// value are display/cross-check only -- singularity decisions always go
/// through exact division. Exponents are reduced mod n before the table
/// lookup so each term carries only one unit roundoff.
inline std::complex<double> eval_at_unity_root(const int_polynomial& p, int n, int j) {
    if (n < 1) throw std::invalid_argument("eval_at_unity_root: n must be positive");
    if (j < 0 || j >= n) throw std::invalid_argument("eval_at_unity_root: j out of [0,n)");
    constexpr double two_pi = 6.283185307179586476925286766559;
    std::vector<std::complex<double>> roots(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k)
        roots[static_cast<std::size_t>(k)] = std::polar(1.0, two_pi * k / n);
    std::complex<double> sum{0.0, 0.0};
    for (int k = 0; k <= p.degree(); ++k) {
        const bigint& c = p.coeff(k);
        if (c == 0) continue;
        long long idx = (static_cast<long long>(j) * k) % n;
        sum += c.convert_to<double>() * roots[static_cast<std::size_t>(idx)];
    }
    return sum;
}

/// Human-readable form, terms ascending: "-1 + x + x^3", "0", "2x^2 - x^4".
inline std::string to_string(const int_polynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int k = 0; k <= p.degree(); ++k) {
        const bigint& c = p.coeff(k);
        if (c == 0) continue;
        const bool negative = c < 0;
        bigint mag = negative ? bigint(-c) : c;
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        const bool unit = (mag == 1);
        if (k == 0 || !unit) out += mag.str();
        if (k == 1) out += "x";
        else if (k > 1) out += "x^" + std::to_string(k);
    }
    return out;
}

}  // namespace caynull
