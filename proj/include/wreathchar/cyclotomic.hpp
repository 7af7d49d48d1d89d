#pragma once

#include <complex>
#include <cstdlib>
#include <gmpxx.h>
#include <stdexcept>
#include <string>
#include <vector>

namespace wreathchar {

using Rational = mpq_class;
using Integer = mpz_class;

namespace detail {

/// Coefficients of the k-th cyclotomic polynomial, ascending degree,
/// computed by dividing x^k - 1 by the polynomials of the proper divisors.
inline std::vector<long> cyclotomic_polynomial(int k) {
    std::vector<std::vector<long>> phi(static_cast<size_t>(k) + 1);
    for (int e = 1; e <= k; ++e) {
        if (k % e != 0) continue;
        std::vector<long> num(static_cast<size_t>(e) + 1, 0);
        num[0] = -1;
        num[static_cast<size_t>(e)] = 1;
        for (int d = 1; d < e; ++d) {
            if (e % d != 0) continue;
            const std::vector<long>& div = phi[static_cast<size_t>(d)];
            std::vector<long> quot(num.size() - div.size() + 1, 0);
            for (size_t i = quot.size(); i-- > 0;) {
                long lead = num[i + div.size() - 1];
                quot[i] = lead; // divisor is monic
                for (size_t j = 0; j < div.size(); ++j) num[i + j] -= lead * div[j];
            }
            num = std::move(quot);
        }
        phi[static_cast<size_t>(e)] = std::move(num);
    }
    return phi[static_cast<size_t>(k)];
}

} // namespace detail

/// Element of Q(w) with w a primitive k-th root of unity, stored as k
/// rational coefficients (c_0, ..., c_{k-1}) for c_0 + c_1 w + ... +
/// c_{k-1} w^{k-1}. The representation is redundant: equality, integrality
/// and the canonical forms are decided on the remainder modulo the k-th
/// cyclotomic polynomial. For prime k that coincides with the simpler rule
/// "vectors agree up to adding a constant (t, ..., t)", which also remains
/// a valid fast path for every k >= 2 since 1 + w + ... + w^{k-1} = 0.
class CyclotomicNumber {
public:
    explicit CyclotomicNumber(int k) : k_(check_order(k)), coeffs_(static_cast<size_t>(k)) {}

    CyclotomicNumber(int k, std::vector<Rational> coeffs) : k_(check_order(k)), coeffs_(std::move(coeffs)) {
        if (coeffs_.size() != static_cast<size_t>(k_))
            throw std::invalid_argument("cyclotomic: coefficient count must equal k");
    }

    static CyclotomicNumber zero(int k) { return CyclotomicNumber(k); }

    static CyclotomicNumber integer(int k, const Rational& value) {
        CyclotomicNumber x(k);
        x.coeffs_[0] = value;
        return x;
    }

    /// w^(e mod k) as a unit coefficient vector.
    static CyclotomicNumber omega_power(int k, long e) {
        CyclotomicNumber x(k);
        long r = e % k;
        if (r < 0) r += k;
        x.coeffs_[static_cast<size_t>(r)] = 1;
        return x;
    }

    int order() const { return k_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    const Rational& coeff(int i) const { return coeffs_.at(static_cast<size_t>(i)); }

    CyclotomicNumber operator-() const {
        CyclotomicNumber r(k_);
        for (size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] = -coeffs_[i];
        return r;
    }

    CyclotomicNumber operator+(const CyclotomicNumber& other) const {
        check_same_order(other);
        CyclotomicNumber r(k_);
        for (size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] = coeffs_[i] + other.coeffs_[i];
        return r;
    }

    CyclotomicNumber operator-(const CyclotomicNumber& other) const { return *this + (-other); }

    /// Exponents are folded mod k; no further canonicalization happens here.
    CyclotomicNumber operator*(const CyclotomicNumber& other) const {
        check_same_order(other);
        CyclotomicNumber r(k_);
        for (size_t i = 0; i < coeffs_.size(); ++i) {
            if (coeffs_[i] == 0) continue;
            for (size_t j = 0; j < coeffs_.size(); ++j) {
                if (other.coeffs_[j] == 0) continue;
                r.coeffs_[(i + j) % static_cast<size_t>(k_)] += coeffs_[i] * other.coeffs_[j];
            }
        }
        return r;
    }

    CyclotomicNumber operator*(const Rational& s) const {
        CyclotomicNumber r(k_);
        for (size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] = coeffs_[i] * s;
        return r;
    }

    CyclotomicNumber& operator+=(const CyclotomicNumber& other) { return *this = *this + other; }
    CyclotomicNumber& operator*=(const CyclotomicNumber& other) { return *this = *this * other; }

    /// Equality in Q(w), i.e. modulo the k-th cyclotomic polynomial.
    bool operator==(const CyclotomicNumber& other) const {
        check_same_order(other);
        if (k_ == 1) return coeffs_[0] == other.coeffs_[0];
        // Fast path: a constant coefficient difference is always invisible.
        Rational d0 = coeffs_[0] - other.coeffs_[0];
        bool constant = true;
        for (size_t i = 1; i < coeffs_.size() && constant; ++i)
            if (coeffs_[i] - other.coeffs_[i] != d0) constant = false;
        if (constant) return true;
        return (*this - other).reduced() == zero(k_).reduced();
    }

    bool operator!=(const CyclotomicNumber& other) const { return !(*this == other); }

    bool is_zero() const { return *this == zero(k_); }

    /// True when the value lies in Z[w] (integer coefficients on the power
    /// basis of the reduced representative).
    bool is_integral() const {
        if (k_ == 1) return coeffs_[0].get_den() == 1;
        bool shifted_integer = true;
        for (size_t i = 1; i < coeffs_.size() && shifted_integer; ++i)
            if (Rational(coeffs_[i] - coeffs_[0]).get_den() != 1) shifted_integer = false;
        if (shifted_integer) return true;
        for (const Rational& c : reduced())
            if (c.get_den() != 1) return false;
        return true;
    }

    /// Canonical integer-coefficient representative whose coefficient sum
    /// lies in {0, ..., k-1}: reduce modulo the cyclotomic polynomial and
    /// shift by a multiple of (1, ..., 1). Requires an integral value. For
    /// k = 1 the representation is already unique and is returned as is.
    CyclotomicNumber standard_form() const {
        if (!is_integral()) throw std::domain_error("cyclotomic: value is not integral");
        if (k_ == 1) return *this;
        std::vector<Rational> red = reduced();
        Integer sum = 0;
        for (const Rational& c : red) sum += c.get_num();
        Integer shift;
        mpz_fdiv_q_ui(shift.get_mpz_t(), sum.get_mpz_t(), static_cast<unsigned long>(k_));
        CyclotomicNumber r(k_);
        for (size_t i = 0; i < red.size(); ++i) r.coeffs_[i] = red[i] - Rational(shift);
        for (size_t i = red.size(); i < coeffs_.size(); ++i) r.coeffs_[i] = -Rational(shift);
        return r;
    }

    /// Sum of the standard-form coefficients; lies in {0, ..., k-1}.
    /// Trivially 0 for k = 1.
    int digit_sum() const {
        if (!is_integral()) throw std::domain_error("cyclotomic: value is not integral");
        if (k_ == 1) return 0;
        Integer sum = 0;
        for (const Rational& c : reduced()) sum += c.get_num();
        Integer r;
        mpz_fdiv_r_ui(r.get_mpz_t(), sum.get_mpz_t(), static_cast<unsigned long>(k_));
        return static_cast<int>(r.get_si());
    }

    /// Complex conjugation, i.e. w -> w^{-1}: reverses the coefficients.
    CyclotomicNumber conjugate() const {
        CyclotomicNumber r(k_);
        r.coeffs_[0] = coeffs_[0];
        for (int i = 1; i < k_; ++i) r.coeffs_[static_cast<size_t>(k_ - i)] = coeffs_[static_cast<size_t>(i)];
        return r;
    }

    /// Numeric embedding at w = e^{2*pi*i/k}. Display and sanity checks
    /// only; never used for decisions.
    std::complex<double> to_complex() const {
        std::complex<double> acc(0.0, 0.0);
        const double two_pi = 6.283185307179586476925286766559;
        for (int i = 0; i < k_; ++i) {
            double c = coeffs_[static_cast<size_t>(i)].get_d();
            double ang = two_pi * i / k_;
            acc += c * std::complex<double>(std::cos(ang), std::sin(ang));
        }
        return acc;
    }

private:
    static int check_order(int k) {
        if (k < 1) throw std::invalid_argument("cyclotomic: order k must be >= 1");
        return k;
    }

    void check_same_order(const CyclotomicNumber& other) const {
        if (k_ != other.k_) throw std::invalid_argument("cyclotomic: mismatched orders");
    }

    /// Remainder modulo the k-th cyclotomic polynomial, length phi(k).
    std::vector<Rational> reduced() const {
        std::vector<long> phi = detail::cyclotomic_polynomial(k_);
        size_t deg = phi.size() - 1;
        std::vector<Rational> c = coeffs_;
        for (size_t i = c.size(); i-- > deg;) {
            if (c[i] == 0) continue;
            Rational factor = c[i];
            for (size_t j = 0; j + 1 < phi.size(); ++j) c[i - deg + j] -= factor * phi[j];
            c[i] = 0;
        }
        c.resize(deg);
        return c;
    }

    int k_;
    std::vector<Rational> coeffs_;
};

inline CyclotomicNumber omega_power(int k, long e) { return CyclotomicNumber::omega_power(k, e); }

namespace detail {

inline void append_term(std::string& out, const Rational& c, int e) {
    if (c == 0) return;
    std::string cs = c.get_str();
    bool neg = cs.size() && cs[0] == '-';
    std::string mag = neg ? cs.substr(1) : cs;
    if (out.empty())
        out += neg ? "-" : "";
    else
        out += neg ? "-" : "+";
    if (e == 0) {
        out += mag;
    } else {
        if (mag != "1") out += mag + "*";
        out += (e == 1) ? "w" : "w^" + std::to_string(e);
    }
}

} // namespace detail

/// Renders an integral value in standard form as a polynomial in `w`,
/// e.g. "-w+w^2", "2*w", "0".
inline std::string to_standard_string(const CyclotomicNumber& x) {
    CyclotomicNumber s = x.standard_form();
    std::string out;
    for (int i = 0; i < s.order(); ++i) detail::append_term(out, s.coeff(i), i);
    return out.empty() ? "0" : out;
}

/// Renders any value (rational coefficients allowed) compactly: among the
/// equivalent representatives, shifts by the most frequent coefficient so
/// as many entries as possible vanish; ties prefer zeroing the highest
/// exponents. Values at k = 1 are plain rationals.
inline std::string to_display_string(const CyclotomicNumber& x) {
    int k = x.order();
    Rational best_shift = 0;
    std::vector<bool> best_zeros;
    auto better = [&](const std::vector<bool>& a, const std::vector<bool>& b) {
        int ca = 0, cb = 0;
        for (bool v : a) ca += v;
        for (bool v : b) cb += v;
        if (ca != cb) return ca > cb;
        for (int i = k - 1; i >= 0; --i)
            if (a[static_cast<size_t>(i)] != b[static_cast<size_t>(i)]) return a[static_cast<size_t>(i)];
        return false;
    };
    if (k > 1) {
        for (int i = 0; i < k; ++i) {
            const Rational& cand = x.coeff(i);
            std::vector<bool> zeros(static_cast<size_t>(k));
            for (int j = 0; j < k; ++j) zeros[static_cast<size_t>(j)] = (x.coeff(j) == cand);
            if (best_zeros.empty() || better(zeros, best_zeros)) {
                best_zeros = std::move(zeros);
                best_shift = cand;
            }
        }
    }
    std::string out;
    for (int i = 0; i < k; ++i) detail::append_term(out, x.coeff(i) - best_shift, i);
    return out.empty() ? "0" : out;
}

/// Parses the polynomial rendering back into a value, e.g. "1-w", "2*w^2",
/// "-5/18*w", "0". Whitespace is ignored.
inline CyclotomicNumber parse_cyclotomic(int k, const std::string& text) {
    CyclotomicNumber result(k);
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw std::invalid_argument("cyclotomic: empty string");
    size_t pos = 0;
    while (pos < s.size()) {
        int sign = 1;
        if (s[pos] == '+' || s[pos] == '-') {
            sign = (s[pos] == '-') ? -1 : 1;
            ++pos;
        }
        size_t start = pos;
        while (pos < s.size() && s[pos] != '+' && s[pos] != '-') ++pos;
        std::string term = s.substr(start, pos - start);
        if (term.empty()) throw std::invalid_argument("cyclotomic: bad term in '" + text + "'");
        Rational coeff = 1;
        int expo = 0;
        size_t wpos = term.find('w');
        if (wpos == std::string::npos) {
            coeff = Rational(term);
        } else {
            std::string cpart = term.substr(0, wpos);
            if (!cpart.empty() && cpart.back() == '*') cpart.pop_back();
            if (!cpart.empty()) coeff = Rational(cpart);
            std::string epart = term.substr(wpos + 1);
            if (epart.empty())
                expo = 1;
            else if (epart[0] == '^')
                expo = std::atoi(epart.c_str() + 1);
            else
                throw std::invalid_argument("cyclotomic: bad exponent in '" + text + "'");
        }
        coeff.canonicalize();
        result += omega_power(k, expo) * (Rational(sign) * coeff);
    }
    return result;
}

} // namespace wreathchar
