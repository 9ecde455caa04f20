#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "enumseq/integer.hpp"

namespace enumseq {

// Residue class modulo a runtime modulus m, 0 < m < 2^63.
struct ModInt {
    std::uint64_t value = 0;
    std::uint64_t modulus = 1;

    ModInt() = default;
    ModInt(std::uint64_t v, std::uint64_t m) : value(v % m), modulus(m) {
        if (m == 0) throw std::invalid_argument("ModInt: zero modulus");
    }

    friend ModInt operator+(const ModInt& a, const ModInt& b) {
        check(a, b);
        std::uint64_t s = a.value + b.value;
        if (s >= a.modulus) s -= a.modulus;
        return ModInt(s, a.modulus);
    }
    friend ModInt operator-(const ModInt& a, const ModInt& b) {
        check(a, b);
        std::uint64_t s = a.value + (a.modulus - b.value);
        if (s >= a.modulus) s -= a.modulus;
        return ModInt(s, a.modulus);
    }
    friend ModInt operator*(const ModInt& a, const ModInt& b) {
        check(a, b);
        unsigned __int128 p = static_cast<unsigned __int128>(a.value) * b.value;
        return ModInt(static_cast<std::uint64_t>(p % a.modulus), a.modulus);
    }
    friend bool operator==(const ModInt& a, const ModInt& b) {
        return a.modulus == b.modulus && a.value == b.value;
    }

private:
    static void check(const ModInt& a, const ModInt& b) {
        if (a.modulus != b.modulus) throw std::invalid_argument("ModInt: modulus mismatch");
    }
};

inline Integer scalar_zero_like(const Integer&) { return Integer(0); }
inline Rational scalar_zero_like(const Rational&) { return Rational(0); }
inline ModInt scalar_zero_like(const ModInt& s) { return ModInt(0, s.modulus); }

inline bool scalar_is_zero(const Integer& a) { return a == 0; }
inline bool scalar_is_zero(const Rational& a) { return a == 0; }
inline bool scalar_is_zero(const ModInt& a) { return a.value == 0; }

// Dense univariate polynomial with exact coefficients. The zero polynomial
// has an empty coefficient vector and degree() == -1.
template <typename T>
class DensePoly {
public:
    DensePoly() = default;
    explicit DensePoly(T zero_exemplar) : zero_(std::move(zero_exemplar)) {}

    static DensePoly constant(T c) {
        DensePoly p(scalar_zero_like(c));
        p.coeffs_.push_back(std::move(c));
        p.trim();
        return p;
    }

    static DensePoly from_coefficients(std::vector<T> cs) {
        DensePoly p;
        if (!cs.empty()) p.zero_ = scalar_zero_like(cs.front());
        p.coeffs_ = std::move(cs);
        p.trim();
        return p;
    }

    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }

    T coeff(std::size_t m) const {
        if (m < coeffs_.size()) return coeffs_[m];
        return zero_;
    }

    const std::vector<T>& coefficients() const { return coeffs_; }

    // Multiply by the linear factor (a + b*x), optionally truncating the
    // result so only coefficients of degree < keep_below survive. Zero (or
    // negative) keep_below means no truncation.
    void mul_linear(const T& a, const T& b, long keep_below = 0) {
        std::size_t cap = keep_below > 0 ? static_cast<std::size_t>(keep_below)
                                         : coeffs_.size() + 1;
        std::vector<T> out(std::min(coeffs_.size() + 1, cap), zero_);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (i < out.size()) out[i] = out[i] + a * coeffs_[i];
            if (i + 1 < out.size()) out[i + 1] = out[i + 1] + b * coeffs_[i];
        }
        coeffs_ = std::move(out);
        trim();
    }

    friend DensePoly operator+(const DensePoly& a, const DensePoly& b) {
        DensePoly r = a.coeffs_.size() >= b.coeffs_.size() ? a : b;
        const DensePoly& small = a.coeffs_.size() >= b.coeffs_.size() ? b : a;
        for (std::size_t i = 0; i < small.coeffs_.size(); ++i)
            r.coeffs_[i] = r.coeffs_[i] + small.coeffs_[i];
        r.trim();
        return r;
    }

    friend bool operator==(const DensePoly& a, const DensePoly& b) {
        return a.coeffs_ == b.coeffs_;
    }

private:
    void trim() {
        while (!coeffs_.empty() && scalar_is_zero(coeffs_.back())) coeffs_.pop_back();
    }

    std::vector<T> coeffs_;
    T zero_{};
};

template <typename T>
DensePoly<T> poly_mul(const DensePoly<T>& a, const DensePoly<T>& b) {
    if (a.degree() < 0 || b.degree() < 0) return DensePoly<T>();
    T zero = scalar_zero_like(a.coefficients().front());
    std::vector<T> out(static_cast<std::size_t>(a.degree() + b.degree()) + 1, zero);
    for (std::size_t i = 0; i < a.coefficients().size(); ++i) {
        const T& ai = a.coefficients()[i];
        if (scalar_is_zero(ai)) continue;
        for (std::size_t j = 0; j < b.coefficients().size(); ++j)
            out[i + j] = out[i + j] + ai * b.coefficients()[j];
    }
    return DensePoly<T>::from_coefficients(std::move(out));
}

template <typename T>
T poly_coeff(const DensePoly<T>& p, std::size_t m) {
    return p.coeff(m);
}

using IntPoly = DensePoly<Integer>;
using RatPoly = DensePoly<Rational>;
using ModPoly = DensePoly<ModInt>;

// Evaluates p at the point x by Horner's rule.
inline Rational poly_eval(const RatPoly& p, const Rational& x) {
    Rational acc(0);
    for (long i = p.degree(); i >= 0; --i) acc = acc * x + p.coeff(static_cast<std::size_t>(i));
    return acc;
}

}  // namespace enumseq
