#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace stanley {

using Int = std::int64_t;

// All sequence arithmetic is fixed-width and checked: overflow is a hard
// error, never a silent wraparound.
inline Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in addition");
    return r;
}

inline Int checked_sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in subtraction");
    return r;
}

inline Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in multiplication");
    return r;
}

inline Int pow3(int k) {
    Int r = 1;
    for (int i = 0; i < k; ++i) r = checked_mul(r, 3);
    return r;
}

inline Int pow2(int k) {
    if (k < 0 || k >= 62) throw std::overflow_error("2^k out of range");
    return Int{1} << k;
}

// Exact rational over checked 64-bit integers, always normalized
// (gcd 1, positive denominator).
struct Rational {
    Int num = 0;
    Int den = 1;

    Rational() = default;
    Rational(Int n) : num(n), den(1) {}
    Rational(Int n, Int d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw std::domain_error("rational with zero denominator");
        if (den < 0) { num = checked_sub(0, num); den = checked_sub(0, den); }
        Int g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(checked_add(checked_mul(a.num, b.den), checked_mul(b.num, a.den)),
                        checked_mul(a.den, b.den));
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(checked_sub(checked_mul(a.num, b.den), checked_mul(b.num, a.den)),
                        checked_mul(a.den, b.den));
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(checked_mul(a.num, b.num), checked_mul(a.den, b.den));
    }
    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator==(const Rational& a, Int b) { return a.num == b && a.den == 1; }

    bool is_integer() const { return den == 1; }
    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }

    static Rational parse(const std::string& s) {
        auto slash = s.find('/');
        if (slash == std::string::npos) return Rational(std::stoll(s));
        return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
    }
};

}  // namespace stanley
