#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>

namespace kimura {

// Exact rational on int64 numerator/denominator, always reduced, den > 0.
// Intermediates run through __int128; a result whose reduced form does not
// fit int64 throws std::overflow_error instead of wrapping.
class Rational {
public:
    constexpr Rational() = default;
    Rational(std::int64_t n) : num_(n) {}  // NOLINT: implicit by intent
    Rational(std::int64_t num, std::int64_t den) { assign(num, den); }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }

    std::int64_t to_integer() const {
        if (den_ != 1) throw std::domain_error("rational " + str() + " is not an integer");
        return num_;
    }

    Rational operator-() const { return Rational(-num_, den_); }

    Rational& operator+=(const Rational& o) {
        // temper the cross products: a/b + c/d = (a*(d/g) + c*(b/g)) / (b*(d/g))
        std::int64_t g = std::gcd(den_, o.den_);
        __int128 n = static_cast<__int128>(num_) * (o.den_ / g) +
                     static_cast<__int128>(o.num_) * (den_ / g);
        __int128 d = static_cast<__int128>(den_) * (o.den_ / g);
        assign128(n, d);
        return *this;
    }
    Rational& operator-=(const Rational& o) { return *this += -o; }
    Rational& operator*=(const Rational& o) {
        std::int64_t g1 = std::gcd(abs64(num_), o.den_);
        std::int64_t g2 = std::gcd(abs64(o.num_), den_);
        __int128 n = static_cast<__int128>(num_ / g1) * (o.num_ / g2);
        __int128 d = static_cast<__int128>(den_ / g2) * (o.den_ / g1);
        assign128(n, d);
        return *this;
    }
    Rational& operator/=(const Rational& o) {
        if (o.num_ == 0) throw std::domain_error("division by zero rational");
        return *this *= Rational(o.den_, o.num_);
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
    }

    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    // Accepts "a" or "a/b" with optional leading minus signs.
    static Rational parse(std::string_view s) {
        auto slash = s.find('/');
        try {
            if (slash == std::string_view::npos)
                return Rational(std::stoll(std::string(s)));
            return Rational(std::stoll(std::string(s.substr(0, slash))),
                            std::stoll(std::string(s.substr(slash + 1))));
        } catch (const std::logic_error&) {
            throw std::invalid_argument("malformed rational: '" + std::string(s) + "'");
        }
    }

private:
    static std::int64_t abs64(std::int64_t v) { return v < 0 ? -v : v; }

    void assign(std::int64_t n, std::int64_t d) {
        assign128(static_cast<__int128>(n), static_cast<__int128>(d));
    }

    void assign128(__int128 n, __int128 d) {
        if (d == 0) throw std::domain_error("zero denominator");
        if (d < 0) { n = -n; d = -d; }
        __int128 a = n < 0 ? -n : n;
        __int128 g = gcd128(a, d);
        if (g > 1) { n /= g; d /= g; }
        constexpr __int128 kMax = INT64_MAX;
        constexpr __int128 kMin = INT64_MIN;
        if (n > kMax || n < kMin || d > kMax)
            throw std::overflow_error("rational overflow (value outside int64 range)");
        num_ = static_cast<std::int64_t>(n);
        den_ = static_cast<std::int64_t>(d);
    }

    static __int128 gcd128(__int128 a, __int128 b) {
        while (b != 0) { __int128 t = a % b; a = b; b = t; }
        return a;
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

}  // namespace kimura
