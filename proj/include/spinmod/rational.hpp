#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace spinmod {

/// Exact rational number, always stored in lowest terms with a positive
/// denominator. Serialized as "p/q" (the denominator is printed even when 1).
class Rational {
  public:
    Rational() = default;
    Rational(std::int64_t n) : value_(static_cast<long>(n)) {} // NOLINT(implicit)
    Rational(std::int64_t n, std::int64_t d);

    static Rational parse(std::string_view text);

    [[nodiscard]] std::string str() const;
    [[nodiscard]] mpz_class num() const { return value_.get_num(); }
    [[nodiscard]] mpz_class den() const { return value_.get_den(); }
    [[nodiscard]] bool is_integer() const { return value_.get_den() == 1; }
    [[nodiscard]] bool is_zero() const { return sgn(value_) == 0; }
    [[nodiscard]] int sign() const { return sgn(value_); }

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(Rational a) { a.value_ = -a.value_; return a; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

  private:
    mpq_class value_{0};
};

} // namespace spinmod
