#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace mpg {

/// Exact fraction num/den, always reduced with den >= 1.
class Rational
{
public:
    constexpr Rational() = default;
    Rational(std::int64_t num, std::int64_t den = 1);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    Rational operator-() const;
    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);

    friend bool operator==(const Rational& a, const Rational& b) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    /// Largest integer <= this.
    std::int64_t floor() const;

    /// "num/den", e.g. "-1/1".
    std::string str() const;

    /// Parses "p/q" or "p".
    static Rational parse(const std::string& text);

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

} // namespace mpg
