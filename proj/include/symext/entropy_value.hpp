#pragma once

#include <cstdint>
#include <compare>
#include <iosfwd>
#include <optional>
#include <string>

namespace symext {

// Exact rational with 64-bit numerator/denominator; overflow raises ResourceError.
class Rational {
public:
    constexpr Rational() = default;
    constexpr Rational(std::int64_t n) : num_(n) {}
    Rational(std::int64_t n, std::int64_t d);

    std::int64_t numerator() const { return num_; }
    std::int64_t denominator() const { return den_; }

    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);
    Rational operator-() const;

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational&, const Rational&) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

Rational floor_div(const Rational& r);  // floor as a Rational with denominator 1

// Parses "p/q", "p" or a finite decimal like "0.25".
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& r);
double to_double(const Rational& r);

// Exact number of bits, or +inf.
class Entropy {
public:
    Entropy() = default;
    Entropy(Rational v) : value_(v) {}
    Entropy(std::int64_t v) : value_(v) {}
    Entropy(int v) : value_(v) {}

    static Entropy infinity() {
        Entropy e;
        e.inf_ = true;
        return e;
    }
    // "inf" or anything parse_rational accepts.
    static Entropy parse(const std::string& text);

    bool is_infinite() const { return inf_; }
    bool is_finite() const { return !inf_; }
    // Throws InternalError on +inf.
    const Rational& value() const;

    double approx() const;
    std::string str() const;

    Entropy& operator+=(const Entropy& o);
    // inf - finite = inf; anything - inf is rejected.
    Entropy& operator-=(const Entropy& o);

    friend Entropy operator+(Entropy a, const Entropy& b) { return a += b; }
    friend Entropy operator-(Entropy a, const Entropy& b) { return a -= b; }

    friend bool operator==(const Entropy& a, const Entropy& b) {
        return a.inf_ == b.inf_ && (a.inf_ || a.value_ == b.value_);
    }
    friend std::strong_ordering operator<=>(const Entropy& a, const Entropy& b);

private:
    Rational value_{0};
    bool inf_ = false;
};

inline Entropy max(const Entropy& a, const Entropy& b) { return a < b ? b : a; }
inline Entropy min(const Entropy& a, const Entropy& b) { return a < b ? a : b; }

std::ostream& operator<<(std::ostream& os, const Entropy& e);

// Closed rational interval around a value that is usually irrational.
struct Bracket {
    Rational lo{0};
    Rational hi{0};
    bool converged = true;

    bool exact() const { return lo == hi; }
    Rational width() const { return hi - lo; }
    bool contains(double x) const;
    std::string str() const;
};

// Bracket for (1/n) log2(count); exact when count is a power of two.
Bracket log2_bracket(std::uint64_t count, std::int64_t n = 1);

// Bracket for log2(x) given x > 0 as a double; widened by `slack` and rounded outward.
Bracket log2_bracket_of(double x, double slack = 1e-12);

// Outward rounding of a double interval onto dyadic rationals.
Bracket outward(double lo, double hi);

// Bracket arithmetic.
Bracket operator+(const Bracket& a, const Bracket& b);
Bracket scale(const Bracket& a, const Rational& w);
Bracket max(const Bracket& a, const Bracket& b);

// floor(2^x) for finite x >= 0, exact.
std::uint64_t floor_pow2(const Rational& x);

}  // namespace symext
