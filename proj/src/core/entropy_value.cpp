#include "symext/entropy_value.hpp"

#include "symext/errors.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <bit>
#include <climits>
#include <numeric>
#include <cmath>
#include <ostream>
#include <sstream>

namespace symext {

namespace {

using i128 = __int128;

std::int64_t narrow(i128 v) {
    if (v > INT64_MAX || v < -INT64_MAX) throw ResourceError("rational arithmetic overflow");
    return static_cast<std::int64_t>(v);
}

i128 gcd128(i128 a, i128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

Rational make(i128 n, i128 d) {
    if (d == 0) throw ArgumentError("zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    i128 g = gcd128(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    return Rational(narrow(n), narrow(d));
}

}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d) {
    if (d == 0) throw ArgumentError("zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    std::int64_t g = std::gcd(n, d);
    num_ = g ? n / g : n;
    den_ = g ? d / g : d;
}

Rational& Rational::operator+=(const Rational& o) {
    return *this = make(i128(num_) * o.den_ + i128(o.num_) * den_, i128(den_) * o.den_);
}

Rational& Rational::operator-=(const Rational& o) {
    return *this = make(i128(num_) * o.den_ - i128(o.num_) * den_, i128(den_) * o.den_);
}

Rational& Rational::operator*=(const Rational& o) { return *this = make(i128(num_) * o.num_, i128(den_) * o.den_); }

Rational& Rational::operator/=(const Rational& o) {
    if (o.num_ == 0) throw ArgumentError("division by zero");
    return *this = make(i128(num_) * o.den_, i128(den_) * o.num_);
}

Rational Rational::operator-() const { return Rational(-num_, den_); }

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return i128(a.num_) * b.den_ <=> i128(b.num_) * a.den_;
}

Rational floor_div(const Rational& r) {
    std::int64_t q = r.numerator() / r.denominator();
    if (r.numerator() % r.denominator() != 0 && r.numerator() < 0) --q;
    return Rational(q);
}

namespace {

std::int64_t parse_int(const std::string& s, const std::string& whole) {
    if (s.empty()) throw ArgumentError("malformed rational '" + whole + "'");
    std::size_t pos = 0;
    std::int64_t v = 0;
    try {
        v = std::stoll(s, &pos);
    } catch (const std::exception&) {
        throw ArgumentError("malformed rational '" + whole + "'");
    }
    if (pos != s.size()) throw ArgumentError("malformed rational '" + whole + "'");
    return v;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    if (auto slash = text.find('/'); slash != std::string::npos) {
        auto num = parse_int(text.substr(0, slash), text);
        auto den = parse_int(text.substr(slash + 1), text);
        if (den == 0) throw ArgumentError("zero denominator in '" + text + "'");
        return Rational(num, den);
    }
    if (auto dot = text.find('.'); dot != std::string::npos) {
        std::string frac = text.substr(dot + 1);
        if (frac.size() > 15 || frac.find_first_not_of("0123456789") != std::string::npos)
            throw ArgumentError("malformed rational '" + text + "'");
        std::string head = text.substr(0, dot);
        bool neg = !head.empty() && head[0] == '-';
        std::int64_t den = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
        std::int64_t ip = (head.empty() || head == "-") ? 0 : parse_int(head, text);
        std::int64_t fp = frac.empty() ? 0 : parse_int(frac, text);
        Rational r = Rational(ip) + Rational(neg ? -fp : fp, den);
        return r;
    }
    return Rational(parse_int(text, text));
}

std::string to_string(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

double to_double(const Rational& r) {
    return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

Entropy Entropy::parse(const std::string& text) {
    if (text == "inf" || text == "+inf" || text == "infinity") return infinity();
    return Entropy(parse_rational(text));
}

const Rational& Entropy::value() const {
    if (inf_) throw InternalError("value() of an infinite entropy");
    return value_;
}

double Entropy::approx() const { return inf_ ? INFINITY : to_double(value_); }

std::string Entropy::str() const { return inf_ ? "inf" : to_string(value_); }

Entropy& Entropy::operator+=(const Entropy& o) {
    if (inf_ || o.inf_) {
        inf_ = true;
        value_ = 0;
    } else {
        value_ += o.value_;
    }
    return *this;
}

Entropy& Entropy::operator-=(const Entropy& o) {
    if (o.inf_) throw ArgumentError("subtracting an infinite entropy");
    if (!inf_) value_ -= o.value_;
    return *this;
}

std::strong_ordering operator<=>(const Entropy& a, const Entropy& b) {
    if (a.inf_ || b.inf_) return a.inf_ <=> b.inf_;
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (b.value_ < a.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Entropy& e) { return os << e.str(); }

bool Bracket::contains(double x) const { return to_double(lo) <= x && x <= to_double(hi); }

std::string Bracket::str() const { return "[" + to_string(lo) + ", " + to_string(hi) + "]"; }

namespace {

constexpr std::int64_t kDyadic = std::int64_t{1} << 40;

}  // namespace

Bracket outward(double lo, double hi) {
    Bracket b;
    b.lo = Rational(static_cast<std::int64_t>(std::floor(lo * kDyadic)), kDyadic);
    b.hi = Rational(static_cast<std::int64_t>(std::ceil(hi * kDyadic)), kDyadic);
    return b;
}

Bracket log2_bracket_of(double x, double slack) {
    if (!(x > 0)) throw ArgumentError("log2 of a nonpositive number");
    double l = std::log2(x);
    return outward(l - slack, l + slack);
}

Bracket log2_bracket(std::uint64_t count, std::int64_t n) {
    if (count == 0) throw ArgumentError("log2 of zero count");
    if (n <= 0) throw ArgumentError("nonpositive period");
    if (std::has_single_bit(count)) {
        auto e = static_cast<std::int64_t>(std::countr_zero(count));
        return {Rational(e, n), Rational(e, n), true};
    }
    double l = std::log2(static_cast<double>(count)) / static_cast<double>(n);
    return outward(l - 1e-12, l + 1e-12);
}

Bracket operator+(const Bracket& a, const Bracket& b) {
    return {a.lo + b.lo, a.hi + b.hi, a.converged && b.converged};
}

Bracket scale(const Bracket& a, const Rational& w) {
    if (w < 0) return {a.hi * w, a.lo * w, a.converged};
    return {a.lo * w, a.hi * w, a.converged};
}

Bracket max(const Bracket& a, const Bracket& b) {
    return {std::max(a.lo, b.lo), std::max(a.hi, b.hi), a.converged && b.converged};
}

std::uint64_t floor_pow2(const Rational& x) {
    using boost::multiprecision::cpp_int;
    if (x < 0) throw ArgumentError("floor_pow2 of a negative exponent");
    if (x > 62) throw ResourceError("floor_pow2 exponent too large: " + to_string(x));
    // Largest N with N^q <= 2^p.
    const auto p = x.numerator();
    const auto q = x.denominator();
    cpp_int bound = cpp_int(1) << static_cast<unsigned>(p);
    auto fits = [&](std::uint64_t n) { return boost::multiprecision::pow(cpp_int(n), static_cast<unsigned>(q)) <= bound; };
    auto guess = static_cast<std::uint64_t>(std::floor(std::exp2(to_double(x))));
    std::uint64_t n = guess > 2 ? guess - 2 : 1;
    while (!fits(n)) --n;
    while (fits(n + 1)) ++n;
    return n;
}

}  // namespace symext
