#ifndef SUPERROOT_SCALAR_HPP
#define SUPERROOT_SCALAR_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include <boost/rational.hpp>

namespace superroot {

using Rational = boost::rational<std::int64_t>;

// Boost 1.74's mixed rational/integer comparisons recurse forever under the
// C++20 rewritten-operator rules. These exact overloads win overload
// resolution for every comparison written inside this namespace.
#define SUPERROOT_MIXED_CMP(INT)                                                              \
    inline bool operator==(const Rational& x, INT y) { return x == Rational(y); }            \
    inline bool operator!=(const Rational& x, INT y) { return !(x == Rational(y)); }         \
    inline bool operator<(const Rational& x, INT y) { return x < Rational(y); }              \
    inline bool operator>(const Rational& x, INT y) { return Rational(y) < x; }              \
    inline bool operator<=(const Rational& x, INT y) { return !(Rational(y) < x); }          \
    inline bool operator>=(const Rational& x, INT y) { return !(x < Rational(y)); }          \
    inline bool operator==(INT y, const Rational& x) { return x == Rational(y); }            \
    inline bool operator!=(INT y, const Rational& x) { return !(x == Rational(y)); }
SUPERROOT_MIXED_CMP(int)
SUPERROOT_MIXED_CMP(long)
SUPERROOT_MIXED_CMP(long long)
#undef SUPERROOT_MIXED_CMP

/// Raised for every precondition or domain violation in the library.
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// "p/q" encoding, always with an explicit denominator.
std::string to_string(const Rational& r);

/// Parses "p", "p/q" or "-p/q". Throws DomainError on malformed input.
Rational parse_rational(const std::string& text);

/// Exact value of the form constant + slope * a, where a is the formal
/// parameter of D(2,1;a). Systems other than D(2,1;a) only ever produce
/// slope == 0.
class Scalar {
public:
    Scalar() = default;
    Scalar(std::int64_t value) : constant_(value) {}
    Scalar(Rational value) : constant_(value) {}
    Scalar(Rational constant, Rational slope) : constant_(constant), slope_(slope) {}

    static Scalar parameter() { return Scalar(Rational(0), Rational(1)); }

    const Rational& constant() const { return constant_; }
    const Rational& slope() const { return slope_; }

    bool is_zero() const { return constant_ == 0 && slope_ == 0; }
    bool has_parameter() const { return slope_ != 0; }

    Rational evaluate(const Rational& a) const { return constant_ + slope_ * a; }

    Scalar operator-() const { return Scalar(-constant_, -slope_); }
    Scalar& operator+=(const Scalar& o) {
        constant_ += o.constant_;
        slope_ += o.slope_;
        return *this;
    }
    Scalar& operator-=(const Scalar& o) {
        constant_ -= o.constant_;
        slope_ -= o.slope_;
        return *this;
    }
    Scalar& operator*=(const Rational& k) {
        constant_ *= k;
        slope_ *= k;
        return *this;
    }

    friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
    friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
    friend Scalar operator*(Scalar x, const Rational& k) { return x *= k; }
    friend Scalar operator*(const Rational& k, Scalar x) { return x *= k; }
    friend Scalar operator*(Scalar x, std::int64_t k) { return x *= Rational(k); }
    friend Scalar operator*(std::int64_t k, Scalar x) { return x *= Rational(k); }

    /// Product of two scalars; at most one factor may carry the parameter,
    /// since the result must stay linear in a.
    friend Scalar operator*(const Scalar& x, const Scalar& y);

    friend bool operator==(const Scalar& x, const Scalar& y) {
        return x.constant_ == y.constant_ && x.slope_ == y.slope_;
    }
    friend bool operator!=(const Scalar& x, const Scalar& y) { return !(x == y); }

    /// num/den when that quotient is the same rational for every value of a.
    static std::optional<Rational> ratio(const Scalar& num, const Scalar& den);

    std::string to_string() const;

private:
    Rational constant_{0};
    Rational slope_{0};
};

} // namespace superroot

#endif
