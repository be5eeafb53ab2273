#include "superroot/scalar.hpp"

#include <charconv>

namespace superroot {

std::string to_string(const Rational& r) {
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

namespace {

std::int64_t parse_int(std::string_view text, const std::string& whole) {
    std::int64_t value = 0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    if (!text.empty() && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || first == last)
        throw DomainError("malformed rational '" + whole + "'");
    return value;
}

} // namespace

Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(parse_int(text, text));
    const std::int64_t num = parse_int(std::string_view(text).substr(0, slash), text);
    const std::int64_t den = parse_int(std::string_view(text).substr(slash + 1), text);
    if (den == 0) throw DomainError("zero denominator in '" + text + "'");
    return Rational(num, den);
}

Scalar operator*(const Scalar& x, const Scalar& y) {
    if (x.has_parameter() && y.has_parameter())
        throw DomainError("product of two parameter-dependent scalars is not linear in a");
    if (!x.has_parameter()) return y * x.constant();
    return x * y.constant();
}

std::optional<Rational> Scalar::ratio(const Scalar& num, const Scalar& den) {
    if (den.is_zero()) return std::nullopt;
    // num = c * den must hold coefficient-wise.
    const Rational c = den.constant_ != 0 ? num.constant_ / den.constant_ : num.slope_ / den.slope_;
    if (num.constant_ != c * den.constant_ || num.slope_ != c * den.slope_) return std::nullopt;
    return c;
}

std::string Scalar::to_string() const {
    if (slope_ == 0) return superroot::to_string(constant_);
    std::string out;
    if (constant_ != 0) out = superroot::to_string(constant_) + (slope_ > 0 ? "+" : "");
    return out + superroot::to_string(slope_) + "*a";
}

} // namespace superroot
