#include "superroot/characters.hpp"

#include <algorithm>
#include <cstdlib>

namespace superroot {

namespace {

std::int64_t checked_add(std::int64_t x, std::int64_t y) {
    std::int64_t out;
    if (__builtin_add_overflow(x, y, &out)) throw DomainError("multiplicity overflows 64 bits");
    return out;
}

std::vector<int> delta_coordinates(const AffineRootSystem& aff, const Base& base) {
    BaseFrame frame(aff, base.roots);
    const auto x = frame.coordinates(aff.delta());
    if (!x) throw DomainError("delta is not an integral combination of the base");
    for (auto c : *x)
        if (c < 0) throw DomainError("delta has a negative coordinate over the base");
    return std::vector<int>(x->begin(), x->end());
}

} // namespace

GradedCharacter heisenberg_verma(int rank, Rational level, int depth, int sign) {
    if (level == 0) throw DomainError("level must be nonzero");
    if (rank < 0) throw DomainError("rank must be nonnegative");
    if (depth < 0) throw DomainError("depth must be nonnegative");
    if (sign != 1 && sign != -1) throw DomainError("sign must be +1 or -1");
    GradedCharacter ch;
    ch.level = level;
    ch.sign = sign;
    ch.dims.assign(depth + 1, 0);
    ch.dims[0] = 1;
    // Multiply by 1/(1-q^j) once per generator of degree j.
    for (int j = 1; j <= depth; ++j)
        for (int c = 0; c < rank; ++c)
            for (int k = j; k <= depth; ++k) ch.dims[k] = checked_add(ch.dims[k], ch.dims[k - j]);
    return ch;
}

KostantTable::KostantTable(std::vector<int> box) : box_(std::move(box)), stride_(box_.size()) {
    std::size_t total = 1;
    for (std::size_t i = box_.size(); i-- > 0;) {
        if (box_[i] < 0) throw DomainError("offset outside the cone");
        stride_[i] = total;
        total *= static_cast<std::size_t>(box_[i]) + 1;
        if (total > (std::size_t{1} << 28)) throw DomainError("Kostant box too large");
    }
    values_.assign(total, 0);
}

std::size_t KostantTable::flat(const std::vector<int>& nu) const {
    std::size_t f = 0;
    for (std::size_t i = 0; i < box_.size(); ++i) f += static_cast<std::size_t>(nu[i]) * stride_[i];
    return f;
}

std::vector<int> KostantTable::point(std::size_t f) const {
    std::vector<int> nu(box_.size());
    for (std::size_t i = 0; i < box_.size(); ++i) {
        nu[i] = static_cast<int>(f / stride_[i]);
        f %= stride_[i];
    }
    return nu;
}

std::int64_t KostantTable::at(const std::vector<int>& nu) const {
    if (nu.size() != box_.size()) throw DomainError("offset dimension mismatch");
    for (std::size_t i = 0; i < nu.size(); ++i)
        if (nu[i] < 0 || nu[i] > box_[i]) return 0;
    return values_[flat(nu)];
}

std::vector<KostantPart> kostant_parts(const AffineRootSystem& aff, const Base& base, const std::vector<int>& box,
                                       const KostantOptions& options, const std::function<bool(const Root&)>& keep) {
    if (static_cast<int>(box.size()) != aff.rank()) throw DomainError("offset has the wrong number of coordinates");
    const int colors = options.imaginary_multiplicity > 0 ? options.imaginary_multiplicity : aff.imaginary_multiplicity();
    int depth = 0;
    for (std::size_t i = 0; i < box.size(); ++i) depth += box[i] * std::abs(base.roots[i].delta);
    BaseFrame frame(aff, base.roots);
    std::vector<KostantPart> parts;
    for (const auto& r : roots_up_to_depth(aff, depth)) {
        const auto x = frame.coordinates(r);
        if (!x) continue;
        bool fits = true, nonzero = false;
        for (std::size_t i = 0; i < x->size(); ++i) {
            if ((*x)[i] < 0 || (*x)[i] > box[i]) fits = false;
            if ((*x)[i] != 0) nonzero = true;
        }
        if (!fits || !nonzero) continue;
        if (keep && !keep(r)) continue;
        KostantPart part{std::vector<int>(x->begin(), x->end()), 0, 1};
        if (r.is_imaginary())
            part.colors = colors;
        else if (aff.odd(r))
            part.limit = options.odd_limit;
        parts.push_back(std::move(part));
    }
    return parts;
}

KostantTable kostant_table(const std::vector<int>& box, const std::vector<KostantPart>& parts) {
    KostantTable t(box);
    t[0] = 1;
    const std::size_t n = t.size();
    std::vector<std::vector<int>> points(n);
    for (std::size_t f = 0; f < n; ++f) points[f] = t.point(f);
    const auto shifted = [&](std::size_t f, const std::vector<int>& step, int times) -> long {
        std::vector<int> nu = points[f];
        for (std::size_t i = 0; i < nu.size(); ++i) {
            nu[i] -= times * step[i];
            if (nu[i] < 0) return -1;
        }
        return static_cast<long>(t.flat(nu));
    };
    for (const auto& part : parts) {
        for (int c = 0; c < part.colors; ++c) {
            if (part.limit == 0) {
                // Row-major order visits nu - part before nu.
                for (std::size_t f = 0; f < n; ++f) {
                    const long g = shifted(f, part.coords, 1);
                    if (g >= 0) t[f] = checked_add(t[f], t[static_cast<std::size_t>(g)]);
                }
            } else {
                std::vector<std::int64_t> before(n);
                for (std::size_t f = 0; f < n; ++f) before[f] = t[f];
                for (std::size_t f = 0; f < n; ++f)
                    for (int k = 1; k <= part.limit; ++k) {
                        const long g = shifted(f, part.coords, k);
                        if (g < 0) break;
                        t[f] = checked_add(t[f], before[static_cast<std::size_t>(g)]);
                    }
            }
        }
    }
    return t;
}

std::int64_t verma_weight_multiplicity(const AffineRootSystem& aff, const Base& base, const std::vector<int>& mu,
                                       const KostantOptions& options) {
    for (int c : mu)
        if (c < 0) throw DomainError("offset outside the cone");
    const auto table = kostant_table(mu, kostant_parts(aff, base, mu, options));
    return table.at(mu);
}

WeightCharacter verma_character(const AffineRootSystem& aff, const Base& base, int depth, const KostantOptions& options) {
    if (depth < 0) throw DomainError("depth must be nonnegative");
    WeightCharacter ch;
    ch.base = base;
    ch.depth = depth;
    ch.imaginary_multiplicity =
        options.imaginary_multiplicity > 0 ? options.imaginary_multiplicity : aff.imaginary_multiplicity();
    std::vector<int> box = delta_coordinates(aff, base);
    for (auto& c : box) c *= depth;
    const auto table = kostant_table(box, kostant_parts(aff, base, box, options));
    for (std::size_t f = 0; f < table.size(); ++f)
        if (table[f] != 0) ch.multiplicities.emplace(table.point(f), table[f]);
    return ch;
}

GradedCharacter delta_string(const AffineRootSystem& aff, const Base& base, int depth, const KostantOptions& options) {
    if (depth < 0) throw DomainError("depth must be nonnegative");
    const std::vector<int> d = delta_coordinates(aff, base);
    std::vector<int> box = d;
    for (auto& c : box) c *= depth;
    const auto table = kostant_table(box, kostant_parts(aff, base, box, options));
    GradedCharacter ch;
    for (int k = 0; k <= depth; ++k) {
        std::vector<int> nu = d;
        for (auto& c : nu) c *= k;
        ch.dims.push_back(table.at(nu));
    }
    return ch;
}

bool induced_support_check(const AffineRootSystem& aff, const ParabolicSubset& p, int depth,
                           const KostantOptions& options) {
    if (p.kind() != ParabolicKind::Standard) throw DomainError("support check needs a standard parabolic");
    if (depth < 0) throw DomainError("depth must be nonnegative");
    if (depth == 0) return true;
    const Base& base = p.base();
    const std::vector<int> d = delta_coordinates(aff, base);
    std::vector<int> box = d;
    for (auto& c : box) c *= depth;

    // P+ must lie in the positive cone of the base for the support to sit
    // below lambda.
    BaseFrame frame(aff, base.roots);
    int window_depth = 0;
    for (std::size_t i = 0; i < box.size(); ++i) window_depth += box[i] * std::abs(base.roots[i].delta);
    for (const auto& r : roots_up_to_depth(aff, window_depth))
        if (p.in_plus(r) && frame.sign(r) <= 0) return false;

    const auto parts = kostant_parts(aff, base, box, options, [&p](const Root& r) { return p.in_plus(r); });
    const auto table = kostant_table(box, parts);
    if (table.at(std::vector<int>(box.size(), 0)) != 1) return false;

    // Offsets are lambda - mu; a weight lambda + k delta means mu = -k delta.
    for (int k = 1; k <= depth; ++k) {
        std::vector<int> nu = d;
        for (auto& c : nu) c *= -k;
        if (table.at(nu) != 0) return false;
    }
    // A missing point of the coset inside |mu| <= depth*delta: -delta is
    // never reached, and neither is any point of the box with zero count.
    std::vector<int> minus_delta = d;
    for (auto& c : minus_delta) c = -c;
    return table.at(minus_delta) == 0;
}

} // namespace superroot
