#ifndef SUPERROOT_PARABOLIC_HPP
#define SUPERROOT_PARABOLIC_HPP

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "superroot/affine.hpp"

namespace superroot {

/// Linear functional on (finite coordinates, delta coefficient).
using Functional = std::vector<Rational>;

enum class ParabolicKind { Standard, Functional, Explicit };

std::string to_string(ParabolicKind kind);

/// Membership in Z-span(S) intersected with the roots.
class SpanOracle {
public:
    SpanOracle() = default;
    SpanOracle(const AffineRootSystem& aff, const std::vector<Root>& generators);
    bool contains(const Root& r) const;

private:
    IntegerLattice lattice_;
    bool empty_ = true;
};

/// A parabolic subset given by a finite description. Membership is only
/// meaningful for roots.
class ParabolicSubset {
public:
    ParabolicKind kind() const { return kind_; }
    const Base& base() const { return base_; }
    /// S for the standard kind, Y for the explicit kind.
    const std::vector<Root>& generators() const { return generators_; }
    const std::vector<Root>& z() const { return z_; }
    const std::vector<Functional>& chain() const { return chain_; }

    bool contains(const Root& r) const;
    bool in_zero(const Root& r) const { return contains(r) && contains(-r); }
    bool in_plus(const Root& r) const { return contains(r) && !contains(-r); }
    bool in_minus(const Root& r) const { return !contains(r) && contains(-r); }

private:
    friend ParabolicSubset standard_parabolic(const AffineRootSystem&, const Base&, const std::vector<Root>&);
    friend ParabolicSubset functional_parabolic(const AffineRootSystem&, const std::vector<Functional>&);
    friend ParabolicSubset explicit_parabolic_unchecked(const AffineRootSystem&, const Base&,
                                                        const std::vector<Root>&, const std::vector<Root>&);

    ParabolicKind kind_ = ParabolicKind::Standard;
    Base base_;
    std::vector<Root> generators_;
    std::vector<Root> z_;
    std::vector<Functional> chain_;
    std::shared_ptr<const BaseFrame> frame_;
    SpanOracle span_;
};

/// Delta(S) = ZS n Delta inside the depth window, sorted.
std::vector<Root> closure(const AffineRootSystem& aff, const std::vector<Root>& s, int depth);

/// P_S = Delta_+(base) u Delta(S). Throws if S is not a subset of base.
ParabolicSubset standard_parabolic(const AffineRootSystem& aff, const Base& base, const std::vector<Root>& s);

/// alpha in P iff the first functional not vanishing on alpha is positive on
/// it, or all vanish.
ParabolicSubset functional_parabolic(const AffineRootSystem& aff, const std::vector<Functional>& chain);

/// Height with respect to the distinguished base as a functional.
Functional height_functional(const AffineRootSystem& aff);

/// Sum of the distinguished-base coordinates outside the given index set
/// (indices into the distinguished base, 0 = alpha_0).
Functional complement_functional(const AffineRootSystem& aff, const std::vector<int>& kept);

/// P0 = Delta(Y) u -Delta(Y), P+ = (Delta_+ \ (P0 u Z)) u -Z, with no validation.
ParabolicSubset explicit_parabolic_unchecked(const AffineRootSystem& aff, const Base& base,
                                             const std::vector<Root>& y, const std::vector<Root>& z);

struct ParabolicWitness {
    enum class Kind { Closure, Covering } kind = Kind::Closure;
    Root a;
    Root b;   // unused for covering
    Root sum; // unused for covering
    std::string describe() const;
};

struct ParabolicCheck {
    bool ok = true;
    std::optional<ParabolicWitness> witness;
    explicit operator bool() const { return ok; }
};

/// Same as the unchecked form, but validates at depth and throws a
/// DomainError carrying the witness if the result is not parabolic.
ParabolicSubset explicit_parabolic(const AffineRootSystem& aff, const Base& base, const std::vector<Root>& y,
                                   const std::vector<Root>& z, int depth = 6);

using Membership = std::function<bool(const Root&)>;

/// Exhaustive check of additive closure and P u -P = Delta on the window.
/// Reports the first closure violation, else the first uncovered root.
ParabolicCheck is_parabolic(const AffineRootSystem& aff, const Membership& member, int depth);
ParabolicCheck is_parabolic(const AffineRootSystem& aff, const ParabolicSubset& p, int depth);
ParabolicCheck is_parabolic(const RootWindow& window, const Membership& member);

struct Decomposition {
    std::vector<Root> plus;
    std::vector<Root> zero;
    std::vector<Root> minus;
};

Decomposition decompose(const AffineRootSystem& aff, const ParabolicSubset& p, int depth);

} // namespace superroot

#endif
