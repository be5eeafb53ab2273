#ifndef SUPERROOT_AFFINE_HPP
#define SUPERROOT_AFFINE_HPP

#include <optional>
#include <unordered_map>
#include <vector>

#include "superroot/linalg.hpp"
#include "superroot/rootcore.hpp"

namespace superroot {

struct RootHash {
    std::size_t operator()(const Root& r) const noexcept;
};

struct Base {
    std::vector<Root> roots;
    std::vector<bool> parities; // true = odd

    std::size_t size() const { return roots.size(); }
};

enum class RootKind { RealEven, RealOdd, Imaginary, NotARoot };
enum class KindFilter { Any, Real, Imaginary };

struct RootFilter {
    ParityFilter parity = ParityFilter::Any;
    SignFilter sign = SignFilter::Any;
    KindFilter kind = KindFilter::Any;
};

/// Non-twisted affinization: roots are finite roots plus Z*delta, together
/// with the imaginary roots k*delta, k != 0.
class AffineRootSystem {
public:
    AffineRootSystem(FiniteRootSystem finite, int imaginary_multiplicity = 0);

    const FiniteRootSystem& finite() const { return finite_; }
    const Base& distinguished_base() const { return base_; }
    int imaginary_multiplicity() const { return imaginary_multiplicity_; }
    /// Number of base roots (finite rank + 1).
    int rank() const { return finite_.rank() + 1; }
    /// Length of the finite part of a coordinate vector.
    int dimension() const { return finite_.dimension(); }

    Root delta(int k = 1) const;
    Root zero() const { return Root(std::vector<int>(dimension(), 0), 0); }

    RootKind kind(const Root& v) const;
    bool is_root(const Root& v) const { return kind(v) != RootKind::NotARoot; }
    /// Positivity with respect to the distinguished base.
    bool is_positive(const Root& r) const;
    bool odd(const Root& r) const { return finite_.odd(r); }
    /// The form ignores delta, which is orthogonal to everything.
    Scalar form(const Root& x, const Root& y) const;

private:
    FiniteRootSystem finite_;
    Base base_;
    int imaginary_multiplicity_;
};

AffineRootSystem affinize(const FiniteRootSystem& finite, int imaginary_multiplicity = 0);

std::vector<Root> roots_up_to_depth(const AffineRootSystem& aff, int depth, const RootFilter& filter = {});

RootKind classify_vector(const AffineRootSystem& aff, const Root& v);

/// Exact coordinates over an arbitrary (candidate) base.
class BaseFrame {
public:
    BaseFrame() = default;
    BaseFrame(const AffineRootSystem& aff, const std::vector<Root>& base);

    bool independent() const { return solver_.independent(); }
    std::optional<IVector> coordinates(const Root& v) const;
    /// +1 if all coordinates are nonnegative integers, -1 if all are
    /// nonpositive integers, 0 otherwise (mixed, fractional, or outside).
    int sign(const Root& v) const;

private:
    Decomposer solver_;
};

Base make_base(const AffineRootSystem& aff, std::vector<Root> roots);

/// Coefficients of delta over the base. Throws if the base fails is_base
/// at the given depth.
std::vector<int> delta_expansion(const AffineRootSystem& aff, const Base& base, int depth = 4);

Base even_reflection(const AffineRootSystem& aff, const Base& base, int i);
Base odd_reflection(const AffineRootSystem& aff, const Base& base, int i);

/// Soundness at depth: every root with |delta coefficient| <= depth is a
/// same-sign integer combination of the candidate roots.
bool is_base(const AffineRootSystem& aff, const std::vector<Root>& candidate, int depth);
inline bool is_base(const AffineRootSystem& aff, const Base& candidate, int depth) {
    return is_base(aff, candidate.roots, depth);
}

/// rho in Sigma_alpha = {alpha + n delta, n >= 0} u {-alpha + m delta, m > 0}.
bool sigma_contains(const AffineRootSystem& aff, const Root& alpha, const Root& rho);

/// All roots of depth at most d with an index for constant-time lookup.
class RootWindow {
public:
    RootWindow(const AffineRootSystem& aff, int depth, const RootFilter& filter = {});

    int depth() const { return depth_; }
    const std::vector<Root>& roots() const { return roots_; }
    std::size_t size() const { return roots_.size(); }
    /// Index of r in roots(), or -1.
    int index_of(const Root& r) const;

private:
    int depth_;
    std::vector<Root> roots_;
    std::unordered_map<Root, int, RootHash> index_;
};

} // namespace superroot

#endif
