#ifndef SUPERROOT_CHARACTERS_HPP
#define SUPERROOT_CHARACTERS_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "superroot/parabolic.hpp"

namespace superroot {

/// Dimensions of the degree pieces 0..depth of a graded module.
struct GradedCharacter {
    Rational level{1};
    int sign = 1; // +1 highest weight, -1 lowest weight
    std::vector<std::int64_t> dims;
};

/// Verma module over the Heisenberg subalgebra: each degree j >= 1 supplies
/// `rank` free generators, so dims[k] is the q^k coefficient of
/// prod_{j>=1} (1 - q^j)^(-rank). Throws on level 0 or overflow.
GradedCharacter heisenberg_verma(int rank, Rational level, int depth, int sign = 1);

struct KostantOptions {
    int imaginary_multiplicity = 0; // 0: use the system's default
    int odd_limit = 1;              // times an odd root may be used
};

/// Multiplicity table over the box 0 <= nu <= box (coordinates over `base`).
class KostantTable {
public:
    KostantTable(std::vector<int> box);

    const std::vector<int>& box() const { return box_; }
    std::size_t size() const { return values_.size(); }
    std::int64_t at(const std::vector<int>& nu) const;
    std::int64_t& operator[](std::size_t flat) { return values_[flat]; }
    std::int64_t operator[](std::size_t flat) const { return values_[flat]; }
    std::size_t flat(const std::vector<int>& nu) const;
    std::vector<int> point(std::size_t flat) const;

private:
    std::vector<int> box_;
    std::vector<std::size_t> stride_;
    std::vector<std::int64_t> values_;
};

/// One part available to the partition count.
struct KostantPart {
    std::vector<int> coords; // over the base
    int limit;               // 0: unbounded
    int colors;              // number of independent copies
};

/// Positive roots (with respect to `base`) fitting in the box, annotated
/// with the super multiplicity rules. `keep` filters by root.
std::vector<KostantPart> kostant_parts(const AffineRootSystem& aff, const Base& base, const std::vector<int>& box,
                                       const KostantOptions& options = {},
                                       const std::function<bool(const Root&)>& keep = {});

/// Counts multisets of parts summing to every point of the box.
KostantTable kostant_table(const std::vector<int>& box, const std::vector<KostantPart>& parts);

/// Super Kostant count of mu (coordinates over `base`).
std::int64_t verma_weight_multiplicity(const AffineRootSystem& aff, const Base& base, const std::vector<int>& mu,
                                       const KostantOptions& options = {});

/// Weight multiplicities of the Verma-type module at offsets 0 <= mu <= depth*delta.
struct WeightCharacter {
    Base base;
    int depth = 0;
    int imaginary_multiplicity = 0;
    std::map<std::vector<int>, std::int64_t> multiplicities; // nonzero entries only
};

WeightCharacter verma_character(const AffineRootSystem& aff, const Base& base, int depth,
                                const KostantOptions& options = {});

/// dims[k] = multiplicity of k*delta in the Verma module of the base.
GradedCharacter delta_string(const AffineRootSystem& aff, const Base& base, int depth,
                             const KostantOptions& options = {});

/// Support shadow of a standard parabolic: the module induced from P has no
/// weight at lambda + k delta (k > 0) and misses a point of its coset in the
/// window |mu| <= depth*delta.
bool induced_support_check(const AffineRootSystem& aff, const ParabolicSubset& p, int depth,
                           const KostantOptions& options = {});

} // namespace superroot

#endif
