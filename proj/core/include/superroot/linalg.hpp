#ifndef SUPERROOT_LINALG_HPP
#define SUPERROOT_LINALG_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "superroot/scalar.hpp"

namespace superroot {

using QVector = std::vector<Rational>;
using IVector = std::vector<std::int64_t>;

/// Exact coordinates of vectors with respect to a fixed family of columns.
/// Works for overdetermined (tall) systems: a target outside the span has no
/// coordinates.
class Decomposer {
public:
    Decomposer() = default;
    explicit Decomposer(const std::vector<QVector>& columns);

    std::size_t dimension() const { return dim_; }
    std::size_t size() const { return count_; }
    std::size_t rank() const { return pivots_.size(); }
    bool independent() const { return rank() == count_; }

    /// Coefficients x with sum_j x_j * column_j == target. Requires
    /// independent columns; returns nullopt if target is outside the span.
    std::optional<QVector> coordinates(const QVector& target) const;

    /// Same, restricted to integral solutions.
    std::optional<IVector> integer_coordinates(const QVector& target) const;

private:
    std::size_t dim_ = 0;
    std::size_t count_ = 0;
    std::vector<std::vector<Rational>> transform_; // dim x dim, E with E*M = rref(M)
    std::vector<std::size_t> pivots_;             // pivot column of row r
};

/// The Z-span of a finite set of integer vectors, kept in row echelon form.
class IntegerLattice {
public:
    IntegerLattice() = default;
    IntegerLattice(std::size_t dimension, const std::vector<IVector>& generators);

    std::size_t dimension() const { return dim_; }
    std::size_t rank() const { return basis_.size(); }
    bool contains(const IVector& v) const;

private:
    std::size_t dim_ = 0;
    std::vector<IVector> basis_;
};

} // namespace superroot

#endif
