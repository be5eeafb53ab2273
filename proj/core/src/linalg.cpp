#include "superroot/linalg.hpp"

#include <numeric>
#include <utility>

namespace superroot {

Decomposer::Decomposer(const std::vector<QVector>& columns) : count_(columns.size()) {
    if (columns.empty()) return;
    dim_ = columns.front().size();
    for (const auto& c : columns)
        if (c.size() != dim_) throw DomainError("decomposer: column dimension mismatch");

    // Row-reduce [M | I].
    std::vector<std::vector<Rational>> m(dim_, std::vector<Rational>(count_));
    for (std::size_t j = 0; j < count_; ++j)
        for (std::size_t i = 0; i < dim_; ++i) m[i][j] = columns[j][i];
    transform_.assign(dim_, std::vector<Rational>(dim_));
    for (std::size_t i = 0; i < dim_; ++i) transform_[i][i] = 1;

    std::size_t row = 0;
    for (std::size_t col = 0; col < count_ && row < dim_; ++col) {
        std::size_t pivot = row;
        while (pivot < dim_ && m[pivot][col] == 0) ++pivot;
        if (pivot == dim_) continue;
        std::swap(m[pivot], m[row]);
        std::swap(transform_[pivot], transform_[row]);
        const Rational inv = Rational(1) / m[row][col];
        for (auto& x : m[row]) x *= inv;
        for (auto& x : transform_[row]) x *= inv;
        for (std::size_t r = 0; r < dim_; ++r) {
            if (r == row || m[r][col] == 0) continue;
            const Rational f = m[r][col];
            for (std::size_t c = 0; c < count_; ++c) m[r][c] -= f * m[row][c];
            for (std::size_t c = 0; c < dim_; ++c) transform_[r][c] -= f * transform_[row][c];
        }
        pivots_.push_back(col);
        ++row;
    }
}

std::optional<QVector> Decomposer::coordinates(const QVector& target) const {
    if (!independent()) throw DomainError("decomposer: columns are linearly dependent");
    if (target.size() != dim_) throw DomainError("decomposer: target dimension mismatch");
    std::vector<Rational> reduced(dim_);
    for (std::size_t r = 0; r < dim_; ++r) {
        Rational acc = 0;
        for (std::size_t c = 0; c < dim_; ++c)
            if (transform_[r][c] != 0 && target[c] != 0) acc += transform_[r][c] * target[c];
        reduced[r] = acc;
    }
    for (std::size_t r = rank(); r < dim_; ++r)
        if (reduced[r] != 0) return std::nullopt;
    QVector x(count_);
    for (std::size_t r = 0; r < rank(); ++r) x[pivots_[r]] = reduced[r];
    return x;
}

std::optional<IVector> Decomposer::integer_coordinates(const QVector& target) const {
    auto x = coordinates(target);
    if (!x) return std::nullopt;
    IVector out(x->size());
    for (std::size_t i = 0; i < x->size(); ++i) {
        if ((*x)[i].denominator() != 1) return std::nullopt;
        out[i] = (*x)[i].numerator();
    }
    return out;
}

IntegerLattice::IntegerLattice(std::size_t dimension, const std::vector<IVector>& generators)
    : dim_(dimension) {
    std::vector<IVector> rows;
    for (const auto& g : generators) {
        if (g.size() != dim_) throw DomainError("lattice: generator dimension mismatch");
        rows.push_back(g);
    }
    std::size_t top = 0;
    for (std::size_t col = 0; col < dim_ && top < rows.size(); ++col) {
        // Euclid on column col among rows[top..].
        for (;;) {
            std::size_t best = rows.size();
            for (std::size_t r = top; r < rows.size(); ++r)
                if (rows[r][col] != 0 &&
                    (best == rows.size() || std::abs(rows[r][col]) < std::abs(rows[best][col])))
                    best = r;
            if (best == rows.size()) break;
            std::swap(rows[top], rows[best]);
            bool done = true;
            for (std::size_t r = top + 1; r < rows.size(); ++r) {
                if (rows[r][col] == 0) continue;
                const std::int64_t q = rows[r][col] / rows[top][col];
                for (std::size_t c = 0; c < dim_; ++c) rows[r][c] -= q * rows[top][c];
                if (rows[r][col] != 0) done = false;
            }
            if (done) break;
        }
        if (rows[top][col] != 0) ++top;
    }
    rows.resize(top);
    basis_ = std::move(rows);
}

bool IntegerLattice::contains(const IVector& v) const {
    if (v.size() != dim_) throw DomainError("lattice: vector dimension mismatch");
    IVector rest = v;
    for (const auto& row : basis_) {
        std::size_t p = 0;
        while (row[p] == 0) ++p;
        // Earlier pivots already cleared columns < p.
        for (std::size_t c = 0; c < p; ++c)
            if (rest[c] != 0) return false;
        if (rest[p] % row[p] != 0) return false;
        const std::int64_t q = rest[p] / row[p];
        for (std::size_t c = 0; c < dim_; ++c) rest[c] -= q * row[c];
    }
    for (auto x : rest)
        if (x != 0) return false;
    return true;
}

} // namespace superroot
