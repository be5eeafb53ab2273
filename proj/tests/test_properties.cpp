#include <doctest.h>

#include "properties.hpp"

namespace {
constexpr long kCases = 10000;
constexpr std::uint64_t kSeed = 20240611;
} // namespace

TEST_CASE("parity is additive") {
    const auto o = props::parity_additivity(kCases, kSeed);
    INFO(o.counterexample.value_or(""));
    CHECK(o.ok());
    CHECK(o.cases == kCases);
}

TEST_CASE("reflections preserve bases") {
    const auto o = props::reflections_preserve_bases(kCases, kSeed + 1);
    INFO(o.counterexample.value_or(""));
    CHECK(o.ok());
    CHECK(o.cases == kCases);
}

TEST_CASE("closure is idempotent") {
    const auto o = props::closure_idempotence(kCases, kSeed + 2);
    INFO(o.counterexample.value_or(""));
    CHECK(o.ok());
    CHECK(o.cases == kCases);
}

TEST_CASE("decompose partitions the window") {
    const auto o = props::decompose_partition(kCases, kSeed + 3);
    INFO(o.counterexample.value_or(""));
    CHECK(o.ok());
    CHECK(o.cases == kCases);
}

TEST_CASE("Sigma sets are symmetric under alpha -> -alpha + delta") {
    const auto o = props::sigma_symmetry(kCases, kSeed + 4);
    INFO(o.counterexample.value_or(""));
    CHECK(o.ok());
    CHECK(o.cases == kCases);
}
