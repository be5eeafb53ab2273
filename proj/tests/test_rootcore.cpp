#include <doctest.h>

#include <algorithm>
#include <set>

#include "listed_roots.hpp"
#include "oracles.hpp"
#include "superroot/rootcore.hpp"

using namespace superroot;

namespace {

std::pair<int, int> library_counts(const FiniteRootSystem& sys) {
    int even = 0, odd = 0;
    for (const auto& r : sys.positive_roots()) (sys.odd(r) ? odd : even)++;
    return {even, odd};
}

std::set<oracle::AmbientRoot> library_ambient(const FiniteRootSystem& sys) {
    std::set<oracle::AmbientRoot> out;
    for (const auto& r : all_roots(sys)) out.insert({sys.to_ambient(r), sys.odd(r)});
    return out;
}

using Coeffs = std::vector<int>;

std::set<Coeffs> positive_coeffs(const FiniteRootSystem& sys, bool odd) {
    std::set<Coeffs> out;
    for (const auto& r : sys.positive_roots())
        if (sys.odd(r) == odd) out.insert(r.coeffs);
    return out;
}

} // namespace

TEST_CASE("positive root counts of the exceptional families") {
    CHECK(library_counts(build_finite(TypeTag::G3())) == std::pair{7, 7});
    CHECK(library_counts(build_finite(TypeTag::F4())) == std::pair{10, 8});
    for (auto a : {Rational(1), Rational(2), Rational(1, 2), Rational(-3, 7), Rational(5)})
        CHECK(library_counts(build_finite(TypeTag::D21a(a))) == std::pair{3, 4});
}

TEST_CASE("B(0,n) has n positive odd roots") {
    for (int n = 1; n <= 6; ++n) {
        const auto [even, odd] = library_counts(build_finite(TypeTag::B(0, n)));
        CHECK(odd == n);
        CHECK(even == n * n);
    }
}

TEST_CASE("classical families agree with the textbook eps/delta root lists") {
    for (int m = 0; m <= 3; ++m)
        for (int n = 0; n <= 3; ++n) {
            if (m == n) continue;
            const auto sys = build_finite(TypeTag::A(m, n));
            CAPTURE(m);
            CAPTURE(n);
            CHECK(library_ambient(sys) == oracle::textbook_A(m, n));
            CHECK(library_counts(sys) == oracle::positive_counts(oracle::textbook_A(m, n)));
        }
    for (int n = 1; n <= 4; ++n)
        for (int m = 0; m <= 3; ++m) {
            CAPTURE(m);
            CAPTURE(n);
            const auto b = build_finite(TypeTag::B(m, n));
            CHECK(library_ambient(b) == oracle::textbook_orthosymplectic(m, n, false));
            if (m >= 2) {
                const auto d = build_finite(TypeTag::D(m, n));
                CHECK(library_ambient(d) == oracle::textbook_orthosymplectic(m, n, true));
            }
        }
    for (int n = 2; n <= 6; ++n) {
        CAPTURE(n);
        CHECK(library_ambient(build_finite(TypeTag::C(n))) == oracle::textbook_C(n));
    }
}

TEST_CASE("the form matches the diagonal eps/delta metric") {
    // eps has norm +1 and delta norm -1 in every classical layout.
    const auto check = [](const FiniteRootSystem& sys, const std::vector<int>& metric) {
        const auto roots = all_roots(sys);
        for (const auto& x : roots)
            for (const auto& y : roots) {
                const auto ax = sys.to_ambient(x), ay = sys.to_ambient(y);
                Rational expect = 0;
                for (std::size_t i = 0; i < ax.size(); ++i) expect += metric[i] * ax[i] * ay[i];
                REQUIRE(bilinear_form(sys, x, y).constant() == expect);
            }
    };
    check(build_finite(TypeTag::A(2, 1)), {1, 1, -1, -1, -1});
    check(build_finite(TypeTag::B(2, 2)), {-1, -1, 1, 1});
    check(build_finite(TypeTag::B(0, 3)), {-1, -1, -1});
    check(build_finite(TypeTag::C(4)), {1, -1, -1, -1});
    check(build_finite(TypeTag::D(3, 2)), {-1, -1, 1, 1, 1});
}

TEST_CASE("exceptional positive roots are the listed ones") {
    const auto check = [](const FiniteRootSystem& sys, const listed::Lists& l) {
        CHECK(positive_coeffs(sys, false) == l.even);
        CHECK(positive_coeffs(sys, true) == l.odd);
    };
    check(build_finite(TypeTag::D21a(Rational(1, 2))), listed::d21a());
    check(build_finite(TypeTag::D21a(Rational(-7, 3))), listed::d21a());
    check(build_finite(TypeTag::G3()), listed::g3());
    check(build_finite(TypeTag::F4()), listed::f4());
}

TEST_CASE("B(0,n) positive roots: listed odd roots, listed even roots plus 2 alpha_n") {
    for (int n = 2; n <= 6; ++n) {
        CAPTURE(n);
        const auto sys = build_finite(TypeTag::B(0, n));
        const auto printed = listed::b0n(n, false);
        CHECK(positive_coeffs(sys, true) == printed.odd);
        const auto lib_even = positive_coeffs(sys, false);
        CHECK(lib_even.size() == printed.even.size() + 1);
        CHECK(lib_even == listed::b0n(n, true).even);
    }
}

TEST_CASE("theta over the distinguished base") {
    CHECK(build_finite(TypeTag::G3()).alpha0_expansion() == Coeffs{2, 4, 2});
    CHECK(build_finite(TypeTag::F4()).alpha0_expansion() == Coeffs{2, 3, 2, 1});
    CHECK(build_finite(TypeTag::D21a(Rational(3))).alpha0_expansion() == Coeffs{2, 1, 1});
    CHECK(build_finite(TypeTag::B(0, 3)).alpha0_expansion() == Coeffs{2, 2, 2});
    CHECK(build_finite(TypeTag::A(2, 1)).alpha0_expansion() == Coeffs{1, 1, 1, 1});
}

TEST_CASE("theta is a positive root of maximal height") {
    for (const auto& tag : {TypeTag::G3(), TypeTag::F4(), TypeTag::B(2, 2), TypeTag::C(4), TypeTag::D(3, 2),
                            TypeTag::A(3, 1), TypeTag::B(0, 4)}) {
        const auto sys = build_finite(tag);
        const auto height = [](const Root& r) {
            int h = 0;
            for (int c : r.coeffs) h += c;
            return h;
        };
        int best = 0;
        for (const auto& r : sys.positive_roots()) best = std::max(best, height(r));
        CHECK(sys.contains(sys.theta()));
        CHECK(height(sys.theta()) == best);
    }
}

TEST_CASE("parity is additive on sums that are roots") {
    for (const auto& tag : {TypeTag::G3(), TypeTag::F4(), TypeTag::B(1, 2), TypeTag::A(2, 1)}) {
        const auto sys = build_finite(tag);
        const auto roots = all_roots(sys);
        for (const auto& x : roots)
            for (const auto& y : roots) {
                const Root s = x + y;
                if (sys.contains(s)) REQUIRE(parity_of(sys, s) == (parity_of(sys, x) != parity_of(sys, y)));
            }
    }
}

TEST_CASE("isotropy of odd roots") {
    const auto g3 = build_finite(TypeTag::G3());
    CHECK(is_isotropic(g3, Root({1, 0, 0})));
    // The odd root delta of G(3) (alpha_1 + 2 alpha_2 + alpha_3) is not isotropic.
    CHECK_FALSE(is_isotropic(g3, Root({1, 2, 1})));
    const auto b0 = build_finite(TypeTag::B(0, 2));
    CHECK_FALSE(is_isotropic(b0, Root({0, 1})));
    CHECK(b0.contains(Root({0, 2})));
}

TEST_CASE("diagrams") {
    const auto g3 = dynkin_diagram(build_finite(TypeTag::G3()));
    REQUIRE(g3.nodes.size() == 3);
    CHECK(g3.nodes[0].odd);
    CHECK(g3.nodes[0].isotropic);
    bool triple = false;
    for (const auto& e : g3.edges)
        if (e.multiplicity == 3) {
            triple = true;
            CHECK(e.toward == 1); // alpha_2 is the short root
        }
    CHECK(triple);

    const auto f4 = dynkin_diagram(build_finite(TypeTag::F4()));
    REQUIRE(f4.nodes.size() == 4);
    int doubles = 0;
    for (const auto& e : f4.edges)
        if (e.multiplicity == 2) ++doubles;
    CHECK(doubles == 1);

    const auto d = dynkin_diagram(build_finite(TypeTag::D21a(Rational(2))));
    CHECK(d.edges.size() == 2); // alpha_2 and alpha_3 hang off the odd alpha_1
}

TEST_CASE("names and parsing") {
    CHECK(TypeTag::A(2, 1).name() == "A(2,1)");
    CHECK(TypeTag::B(0, 3).name() == "B(0,3)");
    CHECK(TypeTag::C(4).name() == "C(4)");
    CHECK(TypeTag::D21a(Rational(1, 2)).name() == "D(2,1;1/2)");
    CHECK(TypeTag::D21a(Rational(3)).name() == "D(2,1;3)");
    CHECK(TypeTag::G3().name() == "G(3)");
    CHECK(parse_family("B(0,n)", 5, 3, Rational(1)).family == Family::B0);
    CHECK(parse_family("d(2,1;a)", 0, 0, Rational(2)).family == Family::D21a);
    CHECK(parse_family("F(4)", 0, 0, Rational(1)).family == Family::F4);
    CHECK_THROWS_AS(parse_family("E8", 0, 0, Rational(1)), DomainError);
}

TEST_CASE("preconditions") {
    CHECK_THROWS_WITH_AS(build_finite(TypeTag::D21a(Rational(0))), "parameter a must avoid {0,-1}", DomainError);
    CHECK_THROWS_WITH_AS(build_finite(TypeTag::D21a(Rational(-1))), "parameter a must avoid {0,-1}", DomainError);
    CHECK_THROWS_AS(build_finite(TypeTag::A(1, 1)), DomainError);
    CHECK_NOTHROW(build_finite(TypeTag::A(1, 1), true));
    CHECK_THROWS_AS(build_finite(TypeTag::C(1)), DomainError);
    CHECK_THROWS_AS(build_finite(TypeTag::D(1, 1)), DomainError);
    const auto sys = build_finite(TypeTag::G3());
    CHECK_THROWS_AS(parity_of(sys, Root({5, 0, 0})), DomainError);
}

TEST_CASE("A(n,n) runs in ambient coordinates") {
    const auto sys = build_finite(TypeTag::A(1, 1), true);
    CHECK(sys.ambient_only());
    CHECK(sys.positive_roots().size() == 6);
    int odd = 0;
    for (const auto& r : sys.positive_roots()) odd += sys.odd(r);
    CHECK(odd == 4);
}
