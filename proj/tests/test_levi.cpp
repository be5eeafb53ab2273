#include <doctest.h>

#include <random>
#include <set>

#include "superroot/levi.hpp"

using namespace superroot;

namespace {

AffineRootSystem aff_of(const TypeTag& tag) { return affinize(build_finite(tag)); }

LeviReport report_for(const AffineRootSystem& aff, const std::vector<int>& indices, int depth = 4) {
    std::vector<Root> s;
    for (int i : indices) s.push_back(aff.distinguished_base().roots[i]);
    return levi_report(aff, standard_parabolic(aff, aff.distinguished_base(), s), "test", depth);
}

std::vector<int> finite_indices(const AffineRootSystem& aff) {
    std::vector<int> out;
    for (int i = 1; i < aff.rank(); ++i) out.push_back(i);
    return out;
}

} // namespace

TEST_CASE("D(2,1;a) parameters are identified along the S3 orbit") {
    CHECK(canonical_d21a(Rational(2)) == Rational(1, 2));
    CHECK(canonical_d21a(Rational(-3)) == Rational(1, 2));
    CHECK(canonical_d21a(Rational(-2, 3)) == Rational(1, 2));
    CHECK(canonical_d21a(Rational(1)) == Rational(1));
    CHECK(canonical_d21a(Rational(-2)) == Rational(1));
    CHECK(canonical_d21a(Rational(-1, 2)) == Rational(1));

    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> num(-40, 40), den(1, 40);
    for (int i = 0; i < 2000; ++i) {
        const Rational a(num(rng), den(rng));
        if (a == 0 || a == -1) continue;
        const Rational one(1);
        const Rational c = canonical_d21a(a);
        for (const Rational& b : {one / a, -one - a, -one / (one + a), -a / (one + a), -(one + a) / a})
            REQUIRE(canonical_d21a(b) == c);
    }
}

TEST_CASE("alias spellings") {
    CHECK(canonical({"B(m,n)", {0, 3}, std::nullopt, false}) == osp_type(1, 6));
    CHECK(canonical({"B(m,n)", {2, 1}, std::nullopt, false}) == osp_type(5, 2));
    CHECK(canonical({"C(n)", {3}, std::nullopt, false}) == osp_type(2, 4));
    CHECK(canonical({"D(m,n)", {2, 2}, std::nullopt, false}) == osp_type(4, 4));
    CHECK(canonical(lie_type("B", 2)) == lie_type("C", 2));
    CHECK(canonical(lie_type("D", 3)) == lie_type("A", 3));
    CHECK(canonical(lie_type("B", 1)) == lie_type("A", 1));
    CHECK(canonical(osp_type(2, 2)) == super_a_type(1, 0));
    CHECK(super_a_type(1, 3) == super_a_type(3, 1));
    CHECK(osp_type(3, 4).name() == "osp(3,4)");
    CHECK(lie_type("A", 2).name() == "A_2");
    CHECK(d21a_type(Rational(1, 2)).name() == "D(2,1;1/2)");
}

TEST_CASE("cuspidality verdicts") {
    CHECK(is_cuspidal({lie_type("A", 1), lie_type("C", 2)}));
    CHECK(is_cuspidal({{"torus", {}, std::nullopt, false}}));
    CHECK(is_cuspidal({osp_type(1, 4), osp_type(3, 2), osp_type(4, 2), osp_type(5, 2), osp_type(6, 2)}));
    CHECK(is_cuspidal({d21a_type(Rational(3))}));
    CHECK(is_cuspidal({lie_type("B", 2)})); // same algebra as C_2
    CHECK_FALSE(is_cuspidal({lie_type("B", 3)}));
    CHECK_FALSE(is_cuspidal({lie_type("G2", 2)}));
    CHECK_FALSE(is_cuspidal({osp_type(2, 4)}));
    CHECK_FALSE(is_cuspidal({osp_type(7, 2)}));
    CHECK_FALSE(is_cuspidal({super_a_type(2, 1)}));
    CHECK_FALSE(is_cuspidal({lie_type("A", 1), {"G(3)", {}, std::nullopt, false}}));
    LeviType aff = lie_type("A", 1);
    aff.affine = true;
    CHECK_THROWS_AS(is_cuspidal({aff}), DomainError);
    CHECK_THROWS_AS(is_cuspidal({{"mystery", {}, std::nullopt, false}}), DomainError);
}

TEST_CASE("the finite Levi recovers the finite algebra") {
    const auto check = [](const TypeTag& tag, const std::string& name) {
        const auto aff = aff_of(tag);
        const auto rep = report_for(aff, finite_indices(aff));
        CAPTURE(tag.name());
        CHECK(rep.parabolic_ok);
        CHECK_FALSE(rep.affine);
        CHECK(rep.multiset() == name);
    };
    check(TypeTag::G3(), "G(3)");
    check(TypeTag::F4(), "F(4)");
    check(TypeTag::B(0, 3), "osp(1,6)");
    check(TypeTag::B(2, 1), "osp(5,2)");
    check(TypeTag::D(3, 2), "osp(6,4)");
    check(TypeTag::C(3), "osp(2,4)");
    check(TypeTag::A(2, 1), "A(2,1)");
    check(TypeTag::D21a(Rational(2)), "D(2,1;1/2)");
    check(TypeTag::D21a(Rational(1)), "osp(4,2)"); // D(2,1;1) is osp(4|2)
}

TEST_CASE("small Levis") {
    const auto g3 = aff_of(TypeTag::G3());
    CHECK(report_for(g3, {}).multiset() == "torus");
    CHECK(report_for(g3, {}).cuspidal);
    CHECK(report_for(g3, {2, 3}).multiset() == "G2");
    CHECK_FALSE(report_for(g3, {2, 3}).cuspidal);
    CHECK(report_for(g3, {0, 2, 3}).multiset() == "A_1 + G2");
    CHECK(report_for(g3, {0}).multiset() == "A_1");
    CHECK(report_for(g3, {1}).multiset() == "A(0,0)");
    CHECK_FALSE(report_for(g3, {1}).cuspidal);

    const auto f4 = aff_of(TypeTag::F4());
    CHECK(report_for(f4, {2, 3, 4}).multiset() == "B_3");
    CHECK(report_for(f4, {3, 4}).multiset() == "A_2");
    CHECK(report_for(f4, {2, 3}).multiset() == "C_2");
    CHECK(report_for(f4, {2, 3}).cuspidal);

    const auto b0 = aff_of(TypeTag::B(0, 2));
    CHECK(report_for(b0, {2}).multiset() == "osp(1,2)");
    CHECK(report_for(b0, {0}).multiset() == "A_1");
}

TEST_CASE("the whole base gives an affine Levi") {
    const auto aff = aff_of(TypeTag::C(3));
    std::vector<int> all{0};
    for (int i : finite_indices(aff)) all.push_back(i);
    const auto rep = report_for(aff, all, 3);
    CHECK(rep.affine);
    CHECK_FALSE(rep.cuspidal);
    REQUIRE(rep.components.size() == 1);
    CHECK(rep.components[0].affine);
    CHECK(rep.multiset() == "affine(osp(2,4))");
}

TEST_CASE("Levi data") {
    const auto aff = aff_of(TypeTag::F4());
    const auto p = standard_parabolic(aff, aff.distinguished_base(),
                                      {aff.distinguished_base().roots.begin() + 1, aff.distinguished_base().roots.end()});
    const auto levi = levi_of(aff, p, 3);
    CHECK(levi.root_set.size() == 36);
    CHECK_FALSE(levi.is_affine);
    CHECK(levi.chosen_base.size() == 4);
    const auto comps = components(aff, levi);
    REQUIRE(comps.size() == 1);
    CHECK(classify(aff, comps[0]).name() == "F(4)");
}

TEST_CASE("census shape") {
    const auto aff = aff_of(TypeTag::D21a(Rational(1, 2)));
    const auto full = census(aff, {4, false, true});
    CHECK(full.size() == 16);
    CHECK(full.back().affine);
    CHECK(full.front().source == "S={}");
    CHECK(full[5].source == "S={0,2}");
    const auto proper = census(aff, {4, false, false});
    CHECK(proper.size() == 15);
    const auto dedup = census(aff, {4, true, true});
    std::set<std::string> names;
    for (const auto& r : full) names.insert(r.multiset());
    CHECK(dedup.size() == names.size());
    for (const auto& r : full) CHECK(r.parabolic_ok);
}

TEST_CASE("census is deterministic across runs") {
    const auto aff = aff_of(TypeTag::B(1, 2));
    const auto a = census(aff, {4, false, true});
    const auto b = census(aff, {4, false, true});
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].source == b[i].source);
        CHECK(a[i].multiset() == b[i].multiset());
    }
}
