#ifndef SUPERROOT_LEVI_HPP
#define SUPERROOT_LEVI_HPP

#include <optional>
#include <string>
#include <vector>

#include "superroot/parabolic.hpp"

namespace superroot {

/// The root datum of P0 = P n -P inside a depth window.
struct LeviDatum {
    std::vector<Root> root_set;     // sorted
    bool is_affine = false;         // some k*delta lies in P0
    std::vector<Root> chosen_base;  // indecomposable lex-positive roots
    int depth = 0;
};

/// Recognized type of one simple component.
///
/// Lie algebra labels: "A", "B", "C", "D", "E", "F4", "G2" with params {rank}.
/// Superalgebra labels: "A(m,n)" with params {m, n}, m >= n; "osp" with
/// params {M, N} for osp(M|N); "D(2,1;a)" with the parameter in `a`;
/// "G(3)"; "F(4)". "torus" stands for an empty datum. Any of these can be
/// wrapped as affine.
struct LeviType {
    std::string label;
    std::vector<int> params;
    std::optional<Rational> a;
    bool affine = false;

    std::string name() const;
    friend bool operator==(const LeviType&, const LeviType&) = default;
    friend bool operator<(const LeviType& x, const LeviType& y) { return x.name() < y.name(); }
};

LeviType lie_type(const std::string& label, int rank);
LeviType osp_type(int m, int n2);
LeviType super_a_type(int m, int n);
LeviType d21a_type(Rational a);

/// Representative of a under the S3 action a -> 1/a, -1-a, ... that
/// leaves D(2,1;a) unchanged: smallest |num|+den, then smallest value.
Rational canonical_d21a(const Rational& a);

/// Maps alias spellings (B(m,n), C(n), D(m,n), B_2, D_3, ...) to the
/// canonical label used by classify.
LeviType canonical(const LeviType& t);

LeviDatum levi_of_roots(const AffineRootSystem& aff, std::vector<Root> p0, int depth);
LeviDatum levi_of(const AffineRootSystem& aff, const ParabolicSubset& p, int depth = 6);

/// Connected pieces of chosen_base; roots are joined when their form value
/// is nonzero or their sum or difference lies in the datum. For an affine
/// datum the imaginary roots are dropped and the finite projection split.
std::vector<LeviDatum> components(const AffineRootSystem& aff, const LeviDatum& levi);

/// Type of one connected component. Throws DomainError when the invariants
/// match no catalog entry.
LeviType classify(const AffineRootSystem& aff, const LeviDatum& component);

/// Every non-torus component is of type A or C, osp(m|2n) with
/// m in {1,3,4,5,6}, or D(2,1;a). Throws on affine components.
bool is_cuspidal(const std::vector<LeviType>& types);

struct LeviReport {
    std::string source;
    std::vector<Root> subset;  // S for standard parabolics
    std::vector<LeviType> components;
    bool cuspidal = false;
    bool parabolic_ok = false;
    bool affine = false;
    int depth = 0;
    std::vector<std::string> notes;

    std::string multiset() const;
};

/// Components (sorted), cuspidality and parabolicity of one parabolic subset.
LeviReport levi_report(const AffineRootSystem& aff, const ParabolicSubset& p, const std::string& source, int depth = 6);

struct CensusOptions {
    int depth = 6;
    bool dedup = false;
    bool include_full = true; // also report S = pi (the affine Levi)
};

/// One report per subset S of the distinguished base, in order of the
/// subset bitmask. Subsets are evaluated concurrently.
std::vector<LeviReport> census(const AffineRootSystem& aff, const CensusOptions& options = {});

} // namespace superroot

#endif
