#ifndef SUPERROOT_VERIFY_HPP
#define SUPERROOT_VERIFY_HPP

#include <map>
#include <string>
#include <vector>

#include "superroot/characters.hpp"
#include "superroot/levi.hpp"

namespace superroot {

enum class CheckStatus { Pass, Fail, Whitelisted };
std::string to_string(CheckStatus status);

struct CheckEntry {
    std::string case_name;
    std::string locator;
    CheckStatus status = CheckStatus::Pass;
    std::string detail;
};

/// Ordered audit log. Failures never abort a run.
struct Report {
    std::vector<CheckEntry> entries;
    std::map<std::string, int> coverage; // fixture id -> checks that used it

    void add(std::string case_name, std::string locator, CheckStatus status, std::string detail = {});
    void touch(const std::string& fixture_id) { ++coverage[fixture_id]; }
    void append(const Report& other);
    int count(CheckStatus status) const;
    int failures() const { return count(CheckStatus::Fail); }
    bool ok() const { return failures() == 0; }
};

/// User-supplied exemptions: a failing entry whose case name contains
/// `pattern` is downgraded to whitelisted with `note` appended.
struct WhitelistRule {
    std::string pattern;
    std::string note;
};
using Whitelist = std::vector<WhitelistRule>;
void apply_whitelist(Report& report, const Whitelist& rules);

// ------------------------------------------------------------ fixtures

/// A base written out root by root in coordinates of the distinguished
/// finite simple roots (plus delta).
struct BaseFixture {
    std::string id;
    std::string locator;
    TypeTag tag;
    std::vector<Root> roots;
};

/// A(m,n): the i-th base that swaps -theta+delta into the sl(n+1) block,
/// 1 <= i <= n.
BaseFixture a_block_base(int m, int n, int i);
/// C(n), n >= 3: the base that brings alpha_0 + alpha_1 in as the last root.
BaseFixture c_case2_base(int n);
/// D(2,1;a): the base with alpha_0 = -alpha_2 - 2 alpha_1 - alpha_3 + delta.
BaseFixture d21a_case2_base(Rational a);

/// Every base fixture that applies to the given family.
std::vector<BaseFixture> base_fixtures(const TypeTag& tag);

/// Explicit parabolic P = ZY n Delta u (Delta+ \ (P0 u Z)) u -Z, with the
/// stated core P0 = -Y u Y when `zero_is_pm_y` holds.
struct ExplicitFixture {
    std::string id;
    std::string locator;
    TypeTag tag;
    std::vector<Root> y;
    std::vector<Root> z;
    bool zero_is_pm_y = true;
};

/// G(3) cases 3, 4, 6 and F(4) cases 4, 5, 6.
std::vector<ExplicitFixture> exceptional_explicit_fixtures();
/// B(m,n), m > 1: cases 5 (hole at beta_2) and 6 (hole at beta_3, m > 2)
/// for each removed alpha_k, 0 <= k < n.
std::vector<ExplicitFixture> bmn_explicit_fixtures(int m, int n);

/// Expected delta coefficients over the distinguished base as printed,
/// with the omitted summand read as 2 alpha_i.
struct DeltaFixture {
    std::string id;
    std::string locator;
    TypeTag tag;
    std::vector<int> coefficients;
    bool typo_corrected = false;
};
std::vector<DeltaFixture> delta_fixtures(const TypeTag& tag);

// -------------------------------------------------------------- suites

/// Census of standard parabolics checked against the classification item
/// of the family. One entry per subset of the base, then summary entries.
Report run_theorem_b(const TypeTag& tag, int depth = 6);
/// Concurrent over the range; entries keep the order of `range`.
Report run_theorem_b(const std::vector<TypeTag>& range, int depth = 6);
Report check_theorem_b(const TypeTag& tag, const std::vector<LeviReport>& census);

/// Every component of a cuspidal entry must carry one of the labels A, C,
/// osp(m,2n) with m in {1,3,4,5,6}, D(2,1;a) (or torus). Labels are taken
/// as given; no alias is resolved here.
Report run_corollary4(const std::vector<LeviReport>& census, const std::string& case_prefix = "");

/// is_base for distinguished bases, their single even and odd reflections
/// and the base fixtures of each family.
Report run_basechange_suite(const std::vector<TypeTag>& families, int depth = 6);

/// is_parabolic at `depth` and, where stated, P0 = -Y u Y in the window.
Report run_explicit_suite(const std::vector<ExplicitFixture>& fixtures, int depth = 6);

/// Delta expansions over the distinguished base against the fixtures.
Report run_delta_suite(const std::vector<TypeTag>& families);

/// Support shadow for P_empty and P_{finite base} of each family.
Report run_support_suite(const std::vector<TypeTag>& families, int depth = 4, const KostantOptions& options = {});

} // namespace superroot

#endif
