#include "superroot/verify.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <set>
#include <sstream>

namespace superroot {

std::string to_string(CheckStatus status) {
    switch (status) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Whitelisted: return "whitelisted";
    }
    return "?";
}

void Report::add(std::string case_name, std::string locator, CheckStatus status, std::string detail) {
    entries.push_back({std::move(case_name), std::move(locator), status, std::move(detail)});
}

void Report::append(const Report& other) {
    entries.insert(entries.end(), other.entries.begin(), other.entries.end());
    for (const auto& [id, n] : other.coverage) coverage[id] += n;
}

int Report::count(CheckStatus status) const {
    return static_cast<int>(std::count_if(entries.begin(), entries.end(),
                                          [status](const CheckEntry& e) { return e.status == status; }));
}

void apply_whitelist(Report& report, const Whitelist& rules) {
    for (auto& e : report.entries) {
        if (e.status != CheckStatus::Fail) continue;
        for (const auto& rule : rules) {
            if (rule.pattern.empty() || e.case_name.find(rule.pattern) == std::string::npos) continue;
            e.status = CheckStatus::Whitelisted;
            e.detail += (e.detail.empty() ? "" : "; ") + rule.note;
            break;
        }
    }
}

namespace {

Root unit_root(int dim, int i, int c = 1) {
    std::vector<int> v(dim, 0);
    v[i] = c;
    return Root(v, 0);
}

Root delta_root(int dim) { return Root(std::vector<int>(dim, 0), 1); }

// Sum of c_i times the i-th root of the distinguished affine base.
Root combo(const Base& base, const std::vector<int>& c) {
    Root out(std::vector<int>(base.roots[0].coeffs.size(), 0), 0);
    for (std::size_t i = 0; i < c.size(); ++i) out = out + c[i] * base.roots[i];
    return out;
}

std::string root_list(const std::vector<Root>& roots) {
    std::string s = "[";
    for (std::size_t i = 0; i < roots.size(); ++i) s += (i ? " " : "") + roots[i].to_string();
    return s + "]";
}

std::string join_names(std::vector<LeviType> types) {
    std::vector<std::string> names;
    for (auto& t : types) names.push_back(canonical(t).name());
    std::sort(names.begin(), names.end());
    std::string out;
    for (std::size_t i = 0; i < names.size(); ++i) out += (i ? " + " : "") + names[i];
    return out.empty() ? "torus" : out;
}

std::vector<LeviType> nontrivial(const std::vector<LeviType>& comps) {
    std::vector<LeviType> out;
    for (const auto& c : comps)
        if (c.label != "torus") out.push_back(canonical(c));
    return out;
}

// ---------------------------------------------------------------- matcher
//
// A pattern is a list of fixed simple summands plus capacity slots. A
// component list matches when every component goes either to a distinct
// fixed summand with the same name or into a slot that admits its label
// within the slot's remaining rank budget. Unused summands are fine: the
// classification is up to direct summands.

struct Slot {
    bool allow_a = true;
    bool allow_c = true;
    bool c2_only = false; // C components must be C_2
    int capacity = 0;
    std::string text;
};

struct Pattern {
    std::vector<LeviType> fixed;
    std::vector<Slot> slots;
    std::string text;
};

Slot sp_slot(int k) { return {true, true, false, k, "A_" + std::to_string(k) + "-slot"}; }
Slot so_odd_slot(int k) { return {true, true, true, k, "B_" + std::to_string(k) + "-slot"}; }
Slot so_even_slot(int k) { return {true, false, false, k, "D_" + std::to_string(k) + "-slot"}; }

bool slot_admits(const Slot& s, const LeviType& t) {
    if (t.label == "A") return s.allow_a;
    if (t.label == "C") return s.allow_c && (!s.c2_only || t.params.at(0) == 2);
    return false;
}

bool assign(const std::vector<LeviType>& comps, std::size_t k, const Pattern& p, std::vector<char>& used,
            std::vector<int>& load) {
    if (k == comps.size()) return true;
    const LeviType& t = comps[k];
    const std::string name = t.name();
    for (std::size_t f = 0; f < p.fixed.size(); ++f) {
        if (used[f] || canonical(p.fixed[f]).name() != name) continue;
        used[f] = 1;
        if (assign(comps, k + 1, p, used, load)) return true;
        used[f] = 0;
    }
    if (t.label == "A" || t.label == "C") {
        const int r = t.params.at(0);
        for (std::size_t s = 0; s < p.slots.size(); ++s) {
            if (!slot_admits(p.slots[s], t) || load[s] + r > p.slots[s].capacity) continue;
            load[s] += r;
            if (assign(comps, k + 1, p, used, load)) return true;
            load[s] -= r;
        }
    }
    return false;
}

bool matches(const std::vector<LeviType>& comps, const Pattern& p) {
    std::vector<char> used(p.fixed.size(), 0);
    std::vector<int> load(p.slots.size(), 0);
    return assign(comps, 0, p, used, load);
}

void push_c(std::vector<LeviType>& v, int rank) {
    if (rank > 0) v.push_back(canonical(lie_type("C", rank)));
}

Pattern make_pattern(std::vector<LeviType> fixed, std::vector<Slot> slots) {
    Pattern p;
    for (auto& f : fixed) p.fixed.push_back(canonical(f));
    for (auto& s : slots)
        if (s.capacity > 0) p.slots.push_back(s);
    std::vector<std::string> parts;
    for (const auto& f : p.fixed) parts.push_back(f.name());
    for (const auto& s : p.slots) parts.push_back(s.text);
    for (std::size_t i = 0; i < parts.size(); ++i) p.text += (i ? " + " : "") + parts[i];
    if (p.text.empty()) p.text = "0";
    return p;
}

// Items for B(m,n) (so_slot = so_odd_slot, odd = true) and D(m,n).
std::vector<Pattern> orthosymplectic_patterns(int m, int n, bool odd) {
    const auto slot = [&](int k) { return odd ? so_odd_slot(k) : so_even_slot(k); };
    std::vector<Pattern> out;
    out.push_back(make_pattern({}, {sp_slot(n), slot(m)}));
    if (m >= 2) out.push_back(make_pattern({osp_type(4, 2 * n)}, {slot(m - 2)}));
    if (m >= 3) out.push_back(make_pattern({osp_type(6, 2 * n)}, {slot(m - 3)}));
    const bool small = odd ? (m == 1 || m == 2) : (m == 2 || m == 3);
    if (small)
        for (int k = 0; k < n; ++k)
            out.push_back(make_pattern({osp_type(odd ? 2 * m + 1 : 2 * m, 2 * (n - k))}, {sp_slot(k)}));
    for (int i = 0; i < n; ++i) {
        std::vector<LeviType> sp;
        push_c(sp, i);
        push_c(sp, n - i);
        if (m >= 2) {
            auto f = sp;
            f.push_back(lie_type("A", 1));
            f.push_back(lie_type("A", 1));
            out.push_back(make_pattern(f, {slot(m - 2)}));
        }
        if (m >= 3) {
            auto f = sp;
            f.push_back(lie_type("A", 2));
            out.push_back(make_pattern(f, {slot(m - 3)}));
        }
        out.push_back(make_pattern(sp, {slot(m)}));
    }
    return out;
}

std::vector<Pattern> b0n_patterns(int n) {
    std::vector<Pattern> out;
    out.push_back(make_pattern({}, {sp_slot(n)}));
    for (int i = 0; i < n; ++i) out.push_back(make_pattern({osp_type(1, 2 * (n - i))}, {sp_slot(i)}));
    return out;
}

std::vector<Pattern> type_a_patterns(int rank) {
    Slot s{true, false, false, rank, "A-slot of rank " + std::to_string(rank)};
    return {make_pattern({}, {s})};
}

std::vector<Pattern> type_c_patterns(int n) {
    Slot s{true, true, false, n - 1, "sp(2n-2)-slot"};
    return {make_pattern({}, {s})};
}

std::vector<std::vector<LeviType>> g3_list() {
    const auto A = [](int r) { return lie_type("A", r); };
    return {{A(1)},
            {A(1), A(1)},
            {A(1), A(2)},
            {osp_type(1, 2)},
            {A(1), osp_type(1, 2)},
            {A(2), osp_type(1, 2)},
            {osp_type(3, 2)},
            {osp_type(4, 2)},
            {A(1), osp_type(3, 2)}};
}

std::vector<std::vector<LeviType>> f4_list() {
    const auto A = [](int r) { return lie_type("A", r); };
    const LeviType so5 = lie_type("B", 2);
    return {{A(1)},          {A(1), A(1)},       {A(1), A(1), A(1)}, {so5},           {A(1), so5},
            {A(2)},          {A(1), A(2)},       {A(1), A(3)},       {A(3)},          {osp_type(4, 2)},
            {A(1), osp_type(4, 2)}};
}

std::vector<std::vector<LeviType>> d21a_list(const Rational& a) {
    const LeviType a1 = lie_type("A", 1);
    return {{a1}, {a1, a1}, {a1, a1, a1}, {d21a_type(canonical_d21a(a))}};
}

std::string theorem_b_locator(Family f) {
    switch (f) {
    case Family::A: return "cuspidal Levi list, A(m,n)";
    case Family::C: return "cuspidal Levi list, C(n)";
    case Family::B: return "cuspidal Levi list, B(m,n)";
    case Family::B0: return "cuspidal Levi list, B(0,n)";
    case Family::D: return "cuspidal Levi list, D(m,n)";
    case Family::D21a: return "cuspidal Levi list, D(2,1;a)";
    case Family::G3: return "cuspidal Levi list, G(3)";
    case Family::F4: return "cuspidal Levi list, F(4)";
    }
    return "cuspidal Levi list";
}

// Replaces every D(2,1;x) summand by osp(4,2) = D(2,1;1).
std::vector<LeviType> as_osp42(const std::vector<LeviType>& comps) {
    std::vector<LeviType> out;
    for (const auto& c : comps) out.push_back(c.label == "D(2,1;a)" ? osp_type(4, 2) : c);
    return out;
}

bool has_d21a(const std::vector<LeviType>& comps) {
    return std::any_of(comps.begin(), comps.end(), [](const LeviType& c) { return c.label == "D(2,1;a)"; });
}

std::set<std::string> list_names(const std::vector<std::vector<LeviType>>& list) {
    std::set<std::string> out;
    for (const auto& entry : list) out.insert(join_names(entry));
    return out;
}

void check_list_entry(Report& rep, const std::string& case_name, const std::string& locator,
                      const std::vector<LeviType>& comps, const std::set<std::string>& allowed, bool osp42_alias) {
    const std::string got = join_names(comps);
    if (allowed.count(got)) {
        rep.add(case_name, locator, CheckStatus::Pass, got);
        return;
    }
    if (osp42_alias && has_d21a(comps) && allowed.count(join_names(as_osp42(comps)))) {
        rep.add(case_name, locator, CheckStatus::Whitelisted,
                got + "; the regular subalgebra has a D(2,1;x) summand with x off the orbit of 1, listed as osp(4,2)");
        return;
    }
    rep.add(case_name, locator, CheckStatus::Fail, got + " is not in the list");
}

const LeviReport* find_subset(const std::vector<LeviReport>& census, const std::vector<Root>& s) {
    std::vector<Root> want = s;
    std::sort(want.begin(), want.end());
    for (const auto& rep : census) {
        std::vector<Root> have = rep.subset;
        std::sort(have.begin(), have.end());
        if (have == want) return &rep;
    }
    return nullptr;
}

// G(S) for S = pi minus alpha_k splits as osp(2,2k-2) on alpha_0..alpha_{k-1}
// and a symplectic piece on alpha_{k+1}..alpha_n, printed as sp(2n-2k-2).
void c_complement_checks(Report& rep, const TypeTag& tag, const AffineRootSystem& aff,
                         const std::vector<LeviReport>& census) {
    const int n = tag.n;
    const auto& base = aff.distinguished_base();
    for (int k = 2; k <= n - 1; ++k) {
        std::vector<Root> s;
        for (int i = 0; i <= n; ++i)
            if (i != k) s.push_back(base.roots[i]);
        const std::string case_name = tag.name() + " S=pi\\{alpha_" + std::to_string(k) + "}";
        const std::string locator = "C(n) complement split, G(S) = G1 + G2";
        const LeviReport* r = find_subset(census, s);
        rep.touch("C(n) complement split k=" + std::to_string(k));
        if (!r) {
            rep.add(case_name, locator, CheckStatus::Fail, "subset missing from census");
            continue;
        }
        std::vector<LeviType> printed{osp_type(2, 2 * k - 2)};
        push_c(printed, n - k - 1);
        std::vector<LeviType> derived{osp_type(2, 2 * k - 2)};
        push_c(derived, n - k);
        const std::string got = join_names(nontrivial(r->components));
        if (got == join_names(printed))
            rep.add(case_name, locator, CheckStatus::Pass, got);
        else if (got == join_names(derived))
            rep.add(case_name, locator, CheckStatus::Whitelisted,
                    got + "; alpha_" + std::to_string(k + 1) + "..alpha_n span C_" + std::to_string(n - k) +
                        " while the printed second summand is sp(" + std::to_string(2 * (n - k - 1)) + ")");
        else
            rep.add(case_name, locator, CheckStatus::Fail,
                    got + " matches neither " + join_names(printed) + " nor " + join_names(derived));
    }
}

} // namespace

// -------------------------------------------------------------- fixtures

BaseFixture a_block_base(int m, int n, int i) {
    if (n < 1 || i < 1 || i > n) throw DomainError("A(m,n) block base needs 1 <= i <= n");
    const TypeTag tag = TypeTag::A(m, n);
    const int dim = m + n + 1;
    // alpha_k -> index k-1, gamma -> n, beta_j -> n+j.
    const auto alpha = [&](int k) { return unit_root(dim, k - 1); };
    const Root gamma = unit_root(dim, n);
    const auto beta = [&](int j) { return unit_root(dim, n + j); };
    Root theta = Root(std::vector<int>(dim, 0), 0);
    for (int k = 1; k <= n; ++k) theta = theta + alpha(k);

    BaseFixture f;
    f.id = "A(m,n) block base " + tag.name() + " i=" + std::to_string(i);
    f.locator = "A(m,n) base-change lemma (i), i=" + std::to_string(i);
    f.tag = tag;
    for (int k = 1; k <= i - 1; ++k) f.roots.push_back(alpha(i - k));
    f.roots.push_back(delta_root(dim) - theta);
    for (int k = 1; k <= n - i; ++k) f.roots.push_back(alpha(n - k + 1));
    Root beta_sum = Root(std::vector<int>(dim, 0), 0);
    for (int j = 1; j <= m; ++j) {
        f.roots.push_back(beta(j));
        beta_sum = beta_sum + beta(j);
    }
    Root first = -(gamma + beta_sum);
    for (int k = i + 1; k <= n; ++k) first = first - alpha(k);
    Root second = gamma;
    for (int k = i; k <= n; ++k) second = second + alpha(k);
    f.roots.push_back(first);
    f.roots.push_back(second);
    return f;
}

BaseFixture c_case2_base(int n) {
    if (n < 3) throw DomainError("C(n) case-2 base needs n >= 3");
    const TypeTag tag = TypeTag::C(n);
    const auto aff = affinize(build_finite(tag));
    const auto& b = aff.distinguished_base();
    std::vector<int> c(n + 1, 0);
    BaseFixture f;
    f.id = "C(n) case-2 base " + tag.name();
    f.locator = "C(n) case 2, alpha'_n = alpha_0 + alpha_1";
    f.tag = tag;
    for (int i = 1; i <= n - 1; ++i) c[i] = -1;
    f.roots.push_back(combo(b, c));
    std::fill(c.begin(), c.end(), 0);
    for (int i = 1; i <= n; ++i) c[i] = 1;
    f.roots.push_back(combo(b, c));
    for (int k = 2; k <= n - 1; ++k) f.roots.push_back(b.roots[n - k + 1]);
    f.roots.push_back(b.roots[0] + b.roots[1]);
    return f;
}

BaseFixture d21a_case2_base(Rational a) {
    const TypeTag tag = TypeTag::D21a(a);
    BaseFixture f;
    f.id = "D(2,1;a) case-2 base " + tag.name();
    f.locator = "D(2,1;a) case 2, alpha_0 = -alpha_2 - 2 alpha_1 - alpha_3 + delta";
    f.tag = tag;
    f.roots = {Root({-2, -1, -1}, 1), Root({1, 0, 0}, 0), Root({0, 1, 0}, 0), Root({0, 0, 1}, 0)};
    return f;
}

std::vector<BaseFixture> base_fixtures(const TypeTag& tag) {
    std::vector<BaseFixture> out;
    switch (tag.family) {
    case Family::A:
        if (tag.m != tag.n)
            for (int i = 1; i <= tag.n; ++i) out.push_back(a_block_base(tag.m, tag.n, i));
        break;
    case Family::C:
        if (tag.n >= 3) out.push_back(c_case2_base(tag.n));
        break;
    case Family::D21a: out.push_back(d21a_case2_base(tag.a)); break;
    default: break;
    }
    return out;
}

std::vector<ExplicitFixture> exceptional_explicit_fixtures() {
    std::vector<ExplicitFixture> out;
    {
        const TypeTag tag = TypeTag::G3();
        const auto aff = affinize(build_finite(tag));
        const auto& b = aff.distinguished_base();
        const auto r = [&](std::vector<int> c) { return combo(b, c); };
        out.push_back({"G(3) case 3", "G(3) case 3", tag,
                       {r({1, 0, 0, 0}), r({0, 0, 0, 1}), r({1, 2, 1, 0}), r({1, 2, 1, 1})},
                       {r({0, 1, 0, 0}), r({1, 1, 0, 0})}});
        out.push_back({"G(3) case 4", "G(3) case 4", tag,
                       {r({0, 2, 4, 2}), r({0, 1, 2, 1}), r({0, 0, 0, 1}), r({1, 2, 1, 0}), r({1, 2, 1, 1})},
                       {r({0, 1, 0, 0}), r({0, 1, 1, 0}), r({0, 1, 1, 1})}});
        out.push_back({"G(3) case 6", "G(3) case 6", tag,
                       {r({0, 2, 4, 2}), r({0, 0, 1, 0}), r({1, 2, 1, 0}), r({0, 1, 1, 1}), r({0, 1, 2, 1}),
                        r({0, 1, 3, 1})},
                       {r({0, 1, 0, 0}), r({0, 1, 1, 0})}});
    }
    {
        const TypeTag tag = TypeTag::F4();
        const auto aff = affinize(build_finite(tag));
        const auto& b = aff.distinguished_base();
        const auto r = [&](std::vector<int> c) { return combo(b, c); };
        const Root d = aff.delta();
        // beta = alpha_0 + 2 alpha_1 + alpha_2
        out.push_back({"F(4) case 4", "F(4) case 4", tag,
                       {r({0, 0, 0, 1, 0}), r({0, 0, 0, 0, 1}), r({0, 0, 0, 1, 1}), r({1, 2, 1, 0, 0}),
                        r({1, 2, 1, 1, 0}), r({1, 2, 1, 1, 1}), r({1, 0, 0, 0, 0})},
                       {r({0, 1, 0, 0, 0}), d - r({0, 1, 3, 2, 1})}});
        out.push_back({"F(4) case 5", "F(4) case 5", tag,
                       {r({0, 0, 1, 0, 0}), r({0, 0, 0, 0, 1}), r({0, 1, 1, 1, 0}), r({0, 1, 1, 1, 1}),
                        r({0, 1, 2, 1, 0}), r({0, 1, 2, 1, 1}), d - r({0, 0, 2, 2, 1}), r({0, 2, 3, 2, 1})},
                       {r({0, 1, 0, 0, 0}), r({0, 1, 1, 0, 0})}});
        out.push_back({"F(4) case 6", "F(4) case 6", tag,
                       {r({0, 0, 0, 1, 0}), r({0, 0, 0, 0, 1}), r({0, 0, 0, 1, 1}), r({1, 2, 1, 0, 0}),
                        r({1, 2, 1, 1, 0}), r({1, 2, 1, 1, 1}), r({0, 2, 3, 2, 1})},
                       {r({0, 1, 0, 0, 0}), r({0, 1, 1, 0, 0}), r({0, 1, 1, 1, 0}), r({0, 1, 1, 1, 1})}});
    }
    return out;
}

std::vector<ExplicitFixture> bmn_explicit_fixtures(int m, int n) {
    if (m < 2 || n < 1) throw DomainError("B(m,n) explicit cases need m >= 2 and n >= 1");
    const TypeTag tag = TypeTag::B(m, n);
    const auto aff = affinize(build_finite(tag));
    const auto& b = aff.distinguished_base();
    // Base order: alpha_0, alpha_1..alpha_n, beta_1..beta_m.
    const auto alpha = [&](int i) { return b.roots[i]; };
    const auto beta = [&](int j) { return b.roots[n + j]; };
    Root gamma1 = 2 * alpha(n);
    for (int j = 1; j <= m; ++j) gamma1 = gamma1 + 2 * beta(j);
    Root gamma2 = aff.delta() - beta(1);
    for (int j = 2; j <= m; ++j) gamma2 = gamma2 - 2 * beta(j);
    // alpha_n + ... + alpha_i with the first `lead` betas in front.
    const auto chain = [&](int lead, int i) {
        Root r = alpha(n);
        for (int k = i; k < n; ++k) r = r + alpha(k);
        for (int j = 1; j <= lead; ++j) r = r + beta(j);
        return r;
    };
    std::vector<ExplicitFixture> out;
    for (int hole = 2; hole <= 3 && hole <= m; ++hole) {
        for (int k = 0; k < n; ++k) {
            ExplicitFixture f;
            f.tag = tag;
            f.zero_is_pm_y = false;
            f.id = tag.name() + " case " + std::to_string(hole + 3) + " k=" + std::to_string(k);
            f.locator = "B(m,n) case " + std::to_string(hole + 3) + ", P0 without alpha_" + std::to_string(k) +
                        " and beta_" + std::to_string(hole);
            for (int i = 0; i < n; ++i)
                if (i != k) f.y.push_back(alpha(i));
            f.y.push_back(gamma1);
            for (int j = 1; j <= m; ++j)
                if (j != hole) f.y.push_back(beta(j));
            f.y.push_back(gamma2);
            for (int lead = 0; lead < hole; ++lead)
                for (int i = 1; i <= n; ++i) f.z.push_back(chain(lead, i));
            out.push_back(std::move(f));
        }
    }
    return out;
}

std::vector<DeltaFixture> delta_fixtures(const TypeTag& tag) {
    std::vector<DeltaFixture> out;
    DeltaFixture f;
    f.tag = tag;
    switch (tag.family) {
    case Family::A:
        f.id = "delta " + tag.name();
        f.locator = "A(m,n) base-change lemma, -theta+delta = gamma + beta_1 + ... + beta_m + alpha_0";
        f.coefficients.assign(tag.m + tag.n + 2, 1);
        break;
    case Family::B:
        f.id = "delta " + tag.name();
        f.locator = "B(m,n) delta = alpha_0 + 2 sum alpha_i + 2 sum beta_j";
        f.coefficients.assign(tag.m + tag.n + 1, 2);
        f.coefficients[0] = 1;
        f.typo_corrected = true;
        break;
    case Family::B0:
        f.id = "delta " + tag.name();
        f.locator = "B(0,n) alpha_0 = -2 sum alpha_i + delta";
        f.coefficients.assign(tag.n + 1, 2);
        f.coefficients[0] = 1;
        break;
    case Family::D:
        f.id = "delta " + tag.name();
        f.locator = "D(m,n) delta = alpha_0 + 2 sum alpha_i + 2 sum beta_j + beta_{m-1} + beta_m";
        f.coefficients.assign(tag.m + tag.n + 1, 2);
        f.coefficients[0] = 1;
        f.coefficients[tag.n + tag.m - 1] = 1;
        f.coefficients[tag.n + tag.m] = 1;
        f.typo_corrected = true;
        break;
    case Family::D21a:
        f.id = "delta " + tag.name();
        f.locator = "D(2,1;a) case 2, alpha_0 = -alpha_2 - 2 alpha_1 - alpha_3 + delta";
        f.coefficients = {1, 2, 1, 1};
        break;
    default: return out;
    }
    out.push_back(std::move(f));
    return out;
}

// ------------------------------------------------------------------ suites

Report check_theorem_b(const TypeTag& tag, const std::vector<LeviReport>& census) {
    Report rep;
    const std::string locator = theorem_b_locator(tag.family);
    const std::string fixture = locator + " " + tag.name();
    std::vector<Pattern> patterns;
    std::set<std::string> listed;
    bool use_list = false, osp42_alias = false;
    switch (tag.family) {
    case Family::A: patterns = type_a_patterns(tag.m + tag.n); break;
    case Family::C: patterns = type_c_patterns(tag.n); break;
    case Family::B: patterns = orthosymplectic_patterns(tag.m, tag.n, true); break;
    case Family::B0: patterns = b0n_patterns(tag.n); break;
    case Family::D: patterns = orthosymplectic_patterns(tag.m, tag.n, false); break;
    case Family::D21a:
        listed = list_names(d21a_list(tag.a));
        use_list = true;
        break;
    case Family::G3:
        listed = list_names(g3_list());
        use_list = osp42_alias = true;
        break;
    case Family::F4:
        listed = list_names(f4_list());
        use_list = osp42_alias = true;
        break;
    }

    std::set<std::string> seen;
    for (const auto& r : census) {
        const std::string case_name = tag.name() + " " + r.source;
        if (!r.parabolic_ok) {
            rep.add(case_name, locator, CheckStatus::Fail, "P_S failed the parabolic check: " + root_list(r.subset));
            continue;
        }
        if (r.affine) {
            rep.add(case_name, locator, CheckStatus::Pass, "affine Levi " + r.multiset() + "; not cuspidal");
            continue;
        }
        if (!r.cuspidal) {
            rep.add(case_name, locator, CheckStatus::Pass, "not cuspidal: " + r.multiset());
            continue;
        }
        const auto comps = nontrivial(r.components);
        if (comps.empty()) {
            rep.add(case_name, locator, CheckStatus::Pass, "torus");
            continue;
        }
        rep.touch(fixture);
        seen.insert(join_names(comps));
        if (use_list) {
            check_list_entry(rep, case_name, locator, comps, listed, osp42_alias);
            continue;
        }
        const auto hit = std::find_if(patterns.begin(), patterns.end(),
                                      [&](const Pattern& p) { return matches(comps, p); });
        if (hit != patterns.end())
            rep.add(case_name, locator, CheckStatus::Pass, join_names(comps) + " within " + hit->text);
        else
            rep.add(case_name, locator, CheckStatus::Fail,
                    join_names(comps) + " fits no listed algebra; S = " + root_list(r.subset));
    }

    if (tag.family == Family::D21a) {
        rep.touch(fixture + " set");
        std::string got, want;
        for (const auto& s : seen) got += (got.empty() ? "" : ", ") + s;
        for (const auto& s : listed) want += (want.empty() ? "" : ", ") + s;
        rep.add(tag.name() + " cuspidal set", locator, seen == listed ? CheckStatus::Pass : CheckStatus::Fail,
                "{" + got + "} vs {" + want + "}");
    }
    if (tag.family == Family::C && !census.empty()) c_complement_checks(rep, tag, affinize(build_finite(tag)), census);
    return rep;
}

Report run_theorem_b(const TypeTag& tag, int depth) {
    const auto aff = affinize(build_finite(tag));
    CensusOptions opts;
    opts.depth = depth;
    return check_theorem_b(tag, census(aff, opts));
}

Report run_theorem_b(const std::vector<TypeTag>& range, int depth) {
    std::vector<std::future<Report>> jobs;
    for (const auto& tag : range)
        jobs.push_back(std::async(std::launch::async, [tag, depth] { return run_theorem_b(tag, depth); }));
    Report out;
    for (auto& j : jobs) out.append(j.get());
    return out;
}

Report run_corollary4(const std::vector<LeviReport>& census, const std::string& case_prefix) {
    Report rep;
    const std::string locator = "cuspidal components are A, C, osp(1..6,2n) or D(2,1;a)";
    for (const auto& r : census) {
        if (!r.cuspidal) continue;
        rep.touch(locator);
        std::vector<std::string> bad;
        for (const auto& c : r.components) {
            if (c.affine) {
                bad.push_back(c.name());
                continue;
            }
            const std::string& l = c.label;
            bool ok = l == "torus" || l == "A" || l == "C" || l == "D(2,1;a)";
            if (l == "osp") {
                const int m = c.params.at(0);
                ok = m == 1 || m == 3 || m == 4 || m == 5 || m == 6;
            }
            if (!ok) bad.push_back(c.name());
        }
        const std::string case_name = (case_prefix.empty() ? "" : case_prefix + " ") + r.source;
        if (bad.empty()) {
            rep.add(case_name, locator, CheckStatus::Pass, r.multiset());
        } else {
            std::string list;
            for (const auto& b : bad) list += (list.empty() ? "" : ", ") + b;
            rep.add(case_name, locator, CheckStatus::Fail, "cuspidal entry " + r.multiset() + " has " + list);
        }
    }
    return rep;
}

Report run_basechange_suite(const std::vector<TypeTag>& families, int depth) {
    if (depth < 2) throw DomainError("base-change suite needs depth >= 2");
    std::vector<std::future<Report>> jobs;
    for (const auto& tag : families) {
        jobs.push_back(std::async(std::launch::async, [tag, depth] {
            Report rep;
            const auto aff = affinize(build_finite(tag));
            const auto& base = aff.distinguished_base();
            const std::string name = tag.name();
            const auto verdict = [&](const std::vector<Root>& roots) {
                return is_base(aff, roots, depth) ? CheckStatus::Pass : CheckStatus::Fail;
            };
            rep.add(name + " distinguished", "distinguished base", verdict(base.roots),
                    root_list(base.roots));
            for (int i = 0; i < static_cast<int>(base.size()); ++i) {
                const Root& a = base.roots[i];
                const auto kind = aff.kind(a);
                const bool isotropic = aff.form(a, a).is_zero();
                std::optional<Base> reflected;
                std::string what;
                if (kind == RootKind::RealEven && !isotropic) {
                    reflected = even_reflection(aff, base, i);
                    what = "even";
                } else if (kind == RootKind::RealOdd && isotropic) {
                    reflected = odd_reflection(aff, base, i);
                    what = "odd";
                } else {
                    continue; // odd non-isotropic: no reflection inside the base family
                }
                rep.add(name + " " + what + " reflection at " + std::to_string(i), "single reflection of the distinguished base",
                        verdict(reflected->roots), root_list(reflected->roots));
            }
            for (const auto& f : base_fixtures(tag)) {
                rep.touch(f.id);
                rep.add(f.id, f.locator, verdict(f.roots), root_list(f.roots));
            }
            return rep;
        }));
    }
    Report out;
    for (auto& j : jobs) out.append(j.get());
    return out;
}

Report run_explicit_suite(const std::vector<ExplicitFixture>& fixtures, int depth) {
    std::vector<std::future<Report>> jobs;
    for (const auto& f : fixtures) {
        jobs.push_back(std::async(std::launch::async, [f, depth] {
            Report rep;
            rep.touch(f.id);
            const auto aff = affinize(build_finite(f.tag));
            const auto p = explicit_parabolic_unchecked(aff, aff.distinguished_base(), f.y, f.z);
            const auto check = is_parabolic(aff, p, depth);
            rep.add(f.id + " parabolic", f.locator, check.ok ? CheckStatus::Pass : CheckStatus::Fail,
                    check.ok ? "closed and covering at depth " + std::to_string(depth) : check.witness->describe());
            if (f.zero_is_pm_y) {
                auto zero = decompose(aff, p, depth).zero;
                std::vector<Root> want;
                for (const auto& y : f.y) {
                    want.push_back(y);
                    want.push_back(-y);
                }
                std::sort(zero.begin(), zero.end());
                std::sort(want.begin(), want.end());
                const bool same = zero == want;
                rep.add(f.id + " P0", f.locator, same ? CheckStatus::Pass : CheckStatus::Fail,
                        same ? "P0 = -Y u Y, " + std::to_string(zero.size()) + " roots"
                             : "P0 " + root_list(zero) + " vs -Y u Y " + root_list(want));
            }
            return rep;
        }));
    }
    Report out;
    for (auto& j : jobs) out.append(j.get());
    return out;
}

Report run_delta_suite(const std::vector<TypeTag>& families) {
    Report rep;
    for (const auto& tag : families) {
        const auto aff = affinize(build_finite(tag));
        const auto got = delta_expansion(aff, aff.distinguished_base());
        std::ostringstream text;
        for (std::size_t i = 0; i < got.size(); ++i) text << (i ? " " : "") << got[i];
        for (const auto& f : delta_fixtures(tag)) {
            rep.touch(f.id);
            if (got != f.coefficients)
                rep.add(f.id, f.locator, CheckStatus::Fail, "computed " + text.str());
            else if (f.typo_corrected)
                rep.add(f.id, f.locator, CheckStatus::Whitelisted,
                        text.str() + "; the printed first sum omits its summand, read as 2 alpha_i");
            else
                rep.add(f.id, f.locator, CheckStatus::Pass, text.str());
        }
    }
    return rep;
}

Report run_support_suite(const std::vector<TypeTag>& families, int depth, const KostantOptions& options) {
    std::vector<std::future<Report>> jobs;
    for (const auto& tag : families) {
        jobs.push_back(std::async(std::launch::async, [tag, depth, options] {
            Report rep;
            const auto aff = affinize(build_finite(tag));
            const auto& base = aff.distinguished_base();
            const std::vector<Root> finite(base.roots.begin() + 1, base.roots.end());
            for (const auto& [label, s] : {std::pair<std::string, std::vector<Root>>{"P_empty", {}},
                                           std::pair<std::string, std::vector<Root>>{"P_finite", finite}}) {
                const auto p = standard_parabolic(aff, base, s);
                const bool ok = induced_support_check(aff, p, depth, options);
                rep.touch("support " + label);
                rep.add(tag.name() + " " + label, "support avoids lambda + k delta, k > 0", ok ? CheckStatus::Pass : CheckStatus::Fail,
                        "depth " + std::to_string(depth));
            }
            return rep;
        }));
    }
    Report out;
    for (auto& j : jobs) out.append(j.get());
    return out;
}

} // namespace superroot
