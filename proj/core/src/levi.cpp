#include "superroot/levi.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>
#include <unordered_set>

namespace superroot {

// --------------------------------------------------------------- LeviType

namespace {

std::string rational_text(const Rational& r) {
    return r.denominator() == 1 ? std::to_string(r.numerator()) : to_string(r);
}

} // namespace

std::string LeviType::name() const {
    std::string base;
    if (label == "A(m,n)")
        base = "A(" + std::to_string(params.at(0)) + "," + std::to_string(params.at(1)) + ")";
    else if (label == "osp")
        base = "osp(" + std::to_string(params.at(0)) + "," + std::to_string(params.at(1)) + ")";
    else if (label == "D(2,1;a)")
        base = "D(2,1;" + (a ? rational_text(*a) : std::string("a")) + ")";
    else if (label == "A" || label == "B" || label == "C" || label == "D" || label == "E")
        base = label + "_" + std::to_string(params.at(0));
    else
        base = label;
    return affine ? "affine(" + base + ")" : base;
}

LeviType lie_type(const std::string& label, int rank) { return {label, {rank}, std::nullopt, false}; }
LeviType osp_type(int m, int n2) { return {"osp", {m, n2}, std::nullopt, false}; }
LeviType super_a_type(int m, int n) { return {"A(m,n)", {std::max(m, n), std::min(m, n)}, std::nullopt, false}; }
LeviType d21a_type(Rational a) { return {"D(2,1;a)", {}, a, false}; }

LeviType canonical(const LeviType& t) {
    LeviType c = t;
    const auto p = [&](std::size_t i) { return t.params.at(i); };
    if (t.label == "B(m,n)") c = p(0) == 0 ? osp_type(1, 2 * p(1)) : osp_type(2 * p(0) + 1, 2 * p(1));
    else if (t.label == "C(n)") c = osp_type(2, 2 * p(0) - 2);
    else if (t.label == "D(m,n)") c = osp_type(2 * p(0), 2 * p(1));
    else if (t.label == "B" && p(0) == 1) c = lie_type("A", 1);
    else if (t.label == "B" && p(0) == 2) c = lie_type("C", 2);
    else if (t.label == "C" && p(0) == 1) c = lie_type("A", 1);
    else if (t.label == "D" && p(0) == 3) c = lie_type("A", 3);
    else if (t.label == "A(m,n)") c = super_a_type(p(0), p(1));
    if (c.label == "osp" && c.params.at(0) == 2 && c.params.at(1) == 2) c = super_a_type(1, 0);
    c.affine = t.affine;
    return c;
}

// ------------------------------------------------------------- root sets

namespace {

bool lex_positive(const Root& r) {
    for (int c : r.coeffs)
        if (c != 0) return c > 0;
    return r.delta > 0;
}

using RootSet = std::unordered_set<Root, RootHash>;

std::vector<Root> indecomposables(const std::vector<Root>& roots) {
    std::vector<Root> pos;
    for (const auto& r : roots)
        if (lex_positive(r)) pos.push_back(r);
    const RootSet pos_set(pos.begin(), pos.end());
    std::vector<Root> out;
    for (const auto& p : pos) {
        bool decomposable = false;
        for (const auto& q : pos) {
            if (q == p) continue;
            if (pos_set.count(p - q)) {
                decomposable = true;
                break;
            }
        }
        if (!decomposable) out.push_back(p);
    }
    std::sort(out.begin(), out.end());
    return out;
}

Rational numeric(const AffineRootSystem& aff, const Scalar& s) { return s.evaluate(aff.finite().type().a); }

// Connected classes of `base` under the given adjacency.
std::vector<std::vector<int>> connected_classes(int n, const std::function<bool(int, int)>& adjacent) {
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (adjacent(i, j)) parent[find(i)] = find(j);
    std::map<int, std::vector<int>> groups;
    for (int i = 0; i < n; ++i) groups[find(i)].push_back(i);
    std::vector<std::vector<int>> out;
    for (auto& [root, members] : groups) out.push_back(members);
    std::sort(out.begin(), out.end());
    return out;
}

int cartan_entry(const AffineRootSystem& aff, const Root& ai, const Root& aj) {
    const Scalar norm = aff.form(ai, ai);
    const Scalar f = aff.form(ai, aj);
    Rational c;
    if (auto q = Scalar::ratio(f, norm)) c = *q * 2;
    else c = numeric(aff, f) * 2 / numeric(aff, norm);
    if (c.denominator() != 1) throw DomainError("non-integral Cartan entry in even part");
    return static_cast<int>(c.numerator());
}

// Cartan type of a connected even simple system.
LeviType recognize_cartan(const AffineRootSystem& aff, const std::vector<Root>& base) {
    const int k = static_cast<int>(base.size());
    if (k == 1) return lie_type("A", 1);
    std::vector<std::vector<int>> a(k, std::vector<int>(k));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) a[i][j] = cartan_entry(aff, base[i], base[j]);
    std::vector<int> degree(k, 0);
    int triple = 0, dbl = -1, dbl_i = -1, dbl_j = -1;
    for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) {
            if (a[i][j] == 0) continue;
            ++degree[i];
            ++degree[j];
            const int prod = a[i][j] * a[j][i];
            if (prod == 3) ++triple;
            if (prod == 2) {
                dbl = prod;
                dbl_i = i;
                dbl_j = j;
            }
            if (prod >= 4) throw DomainError("even part is not of finite type");
        }
    }
    if (triple) return lie_type("G2", 2);
    if (dbl > 0) {
        if (k == 2) return lie_type("C", 2);
        if (degree[dbl_i] == 2 && degree[dbl_j] == 2) return lie_type("F4", 4);
        const int end = degree[dbl_i] == 1 ? dbl_i : dbl_j;
        const int other = end == dbl_i ? dbl_j : dbl_i;
        // The end node is short iff |a[end][other]| == 2.
        return lie_type(std::abs(a[end][other]) == 2 ? "B" : "C", k);
    }
    const int branch = static_cast<int>(std::count_if(degree.begin(), degree.end(), [](int d) { return d == 3; }));
    if (branch == 0) return lie_type("A", k);
    const int leaves = static_cast<int>(std::count_if(degree.begin(), degree.end(), [](int d) { return d == 1; }));
    // Distinguish D_k from E_k: D has two leaves adjacent to the branch node.
    int b = static_cast<int>(std::find(degree.begin(), degree.end(), 3) - degree.begin());
    int short_arms = 0;
    for (int j = 0; j < k; ++j)
        if (j != b && a[b][j] != 0 && degree[j] == 1) ++short_arms;
    if (leaves == 3 && short_arms >= 2) return canonical(lie_type("D", k));
    return lie_type("E", k);
}

struct EvenPart {
    std::vector<LeviType> types; // canonical, sorted
    std::vector<Root> a1_roots;  // positive roots of the A_1 factors
};

EvenPart even_part(const AffineRootSystem& aff, const std::vector<Root>& even_roots) {
    EvenPart out;
    const auto base = indecomposables(even_roots);
    const auto classes = connected_classes(static_cast<int>(base.size()), [&](int i, int j) {
        return !aff.form(base[i], base[j]).is_zero();
    });
    for (const auto& cls : classes) {
        std::vector<Root> sub;
        for (int i : cls) sub.push_back(base[i]);
        auto t = recognize_cartan(aff, sub);
        if (t.label == "A" && t.params[0] == 1) out.a1_roots.push_back(sub[0]);
        out.types.push_back(t);
    }
    std::sort(out.types.begin(), out.types.end());
    return out;
}

std::vector<std::string> names(std::vector<LeviType> types) {
    std::vector<std::string> out;
    for (const auto& t : types) out.push_back(t.name());
    std::sort(out.begin(), out.end());
    return out;
}

void add_even(std::vector<LeviType>& v, const std::string& label, int rank) {
    if (rank <= 0) return;
    if (label == "D" && rank == 2) {
        v.push_back(lie_type("A", 1));
        v.push_back(lie_type("A", 1));
        return;
    }
    if (label == "D" && rank == 1) return; // so(2) is a torus
    v.push_back(canonical(lie_type(label, rank)));
}

} // namespace

Rational canonical_d21a(const Rational& a) {
    const Rational one(1);
    const std::vector<Rational> orbit{a, one / a, -one - a, -one / (one + a), -a / (one + a), -(one + a) / a};
    const auto key = [](const Rational& x) {
        return std::make_pair(std::abs(x.numerator()) + x.denominator(), x);
    };
    return *std::min_element(orbit.begin(), orbit.end(), [&](const Rational& x, const Rational& y) {
        return key(x) < key(y);
    });
}

// ------------------------------------------------------------------ datum

LeviDatum levi_of_roots(const AffineRootSystem& aff, std::vector<Root> p0, int depth) {
    (void)aff;
    LeviDatum d;
    std::sort(p0.begin(), p0.end());
    p0.erase(std::unique(p0.begin(), p0.end()), p0.end());
    d.root_set = std::move(p0);
    d.depth = depth;
    d.is_affine = std::any_of(d.root_set.begin(), d.root_set.end(), [](const Root& r) { return r.is_imaginary(); });
    d.chosen_base = indecomposables(d.root_set);
    return d;
}

LeviDatum levi_of(const AffineRootSystem& aff, const ParabolicSubset& p, int depth) {
    std::vector<Root> p0;
    for (const auto& r : roots_up_to_depth(aff, depth))
        if (p.in_zero(r)) p0.push_back(r);
    return levi_of_roots(aff, std::move(p0), depth);
}

std::vector<LeviDatum> components(const AffineRootSystem& aff, const LeviDatum& levi) {
    LeviDatum work = levi;
    if (levi.is_affine) {
        std::vector<Root> projected;
        for (const auto& r : levi.root_set)
            if (!r.finite_is_zero()) projected.emplace_back(r.coeffs, 0);
        work = levi_of_roots(aff, projected, levi.depth);
        if (work.root_set.empty()) {
            LeviDatum torus;
            torus.is_affine = true;
            torus.depth = levi.depth;
            return {torus};
        }
    }
    if (work.root_set.empty()) return {};
    const RootSet all(work.root_set.begin(), work.root_set.end());
    const auto& base = work.chosen_base;
    const auto classes = connected_classes(static_cast<int>(base.size()), [&](int i, int j) {
        return !aff.form(base[i], base[j]).is_zero() || all.count(base[i] + base[j]) || all.count(base[i] - base[j]);
    });
    std::vector<LeviDatum> out;
    for (const auto& cls : classes) {
        LeviDatum c;
        c.depth = levi.depth;
        c.is_affine = levi.is_affine;
        for (int i : cls) c.chosen_base.push_back(base[i]);
        SpanOracle span(aff, c.chosen_base);
        for (const auto& r : work.root_set)
            if (span.contains(r)) c.root_set.push_back(r);
        out.push_back(std::move(c));
    }
    return out;
}

LeviType classify(const AffineRootSystem& aff, const LeviDatum& component) {
    const auto finish = [&](LeviType t) {
        t.affine = component.is_affine;
        return t;
    };
    if (component.root_set.empty()) return finish({"torus", {}, std::nullopt, false});
    const int k = static_cast<int>(component.chosen_base.size());
    std::vector<Root> even, odd;
    bool noniso = false;
    for (const auto& r : component.root_set) {
        if (aff.odd(r)) {
            odd.push_back(r);
            if (!aff.form(r, r).is_zero()) noniso = true;
        } else {
            even.push_back(r);
        }
    }
    const EvenPart ep = even_part(aff, even);
    if (odd.empty()) {
        if (ep.types.size() != 1) throw DomainError("component is not simple");
        return finish(ep.types.front());
    }
    const auto have = names(ep.types);
    const long n_odd = static_cast<long>(odd.size());
    const auto matches = [&](const std::vector<LeviType>& expect, long odd_count, bool expect_noniso) {
        return names(expect) == have && odd_count == n_odd && expect_noniso == noniso;
    };

    // A(p,q) = sl(p+1|q+1), rank p+q+1.
    for (int q = 0; 2 * q <= k - 1; ++q) {
        const int p = k - 1 - q;
        std::vector<LeviType> e;
        add_even(e, "A", p);
        add_even(e, "A", q);
        if (matches(e, 2L * (p + 1) * (q + 1), false)) return finish(super_a_type(p, q));
    }
    // D(2,1;a) before osp(4|2), which shares its invariants.
    if (k == 3) {
        std::vector<LeviType> e;
        for (int i = 0; i < 3; ++i) add_even(e, "A", 1);
        if (matches(e, 8, false) && ep.a1_roots.size() == 3) {
            const Rational n1 = numeric(aff, aff.form(ep.a1_roots[0], ep.a1_roots[0]));
            const Rational n2 = numeric(aff, aff.form(ep.a1_roots[1], ep.a1_roots[1]));
            const Rational a = canonical_d21a(n2 / n1);
            if (a == 1) return finish(osp_type(4, 2));
            return finish(d21a_type(a));
        }
    }
    for (int n = 1; n <= k; ++n) {
        const int m = k - n;
        // osp(2m+1|2n)
        {
            std::vector<LeviType> e;
            add_even(e, "B", m);
            add_even(e, "C", n);
            if (matches(e, 2L * n * (2 * m + 1), true)) return finish(osp_type(2 * m + 1, 2 * n));
        }
        // osp(2|2n), rank n+1
        if (m == 1) {
            std::vector<LeviType> e;
            add_even(e, "C", n);
            if (matches(e, 4L * n, false)) return finish(canonical(osp_type(2, 2 * n)));
        }
        // osp(2m|2n), m >= 2
        if (m >= 2) {
            std::vector<LeviType> e;
            add_even(e, "D", m);
            add_even(e, "C", n);
            if (matches(e, 4L * m * n, false)) return finish(osp_type(2 * m, 2 * n));
        }
    }
    if (k == 3) {
        std::vector<LeviType> e{lie_type("A", 1), lie_type("G2", 2)};
        if (matches(e, 14, true)) return finish({"G(3)", {}, std::nullopt, false});
    }
    if (k == 4) {
        std::vector<LeviType> e{lie_type("A", 1), lie_type("B", 3)};
        if (matches(e, 16, false)) return finish({"F(4)", {}, std::nullopt, false});
    }
    std::ostringstream msg;
    msg << "unrecognized component: rank " << k << ", even [";
    for (std::size_t i = 0; i < have.size(); ++i) msg << (i ? "," : "") << have[i];
    msg << "], " << n_odd << " odd roots" << (noniso ? " (some non-isotropic)" : "") << ", base";
    for (const auto& b : component.chosen_base) msg << " " << b.to_string();
    throw DomainError(msg.str());
}

bool is_cuspidal(const std::vector<LeviType>& types) {
    for (const auto& raw : types) {
        if (raw.affine) throw DomainError("affine Levi components have no cuspidality verdict");
        const LeviType t = canonical(raw);
        if (t.label == "torus" || t.label == "A" || t.label == "C" || t.label == "D(2,1;a)") continue;
        if (t.label == "osp") {
            const int m = t.params.at(0);
            if (m == 1 || m == 3 || m == 4 || m == 5 || m == 6) continue;
            return false;
        }
        if (t.label == "B" || t.label == "D" || t.label == "E" || t.label == "F4" || t.label == "G2" ||
            t.label == "A(m,n)" || t.label == "G(3)" || t.label == "F(4)")
            return false;
        throw DomainError("unknown component type '" + t.name() + "'");
    }
    return true;
}

// ----------------------------------------------------------------- report

std::string LeviReport::multiset() const {
    std::vector<std::string> parts;
    for (const auto& c : components)
        if (c.label != "torus" || c.affine) parts.push_back(c.name());
    if (parts.empty()) return "torus";
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? " + " : "") + parts[i];
    return out;
}

LeviReport levi_report(const AffineRootSystem& aff, const ParabolicSubset& p, const std::string& source, int depth) {
    LeviReport rep;
    rep.source = source;
    rep.depth = depth;
    if (p.kind() == ParabolicKind::Standard) rep.subset = p.generators();
    const RootWindow window(aff, depth);
    std::vector<char> member(window.size());
    for (std::size_t i = 0; i < window.size(); ++i) member[i] = p.contains(window.roots()[i]);
    const auto check = is_parabolic(window, [&](const Root& r) {
        const int k = window.index_of(r);
        return k >= 0 ? member[k] != 0 : p.contains(r);
    });
    rep.parabolic_ok = check.ok;
    if (!check.ok) rep.notes.push_back(check.witness->describe());
    std::vector<Root> p0;
    for (std::size_t i = 0; i < window.size(); ++i) {
        if (!member[i]) continue;
        const int k = window.index_of(-window.roots()[i]);
        if (k >= 0 && member[k]) p0.push_back(window.roots()[i]);
    }
    const LeviDatum levi = levi_of_roots(aff, std::move(p0), depth);
    rep.affine = levi.is_affine;
    for (const auto& c : components(aff, levi)) rep.components.push_back(classify(aff, c));
    std::sort(rep.components.begin(), rep.components.end());
    if (rep.components.empty()) rep.components.push_back({"torus", {}, std::nullopt, false});
    if (rep.affine) {
        rep.cuspidal = false;
        rep.notes.push_back("affine Levi: excluded from cuspidality");
    } else {
        rep.cuspidal = is_cuspidal(rep.components);
    }
    return rep;
}

std::vector<LeviReport> census(const AffineRootSystem& aff, const CensusOptions& options) {
    const auto& base = aff.distinguished_base();
    const int r = static_cast<int>(base.size());
    if (r > 20) throw DomainError("census: base too large for subset enumeration");
    const std::uint32_t full = (1u << r) - 1;
    const std::uint32_t count = options.include_full ? full + 1 : full;
    std::vector<LeviReport> reports(count);
    std::vector<std::string> errors(count);
    std::atomic<std::uint32_t> next{0};
    const auto worker = [&] {
        for (std::uint32_t mask; (mask = next++) < count;) {
            try {
                std::vector<Root> s;
                std::string source = "S={";
                bool first = true;
                for (int i = 0; i < r; ++i) {
                    if (!(mask >> i & 1u)) continue;
                    s.push_back(base.roots[i]);
                    source += (first ? "" : ",") + std::to_string(i);
                    first = false;
                }
                source += "}";
                reports[mask] = levi_report(aff, standard_parabolic(aff, base, s), source, options.depth);
            } catch (const std::exception& e) {
                errors[mask] = e.what();
            }
        }
    };
    const unsigned threads = std::max(1u, std::min(std::thread::hardware_concurrency(), 16u));
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    for (const auto& e : errors)
        if (!e.empty()) throw DomainError(e);
    if (!options.dedup) return reports;
    std::vector<LeviReport> out;
    std::set<std::string> seen;
    for (auto& rep : reports)
        if (seen.insert(rep.multiset()).second) out.push_back(std::move(rep));
    return out;
}

} // namespace superroot
