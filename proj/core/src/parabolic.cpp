#include "superroot/parabolic.hpp"

#include <algorithm>
#include <sstream>

namespace superroot {

std::string to_string(ParabolicKind kind) {
    switch (kind) {
    case ParabolicKind::Standard: return "standard";
    case ParabolicKind::Functional: return "functional";
    case ParabolicKind::Explicit: return "explicit";
    }
    return "?";
}

namespace {

void require_base_coordinates(const AffineRootSystem& aff) {
    if (aff.finite().ambient_only())
        throw DomainError(aff.finite().type().name() + " runs in ambient mode only; parabolic subsets are unavailable");
}

IVector as_ivector(const Root& r) {
    IVector v(r.coeffs.begin(), r.coeffs.end());
    v.push_back(r.delta);
    return v;
}

bool contains_root(const std::vector<Root>& list, const Root& r) {
    return std::find(list.begin(), list.end(), r) != list.end();
}

} // namespace

SpanOracle::SpanOracle(const AffineRootSystem& aff, const std::vector<Root>& generators)
    : empty_(generators.empty()) {
    std::vector<IVector> gens;
    for (const auto& g : generators) gens.push_back(as_ivector(g));
    lattice_ = IntegerLattice(static_cast<std::size_t>(aff.dimension()) + 1, gens);
}

bool SpanOracle::contains(const Root& r) const {
    if (empty_) return false;
    return lattice_.contains(as_ivector(r));
}

bool ParabolicSubset::contains(const Root& r) const {
    switch (kind_) {
    case ParabolicKind::Standard: return frame_->sign(r) > 0 || span_.contains(r);
    case ParabolicKind::Functional: {
        const QVector v = r.as_vector();
        for (const auto& f : chain_) {
            Rational value = 0;
            for (std::size_t i = 0; i < v.size(); ++i)
                if (f[i] != 0 && v[i] != 0) value += f[i] * v[i];
            if (value != 0) return value > 0;
        }
        return true;
    }
    case ParabolicKind::Explicit:
        if (span_.contains(r)) return true;
        if (contains_root(z_, -r)) return true;
        return frame_->sign(r) > 0 && !contains_root(z_, r);
    }
    return false;
}

std::vector<Root> closure(const AffineRootSystem& aff, const std::vector<Root>& s, int depth) {
    std::vector<Root> out;
    if (s.empty()) return out;
    SpanOracle span(aff, s);
    for (const auto& r : roots_up_to_depth(aff, depth))
        if (span.contains(r)) out.push_back(r);
    return out;
}

ParabolicSubset standard_parabolic(const AffineRootSystem& aff, const Base& base, const std::vector<Root>& s) {
    require_base_coordinates(aff);
    for (const auto& r : s)
        if (!contains_root(base.roots, r)) throw DomainError("S is not a subset of the base: " + r.to_string());
    ParabolicSubset p;
    p.kind_ = ParabolicKind::Standard;
    p.base_ = base;
    p.generators_ = s;
    p.frame_ = std::make_shared<BaseFrame>(aff, base.roots);
    if (!p.frame_->independent()) throw DomainError("base roots are linearly dependent");
    p.span_ = SpanOracle(aff, s);
    return p;
}

ParabolicSubset functional_parabolic(const AffineRootSystem& aff, const std::vector<Functional>& chain) {
    require_base_coordinates(aff);
    if (chain.empty()) throw DomainError("functional chain is empty");
    for (const auto& f : chain)
        if (static_cast<int>(f.size()) != aff.dimension() + 1)
            throw DomainError("functional has " + std::to_string(f.size()) + " entries, expected " +
                              std::to_string(aff.dimension() + 1));
    ParabolicSubset p;
    p.kind_ = ParabolicKind::Functional;
    p.base_ = aff.distinguished_base();
    p.chain_ = chain;
    return p;
}

Functional complement_functional(const AffineRootSystem& aff, const std::vector<int>& kept) {
    require_base_coordinates(aff);
    // Over the distinguished base: coord(alpha_0) = delta coefficient,
    // coord(alpha_i) = c_i + delta * theta_i.
    const int r = aff.dimension();
    const auto& theta = aff.finite().theta().coeffs;
    Functional f(r + 1, Rational(0));
    for (int b = 0; b <= r; ++b) {
        if (std::find(kept.begin(), kept.end(), b) != kept.end()) continue;
        if (b == 0) {
            f[r] += 1;
        } else {
            f[b - 1] += 1;
            f[r] += theta[b - 1];
        }
    }
    return f;
}

Functional height_functional(const AffineRootSystem& aff) { return complement_functional(aff, {}); }

ParabolicSubset explicit_parabolic_unchecked(const AffineRootSystem& aff, const Base& base,
                                             const std::vector<Root>& y, const std::vector<Root>& z) {
    require_base_coordinates(aff);
    ParabolicSubset p;
    p.kind_ = ParabolicKind::Explicit;
    p.base_ = base;
    p.generators_ = y;
    p.z_ = z;
    p.frame_ = std::make_shared<BaseFrame>(aff, base.roots);
    if (!p.frame_->independent()) throw DomainError("base roots are linearly dependent");
    for (const auto& r : y)
        if (p.frame_->sign(r) <= 0 || !aff.is_root(r)) throw DomainError("Y must consist of positive roots: " + r.to_string());
    for (const auto& r : z) {
        if (p.frame_->sign(r) <= 0 || !aff.is_root(r)) throw DomainError("Z must consist of positive roots: " + r.to_string());
        if (aff.kind(r) != RootKind::RealOdd) throw DomainError("Z must consist of odd roots: " + r.to_string());
    }
    p.span_ = SpanOracle(aff, y);
    return p;
}

ParabolicSubset explicit_parabolic(const AffineRootSystem& aff, const Base& base, const std::vector<Root>& y,
                                   const std::vector<Root>& z, int depth) {
    auto p = explicit_parabolic_unchecked(aff, base, y, z);
    const auto check = is_parabolic(aff, p, depth);
    if (!check.ok) throw DomainError("not parabolic: " + check.witness->describe());
    return p;
}

std::string ParabolicWitness::describe() const {
    std::ostringstream out;
    if (kind == Kind::Closure)
        out << "closure fails: " << a.to_string() << " + " << b.to_string() << " = " << sum.to_string();
    else
        out << "covering fails: neither " << a.to_string() << " nor its negative is in P";
    return out.str();
}

ParabolicCheck is_parabolic(const RootWindow& window, const Membership& member) {
    const auto& roots = window.roots();
    const int n = static_cast<int>(roots.size());
    std::vector<char> in(n);
    std::vector<int> members;
    for (int i = 0; i < n; ++i) {
        in[i] = member(roots[i]) ? 1 : 0;
        if (in[i]) members.push_back(i);
    }
    ParabolicCheck result;
    for (std::size_t p = 0; p < members.size(); ++p) {
        for (std::size_t q = p; q < members.size(); ++q) {
            const Root sum = roots[members[p]] + roots[members[q]];
            const int k = window.index_of(sum);
            if (k >= 0 && !in[k]) {
                result.ok = false;
                result.witness = ParabolicWitness{ParabolicWitness::Kind::Closure, roots[members[p]], roots[members[q]], sum};
                return result;
            }
        }
    }
    for (int i = 0; i < n; ++i) {
        if (in[i]) continue;
        const int k = window.index_of(-roots[i]);
        if (k < 0 || !in[k]) {
            result.ok = false;
            result.witness = ParabolicWitness{ParabolicWitness::Kind::Covering, roots[i], Root(), Root()};
            return result;
        }
    }
    return result;
}

ParabolicCheck is_parabolic(const AffineRootSystem& aff, const Membership& member, int depth) {
    return is_parabolic(RootWindow(aff, depth), member);
}

ParabolicCheck is_parabolic(const AffineRootSystem& aff, const ParabolicSubset& p, int depth) {
    return is_parabolic(aff, [&p](const Root& r) { return p.contains(r); }, depth);
}

Decomposition decompose(const AffineRootSystem& aff, const ParabolicSubset& p, int depth) {
    Decomposition d;
    for (const auto& r : roots_up_to_depth(aff, depth)) {
        const bool here = p.contains(r), opposite = p.contains(-r);
        if (here && opposite)
            d.zero.push_back(r);
        else if (here)
            d.plus.push_back(r);
        else if (opposite)
            d.minus.push_back(r);
    }
    return d;
}

} // namespace superroot
