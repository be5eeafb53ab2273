#include "superroot/affine.hpp"

#include <algorithm>
#include <set>

namespace superroot {

std::size_t RootHash::operator()(const Root& r) const noexcept {
    std::size_t h = static_cast<std::size_t>(r.delta) * 0x9e3779b97f4a7c15ULL;
    for (int c : r.coeffs) h = (h ^ static_cast<std::size_t>(c)) * 0x100000001b3ULL + 0x7f4a7c15;
    return h;
}

AffineRootSystem::AffineRootSystem(FiniteRootSystem finite, int imaginary_multiplicity)
    : finite_(std::move(finite)),
      imaginary_multiplicity_(imaginary_multiplicity > 0 ? imaginary_multiplicity : finite_.rank()) {
    if (imaginary_multiplicity < 0) throw DomainError("imaginary multiplicity must be nonnegative");
    Root alpha0 = -finite_.theta();
    alpha0.delta = 1;
    std::vector<Root> roots{alpha0};
    roots.insert(roots.end(), finite_.simple_roots().begin(), finite_.simple_roots().end());
    base_ = make_base(*this, roots);
}

Root AffineRootSystem::delta(int k) const { return Root(std::vector<int>(dimension(), 0), k); }

RootKind AffineRootSystem::kind(const Root& v) const {
    if (static_cast<int>(v.coeffs.size()) != dimension()) return RootKind::NotARoot;
    if (v.finite_is_zero()) return v.delta == 0 ? RootKind::NotARoot : RootKind::Imaginary;
    Root f(v.coeffs, 0);
    if (!finite_.contains(f)) return RootKind::NotARoot;
    return finite_.odd(f) ? RootKind::RealOdd : RootKind::RealEven;
}

bool AffineRootSystem::is_positive(const Root& r) const {
    if (r.finite_is_zero()) return r.delta > 0;
    if (r.delta != 0) return r.delta > 0;
    return finite_.is_positive(Root(r.coeffs, 0));
}

Scalar AffineRootSystem::form(const Root& x, const Root& y) const {
    return finite_.form(Root(x.coeffs, 0), Root(y.coeffs, 0));
}

AffineRootSystem affinize(const FiniteRootSystem& finite, int imaginary_multiplicity) {
    return AffineRootSystem(finite, imaginary_multiplicity);
}

namespace {

bool passes(const AffineRootSystem& aff, const Root& r, const RootFilter& f) {
    const bool imag = r.finite_is_zero();
    if (f.kind == KindFilter::Real && imag) return false;
    if (f.kind == KindFilter::Imaginary && !imag) return false;
    const bool o = !imag && aff.odd(r);
    if (f.parity == ParityFilter::Even && o) return false;
    if (f.parity == ParityFilter::Odd && !o) return false;
    const bool pos = aff.is_positive(r);
    if (f.sign == SignFilter::Positive && !pos) return false;
    if (f.sign == SignFilter::Negative && pos) return false;
    return true;
}

} // namespace

std::vector<Root> roots_up_to_depth(const AffineRootSystem& aff, int depth, const RootFilter& filter) {
    if (depth < 0) throw DomainError("depth must be nonnegative");
    std::vector<Root> out;
    const auto finite = all_roots(aff.finite());
    for (int k = -depth; k <= depth; ++k) {
        for (const auto& r : finite) {
            Root x(r.coeffs, k);
            if (passes(aff, x, filter)) out.push_back(std::move(x));
        }
        if (k != 0) {
            Root x = aff.delta(k);
            if (passes(aff, x, filter)) out.push_back(std::move(x));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

RootKind classify_vector(const AffineRootSystem& aff, const Root& v) { return aff.kind(v); }

BaseFrame::BaseFrame(const AffineRootSystem& aff, const std::vector<Root>& base) {
    std::vector<QVector> cols;
    for (const auto& b : base) {
        if (static_cast<int>(b.coeffs.size()) != aff.dimension()) throw DomainError("base root dimension mismatch");
        cols.push_back(b.as_vector());
    }
    solver_ = Decomposer(cols);
}

std::optional<IVector> BaseFrame::coordinates(const Root& v) const {
    if (!solver_.independent()) return std::nullopt;
    return solver_.integer_coordinates(v.as_vector());
}

int BaseFrame::sign(const Root& v) const {
    const auto x = coordinates(v);
    if (!x) return 0;
    const bool pos = std::all_of(x->begin(), x->end(), [](std::int64_t c) { return c >= 0; });
    const bool neg = std::all_of(x->begin(), x->end(), [](std::int64_t c) { return c <= 0; });
    if (pos && !neg) return 1;
    if (neg && !pos) return -1;
    return 0;
}

Base make_base(const AffineRootSystem& aff, std::vector<Root> roots) {
    Base b;
    for (const auto& r : roots) b.parities.push_back(!r.finite_is_zero() && aff.odd(r));
    b.roots = std::move(roots);
    return b;
}

std::vector<int> delta_expansion(const AffineRootSystem& aff, const Base& base, int depth) {
    if (!is_base(aff, base, depth)) throw DomainError("not a base at depth " + std::to_string(depth));
    BaseFrame frame(aff, base.roots);
    const auto x = frame.coordinates(aff.delta());
    return std::vector<int>(x->begin(), x->end());
}

Base even_reflection(const AffineRootSystem& aff, const Base& base, int i) {
    if (i < 0 || i >= static_cast<int>(base.size())) throw DomainError("reflection index out of range");
    const Root& alpha = base.roots[i];
    if (aff.kind(alpha) != RootKind::RealEven) throw DomainError("even reflection requires an even real root");
    const Scalar norm = aff.form(alpha, alpha);
    if (norm.is_zero()) throw DomainError("even reflection requires a non-isotropic root");
    std::vector<Root> out;
    for (const auto& beta : base.roots) {
        const auto q = Scalar::ratio(aff.form(beta, alpha), norm);
        if (!q) throw DomainError("reflection coefficient depends on the parameter");
        const Rational c = *q * 2;
        if (c.denominator() != 1) throw DomainError("non-integral reflection coefficient");
        out.push_back(beta - static_cast<int>(c.numerator()) * alpha);
    }
    return make_base(aff, out);
}

Base odd_reflection(const AffineRootSystem& aff, const Base& base, int i) {
    if (i < 0 || i >= static_cast<int>(base.size())) throw DomainError("reflection index out of range");
    const Root& gamma = base.roots[i];
    if (aff.kind(gamma) != RootKind::RealOdd) throw DomainError("odd reflection requires an odd root");
    if (!aff.form(gamma, gamma).is_zero()) throw DomainError("odd reflection requires an isotropic root");
    std::vector<Root> out;
    for (int j = 0; j < static_cast<int>(base.size()); ++j) {
        const Root& beta = base.roots[j];
        if (j == i)
            out.push_back(-gamma);
        else if (!aff.form(beta, gamma).is_zero())
            out.push_back(beta + gamma);
        else
            out.push_back(beta);
    }
    return make_base(aff, out);
}

bool is_base(const AffineRootSystem& aff, const std::vector<Root>& candidate, int depth) {
    if (static_cast<int>(candidate.size()) != aff.rank()) return false;
    for (const auto& c : candidate)
        if (static_cast<int>(c.coeffs.size()) != aff.dimension() || !aff.is_root(c)) return false;
    if (std::set<Root>(candidate.begin(), candidate.end()).size() != candidate.size()) return false;
    BaseFrame frame(aff, candidate);
    if (!frame.independent()) return false;
    for (const auto& r : roots_up_to_depth(aff, depth))
        if (frame.sign(r) == 0) return false;
    return true;
}

bool sigma_contains(const AffineRootSystem& aff, const Root& alpha, const Root& rho) {
    if (aff.kind(alpha) == RootKind::Imaginary || aff.kind(alpha) == RootKind::NotARoot)
        throw DomainError("Sigma needs a real root anchor");
    if (rho.coeffs == alpha.coeffs) return rho.delta - alpha.delta >= 0;
    if (rho.coeffs == (-alpha).coeffs) return rho.delta + alpha.delta > 0;
    return false;
}

RootWindow::RootWindow(const AffineRootSystem& aff, int depth, const RootFilter& filter)
    : depth_(depth), roots_(roots_up_to_depth(aff, depth, filter)) {
    index_.reserve(roots_.size() * 2);
    for (int i = 0; i < static_cast<int>(roots_.size()); ++i) index_.emplace(roots_[i], i);
}

int RootWindow::index_of(const Root& r) const {
    const auto it = index_.find(r);
    return it == index_.end() ? -1 : it->second;
}

} // namespace superroot
