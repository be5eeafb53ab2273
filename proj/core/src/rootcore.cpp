#include "superroot/rootcore.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace superroot {

// ---------------------------------------------------------------- TypeTag

std::string TypeTag::name() const {
    const auto pair = [](int x, int y) { return "(" + std::to_string(x) + "," + std::to_string(y) + ")"; };
    switch (family) {
    case Family::A: return "A" + pair(m, n);
    case Family::B: return "B" + pair(m, n);
    case Family::B0: return "B" + pair(0, n);
    case Family::C: return "C(" + std::to_string(n) + ")";
    case Family::D: return "D" + pair(m, n);
    case Family::D21a: {
        std::string s = a.denominator() == 1 ? std::to_string(a.numerator()) : to_string(a);
        return "D(2,1;" + s + ")";
    }
    case Family::G3: return "G(3)";
    case Family::F4: return "F(4)";
    }
    return "?";
}

TypeTag parse_family(const std::string& raw, int m, int n, Rational a) {
    std::string s;
    for (char c : raw)
        if (!std::isspace(static_cast<unsigned char>(c))) s += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    if (s == "A" || s == "A(M,N)") return TypeTag::A(m, n);
    if (s == "B" || s == "B(M,N)") return TypeTag::B(m, n);
    if (s == "B0" || s == "B(0,N)") return TypeTag::B(0, n);
    if (s == "C" || s == "C(N)") return TypeTag::C(n);
    if (s == "D" || s == "D(M,N)") return TypeTag::D(m, n);
    if (s == "D21A" || s == "D(2,1;A)" || s == "D(2,1,A)") return TypeTag::D21a(a);
    if (s == "G3" || s == "G(3)") return TypeTag::G3();
    if (s == "F4" || s == "F(4)") return TypeTag::F4();
    throw DomainError("unknown family '" + raw + "'");
}

// ------------------------------------------------------------------- Root

bool Root::finite_is_zero() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](int c) { return c == 0; });
}

bool Root::is_zero() const { return delta == 0 && finite_is_zero(); }

Root Root::operator-() const {
    Root r = *this;
    for (auto& c : r.coeffs) c = -c;
    r.delta = -r.delta;
    return r;
}

Root& Root::operator+=(const Root& o) {
    if (coeffs.size() != o.coeffs.size()) throw DomainError("root dimension mismatch");
    for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] += o.coeffs[i];
    delta += o.delta;
    return *this;
}

Root& Root::operator-=(const Root& o) { return *this += -o; }

Root& Root::operator*=(int k) {
    for (auto& c : coeffs) c *= k;
    delta *= k;
    return *this;
}

QVector Root::as_vector() const {
    QVector v;
    v.reserve(coeffs.size() + 1);
    for (int c : coeffs) v.emplace_back(c);
    v.emplace_back(delta);
    return v;
}

std::string Root::to_string() const {
    std::ostringstream out;
    out << "(";
    for (std::size_t i = 0; i < coeffs.size(); ++i) out << (i ? "," : "") << coeffs[i];
    out << ";" << delta << ")";
    return out.str();
}

// ------------------------------------------------------ ambient realizations

namespace {

struct AmbientRoot {
    QVector v;
    bool odd;
};

struct Ambient {
    int dim = 0;
    std::vector<std::vector<Scalar>> gram;
    std::vector<QVector> simple;
    std::vector<bool> simple_odd;
    std::vector<AmbientRoot> roots; // both signs
    QVector theta;
    std::vector<int> parity_weight; // used in ambient-only mode
};

QVector unit(int dim, int i, Rational scale = 1) {
    QVector v(dim);
    v[i] = scale;
    return v;
}

QVector add(QVector x, const QVector& y, Rational k = 1) {
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += k * y[i];
    return x;
}

QVector neg(QVector x) {
    for (auto& c : x) c = -c;
    return x;
}

std::vector<std::vector<Scalar>> diagonal(const std::vector<Scalar>& d) {
    std::vector<std::vector<Scalar>> g(d.size(), std::vector<Scalar>(d.size()));
    for (std::size_t i = 0; i < d.size(); ++i) g[i][i] = d[i];
    return g;
}

void push_pm(std::vector<AmbientRoot>& out, const QVector& v, bool odd) {
    out.push_back({v, odd});
    out.push_back({neg(v), odd});
}

// Pairs +-x_i +- x_j (i<j) within an index range, plus optionally +-x_i, +-2x_i.
void orthogonal_roots(std::vector<AmbientRoot>& out, int dim, const std::vector<int>& idx, bool with_pm_sum,
                      bool with_single, bool with_double) {
    for (std::size_t p = 0; p < idx.size(); ++p) {
        for (std::size_t q = p + 1; q < idx.size(); ++q) {
            push_pm(out, add(unit(dim, idx[p]), unit(dim, idx[q]), -1), false);
            if (with_pm_sum) push_pm(out, add(unit(dim, idx[p]), unit(dim, idx[q])), false);
        }
        if (with_single) push_pm(out, unit(dim, idx[p]), false);
        if (with_double) push_pm(out, unit(dim, idx[p], 2), false);
    }
}

std::vector<int> range(int from, int count) {
    std::vector<int> r(count);
    for (int i = 0; i < count; ++i) r[i] = from + i;
    return r;
}

// A(m,n): eps_1..eps_{n+1} (form +1), then delta_1..delta_{m+1} (form -1).
Ambient ambient_A(int m, int n) {
    Ambient A;
    const int ne = n + 1, nd = m + 1;
    A.dim = ne + nd;
    std::vector<Scalar> d(A.dim, Scalar(1));
    for (int j = 0; j < nd; ++j) d[ne + j] = Scalar(-1);
    A.gram = diagonal(d);
    const auto eps = [&](int i) { return unit(A.dim, i - 1); };
    const auto del = [&](int j) { return unit(A.dim, ne + j - 1); };
    for (int i = 1; i <= n; ++i) {
        A.simple.push_back(add(eps(i), eps(i + 1), -1));
        A.simple_odd.push_back(false);
    }
    A.simple.push_back(add(eps(ne), del(1), -1));
    A.simple_odd.push_back(true);
    for (int j = 1; j <= m; ++j) {
        A.simple.push_back(add(del(j), del(j + 1), -1));
        A.simple_odd.push_back(false);
    }
    orthogonal_roots(A.roots, A.dim, range(0, ne), false, false, false);
    orthogonal_roots(A.roots, A.dim, range(ne, nd), false, false, false);
    for (int i = 1; i <= ne; ++i)
        for (int j = 1; j <= nd; ++j) push_pm(A.roots, add(eps(i), del(j), -1), true);
    A.theta = add(eps(1), del(nd), -1);
    A.parity_weight.assign(A.dim, 0);
    for (int j = 0; j < nd; ++j) A.parity_weight[ne + j] = 1;
    return A;
}

// B(m,n), B(0,n), D(m,n): delta_1..delta_n (form -1), then eps_1..eps_m (form +1).
Ambient ambient_BD(int m, int n, bool type_d) {
    Ambient A;
    A.dim = n + m;
    std::vector<Scalar> d(A.dim, Scalar(1));
    for (int i = 0; i < n; ++i) d[i] = Scalar(-1);
    A.gram = diagonal(d);
    const auto del = [&](int i) { return unit(A.dim, i - 1); };
    const auto eps = [&](int j) { return unit(A.dim, n + j - 1); };
    for (int i = 1; i < n; ++i) {
        A.simple.push_back(add(del(i), del(i + 1), -1));
        A.simple_odd.push_back(false);
    }
    if (m == 0) {
        A.simple.push_back(del(n));
        A.simple_odd.push_back(true);
    } else {
        A.simple.push_back(add(del(n), eps(1), -1));
        A.simple_odd.push_back(true);
        for (int j = 1; j < m; ++j) {
            A.simple.push_back(add(eps(j), eps(j + 1), -1));
            A.simple_odd.push_back(false);
        }
        A.simple.push_back(type_d ? add(eps(m - 1), eps(m)) : eps(m));
        A.simple_odd.push_back(false);
    }
    orthogonal_roots(A.roots, A.dim, range(0, n), true, false, true);
    orthogonal_roots(A.roots, A.dim, range(n, m), true, !type_d, false);
    for (int i = 1; i <= n; ++i) {
        if (!type_d) push_pm(A.roots, del(i), true);
        for (int j = 1; j <= m; ++j) {
            push_pm(A.roots, add(del(i), eps(j), -1), true);
            push_pm(A.roots, add(del(i), eps(j)), true);
        }
    }
    A.theta = unit(A.dim, 0, 2);
    return A;
}

// C(n) = osp(2|2n-2): eps (form +1), then delta_1..delta_{n-1} (form -1).
Ambient ambient_C(int n) {
    Ambient A;
    const int k = n - 1;
    A.dim = 1 + k;
    std::vector<Scalar> d(A.dim, Scalar(-1));
    d[0] = Scalar(1);
    A.gram = diagonal(d);
    const QVector eps = unit(A.dim, 0);
    const auto del = [&](int i) { return unit(A.dim, i); };
    A.simple.push_back(add(eps, del(1), -1));
    A.simple_odd.push_back(true);
    for (int i = 1; i < k; ++i) {
        A.simple.push_back(add(del(i), del(i + 1), -1));
        A.simple_odd.push_back(false);
    }
    A.simple.push_back(unit(A.dim, k, 2));
    A.simple_odd.push_back(false);
    orthogonal_roots(A.roots, A.dim, range(1, k), true, false, true);
    for (int i = 1; i <= k; ++i) {
        push_pm(A.roots, add(eps, del(i), -1), true);
        push_pm(A.roots, add(eps, del(i)), true);
    }
    A.theta = add(eps, del(1));
    return A;
}

// D(2,1;a): eps_1, eps_2, eps_3 with forms -(1+a)/2, 1/2, a/2.
Ambient ambient_D21a() {
    Ambient A;
    A.dim = 3;
    const Rational half(1, 2);
    A.gram = diagonal({Scalar(-half, -half), Scalar(half), Scalar(Rational(0), half)});
    A.simple = {QVector{1, -1, -1}, QVector{0, 2, 0}, QVector{0, 0, 2}};
    A.simple_odd = {true, false, false};
    for (int i = 0; i < 3; ++i) push_pm(A.roots, unit(3, i, 2), false);
    for (int s2 : {-1, 1})
        for (int s3 : {-1, 1}) push_pm(A.roots, QVector{1, s2, s3}, true);
    A.theta = QVector{2, 0, 0};
    return A;
}

// G(3): basis eps_1, eps_2, delta with eps_3 = -eps_1 - eps_2.
Ambient ambient_G3() {
    Ambient A;
    A.dim = 3;
    A.gram = {{Scalar(-2), Scalar(1), Scalar(0)}, {Scalar(1), Scalar(-2), Scalar(0)}, {Scalar(0), Scalar(0), Scalar(2)}};
    const QVector e1{1, 0, 0}, e2{0, 1, 0}, e3{-1, -1, 0}, dl{0, 0, 1};
    A.simple = {add(dl, e1), e2, add(e3, e2, -1)};
    A.simple_odd = {true, false, false};
    const std::vector<QVector> eps{e1, e2, e3};
    for (int i = 0; i < 3; ++i) {
        push_pm(A.roots, eps[i], false);
        for (int j = i + 1; j < 3; ++j) push_pm(A.roots, add(eps[i], eps[j], -1), false);
        push_pm(A.roots, add(eps[i], dl), true);
        push_pm(A.roots, add(eps[i], dl, -1), true);
    }
    push_pm(A.roots, unit(3, 2, 2), false);
    push_pm(A.roots, dl, true);
    A.theta = unit(3, 2, 2);
    return A;
}

// F(4): orthonormal eps_1..eps_3, then delta with (delta,delta) = -3.
Ambient ambient_F4() {
    Ambient A;
    A.dim = 4;
    A.gram = diagonal({Scalar(1), Scalar(1), Scalar(1), Scalar(-3)});
    const Rational h(1, 2);
    A.simple = {QVector{-h, -h, -h, h}, unit(4, 2), add(unit(4, 1), unit(4, 2), -1), add(unit(4, 0), unit(4, 1), -1)};
    A.simple_odd = {true, false, false, false};
    orthogonal_roots(A.roots, 4, {0, 1, 2}, true, true, false);
    push_pm(A.roots, unit(4, 3), false);
    for (int s1 : {-1, 1})
        for (int s2 : {-1, 1})
            for (int s3 : {-1, 1}) push_pm(A.roots, QVector{s1 * h, s2 * h, s3 * h, h}, true);
    A.theta = unit(4, 3);
    return A;
}

Scalar ambient_dot(const std::vector<std::vector<Scalar>>& g, const QVector& x, const QVector& y) {
    Scalar acc;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < y.size(); ++j)
            if (y[j] != 0 && !g[i][j].is_zero()) acc += g[i][j] * (x[i] * y[j]);
    }
    return acc;
}

void check_params(const TypeTag& t, bool ambient_mode) {
    switch (t.family) {
    case Family::A:
        if (t.m < 0 || t.n < 0 || t.m + t.n < 1) throw DomainError("A(m,n) requires m,n >= 0 and m+n >= 1");
        if (t.m == t.n && !ambient_mode)
            throw DomainError("A(n,n) has linearly dependent simple roots; only ambient mode is supported");
        break;
    case Family::B:
        if (t.m < 1 || t.n < 1) throw DomainError("B(m,n) requires m >= 1 and n >= 1");
        break;
    case Family::B0:
        if (t.n < 1) throw DomainError("B(0,n) requires n >= 1");
        break;
    case Family::C:
        if (t.n < 2) throw DomainError("C(n) requires n >= 2");
        break;
    case Family::D:
        if (t.m < 2 || t.n < 1) throw DomainError("D(m,n) requires m >= 2 and n >= 1");
        break;
    case Family::D21a:
        if (t.a == 0 || t.a == -1) throw DomainError("parameter a must avoid {0,-1}");
        break;
    case Family::G3:
    case Family::F4: break;
    }
}

int to_int(const Rational& r) {
    if (r.denominator() != 1) throw std::logic_error("non-integral coordinate");
    return static_cast<int>(r.numerator());
}

} // namespace

// ------------------------------------------------------- FiniteRootSystem

FiniteRootSystem build_finite(const TypeTag& tag, bool ambient_mode) {
    check_params(tag, ambient_mode);
    Ambient amb;
    switch (tag.family) {
    case Family::A: amb = ambient_A(tag.m, tag.n); break;
    case Family::B: amb = ambient_BD(tag.m, tag.n, false); break;
    case Family::B0: amb = ambient_BD(0, tag.n, false); break;
    case Family::C: amb = ambient_C(tag.n); break;
    case Family::D: amb = ambient_BD(tag.m, tag.n, true); break;
    case Family::D21a: amb = ambient_D21a(); break;
    case Family::G3: amb = ambient_G3(); break;
    case Family::F4: amb = ambient_F4(); break;
    }

    FiniteRootSystem sys;
    sys.type_ = tag;
    sys.ambient_only_ = tag.family == Family::A && tag.m == tag.n;
    sys.ambient_simple_ = amb.simple;
    sys.ambient_gram_ = amb.gram;
    sys.simple_solver_ = Decomposer(amb.simple);
    if (!sys.simple_solver_.independent()) throw std::logic_error("ambient simple roots are dependent");
    const int r = static_cast<int>(amb.simple.size());

    const auto coordinates = [&](const QVector& v) {
        if (sys.ambient_only_) {
            std::vector<int> c;
            for (const auto& x : v) c.push_back(to_int(x));
            return c;
        }
        auto x = sys.simple_solver_.integer_coordinates(v);
        if (!x) throw std::logic_error("ambient root outside the simple-root lattice");
        return std::vector<int>(x->begin(), x->end());
    };

    if (sys.ambient_only_) {
        sys.dimension_ = amb.dim;
        sys.gram_ = amb.gram;
        sys.parity_weight_ = amb.parity_weight;
    } else {
        sys.dimension_ = r;
        sys.gram_.assign(r, std::vector<Scalar>(r));
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) sys.gram_[i][j] = ambient_dot(amb.gram, amb.simple[i], amb.simple[j]);
        sys.parity_weight_.assign(r, 0);
        for (int i = 0; i < r; ++i) sys.parity_weight_[i] = amb.simple_odd[i] ? 1 : 0;
    }

    for (int i = 0; i < r; ++i) {
        sys.simple_.emplace_back(coordinates(amb.simple[i]));
        sys.simple_odd_.push_back(amb.simple_odd[i]);
    }

    for (const auto& ar : amb.roots) {
        Root root(coordinates(ar.v));
        if (sys.odd(root) != ar.odd) throw std::logic_error("parity rule disagrees with the ambient realization");
        sys.all_sorted_.push_back(root);
    }
    std::sort(sys.all_sorted_.begin(), sys.all_sorted_.end());
    if (std::adjacent_find(sys.all_sorted_.begin(), sys.all_sorted_.end()) != sys.all_sorted_.end())
        throw std::logic_error("duplicate ambient root");
    for (const auto& root : sys.all_sorted_) {
        auto x = sys.simple_solver_.coordinates(sys.to_ambient(root));
        const bool pos = std::all_of(x->begin(), x->end(), [](const Rational& c) { return c >= 0; });
        const bool neg = std::all_of(x->begin(), x->end(), [](const Rational& c) { return c <= 0; });
        if (pos == neg) throw std::logic_error("root of mixed sign: " + root.to_string());
        if (pos) sys.positive_.push_back(root);
    }
    sys.theta_ = Root(coordinates(amb.theta));
    if (!sys.is_positive(sys.theta_)) throw std::logic_error("theta is not a positive root");
    return sys;
}

std::vector<std::vector<Scalar>> FiniteRootSystem::simple_gram() const {
    const int r = rank();
    std::vector<std::vector<Scalar>> g(r, std::vector<Scalar>(r));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) g[i][j] = form(simple_[i], simple_[j]);
    return g;
}

bool FiniteRootSystem::contains(const Root& r) const {
    if (r.delta != 0 || static_cast<int>(r.coeffs.size()) != dimension_) return false;
    return std::binary_search(all_sorted_.begin(), all_sorted_.end(), r);
}

bool FiniteRootSystem::is_positive(const Root& r) const {
    return contains(r) && std::binary_search(positive_.begin(), positive_.end(), r);
}

std::optional<IVector> FiniteRootSystem::simple_coordinates(const std::vector<int>& coeffs) const {
    if (static_cast<int>(coeffs.size()) != dimension_) throw DomainError("coordinate dimension mismatch");
    if (!ambient_only_) return IVector(coeffs.begin(), coeffs.end());
    QVector v(coeffs.begin(), coeffs.end());
    return simple_solver_.integer_coordinates(v);
}

Scalar FiniteRootSystem::form(const Root& x, const Root& y) const {
    if (static_cast<int>(x.coeffs.size()) != dimension_ || static_cast<int>(y.coeffs.size()) != dimension_)
        throw DomainError("bilinear form: dimension mismatch");
    Scalar acc;
    for (int i = 0; i < dimension_; ++i) {
        if (x.coeffs[i] == 0) continue;
        for (int j = 0; j < dimension_; ++j)
            if (y.coeffs[j] != 0 && !gram_[i][j].is_zero())
                acc += gram_[i][j] * static_cast<std::int64_t>(x.coeffs[i] * y.coeffs[j]);
    }
    return acc;
}

bool FiniteRootSystem::odd(const Root& r) const {
    long s = 0;
    for (int i = 0; i < dimension_; ++i) s += static_cast<long>(parity_weight_[i]) * r.coeffs[i];
    return (s % 2 + 2) % 2 == 1;
}

QVector FiniteRootSystem::to_ambient(const Root& r) const {
    if (ambient_only_) return QVector(r.coeffs.begin(), r.coeffs.end());
    QVector v(ambient_gram_.size());
    for (int i = 0; i < rank(); ++i)
        if (r.coeffs[i] != 0) v = add(v, ambient_simple_[i], r.coeffs[i]);
    return v;
}

// -------------------------------------------------------------- operations

std::vector<Root> all_roots(const FiniteRootSystem& sys, ParityFilter parity, SignFilter sign) {
    std::vector<Root> out;
    const auto& pos = sys.positive_roots();
    std::vector<Root> pool;
    if (sign != SignFilter::Negative) pool.insert(pool.end(), pos.begin(), pos.end());
    if (sign != SignFilter::Positive)
        for (const auto& r : pos) pool.push_back(-r);
    for (auto& r : pool) {
        const bool o = sys.odd(r);
        if (parity == ParityFilter::Even && o) continue;
        if (parity == ParityFilter::Odd && !o) continue;
        out.push_back(std::move(r));
    }
    std::sort(out.begin(), out.end());
    return out;
}

Scalar bilinear_form(const FiniteRootSystem& sys, const Root& x, const Root& y) { return sys.form(x, y); }

bool parity_of(const FiniteRootSystem& sys, const Root& r) {
    Root finite = r;
    finite.delta = 0;
    if (!sys.contains(finite)) throw DomainError("not a root: " + r.to_string());
    return sys.odd(r);
}

bool is_isotropic(const FiniteRootSystem& sys, const Root& r) {
    Root finite = r;
    finite.delta = 0;
    if (!sys.contains(finite)) throw DomainError("not a root: " + r.to_string());
    return sys.form(r, r).is_zero();
}

namespace {

Rational numeric(const FiniteRootSystem& sys, const Scalar& s) { return s.evaluate(sys.type().a); }

Rational cartan(const FiniteRootSystem& sys, const Scalar& aij, const Scalar& aii) {
    if (auto q = Scalar::ratio(aij, aii)) return *q * 2;
    return numeric(sys, aij) * 2 / numeric(sys, aii);
}

int magnitude(const Rational& r) {
    const Rational x = r < 0 ? -r : r;
    return static_cast<int>(boost::rational_cast<double>(x) + 0.5);
}

} // namespace

DynkinDiagram diagram_of(const FiniteRootSystem& sys, const std::vector<Root>& base) {
    DynkinDiagram d;
    const int k = static_cast<int>(base.size());
    std::vector<Scalar> norm(k);
    for (int i = 0; i < k; ++i) {
        norm[i] = sys.form(base[i], base[i]);
        d.nodes.push_back({i, sys.odd(base[i]), norm[i].is_zero()});
    }
    for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) {
            const Scalar f = sys.form(base[i], base[j]);
            if (f.is_zero()) continue;
            DiagramEdge e{i, j, 1, -1};
            const bool iso_i = norm[i].is_zero(), iso_j = norm[j].is_zero();
            if (!iso_i && !iso_j) {
                e.multiplicity = std::max(magnitude(cartan(sys, f, norm[i])), magnitude(cartan(sys, f, norm[j])));
            } else if (!iso_i || !iso_j) {
                e.multiplicity = magnitude(cartan(sys, f, iso_i ? norm[j] : norm[i]));
            }
            e.multiplicity = std::max(e.multiplicity, 1);
            if (e.multiplicity > 1 && !iso_i && !iso_j) {
                const Rational ni = numeric(sys, norm[i]), nj = numeric(sys, norm[j]);
                const Rational ai = ni < 0 ? -ni : ni, aj = nj < 0 ? -nj : nj;
                if (ai != aj) e.toward = ai < aj ? i : j;
            }
            d.edges.push_back(e);
        }
    }
    return d;
}

DynkinDiagram dynkin_diagram(const FiniteRootSystem& sys) { return diagram_of(sys, sys.simple_roots()); }

Root distinguished_theta(const FiniteRootSystem& sys) { return sys.theta(); }

} // namespace superroot
