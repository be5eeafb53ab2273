#ifndef SUPERROOT_ROOTCORE_HPP
#define SUPERROOT_ROOTCORE_HPP

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "superroot/linalg.hpp"
#include "superroot/scalar.hpp"

namespace superroot {

enum class Family { A, B, B0, C, D, D21a, G3, F4 };

/// Family plus its integer (or, for D(2,1;a), rational) parameters.
struct TypeTag {
    Family family = Family::A;
    int m = 0;
    int n = 0;
    Rational a{1};

    static TypeTag A(int m, int n) { return {Family::A, m, n, Rational(1)}; }
    static TypeTag B(int m, int n) { return {m == 0 ? Family::B0 : Family::B, m, n, Rational(1)}; }
    static TypeTag C(int n) { return {Family::C, 0, n, Rational(1)}; }
    static TypeTag D(int m, int n) { return {Family::D, m, n, Rational(1)}; }
    static TypeTag D21a(Rational a) { return {Family::D21a, 0, 0, a}; }
    static TypeTag G3() { return {Family::G3, 0, 0, Rational(1)}; }
    static TypeTag F4() { return {Family::F4, 0, 0, Rational(1)}; }

    /// "A(2,1)", "B(0,3)", "C(4)", "D(2,1;1/2)", "G(3)", ...
    std::string name() const;
};

/// Parses family names as accepted by the command line: "A", "A(m,n)",
/// "B", "B(0,n)", "C", "D", "D21a", "D(2,1;a)", "G3", "G(3)", "F4", "F(4)".
/// Numeric parameters come from the separate arguments.
TypeTag parse_family(const std::string& name, int m, int n, Rational a);

/// Integer coordinates over the distinguished finite base plus a
/// delta coefficient. In ambient-only mode (A(n,n)) coeffs are ambient
/// coordinates instead.
struct Root {
    std::vector<int> coeffs;
    int delta = 0;

    Root() = default;
    explicit Root(std::vector<int> c, int d = 0) : coeffs(std::move(c)), delta(d) {}

    bool is_zero() const;
    bool is_imaginary() const { return !is_zero() && finite_is_zero(); }
    bool finite_is_zero() const;

    Root operator-() const;
    Root& operator+=(const Root& o);
    Root& operator-=(const Root& o);
    Root& operator*=(int k);
    friend Root operator+(Root x, const Root& y) { return x += y; }
    friend Root operator-(Root x, const Root& y) { return x -= y; }
    friend Root operator*(int k, Root x) { return x *= k; }
    friend Root operator*(Root x, int k) { return x *= k; }

    friend bool operator==(const Root&, const Root&) = default;
    friend std::strong_ordering operator<=>(const Root& x, const Root& y) {
        if (auto c = x.coeffs <=> y.coeffs; c != 0) return c;
        return x.delta <=> y.delta;
    }

    /// All coordinates (finite then delta) as rationals.
    QVector as_vector() const;
    std::string to_string() const;
};

enum class ParityFilter { Any, Even, Odd };
enum class SignFilter { Any, Positive, Negative };

struct DiagramNode {
    int index = 0;
    bool odd = false;
    bool isotropic = false;
};

struct DiagramEdge {
    int i = 0;
    int j = 0;
    int multiplicity = 1;
    /// Index of the node the arrow points to (the shorter root), or -1.
    int toward = -1;
};

struct DynkinDiagram {
    std::vector<DiagramNode> nodes;
    std::vector<DiagramEdge> edges;
};

/// A finite basic classical root system in coordinates over its
/// distinguished simple base.
class FiniteRootSystem {
public:
    const TypeTag& type() const { return type_; }
    bool ambient_only() const { return ambient_only_; }

    /// Number of simple roots.
    int rank() const { return static_cast<int>(simple_.size()); }
    /// Length of a coefficient vector (rank, or ambient dimension).
    int dimension() const { return dimension_; }

    const std::vector<Root>& simple_roots() const { return simple_; }
    const std::vector<bool>& parities() const { return simple_odd_; }
    /// Form on the coordinate basis (simple roots, or ambient basis).
    const std::vector<std::vector<Scalar>>& gram() const { return gram_; }
    /// Form values on simple roots.
    std::vector<std::vector<Scalar>> simple_gram() const;
    const std::vector<Root>& positive_roots() const { return positive_; }
    /// theta = delta - alpha_0 over the simple base.
    const std::vector<int>& alpha0_expansion() const { return theta_.coeffs; }

    bool contains(const Root& r) const;
    bool is_positive(const Root& r) const;

    /// Coefficients of a coordinate vector in the simple roots.
    std::optional<IVector> simple_coordinates(const std::vector<int>& coeffs) const;

    Scalar form(const Root& x, const Root& y) const;
    /// Parity from coordinates; delta contributes nothing.
    bool odd(const Root& r) const;

    /// Ambient realization, kept for the form-consistency oracle.
    const std::vector<QVector>& ambient_simple() const { return ambient_simple_; }
    const std::vector<std::vector<Scalar>>& ambient_gram() const { return ambient_gram_; }
    /// Ambient vector of a coordinate vector.
    QVector to_ambient(const Root& r) const;

    const Root& theta() const { return theta_; }

private:
    friend FiniteRootSystem build_finite(const TypeTag& tag, bool ambient_mode);

    TypeTag type_;
    bool ambient_only_ = false;
    int dimension_ = 0;
    std::vector<Root> simple_;
    std::vector<bool> simple_odd_;
    std::vector<int> parity_weight_;
    std::vector<std::vector<Scalar>> gram_;
    std::vector<Root> positive_;
    std::vector<Root> all_sorted_;
    Root theta_;
    std::vector<QVector> ambient_simple_;
    std::vector<std::vector<Scalar>> ambient_gram_;
    Decomposer simple_solver_;
};

/// Builds the system from the family's ambient realization. For A(n,n)
/// set ambient_mode; otherwise A(n,n) is rejected.
FiniteRootSystem build_finite(const TypeTag& tag, bool ambient_mode = false);

std::vector<Root> all_roots(const FiniteRootSystem& sys, ParityFilter parity = ParityFilter::Any,
                            SignFilter sign = SignFilter::Any);

Scalar bilinear_form(const FiniteRootSystem& sys, const Root& x, const Root& y);

/// true for odd. Throws if r is not a root.
bool parity_of(const FiniteRootSystem& sys, const Root& r);

bool is_isotropic(const FiniteRootSystem& sys, const Root& r);

/// Diagram of an arbitrary ordered list of roots, computed from form values.
DynkinDiagram diagram_of(const FiniteRootSystem& sys, const std::vector<Root>& base);
DynkinDiagram dynkin_diagram(const FiniteRootSystem& sys);

Root distinguished_theta(const FiniteRootSystem& sys);

} // namespace superroot

#endif
