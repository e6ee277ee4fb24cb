#pragma once

#include <map>
#include <vector>

#include "quiverrep/forms.hpp"
#include "quiverrep/matrix.hpp"
#include "quiverrep/quiver.hpp"

namespace quiverrep {

/// A finite dimensional representation: a dimension per vertex and a
/// matrix per arrow, X_alpha of shape dim t(alpha) x dim s(alpha).
class Representation {
public:
    Representation() = default;
    Representation(Field f, Quiver q, DimVector dims);

    const Field& field() const { return field_; }
    const Quiver& quiver() const { return quiver_; }
    const DimVector& dims() const { return dims_; }
    long long dim_at(int v) const { return dims_.at(v - 1); }
    long long total_dim() const;
    bool is_zero() const { return total_dim() == 0; }

    const Matrix& arrow_matrix(std::size_t arrow_index) const;
    const Matrix& arrow_matrix(const std::string& label) const;
    void set_arrow_matrix(std::size_t arrow_index, Matrix m);
    void set_arrow_matrix(const std::string& label, Matrix m);

    bool operator==(const Representation& other) const;

private:
    Field field_;
    Quiver quiver_;
    DimVector dims_;
    std::vector<Matrix> mats_;
};

/// Vertex-wise linear maps satisfying Y_a phi_{s(a)} = phi_{t(a)} X_a for
/// every arrow; the law is checked exactly at construction.
class Morphism {
public:
    Morphism(Representation source, Representation target, std::vector<Matrix> components);

    static Morphism zero(const Representation& x, const Representation& y);
    static Morphism identity(const Representation& x);

    const Representation& source() const { return source_; }
    const Representation& target() const { return target_; }
    const Matrix& component(int v) const { return comps_.at(v - 1); }
    const std::vector<Matrix>& components() const { return comps_; }

    Morphism operator+(const Morphism& other) const;
    Morphism operator-() const;
    Morphism scaled(const Scalar& c) const;
    /// this . other  (other applied first).
    Morphism compose(const Morphism& other) const;

    bool is_zero() const;
    bool is_isomorphism() const;
    Morphism inverse() const;

    /// All components stacked into one coordinate column (vertex order,
    /// row-major inside each component).
    Matrix vectorized() const;

    bool operator==(const Morphism& other) const;

private:
    Representation source_, target_;
    std::vector<Matrix> comps_;
};

Representation simple(const Field& f, const Quiver& q, int i);
/// P(i): path spaces Q(i, -) with post-composition; acyclic quivers only.
Representation projective(const Field& f, const Quiver& q, int i);
/// I(i) = dual of the opposite-quiver projective.
Representation injective(const Field& f, const Quiver& q, int i);

/// Paths i -> j in the order used for the P(i) bases: by length, then
/// lexicographically by label sequence.
std::vector<Path> projective_basis(const Quiver& q, int i, int j);

struct DirectSum {
    Representation rep;
    std::vector<Morphism> injections;
    std::vector<Morphism> projections;
};
DirectSum direct_sum(const Field& f, const Quiver& q, const std::vector<Representation>& parts);

/// Transposes every matrix and reverses every arrow; lands over the
/// opposite quiver.
Representation dual(const Representation& x);

/// Basis of Hom(x, y), deterministically ordered.
std::vector<Morphism> hom_basis(const Representation& x, const Representation& y);
long long hom_dim(const Representation& x, const Representation& y);

struct SubQuotient {
    Representation rep;
    Morphism map; // kernel/image: inclusion; cokernel: projection
};

SubQuotient kernel(const Morphism& phi);
SubQuotient cokernel(const Morphism& phi);
SubQuotient image(const Morphism& phi);

/// The path pre-composition monomorphism P(t(a)) -> P(s(a)) induced by an
/// arrow a.
Morphism alpha_star(const Field& f, const Quiver& q, const std::string& label);

/// dim Ext(z, x), computed from the canonical projective presentation
/// P1 -> P0 -> z -> 0 as the cokernel dimension of
/// Hom(P0, x) -> Hom(P1, x); acyclic quivers only.
long long ext_dim(const Representation& z, const Representation& x);

/// The presentation map P1 -> P0 itself (exposed for tests).
Morphism projective_presentation(const Representation& z);

} // namespace quiverrep
