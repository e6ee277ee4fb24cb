#pragma once

#include "quiverrep/decompose.hpp"
#include "quiverrep/representation.hpp"

namespace quiverrep {

/// Upper triangular Jordan block: e_i -> lambda e_i + e_{i-1}.
Matrix jordan_block(const Field& f, int p, const Scalar& lambda);

/// The representation (k^p, J(p, lambda)) of the one-loop quiver.
Representation jordan_rep(const Field& f, int p, const Scalar& lambda);

/// The standard morphism J_{p,lambda} -> J_{q,lambda}: inclusion onto the
/// leading coordinates when p <= q, truncation e_i -> e_{i-(p-q)} when
/// p > q.
Morphism jordan_standard_morphism(const Field& f, int p, int q, const Scalar& lambda);

/// Basis of Hom(J_{p,lambda}, J_{q,mu}): the min(p,q) standard composites
/// when lambda = mu, empty otherwise.
std::vector<Morphism> jordan_hom_basis(const Field& f, int p, const Scalar& lambda, int q,
                                       const Scalar& mu);

/// The complete subrepresentation chain 0 = J_0 < J_1 < ... < J_p, each
/// with its inclusion.
std::vector<SubQuotient> jordan_subreps(const Field& f, int p, const Scalar& lambda);

/// A point of the projective line, normalised to (l0 : 1) when l1 != 0
/// and to (1 : 0) otherwise.
struct ProjectivePoint {
    Scalar l0, l1;

    static ProjectivePoint make(const Scalar& a, const Scalar& b);
    bool operator==(const ProjectivePoint& other) const { return l0 == other.l0 && l1 == other.l1; }
    bool operator<(const ProjectivePoint& other) const;
    std::string to_string() const { return "(" + l0.to_string() + ":" + l1.to_string() + ")"; }
};

enum class KroneckerKind { P, I, R };

struct KroneckerIndec {
    KroneckerKind kind = KroneckerKind::P;
    int r = 0;                          // P_r / I_r index
    int p = 1;                          // regular block size
    ProjectivePoint point{Scalar(), Scalar()};

    bool operator==(const KroneckerIndec& other) const;
    bool operator<(const KroneckerIndec& other) const;
    std::string to_string() const;
};

/// The displayed matrices: P_r = (id over 0, 0 over id), I_r = (id 0, 0 id),
/// R_{p,(l0:1)} = (J(p,l0), id), R_{p,(1:0)} = (id, J(p,0)).
Representation kronecker_indec(const Field& f, const KroneckerIndec& which);

bool is_kronecker_quiver(const Quiver& q);

/// Full classification of a Kronecker representation.  Throws
/// incomplete_error when a regular eigenvalue does not lie in the field.
std::vector<std::pair<KroneckerIndec, long long>> kronecker_classify(const Representation& x);

/// An embedded R_{1,lambda} inside an indecomposable regular.
std::pair<ProjectivePoint, Morphism> reg_sub_find(const Representation& x);

} // namespace quiverrep
