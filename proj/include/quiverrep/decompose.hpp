#pragma once

#include <optional>
#include <vector>

#include "quiverrep/representation.hpp"

namespace quiverrep {

/// End(x) as an algebra: a basis of the endomorphism space together with
/// the structure constants of composition.
struct EndAlgebra {
    Representation rep;
    std::vector<Morphism> basis;
    /// table[i][j] = coefficients of basis[i] . basis[j] in the basis.
    std::vector<std::vector<std::vector<Scalar>>> table;
};

EndAlgebra end_algebra(const Representation& x);

struct FittingSplit {
    Representation image_part;
    Representation kernel_part;
    /// Isomorphism  image_part (+) kernel_part -> x.
    Morphism witness;
};

/// Splits x along the stable image/kernel of an endomorphism.  Absent
/// exactly when phi is an automorphism or nilpotent.
std::optional<FittingSplit> fitting_split(const Representation& x, const Morphism& phi);

/// True when End(x) is certified local (the non-scalar part of a basis is
/// a nilpotent ideal).  Throws incomplete_error when neither a splitting
/// nor a locality certificate is found.
bool is_indecomposable(const Representation& x);

struct Decomposition {
    struct Part {
        Representation indec;
        long long multiplicity = 1;
    };
    std::vector<Part> parts;
    /// The direct sum of the parts (each repeated by multiplicity), and an
    /// isomorphism from it onto the decomposed representation.
    Representation resummed;
    Morphism witness;

    long long summand_count() const {
        long long t = 0;
        for (const auto& p : parts) t += p.multiplicity;
        return t;
    }
};

/// Krull-Remak-Schmidt decomposition.  The candidate-endomorphism order
/// can be permuted by seed; the resulting multiset of isomorphism classes
/// does not depend on it.
Decomposition krs_decompose(const Representation& x, std::uint64_t seed = 0);

/// An isomorphism witness x -> y, or absent.
std::optional<Morphism> is_isomorphic(const Representation& x, const Representation& y);

/// Basis of Rad(x, y), the morphisms no composite of which is invertible
/// through any indecomposable.
std::vector<Morphism> rad_hom(const Representation& x, const Representation& y);

/// Basis of Rad^n(x, y); for n >= 2 the factorisations range over the
/// given universe of indecomposables.
std::vector<Morphism> radn_hom(const Representation& x, const Representation& y, int n,
                               const std::vector<Representation>& universe);

/// dim Rad^1 - dim Rad^2 between indecomposables.
long long irr_dim(const Representation& x, const Representation& y,
                  const std::vector<Representation>& universe);

/// Composes a chain phi_k ... phi_1 of composable non-isomorphisms and
/// reports whether the composite vanishes.
bool harada_sai_check(const std::vector<Morphism>& chain);

/// Pivot-column reduction of a list of morphisms to a linearly
/// independent sublist spanning the same space.
std::vector<Morphism> reduce_span(const std::vector<Morphism>& span);

} // namespace quiverrep
