#pragma once

#include "quiverrep/representation.hpp"

namespace quiverrep {

/// A representation folded into a single space: orthogonal idempotents
/// summing to the identity, one per vertex, and one endomorphism per
/// arrow satisfying phi_t phi_a phi_s = phi_a.
struct TotalRep {
    Field field;
    Quiver quiver;
    long long dim = 0;
    std::vector<Matrix> vertex_idempotents;
    std::vector<Matrix> arrow_maps;
};

TotalRep total(const Representation& x);
/// Inverse of total; validates the idempotent relations exactly.
Representation untotal(const TotalRep& t);

/// The two-loop quiver receiving E (loops g1 = shift, g2 = data).
Quiver two_loop_quiver();
/// K3 receiving F.
Quiver three_kronecker_quiver();

/// E: representations of any quiver into the two-loop quiver; the
/// underlying space is (n + r + 2) copies of the total space, g1 the block
/// shift and g2 the subdiagonal filled with the vertex idempotents then
/// the arrow maps.
Representation embed_E(const Representation& x);
Morphism embed_E_morphism(const Morphism& phi);

/// F: two-loop representations into K3 as the triple (g1, g2, id).
Representation embed_F(const Representation& x);
Morphism embed_F_morphism(const Morphism& phi);

/// The composite embedding into K3.
Representation embed_FQ(const Representation& x);
Morphism embed_FQ_morphism(const Morphism& phi);

/// F_r: r-Kronecker representations into the (r+2)-subspace quiver; the
/// ambient space is X_1 x X_2, the subspaces are the two axes and the
/// graphs of the arrow maps.
Representation embed_Fr(const Representation& x);
Morphism embed_Fr_morphism(const Morphism& phi);

} // namespace quiverrep
