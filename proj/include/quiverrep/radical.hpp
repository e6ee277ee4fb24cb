#pragma once

#include "quiverrep/kronecker.hpp"
#include "quiverrep/representation.hpp"

namespace quiverrep {

/// Rad X: the subrepresentation generated by all arrow images, with its
/// inclusion.
SubQuotient radical(const Representation& x);
SubQuotient radical_power(const Representation& x, int n);

/// Equals the radical when the Rad filtration reaches zero; otherwise the
/// two differ (one loop with the identity map is the stock example) and
/// this throws.
SubQuotient jacobson_radical(const Representation& x);

/// S: radical-square-zero representations of q to representations of the
/// separated quiver q.separated().
Representation separated_S(const Representation& x);
/// T: representations of q.separated() back to q (block lower-triangular
/// arrow matrices).
Representation separated_T(const Quiver& base, const Representation& y);

/// A representation of the elementary abelian group C_p^r over a field,
/// stored through the shifted generators gamma_i = X_{g_i} - id.  The
/// gammas commute and satisfy (id + gamma_i)^p = id; over a field of
/// characteristic p this is exactly gamma_i^p = 0.
struct GroupRep {
    int generators = 0;       // r
    std::int64_t group_prime = 2;
    Field field;
    long long dim = 0;
    std::vector<Matrix> gamma;

    long long order() const; // p^r
};

GroupRep make_group_rep(int r, std::int64_t p, const Field& f, std::vector<Matrix> gamma);

/// X_g for a group element given by exponents (a_1, ..., a_r).
Matrix group_element_action(const GroupRep& x, const std::vector<int>& exponents);

/// k[C_p^r] with the left translation action.
GroupRep regular_group_rep(int r, std::int64_t p, const Field& f);
GroupRep trivial_group_rep(int r, std::int64_t p, const Field& f);

/// Group representations are representations of the r-loop quiver via the
/// gammas; morphisms and decompositions ride on that identification.
Representation group_to_loop_rep(const GroupRep& x);
GroupRep loop_rep_to_group(const Representation& x, std::int64_t p);

/// The averaged projection of Maschke's construction; returns a basis of
/// an invariant complement of the invariant subspace spanned by u.
/// Requires the characteristic not to divide the group order.
Matrix maschke_complement(const GroupRep& x, const Matrix& u);

/// T for the Klein four group: Kronecker representations to char-2
/// representations of C_2 x C_2.
GroupRep klein_T(const Representation& y);

/// The same block construction for C_p^r from r-Kronecker representations.
GroupRep elabel_T(const Representation& y, std::int64_t p);

struct KleinSummand {
    enum class Kind { kG, TP, TI, TR } kind = Kind::kG;
    int r = 0;
    int p = 1;
    ProjectivePoint point{Scalar(), Scalar()};

    bool operator==(const KleinSummand& other) const;
    std::string to_string() const;
};

/// Splits off regular summands k[G] while gamma_1 gamma_2 != 0, then
/// inverts T through the separated functor and classifies the Kronecker
/// remainder.
std::vector<std::pair<KleinSummand, long long>> klein_classify(const GroupRep& x);

} // namespace quiverrep
