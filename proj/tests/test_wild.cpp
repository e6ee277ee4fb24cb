#include <doctest.h>

#include "helpers.hpp"
#include "quiverrep/decompose.hpp"
#include "quiverrep/wild.hpp"

using namespace quiverrep;
using quiverrep::testing::Rng;
using quiverrep::testing::random_morphism;
using quiverrep::testing::random_rep;

TEST_CASE("total representations") {
    Field f = Field::rationals();
    Quiver kron = kronecker_quiver(2);

    Representation s1 = simple(f, kron, 1);
    TotalRep t = total(s1);
    CHECK(t.dim == 1);
    CHECK(t.vertex_idempotents[0].is_identity());
    CHECK(t.vertex_idempotents[1].is_zero());

    Rng rng(127);
    for (int trial = 0; trial < 4; ++trial) {
        Representation x = random_rep(rng, f, kron, {2, 2});
        TotalRep tx = total(x);
        CHECK(tx.dim == x.total_dim());
        CHECK(untotal(tx) == x);
    }

    // invariant violations are rejected
    TotalRep bad = total(s1);
    bad.vertex_idempotents[1] = Matrix::identity(f, 1); // sums to 2*id
    CHECK_THROWS_AS(untotal(bad), validation_error);
}

TEST_CASE("embedding into the two-loop quiver") {
    Field f = Field::rationals();
    Quiver kron = kronecker_quiver(2);
    Representation s1 = simple(f, kron, 1);
    // n = 2 vertices, r = 2 arrows: 6 blocks of size 1
    Representation e = embed_E(s1);
    CHECK(e.dims() == DimVector{6});
    // the shift loop is nilpotent of index exactly the block count
    Matrix shift = e.arrow_matrix("g1");
    CHECK(shift.pow(6).is_zero());
    CHECK_FALSE(shift.pow(5).is_zero());

    Field f5 = Field::gf(5);
    Rng rng(131);
    for (int trial = 0; trial < 3; ++trial) {
        Representation x = random_rep(rng, f5, kron, {1, 2}, 0, 4);
        Representation y = random_rep(rng, f5, kron, {2, 1}, 0, 4);
        CHECK(hom_dim(x, y) == hom_dim(embed_E(x), embed_E(y)));
        // functorial on morphisms
        Morphism phi = random_morphism(rng, x, y);
        Morphism ephi = embed_E_morphism(phi);
        CHECK(ephi.source() == embed_E(x));
        CHECK((phi.is_zero()) == ephi.is_zero());
    }
}

TEST_CASE("embedding into K3") {
    Field f = Field::rationals();
    CHECK(embed_F(Representation(f, two_loop_quiver(), {0})).is_zero());

    Field f5 = Field::gf(5);
    Rng rng(137);
    for (int trial = 0; trial < 3; ++trial) {
        Representation x = random_rep(rng, f5, two_loop_quiver(), {3}, 0, 4);
        Representation y = random_rep(rng, f5, two_loop_quiver(), {2}, 0, 4);
        CHECK(hom_dim(x, y) == hom_dim(embed_F(x), embed_F(y)));
    }

    // the composite preserves endomorphism rings: indecomposables stay
    // indecomposable
    Quiver kron = kronecker_quiver(2);
    Representation p1 = projective(f5, kron, 1);
    CHECK(hom_dim(p1, p1) == 1);
    Representation fq = embed_FQ(p1);
    CHECK(hom_dim(fq, fq) == 1);
    CHECK(is_indecomposable(fq));
}

TEST_CASE("embedding into the subspace quiver") {
    Field f = Field::rationals();
    Quiver kron = kronecker_quiver(2);
    Representation s1 = simple(f, kron, 1);
    Representation fr = embed_Fr(s1);
    // ambient dim = dim x1 + dim x2
    CHECK(fr.dim_at(5) == 1);
    CHECK(fr.dims() == DimVector{1, 0, 1, 1, 1});
    // all arrow matrices are injective subspace inclusions
    for (std::size_t ai = 0; ai < fr.quiver().arrows().size(); ++ai)
        CHECK(fr.arrow_matrix(ai).rank() == fr.arrow_matrix(ai).cols());

    Field f5 = Field::gf(5);
    Rng rng(139);
    for (int trial = 0; trial < 3; ++trial) {
        Representation x = random_rep(rng, f5, kron, {2, 1}, 0, 4);
        Representation y = random_rep(rng, f5, kron, {1, 2}, 0, 4);
        CHECK(hom_dim(x, y) == hom_dim(embed_Fr(x), embed_Fr(y)));
        Morphism phi = random_morphism(rng, x, y);
        CHECK(embed_Fr_morphism(phi).is_zero() == phi.is_zero());
    }
}

TEST_CASE("isomorphism reflection through the embeddings") {
    Field f5 = Field::gf(5);
    Quiver kron = kronecker_quiver(2);
    Representation a = kronecker_indec(f5, {KroneckerKind::P, 1, 1, {Scalar(), Scalar()}});
    Representation b = kronecker_indec(
        f5, {KroneckerKind::R, 0, 1, ProjectivePoint::make(Scalar::one(f5), Scalar::one(f5))});
    // F X = F Y would force X = Y: the embedded homs detect non-isomorphy
    CHECK_FALSE(is_isomorphic(embed_FQ(a), embed_FQ(b)).has_value());
    Rng rng(149);
    Representation tw = quiverrep::testing::conjugate(rng, b);
    REQUIRE(is_isomorphic(embed_FQ(tw), embed_FQ(b)).has_value());
}
