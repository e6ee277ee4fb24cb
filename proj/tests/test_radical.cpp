#include <doctest.h>

#include "helpers.hpp"
#include "quiverrep/classify.hpp"
#include "quiverrep/radical.hpp"

using namespace quiverrep;
using quiverrep::testing::Rng;
using quiverrep::testing::conjugate_group;
using quiverrep::testing::group_direct_sum;
using quiverrep::testing::random_rep;

TEST_CASE("radical of representations") {
    Field f = Field::rationals();
    Quiver kron = kronecker_quiver(2);

    CHECK(radical(simple(f, kron, 1)).rep.is_zero());
    CHECK(radical(simple(f, kron, 2)).rep.is_zero());

    // Rad P(i) = image of the arrows: the unique maximal subrepresentation
    Representation p1 = projective(f, kron, 1);
    SubQuotient rad = radical(p1);
    CHECK(rad.rep.dims() == DimVector{0, 2});
    CHECK(kernel(rad.map).rep.is_zero());

    Representation p1k = kronecker_indec(f, {KroneckerKind::P, 1, 1, {Scalar(), Scalar()}});
    CHECK(radical(p1k).rep.dims() == DimVector{0, 2});

    // filtration: strictly decreasing, length bounded by the longest path
    Quiver a3 = linear_quiver(3);
    Rng rng(97);
    Representation x = random_rep(rng, Field::gf(5), a3, {2, 2, 2}, 0, 4);
    Representation cur = x;
    int steps = 0;
    while (!cur.is_zero()) {
        Representation next = radical(cur).rep;
        CHECK(next.total_dim() < cur.total_dim());
        cur = next;
        if (++steps > 3) break;
    }
    CHECK(steps <= 3); // longest path of A3 has length 2
    CHECK(radical_power(x, steps).rep.is_zero());

    // jacobson radical agrees when the filtration is nilpotent
    CHECK(jacobson_radical(p1).rep.dims() == DimVector{0, 2});
    // the loop with an invertible map has Rad X = X but rad X = 0
    Representation loop = jordan_rep(f, 1, Scalar::one(f));
    CHECK_THROWS_AS(jacobson_radical(loop), validation_error);
}

TEST_CASE("separated functors") {
    Field f = Field::gf(3);
    Quiver kron = kronecker_quiver(2);

    // S of a simple stays on the unprimed side
    Representation s1 = simple(f, kron, 1);
    Representation ss1 = separated_S(s1);
    CHECK(ss1.dims() == DimVector{1, 0, 0, 0});

    // rad-square-zero round trip TS = id on conjugated sums of known
    // summands (split endomorphism rings keep the decomposition exact)
    Rng rng(101);
    std::vector<Representation> pool{
        kronecker_indec(f, {KroneckerKind::P, 0, 1, {Scalar(), Scalar()}}),
        kronecker_indec(f, {KroneckerKind::P, 1, 1, {Scalar(), Scalar()}}),
        kronecker_indec(f, {KroneckerKind::I, 0, 1, {Scalar(), Scalar()}}),
        kronecker_indec(f, {KroneckerKind::I, 1, 1, {Scalar(), Scalar()}}),
        kronecker_indec(f, {KroneckerKind::R, 0, 1,
                            ProjectivePoint::make(Scalar::one(f), Scalar::one(f))})};
    for (int t = 0; t < 5; ++t) {
        std::vector<Representation> chosen;
        for (int k = 0; k < 2; ++k) chosen.push_back(pool[rng.next() % pool.size()]);
        Representation x = conjugate(rng, direct_sum(f, kron, chosen).rep);
        Representation s = separated_S(x);
        Representation back = separated_T(kron, s);
        // T S X = X up to the sink simples split off by S
        std::vector<Representation> keep;
        for (const auto& part : chosen)
            if (!(part.dims() == DimVector{0, 1})) keep.push_back(part);
        Representation expected = direct_sum(f, kron, keep).rep;
        REQUIRE(is_isomorphic(back, expected).has_value());
    }

    CHECK_THROWS_AS(separated_S(jordan_rep(Field::rationals(), 2, Scalar::one(Field::rationals()))),
                    validation_error);
}

TEST_CASE("group representations") {
    Field f2 = Field::gf(2);
    GroupRep kg = regular_group_rep(2, 2, f2);
    CHECK(kg.dim == 4);
    CHECK(kg.order() == 4);

    // gamma relations: the group basis is 1, g1bar, g2bar, g1bar g2bar
    Matrix prod = kg.gamma[0] * kg.gamma[1];
    CHECK_FALSE(prod.is_zero());
    CHECK((kg.gamma[0] * kg.gamma[0]).is_zero()); // char 2: gamma^2 = 0

    GroupRep triv = trivial_group_rep(2, 2, f2);
    CHECK(triv.dim == 1);
    CHECK(triv.gamma[0].is_zero());

    // Hom(k[G], X) = dim X through the evaluation at 1
    Representation kgq = group_to_loop_rep(kg);
    CHECK(hom_basis(kgq, kgq).size() == 4);
    GroupRep tp1 = klein_T(kronecker_indec(f2, {KroneckerKind::P, 1, 1, {Scalar(), Scalar()}}));
    CHECK(hom_basis(kgq, group_to_loop_rep(tp1)).size() == tp1.dim);

    // commuting and order-p validation
    std::vector<Matrix> bad{Matrix::from_ints(f2, {{0, 1}, {0, 0}}),
                            Matrix::from_ints(f2, {{0, 0}, {1, 0}})};
    CHECK_THROWS_AS(make_group_rep(2, 2, f2, bad), validation_error);
}

TEST_CASE("regular representation is self dual") {
    Field f2 = Field::gf(2);
    GroupRep kg = regular_group_rep(2, 2, f2);
    // in the group-element basis the action matrices of an involution are
    // symmetric permutations, so the dual gammas are the transposes
    std::vector<Matrix> dual_gamma;
    for (const auto& g : kg.gamma) dual_gamma.push_back(g.transpose());
    GroupRep dual_rep = make_group_rep(2, 2, f2, dual_gamma);
    for (const auto& exps : {std::vector<int>{1, 0}, std::vector<int>{0, 1}}) {
        Matrix xg = group_element_action(kg, exps);
        CHECK(xg == xg.transpose());
    }
    REQUIRE(is_isomorphic(group_to_loop_rep(kg), group_to_loop_rep(dual_rep)).has_value());
}

TEST_CASE("maschke complements") {
    Field f3 = Field::gf(3);
    Rng rng(103);
    // Klein four group over GF(3): 4 is invertible
    for (int trial = 0; trial < 6; ++trial) {
        // commuting involutions: conjugated diagonal sign matrices
        std::size_t d = static_cast<std::size_t>(rng.pick(2, 4));
        Matrix d1(f3, d, d), d2(f3, d, d);
        for (std::size_t i = 0; i < d; ++i) {
            d1.set_int(i, i, rng.pick(0, 1) ? 1 : -1);
            d2.set_int(i, i, rng.pick(0, 1) ? 1 : -1);
        }
        Matrix b = quiverrep::testing::random_invertible(rng, f3, d);
        Matrix binv = *b.inverse();
        GroupRep x = make_group_rep(2, 2, f3,
                                    {b * d1 * binv - Matrix::identity(f3, d),
                                     b * d2 * binv - Matrix::identity(f3, d)});

        // invariant subspace spanned by the orbit of a random vector
        Matrix v(f3, d, 1);
        for (std::size_t i = 0; i < d; ++i) v.set_int(i, 0, rng.pick(0, 2));
        Matrix orbit = v;
        for (const auto& exps :
             {std::vector<int>{1, 0}, std::vector<int>{0, 1}, std::vector<int>{1, 1}})
            orbit = Matrix::hstack(orbit, group_element_action(x, exps) * v);
        Matrix u = orbit.image_basis();
        if (u.cols() == 0 || u.cols() == d) continue;

        Matrix w = maschke_complement(x, u);
        CHECK(u.cols() + w.cols() == d);
        CHECK(Matrix::hstack(u, w).rank() == d);
        // the complement is invariant
        for (const auto& g : x.gamma)
            CHECK(w.solve((g + Matrix::identity(f3, d)) * w).has_value());
    }

    // u = whole space and u = 0 are the trivial cases
    GroupRep y = make_group_rep(2, 2, f3, {Matrix(f3, 2, 2), Matrix(f3, 2, 2)});
    CHECK(maschke_complement(y, Matrix::identity(f3, 2)).cols() == 0);
    CHECK(maschke_complement(y, Matrix(f3, 2, 0)).cols() == 2);

    // char 2 divides |G|: rejected
    GroupRep z = trivial_group_rep(2, 2, Field::gf(2));
    CHECK_THROWS_AS(maschke_complement(z, Matrix(Field::gf(2), 1, 0)), validation_error);
}

TEST_CASE("klein T and the kG detector") {
    Field f2 = Field::gf(2);
    GroupRep kg = regular_group_rep(2, 2, f2);
    CHECK_FALSE((kg.gamma[0] * kg.gamma[1]).is_zero());

    GroupRep tp1 = klein_T(kronecker_indec(f2, {KroneckerKind::P, 1, 1, {Scalar(), Scalar()}}));
    CHECK(tp1.dim == 3);
    CHECK((tp1.gamma[0] * tp1.gamma[1]).is_zero());

    // gamma1 gamma2 = 0 iff no k[G] summand, on random mixes
    Rng rng(107);
    for (int t = 0; t < 20; ++t) {
        bool with_kg = rng.pick(0, 1) == 1;
        std::vector<GroupRep> parts;
        if (with_kg) parts.push_back(kg);
        parts.push_back(tp1);
        if (rng.pick(0, 1)) parts.push_back(trivial_group_rep(2, 2, f2));
        GroupRep sum = conjugate_group(rng, group_direct_sum(parts));
        CHECK((sum.gamma[0] * sum.gamma[1]).is_zero() == !with_kg);
    }
}

TEST_CASE("klein classification") {
    Field f2 = Field::gf(2);
    GroupRep kg = regular_group_rep(2, 2, f2);
    auto only_kg = klein_classify(kg);
    REQUIRE(only_kg.size() == 1);
    CHECK(only_kg[0].first.kind == KleinSummand::Kind::kG);
    CHECK(only_kg[0].second == 1);

    GroupRep tp1 = klein_T(kronecker_indec(f2, {KroneckerKind::P, 1, 1, {Scalar(), Scalar()}}));
    auto only_tp = klein_classify(tp1);
    REQUIRE(only_tp.size() == 1);
    CHECK(only_tp[0].first.kind == KleinSummand::Kind::TP);
    CHECK(only_tp[0].first.r == 1);

    // the trivial representation comes out as TI_0
    auto triv = klein_classify(trivial_group_rep(2, 2, f2));
    REQUIRE(triv.size() == 1);
    CHECK(triv[0].first.kind == KleinSummand::Kind::TI);
    CHECK(triv[0].first.r == 0);

    Rng rng(109);
    GroupRep tr = klein_T(kronecker_indec(
        f2, {KroneckerKind::R, 0, 2, ProjectivePoint::make(Scalar::one(f2), Scalar::one(f2))}));
    GroupRep mixed = conjugate_group(rng, group_direct_sum({kg, tp1, tr}));
    auto list = klein_classify(mixed);
    REQUIRE(list.size() == 3);
    CHECK(list[0].first.kind == KleinSummand::Kind::kG);
    CHECK(list[0].second == 1);
    bool saw_tp = false, saw_tr = false;
    for (const auto& [s, m] : list) {
        if (s.kind == KleinSummand::Kind::TP) {
            CHECK(s.r == 1);
            CHECK(m == 1);
            saw_tp = true;
        }
        if (s.kind == KleinSummand::Kind::TR) {
            CHECK(s.p == 2);
            saw_tr = true;
        }
    }
    CHECK(saw_tp);
    CHECK(saw_tr);

    CHECK_THROWS_AS(klein_classify(trivial_group_rep(2, 3, Field::gf(3))), validation_error);
}

TEST_CASE("elementary abelian T") {
    Field f3 = Field::gf(3);
    Quiver k3 = kronecker_quiver(3);
    Representation s1 = simple(f3, k3, 1);
    GroupRep t = elabel_T(s1, 3);
    CHECK(t.dim == 1);
    for (const auto& g : t.gamma) CHECK(g.is_zero());

    // rad(T y) has dimension dim y_2 for separated y, and rad^2 = 0
    Rng rng(113);
    for (int trial = 0; trial < 4; ++trial) {
        // separated input: jointly surjective arrow maps
        Representation y = random_rep(rng, f3, k3, {2, 2}, 0, 2);
        {
            Matrix stacked(f3, 2, 0);
            for (std::size_t ai = 0; ai < 3; ++ai)
                stacked = Matrix::hstack(stacked, y.arrow_matrix(ai));
            if (stacked.rank() < 2) {
                y.set_arrow_matrix(std::size_t{0}, Matrix::identity(f3, 2));
            }
        }
        GroupRep ty = elabel_T(y, 3);
        Representation loops = group_to_loop_rep(ty);
        SubQuotient rad = radical(loops);
        CHECK(rad.rep.total_dim() == y.dim_at(2));
        CHECK(radical(rad.rep).rep.is_zero());

        // round trip through the separated functor: S T y = y on the nose
        // up to base change; compare hom data and dimensions
        Representation sep = separated_S(loops);
        Representation kron_back(f3, k3, {sep.dim_at(1), sep.dim_at(2)});
        for (int a = 1; a <= 3; ++a)
            kron_back.set_arrow_matrix("a" + std::to_string(a),
                                       sep.arrow_matrix("g" + std::to_string(a)));
        CHECK(kron_back.dims() == y.dims());
        REQUIRE(is_isomorphic(kron_back, y).has_value());
    }

    CHECK_THROWS_AS(elabel_T(simple(Field::gf(2), k3, 1), 3), validation_error);
}
