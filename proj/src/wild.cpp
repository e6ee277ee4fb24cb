#include "quiverrep/wild.hpp"

namespace quiverrep {

Quiver two_loop_quiver() { return loop_quiver(2); }

Quiver three_kronecker_quiver() { return kronecker_quiver(3); }

TotalRep total(const Representation& x) {
    const Quiver& q = x.quiver();
    const Field& f = x.field();
    const int n = q.vertex_count();
    long long dim = x.total_dim();
    std::vector<long long> offset(n + 1, 0);
    for (int v = 1; v <= n; ++v) offset[v] = (v == 1 ? 0 : offset[v - 1] + x.dim_at(v - 1));

    TotalRep t{f, q, dim, {}, {}};
    for (int v = 1; v <= n; ++v) {
        Matrix idem(f, static_cast<std::size_t>(dim), static_cast<std::size_t>(dim));
        for (long long k = 0; k < x.dim_at(v); ++k)
            idem.set(static_cast<std::size_t>(offset[v] + k), static_cast<std::size_t>(offset[v] + k),
                     Scalar::one(f));
        t.vertex_idempotents.push_back(std::move(idem));
    }
    for (std::size_t ai = 0; ai < q.arrows().size(); ++ai) {
        const Arrow& a = q.arrow(ai);
        Matrix m(f, static_cast<std::size_t>(dim), static_cast<std::size_t>(dim));
        const Matrix& xa = x.arrow_matrix(ai);
        for (std::size_t r = 0; r < xa.rows(); ++r)
            for (std::size_t c = 0; c < xa.cols(); ++c)
                m.set(static_cast<std::size_t>(offset[a.to]) + r,
                      static_cast<std::size_t>(offset[a.from]) + c, xa.at(r, c));
        t.arrow_maps.push_back(std::move(m));
    }
    return t;
}

Representation untotal(const TotalRep& t) {
    const Quiver& q = t.quiver;
    const Field& f = t.field;
    const int n = q.vertex_count();
    const std::size_t d = static_cast<std::size_t>(t.dim);
    if (static_cast<int>(t.vertex_idempotents.size()) != n ||
        t.arrow_maps.size() != q.arrows().size())
        throw validation_error("total representation has the wrong number of maps");

    Matrix sum(f, d, d);
    for (const auto& e : t.vertex_idempotents) sum = sum + e;
    if (!sum.is_identity()) throw validation_error("vertex idempotents do not sum to the identity");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Matrix prod = t.vertex_idempotents[i] * t.vertex_idempotents[j];
            if (i == j ? !(prod == t.vertex_idempotents[i]) : !prod.is_zero())
                throw validation_error("vertex maps are not orthogonal idempotents");
        }
    for (std::size_t ai = 0; ai < q.arrows().size(); ++ai) {
        const Arrow& a = q.arrow(ai);
        Matrix expected = t.vertex_idempotents[a.to - 1] * t.arrow_maps[ai] *
                          t.vertex_idempotents[a.from - 1];
        if (!(expected == t.arrow_maps[ai]))
            throw validation_error("arrow map is not supported between its vertex summands");
    }

    std::vector<Matrix> bases;
    DimVector dims(n, 0);
    for (int v = 1; v <= n; ++v) {
        bases.push_back(t.vertex_idempotents[v - 1].image_basis());
        dims[v - 1] = static_cast<long long>(bases.back().cols());
    }
    Representation x(f, q, dims);
    for (std::size_t ai = 0; ai < q.arrows().size(); ++ai) {
        const Arrow& a = q.arrow(ai);
        auto coords = bases[a.to - 1].solve(t.arrow_maps[ai] * bases[a.from - 1]);
        if (!coords) throw validation_error("arrow map escapes its target summand");
        x.set_arrow_matrix(ai, std::move(*coords));
    }
    return x;
}

namespace {

// block layout helpers for E
Matrix shift_blocks(const Field& f, std::size_t blocks, std::size_t b) {
    Matrix m(f, blocks * b, blocks * b);
    for (std::size_t k = 0; k + 1 < blocks; ++k)
        for (std::size_t i = 0; i < b; ++i) m.set(k * b + i, (k + 1) * b + i, Scalar::one(f));
    return m;
}

} // namespace

Representation embed_E(const Representation& x) {
    const Quiver& q = x.quiver();
    const Field& f = x.field();
    const int n = q.vertex_count();
    const std::size_t r = q.arrows().size();
    TotalRep t = total(x);
    const std::size_t b = static_cast<std::size_t>(t.dim);
    const std::size_t blocks = static_cast<std::size_t>(n) + r + 2;

    Matrix tau(f, blocks * b, blocks * b);
    auto put = [&](std::size_t row_block, std::size_t col_block, const Matrix& m) {
        for (std::size_t i = 0; i < b; ++i)
            for (std::size_t j = 0; j < b; ++j)
                if (!m.at(i, j).is_zero()) tau.set(row_block * b + i, col_block * b + j, m.at(i, j));
    };
    Matrix id = Matrix::identity(f, b);
    // row k >= 2 carries id at column k-1; row k >= 3 also carries the
    // k-2nd map of the sequence (vertex idempotents, then arrow maps)
    for (std::size_t k = 1; k < blocks; ++k) put(k, k - 1, id);
    for (std::size_t k = 2; k < blocks; ++k) {
        std::size_t idx = k - 2;
        const Matrix& data = idx < static_cast<std::size_t>(n)
                                 ? t.vertex_idempotents[idx]
                                 : t.arrow_maps[idx - static_cast<std::size_t>(n)];
        put(k, k - 2, data);
    }

    Representation out(f, two_loop_quiver(), {static_cast<long long>(blocks * b)});
    out.set_arrow_matrix("g1", shift_blocks(f, blocks, b));
    out.set_arrow_matrix("g2", tau);
    return out;
}

Morphism embed_E_morphism(const Morphism& phi) {
    Representation ex = embed_E(phi.source());
    Representation ey = embed_E(phi.target());
    const Quiver& q = phi.source().quiver();
    const Field& f = phi.source().field();
    const int n = q.vertex_count();
    const std::size_t blocks = static_cast<std::size_t>(n) + q.arrows().size() + 2;

    // bar(phi): block diagonal by vertex inside one total block
    std::size_t bs = static_cast<std::size_t>(phi.source().total_dim());
    std::size_t bt = static_cast<std::size_t>(phi.target().total_dim());
    Matrix bar(f, bt, bs);
    std::size_t ro = 0, co = 0;
    for (int v = 1; v <= n; ++v) {
        const Matrix& comp = phi.component(v);
        for (std::size_t i = 0; i < comp.rows(); ++i)
            for (std::size_t j = 0; j < comp.cols(); ++j) bar.set(ro + i, co + j, comp.at(i, j));
        ro += comp.rows();
        co += comp.cols();
    }
    Matrix big(f, blocks * bt, blocks * bs);
    for (std::size_t k = 0; k < blocks; ++k)
        for (std::size_t i = 0; i < bt; ++i)
            for (std::size_t j = 0; j < bs; ++j)
                if (!bar.at(i, j).is_zero()) big.set(k * bt + i, k * bs + j, bar.at(i, j));
    return Morphism(ex, ey, {big});
}

Representation embed_F(const Representation& x) {
    if (!(x.quiver() == two_loop_quiver()))
        throw validation_error("embed_F expects a two-loop representation");
    const Field& f = x.field();
    long long d = x.dim_at(1);
    Representation out(f, three_kronecker_quiver(), {d, d});
    out.set_arrow_matrix("a1", x.arrow_matrix("g1"));
    out.set_arrow_matrix("a2", x.arrow_matrix("g2"));
    out.set_arrow_matrix("a3", Matrix::identity(f, static_cast<std::size_t>(d)));
    return out;
}

Morphism embed_F_morphism(const Morphism& phi) {
    return Morphism(embed_F(phi.source()), embed_F(phi.target()),
                    {phi.component(1), phi.component(1)});
}

Representation embed_FQ(const Representation& x) { return embed_F(embed_E(x)); }

Morphism embed_FQ_morphism(const Morphism& phi) {
    return embed_F_morphism(embed_E_morphism(phi));
}

Representation embed_Fr(const Representation& x) {
    const Quiver& q = x.quiver();
    const Field& f = x.field();
    if (q.vertex_count() != 2) throw validation_error("embed_Fr expects an r-Kronecker representation");
    for (const auto& a : q.arrows())
        if (a.from != 1 || a.to != 2) throw validation_error("embed_Fr arrows must run 1 -> 2");
    const int r = static_cast<int>(q.arrows().size());
    const std::size_t d1 = static_cast<std::size_t>(x.dim_at(1));
    const std::size_t d2 = static_cast<std::size_t>(x.dim_at(2));

    Quiver target = subspace_quiver(r + 2);
    DimVector dims(r + 3, 0);
    dims[r + 2] = static_cast<long long>(d1 + d2);      // ambient, last vertex
    dims[0] = static_cast<long long>(d1);               // X1 x 0
    dims[1] = static_cast<long long>(d2);               // 0 x X2
    for (int a = 0; a < r; ++a) dims[2 + a] = static_cast<long long>(d1); // graphs
    Representation out(f, target, dims);

    Matrix axis1(f, d1 + d2, d1), axis2(f, d1 + d2, d2);
    for (std::size_t i = 0; i < d1; ++i) axis1.set(i, i, Scalar::one(f));
    for (std::size_t i = 0; i < d2; ++i) axis2.set(d1 + i, i, Scalar::one(f));
    out.set_arrow_matrix("a1", axis1);
    out.set_arrow_matrix("a2", axis2);
    for (int a = 0; a < r; ++a) {
        Matrix graph(f, d1 + d2, d1);
        const Matrix& xa = x.arrow_matrix(static_cast<std::size_t>(a));
        for (std::size_t i = 0; i < d1; ++i) graph.set(i, i, Scalar::one(f));
        for (std::size_t i = 0; i < d2; ++i)
            for (std::size_t j = 0; j < d1; ++j) graph.set(d1 + i, j, xa.at(i, j));
        out.set_arrow_matrix("a" + std::to_string(a + 3), graph);
    }
    return out;
}

Morphism embed_Fr_morphism(const Morphism& phi) {
    Representation fx = embed_Fr(phi.source());
    Representation fy = embed_Fr(phi.target());
    const Field& f = phi.source().field();
    const int r = static_cast<int>(phi.source().quiver().arrows().size());
    std::vector<Matrix> comps;
    comps.push_back(phi.component(1));
    comps.push_back(phi.component(2));
    for (int a = 0; a < r; ++a) comps.push_back(phi.component(1));
    comps.push_back(Matrix::block_diag({phi.component(1), phi.component(2)}, f));
    return Morphism(fx, fy, std::move(comps));
}

} // namespace quiverrep
