#include "quiverrep/radical.hpp"

#include <algorithm>

namespace quiverrep {

SubQuotient radical(const Representation& x) {
    const Quiver& q = x.quiver();
    const Field& f = x.field();
    const int n = q.vertex_count();
    std::vector<Matrix> incl;
    DimVector dims(n, 0);
    for (int v = 1; v <= n; ++v) {
        Matrix stacked(f, static_cast<std::size_t>(x.dim_at(v)), 0);
        for (auto ai : q.arrows_into(v)) stacked = Matrix::hstack(stacked, x.arrow_matrix(ai));
        incl.push_back(stacked.image_basis());
        dims[v - 1] = static_cast<long long>(incl.back().cols());
    }
    Representation rad(f, q, dims);
    for (std::size_t ai = 0; ai < q.arrows().size(); ++ai) {
        const Arrow& a = q.arrow(ai);
        auto induced = incl[a.to - 1].solve(x.arrow_matrix(ai) * incl[a.from - 1]);
        if (!induced) throw validation_error("radical is not arrow-stable (internal)");
        rad.set_arrow_matrix(ai, std::move(*induced));
    }
    return {rad, Morphism(rad, x, std::move(incl))};
}

SubQuotient radical_power(const Representation& x, int n) {
    if (n < 0) throw validation_error("radical_power needs n >= 0");
    SubQuotient cur{x, Morphism::identity(x)};
    for (int k = 0; k < n; ++k) {
        SubQuotient next = radical(cur.rep);
        cur = {next.rep, cur.map.compose(next.map)};
    }
    return cur;
}

SubQuotient jacobson_radical(const Representation& x) {
    // nilpotency of the Rad filtration is the hypothesis that makes the
    // Jacobson radical equal Rad
    Representation probe = x;
    for (long long k = 0; k <= x.total_dim() + 1 && !probe.is_zero(); ++k) {
        Representation next = radical(probe).rep;
        if (next.total_dim() == probe.total_dim())
            throw validation_error(
                "jacobson_radical: Rad filtration does not reach zero (a loop with an "
                "invertible map has Rad X = X while rad X = 0)");
        probe = next;
    }
    return radical(x);
}

Representation separated_S(const Representation& x) {
    const Quiver& q = x.quiver();
    const Field& f = x.field();
    const int n = q.vertex_count();
    SubQuotient rad = radical(x);
    if (!radical(rad.rep).rep.is_zero())
        throw validation_error("separated_S needs Rad^2 = 0");

    // per vertex: quotient projection C_v : X_v -> (X/Rad)_v and the
    // radical basis R_v
    std::vector<Matrix> quot, rbasis;
    DimVector dims(2 * n, 0);
    for (int v = 1; v <= n; ++v) {
        rbasis.push_back(rad.map.component(v));
        quot.push_back(rbasis.back().cokernel_projection());
        dims[v - 1] = static_cast<long long>(quot.back().rows());
        dims[n + v - 1] = static_cast<long long>(rbasis.back().cols());
    }
    Representation out(f, q.separated(), dims);
    for (std::size_t ai = 0; ai < q.arrows().size(); ++ai) {
        const Arrow& a = q.arrow(ai);
        // the induced map (X/Rad X)_{s} -> (Rad X)_{t}
        auto in_rad = rbasis[a.to - 1].solve(x.arrow_matrix(ai));
        if (!in_rad) throw validation_error("arrow image escapes the radical (internal)");
        auto through_quot = quot[a.from - 1].transpose().solve(in_rad->transpose());
        if (!through_quot)
            throw validation_error("arrow map does not factor through the top (needs Rad^2 = 0)");
        out.set_arrow_matrix(a.label, through_quot->transpose());
    }
    return out;
}

Representation separated_T(const Quiver& base, const Representation& y) {
    if (!(y.quiver() == base.separated()))
        throw validation_error("separated_T input must live over the separated quiver");
    const int n = base.vertex_count();
    const Field& f = y.field();
    DimVector dims(n, 0);
    for (int v = 1; v <= n; ++v) dims[v - 1] = y.dim_at(v) + y.dim_at(n + v);
    Representation out(f, base, dims);
    for (std::size_t ai = 0; ai < base.arrows().size(); ++ai) {
        const Arrow& a = base.arrow(ai);
        std::size_t s_plain = static_cast<std::size_t>(y.dim_at(a.from));
        std::size_t t_plain = static_cast<std::size_t>(y.dim_at(a.to));
        Matrix m(f, static_cast<std::size_t>(dims[a.to - 1]),
                 static_cast<std::size_t>(dims[a.from - 1]));
        const Matrix& block = y.arrow_matrix(a.label); // Y_{i -> j'}
        for (std::size_t r = 0; r < block.rows(); ++r)
            for (std::size_t c = 0; c < block.cols(); ++c)
                m.set(t_plain + r, c, block.at(r, c));
        out.set_arrow_matrix(ai, std::move(m));
    }
    return out;
}

long long GroupRep::order() const {
    long long o = 1;
    for (int i = 0; i < generators; ++i) o *= group_prime;
    return o;
}

GroupRep make_group_rep(int r, std::int64_t p, const Field& f, std::vector<Matrix> gamma) {
    if (r < 0 || static_cast<int>(gamma.size()) != r)
        throw validation_error("group representation needs one gamma per generator");
    if (!is_prime(p)) throw validation_error("group parameter p must be prime");
    GroupRep out{r, p, f, 0, std::move(gamma)};
    out.dim = out.gamma.empty() ? 0 : static_cast<long long>(out.gamma[0].rows());
    for (const auto& g : out.gamma) {
        if (g.rows() != g.cols() || g.rows() != static_cast<std::size_t>(out.dim))
            throw validation_error("gamma matrices must be square of equal size");
        if (!(g.field() == f)) throw validation_error("gamma matrix field mismatch");
    }
    for (std::size_t i = 0; i < out.gamma.size(); ++i)
        for (std::size_t j = i + 1; j < out.gamma.size(); ++j)
            if (!(out.gamma[i] * out.gamma[j] == out.gamma[j] * out.gamma[i]))
                throw validation_error("group generators must commute");
    for (const auto& g : out.gamma) {
        Matrix xg = g + Matrix::identity(f, g.rows());
        if (!xg.pow(static_cast<std::size_t>(p)).is_identity())
            throw validation_error("generator does not have order dividing p");
    }
    return out;
}

Matrix group_element_action(const GroupRep& x, const std::vector<int>& exponents) {
    if (static_cast<int>(exponents.size()) != x.generators)
        throw validation_error("need one exponent per generator");
    Matrix m = Matrix::identity(x.field, static_cast<std::size_t>(x.dim));
    for (int i = 0; i < x.generators; ++i) {
        int e = exponents[i] % static_cast<int>(x.group_prime);
        if (e < 0) e += static_cast<int>(x.group_prime);
        Matrix xg = x.gamma[i] + Matrix::identity(x.field, static_cast<std::size_t>(x.dim));
        m = m * xg.pow(static_cast<std::size_t>(e));
    }
    return m;
}

namespace {

std::vector<std::vector<int>> all_exponents(int r, std::int64_t p) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(r, 0);
    while (true) {
        out.push_back(cur);
        int k = 0;
        while (k < r && cur[k] == p - 1) cur[k++] = 0;
        if (k == r) break;
        ++cur[k];
    }
    return out;
}

} // namespace

GroupRep regular_group_rep(int r, std::int64_t p, const Field& f) {
    auto elements = all_exponents(r, p);
    const std::size_t d = elements.size();
    std::vector<Matrix> gamma;
    for (int g = 0; g < r; ++g) {
        Matrix xg(f, d, d);
        for (std::size_t col = 0; col < d; ++col) {
            std::vector<int> moved = elements[col];
            moved[g] = (moved[g] + 1) % static_cast<int>(p);
            std::size_t row =
                static_cast<std::size_t>(std::find(elements.begin(), elements.end(), moved) -
                                         elements.begin());
            xg.set(row, col, Scalar::one(f));
        }
        gamma.push_back(xg - Matrix::identity(f, d));
    }
    return make_group_rep(r, p, f, std::move(gamma));
}

GroupRep trivial_group_rep(int r, std::int64_t p, const Field& f) {
    std::vector<Matrix> gamma(static_cast<std::size_t>(r), Matrix(f, 1, 1));
    return make_group_rep(r, p, f, std::move(gamma));
}

Representation group_to_loop_rep(const GroupRep& x) {
    Representation out(x.field, loop_quiver(x.generators), {x.dim});
    for (int i = 0; i < x.generators; ++i)
        out.set_arrow_matrix("g" + std::to_string(i + 1), x.gamma[static_cast<std::size_t>(i)]);
    return out;
}

GroupRep loop_rep_to_group(const Representation& x, std::int64_t p) {
    const Quiver& q = x.quiver();
    if (q.vertex_count() != 1) throw validation_error("expected a loop quiver representation");
    std::vector<Matrix> gamma;
    for (std::size_t ai = 0; ai < q.arrows().size(); ++ai) gamma.push_back(x.arrow_matrix(ai));
    return make_group_rep(static_cast<int>(q.arrows().size()), p, x.field(), std::move(gamma));
}

Matrix maschke_complement(const GroupRep& x, const Matrix& u) {
    const Field& f = x.field;
    if (f.is_prime_field() && x.group_prime == f.prime())
        throw validation_error("Maschke needs the characteristic to not divide the group order");
    if (u.rows() != static_cast<std::size_t>(x.dim))
        throw validation_error("subspace basis has the wrong ambient dimension");
    if (u.rank() != u.cols()) throw validation_error("subspace basis columns must be independent");
    for (const auto& g : x.gamma)
        if (!u.solve((g + Matrix::identity(f, u.rows())) * u))
            throw validation_error("subspace is not invariant");

    const std::size_t d = static_cast<std::size_t>(x.dim);
    // a linear projection onto u: complete the basis with unit vectors
    Matrix basis = u;
    for (std::size_t e = 0; e < d && basis.cols() < d; ++e) {
        Matrix col(f, d, 1);
        col.set(e, 0, Scalar::one(f));
        Matrix cand = Matrix::hstack(basis, col);
        if (cand.rank() == cand.cols()) basis = cand;
    }
    Matrix proj_coords(f, d, d);
    for (std::size_t i = 0; i < u.cols(); ++i) proj_coords.set(i, i, Scalar::one(f));
    Matrix pi = basis * proj_coords * *basis.inverse();

    Matrix averaged(f, d, d);
    Scalar count = Scalar::zero(f);
    for (const auto& exps : all_exponents(x.generators, x.group_prime)) {
        std::vector<int> inv(exps.size());
        for (std::size_t i = 0; i < exps.size(); ++i)
            inv[i] = static_cast<int>((x.group_prime - exps[i]) % x.group_prime);
        averaged = averaged + group_element_action(x, exps) * pi * group_element_action(x, inv);
        count = count + Scalar::one(f);
    }
    Matrix pi_prime = averaged.scaled(count.inverse());
    // fixes u pointwise
    if (!(pi_prime * u == u)) throw validation_error("averaged projection failed (internal)");
    return pi_prime.kernel_basis();
}

GroupRep klein_T(const Representation& y) { return elabel_T(y, 2); }

GroupRep elabel_T(const Representation& y, std::int64_t p) {
    const Quiver& q = y.quiver();
    const Field& f = y.field();
    if (q.vertex_count() != 2) throw validation_error("elabel_T input must be a Kronecker-type representation");
    for (const auto& a : q.arrows())
        if (a.from != 1 || a.to != 2)
            throw validation_error("elabel_T input arrows must all run 1 -> 2");
    if (!(f.is_prime_field() && f.prime() == p))
        throw validation_error("elabel_T needs field characteristic " + std::to_string(p));
    const std::size_t d1 = static_cast<std::size_t>(y.dim_at(1));
    const std::size_t d2 = static_cast<std::size_t>(y.dim_at(2));
    std::vector<Matrix> gamma;
    for (std::size_t ai = 0; ai < q.arrows().size(); ++ai) {
        Matrix g(f, d1 + d2, d1 + d2);
        const Matrix& block = y.arrow_matrix(ai);
        for (std::size_t r = 0; r < d2; ++r)
            for (std::size_t c = 0; c < d1; ++c) g.set(d1 + r, c, block.at(r, c));
        gamma.push_back(std::move(g));
    }
    return make_group_rep(static_cast<int>(q.arrows().size()), p, f, std::move(gamma));
}

bool KleinSummand::operator==(const KleinSummand& other) const {
    if (kind != other.kind) return false;
    switch (kind) {
        case Kind::kG: return true;
        case Kind::TP:
        case Kind::TI: return r == other.r;
        default: return p == other.p && point == other.point;
    }
}

std::string KleinSummand::to_string() const {
    switch (kind) {
        case Kind::kG: return "k[G]";
        case Kind::TP: return "TP_" + std::to_string(r);
        case Kind::TI: return "TI_" + std::to_string(r);
        default: return "TR_{" + std::to_string(p) + "," + point.to_string() + "}";
    }
}

namespace {

// splits off one k[G] summand through a vector v with gamma1 gamma2 v != 0
std::pair<GroupRep, long long> strip_regular_summands(const GroupRep& x_in) {
    GroupRep x = x_in;
    const Field& f = x.field;
    long long count = 0;
    while (true) {
        Matrix product = x.gamma[0] * x.gamma[1];
        if (product.is_zero()) break;
        std::size_t col = 0;
        while (product.columns({col}).is_zero()) ++col;
        Matrix v(f, static_cast<std::size_t>(x.dim), 1);
        v.set(col, 0, Scalar::one(f));

        // phi : k[G] -> X, basis 1, g1, g2, g1 g2 acting on v
        GroupRep kg = regular_group_rep(2, 2, f);
        Matrix id = Matrix::identity(f, static_cast<std::size_t>(x.dim));
        Matrix x1 = x.gamma[0] + id, x2 = x.gamma[1] + id;
        // column order must match the exponent enumeration of k[G]
        Matrix phi(f, static_cast<std::size_t>(x.dim), 4);
        std::vector<Matrix> cols{v, x1 * v, x2 * v, x1 * (x2 * v)};
        auto elements = all_exponents(2, 2); // (0,0),(1,0),(0,1),(1,1)
        for (std::size_t c = 0; c < 4; ++c)
            for (std::size_t r = 0; r < phi.rows(); ++r) phi.set(r, c, cols[c].at(r, 0));

        // a splitting rho with rho phi = id, found inside Hom_G(X, k[G])
        Representation xq = group_to_loop_rep(x);
        Representation kq = group_to_loop_rep(kg);
        std::vector<Morphism> homs = hom_basis(xq, kq);
        if (homs.empty()) throw validation_error("no equivariant splitting space (internal)");
        Matrix system(f, 16, homs.size());
        for (std::size_t k = 0; k < homs.size(); ++k) {
            Matrix prod = homs[k].component(1) * phi;
            for (std::size_t i = 0; i < 4; ++i)
                for (std::size_t j = 0; j < 4; ++j) system.set(i * 4 + j, k, prod.at(i, j));
        }
        Matrix rhs(f, 16, 1);
        for (std::size_t i = 0; i < 4; ++i) rhs.set(i * 4 + i, 0, Scalar::one(f));
        auto coeffs = system.solve(rhs);
        if (!coeffs) throw validation_error("regular summand does not split (internal)");
        Matrix rho(f, 4, static_cast<std::size_t>(x.dim));
        for (std::size_t k = 0; k < homs.size(); ++k)
            if (!coeffs->at(k, 0).is_zero())
                rho = rho + homs[k].component(1).scaled(coeffs->at(k, 0));

        Matrix w = rho.kernel_basis(); // complement of the k[G] copy
        std::vector<Matrix> new_gamma;
        for (const auto& g : x.gamma) {
            auto restricted = w.solve(g * w);
            if (!restricted) throw validation_error("complement is not invariant (internal)");
            new_gamma.push_back(*restricted);
        }
        x = make_group_rep(2, 2, f, std::move(new_gamma));
        ++count;
        if (x.dim == 0) break;
    }
    return {x, count};
}

} // namespace

std::vector<std::pair<KleinSummand, long long>> klein_classify(const GroupRep& x) {
    if (x.generators != 2 || x.group_prime != 2)
        throw validation_error("klein_classify needs a Klein four group representation");
    if (!(x.field.is_prime_field() && x.field.prime() == 2))
        throw validation_error("klein_classify needs characteristic 2");

    std::vector<std::pair<KleinSummand, long long>> out;
    auto [rest, regulars] = strip_regular_summands(x);
    if (regulars > 0)
        out.emplace_back(KleinSummand{KleinSummand::Kind::kG, 0, 1, {Scalar(), Scalar()}}, regulars);
    if (rest.dim == 0) return out;

    // invert T through the separated functor of the two-loop quiver
    Representation loops = group_to_loop_rep(rest);
    Representation separated = separated_S(loops);
    // the separated quiver of the 2-loop quiver is the Kronecker quiver
    Representation kron(separated.field(), kronecker_quiver(2),
                        {separated.dim_at(1), separated.dim_at(2)});
    kron.set_arrow_matrix(std::size_t{0}, separated.arrow_matrix("g1"));
    kron.set_arrow_matrix(std::size_t{1}, separated.arrow_matrix("g2"));

    for (const auto& [indec, mult] : kronecker_classify(kron)) {
        KleinSummand summand;
        switch (indec.kind) {
            case KroneckerKind::P:
                if (indec.r == 0)
                    throw validation_error("separated image contains S(2) (internal)");
                summand = {KleinSummand::Kind::TP, indec.r, 1, {Scalar(), Scalar()}};
                break;
            case KroneckerKind::I:
                summand = {KleinSummand::Kind::TI, indec.r, 1, {Scalar(), Scalar()}};
                break;
            default:
                summand = {KleinSummand::Kind::TR, 0, indec.p, indec.point};
                break;
        }
        out.emplace_back(summand, mult);
    }
    return out;
}

} // namespace quiverrep
