#include "quiverrep/kronecker.hpp"

#include <algorithm>

#include "quiverrep/poly.hpp"

namespace quiverrep {

Matrix jordan_block(const Field& f, int p, const Scalar& lambda) {
    if (p < 1) throw validation_error("Jordan block needs size >= 1");
    Matrix j(f, static_cast<std::size_t>(p), static_cast<std::size_t>(p));
    for (int i = 0; i < p; ++i) {
        j.set(i, i, lambda);
        if (i + 1 < p) j.set(i, i + 1, Scalar::one(f));
    }
    return j;
}

Representation jordan_rep(const Field& f, int p, const Scalar& lambda) {
    Representation x(f, loop_quiver(1), {p});
    x.set_arrow_matrix(std::size_t{0}, jordan_block(f, p, lambda));
    return x;
}

Morphism jordan_standard_morphism(const Field& f, int p, int q, const Scalar& lambda) {
    Matrix m(f, static_cast<std::size_t>(q), static_cast<std::size_t>(p));
    for (int i = 1; i <= p; ++i) {
        int target = p <= q ? i : i - (p - q);
        if (target >= 1) m.set(static_cast<std::size_t>(target - 1), static_cast<std::size_t>(i - 1),
                               Scalar::one(f));
    }
    return Morphism(jordan_rep(f, p, lambda), jordan_rep(f, q, lambda), {m});
}

std::vector<Morphism> jordan_hom_basis(const Field& f, int p, const Scalar& lambda, int q,
                                       const Scalar& mu) {
    std::vector<Morphism> out;
    if (!(lambda == mu)) return out;
    for (int i = 1; i <= std::min(p, q); ++i)
        out.push_back(jordan_standard_morphism(f, i, q, lambda)
                          .compose(jordan_standard_morphism(f, p, i, lambda)));
    return out;
}

std::vector<SubQuotient> jordan_subreps(const Field& f, int p, const Scalar& lambda) {
    std::vector<SubQuotient> chain;
    Representation whole = jordan_rep(f, p, lambda);
    for (int q = 0; q <= p; ++q) {
        if (q == 0) {
            Representation zero(f, loop_quiver(1), {0});
            chain.push_back({zero, Morphism(zero, whole, {Matrix(f, static_cast<std::size_t>(p), 0)})});
            continue;
        }
        Morphism incl = jordan_standard_morphism(f, q, p, lambda);
        chain.push_back({incl.source(), incl});
    }
    return chain;
}

ProjectivePoint ProjectivePoint::make(const Scalar& a, const Scalar& b) {
    if (a.is_zero() && b.is_zero()) throw validation_error("(0:0) is not a projective point");
    if (!b.is_zero()) return {a / b, Scalar::one(b.field())};
    return {Scalar::one(a.field()), Scalar::zero(a.field())};
}

bool ProjectivePoint::operator<(const ProjectivePoint& other) const {
    auto key = [](const Scalar& s) {
        return s.field().is_rationals() ? s.rat() : mpq_class(static_cast<long>(s.residue()));
    };
    if (!(l1 == other.l1)) return key(l1) < key(other.l1);
    return key(l0) < key(other.l0);
}

bool KroneckerIndec::operator==(const KroneckerIndec& other) const {
    if (kind != other.kind) return false;
    if (kind == KroneckerKind::R) return p == other.p && point == other.point;
    return r == other.r;
}

bool KroneckerIndec::operator<(const KroneckerIndec& other) const {
    if (kind != other.kind) return kind < other.kind;
    if (kind == KroneckerKind::R) {
        if (p != other.p) return p < other.p;
        return point < other.point;
    }
    return r < other.r;
}

std::string KroneckerIndec::to_string() const {
    switch (kind) {
        case KroneckerKind::P: return "P_" + std::to_string(r);
        case KroneckerKind::I: return "I_" + std::to_string(r);
        default: return "R_{" + std::to_string(p) + "," + point.to_string() + "}";
    }
}

bool is_kronecker_quiver(const Quiver& q) {
    if (q.vertex_count() != 2 || q.arrows().size() != 2) return false;
    for (const auto& a : q.arrows())
        if (a.from != 1 || a.to != 2) return false;
    return true;
}

Representation kronecker_indec(const Field& f, const KroneckerIndec& which) {
    Quiver q = kronecker_quiver(2);
    switch (which.kind) {
        case KroneckerKind::P: {
            int r = which.r;
            if (r < 0) throw validation_error("P_r needs r >= 0");
            Representation x(f, q, {r, r + 1});
            Matrix top(f, static_cast<std::size_t>(r + 1), static_cast<std::size_t>(r));
            Matrix bot = top;
            for (int i = 0; i < r; ++i) {
                top.set(static_cast<std::size_t>(i), static_cast<std::size_t>(i), Scalar::one(f));
                bot.set(static_cast<std::size_t>(i + 1), static_cast<std::size_t>(i), Scalar::one(f));
            }
            x.set_arrow_matrix(std::size_t{0}, top);
            x.set_arrow_matrix(std::size_t{1}, bot);
            return x;
        }
        case KroneckerKind::I: {
            int r = which.r;
            if (r < 0) throw validation_error("I_r needs r >= 0");
            Representation x(f, q, {r + 1, r});
            Matrix left(f, static_cast<std::size_t>(r), static_cast<std::size_t>(r + 1));
            Matrix right = left;
            for (int i = 0; i < r; ++i) {
                left.set(static_cast<std::size_t>(i), static_cast<std::size_t>(i), Scalar::one(f));
                right.set(static_cast<std::size_t>(i), static_cast<std::size_t>(i + 1), Scalar::one(f));
            }
            x.set_arrow_matrix(std::size_t{0}, left);
            x.set_arrow_matrix(std::size_t{1}, right);
            return x;
        }
        default: {
            int p = which.p;
            if (p < 1) throw validation_error("R_{p,l} needs p >= 1");
            Representation x(f, q, {p, p});
            if (which.point.l1.is_zero()) {
                x.set_arrow_matrix(std::size_t{0}, Matrix::identity(f, static_cast<std::size_t>(p)));
                x.set_arrow_matrix(std::size_t{1}, jordan_block(f, p, Scalar::zero(f)));
            } else {
                x.set_arrow_matrix(std::size_t{0}, jordan_block(f, p, which.point.l0));
                x.set_arrow_matrix(std::size_t{1}, Matrix::identity(f, static_cast<std::size_t>(p)));
            }
            return x;
        }
    }
}

namespace {

// The unique eigenvalue of a matrix similar to a single Jordan block.
Scalar single_eigenvalue(const Matrix& m) {
    auto lambda = poly_single_root_power(m.minimal_polynomial());
    if (!lambda) throw incomplete_error("regular parameter not rational over the field");
    return *lambda;
}

KroneckerIndec identify_indecomposable(const Representation& y) {
    long long a = y.dim_at(1), b = y.dim_at(2);
    if (b == a + 1) return {KroneckerKind::P, static_cast<int>(a), 1, ProjectivePoint{Scalar(), Scalar()}};
    if (a == b + 1) return {KroneckerKind::I, static_cast<int>(b), 1, ProjectivePoint{Scalar(), Scalar()}};
    if (a != b) throw validation_error("unexpected Kronecker dimension vector (internal)");
    const Matrix& phi = y.arrow_matrix(std::size_t{0});
    const Matrix& psi = y.arrow_matrix(std::size_t{1});
    const Field& f = y.field();
    if (psi.is_invertible()) {
        Scalar l0 = single_eigenvalue(phi * *psi.inverse());
        return {KroneckerKind::R, 0, static_cast<int>(a),
                ProjectivePoint::make(l0, Scalar::one(f))};
    }
    if (!phi.is_invertible())
        throw validation_error("regular summand with both maps singular (internal)");
    Scalar l1 = single_eigenvalue(psi * *phi.inverse());
    return {KroneckerKind::R, 0, static_cast<int>(a), ProjectivePoint::make(Scalar::one(f), l1)};
}

} // namespace

std::vector<std::pair<KroneckerIndec, long long>> kronecker_classify(const Representation& x) {
    if (!is_kronecker_quiver(x.quiver()))
        throw validation_error("kronecker_classify needs the 2-arrow Kronecker quiver");
    Decomposition d = krs_decompose(x);
    std::vector<std::pair<KroneckerIndec, long long>> out;
    for (const auto& part : d.parts) {
        KroneckerIndec id = identify_indecomposable(part.indec);
        bool merged = false;
        for (auto& [k, m] : out)
            if (k == id) {
                m += part.multiplicity;
                merged = true;
            }
        if (!merged) out.emplace_back(id, part.multiplicity);
    }
    std::sort(out.begin(), out.end(),
              [](const auto& l, const auto& r) { return l.first < r.first; });
    return out;
}

std::pair<ProjectivePoint, Morphism> reg_sub_find(const Representation& x) {
    if (!is_kronecker_quiver(x.quiver()))
        throw validation_error("reg_sub_find needs the Kronecker quiver");
    if (x.dim_at(1) != x.dim_at(2) || x.is_zero())
        throw validation_error("reg_sub_find needs an indecomposable regular representation");
    const Field& f = x.field();
    const Matrix& phi = x.arrow_matrix(std::size_t{0});
    const Matrix& psi = x.arrow_matrix(std::size_t{1});

    if (!phi.is_invertible()) {
        // lambda = (0:1): a vector in Ker phi \ Ker psi
        Matrix ker = phi.kernel_basis();
        for (std::size_t c = 0; c < ker.cols(); ++c) {
            Matrix u1 = ker.columns({c});
            Matrix u2 = psi * u1;
            if (u2.is_zero()) continue;
            ProjectivePoint pt = ProjectivePoint::make(Scalar::zero(f), Scalar::one(f));
            Morphism mono(kronecker_indec(f, {KroneckerKind::R, 0, 1, pt}), x, {u1, u2});
            return {pt, mono};
        }
        throw validation_error("common kernel found in an indecomposable regular (internal)");
    }
    // lambda = (1:l1): eigenvector of psi . phi^{-1}
    Matrix m = psi * *phi.inverse();
    Scalar l1 = single_eigenvalue(m);
    Matrix shifted = m - Matrix::identity(f, m.rows()).scaled(l1);
    Matrix eig = shifted.kernel_basis();
    Matrix w = eig.columns({0});
    Matrix u1 = *phi.inverse() * w;
    ProjectivePoint pt = ProjectivePoint::make(Scalar::one(f), l1);
    Representation r1 = kronecker_indec(f, {KroneckerKind::R, 0, 1, pt});
    // match the chart of the canonical R_{1,pt}
    if (pt.l1.is_zero()) {
        // canonical maps (id, J(1,0)) = (1, 0)
        Morphism mono(r1, x, {u1, w});
        return {pt, mono};
    }
    // normalised to (l0:1) with l0 = 1/l1: canonical maps (J(1,l0), id) = (l0, 1)
    Scalar l0 = pt.l0;
    (void)l0;
    Matrix u2 = psi * u1; // = l1 * w when l1 != 0; phi u1 = w
    // canonical R_{1,(l0:1)}: first map multiplies by l0, second is id.
    // Our embedding has phi u1 = w, psi u1 = l1 w; rescale the target
    // coordinate so the second map is the identity: u2' = l1 w.
    Morphism mono(r1, x, {u1.scaled(l1.inverse()), w});
    return {pt, mono};
}

} // namespace quiverrep
