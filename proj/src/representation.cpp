#include "quiverrep/representation.hpp"

#include <algorithm>

namespace quiverrep {

Representation::Representation(Field f, Quiver q, DimVector dims)
    : field_(f), quiver_(std::move(q)), dims_(std::move(dims)) {
    if (static_cast<int>(dims_.size()) != quiver_.vertex_count())
        throw validation_error("dimension vector length does not match the quiver");
    for (auto d : dims_)
        if (d < 0) throw validation_error("negative vertex dimension");
    mats_.reserve(quiver_.arrows().size());
    for (const auto& a : quiver_.arrows())
        mats_.emplace_back(field_, static_cast<std::size_t>(dims_[a.to - 1]),
                           static_cast<std::size_t>(dims_[a.from - 1]));
}

long long Representation::total_dim() const {
    long long t = 0;
    for (auto d : dims_) t += d;
    return t;
}

const Matrix& Representation::arrow_matrix(std::size_t arrow_index) const {
    return mats_.at(arrow_index);
}

const Matrix& Representation::arrow_matrix(const std::string& label) const {
    return mats_.at(quiver_.arrow_index(label));
}

void Representation::set_arrow_matrix(std::size_t arrow_index, Matrix m) {
    const Arrow& a = quiver_.arrow(arrow_index);
    if (m.rows() != static_cast<std::size_t>(dims_[a.to - 1]) ||
        m.cols() != static_cast<std::size_t>(dims_[a.from - 1]))
        throw validation_error("arrow matrix '" + a.label + "' has the wrong shape");
    if (!(m.field() == field_)) throw validation_error("arrow matrix field mismatch");
    mats_.at(arrow_index) = std::move(m);
}

void Representation::set_arrow_matrix(const std::string& label, Matrix m) {
    set_arrow_matrix(quiver_.arrow_index(label), std::move(m));
}

bool Representation::operator==(const Representation& other) const {
    return field_ == other.field_ && quiver_ == other.quiver_ && dims_ == other.dims_ &&
           mats_ == other.mats_;
}

Morphism::Morphism(Representation source, Representation target, std::vector<Matrix> components)
    : source_(std::move(source)), target_(std::move(target)), comps_(std::move(components)) {
    if (!(source_.quiver() == target_.quiver()))
        throw validation_error("morphism endpoints live over different quivers");
    if (!(source_.field() == target_.field()))
        throw validation_error("morphism endpoints live over different fields");
    const int n = source_.quiver().vertex_count();
    if (static_cast<int>(comps_.size()) != n)
        throw validation_error("morphism needs one component per vertex");
    for (int v = 1; v <= n; ++v) {
        const Matrix& c = comps_[v - 1];
        if (c.rows() != static_cast<std::size_t>(target_.dim_at(v)) ||
            c.cols() != static_cast<std::size_t>(source_.dim_at(v)))
            throw validation_error("morphism component at vertex " + std::to_string(v) +
                                   " has the wrong shape");
    }
    const Quiver& q = source_.quiver();
    for (std::size_t ai = 0; ai < q.arrows().size(); ++ai) {
        const Arrow& a = q.arrow(ai);
        Matrix lhs = target_.arrow_matrix(ai) * comps_[a.from - 1];
        Matrix rhs = comps_[a.to - 1] * source_.arrow_matrix(ai);
        if (!(lhs == rhs))
            throw validation_error("intertwining law fails at arrow '" + a.label + "'");
    }
}

Morphism Morphism::zero(const Representation& x, const Representation& y) {
    std::vector<Matrix> comps;
    for (int v = 1; v <= x.quiver().vertex_count(); ++v)
        comps.emplace_back(x.field(), static_cast<std::size_t>(y.dim_at(v)),
                           static_cast<std::size_t>(x.dim_at(v)));
    return Morphism(x, y, std::move(comps));
}

Morphism Morphism::identity(const Representation& x) {
    std::vector<Matrix> comps;
    for (int v = 1; v <= x.quiver().vertex_count(); ++v)
        comps.push_back(Matrix::identity(x.field(), static_cast<std::size_t>(x.dim_at(v))));
    return Morphism(x, x, std::move(comps));
}

Morphism Morphism::operator+(const Morphism& other) const {
    if (!(source_ == other.source_) || !(target_ == other.target_))
        throw validation_error("morphism sum needs equal endpoints");
    std::vector<Matrix> comps;
    for (std::size_t i = 0; i < comps_.size(); ++i) comps.push_back(comps_[i] + other.comps_[i]);
    return Morphism(source_, target_, std::move(comps));
}

Morphism Morphism::operator-() const { return scaled(-Scalar::one(source_.field())); }

Morphism Morphism::scaled(const Scalar& c) const {
    std::vector<Matrix> comps;
    for (const auto& m : comps_) comps.push_back(m.scaled(c));
    return Morphism(source_, target_, std::move(comps));
}

Morphism Morphism::compose(const Morphism& other) const {
    if (!(other.target_ == source_)) throw validation_error("morphisms are not composable");
    std::vector<Matrix> comps;
    for (std::size_t i = 0; i < comps_.size(); ++i) comps.push_back(comps_[i] * other.comps_[i]);
    return Morphism(other.source_, target_, std::move(comps));
}

bool Morphism::is_zero() const {
    return std::all_of(comps_.begin(), comps_.end(), [](const Matrix& m) { return m.is_zero(); });
}

bool Morphism::is_isomorphism() const {
    return std::all_of(comps_.begin(), comps_.end(),
                       [](const Matrix& m) { return m.is_invertible(); });
}

Morphism Morphism::inverse() const {
    std::vector<Matrix> comps;
    for (const auto& m : comps_) {
        auto inv = m.inverse();
        if (!inv) throw validation_error("inverse of a non-isomorphism");
        comps.push_back(*inv);
    }
    return Morphism(target_, source_, std::move(comps));
}

Matrix Morphism::vectorized() const {
    long long total = 0;
    for (const auto& m : comps_) total += static_cast<long long>(m.rows() * m.cols());
    Matrix out(source_.field(), static_cast<std::size_t>(total), 1);
    std::size_t k = 0;
    for (const auto& m : comps_)
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) out.set(k++, 0, m.at(i, j));
    return out;
}

bool Morphism::operator==(const Morphism& other) const {
    return source_ == other.source_ && target_ == other.target_ && comps_ == other.comps_;
}

Representation simple(const Field& f, const Quiver& q, int i) {
    if (i < 1 || i > q.vertex_count()) throw validation_error("vertex out of range");
    DimVector dims(q.vertex_count(), 0);
    dims[i - 1] = 1;
    return Representation(f, q, dims);
}

std::vector<Path> projective_basis(const Quiver& q, int i, int j) { return q.paths_between(i, j); }

Representation projective(const Field& f, const Quiver& q, int i) {
    if (!q.is_acyclic())
        throw validation_error("projective representations need an acyclic quiver");
    const int n = q.vertex_count();
    std::vector<std::vector<Path>> bases(n + 1);
    DimVector dims(n, 0);
    for (int j = 1; j <= n; ++j) {
        bases[j] = projective_basis(q, i, j);
        dims[j - 1] = static_cast<long long>(bases[j].size());
    }
    Representation rep(f, q, dims);
    for (std::size_t ai = 0; ai < q.arrows().size(); ++ai) {
        const Arrow& a = q.arrow(ai);
        Matrix m(f, bases[a.to].size(), bases[a.from].size());
        for (std::size_t c = 0; c < bases[a.from].size(); ++c) {
            Path extended = bases[a.from][c].extended(q, ai);
            auto it = std::find(bases[a.to].begin(), bases[a.to].end(), extended);
            if (it == bases[a.to].end()) throw validation_error("path basis inconsistency");
            m.set(static_cast<std::size_t>(it - bases[a.to].begin()), c, Scalar::one(f));
        }
        rep.set_arrow_matrix(ai, std::move(m));
    }
    return rep;
}

Representation dual(const Representation& x) {
    Quiver op = x.quiver().opposite();
    Representation out(x.field(), op, x.dims());
    for (std::size_t ai = 0; ai < op.arrows().size(); ++ai) {
        const std::string& label = op.arrow(ai).label;
        out.set_arrow_matrix(ai, x.arrow_matrix(label).transpose());
    }
    return out;
}

Representation injective(const Field& f, const Quiver& q, int i) {
    if (!q.is_acyclic())
        throw validation_error("injective representations need an acyclic quiver");
    return dual(projective(f, q.opposite(), i));
}

DirectSum direct_sum(const Field& f, const Quiver& q, const std::vector<Representation>& parts) {
    const int n = q.vertex_count();
    DimVector dims(n, 0);
    for (const auto& p : parts) {
        if (!(p.quiver() == q) || !(p.field() == f))
            throw validation_error("direct sum over mismatched quiver or field");
        for (int v = 0; v < n; ++v) dims[v] += p.dims()[v];
    }
    Representation sum(f, q, dims);
    for (std::size_t ai = 0; ai < q.arrows().size(); ++ai) {
        std::vector<Matrix> blocks;
        for (const auto& p : parts) blocks.push_back(p.arrow_matrix(ai));
        sum.set_arrow_matrix(ai, Matrix::block_diag(blocks, f));
    }

    DirectSum out{sum, {}, {}};
    DimVector offset(n, 0);
    for (const auto& p : parts) {
        std::vector<Matrix> inj, proj;
        for (int v = 1; v <= n; ++v) {
            std::size_t big = static_cast<std::size_t>(dims[v - 1]);
            std::size_t small = static_cast<std::size_t>(p.dim_at(v));
            std::size_t off = static_cast<std::size_t>(offset[v - 1]);
            Matrix in(f, big, small), pr(f, small, big);
            for (std::size_t k = 0; k < small; ++k) {
                in.set(off + k, k, Scalar::one(f));
                pr.set(k, off + k, Scalar::one(f));
            }
            inj.push_back(std::move(in));
            proj.push_back(std::move(pr));
        }
        out.injections.emplace_back(p, sum, std::move(inj));
        out.projections.emplace_back(sum, p, std::move(proj));
        for (int v = 0; v < n; ++v) offset[v] += p.dims()[v];
    }
    return out;
}

std::vector<Morphism> hom_basis(const Representation& x, const Representation& y) {
    if (!(x.quiver() == y.quiver()) || !(x.field() == y.field()))
        throw validation_error("hom_basis needs a common quiver and field");
    const Quiver& q = x.quiver();
    const Field& f = x.field();
    const int n = q.vertex_count();

    // unknowns: entries of each phi_v, ordered by vertex then row-major
    std::vector<std::size_t> offset(n + 1, 0);
    std::size_t unknowns = 0;
    for (int v = 1; v <= n; ++v) {
        offset[v] = unknowns;
        unknowns += static_cast<std::size_t>(y.dim_at(v) * x.dim_at(v));
    }
    std::size_t equations = 0;
    for (const auto& a : q.arrows())
        equations += static_cast<std::size_t>(y.dim_at(a.to) * x.dim_at(a.from));

    Matrix system(f, equations, unknowns);
    std::size_t row = 0;
    for (std::size_t ai = 0; ai < q.arrows().size(); ++ai) {
        const Arrow& a = q.arrow(ai);
        const Matrix& xa = x.arrow_matrix(ai);
        const Matrix& ya = y.arrow_matrix(ai);
        const std::size_t ys = static_cast<std::size_t>(y.dim_at(a.from));
        const std::size_t xs = static_cast<std::size_t>(x.dim_at(a.from));
        const std::size_t yt = static_cast<std::size_t>(y.dim_at(a.to));
        const std::size_t xt = static_cast<std::size_t>(x.dim_at(a.to));
        // equation (u, v):  sum_w (Y_a)_{u,w} (phi_s)_{w,v} - sum_w (phi_t)_{u,w} (X_a)_{w,v} = 0
        for (std::size_t u = 0; u < yt; ++u)
            for (std::size_t v = 0; v < xs; ++v) {
                for (std::size_t w = 0; w < ys; ++w) {
                    Scalar c = ya.at(u, w);
                    if (c.is_zero()) continue;
                    std::size_t col = offset[a.from] + w * xs + v;
                    system.set(row, col, system.at(row, col) + c);
                }
                for (std::size_t w = 0; w < xt; ++w) {
                    Scalar c = xa.at(w, v);
                    if (c.is_zero()) continue;
                    std::size_t col = offset[a.to] + u * xt + w;
                    system.set(row, col, system.at(row, col) - c);
                }
                ++row;
            }
    }

    Matrix ker = system.kernel_basis();
    std::vector<Morphism> basis;
    basis.reserve(ker.cols());
    for (std::size_t k = 0; k < ker.cols(); ++k) {
        std::vector<Matrix> comps;
        for (int v = 1; v <= n; ++v) {
            std::size_t rows = static_cast<std::size_t>(y.dim_at(v));
            std::size_t cols = static_cast<std::size_t>(x.dim_at(v));
            Matrix m(f, rows, cols);
            for (std::size_t i = 0; i < rows; ++i)
                for (std::size_t j = 0; j < cols; ++j)
                    m.set(i, j, ker.at(offset[v] + i * cols + j, k));
            comps.push_back(std::move(m));
        }
        basis.emplace_back(x, y, std::move(comps));
    }
    return basis;
}

long long hom_dim(const Representation& x, const Representation& y) {
    return static_cast<long long>(hom_basis(x, y).size());
}

SubQuotient kernel(const Morphism& phi) {
    const Representation& x = phi.source();
    const Quiver& q = x.quiver();
    const int n = q.vertex_count();
    std::vector<Matrix> incl;
    DimVector dims(n, 0);
    for (int v = 1; v <= n; ++v) {
        incl.push_back(phi.component(v).kernel_basis());
        dims[v - 1] = static_cast<long long>(incl.back().cols());
    }
    Representation ker(x.field(), q, dims);
    for (std::size_t ai = 0; ai < q.arrows().size(); ++ai) {
        const Arrow& a = q.arrow(ai);
        auto induced = incl[a.to - 1].solve(x.arrow_matrix(ai) * incl[a.from - 1]);
        if (!induced) throw validation_error("kernel is not arrow-stable (internal)");
        ker.set_arrow_matrix(ai, std::move(*induced));
    }
    return {ker, Morphism(ker, x, std::move(incl))};
}

SubQuotient image(const Morphism& phi) {
    const Representation& y = phi.target();
    const Quiver& q = y.quiver();
    const int n = q.vertex_count();
    std::vector<Matrix> incl;
    DimVector dims(n, 0);
    for (int v = 1; v <= n; ++v) {
        incl.push_back(phi.component(v).image_basis());
        dims[v - 1] = static_cast<long long>(incl.back().cols());
    }
    Representation img(y.field(), q, dims);
    for (std::size_t ai = 0; ai < q.arrows().size(); ++ai) {
        const Arrow& a = q.arrow(ai);
        auto induced = incl[a.to - 1].solve(y.arrow_matrix(ai) * incl[a.from - 1]);
        if (!induced) throw validation_error("image is not arrow-stable (internal)");
        img.set_arrow_matrix(ai, std::move(*induced));
    }
    return {img, Morphism(img, y, std::move(incl))};
}

SubQuotient cokernel(const Morphism& phi) {
    const Representation& y = phi.target();
    const Quiver& q = y.quiver();
    const int n = q.vertex_count();
    std::vector<Matrix> proj;
    DimVector dims(n, 0);
    for (int v = 1; v <= n; ++v) {
        proj.push_back(phi.component(v).cokernel_projection());
        dims[v - 1] = static_cast<long long>(proj.back().rows());
    }
    Representation coker(y.field(), q, dims);
    for (std::size_t ai = 0; ai < q.arrows().size(); ++ai) {
        const Arrow& a = q.arrow(ai);
        // M with M . proj_s = proj_t . Y_a
        Matrix rhs = (proj[a.to - 1] * y.arrow_matrix(ai)).transpose();
        auto mt = proj[a.from - 1].transpose().solve(rhs);
        if (!mt) throw validation_error("cokernel map does not factor (internal)");
        coker.set_arrow_matrix(ai, mt->transpose());
    }
    return {coker, Morphism(y, coker, std::move(proj))};
}

Morphism alpha_star(const Field& f, const Quiver& q, const std::string& label) {
    const std::size_t ai = q.arrow_index(label);
    const Arrow& a = q.arrow(ai);
    const int n = q.vertex_count();
    std::vector<Matrix> comps;
    for (int l = 1; l <= n; ++l) {
        auto from_basis = projective_basis(q, a.to, l);
        auto to_basis = projective_basis(q, a.from, l);
        Matrix m(f, to_basis.size(), from_basis.size());
        for (std::size_t c = 0; c < from_basis.size(); ++c) {
            std::vector<std::size_t> seq{ai};
            for (auto s : from_basis[c].arrow_indices()) seq.push_back(s);
            Path pre(a.from, seq);
            auto it = std::find(to_basis.begin(), to_basis.end(), pre);
            if (it == to_basis.end()) throw validation_error("path basis inconsistency");
            m.set(static_cast<std::size_t>(it - to_basis.begin()), c, Scalar::one(f));
        }
        comps.push_back(std::move(m));
    }
    return Morphism(projective(f, q, a.to), projective(f, q, a.from), std::move(comps));
}

Morphism projective_presentation(const Representation& z) {
    const Quiver& q = z.quiver();
    const Field& f = z.field();
    if (!q.is_acyclic()) throw validation_error("projective presentation needs an acyclic quiver");
    const int n = q.vertex_count();

    std::vector<Representation> p0_parts, p1_parts;
    std::vector<Representation> proj_cache(n + 1);
    for (int i = 1; i <= n; ++i) proj_cache[i] = projective(f, q, i);

    // P0 = sum_i P(i)^{z_i}, copies indexed by the coordinates of z at i
    std::vector<std::vector<std::size_t>> p0_slot(n + 1);
    for (int i = 1; i <= n; ++i)
        for (long long c = 0; c < z.dim_at(i); ++c) {
            p0_slot[i].push_back(p0_parts.size());
            p0_parts.push_back(proj_cache[i]);
        }
    // P1 = sum_alpha P(t(alpha))^{z_{s(alpha)}}
    std::vector<std::vector<std::size_t>> p1_slot(q.arrows().size());
    for (std::size_t ai = 0; ai < q.arrows().size(); ++ai) {
        const Arrow& a = q.arrow(ai);
        for (long long c = 0; c < z.dim_at(a.from); ++c) {
            p1_slot[ai].push_back(p1_parts.size());
            p1_parts.push_back(proj_cache[a.to]);
        }
    }
    DirectSum p0 = direct_sum(f, q, p0_parts);
    DirectSum p1 = direct_sum(f, q, p1_parts);

    // d(xi tensor e_c over arrow a) = (xi a) tensor e_c - xi tensor Z_a e_c
    Morphism d = Morphism::zero(p1.rep, p0.rep);
    for (std::size_t ai = 0; ai < q.arrows().size(); ++ai) {
        const Arrow& a = q.arrow(ai);
        Morphism pre_compose = alpha_star(f, q, a.label);

        const Matrix& za = z.arrow_matrix(ai);
        for (std::size_t c = 0; c < p1_slot[ai].size(); ++c) {
            std::size_t src = p1_slot[ai][c];
            // first term: into the c-th copy of P(s(alpha))
            Morphism t1 = p0.injections[p0_slot[a.from][c]].compose(pre_compose);
            Morphism contribution = t1.compose(p1.projections[src]);
            d = d + contribution;
            // second term: -(Z_a)_{c', c} . id into copies of P(t(alpha))
            for (long long cp = 0; cp < z.dim_at(a.to); ++cp) {
                Scalar coeff = za.at(static_cast<std::size_t>(cp), c);
                if (coeff.is_zero()) continue;
                Morphism t2 = p0.injections[p0_slot[a.to][static_cast<std::size_t>(cp)]]
                                  .scaled(-coeff)
                                  .compose(p1.projections[src]);
                d = d + t2;
            }
        }
    }
    return d;
}

long long ext_dim(const Representation& z, const Representation& x) {
    Morphism d = projective_presentation(z);
    auto hom_p0 = hom_basis(d.target(), x);
    auto hom_p1 = hom_basis(d.source(), x);
    if (hom_p1.empty()) return 0;
    // matrix of Hom(d, x): Hom(P0, x) -> Hom(P1, x) in the two bases
    std::size_t dim_p1 = hom_p1[0].vectorized().rows();
    Matrix img(x.field(), dim_p1, hom_p0.size());
    for (std::size_t k = 0; k < hom_p0.size(); ++k) {
        Matrix v = hom_p0[k].compose(d).vectorized();
        for (std::size_t i = 0; i < dim_p1; ++i) img.set(i, k, v.at(i, 0));
    }
    return static_cast<long long>(hom_p1.size()) - static_cast<long long>(img.rank());
}

} // namespace quiverrep
