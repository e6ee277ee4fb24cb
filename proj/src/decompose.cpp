#include "quiverrep/decompose.hpp"

#include <algorithm>
#include <map>

#include "quiverrep/poly.hpp"

namespace quiverrep {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

Poly endo_min_poly(const Morphism& phi) {
    Poly result{Scalar::one(phi.source().field())};
    for (const auto& comp : phi.components())
        result = poly_lcm(result, comp.minimal_polynomial());
    return result;
}

long long endo_total_rank(const Morphism& phi) {
    long long r = 0;
    for (const auto& comp : phi.components()) r += static_cast<long long>(comp.rank());
    return r;
}

Morphism scaled_identity_plus(const Morphism& phi, const Scalar& lambda) {
    // phi - lambda at each vertex
    std::vector<Matrix> comps;
    for (const auto& m : phi.components())
        comps.push_back(m - Matrix::identity(m.field(), m.rows()).scaled(lambda));
    return Morphism(phi.source(), phi.target(), comps);
}

std::optional<FittingSplit> try_split_candidate(const Representation& x, const Morphism& psi) {
    // direct Fitting first: splits whenever psi is neither invertible nor
    // nilpotent, without touching the minimal polynomial
    if (auto split = fitting_split(x, psi)) return split;
    Poly mp = endo_min_poly(psi);
    if (poly_degree(mp) <= 1) return std::nullopt; // scalar endomorphism
    std::vector<std::pair<Scalar, std::size_t>> roots;
    try {
        roots = poly_roots_in_field(mp);
    } catch (const incomplete_error&) {
        return std::nullopt;
    }
    for (const auto& [lambda, mult] : roots) {
        (void)mult;
        if (lambda.is_zero()) continue; // already covered by direct Fitting
        auto split = fitting_split(x, scaled_identity_plus(psi, lambda));
        if (split) return split;
    }
    return std::nullopt;
}

// Deterministic candidate search: basis elements, then pairwise products,
// pairwise sums, then seeded small combinations, each tried as generated.
std::optional<FittingSplit> find_split(const Representation& x, const std::vector<Morphism>& end_basis,
                                       std::uint64_t seed) {
    if (end_basis.size() <= 1) return std::nullopt;
    std::vector<std::size_t> order(end_basis.size());
    for (std::size_t i = 0; i < end_basis.size(); ++i) order[i] = i;
    if (seed != 0) {
        std::uint64_t s = seed;
        for (std::size_t i = order.size(); i > 1; --i)
            std::swap(order[i - 1], order[splitmix64(s) % i]);
    }
    for (auto i : order)
        if (auto split = try_split_candidate(x, end_basis[i])) return split;
    for (auto i : order)
        for (auto j : order)
            if (auto split = try_split_candidate(x, end_basis[i].compose(end_basis[j])))
                return split;
    for (auto i : order)
        for (auto j : order)
            if (i < j)
                if (auto split = try_split_candidate(x, end_basis[i] + end_basis[j])) return split;
    const Field& f = end_basis[0].source().field();
    std::uint64_t s = seed ^ 0x5bf03635ull;
    for (int trial = 0; trial < 40; ++trial) {
        Morphism combo = Morphism::zero(end_basis[0].source(), end_basis[0].target());
        for (const auto& b : end_basis) {
            long long c;
            if (f.is_prime_field())
                c = static_cast<long long>(splitmix64(s) % static_cast<std::uint64_t>(f.prime()));
            else
                c = static_cast<long long>(splitmix64(s) % 41) - 20;
            if (c != 0) combo = combo + b.scaled(Scalar::of_int(f, c));
        }
        if (auto split = try_split_candidate(x, combo)) return split;
    }
    return std::nullopt;
}

// Locality certificate: every basis endomorphism is lambda*id + nilpotent
// and the span of the nilpotent parts is closed under composition and
// nilpotent as a whole.  Success proves End(x) local.
bool certify_local(const Representation& x, const std::vector<Morphism>& end_basis) {
    if (end_basis.size() == 1) return true;
    const Field& f = x.field();
    std::vector<Morphism> nil_parts;
    for (const auto& psi : end_basis) {
        std::optional<Scalar> lambda;
        try {
            lambda = poly_single_root_power(endo_min_poly(psi));
        } catch (const incomplete_error&) {
            return false;
        }
        if (!lambda) return false; // minimal polynomial is not (t - lambda)^d
        Morphism nil = scaled_identity_plus(psi, *lambda);
        if (!nil.is_zero()) nil_parts.push_back(nil);
    }
    if (nil_parts.empty()) return true;
    std::vector<Morphism> rad_basis = reduce_span(nil_parts);

    auto in_span = [&](const Morphism& m) {
        if (rad_basis.empty()) return m.is_zero();
        Matrix span(f, rad_basis[0].vectorized().rows(), rad_basis.size());
        for (std::size_t k = 0; k < rad_basis.size(); ++k) {
            Matrix v = rad_basis[k].vectorized();
            for (std::size_t i = 0; i < v.rows(); ++i) span.set(i, k, v.at(i, 0));
        }
        return span.solve(m.vectorized()).has_value();
    };
    for (const auto& a : rad_basis)
        for (const auto& b : rad_basis)
            if (!in_span(a.compose(b))) return false;

    // nilpotency of the span: iterate products until zero
    std::vector<Morphism> layer = rad_basis;
    for (long long step = 0; step <= x.total_dim() + 1; ++step) {
        if (layer.empty()) return true;
        std::vector<Morphism> next;
        for (const auto& a : layer)
            for (const auto& b : rad_basis) {
                Morphism p = a.compose(b);
                if (!p.is_zero()) next.push_back(p);
            }
        layer = reduce_span(next);
    }
    return false;
}

} // namespace

std::vector<Morphism> reduce_span(const std::vector<Morphism>& span) {
    if (span.empty()) return {};
    const Field& f = span[0].source().field();
    Matrix all(f, span[0].vectorized().rows(), span.size());
    for (std::size_t k = 0; k < span.size(); ++k) {
        Matrix v = span[k].vectorized();
        for (std::size_t i = 0; i < v.rows(); ++i) all.set(i, k, v.at(i, 0));
    }
    std::vector<std::size_t> pivots;
    all.rref(&pivots);
    std::vector<Morphism> out;
    for (auto c : pivots) out.push_back(span[c]);
    return out;
}

EndAlgebra end_algebra(const Representation& x) {
    EndAlgebra out{x, hom_basis(x, x), {}};
    const Field& f = x.field();
    if (out.basis.empty()) return out;
    std::size_t len = out.basis[0].vectorized().rows();
    Matrix span(f, len, out.basis.size());
    for (std::size_t k = 0; k < out.basis.size(); ++k) {
        Matrix v = out.basis[k].vectorized();
        for (std::size_t i = 0; i < len; ++i) span.set(i, k, v.at(i, 0));
    }
    out.table.resize(out.basis.size());
    for (std::size_t i = 0; i < out.basis.size(); ++i) {
        out.table[i].resize(out.basis.size());
        for (std::size_t j = 0; j < out.basis.size(); ++j) {
            auto coeffs = span.solve(out.basis[i].compose(out.basis[j]).vectorized());
            if (!coeffs) throw validation_error("endomorphism algebra is not closed (internal)");
            for (std::size_t k = 0; k < out.basis.size(); ++k)
                out.table[i][j].push_back(coeffs->at(k, 0));
        }
    }
    return out;
}

std::optional<FittingSplit> fitting_split(const Representation& x, const Morphism& phi) {
    if (!(phi.source() == x) || !(phi.target() == x))
        throw validation_error("fitting_split needs an endomorphism of x");
    Morphism power = phi;
    long long prev_rank = endo_total_rank(power);
    for (long long r = 1; r <= x.total_dim() + 1; ++r) {
        Morphism next = power.compose(phi);
        long long next_rank = endo_total_rank(next);
        if (next_rank == prev_rank) break;
        power = next;
        prev_rank = next_rank;
    }
    SubQuotient img = image(power);
    SubQuotient ker = kernel(power);
    if (img.rep.is_zero() || ker.rep.is_zero()) return std::nullopt;

    DirectSum ds = direct_sum(x.field(), x.quiver(), {img.rep, ker.rep});
    std::vector<Matrix> comps;
    for (int v = 1; v <= x.quiver().vertex_count(); ++v)
        comps.push_back(Matrix::hstack(img.map.component(v), ker.map.component(v)));
    Morphism witness(ds.rep, x, std::move(comps));
    if (!witness.is_isomorphism())
        throw validation_error("fitting decomposition witness failed (internal)");
    return FittingSplit{img.rep, ker.rep, witness};
}

bool is_indecomposable(const Representation& x) {
    if (x.is_zero()) throw validation_error("the zero representation is not indecomposable");
    std::vector<Morphism> basis = hom_basis(x, x);
    if (basis.size() == 1) return true;
    if (find_split(x, basis, 0)) return false;
    if (certify_local(x, basis)) return true;
    throw incomplete_error(
        "cannot certify indecomposability: End/rad is not split over the base field");
}

namespace {

struct RecPiece {
    std::vector<Representation> indecs;
    Morphism witness; // direct sum of indecs -> r
};

Morphism block_pair(const DirectSum& src, const DirectSum& tgt, const Morphism& w1,
                    const Morphism& w2) {
    std::vector<Matrix> comps;
    for (int v = 1; v <= src.rep.quiver().vertex_count(); ++v)
        comps.push_back(Matrix::block_diag({w1.component(v), w2.component(v)}, src.rep.field()));
    return Morphism(src.rep, tgt.rep, std::move(comps));
}

RecPiece decompose_rec(const Representation& r, std::uint64_t seed) {
    if (r.is_zero()) {
        DirectSum empty = direct_sum(r.field(), r.quiver(), {});
        return {{}, Morphism(empty.rep, r, Morphism::zero(empty.rep, r).components())};
    }
    std::vector<Morphism> basis = hom_basis(r, r);
    std::optional<FittingSplit> split =
        basis.size() > 1 ? find_split(r, basis, seed) : std::nullopt;
    if (!split) {
        if (basis.size() > 1 && !certify_local(r, basis))
            throw incomplete_error("decomposition stalled on a piece of dimension " +
                                   dim_to_string(r.dims()) + " with dim End = " +
                                   std::to_string(basis.size()) +
                                   ": no splitting found and End/rad not certified split");
        return {{r}, Morphism::identity(r)};
    }
    RecPiece a = decompose_rec(split->image_part, seed);
    RecPiece b = decompose_rec(split->kernel_part, seed);
    std::vector<Representation> indecs = a.indecs;
    indecs.insert(indecs.end(), b.indecs.begin(), b.indecs.end());

    DirectSum whole = direct_sum(r.field(), r.quiver(), indecs);
    DirectSum halves = direct_sum(r.field(), r.quiver(), {split->image_part, split->kernel_part});
    // witness: (+) indecs -> image (+) kernel -> r
    DirectSum a_sum = direct_sum(r.field(), r.quiver(), a.indecs);
    DirectSum b_sum = direct_sum(r.field(), r.quiver(), b.indecs);
    (void)a_sum;
    (void)b_sum;
    Morphism paired = block_pair(whole, halves, a.witness, b.witness);
    return {indecs, split->witness.compose(paired)};
}

} // namespace

Decomposition krs_decompose(const Representation& x, std::uint64_t seed) {
    RecPiece rec = decompose_rec(x, seed);

    // group into isomorphism classes, first occurrence order
    std::vector<std::size_t> class_of(rec.indecs.size());
    std::vector<std::size_t> class_reps; // indices into rec.indecs
    std::vector<std::vector<std::pair<std::size_t, Morphism>>> members; // (piece idx, iso rep->piece)
    for (std::size_t p = 0; p < rec.indecs.size(); ++p) {
        bool placed = false;
        for (std::size_t c = 0; c < class_reps.size() && !placed; ++c) {
            auto iso = is_isomorphic(rec.indecs[class_reps[c]], rec.indecs[p]);
            if (iso) {
                class_of[p] = c;
                members[c].emplace_back(p, *iso);
                placed = true;
            }
        }
        if (!placed) {
            class_of[p] = class_reps.size();
            class_reps.push_back(p);
            members.push_back({{p, Morphism::identity(rec.indecs[p])}});
        }
    }

    std::vector<Decomposition::Part> parts;
    std::vector<Representation> expanded;
    for (std::size_t c = 0; c < class_reps.size(); ++c) {
        parts.push_back({rec.indecs[class_reps[c]], static_cast<long long>(members[c].size())});
        for (std::size_t k = 0; k < members[c].size(); ++k)
            expanded.push_back(rec.indecs[class_reps[c]]);
    }
    DirectSum final_sum = direct_sum(x.field(), x.quiver(), expanded);
    DirectSum rec_sum = direct_sum(x.field(), x.quiver(), rec.indecs);

    Morphism total = Morphism::zero(final_sum.rep, x);
    std::size_t slot = 0;
    for (std::size_t c = 0; c < class_reps.size(); ++c)
        for (const auto& [piece_idx, theta] : members[c]) {
            Morphism column = rec.witness.compose(rec_sum.injections[piece_idx]).compose(theta);
            total = total + column.compose(final_sum.projections[slot]);
            ++slot;
        }
    if (!total.is_isomorphism())
        throw validation_error("decomposition witness failed (internal)");
    return Decomposition{std::move(parts), final_sum.rep, std::move(total)};
}

std::optional<Morphism> is_isomorphic(const Representation& x, const Representation& y) {
    if (!(x.quiver() == y.quiver()) || !(x.field() == y.field()))
        throw validation_error("is_isomorphic needs a common quiver and field");
    if (x.dims() != y.dims()) return std::nullopt;
    if (x.is_zero()) return Morphism::zero(x, y);
    std::vector<Morphism> basis = hom_basis(x, y);
    if (basis.empty()) return std::nullopt;

    auto invertible = [](const Morphism& m) { return m.is_isomorphism(); };
    for (const auto& b : basis)
        if (invertible(b)) return b;
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j) {
            Morphism s = basis[i] + basis[j];
            if (invertible(s)) return s;
        }

    const Field& f = x.field();
    // exhaustive over all coefficient tuples when the field is tiny
    if (f.is_prime_field()) {
        double total = 1;
        for (std::size_t i = 0; i < basis.size() && total <= (1 << 20); ++i)
            total *= static_cast<double>(f.prime());
        if (total <= (1 << 20)) {
            std::vector<std::int64_t> c(basis.size(), 0);
            while (true) {
                std::size_t k = 0;
                while (k < c.size() && c[k] == f.prime() - 1) c[k++] = 0;
                if (k == c.size()) break;
                ++c[k];
                Morphism combo = Morphism::zero(x, y);
                for (std::size_t i = 0; i < basis.size(); ++i)
                    if (c[i]) combo = combo + basis[i].scaled(Scalar::of_int(f, c[i]));
                if (invertible(combo)) return combo;
            }
            return std::nullopt;
        }
    }
    // deterministic pseudorandom combinations with wide coefficients
    std::uint64_t s = 0x9a3c0f11u;
    for (int trial = 0; trial < 120; ++trial) {
        Morphism combo = Morphism::zero(x, y);
        for (const auto& b : basis) {
            long long c;
            if (f.is_prime_field())
                c = static_cast<long long>(splitmix64(s) % static_cast<std::uint64_t>(f.prime()));
            else
                c = static_cast<long long>(splitmix64(s) % 2000003) - 1000001;
            if (c != 0) combo = combo + b.scaled(Scalar::of_int(f, c));
        }
        if (invertible(combo)) return combo;
    }
    return std::nullopt;
}

namespace {

// The scalar-part functional on End of a certified-local summand: each
// basis endomorphism has minimal polynomial (t - lambda)^d; psi -> lambda
// is linear and its kernel is rad End.
std::vector<Morphism> local_end_radical(const Representation& x) {
    std::vector<Morphism> basis = hom_basis(x, x);
    const Field& f = x.field();
    std::vector<Scalar> lambdas;
    for (const auto& psi : basis) {
        auto lambda = poly_single_root_power(endo_min_poly(psi));
        if (!lambda) throw incomplete_error("radical of a non-split local endomorphism algebra");
        lambdas.push_back(*lambda);
    }
    Matrix functional(f, 1, basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) functional.set(0, i, lambdas[i]);
    Matrix ker = functional.kernel_basis();
    std::vector<Morphism> out;
    for (std::size_t k = 0; k < ker.cols(); ++k) {
        Morphism m = Morphism::zero(x, x);
        for (std::size_t i = 0; i < basis.size(); ++i)
            if (!ker.at(i, k).is_zero()) m = m + basis[i].scaled(ker.at(i, k));
        out.push_back(m);
    }
    return out;
}

} // namespace

std::vector<Morphism> rad_hom(const Representation& x, const Representation& y) {
    if (x.is_zero() || y.is_zero()) return {};
    Decomposition dx = krs_decompose(x);
    Decomposition dy = krs_decompose(y);

    // expand parts to individual copies with their embeddings
    std::vector<Representation> xs, ys;
    for (const auto& p : dx.parts)
        for (long long k = 0; k < p.multiplicity; ++k) xs.push_back(p.indec);
    for (const auto& p : dy.parts)
        for (long long k = 0; k < p.multiplicity; ++k) ys.push_back(p.indec);
    DirectSum sx = direct_sum(x.field(), x.quiver(), xs);
    DirectSum sy = direct_sum(y.field(), y.quiver(), ys);
    Morphism wx_inv = dx.witness.inverse();

    std::vector<Morphism> out;
    for (std::size_t a = 0; a < xs.size(); ++a)
        for (std::size_t b = 0; b < ys.size(); ++b) {
            std::vector<Morphism> block;
            auto iso = is_isomorphic(xs[a], ys[b]);
            if (!iso) {
                block = hom_basis(xs[a], ys[b]);
            } else {
                for (const auto& nu : local_end_radical(xs[a])) block.push_back(iso->compose(nu));
            }
            for (const auto& beta : block)
                out.push_back(dy.witness.compose(sy.injections[b])
                                  .compose(beta)
                                  .compose(sx.projections[a])
                                  .compose(wx_inv));
        }
    return reduce_span(out);
}

std::vector<Morphism> radn_hom(const Representation& x, const Representation& y, int n,
                               const std::vector<Representation>& universe) {
    if (n < 0) throw validation_error("radn_hom needs n >= 0");
    if (n == 0) return hom_basis(x, y);
    if (n == 1) return rad_hom(x, y);
    if (universe.empty())
        throw validation_error("radn_hom with n >= 2 needs a universe of indecomposables");

    // table[m][z] = basis of Rad^m(universe[z], y)
    std::vector<std::vector<std::vector<Morphism>>> table(
        static_cast<std::size_t>(n), std::vector<std::vector<Morphism>>(universe.size()));
    for (std::size_t z = 0; z < universe.size(); ++z) table[1 - 1][z] = rad_hom(universe[z], y);
    for (int m = 2; m <= n - 1; ++m)
        for (std::size_t z = 0; z < universe.size(); ++z) {
            std::vector<Morphism> acc;
            for (std::size_t zp = 0; zp < universe.size(); ++zp) {
                auto first = rad_hom(universe[z], universe[zp]);
                for (const auto& beta : table[m - 2][zp])
                    for (const auto& alpha : first) acc.push_back(beta.compose(alpha));
            }
            table[m - 1][z] = reduce_span(acc);
        }
    std::vector<Morphism> acc;
    for (std::size_t z = 0; z < universe.size(); ++z) {
        auto first = rad_hom(x, universe[z]);
        for (const auto& beta : table[n - 2][z])
            for (const auto& alpha : first) acc.push_back(beta.compose(alpha));
    }
    return reduce_span(acc);
}

long long irr_dim(const Representation& x, const Representation& y,
                  const std::vector<Representation>& universe) {
    if (!is_indecomposable(x) || !is_indecomposable(y))
        throw validation_error("irr_dim needs indecomposable arguments");
    long long r1 = static_cast<long long>(rad_hom(x, y).size());
    long long r2 = static_cast<long long>(radn_hom(x, y, 2, universe).size());
    return r1 - r2;
}

bool harada_sai_check(const std::vector<Morphism>& chain) {
    if (chain.empty()) throw validation_error("empty chain");
    for (std::size_t i = 0; i + 1 < chain.size(); ++i)
        if (!(chain[i].target() == chain[i + 1].source()))
            throw validation_error("chain is not composable at position " + std::to_string(i));
    for (const auto& phi : chain)
        if (phi.is_isomorphism()) throw validation_error("chain contains an isomorphism");
    Morphism composite = chain[0];
    for (std::size_t i = 1; i < chain.size(); ++i) composite = chain[i].compose(composite);
    return composite.is_zero();
}

} // namespace quiverrep
