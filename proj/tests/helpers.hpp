#pragma once

#include <cstdint>

#include "quiverrep/radical.hpp"
#include "quiverrep/representation.hpp"

namespace quiverrep::testing {

// deterministic rng for reproducible "random" inputs
struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    long long pick(long long lo, long long hi) { // inclusive
        return lo + static_cast<long long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
};

inline Matrix random_matrix(Rng& rng, const Field& f, std::size_t rows, std::size_t cols,
                            long long lo = -3, long long hi = 3) {
    Matrix m(f, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.set_int(i, j, rng.pick(lo, hi));
    return m;
}

inline Matrix random_invertible(Rng& rng, const Field& f, std::size_t n) {
    if (f.is_rationals()) {
        // product of elementary row operations: determinant stays +-1
        Matrix m = Matrix::identity(f, n);
        for (std::size_t ops = 0; ops < 4 * n + 2; ++ops) {
            std::size_t i = rng.next() % std::max<std::size_t>(n, 1);
            std::size_t j = rng.next() % std::max<std::size_t>(n, 1);
            if (n == 0 || i == j) continue;
            Scalar c = Scalar::of_int(f, rng.pick(-2, 2));
            for (std::size_t col = 0; col < n; ++col)
                m.set(i, col, m.at(i, col) + c * m.at(j, col));
        }
        return m;
    }
    while (true) {
        Matrix m = random_matrix(rng, f, n, n, 0, f.prime() - 1);
        if (m.is_invertible()) return m;
    }
}

inline Representation random_rep(Rng& rng, const Field& f, const Quiver& q, const DimVector& dims,
                                 long long lo = -3, long long hi = 3) {
    Representation x(f, q, dims);
    for (std::size_t ai = 0; ai < q.arrows().size(); ++ai) {
        const Arrow& a = q.arrow(ai);
        x.set_arrow_matrix(ai, random_matrix(rng, f, static_cast<std::size_t>(dims[a.to - 1]),
                                             static_cast<std::size_t>(dims[a.from - 1]), lo, hi));
    }
    return x;
}

// conjugate a representation by random invertible base changes per vertex
inline Representation conjugate(Rng& rng, const Representation& x) {
    const Quiver& q = x.quiver();
    const Field& f = x.field();
    std::vector<Matrix> base, base_inv;
    for (int v = 1; v <= q.vertex_count(); ++v) {
        Matrix b = random_invertible(rng, f, static_cast<std::size_t>(x.dim_at(v)));
        base.push_back(b);
        base_inv.push_back(*b.inverse());
    }
    Representation out(f, q, x.dims());
    for (std::size_t ai = 0; ai < q.arrows().size(); ++ai) {
        const Arrow& a = q.arrow(ai);
        out.set_arrow_matrix(ai, base[a.to - 1] * x.arrow_matrix(ai) * base_inv[a.from - 1]);
    }
    return out;
}

inline Morphism random_morphism(Rng& rng, const Representation& x, const Representation& y) {
    auto basis = hom_basis(x, y);
    Morphism out = Morphism::zero(x, y);
    for (const auto& b : basis) {
        long long c = rng.pick(-2, 2);
        if (c != 0) out = out + b.scaled(Scalar::of_int(x.field(), c));
    }
    return out;
}

inline GroupRep group_direct_sum(const std::vector<GroupRep>& parts) {
    const Field& f = parts.at(0).field;
    std::vector<Matrix> gamma;
    for (int i = 0; i < parts[0].generators; ++i) {
        std::vector<Matrix> blocks;
        for (const auto& p : parts) blocks.push_back(p.gamma[static_cast<std::size_t>(i)]);
        gamma.push_back(Matrix::block_diag(blocks, f));
    }
    return make_group_rep(parts[0].generators, parts[0].group_prime, f, std::move(gamma));
}

inline GroupRep conjugate_group(Rng& rng, const GroupRep& x) {
    Matrix b = random_invertible(rng, x.field, static_cast<std::size_t>(x.dim));
    Matrix binv = *b.inverse();
    std::vector<Matrix> gamma;
    for (const auto& g : x.gamma) gamma.push_back(b * g * binv);
    return make_group_rep(x.generators, x.group_prime, x.field, std::move(gamma));
}

} // namespace quiverrep::testing
