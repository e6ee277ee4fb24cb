#include "quiverrep/poly.hpp"

#include <algorithm>

namespace quiverrep {

long poly_degree(const Poly& p) {
    for (std::size_t i = p.size(); i-- > 0;)
        if (!p[i].is_zero()) return static_cast<long>(i);
    return -1;
}

Poly poly_trim(Poly p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
    return p;
}

Poly poly_monic(const Poly& p) {
    Poly t = poly_trim(p);
    if (t.empty()) return t;
    Scalar lead = t.back();
    for (auto& c : t) c = c / lead;
    return t;
}

Poly poly_add(const Poly& a, const Poly& b) {
    Poly out = a.size() >= b.size() ? a : b;
    const Poly& small = a.size() >= b.size() ? b : a;
    for (std::size_t i = 0; i < small.size(); ++i) out[i] = out[i] + small[i];
    return poly_trim(out);
}

Poly poly_mul(const Poly& a, const Poly& b) {
    Poly ta = poly_trim(a), tb = poly_trim(b);
    if (ta.empty() || tb.empty()) return {};
    Field f = ta[0].field();
    Poly out(ta.size() + tb.size() - 1, Scalar::zero(f));
    for (std::size_t i = 0; i < ta.size(); ++i)
        for (std::size_t j = 0; j < tb.size(); ++j) out[i + j] = out[i + j] + ta[i] * tb[j];
    return poly_trim(out);
}

std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
    Poly rem = poly_trim(a), div = poly_trim(b);
    if (div.empty()) throw validation_error("polynomial division by zero");
    Field f = div[0].field();
    long db = poly_degree(div);
    Poly quot;
    while (poly_degree(rem) >= db) {
        long dr = poly_degree(rem);
        Scalar c = rem[dr] / div[db];
        std::size_t shift = static_cast<std::size_t>(dr - db);
        if (quot.size() < shift + 1) quot.resize(shift + 1, Scalar::zero(f));
        quot[shift] = quot[shift] + c;
        for (long i = 0; i <= db; ++i)
            rem[shift + i] = rem[shift + i] - c * div[i];
        rem = poly_trim(rem);
        if (rem.empty()) break;
    }
    return {poly_trim(quot), rem};
}

Poly poly_gcd(Poly a, Poly b) {
    a = poly_trim(a);
    b = poly_trim(b);
    while (!b.empty()) {
        Poly r = poly_divmod(a, b).second;
        a = b;
        b = r;
    }
    return poly_monic(a);
}

Poly poly_lcm(const Poly& a, const Poly& b) {
    Poly ta = poly_trim(a), tb = poly_trim(b);
    if (ta.empty() || tb.empty()) return {};
    Poly g = poly_gcd(ta, tb);
    return poly_monic(poly_divmod(poly_mul(ta, tb), g).first);
}

Scalar poly_eval(const Poly& p, const Scalar& x) {
    Scalar acc = Scalar::zero(x.field());
    for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
    return acc;
}

Poly poly_derivative(const Poly& p) {
    Poly out;
    if (p.size() <= 1) return out;
    Field f = p[0].field();
    for (std::size_t i = 1; i < p.size(); ++i)
        out.push_back(p[i] * Scalar::of_int(f, static_cast<long long>(i)));
    return poly_trim(out);
}

std::vector<std::pair<Poly, std::size_t>> poly_squarefree_decomposition(const Poly& p_in) {
    Poly p = poly_monic(p_in);
    std::vector<std::pair<Poly, std::size_t>> out;
    if (poly_degree(p) < 1) return out;
    if (p[0].field().is_prime_field())
        throw validation_error("square-free decomposition implemented for characteristic zero");

    Poly dp = poly_derivative(p);
    Poly g0 = poly_gcd(p, dp);
    Poly w = poly_divmod(p, g0).first;
    Poly d = poly_add(poly_divmod(dp, g0).first,
                      [&] { Poly neg = poly_derivative(w); for (auto& c : neg) c = -c; return neg; }());
    std::size_t i = 1;
    while (poly_degree(w) > 0) {
        Poly a = d.empty() ? poly_monic(w) : poly_gcd(w, d);
        if (poly_degree(a) > 0) out.emplace_back(a, i);
        w = poly_divmod(w, a).first;
        if (d.empty())
            break; // the last block was emitted whole
        Poly dn = poly_divmod(d, a).first;
        Poly neg = poly_derivative(w);
        for (auto& c : neg) c = -c;
        d = poly_add(dn, neg);
        ++i;
    }
    return out;
}

namespace {

std::size_t root_multiplicity(Poly& p, const Scalar& root) {
    // Divides out (t - root) as often as possible; p is reduced in place.
    std::size_t mult = 0;
    Poly lin{-root, Scalar::one(root.field())};
    while (poly_degree(p) >= 1 && poly_eval(p, root).is_zero()) {
        p = poly_divmod(p, lin).first;
        ++mult;
    }
    return mult;
}

// ---- rational roots of a square-free polynomial ----
//
// Roots are found modulo a word-sized prime, Hensel-lifted until the
// modulus dominates the rational-root bound max(|c_0|, |c_d|)^2, and then
// recovered by rational reconstruction.  Every candidate is verified
// exactly, so a bad prime or a non-rational factor can only cost time.

using ModPoly = std::vector<std::int64_t>;

std::int64_t mod_mul(std::int64_t a, std::int64_t b, std::int64_t p) {
    return static_cast<std::int64_t>((__int128)a * b % p);
}

ModPoly mod_trim(ModPoly a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

ModPoly mod_rem(ModPoly a, const ModPoly& b, std::int64_t p) {
    a = mod_trim(std::move(a));
    std::int64_t lead_inv = inv_mod(b.back(), p);
    while (a.size() >= b.size()) {
        std::int64_t c = mod_mul(a.back(), lead_inv, p);
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) {
            a[shift + i] -= mod_mul(c, b[i], p);
            a[shift + i] %= p;
            if (a[shift + i] < 0) a[shift + i] += p;
        }
        a = mod_trim(std::move(a));
        if (a.empty()) break;
    }
    return a;
}

ModPoly mod_mulpoly(const ModPoly& a, const ModPoly& b, std::int64_t p) {
    if (a.empty() || b.empty()) return {};
    ModPoly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) {
            out[i + j] = (out[i + j] + (__int128)a[i] * b[j]) % p;
        }
    return mod_trim(std::move(out));
}

ModPoly mod_gcd(ModPoly a, ModPoly b, std::int64_t p) {
    a = mod_trim(std::move(a));
    b = mod_trim(std::move(b));
    while (!b.empty()) {
        ModPoly r = mod_rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        std::int64_t inv = inv_mod(a.back(), p);
        for (auto& c : a) c = mod_mul(c, inv, p);
    }
    return a;
}

// x^e mod (f, p)
ModPoly mod_powmod(ModPoly base, mpz_class e, const ModPoly& f, std::int64_t p) {
    ModPoly result{1};
    base = mod_rem(std::move(base), f, p);
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) result = mod_rem(mod_mulpoly(result, base, p), f, p);
        base = mod_rem(mod_mulpoly(base, base, p), f, p);
        e >>= 1;
    }
    return result;
}

void mod_roots_rec(const ModPoly& f, std::int64_t p, std::uint64_t& seed,
                   std::vector<std::int64_t>& out) {
    if (f.size() <= 1) return;
    if (f.size() == 2) { // linear: c0 + c1 t
        out.push_back(mod_mul(p - f[0] % p, inv_mod(f[1], p), p));
        return;
    }
    // split via gcd((t + delta)^((p-1)/2) - 1, f)
    for (int attempt = 0; attempt < 64; ++attempt) {
        seed = seed * 6364136223846793005ull + 1442695040888963407ull;
        std::int64_t delta = static_cast<std::int64_t>(seed % static_cast<std::uint64_t>(p));
        ModPoly shifted{delta, 1};
        ModPoly w = mod_powmod(shifted, mpz_class((p - 1) / 2), f, p);
        if (w.empty())
            w = ModPoly{p - 1};
        else {
            w[0] = (w[0] - 1) % p;
            if (w[0] < 0) w[0] += p;
            w = mod_trim(std::move(w));
        }
        ModPoly g = mod_gcd(w, f, p);
        if (g.size() > 1 && g.size() < f.size()) {
            // quotient f / g
            ModPoly q;
            ModPoly a = f;
            std::int64_t lead_inv = inv_mod(g.back(), p);
            q.assign(a.size() - g.size() + 1, 0);
            while (a.size() >= g.size()) {
                std::int64_t c = mod_mul(a.back(), lead_inv, p);
                std::size_t shift = a.size() - g.size();
                q[shift] = c;
                for (std::size_t i = 0; i < g.size(); ++i) {
                    a[shift + i] -= mod_mul(c, g[i], p);
                    a[shift + i] %= p;
                    if (a[shift + i] < 0) a[shift + i] += p;
                }
                a = mod_trim(std::move(a));
                if (a.empty()) break;
            }
            q = mod_trim(std::move(q));
            mod_roots_rec(g, p, seed, out);
            mod_roots_rec(q, p, seed, out);
            return;
        }
    }
    // no split found (should not happen for a product of distinct linears)
}

std::vector<std::int64_t> mod_roots(const ModPoly& f, std::int64_t p, std::uint64_t seed) {
    // keep only the part that splits into distinct linear factors mod p
    ModPoly tp = mod_powmod(ModPoly{0, 1}, mpz_class(p), f, p); // t^p mod f
    // t^p - t
    ModPoly diff = tp;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = (diff[1] - 1) % p;
    if (diff[1] < 0) diff[1] += p;
    ModPoly linear_part = mod_gcd(mod_trim(std::move(diff)), f, p);
    std::vector<std::int64_t> out;
    mod_roots_rec(linear_part, p, seed, out);
    return out;
}

// a/b = n (mod m) with |a|, b <= bound, gcd(a, b) = 1; requires
// 2 bound^2 < m.  Standard half-extended Euclid.
std::optional<mpq_class> rational_reconstruct(const mpz_class& n, const mpz_class& m,
                                              const mpz_class& bound) {
    mpz_class r0 = m, r1 = n % m, t0 = 0, t1 = 1;
    if (r1 < 0) r1 += m;
    while (r1 > bound) {
        mpz_class q = r0 / r1;
        mpz_class r2 = r0 - q * r1;
        mpz_class t2 = t0 - q * t1;
        r0 = r1;
        r1 = r2;
        t0 = t1;
        t1 = t2;
    }
    if (t1 == 0 || abs(t1) > bound) return std::nullopt;
    mpq_class out(r1, t1);
    out.canonicalize();
    return out;
}

// All rational roots of a square-free polynomial over Q.
std::vector<Scalar> squarefree_rational_roots(const Poly& g_in) {
    std::vector<Scalar> out;
    Poly g = poly_monic(g_in);
    long deg = poly_degree(g);
    if (deg < 1) return out;
    Field f = g[0].field();
    if (deg == 1) {
        out.push_back(-(g[0] / g[1]));
        return out;
    }
    // integer clearing
    mpz_class denlcm = 1;
    for (const auto& c : g) denlcm = denlcm / gcd(denlcm, c.rat().get_den()) * c.rat().get_den();
    std::vector<mpz_class> z(g.size());
    for (std::size_t i = 0; i < g.size(); ++i)
        z[i] = mpq_class(g[i].rat() * mpq_class(denlcm)).get_num();
    mpz_class content = 0;
    for (const auto& c : z) content = gcd(content, c);
    if (content > 1)
        for (auto& c : z) c /= content;

    static const std::int64_t primes[] = {
        4611686018427388039ll, 4611686018427388073ll, 4611686018427388081ll,
        4611686018427388091ll, 4611686018427388093ll, 4611686018427388097ll,
        4611686018427388157ll, 4611686018427388181ll};

    for (std::int64_t p : primes) {
        if (mpz_class(z.back() % p) == 0) continue;
        ModPoly fp(z.size());
        for (std::size_t i = 0; i < z.size(); ++i) {
            mpz_class r = z[i] % p;
            if (r < 0) r += p;
            fp[i] = r.get_si();
        }
        fp = mod_trim(std::move(fp));
        // square-freeness mod p: gcd(f, f') must be constant
        ModPoly dfp;
        for (std::size_t i = 1; i < fp.size(); ++i)
            dfp.push_back(mod_mul(fp[i], static_cast<std::int64_t>(i % p), p));
        dfp = mod_trim(std::move(dfp));
        if (dfp.empty() || mod_gcd(fp, dfp, p).size() != 1) continue;

        // root bound: |a| <= |c_0|, |b| <= |c_d|
        mpz_class bound = abs(z[0]) > abs(z.back()) ? abs(z[0]) : abs(z.back());
        if (bound < 1) bound = 1;

        for (std::int64_t root_p : mod_roots(fp, p, 0x853c49e6748fea9bull)) {
            // Hensel lift until the modulus dominates 2 bound^2
            mpz_class modulus = p;
            mpz_class root = root_p;
            auto eval_at = [&](const mpz_class& x, const mpz_class& m) {
                mpz_class acc = 0;
                for (std::size_t i = z.size(); i-- > 0;) acc = (acc * x + z[i]) % m;
                return acc;
            };
            auto eval_deriv = [&](const mpz_class& x, const mpz_class& m) {
                mpz_class acc = 0;
                for (std::size_t i = z.size(); i-- > 1;)
                    acc = (acc * x + mpz_class(z[i] * static_cast<long>(i))) % m;
                return acc;
            };
            mpz_class target = 2 * bound * bound + 1;
            while (modulus < target) {
                mpz_class next = modulus * modulus;
                mpz_class fv = eval_at(root, next);
                mpz_class dv = eval_deriv(root, next);
                mpz_class dinv;
                if (mpz_invert(dinv.get_mpz_t(), dv.get_mpz_t(), next.get_mpz_t()) == 0) break;
                root = (root - fv * dinv) % next;
                if (root < 0) root += next;
                modulus = next;
            }
            if (modulus < target) continue;
            auto cand = rational_reconstruct(root, modulus, bound);
            if (!cand) continue;
            Scalar s = Scalar::of_mpq(*cand);
            if (poly_eval(g, s).is_zero()) out.push_back(s);
        }
        std::sort(out.begin(), out.end(),
                  [](const Scalar& a, const Scalar& b) { return a.rat() < b.rat(); });
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }
    return out; // no usable prime: report none rather than guessing
}

} // namespace

std::vector<std::pair<Scalar, std::size_t>> poly_roots_in_field(const Poly& p_in) {
    Poly p = poly_trim(p_in);
    std::vector<std::pair<Scalar, std::size_t>> roots;
    if (poly_degree(p) < 1) return roots;
    Field f = p[0].field();

    if (f.is_prime_field()) {
        std::int64_t pr = f.prime();
        if (pr > 65536) throw incomplete_error("root search not implemented for GF(p) with p > 65536");
        for (std::int64_t v = 0; v < pr; ++v) {
            Scalar cand = Scalar::of_residue(f, v);
            if (poly_eval(p, cand).is_zero()) {
                std::size_t m = root_multiplicity(p, cand);
                roots.emplace_back(cand, m);
                if (poly_degree(p) < 1) break;
            }
        }
        return roots;
    }

    // Rational roots through the square-free decomposition: each
    // multiplicity block is square-free, and its rational roots come out
    // of the modular finder with an exact final verification.
    for (const auto& [factor, multiplicity] : poly_squarefree_decomposition(p))
        for (const Scalar& root : squarefree_rational_roots(factor))
            roots.emplace_back(root, multiplicity);
    std::sort(roots.begin(), roots.end(), [](const auto& x, const auto& y) {
        return x.first.rat() < y.first.rat();
    });
    return roots;
}

std::optional<Scalar> poly_single_root_power(const Poly& p_in) {
    Poly p = poly_monic(p_in);
    long d = poly_degree(p);
    if (d < 1) return std::nullopt;
    Field f = p[0].field();

    if (f.is_prime_field()) {
        auto roots = poly_roots_in_field(p); // exhaustive over GF(p)
        if (roots.size() == 1 && static_cast<long>(roots[0].second) == d) return roots[0].first;
        return std::nullopt;
    }
    // (t - lambda)^d has t^{d-1} coefficient -d lambda
    Scalar lambda = -(p[static_cast<std::size_t>(d - 1)] / Scalar::of_int(f, d));
    Poly power{Scalar::one(f)};
    Poly lin{-lambda, Scalar::one(f)};
    for (long k = 0; k < d; ++k) power = poly_mul(power, lin);
    if (poly_trim(power) == poly_trim(p)) return lambda;
    return std::nullopt;
}

} // namespace quiverrep
