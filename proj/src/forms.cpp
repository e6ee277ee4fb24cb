#include "quiverrep/forms.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "quiverrep/matrix.hpp"

namespace quiverrep {

DimVector unit_vector(int n, int i) {
    DimVector e(n, 0);
    e.at(i - 1) = 1;
    return e;
}

bool is_positive(const DimVector& x) {
    bool nonzero = false;
    for (auto v : x) {
        if (v < 0) return false;
        if (v > 0) nonzero = true;
    }
    return nonzero;
}

bool is_zero_vector(const DimVector& x) {
    return std::all_of(x.begin(), x.end(), [](long long v) { return v == 0; });
}

DimVector add(const DimVector& a, const DimVector& b) {
    if (a.size() != b.size()) throw validation_error("dimension vector length mismatch");
    DimVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

DimVector sub(const DimVector& a, const DimVector& b) { return add(a, negate(b)); }

DimVector negate(const DimVector& x) {
    DimVector out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = -x[i];
    return out;
}

std::string dim_to_string(const DimVector& x) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < x.size(); ++i) os << (i ? "," : "") << x[i];
    os << ")";
    return os.str();
}

FormData form_data(const Quiver& q) {
    FormData f;
    f.n = q.vertex_count();
    f.euler.assign(f.n, std::vector<long long>(f.n, 0));
    f.multiplicities.assign(f.n, std::vector<long long>(f.n, 0));
    for (int i = 0; i < f.n; ++i) f.euler[i][i] = 1;
    for (const auto& a : q.arrows()) {
        f.euler[a.from - 1][a.to - 1] -= 1;
        f.multiplicities[a.from - 1][a.to - 1] += 1;
        if (a.from != a.to) f.multiplicities[a.to - 1][a.from - 1] += 1;
    }
    return f;
}

long long euler_form(const FormData& f, const DimVector& x, const DimVector& y) {
    if (static_cast<int>(x.size()) != f.n || static_cast<int>(y.size()) != f.n)
        throw validation_error("dimension vector length mismatch");
    long long acc = 0;
    for (int i = 0; i < f.n; ++i)
        for (int j = 0; j < f.n; ++j) acc += x[i] * f.euler[i][j] * y[j];
    return acc;
}

long long sym_form(const FormData& f, const DimVector& x, const DimVector& y) {
    return euler_form(f, x, y) + euler_form(f, y, x);
}

long long quadratic(const FormData& f, const DimVector& x) { return euler_form(f, x, x); }

DimVector reflection(const FormData& f, int i, const DimVector& x) {
    if (i < 1 || i > f.n) throw validation_error("vertex out of range");
    if (f.multiplicities[i - 1][i - 1] != 0)
        throw validation_error("reflection undefined at loop vertex " + std::to_string(i));
    DimVector e = unit_vector(f.n, i);
    long long pairing = sym_form(f, x, e); // (e_i, e_i) = 2, so 2(x,e)/() = (x,e)
    DimVector out = x;
    out[i - 1] -= pairing;
    return out;
}

DimVector coxeter_transform(const Quiver& q, const DimVector& x) {
    auto order = q.admissible_ordering();
    if (!order) throw validation_error("coxeter transform needs an acyclic quiver");
    FormData f = form_data(q);
    DimVector y = x;
    for (int v : *order) y = reflection(f, v, y);
    return y;
}

DimVector coxeter_inverse_transform(const Quiver& q, const DimVector& x) {
    auto order = q.admissible_ordering();
    if (!order) throw validation_error("coxeter transform needs an acyclic quiver");
    FormData f = form_data(q);
    DimVector y = x;
    for (auto it = order->rbegin(); it != order->rend(); ++it) y = reflection(f, *it, y);
    return y;
}

namespace {

// ---- shape matching against the diagram tables ----

struct ShapeResult {
    GraphFamily family = GraphFamily::other;
    int n = 0;
};

// Legs of a tree hanging at vertex b: lengths of the paths from b into
// each neighbouring branch (requires every off-branch vertex degree <= 2).
std::vector<int> tree_legs(const std::vector<std::vector<int>>& adj, int b) {
    std::vector<int> legs;
    for (int start : adj[b]) {
        int len = 1, prev = b, cur = start;
        while (adj[cur].size() == 2) {
            int nxt = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
            prev = cur;
            cur = nxt;
            ++len;
        }
        if (adj[cur].size() != 1) return {}; // hits another branch point
        legs.push_back(len);
    }
    std::sort(legs.begin(), legs.end());
    return legs;
}

ShapeResult match_shape(const Quiver& q) {
    const int n = q.vertex_count();
    const FormData f = form_data(q);
    long long loops = 0, multi = 0, edges = 0;
    for (int i = 0; i < n; ++i) {
        loops += f.multiplicities[i][i];
        for (int j = i + 1; j < n; ++j) {
            edges += f.multiplicities[i][j];
            if (f.multiplicities[i][j] >= 2) multi += 1;
        }
    }
    if (loops > 0)
        return (n == 1 && loops == 1) ? ShapeResult{GraphFamily::A_tilde, 0} : ShapeResult{};
    if (multi > 0)
        return (n == 2 && edges == 2) ? ShapeResult{GraphFamily::A_tilde, 1} : ShapeResult{};

    std::vector<std::vector<int>> adj(n + 1);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (f.multiplicities[i][j] == 1) {
                adj[i + 1].push_back(j + 1);
                adj[j + 1].push_back(i + 1);
            }

    if (edges == n) {
        for (int v = 1; v <= n; ++v)
            if (adj[v].size() != 2) return {};
        return {GraphFamily::A_tilde, n - 1};
    }
    if (edges != n - 1) return {};

    // tree
    std::vector<int> branch;
    for (int v = 1; v <= n; ++v) {
        if (adj[v].size() >= 5) return {};
        if (adj[v].size() >= 3) branch.push_back(v);
    }
    if (branch.empty()) return {GraphFamily::A, n};
    if (branch.size() == 1) {
        int b = branch[0];
        auto legs = tree_legs(adj, b);
        if (legs.empty()) return {};
        if (legs.size() == 4)
            return legs == std::vector<int>{1, 1, 1, 1} ? ShapeResult{GraphFamily::D_tilde, 4}
                                                        : ShapeResult{};
        if (legs == std::vector<int>{1, 1, n - 3}) return {GraphFamily::D, n};
        if (legs == std::vector<int>{1, 2, 2}) return {GraphFamily::E, 6};
        if (legs == std::vector<int>{1, 2, 3}) return {GraphFamily::E, 7};
        if (legs == std::vector<int>{1, 2, 4}) return {GraphFamily::E, 8};
        if (legs == std::vector<int>{2, 2, 2}) return {GraphFamily::E_tilde, 6};
        if (legs == std::vector<int>{1, 3, 3}) return {GraphFamily::E_tilde, 7};
        if (legs == std::vector<int>{1, 2, 5}) return {GraphFamily::E_tilde, 8};
        return {};
    }
    if (branch.size() == 2) {
        // D~_m: each branch vertex of degree 3 with two pendant leaves.
        for (int b : branch) {
            if (adj[b].size() != 3) return {};
            int leaves = 0;
            for (int w : adj[b])
                if (adj[w].size() == 1) ++leaves;
            if (leaves < 2) return {};
        }
        return {GraphFamily::D_tilde, n - 1};
    }
    return {};
}

// ---- definiteness route ----

mpz_class integer_det(std::vector<std::vector<mpz_class>> a) {
    const std::size_t n = a.size();
    // fraction-free Bareiss
    mpz_class prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && a[swap_row][k] == 0) ++swap_row;
            if (swap_row == n) return 0;
            std::swap(a[k], a[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                a[i][j] = a[k][k] * a[i][j] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
            }
        prev = a[k][k];
    }
    return n == 0 ? mpz_class(1) : mpz_class(sign * a[n - 1][n - 1]);
}

struct DefinitenessResult {
    bool positive_definite = false;
    std::optional<DimVector> delta; // primitive positive radical generator
};

DefinitenessResult definiteness_route(const FormData& f) {
    const int n = f.n;
    std::vector<std::vector<mpz_class>> gram(n, std::vector<mpz_class>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) gram[i][j] = static_cast<long>(f.euler[i][j] + f.euler[j][i]);

    bool posdef = true;
    for (int k = 1; k <= n && posdef; ++k) {
        std::vector<std::vector<mpz_class>> lead(k, std::vector<mpz_class>(k));
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) lead[i][j] = gram[i][j];
        if (integer_det(lead) <= 0) posdef = false;
    }
    DefinitenessResult out;
    out.positive_definite = posdef;
    if (posdef) return out;

    Matrix g(Field::rationals(), n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g.set_int(i, j, f.euler[i][j] + f.euler[j][i]);
    Matrix ker = g.kernel_basis();
    if (ker.cols() != 1) return out;
    // primitive integer generator
    mpz_class denlcm = 1, numgcd = 0;
    for (int i = 0; i < n; ++i) {
        mpq_class v = ker.at(i, 0).rat();
        denlcm = denlcm / gcd(denlcm, v.get_den()) * v.get_den();
    }
    std::vector<mpz_class> ints(n);
    for (int i = 0; i < n; ++i) {
        mpq_class v = ker.at(i, 0).rat() * mpq_class(denlcm);
        ints[i] = v.get_num();
        numgcd = gcd(numgcd, ints[i]);
    }
    DimVector delta(n, 0);
    bool any_neg = false, any_pos = false;
    for (int i = 0; i < n; ++i) {
        mpz_class v = ints[i] / numgcd;
        delta[i] = v.get_si();
        any_neg |= delta[i] < 0;
        any_pos |= delta[i] > 0;
    }
    if (any_neg && any_pos) return out; // mixed sign: indefinite
    if (any_neg) delta = negate(delta);
    if (!is_positive(delta)) return out;
    out.delta = delta;
    return out;
}

} // namespace

GraphType classify_graph(const Quiver& q) {
    if (!q.is_connected()) throw validation_error("classify_graph needs a connected graph");
    ShapeResult shape = match_shape(q);
    DefinitenessResult def = definiteness_route(form_data(q));

    GraphType out;
    bool shape_dynkin = shape.family == GraphFamily::A || shape.family == GraphFamily::D ||
                        shape.family == GraphFamily::E;
    bool shape_euclidean = shape.family == GraphFamily::A_tilde ||
                           shape.family == GraphFamily::D_tilde ||
                           shape.family == GraphFamily::E_tilde;
    if (shape_dynkin != def.positive_definite)
        throw validation_error("graph classifier disagreement (shape vs minors)");
    if (shape_euclidean != def.delta.has_value())
        throw validation_error("graph classifier disagreement (shape vs radical)");
    out.family = shape.family;
    out.n = shape.n;
    out.delta = def.delta;
    return out;
}

std::string GraphType::to_string() const {
    switch (family) {
        case GraphFamily::A: return "A" + std::to_string(n);
        case GraphFamily::D: return "D" + std::to_string(n);
        case GraphFamily::E: return "E" + std::to_string(n);
        case GraphFamily::A_tilde: return "A~" + std::to_string(n);
        case GraphFamily::D_tilde: return "D~" + std::to_string(n);
        case GraphFamily::E_tilde: return "E~" + std::to_string(n);
        default: return "other";
    }
}

int coxeter_order(const Quiver& q) {
    GraphType type = classify_graph(q);
    if (!type.is_dynkin() && !type.is_euclidean())
        throw validation_error("coxeter_order needs a Dynkin or Euclidean quiver");
    const int n = q.vertex_count();
    std::vector<DimVector> cur;
    for (int i = 1; i <= n; ++i) cur.push_back(unit_vector(n, i));

    auto congruent = [&](const DimVector& a, const DimVector& b) {
        DimVector d = sub(a, b);
        if (!type.delta) return is_zero_vector(d);
        // multiple of delta?
        const DimVector& delta = *type.delta;
        long long k = 0;
        for (int i = 0; i < n; ++i)
            if (delta[i] != 0) {
                if (d[i] % delta[i] != 0) return false;
                k = d[i] / delta[i];
                break;
            }
        for (int i = 0; i < n; ++i)
            if (d[i] != k * delta[i]) return false;
        return true;
    };

    const int cap = 10000;
    for (int h = 1; h <= cap; ++h) {
        for (auto& v : cur) v = coxeter_transform(q, v);
        bool all = true;
        for (int i = 1; i <= n && all; ++i) all = congruent(cur[i - 1], unit_vector(n, i));
        if (all) return h;
    }
    throw incomplete_error("coxeter order exceeds iteration cap");
}

long long defect(const Quiver& q, const DimVector& x) {
    GraphType type = classify_graph(q);
    if (!type.is_euclidean()) throw validation_error("defect needs a Euclidean quiver");
    return euler_form(form_data(q), *type.delta, x);
}

namespace {

// Real-relaxation minimum of q over completions of a prefix, encoded as
// the Schur complement of the trailing block of the Gram matrix.
std::vector<Matrix> schur_tables(const Matrix& gram) {
    const std::size_t n = gram.rows();
    std::vector<Matrix> tables(n + 1);
    for (std::size_t l = 1; l <= n; ++l) {
        Matrix g11 = gram.submatrix(0, 0, l, l);
        if (l == n) {
            tables[l] = g11;
            continue;
        }
        Matrix g12 = gram.submatrix(0, l, l, n - l);
        Matrix g22 = gram.submatrix(l, l, n - l, n - l);
        auto inv = g22.inverse();
        if (!inv) throw validation_error("trailing block not invertible");
        tables[l] = g11 - g12 * (*inv) * g12.transpose();
    }
    return tables;
}

void dynkin_root_dfs(const Matrix& gram, const std::vector<Matrix>& schur, DimVector& x,
                     std::size_t level, long long bound, std::vector<DimVector>& out) {
    const std::size_t n = gram.rows();
    if (level == n) {
        // q(x) = x^T G x / 2
        mpq_class val = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (x[i] && x[j]) val += gram.at(i, j).rat() * static_cast<long>(x[i]) * static_cast<long>(x[j]);
        if (val == 2 && !is_zero_vector(x)) out.push_back(x);
        return;
    }
    for (long long v = 0; v <= bound; ++v) {
        x[level] = v;
        // prune via the real minimum over completions
        mpq_class minval = 0;
        const Matrix& s = schur[level + 1];
        for (std::size_t i = 0; i <= level; ++i)
            for (std::size_t j = 0; j <= level; ++j)
                if (x[i] && x[j]) minval += s.at(i, j).rat() * static_cast<long>(x[i]) * static_cast<long>(x[j]);
        if (minval > 2) continue; // no completion of this prefix reaches q <= 1
        dynkin_root_dfs(gram, schur, x, level + 1, bound, out);
    }
    x[level] = 0;
}

} // namespace

RootSet enumerate_roots(const Quiver& q) {
    RootSet out;
    out.type = classify_graph(q);
    const FormData f = form_data(q);
    const int n = f.n;

    if (out.type.is_dynkin()) {
        Matrix gram(Field::rationals(), n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) gram.set_int(i, j, f.euler[i][j] + f.euler[j][i]);
        auto schur = schur_tables(gram);
        DimVector x(n, 0);
        dynkin_root_dfs(gram, schur, x, 0, 6, out.roots);
        std::sort(out.roots.begin(), out.roots.end());
        return out;
    }
    if (out.type.is_euclidean()) {
        const DimVector& delta = *out.type.delta;
        DimVector x(n, 0);
        for (int i = 0; i < n; ++i) x[i] = -delta[i];
        while (true) {
            if (!is_zero_vector(x) && quadratic(f, x) <= 1) out.roots.push_back(x);
            int k = 0;
            while (k < n && x[k] == delta[k]) {
                x[k] = -delta[k];
                ++k;
            }
            if (k == n) break;
            ++x[k];
        }
        std::sort(out.roots.begin(), out.roots.end());
        return out;
    }
    throw validation_error("enumerate_roots needs a Dynkin or Euclidean graph");
}

namespace {

Quiver edges_to_quiver(int n, const std::vector<std::pair<int, int>>& edges) {
    std::vector<Arrow> arrows;
    int k = 0;
    for (auto [a, b] : edges) {
        // orient toward the smaller endpoint
        int from = std::max(a, b), to = std::min(a, b);
        arrows.push_back({"a" + std::to_string(++k), from, to});
    }
    return Quiver(n, std::move(arrows));
}

} // namespace

Quiver dynkin_graph(char family, int n) {
    std::vector<std::pair<int, int>> edges;
    switch (family) {
        case 'A':
            if (n < 1) throw validation_error("A_n needs n >= 1");
            for (int i = 1; i < n; ++i) edges.push_back({i, i + 1});
            break;
        case 'D':
            if (n < 4) throw validation_error("D_n needs n >= 4");
            edges.push_back({1, 3});
            edges.push_back({2, 3});
            for (int i = 3; i < n; ++i) edges.push_back({i, i + 1});
            break;
        case 'E':
            if (n < 6 || n > 8) throw validation_error("E_n needs n in {6,7,8}");
            for (int i = 1; i < n - 1; ++i) edges.push_back({i, i + 1});
            edges.push_back({3, n});
            break;
        default:
            throw validation_error("unknown Dynkin family");
    }
    return edges_to_quiver(n, edges);
}

Quiver euclidean_graph(char family, int m) {
    std::vector<std::pair<int, int>> edges;
    switch (family) {
        case 'A': {
            if (m < 0) throw validation_error("A~_m needs m >= 0");
            int n = m + 1;
            if (m == 0) return loop_quiver(1);
            if (m == 1) return kronecker_quiver(2);
            for (int i = 1; i < n; ++i) edges.push_back({i, i + 1});
            edges.push_back({n, 1});
            return edges_to_quiver(n, edges);
        }
        case 'D': {
            if (m < 4) throw validation_error("D~_m needs m >= 4");
            int n = m + 1;
            edges.push_back({1, 3});
            edges.push_back({2, 3});
            for (int i = 3; i < m - 1; ++i) edges.push_back({i, i + 1});
            edges.push_back({m - 1, m});
            edges.push_back({m - 1, m + 1});
            return edges_to_quiver(n, edges);
        }
        case 'E': {
            if (m == 6) {
                for (int i = 1; i < 5; ++i) edges.push_back({i, i + 1});
                edges.push_back({3, 6});
                edges.push_back({6, 7});
                return edges_to_quiver(7, edges);
            }
            if (m == 7) {
                for (int i = 1; i < 7; ++i) edges.push_back({i, i + 1});
                edges.push_back({4, 8});
                return edges_to_quiver(8, edges);
            }
            if (m == 8) {
                for (int i = 1; i < 8; ++i) edges.push_back({i, i + 1});
                edges.push_back({3, 9});
                return edges_to_quiver(9, edges);
            }
            throw validation_error("E~_m needs m in {6,7,8}");
        }
        default:
            throw validation_error("unknown Euclidean family");
    }
}

} // namespace quiverrep
