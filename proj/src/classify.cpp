#include "quiverrep/classify.hpp"

#include <algorithm>
#include <map>

#include "quiverrep/kronecker.hpp"

namespace quiverrep {

Quiver replay_start_quiver(const Quiver& q, const ReflectionWord& word) {
    Quiver start = q;
    for (auto it = word.rbegin(); it != word.rend(); ++it) start = start.sigma(it->vertex);
    return start;
}

Representation replay(const Field& f, const Quiver& q, const ClassificationRecord& record) {
    Quiver start = replay_start_quiver(q, record.word);
    return apply_word(simple(f, start, record.start_vertex), record.word);
}

std::vector<ClassificationRecord> dynkin_indecomposables(const Field& f, const Quiver& q) {
    GraphType type = classify_graph(q);
    if (!type.is_dynkin()) throw validation_error("dynkin_indecomposables needs a Dynkin quiver");
    auto order = q.admissible_ordering();
    if (!order) throw validation_error("dynkin_indecomposables needs an acyclic quiver");
    const int n = q.vertex_count();
    const FormData fd = form_data(q);

    std::vector<ClassificationRecord> out;
    for (const DimVector& root : enumerate_roots(q).roots) {
        // walk the root down the repeated admissible ordering until one
        // further reflection would leave the positive cone
        DimVector y = root;
        std::vector<int> applied;
        int start = 0;
        for (int k = 0;; ++k) {
            int v = (*order)[static_cast<std::size_t>(k % n)];
            DimVector next = reflection(fd, v, y);
            if (!is_positive(next)) {
                if (y != unit_vector(n, v))
                    throw validation_error("root walk did not end at a unit vector (internal)");
                start = v;
                break;
            }
            y = next;
            applied.push_back(v);
        }

        ClassificationRecord rec;
        rec.dims = root;
        rec.start_vertex = start;
        for (auto it = applied.rbegin(); it != applied.rend(); ++it)
            rec.word.push_back({'-', *it});
        rec.tag = IndecTag::preprojective;
        rec.index_vertex = start;
        rec.power = static_cast<int>(applied.size()) / n;
        rec.rep = replay(f, q, rec);
        if (rec.rep.dims() != root)
            throw validation_error("constructed representation has wrong dimension (internal)");
        out.push_back(std::move(rec));
    }
    return out;
}

namespace {

ReflectionWord projective_word(const std::vector<int>& order, int i) {
    // P(o_s) = S^-_{o_1} ... S^-_{o_{s-1}} S(o_s)
    ReflectionWord word;
    std::size_t pos = 0;
    while (order[pos] != i) ++pos;
    for (std::size_t k = pos; k-- > 0;) word.push_back({'-', order[k]});
    std::reverse(word.begin(), word.end()); // apply o_{s-1} first, o_1 last
    return word;
}

ReflectionWord injective_word(const std::vector<int>& order, int i) {
    // I(o_s) = S^+_{o_n} ... S^+_{o_{s+1}} S(o_s)
    ReflectionWord word;
    std::size_t pos = 0;
    while (order[pos] != i) ++pos;
    for (std::size_t k = pos + 1; k < order.size(); ++k) word.push_back({'+', order[k]});
    return word;
}

} // namespace

std::vector<ClassificationRecord> euclidean_series(const Field& f, const Quiver& q, int r_max,
                                                   bool include_preinjective) {
    GraphType type = classify_graph(q);
    if (!type.is_euclidean()) throw validation_error("euclidean_series needs a Euclidean quiver");
    auto order = q.admissible_ordering();
    if (!order) throw validation_error("euclidean_series needs an acyclic quiver");

    ReflectionWord coxeter_minus_word, coxeter_plus_word;
    for (auto it = order->rbegin(); it != order->rend(); ++it)
        coxeter_minus_word.push_back({'-', *it});
    for (int v : *order) coxeter_plus_word.push_back({'+', v});

    std::vector<ClassificationRecord> out;
    for (int i = 1; i <= q.vertex_count(); ++i) {
        Representation p = projective(f, q, i);
        ReflectionWord word = projective_word(*order, i);
        for (int r = 0; r <= r_max; ++r) {
            ClassificationRecord rec;
            rec.dims = p.dims();
            rec.start_vertex = i;
            rec.word = word;
            rec.tag = IndecTag::preprojective;
            rec.index_vertex = i;
            rec.power = r;
            rec.rep = p;
            out.push_back(rec);
            if (r < r_max) {
                p = coxeter_minus(p);
                word.insert(word.end(), coxeter_minus_word.begin(), coxeter_minus_word.end());
            }
        }
    }
    if (include_preinjective)
        for (int i = 1; i <= q.vertex_count(); ++i) {
            Representation rep = injective(f, q, i);
            ReflectionWord word = injective_word(*order, i);
            for (int r = 0; r <= r_max; ++r) {
                ClassificationRecord rec;
                rec.dims = rep.dims();
                rec.start_vertex = i;
                rec.word = word;
                rec.tag = IndecTag::preinjective;
                rec.index_vertex = i;
                rec.power = r;
                rec.rep = rep;
                out.push_back(rec);
                if (r < r_max) {
                    rep = coxeter_plus(rep);
                    word.insert(word.end(), coxeter_plus_word.begin(), coxeter_plus_word.end());
                }
            }
        }
    return out;
}

TrichotomyResult trichotomy(const Representation& x, int step_budget) {
    const Quiver& q = x.quiver();
    if (!is_indecomposable(x)) throw validation_error("trichotomy needs an indecomposable input");
    long long d = defect(q, x.dims());
    if (d == 0) return {IndecTag::regular, 0, 0};

    const Field& f = x.field();
    if (d < 0) {
        Representation y = x;
        for (int r = 0; r <= step_budget; ++r) {
            Representation z = coxeter_plus(y);
            if (z.is_zero()) {
                for (int i = 1; i <= q.vertex_count(); ++i)
                    if (projective(f, q, i).dims() == y.dims())
                        return {IndecTag::preprojective, i, r};
                throw validation_error("projective identification failed (internal)");
            }
            y = z;
        }
        throw incomplete_error("trichotomy step budget exceeded");
    }
    Representation y = x;
    for (int r = 0; r <= step_budget; ++r) {
        Representation z = coxeter_minus(y);
        if (z.is_zero()) {
            for (int i = 1; i <= q.vertex_count(); ++i)
                if (injective(f, q, i).dims() == y.dims())
                    return {IndecTag::preinjective, i, r};
            throw validation_error("injective identification failed (internal)");
        }
        y = z;
    }
    throw incomplete_error("trichotomy step budget exceeded");
}

Representation a_tilde_cycle_family(const Field& f, const Quiver& q, int p) {
    GraphType type = classify_graph(q);
    if (type.family != GraphFamily::A_tilde)
        throw validation_error("the cycle family needs an A~ quiver");
    if (p < 1) throw validation_error("cycle family needs p >= 1");
    DimVector dims(q.vertex_count(), p);
    Representation x(f, q, dims);
    for (std::size_t ai = 0; ai < q.arrows().size(); ++ai) {
        if (ai == 0)
            x.set_arrow_matrix(ai, jordan_block(f, p, Scalar::zero(f)));
        else
            x.set_arrow_matrix(ai, Matrix::identity(f, static_cast<std::size_t>(p)));
    }
    return x;
}

namespace {

struct ZqToken {
    int kind;              // 0 = alpha^*[t], 1 = alpha_*[t]
    std::size_t arrow;
    int level;             // the t of the token
    auto operator<=>(const ZqToken&) const = default;
};

struct ZqNode {
    int vertex;
    int level;
    auto operator<=>(const ZqNode&) const = default;
};

using ZqPath = std::vector<ZqToken>;

ZqNode token_target(const Quiver& q, const ZqToken& tok) {
    const Arrow& a = q.arrow(tok.arrow);
    if (tok.kind == 0) return {a.from, tok.level}; // alpha^*[t]: t(a)[t] -> s(a)[t]
    return {a.to, tok.level - 1};                  // alpha_*[t]: s(a)[t] -> t(a)[t-1]
}

void zq_paths_dfs(const Quiver& q, ZqNode cur, const ZqNode& goal, int min_level, ZqPath& stack,
                  std::vector<ZqPath>& out) {
    if (cur == goal) out.push_back(stack);
    // alpha^*[t]: needs cur.vertex = t(a)
    for (auto ai : q.arrows_into(cur.vertex)) {
        ZqToken tok{0, ai, cur.level};
        stack.push_back(tok);
        zq_paths_dfs(q, token_target(q, tok), goal, min_level, stack, out);
        stack.pop_back();
    }
    // alpha_*[t]: needs cur.vertex = s(a) and room below
    if (cur.level - 1 >= min_level)
        for (auto ai : q.arrows_out_of(cur.vertex)) {
            ZqToken tok{1, ai, cur.level};
            stack.push_back(tok);
            zq_paths_dfs(q, token_target(q, tok), goal, min_level, stack, out);
            stack.pop_back();
        }
}

std::vector<ZqPath> zq_paths(const Quiver& q, ZqNode from, ZqNode to) {
    std::vector<ZqPath> out;
    if (from.level < to.level) return out;
    ZqPath stack;
    zq_paths_dfs(q, from, to, to.level, stack, out);
    return out;
}

} // namespace

long long mesh_hom_dim(const Quiver& q, int i, int r, int j, int s) {
    GraphType type = classify_graph(q);
    if (!type.is_dynkin()) throw validation_error("mesh_hom_dim needs a Dynkin base quiver");
    if (r > 0 || s > 0) throw validation_error("mesh levels must be nonpositive");
    if (!q.is_acyclic()) throw validation_error("mesh_hom_dim needs an acyclic quiver");
    if (r < s) return 0;

    ZqNode from{i, r}, to{j, s};
    std::vector<ZqPath> paths = zq_paths(q, from, to);
    if (paths.empty()) return 0;
    std::map<ZqPath, std::size_t> path_index;
    for (std::size_t k = 0; k < paths.size(); ++k) path_index[paths[k]] = k;

    // mesh relations through every l[t] with s+1 <= t <= r
    std::vector<std::vector<std::size_t>> relations;
    for (int l = 1; l <= q.vertex_count(); ++l)
        for (int t = s + 1; t <= r; ++t) {
            auto sigmas = zq_paths(q, from, {l, t});
            if (sigmas.empty()) continue;
            auto taus = zq_paths(q, {l, t - 1}, to);
            if (taus.empty()) continue;
            for (const auto& sigma : sigmas)
                for (const auto& tau : taus) {
                    std::vector<std::size_t> terms;
                    for (auto ai : q.arrows_into(l)) {
                        ZqPath term = sigma;
                        term.push_back({0, ai, t});
                        term.push_back({1, ai, t});
                        term.insert(term.end(), tau.begin(), tau.end());
                        terms.push_back(path_index.at(term));
                    }
                    for (auto ai : q.arrows_out_of(l)) {
                        ZqPath term = sigma;
                        term.push_back({1, ai, t});
                        term.push_back({0, ai, t - 1});
                        term.insert(term.end(), tau.begin(), tau.end());
                        terms.push_back(path_index.at(term));
                    }
                    if (!terms.empty()) relations.push_back(std::move(terms));
                }
        }

    Matrix rel(Field::rationals(), relations.size(), paths.size());
    for (std::size_t row = 0; row < relations.size(); ++row)
        for (auto col : relations[row]) rel.set(row, col, rel.at(row, col) + Scalar::of_int(Field::rationals(), 1));
    return static_cast<long long>(paths.size()) - static_cast<long long>(rel.rank());
}

std::vector<Morphism> preprojective_chain(const Field& f, const Quiver& q, int length) {
    GraphType type = classify_graph(q);
    if (!type.is_euclidean() || !q.is_acyclic())
        throw validation_error("the chain witness needs an acyclic Euclidean quiver");
    auto order = q.admissible_ordering();
    const int watch = order->back(); // a source; Hom(-, I(watch)) sees this component

    Representation current = projective(f, q, watch);
    Morphism composite = Morphism::identity(current);
    std::vector<Morphism> chain;

    // block targets of the eq3 monomorphism at a vertex, C^{-shift}-ed
    struct Bookkeeping {
        int vertex;
        int shift; // current ~ C^{-shift} P(vertex)
    } book{watch, 0};

    while (static_cast<int>(chain.size()) < length) {
        CanonicalSequences seqs = canonical_sequences(f, q, book.vertex);
        Morphism mono = seqs.eq3.mono;
        std::vector<Morphism> projections = seqs.eq3_block_projections;
        for (int k = 0; k < book.shift; ++k) {
            mono = coxeter_minus_morphism(mono);
            for (auto& p : projections) p = coxeter_minus_morphism(p);
        }
        auto theta = is_isomorphic(current, mono.source());
        if (!theta) throw validation_error("chain source identification failed (internal)");

        bool advanced = false;
        for (std::size_t b = 0; b < projections.size() && !advanced; ++b) {
            Morphism step = projections[b].compose(mono).compose(*theta);
            Morphism candidate = step.compose(composite);
            if (candidate.component(watch).is_zero()) continue;
            if (step.is_isomorphism()) continue;
            // bookkeeping: in-arrow blocks are C^{-shift} P(j); out-arrow
            // blocks are C^{-shift-1} P(j)
            const Arrow& a = q.arrow(q.arrow_index(seqs.eq3_block_labels[b]));
            int next_vertex = a.to == book.vertex ? a.from : a.to;
            int next_shift = a.to == book.vertex ? book.shift : book.shift + 1;
            chain.push_back(step);
            composite = candidate;
            current = step.target();
            book = {next_vertex, next_shift};
            advanced = true;
        }
        if (!advanced) throw validation_error("chain construction stalled (internal)");
    }
    return chain;
}

} // namespace quiverrep
