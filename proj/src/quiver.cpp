#include "quiverrep/quiver.hpp"

#include <algorithm>
#include <set>

namespace quiverrep {

Quiver::Quiver(int vertex_count, std::vector<Arrow> arrows)
    : n_(vertex_count), arrows_(std::move(arrows)) {
    if (n_ < 0) throw validation_error("negative vertex count");
    std::sort(arrows_.begin(), arrows_.end(),
              [](const Arrow& a, const Arrow& b) { return a.label < b.label; });
    std::set<std::string> seen;
    for (const auto& a : arrows_) {
        if (a.from < 1 || a.from > n_ || a.to < 1 || a.to > n_)
            throw validation_error("arrow '" + a.label + "' has endpoint outside [1, n]");
        if (!seen.insert(a.label).second)
            throw validation_error("duplicate arrow label '" + a.label + "'");
    }
}

std::size_t Quiver::arrow_index(const std::string& label) const {
    for (std::size_t i = 0; i < arrows_.size(); ++i)
        if (arrows_[i].label == label) return i;
    throw validation_error("no arrow labelled '" + label + "'");
}

std::vector<std::size_t> Quiver::arrows_into(int v) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < arrows_.size(); ++i)
        if (arrows_[i].to == v) out.push_back(i);
    return out;
}

std::vector<std::size_t> Quiver::arrows_out_of(int v) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < arrows_.size(); ++i)
        if (arrows_[i].from == v) out.push_back(i);
    return out;
}

bool Quiver::is_acyclic() const {
    // Kahn peeling on out-degrees.
    std::vector<int> outdeg(n_ + 1, 0);
    for (const auto& a : arrows_) ++outdeg[a.from];
    std::vector<bool> removed(n_ + 1, false);
    int removed_count = 0;
    bool progress = true;
    while (progress) {
        progress = false;
        for (int v = 1; v <= n_; ++v) {
            if (removed[v] || outdeg[v] != 0) continue;
            removed[v] = true;
            ++removed_count;
            progress = true;
            for (const auto& a : arrows_)
                if (a.to == v && !removed[a.from]) --outdeg[a.from];
        }
    }
    return removed_count == n_;
}

bool Quiver::is_connected() const {
    if (n_ <= 1) return true;
    std::vector<bool> seen(n_ + 1, false);
    std::vector<int> stack{1};
    seen[1] = true;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (const auto& a : arrows_) {
            int w = a.from == v ? a.to : (a.to == v ? a.from : 0);
            if (w && !seen[w]) {
                seen[w] = true;
                stack.push_back(w);
            }
        }
    }
    return std::all_of(seen.begin() + 1, seen.end(), [](bool b) { return b; });
}

bool Quiver::has_loop_at(int v) const {
    return std::any_of(arrows_.begin(), arrows_.end(),
                       [v](const Arrow& a) { return a.from == v && a.to == v; });
}

std::vector<int> Quiver::sinks() const {
    std::vector<int> out;
    for (int v = 1; v <= n_; ++v)
        if (arrows_out_of(v).empty()) out.push_back(v);
    return out;
}

std::vector<int> Quiver::sources() const {
    std::vector<int> out;
    for (int v = 1; v <= n_; ++v)
        if (arrows_into(v).empty()) out.push_back(v);
    return out;
}

std::vector<Path> Quiver::paths_between(int i, int j) const {
    if (!is_acyclic()) throw validation_error("infinite path set: quiver has an oriented cycle");
    if (i < 1 || i > n_ || j < 1 || j > n_) throw validation_error("vertex out of range");
    std::vector<Path> result;
    // breadth-first by length, extending in label order, keeps the
    // (length, lexicographic) output order
    std::vector<Path> frontier{Path::trivial(i)};
    while (!frontier.empty()) {
        for (const auto& p : frontier)
            if (p.target(*this) == j) result.push_back(p);
        std::vector<Path> next;
        for (const auto& p : frontier)
            for (auto ai : arrows_out_of(p.target(*this))) next.push_back(p.extended(*this, ai));
        frontier = std::move(next);
    }
    return result;
}

Quiver Quiver::sigma(int v) const {
    if (v < 1 || v > n_) throw validation_error("vertex out of range");
    std::vector<Arrow> out = arrows_;
    for (auto& a : out)
        if (a.from == v || a.to == v) std::swap(a.from, a.to);
    return Quiver(n_, std::move(out));
}

std::optional<std::vector<int>> Quiver::admissible_ordering() const {
    // Repeatedly take the smallest sink of the quiver induced on the
    // remaining vertices; this is exactly a sink of the partially
    // reflected quiver.
    std::vector<bool> removed(n_ + 1, false);
    std::vector<int> order;
    for (int step = 0; step < n_; ++step) {
        int pick = 0;
        for (int v = 1; v <= n_ && pick == 0; ++v) {
            if (removed[v]) continue;
            bool sink = true;
            for (const auto& a : arrows_)
                if (a.from == v && !removed[a.to] && a.to != v) {
                    sink = false;
                    break;
                }
            if (has_loop_at(v)) sink = false;
            if (sink) pick = v;
        }
        if (pick == 0) return std::nullopt;
        removed[pick] = true;
        order.push_back(pick);
    }
    return order;
}

Quiver Quiver::opposite() const {
    std::vector<Arrow> out = arrows_;
    for (auto& a : out) std::swap(a.from, a.to);
    return Quiver(n_, std::move(out));
}

Quiver Quiver::separated() const {
    std::vector<Arrow> out;
    out.reserve(arrows_.size());
    for (const auto& a : arrows_) out.push_back({a.label, a.from, a.to + n_});
    return Quiver(2 * n_, std::move(out));
}

int Path::source(const Quiver& q) const {
    return arrows_.empty() ? anchor_ : q.arrow(arrows_.front()).from;
}

int Path::target(const Quiver& q) const {
    return arrows_.empty() ? anchor_ : q.arrow(arrows_.back()).to;
}

std::string Path::to_string(const Quiver& q) const {
    if (arrows_.empty()) return "e_" + std::to_string(anchor_);
    std::string out;
    for (std::size_t i = arrows_.size(); i-- > 0;) {
        out += q.arrow(arrows_[i]).label;
        if (i) out += "*";
    }
    return out;
}

Path Path::extended(const Quiver& q, std::size_t arrow_index) const {
    if (q.arrow(arrow_index).from != target(q))
        throw validation_error("path extension is not composable");
    std::vector<std::size_t> seq = arrows_;
    seq.push_back(arrow_index);
    return Path(anchor_, std::move(seq));
}

Quiver linear_quiver(int n) {
    std::vector<Arrow> arrows;
    for (int i = 1; i < n; ++i) arrows.push_back({"a" + std::to_string(i), i, i + 1});
    return Quiver(n, std::move(arrows));
}

Quiver kronecker_quiver(int r) {
    std::vector<Arrow> arrows;
    for (int i = 1; i <= r; ++i) arrows.push_back({"a" + std::to_string(i), 1, 2});
    return Quiver(2, std::move(arrows));
}

Quiver loop_quiver(int r) {
    std::vector<Arrow> arrows;
    for (int i = 1; i <= r; ++i) arrows.push_back({"g" + std::to_string(i), 1, 1});
    return Quiver(1, std::move(arrows));
}

Quiver subspace_quiver(int n) {
    std::vector<Arrow> arrows;
    for (int i = 1; i <= n; ++i) arrows.push_back({"a" + std::to_string(i), i, n + 1});
    return Quiver(n + 1, std::move(arrows));
}

} // namespace quiverrep
