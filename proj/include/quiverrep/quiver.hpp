#pragma once

#include <optional>
#include <string>
#include <vector>

#include "quiverrep/errors.hpp"

namespace quiverrep {

struct Arrow {
    std::string label;
    int from = 0;
    int to = 0;

    bool operator==(const Arrow&) const = default;
};

class Path;

/// Finite directed multigraph with 1-based contiguous vertices.  Arrows
/// carry unique string labels and are stored sorted by label, which fixes
/// the order of every arrow-indexed construction in the library.
class Quiver {
public:
    Quiver() = default;
    Quiver(int vertex_count, std::vector<Arrow> arrows);

    int vertex_count() const { return n_; }
    const std::vector<Arrow>& arrows() const { return arrows_; }
    const Arrow& arrow(std::size_t index) const { return arrows_.at(index); }
    std::size_t arrow_index(const std::string& label) const;

    /// Indices of arrows with target (resp. source) v, in label order.
    std::vector<std::size_t> arrows_into(int v) const;
    std::vector<std::size_t> arrows_out_of(int v) const;

    bool is_acyclic() const;
    bool is_connected() const;
    bool has_loop_at(int v) const;
    std::vector<int> sinks() const;
    std::vector<int> sources() const;

    /// All paths from i to j (including the trivial path when i == j),
    /// ordered by (length, lexicographic label sequence).  Requires an
    /// acyclic quiver.
    std::vector<Path> paths_between(int i, int j) const;

    /// Reverses every arrow incident to v; arrow labels are preserved.
    Quiver sigma(int v) const;

    /// Sinks-first ordering i_1, ..., i_n such that each i_p is a sink of
    /// sigma_{i_{p-1}} ... sigma_{i_1} Q; ties broken by smallest index.
    /// Absent exactly when the quiver has an oriented cycle.
    std::optional<std::vector<int>> admissible_ordering() const;

    Quiver opposite() const;

    /// 2n vertices; arrow i -> j' (= j + n) for every arrow i -> j.
    Quiver separated() const;

    bool operator==(const Quiver&) const = default;

private:
    int n_ = 0;
    std::vector<Arrow> arrows_;
};

/// A composable arrow sequence xi_r ... xi_1 (applied first to last), or a
/// trivial path anchored at a vertex.
class Path {
public:
    static Path trivial(int vertex) { return Path(vertex, {}); }
    Path(int anchor, std::vector<std::size_t> arrow_indices)
        : anchor_(anchor), arrows_(std::move(arrow_indices)) {}

    bool is_trivial() const { return arrows_.empty(); }
    std::size_t length() const { return arrows_.size(); }
    const std::vector<std::size_t>& arrow_indices() const { return arrows_; }

    int source(const Quiver& q) const;
    int target(const Quiver& q) const;

    /// Labels joined with '*', "e_i" for trivial paths.
    std::string to_string(const Quiver& q) const;

    /// Extends by one arrow at the target end.
    Path extended(const Quiver& q, std::size_t arrow_index) const;

    bool operator==(const Path&) const = default;

private:
    int anchor_;
    std::vector<std::size_t> arrows_;
};

// Stock quivers.  Orientations are fixed conventions of this library; the
// graph-level classifiers only look at the underlying graph.

/// A_n as 1 -> 2 -> ... -> n (arrows a1, a2, ...).
Quiver linear_quiver(int n);
/// Two vertices and r parallel arrows 1 -> 2 (labels a1..ar).
Quiver kronecker_quiver(int r = 2);
/// One vertex with r loops (labels g1..gr).
Quiver loop_quiver(int r = 1);
/// n + 1 vertices; arrows i -> n+1 for i = 1..n (the ambient space is the
/// last vertex).
Quiver subspace_quiver(int n);

} // namespace quiverrep
