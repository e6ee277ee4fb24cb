#pragma once

#include "quiverrep/reflection.hpp"

namespace quiverrep {

enum class IndecTag { preprojective, preinjective, regular };

/// One classified indecomposable: dimension vector, the reflection word
/// that rebuilds it from a simple, and its position in the preprojective /
/// preinjective series when applicable.
struct ClassificationRecord {
    DimVector dims;
    int start_vertex = 0;      // replay starts from S(start_vertex)
    ReflectionWord word;       // applied to the start simple, left to right
    IndecTag tag = IndecTag::regular;
    int index_vertex = 0;      // the i of C^{-r} P(i) or C^{r} I(i)
    int power = 0;             // the r
    Representation rep;
};

/// The quiver the replay of a record starts over: apply the reversed word
/// surgeries to q.
Quiver replay_start_quiver(const Quiver& q, const ReflectionWord& word);
Representation replay(const Field& f, const Quiver& q, const ClassificationRecord& record);

/// Gabriel driver: exactly one indecomposable per positive root.
std::vector<ClassificationRecord> dynkin_indecomposables(const Field& f, const Quiver& q);

/// C^{-r} P(i) for all vertices and 0 <= r <= r_max, plus (optionally) the
/// C^{r} I(i) series.
std::vector<ClassificationRecord> euclidean_series(const Field& f, const Quiver& q, int r_max,
                                                   bool include_preinjective = true);

struct TrichotomyResult {
    IndecTag tag = IndecTag::regular;
    int index_vertex = 0;
    int power = 0;
};

/// Classifies an indecomposable over a Euclidean quiver by the sign of
/// its defect; for nonzero defect also recovers (i, r).
TrichotomyResult trichotomy(const Representation& x, int step_budget = 64);

/// The indecomposable X(p) on a cycle: k^p everywhere, a nilpotent Jordan
/// block on one designated arrow (the first by label), identities
/// elsewhere.
Representation a_tilde_cycle_family(const Field& f, const Quiver& q, int p);

/// dim of the path space i[r] -> j[s] in ZQ modulo the mesh relations;
/// equals dim Hom(C^r P(i), C^s P(j)) on Dynkin quivers.  Levels r, s are
/// nonpositive, r >= s.
long long mesh_hom_dim(const Quiver& q, int i, int r, int j, int s);

/// The infinite-chain witness: a composable chain of n nonzero
/// non-isomorphisms between preprojectives over a Euclidean quiver whose
/// partial composites all stay nonzero.
std::vector<Morphism> preprojective_chain(const Field& f, const Quiver& q, int length);

} // namespace quiverrep
