#pragma once

#include <optional>

#include "quiverrep/decompose.hpp"
#include "quiverrep/representation.hpp"

namespace quiverrep {

/// One reflection functor application: '+' at a sink, '-' at a source of
/// the quiver current at that step.
struct ReflectionStep {
    char sign = '+';
    int vertex = 0;
    bool operator==(const ReflectionStep&) const = default;
};
using ReflectionWord = std::vector<ReflectionStep>;

/// S_i^+ at a sink i: the new space at i is the kernel of the assembled
/// map from the sum over incoming arrows (label order); result lives over
/// sigma_i Q.
Representation reflect_plus(const Representation& x, int i);

/// S_i^- at a source i: the new space at i is the cokernel of the
/// assembled map into the sum over outgoing arrows (label order).
Representation reflect_minus(const Representation& x, int i);

Morphism reflect_morphism_plus(const Morphism& phi, int i);
Morphism reflect_morphism_minus(const Morphism& phi, int i);

/// The natural monomorphism S_i^- S_i^+ x -> x (i a sink).
Morphism iota(const Representation& x, int i);
/// The natural epimorphism x -> S_i^+ S_i^- x (i a source).
Morphism pi_epi(const Representation& x, int i);

/// Coxeter functors along the admissible ordering.
Representation coxeter_plus(const Representation& x);
Representation coxeter_minus(const Representation& x);
Representation coxeter_power(const Representation& x, int r);
Morphism coxeter_plus_morphism(const Morphism& phi);
Morphism coxeter_minus_morphism(const Morphism& phi);

Representation apply_word(const Representation& x, const ReflectionWord& word);

struct ExactSequence {
    Morphism mono; // A -> B
    Morphism epi;  // B -> C
};

/// The canonical short exact sequences at a vertex.
///
/// eq1:  0 -> (+)_{a: i->j} P(j) -> P(i) -> S(i) -> 0, all canonical path
/// bases.  eq2 (present iff i is a sink): 0 -> P(i) -> (+)_{a: j->i} P(j)
/// -> K -> 0 with K the concrete cokernel; K is isomorphic to C^- P(i).
/// eq3: A -> M -> B obtained by transporting eq2 of the reflected quiver
/// back with S^- functors; A ~ P(i), B ~ C^- P(i), and M splits into
/// labelled blocks M_a ~ P(j) (arrows a: j->i) and M_b ~ C^- P(j) (arrows
/// b: i->j).  The block summands and their labels are reported so
/// components can be extracted.
///
/// The composite is always zero and the image of the left map always
/// equals the kernel of the right map.  When C^- P(i) (or a block) dies
/// because the projective involved is injective, the transported left map
/// acquires a kernel of simples; eq3_short_exact reports whether the full
/// short exact form survived.
struct CanonicalSequences {
    ExactSequence eq1;
    std::optional<ExactSequence> eq2;
    ExactSequence eq3;
    bool eq3_short_exact = true;
    std::vector<std::string> eq3_block_labels;
    std::vector<Representation> eq3_blocks;
    /// Split projections middle -> block and injections block -> middle,
    /// transported along with the sequence.
    std::vector<Morphism> eq3_block_projections;
    std::vector<Morphism> eq3_block_injections;
};

CanonicalSequences canonical_sequences(const Field& f, const Quiver& q, int i);

/// The irreducible morphism P(s(a)) -> C^- P(t(a)) carried by an arrow,
/// extracted from the canonical sequences (eq2 when t(a) is a sink, eq3 at
/// s(a) otherwise) and translated to the concrete coxeter_minus output.
Morphism alpha_lower_star(const Field& f, const Quiver& q, const std::string& label);

} // namespace quiverrep
