#pragma once

#include "psub/lattice.hpp"
#include "psub/witness.hpp"

namespace psub {

// Decides P-subnormality of H in G: a shortest ascending chain of
// prime-index steps from H to G, or the set of subgroups reachable that way
// as the obstruction. Normal nontrivial H is decided in quotient(G, H) and
// the result pulled back. Throws cap_exceeded beyond the lattice-node cap.
PSubnormalResult p_subnormal(const FiniteGroup& g, const SubgroupHandle& h,
                             const Limits& limits = {});

// Huppert's criterion: all maximal subgroups of prime index.
SupersolvableCertificate is_supersolvable(const Lattice& full);
SupersolvableCertificate is_supersolvable(const FiniteGroup& g,
                                          const Limits& limits = {});

// Supersolvability of a single lattice node, via its maximal subgroups
// (= lower covers in the full lattice).
bool node_supersolvable(const Lattice& full, std::uint32_t node);

bool is_nilpotent(const FiniteGroup& g);
// Nilpotency of a subgroup from element orders alone: for each prime, the
// p-elements must number exactly the p-part of the subgroup order.
bool members_nilpotent(const FiniteGroup& g, const dense_bitset& members);

StructuralFlags structural_flags(const FiniteGroup& g);

// Peels the largest prime: checks that its Sylow subgroup is normal in the
// current quotient, accumulates preimages, and recurses on the quotient.
TowerResult sylow_tower_supersolvable(const FiniteGroup& g);

// Every Sylow subgroup P-subnormal (class wU).
WSupersolvableReport is_w_supersolvable(const FiniteGroup& g,
                                        const Limits& limits = {});

// Every primary cyclic subgroup P-subnormal (class X), decided on conjugacy
// class representatives.
ClassXReport is_in_class_x(const FiniteGroup& g, const Limits& limits = {});

// Schmidt recognition (non-nilpotent, all maximal subgroups nilpotent) plus
// the six structural validations:
//   1. S = [P]<y>, non-normal cyclic Sylow q-subgroup, y^q central;
//   2. |P/P'| = p^m, m the order of p mod q;
//   3. abelian P: elementary abelian of order p^m, minimal normal;
//   4. non-abelian P: Z(P) = P' = Phi(P), |P/Z(P)| = p^m;
//   5. Z(S) = Phi(S) = Phi(P) x <y^q>, S' = P, P' = Phi(P);
//   6. proper normal N avoids <y> and P <= N or N <= Phi(S).
std::optional<SchmidtReport> is_schmidt(const FiniteGroup& g,
                                        const Lattice& full);

MinimalNonClassResult minimal_non_supersolvable(const FiniteGroup& g,
                                                const Lattice& full,
                                                const Limits& limits = {});

MinimalNonClassResult minimal_non_class_x(const FiniteGroup& g,
                                          const Lattice& full,
                                          const ClassXReport& x,
                                          const Limits& limits = {});

TheoremReport verify_theorem(const FiniteGroup& g, const Lattice& full,
                             const WSupersolvableReport& wu,
                             const ClassXReport& x, const TowerResult& tower,
                             const Limits& limits = {});

// Full classification. Throws cap_exceeded when a cap is hit,
// std::logic_error if the computed flags violate U => wU => X => D =>
// solvable or nilpotent => U.
ClassMembershipReport classify_group(const FiniteGroup& g, const Lattice& full,
                                     const Limits& limits = {});
ClassMembershipReport classify_group(const FiniteGroup& g,
                                     const Limits& limits = {});

}  // namespace psub
