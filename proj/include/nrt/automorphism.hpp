// nrtkit - enumeration and classification of normalized right transversals
//
// Automorphism groups of small GroupTables. An automorphism is a Permutation
// of element indices.

#ifndef NRT_AUTOMORPHISM_HPP_
#define NRT_AUTOMORPHISM_HPP_

#include <vector>

#include "nrt/group.hpp"
#include "nrt/permutation.hpp"

namespace nrt {

  //! An irredundant generating sequence, chosen greedily by largest element
  //! order (ties to the smallest index).
  std::vector<element_type> minimal_generating_sequence(GroupTable const& group);

  //! All automorphisms of G, sorted by image table (the identity first).
  //! Backtracks over images of a minimal generating sequence, restricting
  //! each image to elements of the same order. Throws ResourceError if |G|
  //! exceeds limits.automorphism_bound.
  std::vector<Permutation> automorphisms(GroupTable const& group,
                                         Limits const&     limits = {});

  //! Reference implementation: backtracking over all bijections fixing the
  //! identity, with partial homomorphism checks. Only for |G| <= 12.
  std::vector<Permutation> automorphisms_brute_force(GroupTable const& group);

  //! {f in Aut(G) : f(H) = H}. Throws PreconditionError if the result is not
  //! closed under composition.
  std::vector<Permutation> aut_stabilizing(SubgroupHandle const& subgroup,
                                           Limits const&         limits = {});

  //! Filters an already computed automorphism list.
  std::vector<Permutation>
  aut_stabilizing(SubgroupHandle const&           subgroup,
                  std::vector<Permutation> const& automorphisms);

  //! x -> g^-1 x g
  Permutation inner_automorphism(GroupTable const& group, element_type g);

  //! True if f maps the element set of H onto itself.
  bool stabilizes(Permutation const& f, SubgroupHandle const& subgroup);

}  // namespace nrt

#endif  // NRT_AUTOMORPHISM_HPP_
