// nrtkit - enumeration and classification of normalized right transversals
//
// Subgroup lattice, cores, normalizers and quotients of a GroupTable.

#ifndef NRT_SUBGROUPS_HPP_
#define NRT_SUBGROUPS_HPP_

#include <vector>

#include "nrt/group.hpp"

namespace nrt {

  //! Every subgroup exactly once, sorted by (size, element list). Built by
  //! closing cyclic subgroups under pairwise joins. Throws ResourceError if
  //! |G| exceeds limits.subgroup_bound.
  std::vector<SubgroupHandle> subgroups_all(GroupTable const& group,
                                            Limits const&     limits = {});

  //! Intersection of all conjugates of H: the largest normal subgroup of G
  //! contained in H.
  SubgroupHandle core(SubgroupHandle const& subgroup);

  bool is_normal(SubgroupHandle const& subgroup);

  SubgroupHandle normalizer(SubgroupHandle const& subgroup);

  SubgroupHandle center(GroupTable const& group);

  //! g^-1 H g
  SubgroupHandle conjugate(SubgroupHandle const& subgroup, element_type g);

  //! The intersection of two subgroups of the same group.
  SubgroupHandle intersection(SubgroupHandle const& a, SubgroupHandle const& b);

  SubgroupHandle whole_group(GroupTable const& group);

  SubgroupHandle trivial_subgroup(GroupTable const& group);

  struct Quotient {
    GroupTable group;
    //! projection[x] is the coset of x; coset 0 is N. Cosets are numbered in
    //! order of their smallest element.
    std::vector<element_type> projection;
  };

  //! G/N. Throws PreconditionError unless N is normal.
  Quotient quotient(SubgroupHandle const& normal_subgroup);

}  // namespace nrt

#endif  // NRT_SUBGROUPS_HPP_
