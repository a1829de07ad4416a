// nrtkit - enumeration and classification of normalized right transversals
//
// The action of Aut_H(G) (automorphisms of G mapping H onto H) on T(G, H),
// Burnside counting for the conjugation action of H, and per-pair
// isomorphism-class reports.

#ifndef NRT_ORBIT_HPP_
#define NRT_ORBIT_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nrt/loop_iso.hpp"
#include "nrt/transversal.hpp"

namespace nrt {

  //! {f(s) : s in S} as an NRT. Throws PreconditionError unless f is an
  //! automorphism of G mapping H onto H.
  Transversal act(Permutation const& f, Transversal const& s);

  //! Unchecked act on a choice table; `out` has one entry per coset.
  void act_into(CosetDecomposition const&     d,
                Permutation const&            f,
                std::span<element_type const> choice,
                std::span<element_type>       out);

  struct OrbitReport {
    std::size_t                  acting_order = 0;
    std::size_t                  orbit_count = 0;
    //! One entry per orbit, orbits ordered by representative rank.
    std::vector<std::uint64_t>   orbit_lengths;
    std::vector<TransversalRank> representatives;  // minimal rank per orbit
  };

  //! Orbits of the group generated by `acting` (automorphisms in Aut_H G) on
  //! T(G, H), by union-find over ranks. `orbit_of_rank`, when given,
  //! receives the orbit index of every rank.
  OrbitReport orbits_under(CosetDecomposition const&       d,
                           std::vector<Permutation> const& acting,
                           std::size_t                     acting_order,
                           std::vector<std::uint32_t>*     orbit_of_rank = nullptr,
                           std::size_t                     jobs = 1);

  //! Orbits of the full Aut_H G.
  OrbitReport orbit_report(CosetDecomposition const& d,
                           Limits const&             limits = {},
                           std::size_t               jobs   = 1);

  //! Number of NRTs S with h S h^-1 = S, computed cycle by cycle over the
  //! permutation of cosets induced by h without enumerating T(G, H).
  std::uint64_t conjugation_fixed_count(CosetDecomposition const& d,
                                        element_type              h);

  //! Orbits of H acting by conjugation, by Burnside's lemma.
  std::uint64_t burnside_conjugation_count(CosetDecomposition const& d);

  //! Orbits of H acting by conjugation, by union-find (reference).
  std::uint64_t conjugation_orbit_count(CosetDecomposition const& d,
                                        std::size_t               jobs = 1);

  //! Small generating set of the group formed by `elements` (greedy).
  std::vector<Permutation> generating_subset(std::vector<Permutation> const& elements);

  struct IsoClass {
    CanonicalForm   form;
    std::uint64_t   size = 0;
    TransversalRank representative_rank = 0;
    bool            generates_group = false;
    bool            is_subgroup = false;
    std::size_t     torsion_order = 0;
    //! Aut_H G orbits inside the class; 0 unless orbits were computed.
    std::size_t     orbit_count = 0;
  };

  inline constexpr int ISO_CLASS_REPORT_SCHEMA_VERSION = 1;

  struct IsoClassReport {
    std::string               group_hash;
    std::string               group_label;  // expression text when known
    std::vector<element_type> subgroup;
    std::size_t               subgroup_order = 0;  // m
    std::size_t               index = 0;           // n
    std::uint64_t             nrt_count = 0;
    bool                      normal = false;
    bool                      corefree = false;
    std::size_t               phi = 0;
    std::vector<IsoClass>     classes;  // ordered by representative rank
    std::optional<OrbitReport> orbits;
    //! Set when orbits were computed: every orbit lies inside one class.
    std::optional<bool>        orbits_refine_classes;
    double                     seconds = 0;

    friend bool operator==(IsoClassReport const&, IsoClassReport const&);
  };

  struct ClassifyOptions {
    bool          orbits = false;
    std::size_t   jobs   = 1;
    std::uint64_t enumeration_bound = 1'000'000;
    Limits        limits = {};
    std::string   group_label;
  };

  struct PairClassification {
    IsoClassReport             report;
    std::vector<std::uint32_t> class_of_rank;
    std::vector<std::uint32_t> orbit_of_rank;  // empty unless orbits
  };

  //! Streams T(G, H) through induced_loop and the loop classifier, split
  //! into options.jobs contiguous rank ranges; the result does not depend on
  //! the split. Throws ResourceError if |T(G, H)| exceeds the bound.
  PairClassification classify_pair_detailed(CosetDecomposition const& d,
                                            ClassifyOptions const&    options = {});

  IsoClassReport classify_pair(CosetDecomposition const& d,
                               ClassifyOptions const&    options = {});

}  // namespace nrt

#endif  // NRT_ORBIT_HPP_
