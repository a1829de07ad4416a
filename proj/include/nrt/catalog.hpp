// nrtkit - enumeration and classification of normalized right transversals
//
// Subgroup selectors, the catalog of (G, H) pairs and the consistency scan
// of the statements about phi(G, H) = |I(G, H)|.
//
// Selectors:
//
//   gens:e1;e2;...         subgroup generated by the listed elements; an
//                          element is a name, "#k" or cycle notation
//   index:k                k-th entry of subgroups_all (depends on its order)
//   order:k[,flag...]      first subgroup of order k in subgroups_all order
//                          with every flag: normal, nonnormal, corefree,
//                          noncorefree
//   all                    every subgroup (catalog entries only)

#ifndef NRT_CATALOG_HPP_
#define NRT_CATALOG_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nrt/group.hpp"
#include "nrt/serialize.hpp"

namespace nrt {

  //! Throws ParseError on a malformed selector, PreconditionError when
  //! nothing matches.
  SubgroupHandle resolve_subgroup(GroupTable const& group,
                                  std::string_view  selector,
                                  Limits const&     limits = {});

  //! A "gens:" selector for the subgroup, built from a small generating set.
  std::string gens_selector(SubgroupHandle const& subgroup);

  //! One subgroup per conjugacy class, the first of each class in
  //! subgroups_all order.
  std::vector<SubgroupHandle> subgroup_class_representatives(GroupTable const& group,
                                                             Limits const& limits = {});

  //! Expression for the subgroup of a permutation group as a Perm[...] group.
  std::string permutation_group_expr(SubgroupHandle const& subgroup);

  enum class Origin { none, published, derived };

  struct Expectation {
    Origin                                   origin = Origin::none;
    std::optional<std::size_t>               phi;
    std::optional<std::size_t>               phi_greater_than;
    //! Sorted ascending.
    std::optional<std::vector<std::uint64_t>> orbit_lengths;
    bool                                     orbits_equal_phi = false;
  };

  struct CatalogPair {
    std::string name;
    std::string group;     // group expression
    std::string subgroup;  // selector
    Expectation expected;
    //! phi taken from the conjugation orbit count instead of classification;
    //! valid for the point stabilizer in Sym(n).
    bool burnside_only = false;
  };

  //! The explicit fixture pairs.
  std::vector<CatalogPair> fixture_pairs();

  struct PairRecord {
    std::string                group;
    std::string                subgroup;  // selector
    std::string                source;    // fixture name or "ambient"
    std::size_t                group_order = 0;
    std::size_t                m = 0;
    std::size_t                n = 0;
    bool                       normal = false;
    bool                       corefree = false;
    std::optional<std::size_t> phi;
    std::optional<std::size_t> orbit_count;
    std::optional<bool>        orbits_refine_classes;
    //! Corefree pairs only: every class of NRTs generating G is one orbit.
    std::optional<bool>        generating_classes_transitive;
    std::string                method;   // "classify" or "burnside"
    std::string                skipped;  // reason, empty unless skipped
    std::vector<std::string>   expectation_failures;
    double                     seconds = 0;
  };

  struct TheoremCheck {
    std::string              name;
    bool                     passed = true;
    std::vector<std::size_t> counterexamples;  // indices into pairs
  };

  struct ScanOptions {
    std::size_t   max_order = 120;
    //! "catalog": subgroup pairs of Sym(4) plus the fixtures; any group
    //! expression: subgroup pairs of that group only.
    std::string   ambient = "catalog";
    std::size_t   jobs    = 1;
    std::uint64_t enumeration_bound = 1'000'000;
    Limits        limits  = {};
  };

  struct ScanVerdict {
    //! The scan covers finitely many pairs; it is never a proof.
    std::string               label = "consistency check";
    std::vector<PairRecord>   pairs;
    std::vector<TheoremCheck> theorems;
    std::size_t               skipped = 0;
    double                    seconds = 0;

    [[nodiscard]] bool passed() const;
  };

  ScanVerdict scan_theorems(ScanOptions const& options = {});

  //! Timing fields are omitted, so equal scans give identical JSON.
  json scan_to_json(ScanVerdict const& verdict);

}  // namespace nrt

#endif  // NRT_CATALOG_HPP_
