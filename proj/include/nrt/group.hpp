// nrtkit - enumeration and classification of normalized right transversals
//
// Finite groups stored as explicit multiplication tables, and subgroups of
// them. The identity is always element 0; every other module relies on that.

#ifndef NRT_GROUP_HPP_
#define NRT_GROUP_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nrt/permutation.hpp"

namespace nrt {

  using element_type = std::uint32_t;

  //! Configurable size bounds. Exceeding one raises ResourceError.
  struct Limits {
    std::size_t closure_bound      = 10000;
    std::size_t subgroup_bound     = 48;
    std::size_t automorphism_bound = 48;
  };

  //! Lowercase hex SHA-256 digest.
  std::string sha256_hex(std::string_view bytes);

  //! An immutable finite group given by its Cayley table.
  class GroupTable {
   public:
    GroupTable() = default;

    //! Validates the identity, Latin-square and inverse axioms (throws
    //! ValidationError). Associativity is *not* checked here because it is
    //! cubic; call is_associative() for that.
    //!
    //! `permutations`, when non-empty, is a faithful permutation
    //! representation with permutations[x] representing element x.
    GroupTable(std::size_t                order,
               std::vector<element_type>  mul,
               std::vector<std::string>   names,
               std::vector<element_type>  generators,
               std::vector<Permutation>   permutations = {});

    [[nodiscard]] std::size_t order() const noexcept {
      return _order;
    }

    [[nodiscard]] element_type mul(element_type a,
                                   element_type b) const noexcept {
      return _mul[static_cast<std::size_t>(a) * _order + b];
    }

    [[nodiscard]] element_type inv(element_type a) const noexcept {
      return _inv[a];
    }

    [[nodiscard]] std::span<element_type const> row(element_type a) const {
      return {_mul.data() + static_cast<std::size_t>(a) * _order, _order};
    }

    [[nodiscard]] std::span<element_type const> table() const noexcept {
      return _mul;
    }

    [[nodiscard]] std::string const& name(element_type a) const {
      return _names[a];
    }

    [[nodiscard]] std::vector<std::string> const& names() const noexcept {
      return _names;
    }

    //! The generators the group was built from (element indices).
    [[nodiscard]] std::vector<element_type> const& generators() const noexcept {
      return _generators;
    }

    [[nodiscard]] bool has_permutation_representation() const noexcept {
      return !_perms.empty();
    }

    //! Degree of the permutation representation, 0 if there is none.
    [[nodiscard]] std::size_t degree() const noexcept {
      return _perms.empty() ? 0 : _perms[0].degree();
    }

    [[nodiscard]] Permutation const& permutation(element_type a) const {
      return _perms[a];
    }

    [[nodiscard]] element_type power(element_type a, std::size_t k) const;

    [[nodiscard]] std::size_t element_order(element_type a) const;

    //! Conjugate a^g = g^-1 a g.
    [[nodiscard]] element_type conj(element_type a, element_type g) const {
      return mul(mul(inv(g), a), g);
    }

    [[nodiscard]] bool is_abelian() const;

    //! Exhaustive associativity check, O(order^3).
    [[nodiscard]] bool is_associative() const;

    //! Resolves an element token: "#k" (index), an exact element name, or -
    //! for permutation groups - any cycle notation of a member permutation.
    [[nodiscard]] std::optional<element_type> find(std::string_view token) const;

    //! Lower-case hex SHA-256 of the row-major table, each entry encoded as
    //! a 32-bit little-endian integer.
    [[nodiscard]] std::string content_hash() const;

   private:
    std::size_t               _order = 0;
    std::vector<element_type> _mul;
    std::vector<element_type> _inv;
    std::vector<std::string>  _names;
    std::vector<element_type> _generators;
    std::vector<Permutation>  _perms;
  };

  //! A subgroup of a GroupTable, stored as the strictly increasing list of
  //! its elements. The parent must outlive the handle. Normality is computed
  //! once at construction.
  class SubgroupHandle {
   public:
    SubgroupHandle() = default;

    //! Throws ValidationError unless `elements` is a subgroup of `parent`.
    SubgroupHandle(GroupTable const& parent, std::vector<element_type> elements);

    [[nodiscard]] GroupTable const& parent() const noexcept {
      return *_parent;
    }

    [[nodiscard]] std::vector<element_type> const& elements() const noexcept {
      return _elements;
    }

    [[nodiscard]] std::size_t size() const noexcept {
      return _elements.size();
    }

    [[nodiscard]] std::size_t index() const noexcept {
      return _parent->order() / _elements.size();
    }

    [[nodiscard]] bool contains(element_type x) const noexcept {
      return _member[x];
    }

    [[nodiscard]] bool is_normal() const noexcept {
      return _normal;
    }

    friend bool operator==(SubgroupHandle const& a, SubgroupHandle const& b) {
      return a._parent == b._parent && a._elements == b._elements;
    }

   private:
    GroupTable const*         _parent = nullptr;
    std::vector<element_type> _elements;
    std::vector<bool>         _member;
    bool                      _normal = false;
  };

  //! Subgroup generated by `gens` (closure under multiplication).
  SubgroupHandle generate_subgroup(GroupTable const&             group,
                                   std::span<element_type const> gens);

  //! Closure of a set of permutations of the given degree. Elements are
  //! numbered in breadth-first order: identity first, then products
  //! x * g for x in discovery order and g in input order. Names are cycle
  //! notation. Throws ResourceError beyond `limits.closure_bound`.
  GroupTable build_from_generators(std::size_t                    degree,
                                   std::span<Permutation const>   gens,
                                   Limits const&                  limits = {});

  //! A x B with element (a, b) at index a * |B| + b.
  GroupTable direct_product(GroupTable const& a, GroupTable const& b);

  //! A : B for a right action of B on A. `action[b]` is the automorphism of
  //! A (on element indices) by which b acts, so that
  //! (a1, b1)(a2, b2) = (action[b2](a1) * a2, b1 * b2). The action must be a
  //! homomorphism into Aut(A); this is validated.
  GroupTable semidirect_product(GroupTable const&               a,
                                GroupTable const&               b,
                                std::vector<Permutation> const& action);

  //! The quaternion group {1, -1, i, -i, j, -j, k, -k} in that order.
  GroupTable quaternion8();

  //! True if `f` (on element indices) is a bijective homomorphism of G.
  bool is_automorphism(GroupTable const& group, Permutation const& f);

  //! Extends images of group.generators() to a homomorphism; nullopt if the
  //! assignment does not extend to an automorphism.
  std::optional<Permutation>
  extend_to_automorphism(GroupTable const&             group,
                         std::span<element_type const> generator_images);

}  // namespace nrt

#endif  // NRT_GROUP_HPP_
