// nrtkit - enumeration and classification of normalized right transversals
//
// A small expression language for naming groups:
//
//   C(n)  D(2n)  Q8  Sym(n)  Alt(n)  Perm[d: (1,2); (1,2,3)]
//   a x b                 direct product
//   a : b [action]        semidirect product, b acting on a
//   ( ... )               grouping
//
// Products are left-associative and whitespace is ignored. An action is one
// of
//
//   inv                   every generator of b inverts a (a must be abelian)
//   pow k                 every generator of b acts by x -> x^k
//   gens i j ... ; ...    images (element indices of a) of a's generators,
//                         one ';'-separated group per generator of b
//   map i0 i1 ... ; ...   images of all elements of a, one group per
//                         generator of b
//
// The action is validated when the expression is realized.

#ifndef NRT_GROUP_EXPR_HPP_
#define NRT_GROUP_EXPR_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "nrt/group.hpp"
#include "nrt/permutation.hpp"

namespace nrt {

  struct SemidirectAction {
    enum class Kind { inversion, power, generator_images, element_images };

    Kind                                   kind = Kind::inversion;
    long                                   exponent = -1;
    std::vector<std::vector<element_type>> images;

    friend bool operator==(SemidirectAction const&,
                           SemidirectAction const&) = default;
  };

  struct GroupExpr {
    enum class Kind {
      cyclic,
      dihedral,
      quaternion8,
      symmetric,
      alternating,
      permutations,
      direct_product,
      semidirect_product
    };

    Kind kind = Kind::cyclic;
    //! C(n): n; D(2n): the order 2n; Sym/Alt: the degree; Perm: the degree.
    std::size_t              n = 1;
    std::vector<Permutation> generators;  // Perm only
    std::vector<GroupExpr>   factors;     // products: exactly two
    SemidirectAction         action;      // semidirect only

    friend bool operator==(GroupExpr const&, GroupExpr const&) = default;
  };

  //! Throws ParseError (with position) on malformed input or out-of-range
  //! parameters.
  GroupExpr parse_group_expr(std::string_view text);

  //! Inverse of parse_group_expr up to whitespace.
  std::string render(GroupExpr const& expr);

  //! Builds the table. Throws ValidationError if a semidirect action is not a
  //! homomorphism into the automorphism group, ResourceError past the
  //! closure bound.
  GroupTable realize(GroupExpr const& expr, Limits const& limits = {});

  //! parse + realize.
  GroupTable make_group(std::string_view text, Limits const& limits = {});

}  // namespace nrt

#endif  // NRT_GROUP_EXPR_HPP_
