// nrtkit - enumeration and classification of normalized right transversals
//
// Right coset decompositions G = H x_0 u H x_1 u ..., normalized right
// transversals (NRTs) of H in G and the structures they induce: the right
// loop x o y = (Hxy n S), the coset representation chi_S, the subgroup H_S
// generated by the defects xy(x o y)^-1, and the group torsion chi_S(H_S).
//
// Cosets are identified with indices 0..n-1 (coset 0 is H), so loops
// induced from different pairs (G, H) of the same index are directly
// comparable.

#ifndef NRT_TRANSVERSAL_HPP_
#define NRT_TRANSVERSAL_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "nrt/group.hpp"
#include "nrt/permutation.hpp"
#include "nrt/right_loop.hpp"
#include "nrt/subgroups.hpp"

namespace nrt {

  //! Mixed-radix index of an NRT: coset c's choice contributes
  //! position_in_coset * |H|^(c-1), so coset 1 is the fastest digit.
  using TransversalRank = std::uint64_t;

  class CosetDecomposition {
   public:
    //! Right cosets Hx of H in its parent. Cosets are numbered in order of
    //! their smallest element; members of each coset are sorted.
    explicit CosetDecomposition(SubgroupHandle subgroup);

    [[nodiscard]] GroupTable const& group() const noexcept {
      return _subgroup.parent();
    }

    [[nodiscard]] SubgroupHandle const& subgroup() const noexcept {
      return _subgroup;
    }

    //! Index n = [G : H].
    [[nodiscard]] std::size_t coset_count() const noexcept {
      return _members.size();
    }

    //! m = |H|.
    [[nodiscard]] std::size_t coset_size() const noexcept {
      return _subgroup.size();
    }

    [[nodiscard]] loop_element coset_of(element_type x) const noexcept {
      return _coset_of[x];
    }

    [[nodiscard]] std::vector<element_type> const& members(std::size_t c) const {
      return _members[c];
    }

    //! Position of x inside its coset's sorted member list.
    [[nodiscard]] std::size_t position_in_coset(element_type x) const noexcept {
      return _position[x];
    }

   private:
    SubgroupHandle                         _subgroup;
    std::vector<loop_element>              _coset_of;
    std::vector<std::size_t>               _position;
    std::vector<std::vector<element_type>> _members;
  };

  CosetDecomposition right_cosets(SubgroupHandle const& subgroup);

  //! A normalized right transversal: one element per coset, the identity
  //! for H itself.
  class Transversal {
   public:
    //! Throws ValidationError unless choice[c] lies in coset c for all c and
    //! choice[0] = 0.
    Transversal(CosetDecomposition const& decomposition,
                std::vector<element_type> choice);

    [[nodiscard]] CosetDecomposition const& decomposition() const noexcept {
      return *_decomposition;
    }

    [[nodiscard]] std::vector<element_type> const& choice() const noexcept {
      return _choice;
    }

    [[nodiscard]] element_type choice(std::size_t coset) const noexcept {
      return _choice[coset];
    }

    //! The transversal as a sorted element set.
    [[nodiscard]] std::vector<element_type> elements() const;

    friend bool operator==(Transversal const& a, Transversal const& b) {
      return a._decomposition == b._decomposition && a._choice == b._choice;
    }

   private:
    CosetDecomposition const* _decomposition;
    std::vector<element_type> _choice;
  };

  //! Builds an NRT from an element set with one element per coset.
  Transversal transversal_from_elements(CosetDecomposition const&     d,
                                        std::span<element_type const> elements);

  //! |H|^(n-1). Throws ResourceError if it does not fit in 63 bits.
  std::uint64_t nrt_count(CosetDecomposition const& d);

  //! Throws PreconditionError if r >= nrt_count(d).
  Transversal nrt_unrank(CosetDecomposition const& d, TransversalRank r);

  TransversalRank nrt_rank(Transversal const& s);

  //! Streams the NRTs with ranks in [first, last) in rank order, reusing one
  //! choice buffer (the odometer never allocates after construction).
  class NrtCursor {
   public:
    NrtCursor(CosetDecomposition const& d,
              TransversalRank           first,
              TransversalRank           last);

    [[nodiscard]] bool done() const noexcept {
      return _rank >= _last;
    }

    [[nodiscard]] TransversalRank rank() const noexcept {
      return _rank;
    }

    [[nodiscard]] std::span<element_type const> choice() const noexcept {
      return _choice;
    }

    [[nodiscard]] Transversal transversal() const {
      return Transversal(*_decomposition, _choice);
    }

    void advance();

   private:
    CosetDecomposition const* _decomposition;
    TransversalRank           _rank;
    TransversalRank           _last;
    std::vector<std::size_t>  _digits;
    std::vector<element_type> _choice;
  };

  //! Streams all of T(G, H).
  NrtCursor nrt_iter(CosetDecomposition const& d);

  //! op[i][j] = coset of choice[i] * choice[j]. Throws std::logic_error if
  //! the coset's chosen element is not in H * choice[i] * choice[j] (which
  //! would mean the decomposition is inconsistent).
  RightLoopTable induced_loop(Transversal const& s);

  //! Allocation-free variant for streaming; `out` must have n * n entries.
  void induced_loop_into(CosetDecomposition const&     d,
                         std::span<element_type const> choice,
                         std::span<loop_element>       out);

  //! chi_S(g): the permutation x -> (H x g n S) of coset indices.
  Permutation chi(Transversal const& s, element_type g);

  //! {g : chi_S(g) = 1}.
  std::vector<element_type> chi_kernel(CosetDecomposition const& d);

  //! <S>.
  SubgroupHandle span(Transversal const& s);

  //! H_S = <x y (x o y)^-1 : x, y in S>, a subgroup of H.
  SubgroupHandle h_s(Transversal const& s);

  //! True iff H_S * S = <S> as sets.
  bool hs_times_s_is_span(Transversal const& s);

  //! True iff S is closed under multiplication.
  bool is_subgroup(Transversal const& s);

  //! The group torsion chi_S(H_S) as a sorted list of permutations of the
  //! coset indices.
  std::vector<Permutation> group_torsion(Transversal const& s);

  //! Group torsion computed from the loop alone: the stabilizer of 0 in the
  //! group generated by the right translations R_y. Throws ResourceError if
  //! that group exceeds limits.closure_bound.
  std::vector<Permutation> group_torsion_of_loop(RightLoopTable const& loop,
                                                 Limits const& limits = {});

  //! The NRT {Nx : x in S} of H/N in G/N, where `target` decomposes the
  //! quotient by the image of H. N must be contained in H.
  Transversal project_transversal(Transversal const&        s,
                                  Quotient const&           q,
                                  CosetDecomposition const& target);

  //! Image of H in G/N.
  SubgroupHandle project_subgroup(SubgroupHandle const& h, Quotient const& q);

  //! Cayley table of a group read as a right loop.
  RightLoopTable cayley_loop(GroupTable const& group);

}  // namespace nrt

#endif  // NRT_TRANSVERSAL_HPP_
