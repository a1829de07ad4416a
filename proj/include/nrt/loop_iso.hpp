// nrtkit - enumeration and classification of normalized right transversals
//
// Right-loop validation, isomorphism testing, canonical forms, streaming
// classification by canonical key, and the census of right loops of order n.

#ifndef NRT_LOOP_ISO_HPP_
#define NRT_LOOP_ISO_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "nrt/right_loop.hpp"

namespace nrt {

  //! Largest order for the exhaustive (lexicographically minimal) canonical
  //! form.
  inline constexpr std::size_t MAX_EXHAUSTIVE_CANONICAL_ORDER = 8;

  //! Identity axioms at 0 hold and every right translation x -> x o y is a
  //! bijection.
  bool validate_right_loop(RightLoopTable const& t);

  //! (x o y) o z = x o (y o z) for all x, y, z.
  bool is_associative(RightLoopTable const& t);

  struct LoopFingerprint {
    std::size_t                           order = 0;
    //! Sorted multiset of the cycle types of the right translations.
    std::vector<std::vector<std::size_t>> right_cycle_types;
    std::size_t                           idempotents = 0;
    std::size_t                           commuting_pairs = 0;
    std::size_t                           associative_triples = 0;
    //! Number of x whose left translation y -> x o y is a bijection.
    std::size_t                           bijective_left_translations = 0;

    friend bool operator==(LoopFingerprint const&,
                           LoopFingerprint const&) = default;
  };

  LoopFingerprint fingerprint(RightLoopTable const& t);

  //! A row-major table that is the same for exactly the isomorphic loops of
  //! one order.
  struct CanonicalForm {
    std::size_t               order = 0;
    std::vector<loop_element> table;

    [[nodiscard]] RightLoopTable as_loop() const {
      return RightLoopTable(order, table);
    }

    friend bool operator==(CanonicalForm const&, CanonicalForm const&) = default;
    friend auto operator<=>(CanonicalForm const&,
                            CanonicalForm const&) = default;
  };

  struct CanonicalFormHash {
    std::size_t operator()(CanonicalForm const& f) const noexcept;
  };

  //! The lexicographically minimal row-major table over all relabelings
  //! fixing 0. Relabelings are abandoned as soon as their partial table
  //! exceeds the incumbent. Throws ResourceError if the order exceeds
  //! MAX_EXHAUSTIVE_CANONICAL_ORDER.
  CanonicalForm canonical_form(RightLoopTable const& t);

  //! As canonical_form, writing into `out` (n * n entries) without
  //! allocating. `scratch` must hold at least 2 * n entries.
  void canonical_form_into(std::span<loop_element const> table,
                           std::size_t                   n,
                           std::span<loop_element>       out,
                           std::span<loop_element>       scratch);

  //! Canonical form for loops of any order: the minimum, over all ordered
  //! generating tuples of minimal length, of the table relabeled in the
  //! breadth-first order in which the tuple generates the loop. Not
  //! comparable with canonical_form.
  CanonicalForm generated_canonical_form(RightLoopTable const& t);

  //! Smallest number of elements generating the loop under o.
  std::size_t generator_count(RightLoopTable const& t);

  //! A bijection f with f(0) = 0 and f(x o y) = f(x) o f(y), if one exists.
  //! The search maps a minimal generating tuple of `a` onto tuples of `b`
  //! with matching element invariants.
  std::optional<std::vector<loop_element>> are_isomorphic(RightLoopTable const& a,
                                                          RightLoopTable const& b);

  //! True iff f is an isomorphism from a onto b.
  bool is_isomorphism(RightLoopTable const&         a,
                      RightLoopTable const&         b,
                      std::span<loop_element const> f);

  //! Which canonical form classify_loops uses for a given order.
  enum class CanonicalMethod { exhaustive, generated };

  CanonicalMethod canonical_method_for(std::size_t order);

  CanonicalForm canonical_key(RightLoopTable const& t);

  //! Streaming classifier. Each added loop is reduced to its canonical key;
  //! classes keep a count and the loop with the smallest rank seen. Two
  //! classifiers over disjoint rank ranges merge into the classifier of the
  //! union.
  class LoopClassifier {
   public:
    struct Entry {
      std::size_t    id = 0;  // order of first insertion into this classifier
      std::uint64_t  count = 0;
      std::uint64_t  representative_rank = 0;
      RightLoopTable representative;
    };

    explicit LoopClassifier(std::size_t order);

    //! Returns the local class id.
    std::size_t add(std::uint64_t rank, std::span<loop_element const> table);

    std::size_t add(std::uint64_t rank, RightLoopTable const& t) {
      return add(rank, t.table());
    }

    //! Merges `other` in; returns, for each local id of `other`, the id in
    //! *this.
    std::vector<std::size_t> merge(LoopClassifier const& other);

    [[nodiscard]] std::size_t order() const noexcept {
      return _order;
    }

    [[nodiscard]] std::size_t class_count() const noexcept {
      return _classes.size();
    }

    [[nodiscard]] std::uint64_t total() const noexcept {
      return _total;
    }

    [[nodiscard]] std::unordered_map<CanonicalForm, Entry, CanonicalFormHash> const&
    classes() const noexcept {
      return _classes;
    }

    //! Classes ordered by representative rank.
    [[nodiscard]] std::vector<std::pair<CanonicalForm, Entry>> sorted() const;

   private:
    std::size_t                                                 _order;
    CanonicalMethod                                             _method;
    std::uint64_t                                               _total = 0;
    std::unordered_map<CanonicalForm, Entry, CanonicalFormHash> _classes;
    std::vector<loop_element>                                   _buffer;
    std::vector<loop_element>                                   _scratch;
    CanonicalForm                                               _key;
  };

  //! Classifies a finite sequence of loops of one order, ranks 0, 1, ...
  LoopClassifier classify_loops(std::span<RightLoopTable const> loops);

  struct CensusOptions {
    std::size_t max_order = 5;
    std::size_t jobs      = 1;
  };

  struct CensusResult {
    std::size_t                n = 0;
    std::uint64_t              labeled_count = 0;
    std::uint64_t              classes = 0;  // T_n
    double                     seconds = 0;
    std::vector<CanonicalForm> representatives;  // sorted
    std::vector<std::uint64_t> class_sizes;      // aligned with representatives
  };

  //! (n-1)!^(n-1) for n >= 1.
  std::uint64_t labeled_right_loop_count(std::size_t n);

  //! All labeled right loops of order n: R_0 = 1 and, for y != 0, R_y ranges
  //! over the permutations with R_y(0) = y. Loop number `rank` uses the
  //! mixed-radix digits of rank (R_1 fastest) to pick each R_y.
  RightLoopTable labeled_right_loop(std::size_t n, std::uint64_t rank);

  //! Counts right loops of order n up to isomorphism by canonicalizing every
  //! labeled loop. Work is sharded by the choice of R_1 and merged by key.
  //! Throws ResourceError above options.max_order.
  CensusResult census(std::size_t n, CensusOptions const& options = {});

}  // namespace nrt

#endif  // NRT_LOOP_ISO_HPP_
