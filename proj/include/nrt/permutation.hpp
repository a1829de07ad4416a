// nrtkit - enumeration and classification of normalized right transversals
//
// Permutations of {0, ..., degree - 1}. Products follow the right-action
// convention: (a * b)(i) = b(a(i)), i.e. a is applied first. Cycle notation
// is 1-based, "(1,2,3)(4,5)", with "()" for the identity.

#ifndef NRT_PERMUTATION_HPP_
#define NRT_PERMUTATION_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace nrt {

  using point_type = std::uint32_t;

  class Permutation {
   public:
    Permutation() = default;

    //! Takes ownership of an image table; throws ValidationError if it is not
    //! a bijection of 0..size-1.
    explicit Permutation(std::vector<point_type> images);

    static Permutation identity(std::size_t degree);

    //! Parses 1-based cycle notation such as "(1,2)(3,4)" acting on
    //! `degree` points. Throws ParseError on malformed text.
    static Permutation from_cycles(std::string_view text, std::size_t degree);

    [[nodiscard]] std::size_t degree() const noexcept {
      return _images.size();
    }

    [[nodiscard]] point_type operator()(point_type i) const noexcept {
      return _images[i];
    }

    [[nodiscard]] std::span<point_type const> images() const noexcept {
      return _images;
    }

    //! Apply *this, then `other`.
    [[nodiscard]] Permutation operator*(Permutation const& other) const;

    [[nodiscard]] Permutation inverse() const;

    [[nodiscard]] bool is_identity() const noexcept;

    [[nodiscard]] std::size_t order() const;

    //! Sorted cycle lengths, fixed points included.
    [[nodiscard]] std::vector<std::size_t> cycle_type() const;

    //! Canonical 1-based cycle notation: each cycle starts at its smallest
    //! point, cycles ordered by that point, fixed points omitted.
    [[nodiscard]] std::string to_cycles() const;

    friend bool operator==(Permutation const&, Permutation const&) = default;
    friend auto operator<=>(Permutation const&, Permutation const&) = default;

   private:
    std::vector<point_type> _images;
  };

  //! Degree of the largest point mentioned in 1-based cycle text ("(1,5)"
  //! gives 5); 0 for "()".
  std::size_t max_point_in_cycles(std::string_view text);

}  // namespace nrt

#endif  // NRT_PERMUTATION_HPP_
