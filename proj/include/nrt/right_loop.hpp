// nrtkit - enumeration and classification of normalized right transversals

#ifndef NRT_RIGHT_LOOP_HPP_
#define NRT_RIGHT_LOOP_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace nrt {

  using loop_element = std::uint32_t;

  //! An n x n operation table over 0..n-1, stored row-major:
  //! op(x, y) = x o y. Construction only checks the shape; see
  //! validate_right_loop in loop_iso.hpp for the axioms.
  class RightLoopTable {
   public:
    RightLoopTable() = default;

    RightLoopTable(std::size_t n, std::vector<loop_element> table);

    [[nodiscard]] std::size_t order() const noexcept {
      return _n;
    }

    [[nodiscard]] loop_element op(loop_element x, loop_element y) const noexcept {
      return _table[static_cast<std::size_t>(x) * _n + y];
    }

    [[nodiscard]] std::span<loop_element const> table() const noexcept {
      return _table;
    }

    //! The loop transported along the bijection f: the result satisfies
    //! result.op(f(x), f(y)) = f(op(x, y)).
    [[nodiscard]] RightLoopTable relabel(std::span<loop_element const> f) const;

    friend bool operator==(RightLoopTable const&,
                           RightLoopTable const&) = default;

   private:
    std::size_t               _n = 0;
    std::vector<loop_element> _table;
  };

}  // namespace nrt

#endif  // NRT_RIGHT_LOOP_HPP_
