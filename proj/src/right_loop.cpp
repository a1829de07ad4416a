// nrtkit - enumeration and classification of normalized right transversals

#include "nrt/right_loop.hpp"

#include "nrt/error.hpp"

namespace nrt {

  RightLoopTable::RightLoopTable(std::size_t n, std::vector<loop_element> table)
      : _n(n), _table(std::move(table)) {
    if (_table.size() != n * n) {
      throw ValidationError("loop table must have n * n entries");
    }
    for (auto v : _table) {
      if (v >= n) {
        throw ValidationError("loop table entry out of range");
      }
    }
  }

  RightLoopTable RightLoopTable::relabel(std::span<loop_element const> f) const {
    std::vector<loop_element> t(_n * _n);
    for (std::size_t x = 0; x < _n; ++x) {
      for (std::size_t y = 0; y < _n; ++y) {
        t[f[x] * _n + f[y]] = f[_table[x * _n + y]];
      }
    }
    return RightLoopTable(_n, std::move(t));
  }

}  // namespace nrt
