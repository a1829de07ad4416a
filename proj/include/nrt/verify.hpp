// nrtkit - enumeration and classification of normalized right transversals
//
// The reference suite behind `nrtkit verify --suite paper`: every published
// value and statement that can be decided at desk scale.

#ifndef NRT_VERIFY_HPP_
#define NRT_VERIFY_HPP_

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace nrt {

  struct SuiteCheck {
    std::string name;
    bool        passed = false;
    std::string detail;
    double      seconds = 0;
  };

  struct SuiteOptions {
    std::size_t jobs = 1;
    //! Classify all 331776 NRTs of the point stabilizer in Sym(5).
    bool        sym5_classification = true;
  };

  //! Runs every check; each result is also written to `progress` as it
  //! completes, when given.
  std::vector<SuiteCheck> run_paper_suite(SuiteOptions const& options = {},
                                          std::ostream*       progress = nullptr);

}  // namespace nrt

#endif  // NRT_VERIFY_HPP_
