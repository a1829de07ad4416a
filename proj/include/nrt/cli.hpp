// nrtkit - enumeration and classification of normalized right transversals

#ifndef NRT_CLI_HPP_
#define NRT_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace nrt {

  enum ExitCode : int {
    EXIT_OK                   = 0,
    EXIT_VERIFICATION_FAILURE = 1,
    EXIT_USAGE                = 2,
    EXIT_RESOURCE             = 3
  };

  //! Runs the command line `args` (without the program name).
  int run_cli(std::vector<std::string> const& args,
              std::ostream&                   out,
              std::ostream&                   err);

}  // namespace nrt

#endif  // NRT_CLI_HPP_
