// nrtkit - enumeration and classification of normalized right transversals
//
// JSON and CSV encodings. Every top-level JSON document carries a
// "schema_version" field. Wall-clock times appear only in CSV and table
// output so that JSON output is reproducible byte for byte.

#ifndef NRT_SERIALIZE_HPP_
#define NRT_SERIALIZE_HPP_

#include <string>
#include <vector>

#include "json.hpp"

#include "nrt/group.hpp"
#include "nrt/loop_iso.hpp"
#include "nrt/orbit.hpp"
#include "nrt/right_loop.hpp"
#include "nrt/transversal.hpp"

namespace nrt {

  using json = nlohmann::json;

  inline constexpr int JSON_SCHEMA_VERSION = 1;

  json       group_to_json(GroupTable const& group);
  //! Rebuilds and revalidates the table; the stored hash must match.
  GroupTable group_from_json(json const& j);

  json        transversal_to_json(Transversal const& s);
  //! Throws ValidationError if the record belongs to another group.
  Transversal transversal_from_json(json const& j, CosetDecomposition const& d);

  json           loop_to_json(RightLoopTable const& t);
  RightLoopTable loop_from_json(json const& j);

  json           report_to_json(IsoClassReport const& report);
  IsoClassReport report_from_json(json const& j);

  json census_to_json(CensusResult const& result);

  std::string census_csv_header();
  std::string census_csv_row(CensusResult const& result);

  std::string report_csv_header();
  std::string report_csv_row(IsoClassReport const& report);

  //! "{a,b,c}" using the group's element names.
  std::string element_set(GroupTable const& group, std::vector<element_type> const& elements);

}  // namespace nrt

#endif  // NRT_SERIALIZE_HPP_
