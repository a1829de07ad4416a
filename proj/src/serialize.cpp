// nrtkit - enumeration and classification of normalized right transversals

#include "nrt/serialize.hpp"

#include <cstdio>
#include <sstream>

#include "nrt/error.hpp"

namespace nrt {

  namespace {
    void check_schema(json const& j, char const* what) {
      if (!j.is_object() || !j.contains("schema_version")) {
        throw ValidationError(std::string(what) + ": missing schema_version");
      }
      if (j.at("schema_version").get<int>() != JSON_SCHEMA_VERSION) {
        throw ValidationError(std::string(what)
                              + ": unsupported schema_version");
      }
    }

    char const* method_name(CanonicalMethod m) {
      return m == CanonicalMethod::exhaustive ? "exhaustive" : "generated";
    }

    std::string fixed(double x) {
      char buf[32];
      std::snprintf(buf, sizeof(buf), "%.3f", x);
      return buf;
    }

    std::string csv_field(std::string const& s) {
      if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
      }
      std::string out = "\"";
      for (char c : s) {
        if (c == '"') {
          out += '"';
        }
        out += c;
      }
      return out + "\"";
    }
  }  // namespace

  json group_to_json(GroupTable const& group) {
    json j;
    j["schema_version"] = JSON_SCHEMA_VERSION;
    j["order"]          = group.order();
    j["mul"]            = std::vector<element_type>(group.table().begin(),
                                                    group.table().end());
    j["names"]          = group.names();
    j["generators"]     = group.generators();
    if (group.has_permutation_representation()) {
      std::vector<std::string> perms;
      for (element_type x = 0; x < group.order(); ++x) {
        perms.push_back(group.permutation(x).to_cycles());
      }
      j["degree"]       = group.degree();
      j["permutations"] = perms;
    }
    j["hash"] = group.content_hash();
    return j;
  }

  GroupTable group_from_json(json const& j) {
    check_schema(j, "group");
    std::vector<Permutation> perms;
    if (j.contains("permutations")) {
      auto degree = j.at("degree").get<std::size_t>();
      for (auto const& text : j.at("permutations")) {
        perms.push_back(Permutation::from_cycles(text.get<std::string>(), degree));
      }
    }
    GroupTable group(j.at("order").get<std::size_t>(),
                     j.at("mul").get<std::vector<element_type>>(),
                     j.at("names").get<std::vector<std::string>>(),
                     j.at("generators").get<std::vector<element_type>>(),
                     std::move(perms));
    if (!group.is_associative()) {
      throw ValidationError("group: table is not associative");
    }
    if (j.contains("hash") && j.at("hash").get<std::string>() != group.content_hash()) {
      throw ValidationError("group: content hash mismatch");
    }
    return group;
  }

  json transversal_to_json(Transversal const& s) {
    auto const& d = s.decomposition();
    json        j;
    j["schema_version"] = JSON_SCHEMA_VERSION;
    j["group_hash"]     = d.group().content_hash();
    j["subgroup"]       = d.subgroup().elements();
    j["choice"]         = s.choice();
    j["rank"]           = nrt_rank(s);
    return j;
  }

  Transversal transversal_from_json(json const& j, CosetDecomposition const& d) {
    check_schema(j, "transversal");
    if (j.at("group_hash").get<std::string>() != d.group().content_hash()
        || j.at("subgroup").get<std::vector<element_type>>()
               != d.subgroup().elements()) {
      throw ValidationError("transversal: record belongs to another pair");
    }
    return Transversal(d, j.at("choice").get<std::vector<element_type>>());
  }

  json loop_to_json(RightLoopTable const& t) {
    json j;
    j["schema_version"] = JSON_SCHEMA_VERSION;
    j["order"]          = t.order();
    j["table"] = std::vector<loop_element>(t.table().begin(), t.table().end());
    return j;
  }

  RightLoopTable loop_from_json(json const& j) {
    check_schema(j, "loop");
    RightLoopTable t(j.at("order").get<std::size_t>(),
                     j.at("table").get<std::vector<loop_element>>());
    if (!validate_right_loop(t)) {
      throw ValidationError("loop: not a right loop");
    }
    return t;
  }

  json report_to_json(IsoClassReport const& r) {
    json j;
    j["schema_version"] = ISO_CLASS_REPORT_SCHEMA_VERSION;
    j["group_hash"]     = r.group_hash;
    j["group"]          = r.group_label;
    j["subgroup"]       = r.subgroup;
    j["m"]              = r.subgroup_order;
    j["n"]              = r.index;
    j["nrt_count"]      = r.nrt_count;
    j["normal"]         = r.normal;
    j["corefree"]       = r.corefree;
    j["phi"]            = r.phi;
    j["canonical_method"] = method_name(canonical_method_for(r.index));
    json classes        = json::array();
    for (auto const& c : r.classes) {
      classes.push_back({{"size", c.size},
                         {"representative_rank", c.representative_rank},
                         {"generates_group", c.generates_group},
                         {"is_subgroup", c.is_subgroup},
                         {"torsion_order", c.torsion_order},
                         {"orbit_count", c.orbit_count},
                         {"canonical_form", c.form.table}});
    }
    j["classes"] = std::move(classes);
    if (r.orbits) {
      j["orbits"] = {{"acting_order", r.orbits->acting_order},
                     {"orbit_count", r.orbits->orbit_count},
                     {"orbit_lengths", r.orbits->orbit_lengths},
                     {"representatives", r.orbits->representatives}};
    }
    if (r.orbits_refine_classes) {
      j["orbits_refine_classes"] = *r.orbits_refine_classes;
    }
    return j;
  }

  IsoClassReport report_from_json(json const& j) {
    if (!j.is_object() || !j.contains("schema_version")
        || j.at("schema_version").get<int>() != ISO_CLASS_REPORT_SCHEMA_VERSION) {
      throw ValidationError("report: unsupported or missing schema_version");
    }
    IsoClassReport r;
    r.group_hash     = j.at("group_hash").get<std::string>();
    r.group_label    = j.at("group").get<std::string>();
    r.subgroup       = j.at("subgroup").get<std::vector<element_type>>();
    r.subgroup_order = j.at("m").get<std::size_t>();
    r.index          = j.at("n").get<std::size_t>();
    r.nrt_count      = j.at("nrt_count").get<std::uint64_t>();
    r.normal         = j.at("normal").get<bool>();
    r.corefree       = j.at("corefree").get<bool>();
    r.phi            = j.at("phi").get<std::size_t>();
    if (j.at("canonical_method").get<std::string>()
        != method_name(canonical_method_for(r.index))) {
      throw ValidationError("report: canonical method mismatch");
    }
    for (auto const& c : j.at("classes")) {
      IsoClass k;
      k.size                = c.at("size").get<std::uint64_t>();
      k.representative_rank = c.at("representative_rank").get<std::uint64_t>();
      k.generates_group     = c.at("generates_group").get<bool>();
      k.is_subgroup         = c.at("is_subgroup").get<bool>();
      k.torsion_order       = c.at("torsion_order").get<std::size_t>();
      k.orbit_count         = c.value("orbit_count", std::size_t(0));
      k.form.order          = r.index;
      k.form.table = c.at("canonical_form").get<std::vector<loop_element>>();
      if (k.form.table.size() != r.index * r.index) {
        throw ValidationError("report: canonical form has the wrong size");
      }
      r.classes.push_back(std::move(k));
    }
    if (r.classes.size() != r.phi) {
      throw ValidationError("report: class count does not match phi");
    }
    if (j.contains("orbits")) {
      auto const& o = j.at("orbits");
      OrbitReport orbits;
      orbits.acting_order    = o.at("acting_order").get<std::size_t>();
      orbits.orbit_count     = o.at("orbit_count").get<std::size_t>();
      orbits.orbit_lengths   = o.at("orbit_lengths").get<std::vector<std::uint64_t>>();
      orbits.representatives = o.at("representatives").get<std::vector<std::uint64_t>>();
      r.orbits               = std::move(orbits);
    }
    if (j.contains("orbits_refine_classes")) {
      r.orbits_refine_classes = j.at("orbits_refine_classes").get<bool>();
    }
    return r;
  }

  json census_to_json(CensusResult const& result) {
    json j;
    j["schema_version"] = JSON_SCHEMA_VERSION;
    j["n"]              = result.n;
    j["labeled_count"]  = result.labeled_count;
    j["classes"]        = result.classes;
    j["canonical_method"] = method_name(canonical_method_for(result.n));
    json reps             = json::array();
    for (std::size_t i = 0; i < result.representatives.size(); ++i) {
      reps.push_back({{"table", result.representatives[i].table},
                      {"count", result.class_sizes[i]}});
    }
    j["representatives"] = std::move(reps);
    return j;
  }

  std::string census_csv_header() {
    return "n,labeled_count,T_n,wall_seconds";
  }

  std::string census_csv_row(CensusResult const& result) {
    std::ostringstream out;
    out << result.n << ',' << result.labeled_count << ',' << result.classes
        << ',' << fixed(result.seconds);
    return out.str();
  }

  std::string report_csv_header() {
    return "group,subgroup,m,n,phi,orbit_count,wall_seconds";
  }

  std::string report_csv_row(IsoClassReport const& r) {
    std::ostringstream out;
    std::string        subgroup;
    for (std::size_t i = 0; i < r.subgroup.size(); ++i) {
      subgroup += (i == 0 ? "" : " ") + std::to_string(r.subgroup[i]);
    }
    out << csv_field(r.group_label.empty() ? r.group_hash.substr(0, 16)
                                           : r.group_label)
        << ',' << csv_field(subgroup) << ',' << r.subgroup_order << ','
        << r.index << ',' << r.phi << ',';
    if (r.orbits) {
      out << r.orbits->orbit_count;
    }
    out << ',' << fixed(r.seconds);
    return out.str();
  }

  std::string element_set(GroupTable const&                group,
                          std::vector<element_type> const& elements) {
    std::string out = "{";
    for (std::size_t i = 0; i < elements.size(); ++i) {
      out += (i == 0 ? "" : ", ") + group.name(elements[i]);
    }
    return out + "}";
  }

}  // namespace nrt
