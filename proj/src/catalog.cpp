// nrtkit - enumeration and classification of normalized right transversals

#include "nrt/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <functional>
#include <map>
#include <set>

#include "nrt/automorphism.hpp"
#include "nrt/error.hpp"
#include "nrt/group_expr.hpp"
#include "nrt/orbit.hpp"
#include "nrt/subgroups.hpp"
#include "nrt/transversal.hpp"

namespace nrt {

  namespace {
    std::string trim(std::string_view s) {
      auto b = s.find_first_not_of(" \t");
      if (b == std::string_view::npos) {
        return {};
      }
      auto e = s.find_last_not_of(" \t");
      return std::string(s.substr(b, e - b + 1));
    }

    std::vector<std::string> split(std::string_view s, char sep) {
      std::vector<std::string> out;
      std::size_t              start = 0;
      while (true) {
        auto pos = s.find(sep, start);
        out.push_back(trim(s.substr(start, pos - start)));
        if (pos == std::string_view::npos) {
          return out;
        }
        start = pos + 1;
      }
    }

    std::size_t parse_count(std::string const& text, std::size_t position) {
      if (text.empty()
          || !std::all_of(text.begin(), text.end(),
                          [](unsigned char c) { return std::isdigit(c); })
          || text.size() > 9) {
        throw ParseError("expected a non-negative integer, got \"" + text + "\"",
                         position);
      }
      return std::stoul(text);
    }

    double since(std::chrono::steady_clock::time_point start) {
      return std::chrono::duration<double>(std::chrono::steady_clock::now()
                                           - start)
          .count();
    }

    void check_expectations(PairRecord& rec, Expectation const& e,
                            IsoClassReport const* report) {
      if (e.phi && rec.phi && *rec.phi != *e.phi) {
        rec.expectation_failures.push_back(
            "phi = " + std::to_string(*rec.phi) + ", expected "
            + std::to_string(*e.phi));
      }
      if (e.phi_greater_than && rec.phi && *rec.phi <= *e.phi_greater_than) {
        rec.expectation_failures.push_back(
            "phi = " + std::to_string(*rec.phi) + ", expected more than "
            + std::to_string(*e.phi_greater_than));
      }
      if (e.orbit_lengths) {
        if (report == nullptr || !report->orbits) {
          rec.expectation_failures.push_back("orbit lengths not computed");
        } else {
          auto lengths = report->orbits->orbit_lengths;
          std::sort(lengths.begin(), lengths.end());
          if (lengths != *e.orbit_lengths) {
            rec.expectation_failures.push_back("orbit lengths differ");
          }
        }
      }
      if (e.orbits_equal_phi
          && (!rec.orbit_count || !rec.phi || *rec.orbit_count != *rec.phi)) {
        rec.expectation_failures.push_back("orbit count differs from phi");
      }
    }

    PairRecord evaluate(GroupTable const&     group,
                        std::string const&    label,
                        SubgroupHandle const& subgroup,
                        std::string const&    source,
                        CatalogPair const*    fixture,
                        ScanOptions const&    options) {
      auto const start = std::chrono::steady_clock::now();
      PairRecord rec;
      rec.group       = label;
      rec.subgroup    = gens_selector(subgroup);
      rec.source      = source;
      rec.group_order = group.order();
      rec.m           = subgroup.size();
      rec.n           = subgroup.index();
      rec.normal      = subgroup.is_normal();
      rec.corefree    = core(subgroup).size() == 1;
      CosetDecomposition const d(subgroup);
      std::optional<IsoClassReport> report;
      try {
        if (group.order() > options.max_order) {
          rec.skipped = "group order exceeds --max-order";
        } else if (fixture != nullptr && fixture->burnside_only) {
          rec.method = "burnside";
          rec.phi    = burnside_conjugation_count(d);
        } else if (nrt_count(d) > options.enumeration_bound) {
          rec.skipped = "|T(G, H)| = " + std::to_string(nrt_count(d))
                        + " exceeds the enumeration bound";
        } else {
          ClassifyOptions copts;
          copts.orbits            = group.order() <= options.limits.automorphism_bound;
          copts.jobs              = options.jobs;
          copts.enumeration_bound = options.enumeration_bound;
          copts.limits            = options.limits;
          copts.group_label       = label;
          auto detailed           = classify_pair_detailed(d, copts);
          rec.method              = "classify";
          rec.phi                 = detailed.report.phi;
          if (detailed.report.orbits) {
            rec.orbit_count           = detailed.report.orbits->orbit_count;
            rec.orbits_refine_classes = detailed.report.orbits_refine_classes;
            if (rec.corefree) {
              bool transitive = true;
              for (auto const& c : detailed.report.classes) {
                if (c.generates_group && c.orbit_count != 1) {
                  transitive = false;
                }
              }
              rec.generating_classes_transitive = transitive;
            }
          }
          report = std::move(detailed.report);
        }
      } catch (ResourceError const& e) {
        rec.skipped = e.what();
        rec.phi.reset();
      }
      if (fixture != nullptr && rec.skipped.empty()) {
        check_expectations(rec, fixture->expected, report ? &*report : nullptr);
      }
      rec.seconds = since(start);
      return rec;
    }

    void add_check(ScanVerdict&                                   v,
                   std::string                                    name,
                   std::function<bool(PairRecord const&)> const& holds) {
      TheoremCheck check;
      check.name = std::move(name);
      for (std::size_t i = 0; i < v.pairs.size(); ++i) {
        if (v.pairs[i].skipped.empty() && !holds(v.pairs[i])) {
          check.passed = false;
          check.counterexamples.push_back(i);
        }
      }
      v.theorems.push_back(std::move(check));
    }
  }  // namespace

  SubgroupHandle resolve_subgroup(GroupTable const& group,
                                  std::string_view  selector,
                                  Limits const&     limits) {
    std::string const text  = trim(selector);
    auto const        colon = text.find(':');
    std::string const kind  = text.substr(0, colon);
    std::string const rest  = colon == std::string::npos ? "" : text.substr(colon + 1);
    if (kind == "gens") {
      std::vector<element_type> gens;
      if (!trim(rest).empty()) {
        for (auto const& token : split(rest, ';')) {
          auto x = group.find(token);
          if (!x) {
            throw ParseError("unknown element \"" + token + "\"", colon + 1);
          }
          gens.push_back(*x);
        }
      }
      return generate_subgroup(group, gens);
    }
    if (kind == "index") {
      auto k   = parse_count(trim(rest), colon + 1);
      auto all = subgroups_all(group, limits);
      if (k >= all.size()) {
        throw PreconditionError("subgroup index " + std::to_string(k)
                                + " out of range (" + std::to_string(all.size())
                                + " subgroups)");
      }
      return all[k];
    }
    if (kind == "order") {
      auto parts = split(rest, ',');
      auto k     = parse_count(parts[0], colon + 1);
      for (auto const& s : subgroups_all(group, limits)) {
        if (s.size() != k) {
          continue;
        }
        bool ok = true;
        for (std::size_t i = 1; i < parts.size(); ++i) {
          auto const& flag = parts[i];
          if (flag == "normal") {
            ok = ok && s.is_normal();
          } else if (flag == "nonnormal") {
            ok = ok && !s.is_normal();
          } else if (flag == "corefree") {
            ok = ok && core(s).size() == 1;
          } else if (flag == "noncorefree") {
            ok = ok && core(s).size() != 1;
          } else {
            throw ParseError("unknown subgroup flag \"" + flag + "\"", colon + 1);
          }
        }
        if (ok) {
          return s;
        }
      }
      throw PreconditionError("no subgroup matches \"" + text + "\"");
    }
    throw ParseError("unknown selector \"" + text
                         + "\" (use gens:..., index:k or order:k[,flags])",
                     0);
  }

  std::string gens_selector(SubgroupHandle const& subgroup) {
    auto const&               group = subgroup.parent();
    std::vector<element_type> gens;
    auto                      current = trivial_subgroup(group);
    for (auto x : subgroup.elements()) {
      if (!current.contains(x)) {
        gens.push_back(x);
        current = generate_subgroup(group, gens);
      }
    }
    std::string out = "gens:";
    for (std::size_t i = 0; i < gens.size(); ++i) {
      auto const& name  = group.name(gens[i]);
      bool        plain = name.find(';') == std::string::npos
                   && group.find(name) == gens[i];
      out += (i == 0 ? "" : ";") + (plain ? name : "#" + std::to_string(gens[i]));
    }
    return out;
  }

  std::vector<SubgroupHandle> subgroup_class_representatives(GroupTable const& group,
                                                             Limits const& limits) {
    std::vector<SubgroupHandle>         reps;
    std::set<std::vector<element_type>> seen;
    for (auto const& s : subgroups_all(group, limits)) {
      if (seen.contains(s.elements())) {
        continue;
      }
      reps.push_back(s);
      for (element_type g = 0; g < group.order(); ++g) {
        seen.insert(conjugate(s, g).elements());
      }
    }
    return reps;
  }

  std::string permutation_group_expr(SubgroupHandle const& subgroup) {
    auto const& group = subgroup.parent();
    if (!group.has_permutation_representation()) {
      throw PreconditionError("group has no permutation representation");
    }
    std::vector<Permutation> perms;
    for (auto x : subgroup.elements()) {
      perms.push_back(group.permutation(x));
    }
    auto        gens = generating_subset(perms);
    std::string out  = "Perm[" + std::to_string(group.degree()) + ":";
    if (gens.empty()) {
      return out + " ()]";
    }
    for (std::size_t i = 0; i < gens.size(); ++i) {
      out += (i == 0 ? " " : "; ") + gens[i].to_cycles();
    }
    return out + "]";
  }

  std::vector<CatalogPair> fixture_pairs() {
    std::vector<CatalogPair> pairs;
    auto add = [&](std::string name, std::string group, std::string sel,
                   Expectation e, bool burnside_only = false) {
      pairs.push_back({std::move(name), std::move(group), std::move(sel),
                       std::move(e), burnside_only});
    };
    Expectation e;

    e               = {};
    e.origin        = Origin::published;
    e.phi           = 6;
    e.orbit_lengths = std::vector<std::uint64_t>{1, 1, 1, 1, 2, 2};
    add("D8 with a non-normal C2", "D(8)", "gens:(1,3)", e);

    e        = {};
    e.origin = Origin::published;
    e.phi    = 20;
    add("D12 with a non-normal C2", "D(12)", "order:2,nonnormal", e);

    e               = {};
    e.origin        = Origin::published;
    e.phi           = 5;
    e.orbit_lengths = std::vector<std::uint64_t>{4, 4, 8, 8, 8};
    add("Alt(4) with a C2", "Alt(4)", "gens:(1,2)(3,4)", e);

    e                  = {};
    e.origin           = Origin::published;
    e.phi_greater_than = 4;
    add("Alt(4) x C2 with a corefree subgroup of index 6", "Alt(4) x C(2)",
        "order:4,corefree", e);

    e        = {};
    e.origin = Origin::derived;
    e.phi    = 146;
    add("Alt(4) x C2 with a corefree subgroup of index 6 (regression)",
        "Alt(4) x C(2)", "order:4,corefree", e);

    add("Q8 : C3 with a C4", "Q8 : C(3) [gens 4 6]", "order:4", {});

    add("C3 : C4", "C(3) : C(4) [inv]", "all", {});

    e        = {};
    e.origin = Origin::published;
    e.phi    = 44;
    add("Sym(4) with a point stabilizer", "Sym(4)", "gens:(1,2);(1,2,3)", e);

    e        = {};
    e.origin = Origin::published;
    e.phi    = 3;
    add("Sym(4) with a D8", "Sym(4)", "gens:(1,3);(1,2,3,4)", e);

    e                  = {};
    e.origin           = Origin::published;
    e.orbits_equal_phi = true;
    add("Alt(4) with a point stabilizer", "Alt(4)", "gens:(1,2,3)", e);

    e        = {};
    e.origin = Origin::published;
    e.phi    = 14022;
    add("Sym(5) with a point stabilizer", "Sym(5)",
        "gens:(1,2);(1,2,3);(1,2,3,4)", e, true);
    return pairs;
  }

  bool ScanVerdict::passed() const {
    return std::all_of(theorems.begin(), theorems.end(),
                       [](TheoremCheck const& t) { return t.passed; });
  }

  ScanVerdict scan_theorems(ScanOptions const& options) {
    auto const  start = std::chrono::steady_clock::now();
    ScanVerdict v;
    bool const  catalog = options.ambient == "catalog";
    GroupTable const ambient =
        make_group(catalog ? "Sym(4)" : options.ambient, options.limits);
    for (auto const& rep : subgroup_class_representatives(ambient, options.limits)) {
      auto const label = permutation_group_expr(rep);
      auto const group = make_group(label, options.limits);
      for (auto const& h : subgroups_all(group, options.limits)) {
        v.pairs.push_back(evaluate(group, label, h, "ambient", nullptr, options));
      }
    }
    if (catalog) {
      for (auto const& f : fixture_pairs()) {
        auto const group = make_group(f.group, options.limits);
        if (f.subgroup == "all") {
          for (auto const& h : subgroups_all(group, options.limits)) {
            v.pairs.push_back(evaluate(group, f.group, h, f.name, &f, options));
          }
        } else {
          auto h = resolve_subgroup(group, f.subgroup, options.limits);
          v.pairs.push_back(evaluate(group, f.group, h, f.name, &f, options));
        }
      }
    }
    for (auto const& p : v.pairs) {
      v.skipped += p.skipped.empty() ? 0 : 1;
    }

    add_check(v, "phi is never 2", [](PairRecord const& p) {
      return *p.phi != 2;
    });
    add_check(v, "phi is never 4", [](PairRecord const& p) {
      return *p.phi != 4;
    });
    add_check(v, "phi = 1 exactly when H is normal", [](PairRecord const& p) {
      return (*p.phi == 1) == p.normal;
    });
    add_check(v, "phi = 3 exactly when H is non-normal of index 3",
              [](PairRecord const& p) {
                return (*p.phi == 3) == (p.n == 3 && !p.normal);
              });
    add_check(v, "Aut_H G orbits refine isomorphism classes",
              [](PairRecord const& p) {
                return p.orbits_refine_classes.value_or(true);
              });
    add_check(v, "classes generating G are single orbits (corefree H)",
              [](PairRecord const& p) {
                return p.generating_classes_transitive.value_or(true);
              });
    add_check(v, "fixture expectations", [](PairRecord const& p) {
      return p.expectation_failures.empty();
    });
    v.seconds = since(start);
    return v;
  }

  json scan_to_json(ScanVerdict const& v) {
    json j;
    j["schema_version"] = JSON_SCHEMA_VERSION;
    j["label"]          = v.label;
    j["passed"]         = v.passed();
    j["skipped"]        = v.skipped;
    json pairs          = json::array();
    for (auto const& p : v.pairs) {
      json r;
      r["group"]       = p.group;
      r["subgroup"]    = p.subgroup;
      r["source"]      = p.source;
      r["group_order"] = p.group_order;
      r["m"]           = p.m;
      r["n"]           = p.n;
      r["normal"]      = p.normal;
      r["corefree"]    = p.corefree;
      r["phi"]         = p.phi ? json(*p.phi) : json(nullptr);
      r["orbit_count"] = p.orbit_count ? json(*p.orbit_count) : json(nullptr);
      r["method"]      = p.method;
      if (!p.skipped.empty()) {
        r["skipped"] = p.skipped;
      }
      if (!p.expectation_failures.empty()) {
        r["expectation_failures"] = p.expectation_failures;
      }
      pairs.push_back(std::move(r));
    }
    j["pairs"]    = std::move(pairs);
    json theorems = json::array();
    for (auto const& t : v.theorems) {
      theorems.push_back({{"name", t.name},
                          {"passed", t.passed},
                          {"counterexamples", t.counterexamples}});
    }
    j["theorems"] = std::move(theorems);
    return j;
  }

}  // namespace nrt
