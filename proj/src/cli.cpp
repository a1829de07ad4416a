// nrtkit - enumeration and classification of normalized right transversals

#include "nrt/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "nrt/cache.hpp"
#include "nrt/catalog.hpp"
#include "nrt/error.hpp"
#include "nrt/group_expr.hpp"
#include "nrt/loop_iso.hpp"
#include "nrt/orbit.hpp"
#include "nrt/serialize.hpp"
#include "nrt/subgroups.hpp"
#include "nrt/transversal.hpp"
#include "nrt/verify.hpp"

namespace nrt {

  namespace {
    // Thrown by a command to end with exit code 1 after its output.
    struct VerificationFailed {};

    char const* yes_no(bool b) {
      return b ? "yes" : "no";
    }

    std::string seconds(double s) {
      char buf[32];
      std::snprintf(buf, sizeof(buf), "%.3f s", s);
      return buf;
    }

    std::string join(std::vector<std::uint64_t> const& v, char const* sep = " ") {
      std::string out;
      for (std::size_t i = 0; i < v.size(); ++i) {
        out += (i == 0 ? "" : sep) + std::to_string(v[i]);
      }
      return out;
    }

    struct Common {
      std::string format = "table";
      std::size_t jobs   = 1;
    };

    void add_format(CLI::App* cmd, Common& c) {
      cmd->add_option("--format", c.format, "Output format")
          ->check(CLI::IsMember({"table", "json", "csv"}));
    }

    void add_jobs(CLI::App* cmd, Common& c) {
      cmd->add_option("--jobs,-j", c.jobs, "Worker threads")
          ->check(CLI::Range(std::size_t(1), std::size_t(256)));
    }

    void group_info(std::string const& text, Common const& c, std::ostream& out) {
      auto const g = make_group(text);
      json       summary;
      summary["expression"] = render(parse_group_expr(text));
      summary["abelian"]    = g.is_abelian();
      summary["center_order"] = center(g).size();
      std::map<std::size_t, std::size_t> element_orders;
      for (element_type x = 0; x < g.order(); ++x) {
        ++element_orders[g.element_order(x)];
      }
      std::map<std::size_t, std::size_t> subgroup_orders;
      std::optional<std::size_t>         subgroup_count;
      std::size_t                        normal_count = 0;
      if (g.order() <= Limits{}.subgroup_bound) {
        auto all       = subgroups_all(g);
        subgroup_count = all.size();
        for (auto const& s : all) {
          ++subgroup_orders[s.size()];
          normal_count += s.is_normal() ? 1 : 0;
        }
      }
      if (c.format == "json") {
        json j = group_to_json(g);
        json eo, so;
        for (auto [k, v] : element_orders) {
          eo[std::to_string(k)] = v;
        }
        for (auto [k, v] : subgroup_orders) {
          so[std::to_string(k)] = v;
        }
        summary["element_orders"] = eo;
        if (subgroup_count) {
          summary["subgroup_count"]   = *subgroup_count;
          summary["normal_subgroups"] = normal_count;
          summary["subgroup_orders"]  = so;
        }
        j["summary"] = summary;
        out << j.dump(2) << '\n';
        return;
      }
      if (c.format == "csv") {
        out << "expression,order,abelian,center_order,subgroups\n"
            << '"' << summary["expression"].get<std::string>() << "\","
            << g.order() << ',' << (g.is_abelian() ? 1 : 0) << ','
            << center(g).size() << ','
            << (subgroup_count ? std::to_string(*subgroup_count) : "") << '\n';
        return;
      }
      out << "expression   " << summary["expression"].get<std::string>() << '\n'
          << "order        " << g.order() << '\n'
          << "abelian      " << yes_no(g.is_abelian()) << '\n'
          << "center       order " << center(g).size() << '\n'
          << "generators  ";
      for (auto x : g.generators()) {
        out << ' ' << g.name(x);
      }
      out << "\nelement orders";
      for (auto [k, v] : element_orders) {
        out << "  " << k << ":" << v;
      }
      out << '\n';
      if (subgroup_count) {
        out << "subgroups    " << *subgroup_count << " (" << normal_count
            << " normal)\n";
        for (auto [k, v] : subgroup_orders) {
          out << "  order " << std::setw(3) << k << ": " << v << '\n';
        }
      } else {
        out << "subgroups    not enumerated (order above "
            << Limits{}.subgroup_bound << ")\n";
      }
      out << "hash         " << g.content_hash() << '\n';
    }

    void list_subgroups(std::string const& text, Common const& c, std::ostream& out) {
      auto const g   = make_group(text);
      auto const all = subgroups_all(g);
      if (c.format == "json") {
        json list = json::array();
        for (std::size_t i = 0; i < all.size(); ++i) {
          list.push_back({{"index", i},
                          {"order", all[i].size()},
                          {"normal", all[i].is_normal()},
                          {"core_order", core(all[i]).size()},
                          {"selector", gens_selector(all[i])},
                          {"elements", all[i].elements()}});
        }
        json j;
        j["schema_version"] = JSON_SCHEMA_VERSION;
        j["group_hash"]     = g.content_hash();
        j["subgroups"]      = list;
        out << j.dump(2) << '\n';
        return;
      }
      if (c.format == "csv") {
        out << "index,order,normal,core_order,selector\n";
        for (std::size_t i = 0; i < all.size(); ++i) {
          out << i << ',' << all[i].size() << ',' << (all[i].is_normal() ? 1 : 0)
              << ',' << core(all[i]).size() << ",\"" << gens_selector(all[i])
              << "\"\n";
        }
        return;
      }
      out << "index  order  normal  core  selector\n";
      for (std::size_t i = 0; i < all.size(); ++i) {
        out << std::setw(5) << i << "  " << std::setw(5) << all[i].size() << "  "
            << std::setw(6) << yes_no(all[i].is_normal()) << "  " << std::setw(4)
            << core(all[i]).size() << "  " << gens_selector(all[i]) << '\n';
      }
    }

    void print_report(IsoClassReport const& r, GroupTable const& g,
                      Common const& c, std::ostream& out) {
      if (c.format == "json") {
        out << report_to_json(r).dump(2) << '\n';
        return;
      }
      if (c.format == "csv") {
        out << report_csv_header() << '\n' << report_csv_row(r) << '\n';
        return;
      }
      out << "group        " << r.group_label << '\n'
          << "subgroup     " << element_set(g, r.subgroup) << '\n'
          << "m, n         " << r.subgroup_order << ", " << r.index << '\n'
          << "normal       " << yes_no(r.normal) << '\n'
          << "corefree     " << yes_no(r.corefree) << '\n'
          << "|T(G, H)|    " << r.nrt_count << '\n'
          << "phi          " << r.phi << '\n';
      out << "class      size  rep rank  generates G  subgroup  torsion";
      if (r.orbits) {
        out << "  orbits";
      }
      out << '\n';
      for (std::size_t i = 0; i < r.classes.size(); ++i) {
        auto const& k = r.classes[i];
        out << std::setw(5) << i << std::setw(10) << k.size << std::setw(10)
            << k.representative_rank << std::setw(13) << yes_no(k.generates_group)
            << std::setw(10) << yes_no(k.is_subgroup) << std::setw(9)
            << k.torsion_order;
        if (r.orbits) {
          out << std::setw(8) << k.orbit_count;
        }
        out << '\n';
      }
      if (r.orbits) {
        auto lengths = r.orbits->orbit_lengths;
        std::sort(lengths.begin(), lengths.end(), std::greater<>());
        out << "Aut_H G      order " << r.orbits->acting_order << ", "
            << r.orbits->orbit_count << " orbits, lengths " << join(lengths)
            << '\n'
            << "orbits refine classes  "
            << yes_no(r.orbits_refine_classes.value_or(false)) << '\n';
      }
      out << "time         " << seconds(r.seconds) << '\n';
    }

    std::optional<std::filesystem::path> cache_dir(std::string const& flag) {
      if (!flag.empty()) {
        return std::filesystem::path(flag);
      }
      if (char const* env = std::getenv(CACHE_DIR_ENV); env != nullptr && *env) {
        return std::filesystem::path(env);
      }
      return std::nullopt;
    }
  }  // namespace

  int run_cli(std::vector<std::string> const& args,
              std::ostream&                   out,
              std::ostream&                   err) {
    CLI::App app{"nrtkit: normalized right transversals, their induced right "
                 "loops and isomorphism classes",
                 "nrtkit"};
    app.require_subcommand(1);
    app.set_version_flag("--version", ENGINE_VERSION);

    Common      common;
    std::string expr, selector, cache_flag, suite = "paper", ambient = "catalog";
    std::size_t n = 0, max_order = 120;
    std::uint64_t bound = 1'000'000;
    bool        orbits = false, terms = false, quick = false;

    auto* group = app.add_subcommand("group", "Group commands");
    group->require_subcommand(1);
    auto* info = group->add_subcommand("info", "Order, subgroups and hash of a group");
    info->add_option("expr", expr, "Group expression")->required();
    add_format(info, common);

    auto* subgroups = app.add_subcommand("subgroups", "List all subgroups");
    subgroups->add_option("expr", expr, "Group expression")->required();
    add_format(subgroups, common);

    auto* nrt = app.add_subcommand("nrt", "Transversal commands");
    nrt->require_subcommand(1);
    auto* count = nrt->add_subcommand("count", "Number of NRTs of H in G");
    count->add_option("expr", expr, "Group expression")->required();
    count->add_option("--subgroup,-s", selector, "Subgroup selector")->required();

    auto* classify = app.add_subcommand("classify",
                                        "Isomorphism classes of the induced right loops");
    classify->add_option("expr", expr, "Group expression")->required();
    classify->add_option("--subgroup,-s", selector, "Subgroup selector")->required();
    classify->add_flag("--orbits", orbits, "Also compute Aut_H G orbits");
    classify->add_option("--cache", cache_flag,
                         std::string("Report cache directory (default $")
                             + CACHE_DIR_ENV + ")");
    classify->add_option("--bound", bound, "Enumeration bound on |T(G, H)|");
    add_format(classify, common);
    add_jobs(classify, common);

    auto* census_cmd = app.add_subcommand("census", "Right loops of order n up to isomorphism");
    census_cmd->add_option("n", n, "Order")->required();
    add_format(census_cmd, common);
    add_jobs(census_cmd, common);

    auto* burnside = app.add_subcommand(
        "burnside", "Orbits of H acting on T(G, H) by conjugation (Burnside count)");
    burnside->add_option("expr", expr, "Group expression")->required();
    burnside->add_option("--subgroup,-s", selector, "Subgroup selector")->required();
    burnside->add_flag("--terms", terms, "Print every fixed-point count");

    auto* scan = app.add_subcommand("scan", "Check the statements about phi on catalog pairs");
    scan->add_option("--max-order", max_order, "Largest group order classified");
    scan->add_option("--ambient", ambient,
                     "\"catalog\" (subgroups of Sym(4) plus fixtures) or a group expression");
    scan->add_option("--bound", bound, "Enumeration bound on |T(G, H)|");
    add_format(scan, common);
    add_jobs(scan, common);

    auto* verify = app.add_subcommand("verify", "Run a reference suite");
    verify->add_option("--suite", suite, "Suite name")->check(CLI::IsMember({"paper"}));
    verify->add_flag("--quick", quick, "Skip classifying T(Sym(5), Sym(4))");
    add_jobs(verify, common);

    try {
      std::vector<std::string> reversed(args.rbegin(), args.rend());
      app.parse(reversed);
    } catch (CLI::ParseError const& e) {
      int code = app.exit(e, out, err);
      return code == 0 ? EXIT_OK : EXIT_USAGE;
    }

    try {
      if (info->parsed()) {
        group_info(expr, common, out);
      } else if (subgroups->parsed()) {
        list_subgroups(expr, common, out);
      } else if (count->parsed()) {
        auto g = make_group(expr);
        CosetDecomposition d(resolve_subgroup(g, selector));
        out << nrt_count(d) << '\n';
      } else if (classify->parsed()) {
        auto const      g = make_group(expr);
        auto const      h = resolve_subgroup(g, selector);
        CosetDecomposition const d(h);
        std::optional<IsoClassReport> report;
        auto const dir = cache_dir(cache_flag);
        if (dir) {
          ReportCache cache(*dir);
          report = cache.load(g.content_hash(), h.elements(), &err);
          if (report && orbits && !report->orbits) {
            report.reset();
          }
          if (report) {
            report->group_label = expr;
          }
        }
        if (!report) {
          ClassifyOptions o;
          o.orbits            = orbits;
          o.jobs              = common.jobs;
          o.enumeration_bound = bound;
          o.group_label       = expr;
          report              = classify_pair(d, o);
          if (dir) {
            ReportCache(*dir).store(*report);
          }
        }
        print_report(*report, g, common, out);
      } else if (census_cmd->parsed()) {
        CensusOptions o;
        o.jobs      = common.jobs;
        auto result = census(n, o);
        if (common.format == "json") {
          out << census_to_json(result).dump(2) << '\n';
        } else if (common.format == "csv") {
          out << census_csv_header() << '\n' << census_csv_row(result) << '\n';
        } else {
          out << result.classes << '\n'
              << "T_" << n << " = " << result.classes << " right loops up to "
              << "isomorphism (" << result.labeled_count << " labeled, "
              << seconds(result.seconds) << ")\n";
        }
      } else if (burnside->parsed()) {
        auto g = make_group(expr);
        CosetDecomposition d(resolve_subgroup(g, selector));
        if (terms) {
          for (auto h : d.subgroup().elements()) {
            out << "fix(" << g.name(h) << ") = " << conjugation_fixed_count(d, h)
                << '\n';
          }
        }
        out << burnside_conjugation_count(d) << '\n';
      } else if (scan->parsed()) {
        ScanOptions o;
        o.max_order         = max_order;
        o.ambient           = ambient;
        o.jobs              = common.jobs;
        o.enumeration_bound = bound;
        auto v              = scan_theorems(o);
        if (common.format == "json") {
          out << scan_to_json(v).dump(2) << '\n';
        } else if (common.format == "csv") {
          out << "group,subgroup,source,m,n,normal,corefree,phi,orbit_count,"
                 "method,skipped,wall_seconds\n";
          for (auto const& p : v.pairs) {
            out << '"' << p.group << "\",\"" << p.subgroup << "\",\"" << p.source
                << "\"," << p.m << ',' << p.n << ',' << (p.normal ? 1 : 0) << ','
                << (p.corefree ? 1 : 0) << ','
                << (p.phi ? std::to_string(*p.phi) : "") << ','
                << (p.orbit_count ? std::to_string(*p.orbit_count) : "") << ','
                << p.method << ",\"" << p.skipped << "\","
                << seconds(p.seconds).substr(0, seconds(p.seconds).size() - 2)
                << '\n';
          }
        } else {
          out << v.label << " over " << v.pairs.size() << " pairs (not a proof)\n";
          out << "    |G|    m    n  normal  corefree    phi  orbits  group / subgroup\n";
          for (auto const& p : v.pairs) {
            out << std::setw(7) << p.group_order << std::setw(5) << p.m
                << std::setw(5) << p.n << std::setw(8) << yes_no(p.normal)
                << std::setw(10) << yes_no(p.corefree) << std::setw(7)
                << (p.phi ? std::to_string(*p.phi) : "-") << std::setw(8)
                << (p.orbit_count ? std::to_string(*p.orbit_count) : "-") << "  "
                << p.group << " / " << p.subgroup;
            if (p.method == "burnside") {
              out << "  [conjugation orbits]";
            }
            out << '\n';
          }
          out << "skipped pairs: " << v.skipped << '\n';
          for (auto const& p : v.pairs) {
            if (!p.skipped.empty()) {
              out << "  " << p.group << " / " << p.subgroup << ": " << p.skipped
                  << '\n';
            }
          }
          for (auto const& t : v.theorems) {
            out << (t.passed ? "PASS " : "FAIL ") << t.name;
            for (auto i : t.counterexamples) {
              out << "\n     counterexample: " << v.pairs[i].group << " / "
                  << v.pairs[i].subgroup;
              for (auto const& f : v.pairs[i].expectation_failures) {
                out << " (" << f << ")";
              }
            }
            out << '\n';
          }
          out << "time " << seconds(v.seconds) << '\n';
        }
        if (!v.passed()) {
          throw VerificationFailed{};
        }
      } else if (verify->parsed()) {
        SuiteOptions o;
        o.jobs                = common.jobs;
        o.sym5_classification = !quick;
        auto results          = run_paper_suite(o, &out);
        auto failed           = std::count_if(results.begin(), results.end(),
                                              [](SuiteCheck const& c) { return !c.passed; });
        out << results.size() - failed << " passed, " << failed << " failed\n";
        if (failed != 0) {
          throw VerificationFailed{};
        }
      }
    } catch (VerificationFailed const&) {
      return EXIT_VERIFICATION_FAILURE;
    } catch (ParseError const& e) {
      err << "error: " << e.what() << "\n";
      return EXIT_USAGE;
    } catch (ResourceError const& e) {
      err << "error: " << e.what() << '\n';
      return EXIT_RESOURCE;
    } catch (ValidationError const& e) {
      err << "error: " << e.what() << '\n';
      return EXIT_USAGE;
    } catch (PreconditionError const& e) {
      err << "error: " << e.what() << '\n';
      return EXIT_USAGE;
    } catch (std::exception const& e) {
      err << "internal error: " << e.what() << '\n';
      return EXIT_VERIFICATION_FAILURE;
    }
    return EXIT_OK;
  }

}  // namespace nrt
