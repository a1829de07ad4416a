// nrtkit - enumeration and classification of normalized right transversals

#include "nrt/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <ostream>
#include <set>
#include <sstream>
#include <type_traits>
#include <utility>

#include "nrt/automorphism.hpp"
#include "nrt/catalog.hpp"
#include "nrt/error.hpp"
#include "nrt/group_expr.hpp"
#include "nrt/loop_iso.hpp"
#include "nrt/orbit.hpp"
#include "nrt/subgroups.hpp"
#include "nrt/transversal.hpp"

namespace nrt {

  namespace {
    // An empty string means the check passed; anything else is the reason
    // it failed.
    using Outcome = std::string;

    template <typename T, typename U>
    Outcome expect_eq(std::string const& what, T const& got, U const& want) {
      bool equal;
      if constexpr (std::is_integral_v<T> && std::is_integral_v<U>
                    && !std::is_same_v<T, bool>) {
        equal = std::cmp_equal(got, want);
      } else {
        equal = got == want;
      }
      if (equal) {
        return {};
      }
      std::ostringstream out;
      out << what << " = " << got << ", expected " << want;
      return out.str();
    }

    Outcome all_of(std::initializer_list<Outcome> outcomes) {
      std::string out;
      for (auto const& o : outcomes) {
        if (!o.empty()) {
          out += (out.empty() ? "" : "; ") + o;
        }
      }
      return out;
    }

    // Listed permutations are composed right to left; x -> x^-1 is an
    // isomorphism from that product onto the table's.
    element_type written(GroupTable const& g, char const* cycles) {
      auto x = g.find(cycles);
      if (!x) {
        throw PreconditionError(std::string("unknown element ") + cycles);
      }
      return g.inv(*x);
    }

    std::vector<element_type> elements_of(GroupTable const&                  g,
                                          std::initializer_list<char const*> names) {
      std::vector<element_type> out;
      for (auto name : names) {
        out.push_back(written(g, name));
      }
      return out;
    }

    std::string sorted_lengths(OrbitReport const& o) {
      auto lengths = o.orbit_lengths;
      std::sort(lengths.begin(), lengths.end());
      std::string out;
      for (auto l : lengths) {
        out += (out.empty() ? "" : ",") + std::to_string(l);
      }
      return out;
    }

    PairClassification classify_with_orbits(CosetDecomposition const& d,
                                            std::size_t               jobs) {
      ClassifyOptions options;
      options.orbits = true;
      options.jobs   = jobs;
      return classify_pair_detailed(d, options);
    }

    Outcome corefree_transitivity(IsoClassReport const& r) {
      for (std::size_t i = 0; i < r.classes.size(); ++i) {
        if (r.classes[i].generates_group && r.classes[i].orbit_count != 1) {
          return "class " + std::to_string(i) + " splits into "
                 + std::to_string(r.classes[i].orbit_count) + " orbits";
        }
      }
      return {};
    }
  }  // namespace

  std::vector<SuiteCheck> run_paper_suite(SuiteOptions const& options,
                                          std::ostream*       progress) {
    std::vector<std::pair<std::string, std::function<Outcome()>>> checks;
    auto add = [&](std::string name, std::function<Outcome()> f) {
      checks.emplace_back(std::move(name), std::move(f));
    };
    std::size_t const jobs = options.jobs;

    add("<(1,3), (1,2,3,4)> has order 8", [] {
      std::vector<Permutation> gens{Permutation::from_cycles("(1,3)", 4),
                                    Permutation::from_cycles("(1,2,3,4)", 4)};
      return expect_eq("order", build_from_generators(4, gens).order(), 8);
    });
    add("Sym(4) has order 24", [] {
      return expect_eq("order", make_group("Sym(4)").order(), 24);
    });
    add("C(3) : C(4) [inv] is non-abelian with one subgroup of order 2", [] {
      auto        g     = make_group("C(3) : C(4) [inv]");
      std::size_t order2 = 0;
      for (auto const& s : subgroups_all(g)) {
        order2 += s.size() == 2 ? 1 : 0;
      }
      return all_of({expect_eq("order", g.order(), 12),
                     expect_eq("abelian", g.is_abelian(), false),
                     expect_eq("subgroups of order 2", order2, 1)});
    });
    add("Alt(4) x C(2) has order 24", [] {
      auto e = parse_group_expr("Alt(4) x C(2)");
      return all_of({expect_eq("direct product",
                               e.kind == GroupExpr::Kind::direct_product, true),
                     expect_eq("order", realize(e).order(), 24)});
    });
    add("a point stabilizer in Sym(4) is corefree", [] {
      auto g = make_group("Sym(4)");
      return expect_eq("|core|",
                       core(resolve_subgroup(g, "gens:(1,2);(1,2,3)")).size(), 1);
    });
    add("a C4 in Q8 : C3 has core of order 2", [] {
      auto g = make_group("Q8 : C(3) [gens 4 6]");
      auto h = resolve_subgroup(g, "order:4");
      return all_of({expect_eq("order", g.order(), 24),
                     expect_eq("|core|", core(h).size(), 2)});
    });
    add("normalizer of <(1,2)(3,4)> in Sym(4) has order 8", [] {
      auto g = make_group("Sym(4)");
      return expect_eq("order",
                       normalizer(resolve_subgroup(g, "gens:(1,2)(3,4)")).size(), 8);
    });
    add("|Aut(Alt(4))| = 24", [] {
      return expect_eq("|Aut|", automorphisms(make_group("Alt(4)")).size(), 24);
    });
    add("Aut_H G = {1, i_x} for D8 with H = <x> non-normal of order 2", [] {
      auto g     = make_group("D(8)");
      auto h     = resolve_subgroup(g, "gens:(1,3)");
      auto autos = aut_stabilizing(h);
      auto i_x   = inner_automorphism(g, *g.find("(1,3)"));
      bool has   = std::find(autos.begin(), autos.end(), i_x) != autos.end();
      return all_of({expect_eq("|Aut_H G|", autos.size(), 2),
                     expect_eq("contains i_x", has, true),
                     expect_eq("i_x is trivial", i_x.is_identity(), false)});
    });
    add("Aut_H G has order 8 for Alt(4) with H = <(1,2)(3,4)>", [] {
      auto g = make_group("Alt(4)");
      return expect_eq("|Aut_H G|",
                       aut_stabilizing(resolve_subgroup(g, "gens:(1,2)(3,4)")).size(),
                       8);
    });
    add("D8 with a non-normal C2: 8 NRTs, phi = 6, four fixed points and two "
        "orbits of length 2",
        [jobs] {
          auto g = make_group("D(8)");
          CosetDecomposition d(resolve_subgroup(g, "gens:(1,3)"));
          auto r = classify_with_orbits(d, jobs);
          // x = (1,3), y = (1,2,3,4)
          auto x   = written(g, "(1,3)");
          auto y   = written(g, "(1,2,3,4)");
          auto y2  = g.mul(y, y);
          auto y3  = g.mul(y2, y);
          auto xy  = g.mul(x, y);
          auto xy2 = g.mul(x, y2);
          auto xy3 = g.mul(x, y3);
          std::vector<std::vector<element_type>> fixed{
              {0, y, y2, y3}, {0, xy, y2, xy3}, {0, y, xy2, y3}, {0, xy, xy2, xy3}};
          std::vector<std::vector<element_type>> moved{{0, xy, y2, y3},
                                                       {0, xy, xy2, y3}};
          auto i_x = inner_automorphism(g, x);
          Outcome o;
          for (auto const& s : fixed) {
            auto t = transversal_from_elements(d, s);
            if (!(act(i_x, t) == t)) {
              o = "a listed fixed NRT is moved";
            }
          }
          std::set<std::uint32_t> orbits;
          for (auto const& s : moved) {
            auto t = transversal_from_elements(d, s);
            if (act(i_x, t) == t) {
              o = "a listed moved NRT is fixed";
            }
            orbits.insert(r.orbit_of_rank[nrt_rank(t)]);
          }
          return all_of({expect_eq("|T|", r.report.nrt_count, 8),
                         expect_eq("phi", r.report.phi, 6),
                         expect_eq("orbit lengths", sorted_lengths(*r.report.orbits),
                                   "1,1,1,1,2,2"),
                         expect_eq("distinct orbits of S5, S6", orbits.size(), 2),
                         corefree_transitivity(r.report), o});
        });
    add("D12 with a non-normal C2: phi = 20", [jobs] {
      auto g = make_group("D(12)");
      CosetDecomposition d(resolve_subgroup(g, "order:2,nonnormal"));
      ClassifyOptions    o;
      o.jobs = jobs;
      return expect_eq("phi", classify_pair(d, o).phi, 20);
    });
    add("Alt(4) with H = <(1,2)(3,4)>: phi = 5, orbit lengths 8, 8, 8, 4, 4",
        [jobs] {
          auto g = make_group("Alt(4)");
          CosetDecomposition d(resolve_subgroup(g, "gens:(1,2)(3,4)"));
          auto r = classify_with_orbits(d, jobs);
          // x = (1,2)(3,4), y = (1,3)(2,4), z = (1,2,3)
          auto x  = written(g, "(1,2)(3,4)");
          auto y  = written(g, "(1,3)(2,4)");
          auto z  = written(g, "(1,2,3)");
          auto zi = g.inv(z);
          auto m  = [&](element_type a, element_type b) { return g.mul(a, b); };
          std::vector<std::vector<element_type>> listed{
              {0, y, z, zi, m(y, zi), m(y, z)},
              {0, y, z, zi, m(y, zi), m(m(x, y), z)},
              {0, y, z, zi, m(m(x, y), zi), m(m(x, y), z)},
              {0, y, z, zi, m(m(x, y), zi), m(y, z)},
              {0, y, z, m(x, zi), m(y, zi), m(y, z)}};
          std::vector<std::uint64_t> want{8, 8, 8, 4, 4};
          std::vector<std::uint64_t> got;
          std::set<std::uint32_t>    orbits;
          for (auto const& s : listed) {
            auto o = r.orbit_of_rank[nrt_rank(transversal_from_elements(d, s))];
            orbits.insert(o);
            got.push_back(r.report.orbits->orbit_lengths[o]);
          }
          return all_of({expect_eq("|T|", r.report.nrt_count, 32),
                         expect_eq("phi", r.report.phi, 5),
                         expect_eq("orbit lengths", sorted_lengths(*r.report.orbits),
                                   "4,4,8,8,8"),
                         expect_eq("listed NRTs in distinct orbits", orbits.size(), 5),
                         expect_eq("orbit lengths of the listed NRTs", got == want, true),
                         corefree_transitivity(r.report)});
        });
    add("Alt(4) x C2 with a corefree H of index 6: phi > 4", [jobs] {
      auto g = make_group("Alt(4) x C(2)");
      auto h = resolve_subgroup(g, "order:4,corefree");
      CosetDecomposition d(h);
      ClassifyOptions    o;
      o.jobs     = jobs;
      auto phi   = classify_pair(d, o).phi;
      return all_of({expect_eq("index", h.index(), 6),
                     expect_eq("phi > 4", phi > 4, true),
                     expect_eq("phi (regression value)", phi, 146)});
    });
    add("normal subgroups give phi = 1", [jobs] {
      Outcome o;
      for (auto const* text : {"Sym(4)", "Q8", "D(8)", "Alt(4)", "C(3) : C(4) [inv]"}) {
        auto g = make_group(text);
        for (auto const& h : subgroups_all(g)) {
          ClassifyOptions opts;
          opts.jobs = jobs;
          auto phi  = classify_pair(CosetDecomposition(h), opts).phi;
          if ((phi == 1) != h.is_normal()) {
            o = std::string(text) + " " + gens_selector(h) + ": phi = "
                + std::to_string(phi);
          }
        }
      }
      return o;
    });
    add("census: T_4 = 44", [jobs] {
      CensusOptions o;
      o.jobs = jobs;
      return expect_eq("T_4", census(4, o).classes, 44);
    });
    add("census: T_5 = 14022", [jobs] {
      CensusOptions o;
      o.jobs = jobs;
      return expect_eq("T_5", census(5, o).classes, 14022);
    });
    add("conjugation orbits of Sym(3) on T(Sym(4), Sym(3)): 44", [] {
      auto g = make_group("Sym(4)");
      return expect_eq("orbits",
                       burnside_conjugation_count(CosetDecomposition(
                           resolve_subgroup(g, "gens:(1,2);(1,2,3)"))),
                       44);
    });
    add("conjugation orbits of Sym(4) on T(Sym(5), Sym(4)): 14022", [] {
      auto g = make_group("Sym(5)");
      return expect_eq("orbits",
                       burnside_conjugation_count(CosetDecomposition(
                           resolve_subgroup(g, "gens:(1,2);(1,2,3);(1,2,3,4)"))),
                       14022);
    });
    add("phi(Sym(4), Sym(3)) = T_4 with the same canonical forms", [jobs] {
      auto g = make_group("Sym(4)");
      CosetDecomposition d(resolve_subgroup(g, "gens:(1,2);(1,2,3)"));
      ClassifyOptions    o;
      o.jobs      = jobs;
      auto report = classify_pair(d, o);
      std::set<CanonicalForm> forms;
      for (auto const& c : report.classes) {
        forms.insert(c.form);
      }
      auto c = census(4);
      std::set<CanonicalForm> census_forms(c.representatives.begin(),
                                           c.representatives.end());
      return all_of({expect_eq("phi", report.phi, 44),
                     expect_eq("same forms", forms == census_forms, true)});
    });
    if (options.sym5_classification) {
      add("phi(Sym(5), Sym(4)) = T_5 = 14022 by classification", [jobs] {
        auto g = make_group("Sym(5)");
        CosetDecomposition d(resolve_subgroup(g, "gens:(1,2);(1,2,3);(1,2,3,4)"));
        ClassifyOptions    o;
        o.jobs = jobs;
        return expect_eq("phi", classify_pair(d, o).phi, 14022);
      });
    }
    add("Sym(4) with H = <(1,3), (1,2,3,4)>: phi = 3, listed NRTs in four orbits",
        [jobs] {
          auto g = make_group("Sym(4)");
          CosetDecomposition d(resolve_subgroup(g, "gens:(1,3);(1,2,3,4)"));
          auto r = classify_with_orbits(d, jobs);
          std::set<std::uint32_t> orbits;
          for (auto const& s : {elements_of(g, {"()", "(3,4)", "(2,3)"}),
                                elements_of(g, {"()", "(3,4)", "(2,3,4)"}),
                                elements_of(g, {"()", "(3,4)", "(1,2,4,3)"}),
                                elements_of(g, {"()", "(2,4,3)", "(2,3,4)"})}) {
            orbits.insert(r.orbit_of_rank[nrt_rank(transversal_from_elements(d, s))]);
          }
          // {(), (3,4), (1,2,3,4)} meets H twice
          bool rejected = false;
          try {
            transversal_from_elements(d, elements_of(g, {"()", "(3,4)", "(1,2,3,4)"}));
          } catch (ValidationError const&) {
            rejected = true;
          }
          return all_of({expect_eq("phi", r.report.phi, 3),
                         expect_eq("distinct orbits", orbits.size(), 4),
                         expect_eq("{(), (3,4), (1,2,3,4)} rejected", rejected, true),
                         expect_eq("orbit count > phi",
                                   r.report.orbits->orbit_count > r.report.phi, true)});
        });
    add("projection to G/Core(H) preserves induced loops for Sym(4) and a D8", [] {
      auto g = make_group("Sym(4)");
      auto h = resolve_subgroup(g, "gens:(1,3);(1,2,3,4)");
      auto n = core(h);
      auto q = quotient(n);
      CosetDecomposition d(h);
      CosetDecomposition target(project_subgroup(h, q));
      for (auto c = nrt_iter(d); !c.done(); c.advance()) {
        auto s = c.transversal();
        auto t = project_transversal(s, q, target);
        if (!are_isomorphic(induced_loop(s), induced_loop(t))) {
          return Outcome("NRT of rank " + std::to_string(c.rank())
                         + " is not isomorphic to its image");
        }
      }
      return all_of({expect_eq("|core|", n.size(), 4),
                     expect_eq("|G/N|", q.group.order(), 6)});
    });
    add("classes generating G are single Aut_H G orbits for corefree H", [jobs] {
      Outcome o;
      for (auto const& [text, sel] :
           std::vector<std::pair<char const*, char const*>>{
               {"D(8)", "gens:(1,3)"},
               {"Alt(4)", "gens:(1,2)(3,4)"},
               {"Sym(4)", "gens:(1,2);(1,2,3)"}}) {
        auto g = make_group(text);
        auto r = classify_with_orbits(CosetDecomposition(resolve_subgroup(g, sel)),
                                      jobs);
        if (auto f = corefree_transitivity(r.report); !f.empty()) {
          o = std::string(text) + ": " + f;
        }
      }
      return o;
    });

    ScanVerdict scan;
    bool        scanned = false;
    auto        theorem = [&](std::string const& name) {
      return [&, name, jobs]() -> Outcome {
        if (!scanned) {
          ScanOptions so;
          so.jobs = jobs;
          scan    = scan_theorems(so);
          scanned = true;
        }
        for (auto const& t : scan.theorems) {
          if (t.name == name) {
            if (t.passed) {
              return {};
            }
            auto const& p = scan.pairs[t.counterexamples.front()];
            return "counterexample " + p.group + " " + p.subgroup + " (phi = "
                   + (p.phi ? std::to_string(*p.phi) : "?") + ")";
          }
        }
        return "no such scan check";
      };
    };
    for (auto const* name : {"phi is never 2", "phi is never 4",
                             "phi = 1 exactly when H is normal",
                             "phi = 3 exactly when H is non-normal of index 3",
                             "Aut_H G orbits refine isomorphism classes",
                             "fixture expectations"}) {
      add(std::string("scan (consistency check): ") + name, theorem(name));
    }

    std::vector<SuiteCheck> results;
    for (auto& [name, f] : checks) {
      auto const start = std::chrono::steady_clock::now();
      SuiteCheck check;
      check.name = name;
      try {
        check.detail = f();
        check.passed = check.detail.empty();
      } catch (std::exception const& e) {
        check.detail = std::string("exception: ") + e.what();
      }
      check.seconds = std::chrono::duration<double>(
                          std::chrono::steady_clock::now() - start)
                          .count();
      if (progress != nullptr) {
        *progress << (check.passed ? "PASS " : "FAIL ") << check.name;
        if (!check.detail.empty()) {
          *progress << ": " << check.detail;
        }
        *progress << std::endl;
      }
      results.push_back(std::move(check));
    }
    return results;
  }

}  // namespace nrt
