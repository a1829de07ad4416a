#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "doctest.h"

#include "nrt/automorphism.hpp"
#include "nrt/error.hpp"
#include "nrt/group_expr.hpp"
#include "nrt/loop_iso.hpp"
#include "nrt/orbit.hpp"
#include "nrt/subgroups.hpp"
#include "nrt/transversal.hpp"

using namespace nrt;

namespace {
  std::deque<GroupTable>& groups() {
    static std::deque<GroupTable> store;
    return store;
  }

  GroupTable const& group(std::string const& text) {
    return groups().emplace_back(make_group(text));
  }

  std::vector<SubgroupHandle> small_pairs(std::uint64_t max_nrts) {
    std::vector<SubgroupHandle> out;
    for (auto const* text : {"Sym(3)", "C(6)", "D(8)", "Q8", "C(2) x C(2) x C(2)", "Alt(4)",
                             "D(12)", "C(3) : C(4) [inv]", "Sym(4)", "Q8 : C(3) [gens 4 6]"}) {
      auto const& g = group(text);
      for (auto const& h : subgroups_all(g)) {
        if (nrt_count(right_cosets(h)) <= max_nrts) {
          out.push_back(h);
        }
      }
    }
    return out;
  }

  SubgroupHandle generated(GroupTable const& g, std::vector<char const*> names) {
    std::vector<element_type> gens;
    for (auto const* n : names) {
      gens.push_back(*g.find(n));
    }
    return generate_subgroup(g, gens);
  }

  // elements as listed with composition right to left
  element_type written(GroupTable const& g, char const* cycles) {
    return g.inv(*g.find(cycles));
  }

  std::vector<std::vector<element_type>> all_nrts(CosetDecomposition const& d) {
    std::vector<std::vector<element_type>> out;
    for (auto cur = nrt_iter(d); !cur.done(); cur.advance()) {
      out.push_back(cur.transversal().elements());
    }
    return out;
  }

  std::vector<std::uint64_t> brute_force_orbit_lengths(CosetDecomposition const&       d,
                                                       std::vector<Permutation> const& acting) {
    auto                                            sets = all_nrts(d);
    std::map<std::vector<element_type>, std::size_t> index;
    for (std::size_t i = 0; i < sets.size(); ++i) {
      index[sets[i]] = i;
    }
    std::vector<std::size_t> orbit(sets.size(), sets.size());
    std::vector<std::uint64_t> lengths;
    for (std::size_t i = 0; i < sets.size(); ++i) {
      if (orbit[i] != sets.size()) {
        continue;
      }
      std::vector<std::size_t> todo{i};
      orbit[i] = lengths.size();
      std::uint64_t length = 1;
      while (!todo.empty()) {
        auto k = todo.back();
        todo.pop_back();
        for (auto const& f : acting) {
          std::vector<element_type> image;
          for (auto x : sets[k]) {
            image.push_back(f(x));
          }
          std::sort(image.begin(), image.end());
          auto j = index.at(image);
          if (orbit[j] == sets.size()) {
            orbit[j] = lengths.size();
            ++length;
            todo.push_back(j);
          }
        }
      }
      lengths.push_back(length);
    }
    std::sort(lengths.begin(), lengths.end());
    return lengths;
  }

  std::uint64_t brute_force_fixed(CosetDecomposition const& d, element_type h) {
    auto const&   g     = d.group();
    std::uint64_t fixed = 0;
    for (auto const& s : all_nrts(d)) {
      std::vector<element_type> image;
      for (auto x : s) {
        image.push_back(g.mul(g.mul(h, x), g.inv(h)));
      }
      std::sort(image.begin(), image.end());
      fixed += image == s ? 1 : 0;
    }
    return fixed;
  }

  std::vector<std::uint64_t> sorted(std::vector<std::uint64_t> v) {
    std::sort(v.begin(), v.end());
    return v;
  }

  PairClassification with_orbits(CosetDecomposition const& d, std::size_t jobs = 1) {
    ClassifyOptions options;
    options.orbits = true;
    options.jobs   = jobs;
    return classify_pair_detailed(d, options);
  }
}  // namespace

TEST_CASE("act") {
  auto const& g = group("D(8)");
  auto        h = generated(g, {"(1,3)"});
  auto        d = right_cosets(h);
  auto        x  = written(g, "(1,3)");
  auto        y  = written(g, "(1,2,3,4)");
  auto        y2 = g.mul(y, y);
  auto        y3 = g.mul(y2, y);
  auto        xy = g.mul(x, y);
  auto        i_x = inner_automorphism(g, x);
  auto        s1 = transversal_from_elements(d, std::vector<element_type>{0, y, y2, y3});
  auto        s5 = transversal_from_elements(d, std::vector<element_type>{0, xy, y2, y3});
  CHECK(act(i_x, s1) == s1);
  CHECK(!(act(i_x, s5) == s5));
  CHECK(act(Permutation::identity(g.order()), s5) == s5);
  CHECK(act(i_x, act(i_x, s5)) == s5);

  auto y_auto = inner_automorphism(g, *g.find("(1,2,3,4)"));
  REQUIRE(!stabilizes(y_auto, h));
  CHECK_THROWS_AS(act(y_auto, s1), PreconditionError);
  std::vector<point_type> not_auto(g.order());
  std::iota(not_auto.begin(), not_auto.end(), 0);
  std::swap(not_auto[1], not_auto[2]);
  CHECK_THROWS_AS(act(Permutation(not_auto), s1), PreconditionError);
}

TEST_CASE("act preserves the induced loop up to isomorphism") {
  for (auto const& h : small_pairs(512)) {
    auto d = right_cosets(h);
    for (auto const& f : aut_stabilizing(h)) {
      for (auto cur = nrt_iter(d); !cur.done(); cur.advance()) {
        auto s = cur.transversal();
        auto t = act(f, s);
        std::vector<element_type> image;
        for (auto e : s.elements()) {
          image.push_back(f(e));
        }
        std::sort(image.begin(), image.end());
        CHECK(t.elements() == image);
        CHECK(canonical_key(induced_loop(s)) == canonical_key(induced_loop(t)));
        if (cur.rank() > 20) {
          break;
        }
      }
    }
  }
}

TEST_CASE("orbit reports") {
  auto const& d8 = group("D(8)");
  auto        r  = orbit_report(right_cosets(generated(d8, {"(1,3)"})));
  CHECK(r.orbit_count == 6);
  CHECK(r.acting_order == 2);
  CHECK(sorted(r.orbit_lengths) == std::vector<std::uint64_t>{1, 1, 1, 1, 2, 2});

  auto const& a4 = group("Alt(4)");
  auto        ra = orbit_report(right_cosets(generated(a4, {"(1,2)(3,4)"})));
  CHECK(sorted(ra.orbit_lengths) == std::vector<std::uint64_t>{4, 4, 8, 8, 8});

  auto const& c6 = group("C(6)");
  auto        rc = orbit_report(right_cosets(trivial_subgroup(c6)));
  CHECK(rc.orbit_count == 1);

  for (auto const& h : small_pairs(4096)) {
    auto d      = right_cosets(h);
    auto acting = aut_stabilizing(h);
    auto rep    = orbit_report(d);
    CHECK(rep.acting_order == acting.size());
    CHECK(std::accumulate(rep.orbit_lengths.begin(), rep.orbit_lengths.end(),
                          std::uint64_t{0})
          == nrt_count(d));
    for (auto len : rep.orbit_lengths) {
      CHECK(rep.acting_order % len == 0);
    }
    CHECK(std::is_sorted(rep.representatives.begin(), rep.representatives.end()));
    CHECK(rep.representatives.front() == 0);
    CHECK(sorted(rep.orbit_lengths) == brute_force_orbit_lengths(d, acting));
    CHECK(orbit_report(d, {}, 3).orbit_lengths == rep.orbit_lengths);

    auto gens = generating_subset(acting);
    CHECK(gens.size() <= acting.size());
    std::set<Permutation> closed{Permutation::identity(h.parent().order())};
    std::vector<Permutation> todo(closed.begin(), closed.end());
    while (!todo.empty()) {
      auto p = todo.back();
      todo.pop_back();
      for (auto const& q : gens) {
        if (closed.insert(p * q).second) {
          todo.push_back(p * q);
        }
      }
    }
    CHECK(closed == std::set<Permutation>(acting.begin(), acting.end()));
  }
}

TEST_CASE("Burnside count of the conjugation action") {
  for (auto const& h : small_pairs(4096)) {
    auto          d     = right_cosets(h);
    std::uint64_t total = 0;
    for (auto e : h.elements()) {
      auto fixed = conjugation_fixed_count(d, e);
      CHECK(fixed == brute_force_fixed(d, e));
      total += fixed;
    }
    CHECK(conjugation_fixed_count(d, 0) == nrt_count(d));
    CHECK(total % h.size() == 0);
    CHECK(burnside_conjugation_count(d) == total / h.size());
    CHECK(burnside_conjugation_count(d) == conjugation_orbit_count(d));
    CHECK(conjugation_orbit_count(d, 2) == conjugation_orbit_count(d));
  }
  auto const& s4 = group("Sym(4)");
  CHECK(burnside_conjugation_count(right_cosets(generated(s4, {"(1,2)", "(1,2,3)"}))) == 44);
  auto const& s5 = group("Sym(5)");
  CHECK(burnside_conjugation_count(
            right_cosets(generated(s5, {"(1,2)", "(1,2,3)", "(1,2,3,4)"})))
        == 14022);
}

TEST_CASE("classification reports") {
  for (auto const& h : small_pairs(4096)) {
    auto d      = right_cosets(h);
    auto result = with_orbits(d);
    auto const& rep = result.report;
    CHECK(rep.phi == rep.classes.size());
    CHECK(rep.phi >= 1);
    CHECK(rep.nrt_count == nrt_count(d));
    CHECK(rep.normal == h.is_normal());
    CHECK(rep.corefree == (core(h).size() == 1));
    CHECK((rep.phi == 1) == h.is_normal());
    CHECK(rep.phi != 2);
    CHECK(rep.phi != 4);
    if (!h.is_normal() && d.coset_count() == 3) {
      CHECK(rep.phi == 3);
    }
    std::uint64_t sizes = 0;
    for (std::size_t c = 0; c < rep.classes.size(); ++c) {
      auto const& cls = rep.classes[c];
      sizes += cls.size;
      CHECK(result.class_of_rank[cls.representative_rank] == c);
      auto s = nrt_unrank(d, cls.representative_rank);
      CHECK(cls.is_subgroup == is_subgroup(s));
      CHECK(cls.generates_group == (span(s).size() == h.parent().order()));
      CHECK(cls.torsion_order == group_torsion(s).size());
      if (c > 0) {
        CHECK(cls.representative_rank > rep.classes[c - 1].representative_rank);
      }
    }
    CHECK(sizes == nrt_count(d));

    REQUIRE(rep.orbits);
    std::map<std::uint32_t, std::set<std::uint32_t>> classes_of_orbit;
    for (std::size_t r = 0; r < result.orbit_of_rank.size(); ++r) {
      classes_of_orbit[result.orbit_of_rank[r]].insert(result.class_of_rank[r]);
    }
    bool refine = std::all_of(classes_of_orbit.begin(), classes_of_orbit.end(),
                              [](auto const& kv) { return kv.second.size() == 1; });
    CHECK(refine);
    CHECK(rep.orbits_refine_classes == refine);
    std::size_t orbit_total = 0;
    for (auto const& cls : rep.classes) {
      orbit_total += cls.orbit_count;
    }
    CHECK(orbit_total == rep.orbits->orbit_count);

    for (auto const& cls : rep.classes) {
      if (rep.corefree && cls.generates_group) {
        CHECK(cls.orbit_count == 1);
      }
    }
  }
}

TEST_CASE("classification is independent of the worker count") {
  auto const& g = group("Alt(4) x C(2)");
  for (auto const& h : subgroups_all(g)) {
    if (h.size() != 4 || core(h).size() != 1) {
      continue;
    }
    auto d  = right_cosets(h);
    auto r1 = with_orbits(d, 1);
    CHECK(r1.report.phi == 146);
    CHECK(r1.report.phi > 4);
    for (std::size_t jobs : {2u, 7u}) {
      auto rj = with_orbits(d, jobs);
      CHECK(rj.report == r1.report);
      CHECK(rj.class_of_rank == r1.class_of_rank);
      CHECK(rj.orbit_of_rank == r1.orbit_of_rank);
    }
  }
}

TEST_CASE("published pairs") {
  auto const& d12 = group("D(12)");
  std::size_t nonnormal_c2 = 0;
  for (auto const& h : subgroups_all(d12)) {
    if (h.size() == 2 && !h.is_normal()) {
      ++nonnormal_c2;
      CHECK(classify_pair(right_cosets(h)).phi == 20);
    }
  }
  CHECK(nonnormal_c2 == 6);

  auto const& d8 = group("D(8)");
  CHECK(classify_pair(right_cosets(generated(d8, {"(1,3)"}))).phi == 6);
  auto const& a4 = group("Alt(4)");
  CHECK(classify_pair(right_cosets(generated(a4, {"(1,2)(3,4)"}))).phi == 5);
  auto a3 = with_orbits(right_cosets(generated(a4, {"(1,2,3)"})));
  CHECK(a3.report.phi == a3.report.orbits->orbit_count);

  auto const& s4 = group("Sym(4)");
  auto        ds3 = right_cosets(generated(s4, {"(1,2)", "(1,2,3)"}));
  CHECK(classify_pair(ds3).phi == 44);

  auto h1 = generated(s4, {"(1,3)", "(1,2,3,4)"});
  REQUIRE(h1.size() == 8);
  auto d1  = right_cosets(h1);
  auto res = with_orbits(d1);
  CHECK(res.report.phi == 3);
  CHECK(res.report.orbits->orbit_count > 3);
  CHECK(res.report.orbits_refine_classes == true);
  auto nrt = [&](std::vector<char const*> names) {
    std::vector<element_type> elements;
    for (auto const* n : names) {
      elements.push_back(written(s4, n));
    }
    return nrt_rank(transversal_from_elements(d1, elements));
  };
  std::set<std::uint32_t> orbits{
      res.orbit_of_rank[nrt({"()", "(3,4)", "(2,3)"})],
      res.orbit_of_rank[nrt({"()", "(3,4)", "(2,3,4)"})],
      res.orbit_of_rank[nrt({"()", "(2,4,3)", "(2,3,4)"})],
      res.orbit_of_rank[nrt({"()", "(3,4)", "(1,2,4,3)"})]};
  CHECK(orbits.size() == 4);
  CHECK_THROWS_AS(nrt({"()", "(3,4)", "(1,2,3,4)"}), ValidationError);
}

TEST_CASE("enumeration bound") {
  auto const& s5 = group("Sym(5)");
  auto        d  = right_cosets(generated(s5, {"(1,2)", "(1,2,3)", "(1,2,3,4)"}));
  ClassifyOptions options;
  options.enumeration_bound = 1000;
  CHECK_THROWS_AS(classify_pair(d, options), ResourceError);
  CHECK(!classify_pair(right_cosets(generated(group("D(8)"), {"(1,3)"}))).orbits);
}
