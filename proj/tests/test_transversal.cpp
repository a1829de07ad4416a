#include <algorithm>
#include <deque>
#include <set>
#include <vector>

#include "doctest.h"

#include "nrt/error.hpp"
#include "nrt/group_expr.hpp"
#include "nrt/loop_iso.hpp"
#include "nrt/subgroups.hpp"
#include "nrt/transversal.hpp"

using namespace nrt;

namespace {
  std::deque<GroupTable>& groups() {
    static std::deque<GroupTable> store;
    return store;
  }

  GroupTable const& group(char const* text) {
    return groups().emplace_back(make_group(text));
  }

  std::vector<SubgroupHandle> small_pairs(std::uint64_t max_nrts) {
    std::vector<SubgroupHandle> out;
    for (auto const* text : {"Sym(3)", "C(6)", "D(8)", "Q8", "C(2) x C(2) x C(2)",
                             "Alt(4)", "D(12)", "C(3) : C(4) [inv]", "Sym(4)"}) {
      auto const& g = group(text);
      for (auto const& h : subgroups_all(g)) {
        auto d = right_cosets(h);
        if (nrt_count(d) <= max_nrts) {
          out.push_back(h);
        }
      }
    }
    return out;
  }

  std::vector<element_type> coset_set(SubgroupHandle const& h, element_type x) {
    std::set<element_type> s;
    for (auto y : h.elements()) {
      s.insert(h.parent().mul(y, x));
    }
    return {s.begin(), s.end()};
  }

  std::vector<element_type> closure(GroupTable const& g, std::vector<element_type> gens) {
    std::set<element_type>    s{0};
    std::vector<element_type> todo{0};
    while (!todo.empty()) {
      auto x = todo.back();
      todo.pop_back();
      for (auto y : gens) {
        auto z = g.mul(x, y);
        if (s.insert(z).second) {
          todo.push_back(z);
        }
      }
    }
    return {s.begin(), s.end()};
  }
}  // namespace

TEST_CASE("right cosets") {
  for (auto const& h : small_pairs(1u << 20)) {
    auto const& g = h.parent();
    auto        d = right_cosets(h);
    CHECK(d.coset_count() * d.coset_size() == g.order());
    CHECK(d.members(0) == h.elements());
    element_type previous_min = 0;
    for (std::size_t c = 0; c < d.coset_count(); ++c) {
      auto const& m = d.members(c);
      CHECK(std::is_sorted(m.begin(), m.end()));
      CHECK(m == coset_set(h, m.front()));
      if (c > 0) {
        CHECK(m.front() > previous_min);
      }
      previous_min = m.front();
      for (std::size_t i = 0; i < m.size(); ++i) {
        CHECK(d.coset_of(m[i]) == c);
        CHECK(d.position_in_coset(m[i]) == i);
      }
    }
  }
}

TEST_CASE("NRT count against subset enumeration") {
  for (auto const* text : {"Sym(3)", "D(8)", "Q8", "C(2) x C(2) x C(2)", "C(6)"}) {
    auto const& g = group(text);
    for (auto const& h : subgroups_all(g)) {
      auto        d = right_cosets(h);
      std::size_t n = g.order();
      std::uint64_t found = 0;
      for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
        std::vector<std::size_t> hits(d.coset_count(), 0);
        ++hits[0];
        for (std::size_t x = 1; x < n; ++x) {
          if ((mask >> (x - 1)) & 1u) {
            ++hits[d.coset_of(x)];
          }
        }
        found += std::all_of(hits.begin(), hits.end(), [](auto k) { return k == 1; }) ? 1 : 0;
      }
      std::uint64_t expected = 1;
      for (std::size_t i = 1; i < d.coset_count(); ++i) {
        expected *= d.coset_size();
      }
      CHECK(nrt_count(d) == expected);
      CHECK(nrt_count(d) == found);
    }
  }
}

TEST_CASE("rank, unrank and the cursor agree") {
  for (auto const& h : small_pairs(4096)) {
    auto          d     = right_cosets(h);
    auto          total = nrt_count(d);
    std::set<std::vector<element_type>> distinct;
    TransversalRank r = 0;
    for (auto cur = nrt_iter(d); !cur.done(); cur.advance(), ++r) {
      CHECK(cur.rank() == r);
      auto s = nrt_unrank(d, r);
      CHECK(std::equal(s.choice().begin(), s.choice().end(), cur.choice().begin(),
                       cur.choice().end()));
      CHECK(nrt_rank(s) == r);
      distinct.insert(s.elements());
    }
    CHECK(r == total);
    CHECK(distinct.size() == total);
    CHECK_THROWS_AS(nrt_unrank(d, total), PreconditionError);
    if (total > 3) {
      auto     cur = NrtCursor(d, 2, total - 1);
      std::size_t steps = 0;
      for (; !cur.done(); cur.advance()) {
        ++steps;
      }
      CHECK(steps == total - 3);
    }
    if (total > 1) {
      CHECK(nrt_unrank(d, 1).choice(1) == d.members(1)[1 % d.coset_size()]);
    }
  }
}

TEST_CASE("transversal validation") {
  auto const& s4 = group("Sym(4)");
  auto h = generate_subgroup(s4, std::vector<element_type>{*s4.find("(1,2)"),
                                                           *s4.find("(1,2,3)")});
  auto d = right_cosets(h);
  CHECK(d.coset_count() == 4);
  auto id    = *s4.find("()");
  auto t14   = *s4.find("(1,4)");
  auto t24   = *s4.find("(2,4)");
  auto t34   = *s4.find("(3,4)");
  auto s     = transversal_from_elements(d, std::vector<element_type>{t34, id, t24, t14});
  std::vector<element_type> sorted{id, t14, t24, t34};
  std::sort(sorted.begin(), sorted.end());
  CHECK(s.elements() == sorted);
  CHECK(s.choice(0) == 0);

  CHECK_THROWS_AS(transversal_from_elements(d, std::vector<element_type>{t14, t24, t34}),
                  ValidationError);
  auto c = *s4.find("(1,2,4)");
  REQUIRE(d.coset_of(c) == d.coset_of(t14));
  CHECK_THROWS_AS(transversal_from_elements(d, std::vector<element_type>{id, t14, c, t34}),
                  ValidationError);
  CHECK_THROWS_AS(Transversal(d, {1, 2, 3, 4}), ValidationError);
  CHECK_THROWS_AS(Transversal(d, {0, 0, 0, 0}), ValidationError);
}

TEST_CASE("induced loop") {
  for (auto const& h : small_pairs(4096)) {
    auto        d = right_cosets(h);
    auto const& g = h.parent();
    for (auto cur = nrt_iter(d); !cur.done(); cur.advance()) {
      auto s    = cur.transversal();
      auto loop = induced_loop(s);
      CHECK(validate_right_loop(loop));
      std::vector<loop_element> buffer(d.coset_count() * d.coset_count());
      induced_loop_into(d, s.choice(), buffer);
      CHECK(std::equal(buffer.begin(), buffer.end(), loop.table().begin()));
      for (std::size_t i = 0; i < d.coset_count(); ++i) {
        for (std::size_t j = 0; j < d.coset_count(); ++j) {
          auto xy = g.mul(s.choice(i), s.choice(j));
          std::size_t hit = d.coset_count();
          for (std::size_t c = 0; c < d.coset_count(); ++c) {
            for (auto y : h.elements()) {
              if (g.mul(y, s.choice(c)) == xy) {
                hit = c;
              }
            }
          }
          CHECK(loop.op(i, j) == hit);
        }
      }
      if (cur.rank() > 40) {
        break;
      }
    }
  }
}

TEST_CASE("cayley loop") {
  auto const& d8   = group("D(8)");
  auto        loop = cayley_loop(d8);
  CHECK(validate_right_loop(loop));
  CHECK(is_associative(loop));
  auto h = trivial_subgroup(d8);
  auto d = right_cosets(h);
  CHECK(induced_loop(nrt_unrank(d, 0)) == loop);
}

TEST_CASE("chi, kernel and core") {
  for (auto const& h : small_pairs(4096)) {
    auto        d    = right_cosets(h);
    auto const& g    = h.parent();
    auto        s    = nrt_unrank(d, nrt_count(d) / 2);
    auto        kern = chi_kernel(d);
    CHECK(kern == core(h).elements());
    for (element_type a = 0; a < g.order(); ++a) {
      auto ca = chi(s, a);
      for (std::size_t x = 0; x < d.coset_count(); ++x) {
        CHECK(ca(x) == d.coset_of(g.mul(s.choice(x), a)));
      }
      for (element_type b = 0; b < g.order(); b += 3) {
        CHECK(chi(s, g.mul(a, b)) == ca * chi(s, b));
      }
    }
  }
}

TEST_CASE("H_S, torsion and subgroup transversals") {
  for (auto const& h : small_pairs(4096)) {
    auto        d = right_cosets(h);
    auto const& g = h.parent();
    for (auto cur = nrt_iter(d); !cur.done(); cur.advance()) {
      auto s    = cur.transversal();
      auto loop = induced_loop(s);
      auto hs   = h_s(s);

      std::vector<element_type> defects;
      for (std::size_t i = 0; i < d.coset_count(); ++i) {
        for (std::size_t j = 0; j < d.coset_count(); ++j) {
          auto xy = g.mul(s.choice(i), s.choice(j));
          defects.push_back(g.mul(xy, g.inv(s.choice(loop.op(i, j)))));
        }
      }
      for (auto x : defects) {
        CHECK(h.contains(x));
      }
      CHECK(hs.elements() == closure(g, defects));

      auto span_elements = closure(g, s.elements());
      CHECK(span(s).elements() == span_elements);
      CHECK(hs_times_s_is_span(s));
      std::set<element_type> product;
      for (auto a : hs.elements()) {
        for (auto x : s.elements()) {
          product.insert(g.mul(a, x));
        }
      }
      CHECK(std::vector<element_type>(product.begin(), product.end()) == span_elements);

      auto torsion = group_torsion(s);
      auto from_loop = group_torsion_of_loop(loop);
      CHECK(std::set<Permutation>(torsion.begin(), torsion.end())
            == std::set<Permutation>(from_loop.begin(), from_loop.end()));
      CHECK((torsion.size() == 1) == is_associative(loop));

      bool closed = span_elements == s.elements();
      CHECK(is_subgroup(s) == closed);
      if (closed) {
        CHECK(hs.size() == 1);
        CHECK(is_associative(loop));
      }
      if (cur.rank() > 300) {
        break;
      }
    }
  }
}

TEST_CASE("projection through a normal subgroup of the core") {
  auto const& g  = group("Alt(4) x C(2)");
  auto        c2 = generate_subgroup(g, std::vector<element_type>{1});
  REQUIRE(c2.is_normal());
  auto q = quotient(c2);
  for (auto const& h : subgroups_all(g)) {
    if (!std::includes(h.elements().begin(), h.elements().end(), c2.elements().begin(),
                       c2.elements().end())) {
      continue;
    }
    auto d      = right_cosets(h);
    auto image  = project_subgroup(h, q);
    CHECK(image.size() * 2 == h.size());
    auto target = right_cosets(image);
    REQUIRE(target.coset_count() == d.coset_count());
    for (TransversalRank r = 0; r < std::min<std::uint64_t>(nrt_count(d), 64); ++r) {
      auto s = nrt_unrank(d, r);
      auto p = project_transversal(s, q, target);
      CHECK(are_isomorphic(induced_loop(s), induced_loop(p)).has_value());
    }
  }
}
