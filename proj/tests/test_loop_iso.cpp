#include <algorithm>
#include <map>
#include <numeric>
#include <random>
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
  using Table = std::vector<loop_element>;

  // all right loops x o y = R_y(x) with R_0 = 1, R_y(0) = y
  std::vector<Table> brute_force_loops(std::size_t n) {
    std::vector<std::vector<loop_element>> perms;
    std::vector<loop_element>              p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
      perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));

    std::vector<std::vector<std::vector<loop_element>>> per_column(n);
    for (std::size_t y = 0; y < n; ++y) {
      for (auto const& q : perms) {
        if (q[0] == y && (y != 0 || std::is_sorted(q.begin(), q.end()))) {
          per_column[y].push_back(q);
        }
      }
    }
    std::vector<Table>       out;
    std::vector<std::size_t> digit(n, 0);
    while (true) {
      Table t(n * n);
      for (std::size_t y = 0; y < n; ++y) {
        for (std::size_t x = 0; x < n; ++x) {
          t[x * n + y] = per_column[y][digit[y]][x];
        }
      }
      out.push_back(t);
      std::size_t k = 1;
      while (k < n && ++digit[k] == per_column[k].size()) {
        digit[k++] = 0;
      }
      if (k >= n) {
        break;
      }
    }
    return out;
  }

  Table relabeled(Table const& t, std::size_t n, std::vector<loop_element> const& f) {
    Table r(n * n);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        r[f[x] * n + f[y]] = f[t[x * n + y]];
      }
    }
    return r;
  }

  Table brute_force_canonical(Table const& t, std::size_t n) {
    std::vector<loop_element> f(n);
    std::iota(f.begin(), f.end(), 0);
    Table best = t;
    do {
      best = std::min(best, relabeled(t, n, f));
    } while (std::next_permutation(f.begin() + 1, f.end()));
    return best;
  }

  std::vector<loop_element> random_relabeling(std::size_t n, std::mt19937& rng) {
    std::vector<loop_element> f(n);
    std::iota(f.begin(), f.end(), 0);
    std::shuffle(f.begin() + 1, f.end(), rng);
    return f;
  }

  RightLoopTable random_loop(std::size_t n, std::mt19937& rng) {
    Table t(n * n);
    for (std::size_t y = 0; y < n; ++y) {
      std::vector<loop_element> col(n);
      std::iota(col.begin(), col.end(), 0);
      if (y != 0) {
        std::swap(col[0], col[y]);
        std::shuffle(col.begin() + 1, col.end(), rng);
      }
      for (std::size_t x = 0; x < n; ++x) {
        t[x * n + y] = col[x];
      }
    }
    return RightLoopTable(n, t);
  }

  std::vector<RightLoopTable> induced_loops(GroupTable const& g, std::size_t subgroup_order,
                                            std::size_t limit) {
    std::vector<RightLoopTable> out;
    for (auto const& h : subgroups_all(g)) {
      if (h.size() != subgroup_order) {
        continue;
      }
      auto d = right_cosets(h);
      for (auto cur = nrt_iter(d); !cur.done() && out.size() < limit; cur.advance()) {
        out.push_back(induced_loop(cur.transversal()));
      }
      break;
    }
    return out;
  }
}  // namespace

TEST_CASE("validation") {
  CHECK(validate_right_loop(RightLoopTable(1, {0})));
  CHECK(validate_right_loop(RightLoopTable(3, {0, 1, 2, 1, 2, 0, 2, 0, 1})));
  CHECK(!validate_right_loop(RightLoopTable(2, {0, 1, 1, 1})));
  CHECK(!validate_right_loop(RightLoopTable(2, {1, 0, 0, 1})));
  // left identity fails
  CHECK(!validate_right_loop(RightLoopTable(3, {0, 2, 1, 1, 0, 2, 2, 1, 0})));
  // column 1 is not a bijection
  CHECK(!validate_right_loop(RightLoopTable(3, {0, 1, 2, 1, 0, 0, 2, 0, 1})));
  CHECK_THROWS_AS(RightLoopTable(2, {0, 1, 1}), ValidationError);
  CHECK(is_associative(RightLoopTable(3, {0, 1, 2, 1, 2, 0, 2, 0, 1})));
}

TEST_CASE("labeled right loops") {
  CHECK(labeled_right_loop_count(1) == 1);
  CHECK(labeled_right_loop_count(4) == 216);
  CHECK(labeled_right_loop_count(5) == 331776);
  for (std::size_t n = 1; n <= 4; ++n) {
    auto               brute = brute_force_loops(n);
    std::set<Table>    expected(brute.begin(), brute.end());
    std::set<Table>    found;
    for (std::uint64_t r = 0; r < labeled_right_loop_count(n); ++r) {
      auto t = labeled_right_loop(n, r);
      CHECK(validate_right_loop(t));
      found.insert(Table(t.table().begin(), t.table().end()));
    }
    CHECK(found == expected);
  }
}

TEST_CASE("census against brute force") {
  for (std::size_t n = 1; n <= 4; ++n) {
    std::set<Table> classes;
    for (auto const& t : brute_force_loops(n)) {
      classes.insert(brute_force_canonical(t, n));
    }
    auto result = census(n);
    CAPTURE(n);
    CHECK(result.classes == classes.size());
    CHECK(result.labeled_count == labeled_right_loop_count(n));
    CHECK(std::accumulate(result.class_sizes.begin(), result.class_sizes.end(),
                          std::uint64_t{0})
          == result.labeled_count);
    std::set<Table> mine;
    for (auto const& f : result.representatives) {
      mine.insert(f.table);
    }
    CHECK(mine == classes);
  }
  CHECK(census(2).classes == 1);
  CHECK(census(3).classes == 3);
  CHECK(census(4).classes == 44);
  CHECK(census(4, {.max_order = 5, .jobs = 3}).representatives
        == census(4).representatives);
  CHECK_THROWS_AS(census(6), ResourceError);
}

TEST_CASE("census of order 5") {
  auto result = census(5, {.max_order = 5, .jobs = 2});
  CHECK(result.classes == 14022);
  CHECK(result.labeled_count == 331776);
}

TEST_CASE("exhaustive canonical form matches brute force") {
  std::mt19937 rng(7);
  for (int i = 0; i < 200; ++i) {
    auto t = random_loop(5, rng);
    auto f = canonical_form(t);
    CHECK(f.table == brute_force_canonical(Table(t.table().begin(), t.table().end()), 5));
  }
  CHECK_THROWS_AS(canonical_form(random_loop(9, rng)), ResourceError);
}

TEST_CASE("canonical forms are invariant under relabeling") {
  std::mt19937 rng(20240501);
  for (int i = 0; i < 1000; ++i) {
    auto t = random_loop(5, rng);
    auto f = random_relabeling(5, rng);
    auto u = t.relabel(f);
    CHECK(validate_right_loop(u));
    CHECK(is_isomorphism(t, u, f));
    CHECK(canonical_form(t) == canonical_form(u));
    CHECK(generated_canonical_form(t) == generated_canonical_form(u));
    CHECK(fingerprint(t) == fingerprint(u));
    CHECK(are_isomorphic(t, canonical_form(t).as_loop()).has_value());
  }
  for (std::size_t n : {6u, 7u, 8u}) {
    for (int i = 0; i < 50; ++i) {
      auto t = random_loop(n, rng);
      auto u = t.relabel(random_relabeling(n, rng));
      CHECK(canonical_form(t) == canonical_form(u));
      CHECK(generated_canonical_form(t) == generated_canonical_form(u));
    }
  }
}

TEST_CASE("isomorphism test on the order-4 classes") {
  auto reps = census(4).representatives;
  REQUIRE(reps.size() == 44);
  std::mt19937 rng(3);
  for (std::size_t i = 0; i < reps.size(); ++i) {
    auto a = reps[i].as_loop();
    for (std::size_t j = 0; j < reps.size(); ++j) {
      auto b   = reps[j].as_loop().relabel(random_relabeling(4, rng));
      auto iso = are_isomorphic(a, b);
      CHECK(iso.has_value() == (i == j));
      if (iso) {
        CHECK(is_isomorphism(a, b, *iso));
      }
      if (fingerprint(a) != fingerprint(b)) {
        CHECK(!iso);
      }
    }
  }
}

TEST_CASE("generated form agrees with the exhaustive partition") {
  auto s4   = make_group("Sym(4)");
  auto q8c3 = make_group("Q8 : C(3) [gens 4 6]");
  for (auto const& loops : {induced_loops(s4, 4, 1024), induced_loops(q8c3, 3, 2187),
                            induced_loops(s4, 3, 512)}) {
    REQUIRE(!loops.empty());
    std::map<CanonicalForm, CanonicalForm> forward, backward;
    for (auto const& t : loops) {
      auto e = canonical_form(t);
      auto g = generated_canonical_form(t);
      CHECK(forward.emplace(e, g).first->second == g);
      CHECK(backward.emplace(g, e).first->second == e);
    }
    CHECK(forward.size() == backward.size());
  }
}

TEST_CASE("generated form at order 12") {
  auto g     = make_group("Alt(4) x C(2)");
  auto loops = induced_loops(g, 2, 400);
  REQUIRE(loops.size() == 400);
  REQUIRE(loops[0].order() == 12);
  CHECK(canonical_method_for(12) == CanonicalMethod::generated);
  CHECK(canonical_method_for(8) == CanonicalMethod::exhaustive);
  std::mt19937 rng(11);
  for (std::size_t i = 0; i < loops.size(); i += 10) {
    auto u = loops[i].relabel(random_relabeling(12, rng));
    CHECK(generated_canonical_form(loops[i]) == generated_canonical_form(u));
  }
  std::vector<CanonicalForm> forms;
  for (std::size_t i = 0; i < 40; ++i) {
    forms.push_back(generated_canonical_form(loops[i]));
  }
  for (std::size_t i = 0; i < 40; ++i) {
    for (std::size_t j = i; j < 40; ++j) {
      CHECK(are_isomorphic(loops[i], loops[j]).has_value() == (forms[i] == forms[j]));
    }
  }
}

TEST_CASE("generator count") {
  CHECK(generator_count(cayley_loop(make_group("C(6)"))) == 1);
  CHECK(generator_count(cayley_loop(make_group("C(2) x C(2)"))) == 2);
  CHECK(generator_count(cayley_loop(make_group("C(2) x C(2) x C(2)"))) == 3);
  CHECK(generator_count(cayley_loop(make_group("Sym(3)"))) == 2);
  CHECK(generator_count(RightLoopTable(1, {0})) == 0);
}

TEST_CASE("classifier merge") {
  auto loops = induced_loops(make_group("Sym(4)"), 4, 1024);
  auto whole = classify_loops(loops);
  CHECK(whole.total() == loops.size());

  LoopClassifier left(6), right(6);
  for (std::size_t r = 0; r < loops.size(); ++r) {
    (r < 600 ? right : left).add(r, loops[r]);
  }
  right.merge(left);
  CHECK(right.class_count() == whole.class_count());
  auto a = whole.sorted();
  auto b = right.sorted();
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].first == b[i].first);
    CHECK(a[i].second.count == b[i].second.count);
    CHECK(a[i].second.representative_rank == b[i].second.representative_rank);
    CHECK(a[i].second.representative == loops[a[i].second.representative_rank]);
  }
}

TEST_CASE("Sym(n) point stabilizer loops realize the census") {
  for (std::size_t n : {3u, 4u}) {
    auto g      = make_group("Sym(" + std::to_string(n) + ")");
    auto loops  = induced_loops(g, g.order() / n, 1u << 20);
    CHECK(loops.size() == labeled_right_loop_count(n));
    std::set<CanonicalForm> induced;
    for (auto const& t : loops) {
      induced.insert(canonical_form(t));
    }
    auto reps = census(n).representatives;
    CHECK(induced == std::set<CanonicalForm>(reps.begin(), reps.end()));
  }
}

TEST_CASE("fingerprints are constant on order-4 classes") {
  std::map<CanonicalForm, LoopFingerprint> seen;
  for (std::uint64_t r = 0; r < labeled_right_loop_count(4); ++r) {
    auto t = labeled_right_loop(4, r);
    auto [it, fresh] = seen.emplace(canonical_form(t), fingerprint(t));
    CHECK(it->second == fingerprint(t));
  }
  CHECK(seen.size() == 44);
}

TEST_CASE("small isomorphism facts") {
  auto c4 = cayley_loop(make_group("C(4)"));
  auto v4 = cayley_loop(make_group("C(2) x C(2)"));
  CHECK(!are_isomorphic(c4, v4));
  CHECK(!are_isomorphic(c4, cayley_loop(make_group("C(3)"))));
  auto self = are_isomorphic(c4, c4);
  REQUIRE(self);
  CHECK(is_isomorphism(c4, c4, *self));
  auto c2 = cayley_loop(make_group("C(2)"));
  CHECK(canonical_form(c2).as_loop() == c2);
  auto one = classify_loops(std::vector<RightLoopTable>{c4});
  CHECK(one.class_count() == 1);
  CHECK(one.total() == 1);
}
