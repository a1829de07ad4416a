// nrtkit - enumeration and classification of normalized right transversals

#include "nrt/loop_iso.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <thread>

#include "nrt/error.hpp"

namespace nrt {

  namespace {
    constexpr loop_element UNLABELED = static_cast<loop_element>(-1);

    std::vector<std::size_t> cycle_type_of(std::span<loop_element const> f) {
      std::vector<std::size_t> lengths;
      std::vector<bool>        seen(f.size(), false);
      for (std::size_t i = 0; i < f.size(); ++i) {
        if (seen[i]) {
          continue;
        }
        std::size_t len = 0;
        for (std::size_t j = i; !seen[j]; j = f[j]) {
          seen[j] = true;
          ++len;
        }
        lengths.push_back(len);
      }
      std::sort(lengths.begin(), lengths.end());
      return lengths;
    }

    std::vector<loop_element> right_translation(RightLoopTable const& t,
                                                loop_element          y) {
      std::vector<loop_element> r(t.order());
      for (loop_element x = 0; x < t.order(); ++x) {
        r[x] = t.op(x, y);
      }
      return r;
    }

    std::vector<loop_element> left_translation(RightLoopTable const& t,
                                               loop_element          x) {
      std::vector<loop_element> l(t.order());
      for (loop_element y = 0; y < t.order(); ++y) {
        l[y] = t.op(x, y);
      }
      return l;
    }

    bool is_bijection(std::span<loop_element const> f) {
      std::vector<bool> seen(f.size(), false);
      for (auto v : f) {
        if (v >= f.size() || seen[v]) {
          return false;
        }
        seen[v] = true;
      }
      return true;
    }

    // Labels the elements generated by `tuple` in breadth-first order:
    // 0 first, then the tuple, then products L[i] o L[j] and L[j] o L[i]
    // for j <= i in order of i. Returns the number of labeled elements;
    // `sequence` receives the elements in label order.
    std::size_t bfs_labeling(RightLoopTable const&          t,
                             std::span<loop_element const>  tuple,
                             std::vector<loop_element>&     label,
                             std::vector<loop_element>&     sequence) {
      std::size_t const n = t.order();
      label.assign(n, UNLABELED);
      sequence.clear();
      auto visit = [&](loop_element x) {
        if (label[x] == UNLABELED) {
          label[x] = static_cast<loop_element>(sequence.size());
          sequence.push_back(x);
        }
      };
      visit(0);
      for (auto g : tuple) {
        visit(g);
      }
      for (std::size_t i = 0; i < sequence.size(); ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
          visit(t.op(sequence[i], sequence[j]));
          visit(t.op(sequence[j], sequence[i]));
        }
      }
      return sequence.size();
    }

    // Calls f(tuple) for every ordered k-tuple of distinct non-identity
    // elements, in lexicographic order. Stops early if f returns false.
    template <typename F>
    void for_each_tuple(std::size_t n, std::size_t k, F&& f) {
      std::vector<loop_element> tuple(k);
      std::vector<bool>         used(n, false);
      bool                      stop = false;
      auto rec = [&](auto&& self, std::size_t pos) -> void {
        if (stop) {
          return;
        }
        if (pos == k) {
          stop = !f(std::span<loop_element const>(tuple));
          return;
        }
        for (loop_element x = 1; x < n && !stop; ++x) {
          if (used[x]) {
            continue;
          }
          used[x]    = true;
          tuple[pos] = x;
          self(self, pos + 1);
          used[x] = false;
        }
      };
      rec(rec, 0);
    }

    // A minimal generating tuple, lexicographically first.
    std::vector<loop_element> first_generating_tuple(RightLoopTable const& t) {
      std::size_t const         n = t.order();
      std::vector<loop_element> label, sequence, found;
      for (std::size_t k = 0; k < n; ++k) {
        bool ok = false;
        for_each_tuple(n, k, [&](std::span<loop_element const> tuple) {
          if (bfs_labeling(t, tuple, label, sequence) == n) {
            found.assign(tuple.begin(), tuple.end());
            ok = true;
            return false;
          }
          return true;
        });
        if (ok) {
          return found;
        }
      }
      return found;  // unreachable for valid loops
    }

    // Per-element isomorphism invariants.
    std::vector<std::vector<std::size_t>> element_invariants(RightLoopTable const& t) {
      std::size_t const                     n = t.order();
      std::vector<std::vector<std::size_t>> inv(n);
      for (loop_element x = 0; x < n; ++x) {
        auto r  = right_translation(t, x);
        auto l  = left_translation(t, x);
        auto& v = inv[x];
        v       = cycle_type_of(r);
        v.push_back(n + 1);  // separator
        if (is_bijection(l)) {
          auto lc = cycle_type_of(l);
          v.insert(v.end(), lc.begin(), lc.end());
        } else {
          v.push_back(0);
        }
        v.push_back(n + 1);
        v.push_back(t.op(x, x) == x ? 1 : 0);
        std::size_t commuting = 0;
        for (loop_element y = 0; y < n; ++y) {
          commuting += t.op(x, y) == t.op(y, x) ? 1 : 0;
        }
        v.push_back(commuting);
      }
      return inv;
    }

    std::uint64_t factorial(std::size_t k) {
      std::uint64_t f = 1;
      for (std::size_t i = 2; i <= k; ++i) {
        f *= i;
      }
      return f;
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Validation and invariants
  ////////////////////////////////////////////////////////////////////////

  bool validate_right_loop(RightLoopTable const& t) {
    std::size_t const n = t.order();
    if (n == 0) {
      return false;
    }
    for (loop_element x = 0; x < n; ++x) {
      if (t.op(0, x) != x || t.op(x, 0) != x) {
        return false;
      }
    }
    std::vector<bool> seen(n);
    for (loop_element y = 0; y < n; ++y) {
      std::fill(seen.begin(), seen.end(), false);
      for (loop_element x = 0; x < n; ++x) {
        auto z = t.op(x, y);
        if (seen[z]) {
          return false;
        }
        seen[z] = true;
      }
    }
    return true;
  }

  bool is_associative(RightLoopTable const& t) {
    std::size_t const n = t.order();
    for (loop_element x = 0; x < n; ++x) {
      for (loop_element y = 0; y < n; ++y) {
        auto xy = t.op(x, y);
        for (loop_element z = 0; z < n; ++z) {
          if (t.op(xy, z) != t.op(x, t.op(y, z))) {
            return false;
          }
        }
      }
    }
    return true;
  }

  LoopFingerprint fingerprint(RightLoopTable const& t) {
    std::size_t const n = t.order();
    LoopFingerprint   fp;
    fp.order = n;
    for (loop_element y = 0; y < n; ++y) {
      fp.right_cycle_types.push_back(cycle_type_of(right_translation(t, y)));
      if (is_bijection(left_translation(t, y))) {
        ++fp.bijective_left_translations;
      }
      if (t.op(y, y) == y) {
        ++fp.idempotents;
      }
    }
    std::sort(fp.right_cycle_types.begin(), fp.right_cycle_types.end());
    for (loop_element x = 0; x < n; ++x) {
      for (loop_element y = 0; y < n; ++y) {
        if (t.op(x, y) == t.op(y, x)) {
          ++fp.commuting_pairs;
        }
        auto xy = t.op(x, y);
        for (loop_element z = 0; z < n; ++z) {
          if (t.op(xy, z) == t.op(x, t.op(y, z))) {
            ++fp.associative_triples;
          }
        }
      }
    }
    return fp;
  }

  ////////////////////////////////////////////////////////////////////////
  // Canonical forms
  ////////////////////////////////////////////////////////////////////////

  std::size_t CanonicalFormHash::operator()(CanonicalForm const& f) const noexcept {
    std::uint64_t h = 1469598103934665603ULL ^ f.order;
    for (auto v : f.table) {
      h ^= v;
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }

  void canonical_form_into(std::span<loop_element const> t,
                           std::size_t                   n,
                           std::span<loop_element>       out,
                           std::span<loop_element>       scratch) {
    loop_element* q = scratch.data();      // q[new label] = old element
    loop_element* p = scratch.data() + n;  // p = q^-1
    for (std::size_t i = 0; i < n; ++i) {
      q[i]          = static_cast<loop_element>(i);
      out[i]        = static_cast<loop_element>(i);
      out[i * n]    = static_cast<loop_element>(i);
    }
    bool have_best = false;
    do {
      for (std::size_t i = 0; i < n; ++i) {
        p[q[i]] = static_cast<loop_element>(i);
      }
      bool        writing = !have_best;
      bool        abort   = false;
      for (std::size_t i = 1; i < n && !abort; ++i) {
        std::size_t const row = static_cast<std::size_t>(q[i]) * n;
        for (std::size_t j = 1; j < n; ++j) {
          loop_element v = p[t[row + q[j]]];
          if (writing) {
            out[i * n + j] = v;
          } else if (v > out[i * n + j]) {
            abort = true;
            break;
          } else if (v < out[i * n + j]) {
            writing        = true;
            out[i * n + j] = v;
          }
        }
      }
      have_best = true;
    } while (n > 2 && std::next_permutation(q + 1, q + n));
  }

  CanonicalForm canonical_form(RightLoopTable const& t) {
    std::size_t const n = t.order();
    if (n > MAX_EXHAUSTIVE_CANONICAL_ORDER) {
      throw ResourceError("exhaustive canonical form is limited to order "
                          + std::to_string(MAX_EXHAUSTIVE_CANONICAL_ORDER));
    }
    CanonicalForm             form{n, std::vector<loop_element>(n * n)};
    std::vector<loop_element> scratch(2 * n);
    canonical_form_into(t.table(), n, form.table, scratch);
    return form;
  }

  std::size_t generator_count(RightLoopTable const& t) {
    return first_generating_tuple(t).size();
  }

  CanonicalForm generated_canonical_form(RightLoopTable const& t) {
    std::size_t const         n = t.order();
    std::size_t const         k = generator_count(t);
    std::vector<loop_element> label, sequence;
    std::vector<loop_element> best, candidate(n * n);
    for_each_tuple(n, k, [&](std::span<loop_element const> tuple) {
      if (bfs_labeling(t, tuple, label, sequence) != n) {
        return true;
      }
      bool writing = best.empty();
      if (writing) {
        best.resize(n * n);
      }
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          loop_element v = label[t.op(sequence[i], sequence[j])];
          if (writing) {
            best[i * n + j] = v;
          } else if (v > best[i * n + j]) {
            return true;
          } else if (v < best[i * n + j]) {
            writing         = true;
            best[i * n + j] = v;
          }
        }
      }
      return true;
    });
    return CanonicalForm{n, std::move(best)};
  }

  ////////////////////////////////////////////////////////////////////////
  // Isomorphism
  ////////////////////////////////////////////////////////////////////////

  bool is_isomorphism(RightLoopTable const&         a,
                      RightLoopTable const&         b,
                      std::span<loop_element const> f) {
    std::size_t const n = a.order();
    if (b.order() != n || f.size() != n || !is_bijection(f)) {
      return false;
    }
    for (loop_element x = 0; x < n; ++x) {
      for (loop_element y = 0; y < n; ++y) {
        if (f[a.op(x, y)] != b.op(f[x], f[y])) {
          return false;
        }
      }
    }
    return true;
  }

  std::optional<std::vector<loop_element>> are_isomorphic(RightLoopTable const& a,
                                                          RightLoopTable const& b) {
    std::size_t const n = a.order();
    if (b.order() != n) {
      return std::nullopt;
    }
    if (a == b) {
      std::vector<loop_element> id(n);
      std::iota(id.begin(), id.end(), loop_element(0));
      return id;
    }
    if (fingerprint(a) != fingerprint(b)) {
      return std::nullopt;
    }
    auto const                tuple = first_generating_tuple(a);
    auto const                inv_a = element_invariants(a);
    auto const                inv_b = element_invariants(b);
    std::vector<loop_element> label, sequence;
    bfs_labeling(a, tuple, label, sequence);
    // `sequence` is the fixed order in which a's elements were reached.
    std::vector<loop_element> images(tuple.size());
    std::vector<bool>         used(n, false);
    std::vector<loop_element> f(n);
    std::optional<std::vector<loop_element>> result;

    auto try_images = [&]() -> bool {
      std::fill(f.begin(), f.end(), UNLABELED);
      std::vector<bool> hit(n, false);
      auto assign = [&](loop_element x, loop_element y) {
        if (f[x] == UNLABELED) {
          if (hit[y]) {
            return false;
          }
          f[x]   = y;
          hit[y] = true;
          return true;
        }
        return f[x] == y;
      };
      if (!assign(0, 0)) {
        return false;
      }
      for (std::size_t g = 0; g < tuple.size(); ++g) {
        if (!assign(tuple[g], images[g])) {
          return false;
        }
      }
      for (std::size_t i = 0; i < sequence.size(); ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
          auto x = sequence[i], y = sequence[j];
          if (!assign(a.op(x, y), b.op(f[x], f[y]))
              || !assign(a.op(y, x), b.op(f[y], f[x]))) {
            return false;
          }
        }
      }
      return is_isomorphism(a, b, f);
    };

    auto search = [&](auto&& self, std::size_t k) -> bool {
      if (k == tuple.size()) {
        if (try_images()) {
          result = f;
          return true;
        }
        return false;
      }
      for (loop_element y = 1; y < n; ++y) {
        if (used[y] || inv_b[y] != inv_a[tuple[k]]) {
          continue;
        }
        used[y]   = true;
        images[k] = y;
        if (self(self, k + 1)) {
          return true;
        }
        used[y] = false;
      }
      return false;
    };
    search(search, 0);
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Classification
  ////////////////////////////////////////////////////////////////////////

  CanonicalMethod canonical_method_for(std::size_t order) {
    return order <= MAX_EXHAUSTIVE_CANONICAL_ORDER ? CanonicalMethod::exhaustive
                                                   : CanonicalMethod::generated;
  }

  CanonicalForm canonical_key(RightLoopTable const& t) {
    return canonical_method_for(t.order()) == CanonicalMethod::exhaustive
               ? canonical_form(t)
               : generated_canonical_form(t);
  }

  LoopClassifier::LoopClassifier(std::size_t order)
      : _order(order),
        _method(canonical_method_for(order)),
        _buffer(order * order),
        _scratch(2 * order) {}

  std::size_t LoopClassifier::add(std::uint64_t                 rank,
                                  std::span<loop_element const> table) {
    if (table.size() != _order * _order) {
      throw PreconditionError("loop of the wrong order for this classifier");
    }
    if (_method == CanonicalMethod::exhaustive) {
      canonical_form_into(table, _order, _buffer, _scratch);
      _key.order = _order;
      _key.table.assign(_buffer.begin(), _buffer.end());
    } else {
      _key = generated_canonical_form(
          RightLoopTable(_order, std::vector<loop_element>(table.begin(),
                                                           table.end())));
    }
    ++_total;
    auto it = _classes.find(_key);
    if (it == _classes.end()) {
      Entry e;
      e.id                  = _classes.size();
      e.count               = 1;
      e.representative_rank = rank;
      e.representative      = RightLoopTable(
          _order, std::vector<loop_element>(table.begin(), table.end()));
      auto id = e.id;
      _classes.emplace(_key, std::move(e));
      return id;
    }
    auto& e = it->second;
    ++e.count;
    if (rank < e.representative_rank) {
      e.representative_rank = rank;
      e.representative      = RightLoopTable(
          _order, std::vector<loop_element>(table.begin(), table.end()));
    }
    return e.id;
  }

  std::vector<std::size_t> LoopClassifier::merge(LoopClassifier const& other) {
    if (other._order != _order) {
      throw PreconditionError("cannot merge classifiers of different orders");
    }
    std::vector<std::size_t> mapping(other._classes.size());
    for (auto const& [key, e] : other._classes) {
      auto it = _classes.find(key);
      if (it == _classes.end()) {
        Entry copy = e;
        copy.id    = _classes.size();
        mapping[e.id] = copy.id;
        _classes.emplace(key, std::move(copy));
      } else {
        auto& mine = it->second;
        mine.count += e.count;
        if (e.representative_rank < mine.representative_rank) {
          mine.representative_rank = e.representative_rank;
          mine.representative      = e.representative;
        }
        mapping[e.id] = mine.id;
      }
    }
    _total += other._total;
    return mapping;
  }

  std::vector<std::pair<CanonicalForm, LoopClassifier::Entry>>
  LoopClassifier::sorted() const {
    std::vector<std::pair<CanonicalForm, Entry>> out(_classes.begin(),
                                                     _classes.end());
    std::sort(out.begin(), out.end(), [](auto const& x, auto const& y) {
      return x.second.representative_rank < y.second.representative_rank;
    });
    return out;
  }

  LoopClassifier classify_loops(std::span<RightLoopTable const> loops) {
    if (loops.empty()) {
      return LoopClassifier(0);
    }
    LoopClassifier c(loops[0].order());
    std::uint64_t  rank = 0;
    for (auto const& t : loops) {
      c.add(rank++, t);
    }
    return c;
  }

  ////////////////////////////////////////////////////////////////////////
  // Census
  ////////////////////////////////////////////////////////////////////////

  std::uint64_t labeled_right_loop_count(std::size_t n) {
    std::uint64_t f = factorial(n == 0 ? 0 : n - 1), count = 1;
    for (std::size_t y = 1; y < n; ++y) {
      count *= f;
    }
    return count;
  }

  namespace {
    // perms[y] lists the permutations R of 0..n-1 with R(0) = y in
    // lexicographic order.
    std::vector<std::vector<std::vector<loop_element>>> translations(std::size_t n) {
      std::vector<std::vector<std::vector<loop_element>>> perms(n);
      std::vector<loop_element>                           p(n);
      std::iota(p.begin(), p.end(), loop_element(0));
      do {
        perms[p[0]].push_back(p);
      } while (std::next_permutation(p.begin(), p.end()));
      return perms;
    }
  }  // namespace

  RightLoopTable labeled_right_loop(std::size_t n, std::uint64_t rank) {
    if (rank >= labeled_right_loop_count(n)) {
      throw PreconditionError("labeled loop rank out of range");
    }
    auto const                perms = translations(n);
    std::uint64_t const       radix = factorial(n - 1);
    std::vector<loop_element> t(n * n);
    for (std::size_t x = 0; x < n; ++x) {
      t[x * n] = static_cast<loop_element>(x);
    }
    for (std::size_t y = 1; y < n; ++y) {
      auto const& r = perms[y][rank % radix];
      rank /= radix;
      for (std::size_t x = 0; x < n; ++x) {
        t[x * n + y] = r[x];
      }
    }
    return RightLoopTable(n, std::move(t));
  }

  CensusResult census(std::size_t n, CensusOptions const& options) {
    if (n == 0) {
      throw PreconditionError("census order must be positive");
    }
    if (n > options.max_order) {
      throw ResourceError("census is limited to order "
                          + std::to_string(options.max_order));
    }
    auto const          start  = std::chrono::steady_clock::now();
    auto const          perms  = translations(n);
    std::uint64_t const radix  = factorial(n - 1);
    std::size_t const   shards = n >= 2 ? static_cast<std::size_t>(radix) : 1;
    std::size_t const   jobs   = std::max<std::size_t>(1, options.jobs);

    // Shard s fixes R_1 to its s-th choice and enumerates R_2..R_{n-1}.
    auto run_shard = [&](std::size_t shard, LoopClassifier& classifier) {
      std::vector<loop_element> t(n * n);
      for (std::size_t x = 0; x < n; ++x) {
        t[x * n] = static_cast<loop_element>(x);
      }
      if (n == 1) {
        classifier.add(0, t);
        return;
      }
      for (std::size_t x = 0; x < n; ++x) {
        t[x * n + 1] = perms[1][shard][x];
      }
      std::vector<std::size_t> digits(n, 0);
      auto                     set_column = [&](std::size_t y) {
        auto const& r = perms[y][digits[y]];
        for (std::size_t x = 0; x < n; ++x) {
          t[x * n + y] = r[x];
        }
      };
      for (std::size_t y = 2; y < n; ++y) {
        set_column(y);
      }
      while (true) {
        std::uint64_t rank = 0;
        for (std::size_t y = n; y-- > 2;) {
          rank = rank * radix + digits[y];
        }
        rank = rank * radix + shard;
        classifier.add(rank, t);
        std::size_t y = 2;
        for (; y < n; ++y) {
          if (++digits[y] < radix) {
            set_column(y);
            break;
          }
          digits[y] = 0;
          set_column(y);
        }
        if (y == n) {
          break;
        }
      }
    };

    std::vector<LoopClassifier> partial(jobs, LoopClassifier(n));
    auto                        worker = [&](std::size_t w) {
      for (std::size_t s = w; s < shards; s += jobs) {
        run_shard(s, partial[w]);
      }
    };
    if (jobs == 1) {
      worker(0);
    } else {
      std::vector<std::jthread> threads;
      for (std::size_t w = 0; w < jobs; ++w) {
        threads.emplace_back(worker, w);
      }
    }
    for (std::size_t w = 1; w < jobs; ++w) {
      partial[0].merge(partial[w]);
    }

    CensusResult result;
    result.n             = n;
    result.labeled_count = partial[0].total();
    result.classes       = partial[0].class_count();
    std::vector<std::pair<CanonicalForm, std::uint64_t>> forms;
    for (auto const& [key, e] : partial[0].classes()) {
      forms.emplace_back(key, e.count);
    }
    std::sort(forms.begin(), forms.end());
    for (auto& [key, count] : forms) {
      result.representatives.push_back(key);
      result.class_sizes.push_back(count);
    }
    result.seconds = std::chrono::duration<double>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    return result;
  }

}  // namespace nrt
