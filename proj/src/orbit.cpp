// nrtkit - enumeration and classification of normalized right transversals

#include "nrt/orbit.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <numeric>
#include <set>
#include <stdexcept>
#include <thread>

#include "nrt/automorphism.hpp"
#include "nrt/error.hpp"

namespace nrt {

  namespace {
    // Runs body(worker, first, last) over `jobs` contiguous slices of
    // [0, total).
    template <typename Body>
    void parallel_ranges(std::uint64_t total, std::size_t jobs, Body&& body) {
      jobs = std::max<std::size_t>(1, jobs);
      auto slice = [&](std::size_t w) {
        return total * w / jobs;
      };
      if (jobs == 1) {
        body(0, std::uint64_t(0), total);
        return;
      }
      std::vector<std::jthread> threads;
      for (std::size_t w = 0; w < jobs; ++w) {
        threads.emplace_back([&, w] { body(w, slice(w), slice(w + 1)); });
      }
    }

    std::vector<std::uint64_t> rank_weights(CosetDecomposition const& d) {
      std::vector<std::uint64_t> weight(d.coset_count(), 0);
      std::uint64_t              w = 1;
      for (std::size_t c = 1; c < d.coset_count(); ++c) {
        weight[c] = w;
        w *= d.coset_size();
      }
      return weight;
    }

    std::uint32_t find_root(std::vector<std::uint32_t>& parent, std::uint32_t x) {
      while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x         = parent[x];
      }
      return x;
    }

    std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
      if (b != 0 && a > std::numeric_limits<std::uint64_t>::max() / b) {
        throw ResourceError("fixed-point count overflows 64 bits");
      }
      return a * b;
    }
  }  // namespace

  void act_into(CosetDecomposition const&     d,
                Permutation const&            f,
                std::span<element_type const> choice,
                std::span<element_type>       out) {
    for (auto x : choice) {
      auto y             = f(x);
      out[d.coset_of(y)] = y;
    }
  }

  Transversal act(Permutation const& f, Transversal const& s) {
    auto const& d = s.decomposition();
    if (!is_automorphism(d.group(), f) || !stabilizes(f, d.subgroup())) {
      throw PreconditionError("act: not an automorphism of G fixing H");
    }
    std::vector<element_type> out(d.coset_count());
    act_into(d, f, s.choice(), out);
    return Transversal(d, std::move(out));
  }

  std::vector<Permutation> generating_subset(std::vector<Permutation> const& elements) {
    std::vector<Permutation> gens;
    if (elements.empty()) {
      return gens;
    }
    std::set<Permutation> closure{Permutation::identity(elements[0].degree())};
    for (auto const& f : elements) {
      if (closure.contains(f)) {
        continue;
      }
      gens.push_back(f);
      std::vector<Permutation> queue(closure.begin(), closure.end());
      for (std::size_t i = 0; i < queue.size(); ++i) {
        for (auto const& g : gens) {
          auto p = queue[i] * g;
          if (closure.insert(p).second) {
            queue.push_back(std::move(p));
          }
        }
      }
    }
    return gens;
  }

  OrbitReport orbits_under(CosetDecomposition const&       d,
                           std::vector<Permutation> const& acting,
                           std::size_t                     acting_order,
                           std::vector<std::uint32_t>*     orbit_of_rank,
                           std::size_t                     jobs) {
    std::uint64_t const total = nrt_count(d);
    if (total > std::numeric_limits<std::uint32_t>::max()) {
      throw ResourceError("too many NRTs for orbit computation");
    }
    auto const weight = rank_weights(d);
    // image[g * total + r] = rank of acting[g] applied to NRT r
    std::vector<std::uint32_t> image(acting.size() * total);
    parallel_ranges(total, jobs, [&](std::size_t, std::uint64_t first,
                                     std::uint64_t last) {
      NrtCursor cursor(d, first, last);
      for (; !cursor.done(); cursor.advance()) {
        auto choice = cursor.choice();
        for (std::size_t g = 0; g < acting.size(); ++g) {
          std::uint64_t r = 0;
          for (auto x : choice) {
            auto y = acting[g](x);
            r += weight[d.coset_of(y)] * d.position_in_coset(y);
          }
          image[g * total + cursor.rank()] = static_cast<std::uint32_t>(r);
        }
      }
    });

    std::vector<std::uint32_t> parent(total);
    std::iota(parent.begin(), parent.end(), std::uint32_t(0));
    for (std::size_t g = 0; g < acting.size(); ++g) {
      for (std::uint64_t r = 0; r < total; ++r) {
        auto a = find_root(parent, static_cast<std::uint32_t>(r));
        auto b = find_root(parent, image[g * total + r]);
        if (a != b) {
          // the smaller rank stays the root
          if (a < b) {
            parent[b] = a;
          } else {
            parent[a] = b;
          }
        }
      }
    }

    OrbitReport report;
    report.acting_order = acting_order;
    std::vector<std::uint32_t> orbit_id(total);
    for (std::uint64_t r = 0; r < total; ++r) {
      auto root = find_root(parent, static_cast<std::uint32_t>(r));
      if (root == r) {
        orbit_id[r] = static_cast<std::uint32_t>(report.representatives.size());
        report.representatives.push_back(r);
        report.orbit_lengths.push_back(0);
      } else {
        orbit_id[r] = orbit_id[root];  // root < r, already numbered
      }
      ++report.orbit_lengths[orbit_id[r]];
    }
    report.orbit_count = report.representatives.size();
    if (orbit_of_rank != nullptr) {
      *orbit_of_rank = std::move(orbit_id);
    }
    return report;
  }

  OrbitReport orbit_report(CosetDecomposition const& d,
                           Limits const&             limits,
                           std::size_t               jobs) {
    auto const autos = aut_stabilizing(d.subgroup(), limits);
    return orbits_under(d, generating_subset(autos), autos.size(), nullptr,
                        jobs);
  }

  std::uint64_t conjugation_fixed_count(CosetDecomposition const& d,
                                        element_type              h) {
    auto const&       group = d.group();
    std::size_t const n     = d.coset_count();
    auto const        h_inv = group.inv(h);
    // h S h^-1 sends the choice in coset c to coset pi(c) = H x_c h^-1
    std::vector<std::size_t> pi(n);
    for (std::size_t c = 0; c < n; ++c) {
      pi[c] = d.coset_of(group.mul(d.members(c)[0], h_inv));
    }
    std::vector<bool> seen(n, false);
    seen[0]             = true;  // coset H: the forced choice 1 is fixed
    std::uint64_t count = 1;
    for (std::size_t c = 1; c < n; ++c) {
      if (seen[c]) {
        continue;
      }
      std::size_t length = 0;
      for (std::size_t x = c; !seen[x]; x = pi[x]) {
        seen[x] = true;
        ++length;
      }
      // a choice s in coset c determines the whole cycle; it closes up iff
      // s commutes with h^length
      auto const    hl     = group.power(h, length);
      std::uint64_t closes = 0;
      for (auto s : d.members(c)) {
        if (group.mul(hl, s) == group.mul(s, hl)) {
          ++closes;
        }
      }
      count = checked_mul(count, closes);
    }
    return count;
  }

  std::uint64_t burnside_conjugation_count(CosetDecomposition const& d) {
    std::uint64_t sum = 0;
    for (auto h : d.subgroup().elements()) {
      auto f = conjugation_fixed_count(d, h);
      if (sum > std::numeric_limits<std::uint64_t>::max() - f) {
        throw ResourceError("Burnside sum overflows 64 bits");
      }
      sum += f;
    }
    if (sum % d.coset_size() != 0) {
      throw std::logic_error("Burnside sum is not divisible by |H|");
    }
    return sum / d.coset_size();
  }

  std::uint64_t conjugation_orbit_count(CosetDecomposition const& d,
                                        std::size_t               jobs) {
    std::vector<Permutation> inner;
    for (auto h : d.subgroup().elements()) {
      inner.push_back(inner_automorphism(d.group(), h));
    }
    std::sort(inner.begin(), inner.end());
    inner.erase(std::unique(inner.begin(), inner.end()), inner.end());
    return orbits_under(d, generating_subset(inner), inner.size(), nullptr,
                        jobs)
        .orbit_count;
  }

  ////////////////////////////////////////////////////////////////////////
  // Classification
  ////////////////////////////////////////////////////////////////////////

  bool operator==(IsoClassReport const& a, IsoClassReport const& b) {
    auto same_orbits = [](std::optional<OrbitReport> const& x,
                          std::optional<OrbitReport> const& y) {
      if (x.has_value() != y.has_value()) {
        return false;
      }
      return !x
             || (x->acting_order == y->acting_order
                 && x->orbit_count == y->orbit_count
                 && x->orbit_lengths == y->orbit_lengths
                 && x->representatives == y->representatives);
    };
    auto same_classes = [](std::vector<IsoClass> const& x,
                           std::vector<IsoClass> const& y) {
      if (x.size() != y.size()) {
        return false;
      }
      for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i].form != y[i].form || x[i].size != y[i].size
            || x[i].representative_rank != y[i].representative_rank
            || x[i].generates_group != y[i].generates_group
            || x[i].is_subgroup != y[i].is_subgroup
            || x[i].torsion_order != y[i].torsion_order
            || x[i].orbit_count != y[i].orbit_count) {
          return false;
        }
      }
      return true;
    };
    return a.group_hash == b.group_hash && a.group_label == b.group_label
           && a.subgroup == b.subgroup && a.subgroup_order == b.subgroup_order
           && a.index == b.index && a.nrt_count == b.nrt_count
           && a.normal == b.normal && a.corefree == b.corefree
           && a.phi == b.phi && same_classes(a.classes, b.classes)
           && same_orbits(a.orbits, b.orbits)
           && a.orbits_refine_classes == b.orbits_refine_classes;
  }

  PairClassification classify_pair_detailed(CosetDecomposition const& d,
                                            ClassifyOptions const&    options) {
    auto const          start = std::chrono::steady_clock::now();
    std::uint64_t const total = nrt_count(d);
    if (total > options.enumeration_bound) {
      throw ResourceError("|T(G, H)| = " + std::to_string(total)
                          + " exceeds the enumeration bound "
                          + std::to_string(options.enumeration_bound));
    }
    std::size_t const n    = d.coset_count();
    std::size_t const jobs = std::max<std::size_t>(
        1, std::min<std::uint64_t>(options.jobs, total));

    PairClassification          out;
    out.class_of_rank.resize(total);
    std::vector<LoopClassifier> partial(jobs, LoopClassifier(n));
    parallel_ranges(total, jobs, [&](std::size_t w, std::uint64_t first,
                                     std::uint64_t last) {
      std::vector<loop_element> table(n * n);
      for (NrtCursor cursor(d, first, last); !cursor.done(); cursor.advance()) {
        induced_loop_into(d, cursor.choice(), table);
        out.class_of_rank[cursor.rank()] = static_cast<std::uint32_t>(
            partial[w].add(cursor.rank(), table));
      }
    });

    // merge into partial[0], then renumber classes by representative rank
    std::vector<std::vector<std::size_t>> mapping(jobs);
    mapping[0].resize(partial[0].class_count());
    std::iota(mapping[0].begin(), mapping[0].end(), std::size_t(0));
    for (std::size_t w = 1; w < jobs; ++w) {
      mapping[w] = partial[0].merge(partial[w]);
    }
    auto const               sorted = partial[0].sorted();
    std::vector<std::size_t> final_id(sorted.size());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      final_id[sorted[i].second.id] = i;
    }
    for (std::size_t w = 0; w < jobs; ++w) {
      for (std::uint64_t r = total * w / jobs; r < total * (w + 1) / jobs; ++r) {
        out.class_of_rank[r] = static_cast<std::uint32_t>(
            final_id[mapping[w][out.class_of_rank[r]]]);
      }
    }

    auto const& group = d.group();
    auto&       report = out.report;
    report.group_hash     = group.content_hash();
    report.group_label    = options.group_label;
    report.subgroup       = d.subgroup().elements();
    report.subgroup_order = d.coset_size();
    report.index          = n;
    report.nrt_count      = total;
    report.normal         = d.subgroup().is_normal();
    report.corefree       = core(d.subgroup()).size() == 1;
    report.phi            = sorted.size();
    for (auto const& [form, entry] : sorted) {
      auto     s = nrt_unrank(d, entry.representative_rank);
      IsoClass c;
      c.form                = form;
      c.size                = entry.count;
      c.representative_rank = entry.representative_rank;
      c.generates_group     = span(s).size() == group.order();
      c.is_subgroup         = is_subgroup(s);
      c.torsion_order       = group_torsion(s).size();
      report.classes.push_back(std::move(c));
    }

    if (options.orbits) {
      auto const autos = aut_stabilizing(d.subgroup(), options.limits);
      report.orbits    = orbits_under(d, generating_subset(autos), autos.size(),
                                      &out.orbit_of_rank, jobs);
      bool refine = true;
      for (std::uint64_t r = 0; r < total && refine; ++r) {
        auto rep = report.orbits->representatives[out.orbit_of_rank[r]];
        refine   = out.class_of_rank[r] == out.class_of_rank[rep];
      }
      report.orbits_refine_classes = refine;
      for (auto rep : report.orbits->representatives) {
        ++report.classes[out.class_of_rank[rep]].orbit_count;
      }
    }
    report.seconds = std::chrono::duration<double>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    return out;
  }

  IsoClassReport classify_pair(CosetDecomposition const& d,
                               ClassifyOptions const&    options) {
    return classify_pair_detailed(d, options).report;
  }

}  // namespace nrt
