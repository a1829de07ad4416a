// nrtkit - enumeration and classification of normalized right transversals

#include "nrt/automorphism.hpp"

#include <algorithm>
#include <set>

#include "nrt/error.hpp"

namespace nrt {

  namespace {
    constexpr element_type UNDEFINED = static_cast<element_type>(-1);

    // Extends f from the subgroup generated by gens[0..k-1] (images
    // images[0..k-1]) by breadth-first closure. Returns false on an
    // inconsistency or a collision; `f` and `used` hold the partial map.
    bool extend_partial(GroupTable const&                group,
                        std::vector<element_type> const& gens,
                        std::vector<element_type> const& images,
                        std::size_t                      k,
                        std::vector<element_type>&       f,
                        std::vector<bool>&               used) {
      std::fill(f.begin(), f.end(), UNDEFINED);
      std::fill(used.begin(), used.end(), false);
      f[0]    = 0;
      used[0] = true;
      std::vector<element_type> queue{0};
      for (std::size_t i = 0; i < queue.size(); ++i) {
        auto x = queue[i];
        for (std::size_t g = 0; g < k; ++g) {
          auto y  = group.mul(x, gens[g]);
          auto fy = group.mul(f[x], images[g]);
          if (f[y] == UNDEFINED) {
            if (used[fy]) {
              return false;
            }
            f[y]     = fy;
            used[fy] = true;
            queue.push_back(y);
          } else if (f[y] != fy) {
            return false;
          }
        }
      }
      return true;
    }
  }  // namespace

  std::vector<element_type> minimal_generating_sequence(GroupTable const& group) {
    std::vector<std::size_t> orders(group.order());
    for (element_type x = 0; x < group.order(); ++x) {
      orders[x] = group.element_order(x);
    }
    std::vector<element_type> gens;
    std::vector<element_type> span{0};
    while (span.size() < group.order()) {
      std::vector<bool> in_span(group.order(), false);
      for (auto x : span) {
        in_span[x] = true;
      }
      element_type best = UNDEFINED;
      for (element_type x = 0; x < group.order(); ++x) {
        if (!in_span[x] && (best == UNDEFINED || orders[x] > orders[best])) {
          best = x;
        }
      }
      gens.push_back(best);
      span = generate_subgroup(group, gens).elements();
    }
    // drop redundant generators
    for (std::size_t i = gens.size(); i-- > 0;) {
      std::vector<element_type> rest(gens);
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
      if (generate_subgroup(group, rest).size() == group.order()) {
        gens = std::move(rest);
      }
    }
    return gens;
  }

  std::vector<Permutation> automorphisms(GroupTable const& group,
                                         Limits const&     limits) {
    if (group.order() > limits.automorphism_bound) {
      throw ResourceError("automorphism search bound "
                          + std::to_string(limits.automorphism_bound)
                          + " exceeded by a group of order "
                          + std::to_string(group.order()));
    }
    std::size_t const         n    = group.order();
    auto const                gens = minimal_generating_sequence(group);
    std::vector<std::size_t>  orders(n);
    for (element_type x = 0; x < n; ++x) {
      orders[x] = group.element_order(x);
    }
    std::vector<element_type> images(gens.size(), 0);
    std::vector<element_type> f(n);
    std::vector<bool>         used(n);
    std::vector<Permutation>  result;

    auto search = [&](auto&& self, std::size_t k) -> void {
      if (k == gens.size()) {
        extend_partial(group, gens, images, k, f, used);
        result.emplace_back(std::vector<point_type>(f.begin(), f.end()));
        return;
      }
      // f is consistent on <gens[0..k-1]>; recompute it for this level
      std::vector<bool> taken(n, false);
      extend_partial(group, gens, images, k, f, used);
      taken = used;
      for (element_type y = 1; y < n; ++y) {
        if (orders[y] != orders[gens[k]] || taken[y]) {
          continue;
        }
        images[k] = y;
        if (extend_partial(group, gens, images, k + 1, f, used)) {
          if (k + 1 < gens.size()
              || std::count(used.begin(), used.end(), true)
                     == static_cast<std::ptrdiff_t>(n)) {
            self(self, k + 1);
          }
        }
      }
    };
    search(search, 0);
    std::sort(result.begin(), result.end());
    return result;
  }

  std::vector<Permutation> automorphisms_brute_force(GroupTable const& group) {
    std::size_t const n = group.order();
    if (n > 12) {
      throw ResourceError("brute-force automorphism search is limited to "
                          "order 12");
    }
    std::vector<element_type> f(n, UNDEFINED);
    std::vector<bool>         used(n, false);
    std::vector<Permutation>  result;
    f[0]    = 0;
    used[0] = true;

    // every product among assigned elements involving x must be respected
    auto consistent = [&](element_type x) {
      for (element_type a = 0; a <= x; ++a) {
        for (element_type b = 0; b <= x; ++b) {
          if (a != x && b != x) {
            auto c = group.mul(a, b);
            if (c == x && group.mul(f[a], f[b]) != f[x]) {
              return false;
            }
            continue;
          }
          auto c = group.mul(a, b);
          if (c <= x && group.mul(f[a], f[b]) != f[c]) {
            return false;
          }
        }
      }
      return true;
    };

    auto search = [&](auto&& self, element_type x) -> void {
      if (x == n) {
        result.emplace_back(std::vector<point_type>(f.begin(), f.end()));
        return;
      }
      for (element_type y = 1; y < n; ++y) {
        if (used[y]) {
          continue;
        }
        f[x]    = y;
        used[y] = true;
        if (consistent(x)) {
          self(self, x + 1);
        }
        used[y] = false;
      }
      f[x] = UNDEFINED;
    };
    if (n == 1) {
      result.push_back(Permutation::identity(1));
    } else {
      search(search, 1);
    }
    std::sort(result.begin(), result.end());
    return result;
  }

  bool stabilizes(Permutation const& f, SubgroupHandle const& h) {
    for (auto x : h.elements()) {
      if (!h.contains(f(x))) {
        return false;
      }
    }
    return true;
  }

  std::vector<Permutation>
  aut_stabilizing(SubgroupHandle const&           h,
                  std::vector<Permutation> const& autos) {
    std::vector<Permutation> result;
    for (auto const& f : autos) {
      if (stabilizes(f, h)) {
        result.push_back(f);
      }
    }
    std::set<Permutation> members(result.begin(), result.end());
    for (auto const& a : result) {
      for (auto const& b : result) {
        if (!members.contains(a * b)) {
          throw PreconditionError("stabilizer is not closed under "
                                  "composition; the automorphism list is "
                                  "incomplete");
        }
      }
    }
    return result;
  }

  std::vector<Permutation> aut_stabilizing(SubgroupHandle const& h,
                                           Limits const&         limits) {
    return aut_stabilizing(h, automorphisms(h.parent(), limits));
  }

  Permutation inner_automorphism(GroupTable const& group, element_type g) {
    std::vector<point_type> images(group.order());
    for (element_type x = 0; x < group.order(); ++x) {
      images[x] = group.conj(x, g);
    }
    return Permutation(std::move(images));
  }

}  // namespace nrt
