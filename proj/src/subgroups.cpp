// nrtkit - enumeration and classification of normalized right transversals

#include "nrt/subgroups.hpp"

#include <algorithm>
#include <set>

#include "nrt/error.hpp"

namespace nrt {

  namespace {
    // Smallest subgroup containing both element sets.
    std::vector<element_type> join(GroupTable const&                group,
                                   std::vector<element_type> const& a,
                                   std::vector<element_type> const& b) {
      std::vector<element_type> gens(a);
      gens.insert(gens.end(), b.begin(), b.end());
      return generate_subgroup(group, gens).elements();
    }

    bool sorted_by_size_then_elements(SubgroupHandle const& a,
                                      SubgroupHandle const& b) {
      if (a.size() != b.size()) {
        return a.size() < b.size();
      }
      return a.elements() < b.elements();
    }
  }  // namespace

  std::vector<SubgroupHandle> subgroups_all(GroupTable const& group,
                                            Limits const&     limits) {
    if (group.order() > limits.subgroup_bound) {
      throw ResourceError("subgroup enumeration bound "
                          + std::to_string(limits.subgroup_bound)
                          + " exceeded by a group of order "
                          + std::to_string(group.order()));
    }
    std::set<std::vector<element_type>> found;
    for (element_type x = 0; x < group.order(); ++x) {
      element_type gen[1] = {x};
      found.insert(generate_subgroup(group, gen).elements());
    }
    std::vector<std::vector<element_type>> cyclic(found.begin(), found.end());
    std::vector<std::vector<element_type>> layer(found.begin(), found.end());
    // Every subgroup is a join of cyclic subgroups; extend one cyclic
    // subgroup at a time until no new subgroup appears.
    while (!layer.empty()) {
      std::vector<std::vector<element_type>> next;
      for (auto const& s : layer) {
        for (auto const& c : cyclic) {
          if (std::includes(s.begin(), s.end(), c.begin(), c.end())) {
            continue;
          }
          auto j = join(group, s, c);
          if (found.insert(j).second) {
            next.push_back(std::move(j));
          }
        }
      }
      layer = std::move(next);
    }
    std::vector<SubgroupHandle> result;
    result.reserve(found.size());
    for (auto const& s : found) {
      result.emplace_back(group, s);
    }
    std::sort(result.begin(), result.end(), sorted_by_size_then_elements);
    return result;
  }

  SubgroupHandle conjugate(SubgroupHandle const& h, element_type g) {
    auto const&               group = h.parent();
    std::vector<element_type> elements;
    for (auto x : h.elements()) {
      elements.push_back(group.conj(x, g));
    }
    std::sort(elements.begin(), elements.end());
    return SubgroupHandle(group, std::move(elements));
  }

  SubgroupHandle intersection(SubgroupHandle const& a, SubgroupHandle const& b) {
    if (&a.parent() != &b.parent()) {
      throw PreconditionError("subgroups of different groups");
    }
    std::vector<element_type> elements;
    std::set_intersection(a.elements().begin(), a.elements().end(),
                          b.elements().begin(), b.elements().end(),
                          std::back_inserter(elements));
    return SubgroupHandle(a.parent(), std::move(elements));
  }

  SubgroupHandle core(SubgroupHandle const& h) {
    if (h.is_normal()) {
      return h;
    }
    auto const&               group = h.parent();
    std::vector<element_type> elements;
    for (auto x : h.elements()) {
      bool in_all = true;
      for (element_type g = 0; g < group.order() && in_all; ++g) {
        in_all = h.contains(group.conj(x, g));
      }
      if (in_all) {
        elements.push_back(x);
      }
    }
    return SubgroupHandle(group, std::move(elements));
  }

  bool is_normal(SubgroupHandle const& h) {
    return h.is_normal();
  }

  SubgroupHandle normalizer(SubgroupHandle const& h) {
    auto const&               group = h.parent();
    std::vector<element_type> elements;
    for (element_type g = 0; g < group.order(); ++g) {
      bool normalizes = true;
      for (auto x : h.elements()) {
        if (!h.contains(group.conj(x, g))) {
          normalizes = false;
          break;
        }
      }
      if (normalizes) {
        elements.push_back(g);
      }
    }
    return SubgroupHandle(group, std::move(elements));
  }

  SubgroupHandle center(GroupTable const& group) {
    std::vector<element_type> elements;
    for (element_type z = 0; z < group.order(); ++z) {
      bool central = true;
      for (element_type g = 0; g < group.order() && central; ++g) {
        central = group.mul(z, g) == group.mul(g, z);
      }
      if (central) {
        elements.push_back(z);
      }
    }
    return SubgroupHandle(group, std::move(elements));
  }

  SubgroupHandle whole_group(GroupTable const& group) {
    std::vector<element_type> elements(group.order());
    for (element_type x = 0; x < group.order(); ++x) {
      elements[x] = x;
    }
    return SubgroupHandle(group, std::move(elements));
  }

  SubgroupHandle trivial_subgroup(GroupTable const& group) {
    return SubgroupHandle(group, {0});
  }

  Quotient quotient(SubgroupHandle const& n) {
    if (!n.is_normal()) {
      throw PreconditionError("quotient by a non-normal subgroup");
    }
    auto const&               group = n.parent();
    constexpr element_type    NONE  = static_cast<element_type>(-1);
    std::vector<element_type> projection(group.order(), NONE);
    std::vector<element_type> reps;
    for (element_type x = 0; x < group.order(); ++x) {
      if (projection[x] != NONE) {
        continue;
      }
      auto c = static_cast<element_type>(reps.size());
      reps.push_back(x);
      for (auto h : n.elements()) {
        projection[group.mul(h, x)] = c;
      }
    }
    std::size_t const         m = reps.size();
    std::vector<element_type> mul(m * m);
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t b = 0; b < m; ++b) {
        mul[a * m + b] = projection[group.mul(reps[a], reps[b])];
      }
    }
    std::vector<std::string> names;
    for (auto r : reps) {
      names.push_back("N" + group.name(r));
    }
    std::set<element_type>    gen_set;
    for (auto g : group.generators()) {
      gen_set.insert(projection[g]);
    }
    std::vector<element_type> gens(gen_set.begin(), gen_set.end());
    return Quotient{GroupTable(m, std::move(mul), std::move(names),
                               std::move(gens)),
                    std::move(projection)};
  }

}  // namespace nrt
