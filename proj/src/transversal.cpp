// nrtkit - enumeration and classification of normalized right transversals

#include "nrt/transversal.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>

#include "nrt/error.hpp"

namespace nrt {

  namespace {
    constexpr loop_element NO_COSET = static_cast<loop_element>(-1);
  }

  ////////////////////////////////////////////////////////////////////////
  // CosetDecomposition
  ////////////////////////////////////////////////////////////////////////

  CosetDecomposition::CosetDecomposition(SubgroupHandle subgroup)
      : _subgroup(std::move(subgroup)),
        _coset_of(_subgroup.parent().order(), NO_COSET),
        _position(_subgroup.parent().order(), 0) {
    auto const& group = _subgroup.parent();
    for (element_type x = 0; x < group.order(); ++x) {
      if (_coset_of[x] != NO_COSET) {
        continue;
      }
      auto                      c = static_cast<loop_element>(_members.size());
      std::vector<element_type> coset;
      for (auto h : _subgroup.elements()) {
        coset.push_back(group.mul(h, x));
      }
      std::sort(coset.begin(), coset.end());
      for (std::size_t i = 0; i < coset.size(); ++i) {
        _coset_of[coset[i]] = c;
        _position[coset[i]] = i;
      }
      _members.push_back(std::move(coset));
    }
  }

  CosetDecomposition right_cosets(SubgroupHandle const& subgroup) {
    return CosetDecomposition(subgroup);
  }

  ////////////////////////////////////////////////////////////////////////
  // Transversal
  ////////////////////////////////////////////////////////////////////////

  Transversal::Transversal(CosetDecomposition const& d,
                           std::vector<element_type> choice)
      : _decomposition(&d), _choice(std::move(choice)) {
    if (_choice.size() != d.coset_count()) {
      throw ValidationError("a transversal needs one element per coset");
    }
    if (_choice[0] != 0) {
      throw ValidationError("a normalized transversal contains the identity");
    }
    for (std::size_t c = 0; c < _choice.size(); ++c) {
      if (_choice[c] >= d.group().order() || d.coset_of(_choice[c]) != c) {
        throw ValidationError("choice for coset " + std::to_string(c)
                              + " lies outside that coset");
      }
    }
  }

  std::vector<element_type> Transversal::elements() const {
    std::vector<element_type> e(_choice);
    std::sort(e.begin(), e.end());
    return e;
  }

  Transversal transversal_from_elements(CosetDecomposition const&     d,
                                        std::span<element_type const> elements) {
    std::vector<element_type> choice(d.coset_count(), 0);
    std::vector<bool>         filled(d.coset_count(), false);
    if (elements.size() != d.coset_count()) {
      throw ValidationError("a transversal needs one element per coset");
    }
    for (auto x : elements) {
      if (x >= d.group().order()) {
        throw ValidationError("element out of range");
      }
      auto c = d.coset_of(x);
      if (filled[c]) {
        throw ValidationError("two elements in the same coset");
      }
      filled[c] = true;
      choice[c] = x;
    }
    return Transversal(d, std::move(choice));
  }

  std::uint64_t nrt_count(CosetDecomposition const& d) {
    std::uint64_t const limit = std::numeric_limits<std::int64_t>::max();
    std::uint64_t       count = 1;
    for (std::size_t c = 1; c < d.coset_count(); ++c) {
      if (count > limit / d.coset_size()) {
        throw ResourceError("|T(G, H)| does not fit in 63 bits");
      }
      count *= d.coset_size();
    }
    return count;
  }

  Transversal nrt_unrank(CosetDecomposition const& d, TransversalRank r) {
    if (r >= nrt_count(d)) {
      throw PreconditionError("rank " + std::to_string(r) + " out of range");
    }
    std::vector<element_type> choice(d.coset_count(), 0);
    for (std::size_t c = 1; c < d.coset_count(); ++c) {
      choice[c] = d.members(c)[r % d.coset_size()];
      r /= d.coset_size();
    }
    return Transversal(d, std::move(choice));
  }

  TransversalRank nrt_rank(Transversal const& s) {
    auto const&     d = s.decomposition();
    TransversalRank r = 0;
    for (std::size_t c = d.coset_count(); c-- > 1;) {
      r = r * d.coset_size() + d.position_in_coset(s.choice(c));
    }
    return r;
  }

  NrtCursor::NrtCursor(CosetDecomposition const& d,
                       TransversalRank           first,
                       TransversalRank           last)
      : _decomposition(&d),
        _rank(first),
        _last(std::min<TransversalRank>(last, nrt_count(d))),
        _digits(d.coset_count(), 0),
        _choice(d.coset_count(), 0) {
    if (_rank >= _last) {
      return;
    }
    TransversalRank r = first;
    for (std::size_t c = 1; c < d.coset_count(); ++c) {
      _digits[c] = r % d.coset_size();
      _choice[c] = d.members(c)[_digits[c]];
      r /= d.coset_size();
    }
  }

  void NrtCursor::advance() {
    ++_rank;
    if (_rank >= _last) {
      return;
    }
    auto const& d = *_decomposition;
    for (std::size_t c = 1; c < d.coset_count(); ++c) {
      if (++_digits[c] < d.coset_size()) {
        _choice[c] = d.members(c)[_digits[c]];
        return;
      }
      _digits[c] = 0;
      _choice[c] = d.members(c)[0];
    }
  }

  NrtCursor nrt_iter(CosetDecomposition const& d) {
    return NrtCursor(d, 0, nrt_count(d));
  }

  ////////////////////////////////////////////////////////////////////////
  // Induced structures
  ////////////////////////////////////////////////////////////////////////

  void induced_loop_into(CosetDecomposition const&     d,
                         std::span<element_type const> choice,
                         std::span<loop_element>       out) {
    std::size_t const n     = d.coset_count();
    auto const&       group = d.group();
    for (std::size_t i = 0; i < n; ++i) {
      auto row = group.row(choice[i]);
      for (std::size_t j = 0; j < n; ++j) {
        out[i * n + j] = d.coset_of(row[choice[j]]);
      }
    }
  }

  RightLoopTable induced_loop(Transversal const& s) {
    auto const&               d     = s.decomposition();
    auto const&               group = d.group();
    std::size_t const         n     = d.coset_count();
    std::vector<loop_element> t(n * n);
    induced_loop_into(d, s.choice(), t);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        // (H xy n S) is a singleton: its element is the chosen representative
        // z of the coset of xy, and xy z^-1 must lie in H.
        auto xy = group.mul(s.choice(i), s.choice(j));
        auto z  = s.choice(t[i * n + j]);
        if (!d.subgroup().contains(group.mul(xy, group.inv(z)))) {
          throw std::logic_error("Hxy n S is not the chosen representative");
        }
      }
    }
    return RightLoopTable(n, std::move(t));
  }

  Permutation chi(Transversal const& s, element_type g) {
    auto const&             d = s.decomposition();
    std::vector<point_type> images(d.coset_count());
    for (std::size_t x = 0; x < d.coset_count(); ++x) {
      images[x] = d.coset_of(d.group().mul(s.choice(x), g));
    }
    return Permutation(std::move(images));
  }

  std::vector<element_type> chi_kernel(CosetDecomposition const& d) {
    auto const&               group = d.group();
    std::vector<element_type> kernel;
    for (element_type g = 0; g < group.order(); ++g) {
      bool fixes_all = true;
      for (std::size_t c = 0; c < d.coset_count() && fixes_all; ++c) {
        fixes_all = d.coset_of(group.mul(d.members(c)[0], g)) == c;
      }
      if (fixes_all) {
        kernel.push_back(g);
      }
    }
    return kernel;
  }

  SubgroupHandle span(Transversal const& s) {
    return generate_subgroup(s.decomposition().group(), s.choice());
  }

  SubgroupHandle h_s(Transversal const& s) {
    auto const&       d     = s.decomposition();
    auto const&       group = d.group();
    std::size_t const n     = d.coset_count();
    std::set<element_type> defects;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        auto xy = group.mul(s.choice(i), s.choice(j));
        auto z  = s.choice(d.coset_of(xy));
        defects.insert(group.mul(xy, group.inv(z)));
      }
    }
    std::vector<element_type> gens(defects.begin(), defects.end());
    return generate_subgroup(group, gens);
  }

  bool hs_times_s_is_span(Transversal const& s) {
    auto const&            group = s.decomposition().group();
    auto                   hs    = h_s(s);
    std::set<element_type> product;
    for (auto h : hs.elements()) {
      for (auto x : s.choice()) {
        product.insert(group.mul(h, x));
      }
    }
    auto const  whole     = span(s);
    auto const& generated = whole.elements();
    return std::equal(product.begin(), product.end(), generated.begin(),
                      generated.end());
  }

  bool is_subgroup(Transversal const& s) {
    auto const&       d     = s.decomposition();
    auto const&       group = d.group();
    std::vector<bool> member(group.order(), false);
    for (auto x : s.choice()) {
      member[x] = true;
    }
    for (auto x : s.choice()) {
      for (auto y : s.choice()) {
        if (!member[group.mul(x, y)]) {
          return false;
        }
      }
    }
    return true;
  }

  std::vector<Permutation> group_torsion(Transversal const& s) {
    std::set<Permutation> images;
    auto const            hs = h_s(s);
    for (auto h : hs.elements()) {
      images.insert(chi(s, h));
    }
    return {images.begin(), images.end()};
  }

  std::vector<Permutation> group_torsion_of_loop(RightLoopTable const& loop,
                                                 Limits const&         limits) {
    std::size_t const        n = loop.order();
    std::vector<Permutation> gens;
    for (loop_element y = 0; y < n; ++y) {
      std::vector<point_type> images(n);
      for (loop_element x = 0; x < n; ++x) {
        images[x] = loop.op(x, y);
      }
      gens.emplace_back(std::move(images));
    }
    std::set<Permutation>    seen{Permutation::identity(n)};
    std::vector<Permutation> queue{Permutation::identity(n)};
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (auto const& g : gens) {
        auto p = queue[i] * g;
        if (seen.insert(p).second) {
          if (seen.size() > limits.closure_bound) {
            throw ResourceError("right multiplication group exceeds the "
                                "closure bound");
          }
          queue.push_back(std::move(p));
        }
      }
    }
    std::vector<Permutation> stabilizer;
    for (auto const& p : seen) {
      if (p(0) == 0) {
        stabilizer.push_back(p);
      }
    }
    return stabilizer;
  }

  SubgroupHandle project_subgroup(SubgroupHandle const& h, Quotient const& q) {
    std::set<element_type> image;
    for (auto x : h.elements()) {
      image.insert(q.projection[x]);
    }
    return SubgroupHandle(q.group,
                          std::vector<element_type>(image.begin(), image.end()));
  }

  Transversal project_transversal(Transversal const&        s,
                                  Quotient const&           q,
                                  CosetDecomposition const& target) {
    std::vector<element_type> image;
    for (auto x : s.choice()) {
      image.push_back(q.projection[x]);
    }
    return transversal_from_elements(target, image);
  }

  RightLoopTable cayley_loop(GroupTable const& group) {
    std::size_t const         n = group.order();
    std::vector<loop_element> t(group.table().begin(), group.table().end());
    return RightLoopTable(n, std::move(t));
  }

}  // namespace nrt
