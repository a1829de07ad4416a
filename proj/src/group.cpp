// nrtkit - enumeration and classification of normalized right transversals

#include "nrt/group.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdio>
#include <deque>
#include <map>
#include <numeric>

#include "nrt/error.hpp"

namespace nrt {

  namespace {
    constexpr element_type UNDEFINED = static_cast<element_type>(-1);

    std::string strip_spaces(std::string_view s) {
      std::string out;
      for (char c : s) {
        if (!std::isspace(static_cast<unsigned char>(c))) {
          out += c;
        }
      }
      return out;
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // GroupTable
  ////////////////////////////////////////////////////////////////////////

  GroupTable::GroupTable(std::size_t               order,
                         std::vector<element_type> mul,
                         std::vector<std::string>  names,
                         std::vector<element_type> generators,
                         std::vector<Permutation>  permutations)
      : _order(order),
        _mul(std::move(mul)),
        _inv(order, UNDEFINED),
        _names(std::move(names)),
        _generators(std::move(generators)),
        _perms(std::move(permutations)) {
    if (order == 0) {
      throw ValidationError("a group has at least one element");
    }
    if (_mul.size() != order * order) {
      throw ValidationError("multiplication table has the wrong size");
    }
    if (_names.empty()) {
      for (std::size_t i = 0; i < order; ++i) {
        _names.push_back("#" + std::to_string(i));
      }
    } else if (_names.size() != order) {
      throw ValidationError("wrong number of element names");
    }
    if (!_perms.empty() && _perms.size() != order) {
      throw ValidationError("wrong number of permutations");
    }
    for (auto g : _generators) {
      if (g >= order) {
        throw ValidationError("generator out of range");
      }
    }
    std::vector<bool> seen(order);
    for (std::size_t a = 0; a < order; ++a) {
      if (this->mul(0, a) != a || this->mul(a, 0) != a) {
        throw ValidationError("element 0 is not the identity");
      }
      std::fill(seen.begin(), seen.end(), false);
      for (std::size_t b = 0; b < order; ++b) {
        auto c = this->mul(a, b);
        if (c >= order || seen[c]) {
          throw ValidationError("row " + std::to_string(a)
                                + " is not a permutation");
        }
        seen[c] = true;
        if (c == 0) {
          _inv[a] = static_cast<element_type>(b);
        }
      }
    }
    for (std::size_t b = 0; b < order; ++b) {
      std::fill(seen.begin(), seen.end(), false);
      for (std::size_t a = 0; a < order; ++a) {
        auto c = this->mul(a, b);
        if (seen[c]) {
          throw ValidationError("column " + std::to_string(b)
                                + " is not a permutation");
        }
        seen[c] = true;
      }
    }
    for (std::size_t a = 0; a < order; ++a) {
      if (this->mul(_inv[a], a) != 0) {
        throw ValidationError("left and right inverses differ");
      }
    }
  }

  element_type GroupTable::power(element_type a, std::size_t k) const {
    element_type result = 0;
    for (std::size_t i = 0; i < k; ++i) {
      result = mul(result, a);
    }
    return result;
  }

  std::size_t GroupTable::element_order(element_type a) const {
    std::size_t  k = 1;
    element_type x = a;
    while (x != 0) {
      x = mul(x, a);
      ++k;
    }
    return k;
  }

  bool GroupTable::is_abelian() const {
    for (element_type a = 0; a < _order; ++a) {
      for (element_type b = a + 1; b < _order; ++b) {
        if (mul(a, b) != mul(b, a)) {
          return false;
        }
      }
    }
    return true;
  }

  bool GroupTable::is_associative() const {
    for (element_type a = 0; a < _order; ++a) {
      for (element_type b = 0; b < _order; ++b) {
        auto ab = mul(a, b);
        for (element_type c = 0; c < _order; ++c) {
          if (mul(ab, c) != mul(a, mul(b, c))) {
            return false;
          }
        }
      }
    }
    return true;
  }

  std::optional<element_type> GroupTable::find(std::string_view token) const {
    std::string t = strip_spaces(token);
    if (t.empty()) {
      return std::nullopt;
    }
    if (t[0] == '#') {
      if (t.size() == 1
          || !std::all_of(t.begin() + 1, t.end(), [](unsigned char c) {
               return std::isdigit(c);
             })) {
        return std::nullopt;
      }
      auto k = std::stoul(t.substr(1));
      if (k >= _order) {
        return std::nullopt;
      }
      return static_cast<element_type>(k);
    }
    for (std::size_t i = 0; i < _order; ++i) {
      if (strip_spaces(_names[i]) == t) {
        return static_cast<element_type>(i);
      }
    }
    if (!_perms.empty() && t[0] == '(') {
      std::optional<Permutation> p;
      try {
        if (max_point_in_cycles(t) <= degree()) {
          p = Permutation::from_cycles(t, degree());
        }
      } catch (Error const&) {
        return std::nullopt;
      }
      if (p) {
        auto it = std::find(_perms.begin(), _perms.end(), *p);
        if (it != _perms.end()) {
          return static_cast<element_type>(it - _perms.begin());
        }
      }
    }
    return std::nullopt;
  }

  std::string sha256_hex(std::string_view bytes) {
    std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
    unsigned int                                len = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), digest.data(), &len,
                   EVP_sha256(), nullptr)
        != 1) {
      throw Error("SHA-256 computation failed");
    }
    std::string hex;
    char        buf[3];
    for (unsigned i = 0; i < len; ++i) {
      std::snprintf(buf, sizeof(buf), "%02x", digest[i]);
      hex += buf;
    }
    return hex;
  }

  std::string GroupTable::content_hash() const {
    std::string bytes;
    bytes.reserve(_mul.size() * 4);
    for (auto v : _mul) {
      for (int s = 0; s < 32; s += 8) {
        bytes.push_back(static_cast<char>((v >> s) & 0xFF));
      }
    }
    return sha256_hex(bytes);
  }

  ////////////////////////////////////////////////////////////////////////
  // SubgroupHandle
  ////////////////////////////////////////////////////////////////////////

  SubgroupHandle::SubgroupHandle(GroupTable const&         parent,
                                 std::vector<element_type> elements)
      : _parent(&parent),
        _elements(std::move(elements)),
        _member(parent.order(), false) {
    if (_elements.empty() || _elements[0] != 0) {
      throw ValidationError("a subgroup must contain the identity");
    }
    for (std::size_t i = 0; i < _elements.size(); ++i) {
      if (_elements[i] >= parent.order()
          || (i > 0 && _elements[i] <= _elements[i - 1])) {
        throw ValidationError("subgroup elements must be strictly increasing");
      }
      _member[_elements[i]] = true;
    }
    if (parent.order() % _elements.size() != 0) {
      throw ValidationError("subgroup order does not divide group order");
    }
    for (auto a : _elements) {
      if (!_member[parent.inv(a)]) {
        throw ValidationError("subset is not closed under inverses");
      }
      for (auto b : _elements) {
        if (!_member[parent.mul(a, b)]) {
          throw ValidationError("subset is not closed under multiplication");
        }
      }
    }
    _normal = true;
    for (element_type g = 0; g < parent.order() && _normal; ++g) {
      for (auto h : _elements) {
        if (!_member[parent.conj(h, g)]) {
          _normal = false;
          break;
        }
      }
    }
  }

  SubgroupHandle generate_subgroup(GroupTable const&             group,
                                   std::span<element_type const> gens) {
    std::vector<bool>         member(group.order(), false);
    std::vector<element_type> elements{0};
    member[0] = true;
    for (std::size_t i = 0; i < elements.size(); ++i) {
      for (auto g : gens) {
        auto y = group.mul(elements[i], g);
        if (!member[y]) {
          member[y] = true;
          elements.push_back(y);
        }
      }
    }
    std::sort(elements.begin(), elements.end());
    return SubgroupHandle(group, std::move(elements));
  }

  ////////////////////////////////////////////////////////////////////////
  // Constructions
  ////////////////////////////////////////////////////////////////////////

  GroupTable build_from_generators(std::size_t                  degree,
                                   std::span<Permutation const> gens,
                                   Limits const&                limits) {
    for (auto const& g : gens) {
      if (g.degree() != degree) {
        throw PreconditionError("generator " + g.to_cycles()
                                + " has the wrong degree");
      }
    }
    std::vector<Permutation>            elements{Permutation::identity(degree)};
    std::map<Permutation, element_type> index{{elements[0], 0}};
    // right[g][x] = index of elements[x] * gens[g]
    std::vector<std::vector<element_type>> right(gens.size());
    // each element other than 0 is parent * gens[via]
    std::vector<element_type> parent{0}, via{0};

    for (std::size_t x = 0; x < elements.size(); ++x) {
      for (std::size_t g = 0; g < gens.size(); ++g) {
        Permutation y  = elements[x] * gens[g];
        auto [it, new_element] = index.try_emplace(
            y, static_cast<element_type>(elements.size()));
        if (new_element) {
          if (elements.size() >= limits.closure_bound) {
            throw ResourceError("closure exceeds the order bound "
                                + std::to_string(limits.closure_bound));
          }
          elements.push_back(std::move(y));
          parent.push_back(static_cast<element_type>(x));
          via.push_back(static_cast<element_type>(g));
        }
        right[g].push_back(it->second);
      }
    }

    std::size_t const         n = elements.size();
    std::vector<element_type> mul(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      mul[a * n] = static_cast<element_type>(a);
      for (std::size_t k = 1; k < n; ++k) {
        mul[a * n + k] = right[via[k]][mul[a * n + parent[k]]];
      }
    }
    std::vector<std::string> names;
    names.reserve(n);
    for (auto const& p : elements) {
      names.push_back(p.to_cycles());
    }
    std::vector<element_type> generators;
    for (auto const& g : gens) {
      generators.push_back(index.at(g));
    }
    return GroupTable(n, std::move(mul), std::move(names),
                      std::move(generators), std::move(elements));
  }

  GroupTable direct_product(GroupTable const& a, GroupTable const& b) {
    std::size_t const         na = a.order(), nb = b.order(), n = na * nb;
    std::vector<element_type> mul(n * n);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        auto ea = a.mul(static_cast<element_type>(x / nb),
                        static_cast<element_type>(y / nb));
        auto eb = b.mul(static_cast<element_type>(x % nb),
                        static_cast<element_type>(y % nb));
        mul[x * n + y] = static_cast<element_type>(ea * nb + eb);
      }
    }
    std::vector<std::string> names;
    for (std::size_t x = 0; x < n; ++x) {
      names.push_back(a.name(static_cast<element_type>(x / nb)) + "|"
                      + b.name(static_cast<element_type>(x % nb)));
    }
    std::vector<element_type> gens;
    for (auto g : a.generators()) {
      gens.push_back(static_cast<element_type>(g * nb));
    }
    for (auto g : b.generators()) {
      gens.push_back(g);
    }
    return GroupTable(n, std::move(mul), std::move(names), std::move(gens));
  }

  GroupTable semidirect_product(GroupTable const&               a,
                                GroupTable const&               b,
                                std::vector<Permutation> const& action) {
    std::size_t const na = a.order(), nb = b.order(), n = na * nb;
    if (action.size() != nb) {
      throw ValidationError("action must give one automorphism per element");
    }
    for (element_type x = 0; x < nb; ++x) {
      if (!is_automorphism(a, action[x])) {
        throw ValidationError("action of " + b.name(x)
                              + " is not an automorphism");
      }
    }
    for (element_type x = 0; x < nb; ++x) {
      for (element_type y = 0; y < nb; ++y) {
        if (action[x] * action[y] != action[b.mul(x, y)]) {
          throw ValidationError("action is not a homomorphism");
        }
      }
    }
    std::vector<element_type> mul(n * n);
    for (std::size_t x = 0; x < n; ++x) {
      auto a1 = static_cast<element_type>(x / nb);
      auto b1 = static_cast<element_type>(x % nb);
      for (std::size_t y = 0; y < n; ++y) {
        auto a2         = static_cast<element_type>(y / nb);
        auto b2         = static_cast<element_type>(y % nb);
        auto ea         = a.mul(action[b2](a1), a2);
        mul[x * n + y]  = static_cast<element_type>(ea * nb + b.mul(b1, b2));
      }
    }
    std::vector<std::string> names;
    for (std::size_t x = 0; x < n; ++x) {
      names.push_back(a.name(static_cast<element_type>(x / nb)) + "|"
                      + b.name(static_cast<element_type>(x % nb)));
    }
    std::vector<element_type> gens;
    for (auto g : a.generators()) {
      gens.push_back(static_cast<element_type>(g * nb));
    }
    for (auto g : b.generators()) {
      gens.push_back(g);
    }
    return GroupTable(n, std::move(mul), std::move(names), std::move(gens));
  }

  GroupTable quaternion8() {
    // unit u in {1, i, j, k} = {0, 1, 2, 3}, element (sign, u) at 2u + sign
    static constexpr std::array<std::array<int, 4>, 4> unit_product = {{
        {0, 1, 2, 3},
        {1, 0, 3, 2},
        {2, 3, 0, 1},
        {3, 2, 1, 0},
    }};
    static constexpr std::array<std::array<int, 4>, 4> unit_sign = {{
        {0, 0, 0, 0},
        {0, 1, 0, 1},  // i*i = -1, i*j = k, i*k = -j
        {0, 1, 1, 0},  // j*i = -k, j*j = -1, j*k = i
        {0, 0, 1, 1},  // k*i = j, k*j = -i, k*k = -1
    }};
    std::vector<element_type> mul(64);
    for (int x = 0; x < 8; ++x) {
      for (int y = 0; y < 8; ++y) {
        int u = x / 2, v = y / 2;
        int s = (x % 2) ^ (y % 2) ^ unit_sign[u][v];
        mul[x * 8 + y] = static_cast<element_type>(2 * unit_product[u][v] + s);
      }
    }
    return GroupTable(8, std::move(mul),
                      {"1", "-1", "i", "-i", "j", "-j", "k", "-k"}, {2, 4});
  }

  bool is_automorphism(GroupTable const& group, Permutation const& f) {
    if (f.degree() != group.order()) {
      return false;
    }
    for (element_type x = 0; x < group.order(); ++x) {
      for (element_type y = 0; y < group.order(); ++y) {
        if (f(group.mul(x, y)) != group.mul(f(x), f(y))) {
          return false;
        }
      }
    }
    return true;
  }

  std::optional<Permutation>
  extend_to_automorphism(GroupTable const&             group,
                         std::span<element_type const> generator_images) {
    auto const& gens = group.generators();
    if (generator_images.size() != gens.size()) {
      return std::nullopt;
    }
    std::vector<element_type> f(group.order(), UNDEFINED);
    std::vector<bool>         hit(group.order(), false);
    std::vector<element_type> queue{0};
    f[0]   = 0;
    hit[0] = true;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      auto x = queue[i];
      for (std::size_t g = 0; g < gens.size(); ++g) {
        auto y  = group.mul(x, gens[g]);
        auto fy = group.mul(f[x], generator_images[g]);
        if (f[y] == UNDEFINED) {
          if (hit[fy]) {
            return std::nullopt;
          }
          f[y]    = fy;
          hit[fy] = true;
          queue.push_back(y);
        } else if (f[y] != fy) {
          return std::nullopt;
        }
      }
    }
    if (queue.size() != group.order()) {
      return std::nullopt;  // generators do not generate
    }
    return Permutation(std::move(f));
  }

}  // namespace nrt
