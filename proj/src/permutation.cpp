// nrtkit - enumeration and classification of normalized right transversals

#include "nrt/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "nrt/error.hpp"

namespace nrt {

  namespace {
    std::size_t skip_space(std::string_view text, std::size_t pos) {
      while (pos < text.size()
             && std::isspace(static_cast<unsigned char>(text[pos]))) {
        ++pos;
      }
      return pos;
    }

    // Reads a positive decimal integer starting at pos (after spaces).
    std::size_t read_number(std::string_view text, std::size_t& pos) {
      pos = skip_space(text, pos);
      std::size_t start = pos;
      std::size_t value = 0;
      while (pos < text.size()
             && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + static_cast<std::size_t>(text[pos] - '0');
        if (value > 1'000'000) {
          throw ParseError("point out of range", start);
        }
        ++pos;
      }
      if (pos == start) {
        throw ParseError("expected a point", start);
      }
      return value;
    }

    std::vector<std::vector<std::size_t>> parse_cycle_list(
        std::string_view text) {
      std::vector<std::vector<std::size_t>> cycles;
      std::size_t pos = skip_space(text, 0);
      if (pos == text.size()) {
        throw ParseError("empty permutation", pos);
      }
      while (pos < text.size()) {
        if (text[pos] != '(') {
          throw ParseError("expected '('", pos);
        }
        ++pos;
        std::vector<std::size_t> cycle;
        pos = skip_space(text, pos);
        if (pos < text.size() && text[pos] == ')') {
          ++pos;  // "()"
        } else {
          while (true) {
            cycle.push_back(read_number(text, pos));
            pos = skip_space(text, pos);
            if (pos < text.size() && text[pos] == ',') {
              ++pos;
              continue;
            }
            if (pos < text.size() && text[pos] == ')') {
              ++pos;
              break;
            }
            throw ParseError("expected ',' or ')'", pos);
          }
        }
        if (!cycle.empty()) {
          cycles.push_back(std::move(cycle));
        }
        pos = skip_space(text, pos);
      }
      return cycles;
    }
  }  // namespace

  Permutation::Permutation(std::vector<point_type> images)
      : _images(std::move(images)) {
    std::vector<bool> seen(_images.size(), false);
    for (auto x : _images) {
      if (x >= _images.size() || seen[x]) {
        throw ValidationError("image table is not a bijection");
      }
      seen[x] = true;
    }
  }

  Permutation Permutation::identity(std::size_t degree) {
    Permutation p;
    p._images.resize(degree);
    std::iota(p._images.begin(), p._images.end(), point_type(0));
    return p;
  }

  Permutation Permutation::from_cycles(std::string_view text,
                                       std::size_t      degree) {
    std::vector<point_type> images(degree);
    std::iota(images.begin(), images.end(), point_type(0));
    std::vector<bool> used(degree, false);
    for (auto const& cycle : parse_cycle_list(text)) {
      for (std::size_t i = 0; i < cycle.size(); ++i) {
        std::size_t a = cycle[i];
        if (a == 0 || a > degree) {
          throw ParseError("point " + std::to_string(a)
                               + " outside degree " + std::to_string(degree),
                           0);
        }
        if (used[a - 1]) {
          throw ParseError("point " + std::to_string(a) + " repeated", 0);
        }
        used[a - 1] = true;
        std::size_t b   = cycle[(i + 1) % cycle.size()];
        images[a - 1]   = static_cast<point_type>(b - 1);
      }
    }
    return Permutation(std::move(images));
  }

  Permutation Permutation::operator*(Permutation const& other) const {
    Permutation result;
    result._images.resize(_images.size());
    for (std::size_t i = 0; i < _images.size(); ++i) {
      result._images[i] = other._images[_images[i]];
    }
    return result;
  }

  Permutation Permutation::inverse() const {
    Permutation result;
    result._images.resize(_images.size());
    for (std::size_t i = 0; i < _images.size(); ++i) {
      result._images[_images[i]] = static_cast<point_type>(i);
    }
    return result;
  }

  bool Permutation::is_identity() const noexcept {
    for (std::size_t i = 0; i < _images.size(); ++i) {
      if (_images[i] != i) {
        return false;
      }
    }
    return true;
  }

  std::vector<std::size_t> Permutation::cycle_type() const {
    std::vector<std::size_t> lengths;
    std::vector<bool>        seen(_images.size(), false);
    for (std::size_t i = 0; i < _images.size(); ++i) {
      if (seen[i]) {
        continue;
      }
      std::size_t len = 0;
      for (std::size_t j = i; !seen[j]; j = _images[j]) {
        seen[j] = true;
        ++len;
      }
      lengths.push_back(len);
    }
    std::sort(lengths.begin(), lengths.end());
    return lengths;
  }

  std::size_t Permutation::order() const {
    std::size_t result = 1;
    for (auto len : cycle_type()) {
      result = std::lcm(result, len);
    }
    return result;
  }

  std::string Permutation::to_cycles() const {
    std::string       out;
    std::vector<bool> seen(_images.size(), false);
    for (std::size_t i = 0; i < _images.size(); ++i) {
      if (seen[i] || _images[i] == i) {
        continue;
      }
      out += '(';
      for (std::size_t j = i; !seen[j]; j = _images[j]) {
        seen[j] = true;
        if (j != i) {
          out += ',';
        }
        out += std::to_string(j + 1);
      }
      out += ')';
    }
    return out.empty() ? "()" : out;
  }

  std::size_t max_point_in_cycles(std::string_view text) {
    std::size_t result = 0;
    for (auto const& cycle : parse_cycle_list(text)) {
      for (auto a : cycle) {
        result = std::max(result, a);
      }
    }
    return result;
  }

}  // namespace nrt
