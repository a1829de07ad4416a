// nrtkit - enumeration and classification of normalized right transversals

#include "nrt/group_expr.hpp"

#include <cctype>
#include <numeric>

#include "nrt/error.hpp"

namespace nrt {

  namespace {
    constexpr std::size_t MAX_CYCLIC_ORDER = 10000;
    constexpr std::size_t MAX_DEGREE       = 64;

    class Parser {
     public:
      explicit Parser(std::string_view text) : _text(text) {}

      GroupExpr parse() {
        GroupExpr result = expr();
        skip();
        if (_pos != _text.size()) {
          throw ParseError("unexpected '" + std::string(1, _text[_pos]) + "'",
                           _pos);
        }
        return result;
      }

     private:
      void skip() {
        while (_pos < _text.size()
               && std::isspace(static_cast<unsigned char>(_text[_pos]))) {
          ++_pos;
        }
      }

      bool peek(char c) {
        skip();
        return _pos < _text.size() && _text[_pos] == c;
      }

      bool accept(std::string_view word) {
        skip();
        if (_text.substr(_pos, word.size()) == word) {
          _pos += word.size();
          return true;
        }
        return false;
      }

      void expect(char c) {
        if (!peek(c)) {
          throw ParseError("expected '" + std::string(1, c) + "'", _pos);
        }
        ++_pos;
      }

      long integer() {
        skip();
        std::size_t start = _pos;
        bool        neg   = false;
        if (_pos < _text.size() && _text[_pos] == '-') {
          neg = true;
          ++_pos;
        }
        long value  = 0;
        bool digits = false;
        while (_pos < _text.size()
               && std::isdigit(static_cast<unsigned char>(_text[_pos]))) {
          value = value * 10 + (_text[_pos] - '0');
          if (value > 100'000'000) {
            throw ParseError("number too large", start);
          }
          digits = true;
          ++_pos;
        }
        if (!digits) {
          throw ParseError("expected a number", start);
        }
        return neg ? -value : value;
      }

      std::size_t parameter(std::size_t lo, std::size_t hi) {
        expect('(');
        skip();
        std::size_t start = _pos;
        long        v     = integer();
        if (v < static_cast<long>(lo) || v > static_cast<long>(hi)) {
          throw ParseError("n = " + std::to_string(v) + " out of range ["
                               + std::to_string(lo) + ", "
                               + std::to_string(hi) + "]",
                           start);
        }
        expect(')');
        return static_cast<std::size_t>(v);
      }

      GroupExpr expr() {
        GroupExpr left = primary();
        while (true) {
          if (accept("x")) {
            GroupExpr prod;
            prod.kind    = GroupExpr::Kind::direct_product;
            prod.factors = {std::move(left), primary()};
            left         = std::move(prod);
          } else if (accept(":")) {
            GroupExpr prod;
            prod.kind    = GroupExpr::Kind::semidirect_product;
            prod.factors = {std::move(left), primary()};
            prod.action  = action();
            left         = std::move(prod);
          } else {
            return left;
          }
        }
      }

      GroupExpr primary() {
        skip();
        std::size_t start = _pos;
        GroupExpr   e;
        if (accept("(")) {
          e = expr();
          expect(')');
        } else if (accept("Sym")) {
          e.kind = GroupExpr::Kind::symmetric;
          e.n    = parameter(1, MAX_DEGREE);
        } else if (accept("Alt")) {
          e.kind = GroupExpr::Kind::alternating;
          e.n    = parameter(1, MAX_DEGREE);
        } else if (accept("Perm")) {
          e.kind = GroupExpr::Kind::permutations;
          permutation_list(e);
        } else if (accept("Q8")) {
          e.kind = GroupExpr::Kind::quaternion8;
          e.n    = 8;
        } else if (accept("C")) {
          e.kind = GroupExpr::Kind::cyclic;
          e.n    = parameter(1, MAX_CYCLIC_ORDER);
        } else if (accept("D")) {
          e.kind = GroupExpr::Kind::dihedral;
          e.n    = parameter(2, 2 * MAX_CYCLIC_ORDER);
          if (e.n % 2 != 0) {
            throw ParseError("dihedral order must be even", start);
          }
        } else {
          throw ParseError("expected a group", start);
        }
        return e;
      }

      void permutation_list(GroupExpr& e) {
        expect('[');
        skip();
        std::size_t start = _pos;
        long        d     = integer();
        if (d < 1 || d > static_cast<long>(MAX_DEGREE)) {
          throw ParseError("degree out of range", start);
        }
        e.n = static_cast<std::size_t>(d);
        expect(':');
        while (true) {
          skip();
          std::size_t begin = _pos;
          while (_pos < _text.size() && _text[_pos] != ';'
                 && _text[_pos] != ']') {
            ++_pos;
          }
          std::string_view piece = _text.substr(begin, _pos - begin);
          bool blank = piece.find_first_not_of(" \t\r\n") == piece.npos;
          if (!blank) {
            try {
              e.generators.push_back(Permutation::from_cycles(piece, e.n));
            } catch (ParseError const& err) {
              throw ParseError(std::string("bad permutation: ") + err.what(),
                               begin);
            }
          }
          if (_pos >= _text.size()) {
            throw ParseError("expected ']'", _pos);
          }
          if (_text[_pos++] == ']') {
            break;
          }
          if (blank) {
            throw ParseError("empty permutation", begin);
          }
        }
      }

      std::vector<std::vector<element_type>> index_groups() {
        std::vector<std::vector<element_type>> groups(1);
        while (!peek(']')) {
          if (accept(";")) {
            groups.emplace_back();
            continue;
          }
          skip();
          std::size_t start = _pos;
          long        v     = integer();
          if (v < 0) {
            throw ParseError("element index must be non-negative", start);
          }
          groups.back().push_back(static_cast<element_type>(v));
        }
        return groups;
      }

      SemidirectAction action() {
        expect('[');
        SemidirectAction a;
        skip();
        std::size_t start = _pos;
        if (accept("inv")) {
          a.kind = SemidirectAction::Kind::inversion;
        } else if (accept("pow")) {
          a.kind     = SemidirectAction::Kind::power;
          a.exponent = integer();
        } else if (accept("gens")) {
          a.kind   = SemidirectAction::Kind::generator_images;
          a.images = index_groups();
        } else if (accept("map")) {
          a.kind   = SemidirectAction::Kind::element_images;
          a.images = index_groups();
        } else {
          throw ParseError("expected an action (inv, pow, gens, map)", start);
        }
        expect(']');
        return a;
      }

      std::string_view _text;
      std::size_t      _pos = 0;
    };

    std::string render_action(SemidirectAction const& a) {
      std::string out;
      auto        groups = [&out, &a] {
        for (std::size_t g = 0; g < a.images.size(); ++g) {
          out += g == 0 ? " " : "; ";
          for (std::size_t i = 0; i < a.images[g].size(); ++i) {
            out += (i == 0 ? "" : " ") + std::to_string(a.images[g][i]);
          }
        }
      };
      switch (a.kind) {
        case SemidirectAction::Kind::inversion:
          return "inv";
        case SemidirectAction::Kind::power:
          return "pow " + std::to_string(a.exponent);
        case SemidirectAction::Kind::generator_images:
          out = "gens";
          groups();
          return out;
        case SemidirectAction::Kind::element_images:
          out = "map";
          groups();
          return out;
      }
      return out;
    }

    std::string render_factor(GroupExpr const& e) {
      bool product = e.kind == GroupExpr::Kind::direct_product
                     || e.kind == GroupExpr::Kind::semidirect_product;
      return product ? "(" + render(e) + ")" : render(e);
    }

    Permutation cycle_of_length(std::size_t n) {
      std::vector<point_type> images(n);
      for (std::size_t i = 0; i < n; ++i) {
        images[i] = static_cast<point_type>((i + 1) % n);
      }
      return Permutation(std::move(images));
    }

    std::vector<Permutation> action_per_generator(GroupTable const& a,
                                                  GroupTable const& b,
                                                  SemidirectAction const& act) {
      std::size_t const        ngens = b.generators().size();
      std::vector<Permutation> result;
      auto                     elementwise = [&](auto&& image_of) {
        std::vector<point_type> images(a.order());
        for (element_type x = 0; x < a.order(); ++x) {
          images[x] = image_of(x);
        }
        return Permutation(std::move(images));
      };
      switch (act.kind) {
        case SemidirectAction::Kind::inversion:
        case SemidirectAction::Kind::power: {
          Permutation f;
          try {
            f = elementwise([&](element_type x) -> element_type {
              if (act.kind == SemidirectAction::Kind::inversion) {
                return a.inv(x);
              }
              long k = act.exponent;
              auto base = k < 0 ? a.inv(x) : x;
              return a.power(base, static_cast<std::size_t>(k < 0 ? -k : k));
            });
          } catch (ValidationError const&) {
            throw ValidationError("action is not a bijection of the normal "
                                  "factor");
          }
          result.assign(ngens, f);
          break;
        }
        case SemidirectAction::Kind::generator_images: {
          if (act.images.size() != ngens) {
            throw ValidationError("action lists " + std::to_string(act.images.size())
                                  + " image groups for "
                                  + std::to_string(ngens) + " generators");
          }
          for (auto const& imgs : act.images) {
            for (auto x : imgs) {
              if (x >= a.order()) {
                throw ValidationError("image index out of range");
              }
            }
            auto f = extend_to_automorphism(a, imgs);
            if (!f) {
              throw ValidationError("generator images do not define an "
                                    "automorphism");
            }
            result.push_back(std::move(*f));
          }
          break;
        }
        case SemidirectAction::Kind::element_images: {
          if (act.images.size() != ngens) {
            throw ValidationError("action lists " + std::to_string(act.images.size())
                                  + " image groups for "
                                  + std::to_string(ngens) + " generators");
          }
          for (auto const& imgs : act.images) {
            if (imgs.size() != a.order()) {
              throw ValidationError("element image list has the wrong length");
            }
            try {
              result.emplace_back(std::vector<point_type>(imgs.begin(),
                                                          imgs.end()));
            } catch (ValidationError const&) {
              throw ValidationError("element images are not a bijection");
            }
          }
          break;
        }
      }
      for (auto const& f : result) {
        if (!is_automorphism(a, f)) {
          throw ValidationError("action of a generator is not an "
                                "automorphism");
        }
      }
      return result;
    }

    // Extends per-generator automorphisms to a right action of all of b.
    std::vector<Permutation> extend_action(GroupTable const&               a,
                                           GroupTable const&               b,
                                           std::vector<Permutation> const& per_gen) {
      auto const&                             gens = b.generators();
      std::vector<std::optional<Permutation>> act(b.order());
      act[0] = Permutation::identity(a.order());
      std::vector<element_type> queue{0};
      for (std::size_t i = 0; i < queue.size(); ++i) {
        auto x = queue[i];
        for (std::size_t g = 0; g < gens.size(); ++g) {
          auto        y = b.mul(x, gens[g]);
          Permutation f = *act[x] * per_gen[g];
          if (!act[y]) {
            act[y] = std::move(f);
            queue.push_back(y);
          } else if (*act[y] != f) {
            throw ValidationError("action does not respect the relations of "
                                  "the acting group");
          }
        }
      }
      if (queue.size() != b.order()) {
        throw ValidationError("acting group is not generated by its "
                              "generators");
      }
      std::vector<Permutation> result;
      for (auto& f : act) {
        result.push_back(std::move(*f));
      }
      return result;
    }
  }  // namespace

  GroupExpr parse_group_expr(std::string_view text) {
    return Parser(text).parse();
  }

  std::string render(GroupExpr const& e) {
    switch (e.kind) {
      case GroupExpr::Kind::cyclic:
        return "C(" + std::to_string(e.n) + ")";
      case GroupExpr::Kind::dihedral:
        return "D(" + std::to_string(e.n) + ")";
      case GroupExpr::Kind::quaternion8:
        return "Q8";
      case GroupExpr::Kind::symmetric:
        return "Sym(" + std::to_string(e.n) + ")";
      case GroupExpr::Kind::alternating:
        return "Alt(" + std::to_string(e.n) + ")";
      case GroupExpr::Kind::permutations: {
        std::string out = "Perm[" + std::to_string(e.n) + ":";
        for (std::size_t i = 0; i < e.generators.size(); ++i) {
          out += (i == 0 ? " " : "; ") + e.generators[i].to_cycles();
        }
        return out + "]";
      }
      case GroupExpr::Kind::direct_product:
        return render_factor(e.factors[0]) + " x "
               + render_factor(e.factors[1]);
      case GroupExpr::Kind::semidirect_product:
        return render_factor(e.factors[0]) + " : "
               + render_factor(e.factors[1]) + " ["
               + render_action(e.action) + "]";
    }
    return {};
  }

  GroupTable realize(GroupExpr const& e, Limits const& limits) {
    std::vector<Permutation> gens;
    std::size_t              degree = e.n;
    switch (e.kind) {
      case GroupExpr::Kind::cyclic:
        if (e.n > 1) {
          gens.push_back(cycle_of_length(e.n));
        }
        break;
      case GroupExpr::Kind::dihedral: {
        std::size_t k = e.n / 2;
        if (k == 1) {
          degree = 2;
          gens.push_back(Permutation::from_cycles("(1,2)", 2));
        } else if (k == 2) {
          degree = 4;
          gens.push_back(Permutation::from_cycles("(1,2)", 4));
          gens.push_back(Permutation::from_cycles("(3,4)", 4));
        } else {
          degree = k;
          gens.push_back(cycle_of_length(k));
          std::vector<point_type> reflection(k);
          for (std::size_t i = 0; i < k; ++i) {
            reflection[i] = static_cast<point_type>((k - i) % k);
          }
          gens.emplace_back(std::move(reflection));
        }
        break;
      }
      case GroupExpr::Kind::quaternion8:
        return quaternion8();
      case GroupExpr::Kind::symmetric:
        if (e.n >= 2) {
          gens.push_back(Permutation::from_cycles("(1,2)", e.n));
        }
        if (e.n >= 3) {
          gens.push_back(cycle_of_length(e.n));
        }
        break;
      case GroupExpr::Kind::alternating:
        for (std::size_t k = 3; k <= e.n; ++k) {
          gens.push_back(Permutation::from_cycles(
              "(1,2," + std::to_string(k) + ")", e.n));
        }
        break;
      case GroupExpr::Kind::permutations:
        gens = e.generators;
        break;
      case GroupExpr::Kind::direct_product: {
        auto a = realize(e.factors[0], limits);
        auto b = realize(e.factors[1], limits);
        if (a.order() * b.order() > limits.closure_bound) {
          throw ResourceError("product exceeds the order bound "
                              + std::to_string(limits.closure_bound));
        }
        return direct_product(a, b);
      }
      case GroupExpr::Kind::semidirect_product: {
        auto a = realize(e.factors[0], limits);
        auto b = realize(e.factors[1], limits);
        if (a.order() * b.order() > limits.closure_bound) {
          throw ResourceError("product exceeds the order bound "
                              + std::to_string(limits.closure_bound));
        }
        auto per_gen = action_per_generator(a, b, e.action);
        return semidirect_product(a, b, extend_action(a, b, per_gen));
      }
    }
    return build_from_generators(degree, gens, limits);
  }

  GroupTable make_group(std::string_view text, Limits const& limits) {
    return realize(parse_group_expr(text), limits);
  }

}  // namespace nrt
