#pragma once

/// @file
/// Propositional formulas over named atoms with the connectives
/// ⋏ (`&`), ⋎ (`|`), ∼ (`~`), ↠ (`->`) and the biconditional (`<->`).
///
/// Grammar, loosest binding first:
///
///     formula := bicond
///     bicond  := cond { "<->" cond }        left associative
///     cond    := disj [ "->" cond ]         right associative
///     disj    := conj { "|" conj }          left associative
///     conj    := neg { "&" neg }            left associative
///     neg     := "~" neg | atom | "(" formula ")"
///     atom    := letter { letter | digit | "_" }

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "ilattice/error.hpp"

namespace ilattice {

  class Formula {
   public:
    enum class Kind { atom, conj, disj, neg, cond, bicond };

    static Formula atom(std::string name);
    static Formula conj(Formula l, Formula r);
    static Formula disj(Formula l, Formula r);
    static Formula neg(Formula inner);
    static Formula cond(Formula l, Formula r);
    static Formula bicond(Formula l, Formula r);
    static Formula binary(Kind kind, Formula l, Formula r);

    Kind kind() const noexcept;
    bool is_atom() const noexcept {
      return kind() == Kind::atom;
    }
    /// Atom name; empty for compound formulas.
    std::string const& name() const noexcept;
    /// Left operand, or the operand of a negation.
    Formula const& left() const;
    Formula const& right() const;
    Formula const& inner() const {
      return left();
    }

    /// 0 for atoms.
    std::size_t depth() const noexcept;

    /// Atom names occurring in the formula, sorted.
    std::set<std::string> atoms() const;

    /// Structural comparison: kind, then name, then operands.
    friend std::strong_ordering operator<=>(Formula const& a, Formula const& b);
    friend bool operator==(Formula const& a, Formula const& b) {
      return (a <=> b) == 0;
    }

   private:
    struct Node;
    explicit Formula(std::shared_ptr<Node const> node) : _node(std::move(node)) {}
    std::shared_ptr<Node const> _node;
  };

  struct Formula::Node {
    Kind                     kind;
    std::string              name;
    std::shared_ptr<Formula> left;
    std::shared_ptr<Formula> right;
    std::size_t              depth = 0;
  };

  inline Formula Formula::atom(std::string name) {
    return Formula(std::make_shared<Node const>(
        Node{Kind::atom, std::move(name), nullptr, nullptr, 0}));
  }

  inline Formula Formula::neg(Formula inner) {
    std::size_t const d = inner.depth() + 1;
    return Formula(std::make_shared<Node const>(
        Node{Kind::neg, {}, std::make_shared<Formula>(std::move(inner)), nullptr, d}));
  }

  inline Formula Formula::binary(Kind kind, Formula l, Formula r) {
    if (kind == Kind::atom || kind == Kind::neg) {
      throw Error("not a binary connective");
    }
    std::size_t const d = std::max(l.depth(), r.depth()) + 1;
    return Formula(std::make_shared<Node const>(
        Node{kind,
             {},
             std::make_shared<Formula>(std::move(l)),
             std::make_shared<Formula>(std::move(r)),
             d}));
  }

  inline Formula Formula::conj(Formula l, Formula r) {
    return binary(Kind::conj, std::move(l), std::move(r));
  }

  inline Formula Formula::disj(Formula l, Formula r) {
    return binary(Kind::disj, std::move(l), std::move(r));
  }

  inline Formula Formula::cond(Formula l, Formula r) {
    return binary(Kind::cond, std::move(l), std::move(r));
  }

  inline Formula Formula::bicond(Formula l, Formula r) {
    return binary(Kind::bicond, std::move(l), std::move(r));
  }

  inline Formula::Kind Formula::kind() const noexcept {
    return _node->kind;
  }

  inline std::string const& Formula::name() const noexcept {
    return _node->name;
  }

  inline Formula const& Formula::left() const {
    if (!_node->left) {
      throw Error("atom has no operands");
    }
    return *_node->left;
  }

  inline Formula const& Formula::right() const {
    if (!_node->right) {
      throw Error("formula has no right operand");
    }
    return *_node->right;
  }

  inline std::size_t Formula::depth() const noexcept {
    return _node->depth;
  }

  inline std::set<std::string> Formula::atoms() const {
    std::set<std::string> out;
    std::vector<Formula const*> stack{this};
    while (!stack.empty()) {
      auto const* f = stack.back();
      stack.pop_back();
      if (f->is_atom()) {
        out.insert(f->name());
        continue;
      }
      stack.push_back(&f->left());
      if (f->kind() != Kind::neg) {
        stack.push_back(&f->right());
      }
    }
    return out;
  }

  inline std::strong_ordering operator<=>(Formula const& a, Formula const& b) {
    if (a._node == b._node) {
      return std::strong_ordering::equal;
    }
    if (auto c = a.kind() <=> b.kind(); c != 0) {
      return c;
    }
    if (a.is_atom()) {
      return a.name() <=> b.name();
    }
    if (auto c = a.left() <=> b.left(); c != 0) {
      return c;
    }
    if (a.kind() == Formula::Kind::neg) {
      return std::strong_ordering::equal;
    }
    return a.right() <=> b.right();
  }

  ////////////////////////////////////////////////////////////////////////
  // Rendering
  ////////////////////////////////////////////////////////////////////////

  namespace detail {
    inline int precedence(Formula::Kind k) {
      switch (k) {
        case Formula::Kind::bicond:
          return 1;
        case Formula::Kind::cond:
          return 2;
        case Formula::Kind::disj:
          return 3;
        case Formula::Kind::conj:
          return 4;
        default:
          return 5;
      }
    }

    inline char const* symbol(Formula::Kind k) {
      switch (k) {
        case Formula::Kind::bicond:
          return " <-> ";
        case Formula::Kind::cond:
          return " -> ";
        case Formula::Kind::disj:
          return " | ";
        default:
          return " & ";
      }
    }

    inline void render_into(std::string& out, Formula const& f, bool parens) {
      if (parens) {
        out += '(';
      }
      switch (f.kind()) {
        case Formula::Kind::atom:
          out += f.name();
          break;
        case Formula::Kind::neg:
          out += '~';
          render_into(out, f.inner(), !f.inner().is_atom()
                                          && f.inner().kind() != Formula::Kind::neg);
          break;
        default: {
          int const  p = precedence(f.kind());
          bool const right_assoc = f.kind() == Formula::Kind::cond;
          int const  lp = precedence(f.left().kind());
          int const  rp = precedence(f.right().kind());
          render_into(out, f.left(), lp < p || (lp == p && right_assoc));
          out += symbol(f.kind());
          render_into(out, f.right(), rp < p || (rp == p && !right_assoc));
        }
      }
      if (parens) {
        out += ')';
      }
    }
  }  // namespace detail

  /// Canonical text with the fewest parentheses the grammar needs.
  inline std::string render(Formula const& f) {
    std::string out;
    detail::render_into(out, f, false);
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Parsing
  ////////////////////////////////////////////////////////////////////////

  namespace detail {
    class FormulaParser {
     public:
      explicit FormulaParser(std::string_view text) : _text(text) {}

      Formula parse() {
        auto f = bicond();
        skip_space();
        if (_pos != _text.size()) {
          throw ParseError("unexpected '" + std::string(1, _text[_pos]) + "'",
                           _pos);
        }
        return f;
      }

     private:
      Formula bicond() {
        auto f = cond();
        while (accept("<->")) {
          f = Formula::bicond(std::move(f), cond());
        }
        return f;
      }

      Formula cond() {
        auto f = disj();
        if (accept("->")) {
          return Formula::cond(std::move(f), cond());
        }
        return f;
      }

      Formula disj() {
        auto f = conj();
        while (accept("|")) {
          f = Formula::disj(std::move(f), conj());
        }
        return f;
      }

      Formula conj() {
        auto f = neg();
        while (accept("&")) {
          f = Formula::conj(std::move(f), neg());
        }
        return f;
      }

      Formula neg() {
        skip_space();
        if (accept("~")) {
          return Formula::neg(neg());
        }
        if (accept("(")) {
          auto f = bicond();
          if (!accept(")")) {
            throw ParseError("expected ')'", position());
          }
          return f;
        }
        if (_pos < _text.size() && std::isalpha(static_cast<unsigned char>(_text[_pos]))) {
          std::size_t const start = _pos;
          while (_pos < _text.size()
                 && (std::isalnum(static_cast<unsigned char>(_text[_pos]))
                     || _text[_pos] == '_')) {
            ++_pos;
          }
          return Formula::atom(std::string(_text.substr(start, _pos - start)));
        }
        if (_pos == _text.size()) {
          throw ParseError("unexpected end of input", _pos);
        }
        throw ParseError("unexpected '" + std::string(1, _text[_pos]) + "'",
                         _pos);
      }

      bool accept(std::string_view token) {
        skip_space();
        if (_text.substr(_pos, token.size()) != token) {
          return false;
        }
        _pos += token.size();
        return true;
      }

      std::size_t position() {
        skip_space();
        return _pos;
      }

      void skip_space() {
        while (_pos < _text.size()
               && std::isspace(static_cast<unsigned char>(_text[_pos]))) {
          ++_pos;
        }
      }

      std::string_view _text;
      std::size_t      _pos = 0;
    };
  }  // namespace detail

  /// Parses `text`; throws ParseError carrying the 0-based offending offset.
  inline Formula parse_formula(std::string_view text) {
    return detail::FormulaParser(text).parse();
  }

}  // namespace ilattice
