#pragma once

/// @file
/// Operations of the lattice of indiscernibility on the subsets of a
/// universe.
///
/// Meet comes in two readings. `OpMode::literal` is cloud(A ∩ B); the
/// closure reading `OpMode::closure` is cloud(A) ∩ cloud(B). Both agree on
/// closed arguments and literal meet is always contained in closure meet.
/// Every other operation is mode independent.

#include <span>
#include <string_view>
#include <optional>

#include "ilattice/universe.hpp"

namespace ilattice {

  enum class OpMode { literal, closure };

  inline char const* to_string(OpMode mode) {
    return mode == OpMode::literal ? "literal" : "closure";
  }

  inline std::optional<OpMode> parse_mode(std::string_view text) {
    if (text == "literal") {
      return OpMode::literal;
    }
    if (text == "closure") {
      return OpMode::closure;
    }
    return std::nullopt;
  }

  inline QSet meet(QSet const& a, QSet const& b, OpMode mode) {
    a.require_same(b);
    auto const& u = a.universe();
    Mask const  m = mode == OpMode::literal
                        ? cloud_mask(u, a.mask() & b.mask())
                        : cloud_mask(u, a.mask()) & cloud_mask(u, b.mask());
    return a.with_mask(m);
  }

  inline QSet join(QSet const& a, QSet const& b) {
    a.require_same(b);
    auto const& u = a.universe();
    return a.with_mask(cloud_mask(u, a.mask()) | cloud_mask(u, b.mask()));
  }

  inline QSet zero(Universe const& u) {
    return u.empty();
  }

  inline QSet one(Universe const& u) {
    return u.full();
  }

  /// Generalized complement U − cloud(A).
  inline QSet ortho(QSet const& a) {
    return ~cloud(a);
  }

  /// A ≤ B iff A ⊔ B = cloud(B), i.e. cloud(A) ⊆ cloud(B).
  inline bool leq(QSet const& a, QSet const& b) {
    return join(a, b) == cloud(b);
  }

  /// Alternative order: A ≤₁ B iff A ⊓ B = cloud(A).
  inline bool leq1(QSet const& a, QSet const& b, OpMode mode) {
    return meet(a, b, mode) == cloud(a);
  }

  /// A ⊥ B iff A ≤ B⊥.
  inline bool orthogonal(QSet const& a, QSet const& b) {
    return leq(a, ortho(b));
  }

  inline bool incompatible(QSet const& a, QSet const& b) {
    return orthogonal(a, b);
  }

  inline bool accessible(QSet const& a, QSet const& b) {
    return !orthogonal(a, b);
  }

  /// Every pair of extensionally distinct members is orthogonal.
  inline bool pairwise_orthogonal(std::span<QSet const> family) {
    for (std::size_t i = 0; i < family.size(); ++i) {
      for (std::size_t j = i + 1; j < family.size(); ++j) {
        if (family[i] == family[j]) {
          continue;
        }
        if (!orthogonal(family[i], family[j])
            || !orthogonal(family[j], family[i])) {
          return false;
        }
      }
    }
    return true;
  }

  /// A ≤ B ⇒ A ⊔ (A ⊔ B⊥)⊥ = cloud(B). Vacuously true when A ≰ B.
  inline bool orthomodular_instance(QSet const& a, QSet const& b) {
    if (!leq(a, b)) {
      return true;
    }
    return join(a, ortho(join(a, ortho(b)))) == cloud(b);
  }

  /// A ≤ B ⇒ A ⊔ (C ⊓ B) = (A ⊔ C) ⊓ B. Vacuously true when A ≰ B.
  inline bool modular_instance(QSet const& a,
                               QSet const& b,
                               QSet const& c,
                               OpMode      mode) {
    a.require_same(c);
    if (!leq(a, b)) {
      return true;
    }
    return join(a, meet(c, b, mode)) == meet(join(a, c), b, mode);
  }

}  // namespace ilattice
