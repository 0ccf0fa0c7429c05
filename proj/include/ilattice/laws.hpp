#pragma once

/// @file
/// The law registry: every algebraic statement about clouds, the lattice
/// operations, the order and the generalized complement that the verifier
/// audits. Names are stable identifiers.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ilattice/lattice.hpp"
#include "ilattice/universe.hpp"

namespace ilattice {

  enum class ModeSensitivity { mode_free, per_mode };
  enum class Restriction { unrestricted, closed_only };

  inline char const* to_string(Restriction r) {
    return r == Restriction::unrestricted ? "unrestricted" : "closed-only";
  }

  /// A named, universally quantified statement over 1 to 3 qset variables.
  struct LawSpec {
    using Predicate = std::function<bool(std::span<QSet const>, OpMode)>;

    std::string     name;
    std::size_t     arity = 1;
    ModeSensitivity mode_sensitivity = ModeSensitivity::mode_free;
    Restriction     restriction = Restriction::unrestricted;
    Predicate       predicate;
    /// Which theorem item the law restates.
    std::string anchor;
    /// The statement in lattice notation.
    std::string statement;
    /// Probes report an outcome; no truth value is expected of them.
    bool probe = false;
  };

  namespace detail {
    inline bool implies(bool p, bool q) {
      return !p || q;
    }

    struct LawBuilder {
      std::vector<LawSpec>& out;

      void operator()(std::string     name,
                      std::size_t     arity,
                      ModeSensitivity sensitivity,
                      Restriction     restriction,
                      std::string     anchor,
                      std::string     statement,
                      LawSpec::Predicate predicate,
                      bool            probe = false) {
        out.push_back({std::move(name),
                       arity,
                       sensitivity,
                       restriction,
                       std::move(predicate),
                       std::move(anchor),
                       std::move(statement),
                       probe});
      }
    };

    // clang-format off
    inline std::vector<LawSpec> make_registry() {
      using M = ModeSensitivity;
      using R = Restriction;
      using Args = std::span<QSet const>;
      constexpr auto free = M::mode_free;
      constexpr auto per  = M::per_mode;
      constexpr auto all  = R::unrestricted;
      constexpr auto cl   = R::closed_only;

      std::vector<LawSpec> laws;
      LawBuilder           add{laws};

      // Closure operator axioms and their consequences.
      add("cloud-extensive", 1, free, all, "Tarski axiom (i)",
          "A ⊆ cloud(A)",
          [](Args x, OpMode) { return is_subset(x[0], cloud(x[0])); });
      add("cloud-monotone", 2, free, all, "Tarski axiom (ii)",
          "A ⊆ B ⇒ cloud(A) ⊆ cloud(B)",
          [](Args x, OpMode) {
            return implies(is_subset(x[0], x[1]),
                           is_subset(cloud(x[0]), cloud(x[1])));
          });
      add("cloud-idempotent-inclusion", 1, free, all, "Tarski axiom (iii)",
          "cloud(cloud(A)) ⊆ cloud(A)",
          [](Args x, OpMode) {
            return is_subset(cloud(cloud(x[0])), cloud(x[0]));
          });
      add("cloud-idempotent", 1, free, all, "Tarski space theorem (i)",
          "cloud(cloud(A)) = cloud(A)",
          [](Args x, OpMode) { return cloud(cloud(x[0])) == cloud(x[0]); });
      add("cloud-union-inclusion", 2, free, all, "Tarski space theorem (ii)",
          "cloud(A) ∪ cloud(B) ⊆ cloud(A ∪ B)",
          [](Args x, OpMode) {
            return is_subset(cloud(x[0]) | cloud(x[1]), cloud(x[0] | x[1]));
          });
      add("cloud-intersection-inclusion", 2, free, all,
          "Tarski space theorem (iii)", "cloud(A ∩ B) ⊆ cloud(A) ∩ cloud(B)",
          [](Args x, OpMode) {
            return is_subset(cloud(x[0] & x[1]), cloud(x[0]) & cloud(x[1]));
          });
      add("cloud-of-cloud-union", 2, free, all, "Tarski space theorem (iv)",
          "cloud(cloud(A) ∪ cloud(B)) = cloud(A ∪ B)",
          [](Args x, OpMode) {
            return cloud(cloud(x[0]) | cloud(x[1])) == cloud(x[0] | x[1]);
          });
      add("cloud-of-cloud-intersection", 2, free, all,
          "Tarski space theorem (v)",
          "cloud(A) ∩ cloud(B) = cloud(cloud(A) ∩ cloud(B))",
          [](Args x, OpMode) {
            auto const both = cloud(x[0]) & cloud(x[1]);
            return both == cloud(both);
          });
      add("topology-additive", 2, free, all, "topological space (iv)",
          "cloud(A ∪ B) = cloud(A) ∪ cloud(B)",
          [](Args x, OpMode) {
            return cloud(x[0] | x[1]) == (cloud(x[0]) | cloud(x[1]));
          });
      add("topology-empty", 1, free, all, "topological space (v)",
          "A = ∅ ⇒ cloud(A) = ∅",
          [](Args x, OpMode) {
            return implies(x[0].empty(), cloud(x[0]).empty());
          });
      add("interior-sandwich", 1, free, all, "interior theorem",
          "interior(A) ⊆ A ⊆ cloud(A)",
          [](Args x, OpMode) {
            return is_subset(interior(x[0]), x[0])
                   && is_subset(x[0], cloud(x[0]));
          });

      // Inclusions relating meet and join.
      add("pp-meet-below-cloud-meet", 2, per, all, "theorem pp (i)",
          "A ⊓ B ⊆ cloud(cloud(A) ∩ cloud(B))",
          [](Args x, OpMode m) {
            return is_subset(meet(x[0], x[1], m),
                             cloud(cloud(x[0]) & cloud(x[1])));
          });
      add("pp-meet-below-join", 2, per, all, "theorem pp (ii)",
          "A ⊓ B ⊆ A ⊔ B",
          [](Args x, OpMode m) {
            return is_subset(meet(x[0], x[1], m), join(x[0], x[1]));
          });
      add("pp-closed-operations", 2, per, cl, "theorem pp (iii)",
          "A, B closed ⇒ A ∪ B, A ∩ B closed and A ⊓ B = cloud(A) ∩ cloud(B)",
          [](Args x, OpMode m) {
            return is_closed(x[0] | x[1]) && is_closed(x[0] & x[1])
                   && meet(x[0], x[1], m) == (cloud(x[0]) & cloud(x[1]));
          });

      // Lattice laws.
      add("i-idempotency-meet", 1, per, all,
          "summary 1; lattice theorem (a)", "A ⊓ A = cloud(A)",
          [](Args x, OpMode m) { return meet(x[0], x[0], m) == cloud(x[0]); });
      add("i-idempotency-join", 1, free, all,
          "summary 1; lattice theorem (a)", "A ⊔ A = cloud(A)",
          [](Args x, OpMode) { return join(x[0], x[0]) == cloud(x[0]); });
      add("idempotency-meet-closed", 1, per, cl, "lattice theorem (a)",
          "A ⊓ A = A",
          [](Args x, OpMode m) { return meet(x[0], x[0], m) == x[0]; });
      add("idempotency-join-closed", 1, free, cl, "lattice theorem (a)",
          "A ⊔ A = A",
          [](Args x, OpMode) { return join(x[0], x[0]) == x[0]; });
      add("meet-commutativity", 2, per, all,
          "summary 2; lattice theorem (b)", "A ⊓ B = B ⊓ A",
          [](Args x, OpMode m) {
            return meet(x[0], x[1], m) == meet(x[1], x[0], m);
          });
      add("join-commutativity", 2, free, all,
          "summary 2; lattice theorem (b)", "A ⊔ B = B ⊔ A",
          [](Args x, OpMode) { return join(x[0], x[1]) == join(x[1], x[0]); });
      add("meet-associativity", 3, per, all,
          "summary 3; lattice theorem (c)(i)", "A ⊓ (B ⊓ C) = (A ⊓ B) ⊓ C",
          [](Args x, OpMode m) {
            return meet(x[0], meet(x[1], x[2], m), m)
                   == meet(meet(x[0], x[1], m), x[2], m);
          });
      add("join-associativity", 3, free, all,
          "summary 3; lattice theorem (c)(ii)", "A ⊔ (B ⊔ C) = (A ⊔ B) ⊔ C",
          [](Args x, OpMode) {
            return join(x[0], join(x[1], x[2])) == join(join(x[0], x[1]), x[2]);
          });
      add("i-absorption-meet", 2, per, all,
          "summary 4; lattice theorem (d)(i)", "A ⊓ (A ⊔ B) = cloud(A)",
          [](Args x, OpMode m) {
            return meet(x[0], join(x[0], x[1]), m) == cloud(x[0]);
          });
      add("i-absorption-join", 2, per, all,
          "summary 4; lattice theorem (d)(ii)", "A ⊔ (A ⊓ B) = cloud(A)",
          [](Args x, OpMode m) {
            return join(x[0], meet(x[0], x[1], m)) == cloud(x[0]);
          });
      add("absorption-meet-closed", 2, per, cl, "lattice theorem (d)(i)",
          "A ⊓ (A ⊔ B) = A",
          [](Args x, OpMode m) { return meet(x[0], join(x[0], x[1]), m) == x[0]; });
      add("absorption-join-closed", 2, per, cl, "lattice theorem (d)(ii)",
          "A ⊔ (A ⊓ B) = A",
          [](Args x, OpMode m) { return join(x[0], meet(x[0], x[1], m)) == x[0]; });
      add("minimum-meet", 1, per, all, "summary 5; lattice theorem (e)(i)",
          "0 ⊓ A = 0",
          [](Args x, OpMode m) {
            auto const z = zero(x[0].universe());
            return meet(z, x[0], m) == z;
          });
      add("minimum-join", 1, free, all, "summary 5; lattice theorem (e)(ii)",
          "0 ⊔ A = cloud(A)",
          [](Args x, OpMode) {
            return join(zero(x[0].universe()), x[0]) == cloud(x[0]);
          });
      add("maximum-meet", 1, per, all, "summary 6; lattice theorem (e)(iii)",
          "A ⊓ 1 = cloud(A)",
          [](Args x, OpMode m) {
            return meet(x[0], one(x[0].universe()), m) == cloud(x[0]);
          });
      add("maximum-join", 1, free, all, "summary 6; lattice theorem (e)(iv)",
          "A ⊔ 1 = 1",
          [](Args x, OpMode) {
            auto const u = one(x[0].universe());
            return join(x[0], u) == u;
          });

      // Distributivity.
      add("distributivity-meet-over-join", 3, per, all,
          "distributivity remark (unrestricted)",
          "A ⊓ (B ⊔ C) = (A ⊓ B) ⊔ (A ⊓ C)",
          [](Args x, OpMode m) {
            return meet(x[0], join(x[1], x[2]), m)
                   == join(meet(x[0], x[1], m), meet(x[0], x[2], m));
          });
      add("distributivity-join-over-meet", 3, per, all,
          "distributivity remark (unrestricted)",
          "A ⊔ (B ⊓ C) = (A ⊔ B) ⊓ (A ⊔ C)",
          [](Args x, OpMode m) {
            return join(x[0], meet(x[1], x[2], m))
                   == meet(join(x[0], x[1]), join(x[0], x[2]), m);
          });
      add("closed-distributivity-meet-over-join", 3, per, cl,
          "distributivity theorem (ii)", "A ⊓ (B ⊔ C) = (A ⊓ B) ⊔ (A ⊓ C)",
          [](Args x, OpMode m) {
            return meet(x[0], join(x[1], x[2]), m)
                   == join(meet(x[0], x[1], m), meet(x[0], x[2], m));
          });
      add("closed-distributivity-join-over-meet", 3, per, cl,
          "distributivity theorem (i)", "A ⊔ (B ⊓ C) = (A ⊔ B) ⊓ (A ⊔ C)",
          [](Args x, OpMode m) {
            return join(x[0], meet(x[1], x[2], m))
                   == meet(join(x[0], x[1]), join(x[0], x[2]), m);
          });

      // The order.
      add("order-reflexive", 1, free, all, "order property (i)",
          "A ≤ A and A ≤ cloud(A)",
          [](Args x, OpMode) {
            return leq(x[0], x[0]) && leq(x[0], cloud(x[0]));
          });
      add("order-weak-antisymmetry", 2, free, all, "order property (ii)",
          "A ≤ B ∧ B ≤ A ⇒ cloud(A) = cloud(B), and A = B when both closed",
          [](Args x, OpMode) {
            if (!(leq(x[0], x[1]) && leq(x[1], x[0]))) {
              return true;
            }
            bool const closed = is_closed(x[0]) && is_closed(x[1]);
            return cloud(x[0]) == cloud(x[1])
                   && implies(closed, x[0] == x[1]);
          });
      add("order-transitive", 3, free, all, "order property (iii)",
          "A ≤ B ∧ B ≤ C ⇒ A ≤ C",
          [](Args x, OpMode) {
            return implies(leq(x[0], x[1]) && leq(x[1], x[2]),
                           leq(x[0], x[2]));
          });
      add("order-meet-lower-bound", 2, per, all, "order property (iv)",
          "A ⊓ B ≤ A and A ⊓ B ≤ B",
          [](Args x, OpMode m) {
            auto const ab = meet(x[0], x[1], m);
            return leq(ab, x[0]) && leq(ab, x[1]);
          });
      add("order-meet-greatest-lower-bound", 3, per, all, "order property (v)",
          "C ≤ A ∧ C ≤ B ⇒ C ≤ A ⊓ B",
          [](Args x, OpMode m) {
            return implies(leq(x[2], x[0]) && leq(x[2], x[1]),
                           leq(x[2], meet(x[0], x[1], m)));
          });
      add("order-join-upper-bound", 2, free, all, "order property (vi)",
          "A ≤ A ⊔ B and B ≤ A ⊔ B",
          [](Args x, OpMode) {
            auto const ab = join(x[0], x[1]);
            return leq(x[0], ab) && leq(x[1], ab);
          });
      add("order-join-least-upper-bound", 3, free, all, "order property (vii)",
          "A ≤ C ∧ B ≤ C ⇒ A ⊔ B ≤ C",
          [](Args x, OpMode) {
            return implies(leq(x[0], x[2]) && leq(x[1], x[2]),
                           leq(join(x[0], x[1]), x[2]));
          });
      add("order-bounds", 1, free, all, "order property (viii)",
          "0 ≤ A and A ≤ 1",
          [](Args x, OpMode) {
            auto const& u = x[0].universe();
            return leq(zero(u), x[0]) && leq(x[0], one(u));
          });
      add("order-leq-meet-cloud", 2, per, all, "order property (ix)",
          "A ≤ B ⇒ A ⊓ B = cloud(A)",
          [](Args x, OpMode m) {
            return implies(leq(x[0], x[1]), meet(x[0], x[1], m) == cloud(x[0]));
          });
      add("leq-iff-leq1", 2, per, all, "alternative order remark",
          "A ≤ B ⇔ A ≤₁ B",
          [](Args x, OpMode m) { return leq(x[0], x[1]) == leq1(x[0], x[1], m); });

      // Generalized complement.
      add("ortho-empty", 1, free, all, "complement theorem (i)",
          "A = ∅ ⇒ A⊥ = U",
          [](Args x, OpMode) {
            return implies(x[0].empty(), ortho(x[0]) == one(x[0].universe()));
          });
      add("ortho-universe", 1, free, all, "complement theorem (ii)",
          "A = U ⇒ A⊥ = ∅",
          [](Args x, OpMode) {
            auto const& u = x[0].universe();
            return implies(x[0] == one(u), ortho(x[0]) == zero(u));
          });
      add("ortho-complement-is-cloud", 1, free, all, "complement theorem (iii)",
          "U − A⊥ = cloud(A)",
          [](Args x, OpMode) {
            return one(x[0].universe()) - ortho(x[0]) == cloud(x[0]);
          });
      add("ortho-closed", 1, free, all, "complement theorem (iv)",
          "cloud(A⊥) = A⊥ = cloud(A)⊥",
          [](Args x, OpMode) {
            auto const o = ortho(x[0]);
            return cloud(o) == o && o == ortho(cloud(x[0]));
          });
      add("ortho-involution", 1, free, all,
          "summary 7; complement theorem (v)", "A⊥⊥ = cloud(A)",
          [](Args x, OpMode) { return ortho(ortho(x[0])) == cloud(x[0]); });
      add("ortho-antitone", 2, free, all, "summary 8; complement theorem (vi)",
          "A ≤ B ⇒ B⊥ ≤ A⊥",
          [](Args x, OpMode) {
            return implies(leq(x[0], x[1]), leq(ortho(x[1]), ortho(x[0])));
          });

      // Complementation and De Morgan.
      add("complementation-join", 1, free, all,
          "summary 9; complementation theorem (i)", "A ⊔ A⊥ = 1",
          [](Args x, OpMode) {
            return join(x[0], ortho(x[0])) == one(x[0].universe());
          });
      add("complementation-meet", 1, per, all,
          "summary 9; complementation theorem (ii)", "A ⊓ A⊥ = 0",
          [](Args x, OpMode m) {
            return meet(x[0], ortho(x[0]), m) == zero(x[0].universe());
          });
      add("i-absorption-1", 2, per, all,
          "summary 10; complementation theorem (iii)", "A ⊔ (B ⊓ B⊥) = cloud(A)",
          [](Args x, OpMode m) {
            return join(x[0], meet(x[1], ortho(x[1]), m)) == cloud(x[0]);
          });
      add("i-absorption-2", 2, per, all,
          "summary 11; complementation theorem (iv)", "A ⊓ (B ⊔ B⊥) = cloud(A)",
          [](Args x, OpMode m) {
            return meet(x[0], join(x[1], ortho(x[1])), m) == cloud(x[0]);
          });
      add("de-morgan-join", 2, per, all,
          "summary 12; complementation theorem (v)", "(A ⊔ B)⊥ = A⊥ ⊓ B⊥",
          [](Args x, OpMode m) {
            return ortho(join(x[0], x[1])) == meet(ortho(x[0]), ortho(x[1]), m);
          });
      add("partial-de-morgan-as-stated", 2, per, all,
          "summary 12; complementation theorem (vi) as stated",
          "(A ⊓ B)⊥ ⊆ A⊥ ⊔ B⊥",
          [](Args x, OpMode m) {
            return is_subset(ortho(meet(x[0], x[1], m)),
                             join(ortho(x[0]), ortho(x[1])));
          });
      add("partial-de-morgan-corrected", 2, per, all,
          "complementation theorem (vi), direction its proof yields",
          "A⊥ ⊔ B⊥ ⊆ (A ⊓ B)⊥",
          [](Args x, OpMode m) {
            return is_subset(join(ortho(x[0]), ortho(x[1])),
                             ortho(meet(x[0], x[1], m)));
          });
      add("de-morgan-meet", 2, per, all,
          "complementation theorem (vi) as an equality",
          "(A ⊓ B)⊥ = A⊥ ⊔ B⊥",
          [](Args x, OpMode m) {
            return ortho(meet(x[0], x[1], m)) == join(ortho(x[0]), ortho(x[1]));
          });
      add("de-morgan-meet-closed", 2, per, cl,
          "complementation theorem (vi), closed case", "(A ⊓ B)⊥ = A⊥ ⊔ B⊥",
          [](Args x, OpMode m) {
            return ortho(meet(x[0], x[1], m)) == join(ortho(x[0]), ortho(x[1]));
          });

      // Orthomodularity and orthogonality.
      add("orthomodularity", 2, free, all, "summary 13; orthomodularity theorem",
          "A ≤ B ⇒ A ⊔ (A ⊔ B⊥)⊥ = cloud(B)",
          [](Args x, OpMode) { return orthomodular_instance(x[0], x[1]); });
      add("orthogonality-characterization", 2, free, all,
          "orthogonality theorem", "A ⊥ B ⇔ A ∩ cloud(B) = ∅",
          [](Args x, OpMode) {
            return orthogonal(x[0], x[1]) == (x[0] & cloud(x[1])).empty();
          });
      add("accessibility-negates-orthogonality", 2, free, all,
          "accessibility and incompatibility",
          "A accessible to B ⇔ ¬(A ⊥ B), A incompatible with B ⇔ A ⊥ B",
          [](Args x, OpMode) {
            return accessible(x[0], x[1]) != orthogonal(x[0], x[1])
                   && incompatible(x[0], x[1]) == orthogonal(x[0], x[1]);
          });

      // Open question: reported, never asserted.
      add("modularity-probe", 3, per, all, "modularity open question",
          "A ≤ B ⇒ A ⊔ (C ⊓ B) = (A ⊔ C) ⊓ B",
          [](Args x, OpMode m) {
            return modular_instance(x[0], x[1], x[2], m);
          },
          true);

      std::ranges::sort(laws, {}, &LawSpec::name);
      return laws;
    }
    // clang-format on
  }  // namespace detail

  /// The fixed law registry, sorted by name.
  inline std::vector<LawSpec> const& law_registry() {
    static std::vector<LawSpec> const laws = detail::make_registry();
    return laws;
  }

  /// Looks up a law by name; throws Error if there is none.
  inline LawSpec const& find_law(std::string_view name) {
    auto const& laws = law_registry();
    auto it = std::ranges::find(laws, name, &LawSpec::name);
    if (it == laws.end()) {
      throw Error("unknown law '" + std::string(name) + "'");
    }
    return *it;
  }

}  // namespace ilattice
