#include <catch_amalgamated.hpp>

#include "generators.hpp"
#include "ilattice/logic.hpp"
#include "ilattice/partitions.hpp"

using namespace ilattice;

namespace {
  Universe one_block() {
    return Universe::build({{"x1", AtomKind::m}, {"x2", AtomKind::m}}, {{"x1", "x2"}});
  }

  Universe classical() {
    return Universe::build({{"p", AtomKind::M}, {"q", AtomKind::M}}, {{"p"}, {"q"}});
  }

  Formula f(char const* text) {
    return parse_formula(text);
  }

  auto const modes = {OpMode::literal, OpMode::closure};
}  // namespace

TEST_CASE("valuations") {
  auto const u = one_block();
  Valuation  v(u);
  v.assign("a", u.qset({"x1"}));
  CHECK(v.at("a") == u.qset({"x1"}));
  CHECK_THROWS_AS(v.at("b"), ValuationError);
  CHECK_THROWS_AS(eval(f("a & b"), v, OpMode::literal), ValuationError);
  CHECK_THROWS_AS(v.assign("b", classical().full()), ValuationError);
}

TEST_CASE("evaluation of each connective") {
  auto const u = one_block();
  Valuation  v(u, {{"a", u.qset({"x1"})}, {"b", u.qset({"x2"})}});
  CHECK(eval(f("a"), v, OpMode::literal) == u.qset({"x1"}));
  CHECK(eval(f("a & b"), v, OpMode::literal) == u.empty());
  CHECK(eval(f("a & b"), v, OpMode::closure) == u.full());
  CHECK(eval(f("a | b"), v, OpMode::literal) == u.full());
  CHECK(eval(f("~a"), v, OpMode::literal) == u.empty());
  CHECK(eval(f("~~a"), v, OpMode::literal) == u.full());
  CHECK(eval(f("a -> b"), v, OpMode::literal) == u.full());
  CHECK(eval(f("a <-> b"), v, OpMode::closure) == u.full());
}

TEST_CASE("truth") {
  for (auto const& u : all_small_universes(3)) {
    for (auto const& x : enumerate_subsets(u)) {
      Valuation v(u, {{"a", x}});
      for (auto mode : modes) {
        REQUIRE(is_true(f("a -> a"), v, mode));
        REQUIRE(is_true(f("a | ~a"), v, mode));
      }
    }
    Valuation empty(u, {{"a", u.empty()}});
    CHECK_FALSE(is_true(f("a"), empty, OpMode::literal));
  }
}

TEST_CASE("conditional expansion and closed values") {
  gen::Rng rng(5);
  for (int i = 0; i < 400; ++i) {
    auto const u = gen::universe(rng, 1 + rng() % 5);
    Valuation  v(u, {{"a", gen::qset(rng, u)}, {"b", gen::qset(rng, u)}});
    auto const phi = gen::formula(rng, {"a", "b"}, 3);
    auto const psi = gen::formula(rng, {"a", "b"}, 3);
    for (auto mode : modes) {
      auto const va = eval(phi, v, mode);
      auto const vb = eval(psi, v, mode);
      if (!phi.is_atom()) {
        REQUIRE(is_closed(va));
      }
      auto const expanded =
          cloud(vb | (ortho(va) & ortho(vb)));
      REQUIRE(eval(Formula::cond(phi, psi), v, mode) == expanded);
      REQUIRE(eval(Formula::cond(phi, psi), v, mode)
              == eval(Formula::disj(psi, Formula::conj(Formula::neg(phi), Formula::neg(psi))),
                      v, mode));
      REQUIRE(eval(Formula::bicond(phi, psi), v, mode)
              == eval(Formula::conj(Formula::cond(phi, psi), Formula::cond(psi, phi)), v,
                      mode));
    }
  }
}

TEST_CASE("definability") {
  auto const u = one_block();
  auto const x = u.qset({"x1"});
  Valuation  v(u, {{"a", x}, {"b", u.qset({"x2"})}});
  CHECK(is_definable_by(x, f("a"), v, OpMode::literal));
  CHECK(is_definable_by(cloud(x), f("~~a"), v, OpMode::literal));
  auto const f2 = generate_formulas({"a", "b"}, 2);
  for (auto const& phi : f2.formulas()) {
    if (!phi.is_atom()) {
      for (auto mode : modes) {
        REQUIRE_FALSE(is_definable_by(x, phi, v, mode));
      }
    }
  }
}

TEST_CASE("validity") {
  for (auto const& u : all_small_universes(3)) {
    for (auto mode : modes) {
      auto const r = is_valid(u, f("a -> a"), CheckStrategy::exhaustive(), mode);
      REQUIRE(r.verdict);
      REQUIRE(r.valuations_checked == (std::uint64_t{1} << u.size()));
      auto const atom = is_valid(u, f("a"), CheckStrategy::exhaustive(), mode);
      REQUIRE_FALSE(atom.verdict);
      REQUIRE(atom.witness->at("a") == u.empty());
    }
  }
}

TEST_CASE("validity of a & b -> a matches a direct sweep") {
  auto const u = one_block();
  for (auto mode : modes) {
    bool expect = true;
    for (auto const& x : enumerate_subsets(u)) {
      for (auto const& y : enumerate_subsets(u)) {
        auto const lhs = meet(x, y, mode);
        expect         = expect && join(x, meet(ortho(lhs), ortho(x), mode)) == u.full();
      }
    }
    auto const r = is_valid(u, f("a & b -> a"), CheckStrategy::exhaustive(), mode);
    CHECK(r.verdict == expect);
  }
}

TEST_CASE("validity budget and sampling") {
  std::vector<Atom>        atoms;
  std::vector<std::string> ids;
  for (int i = 0; i < 13; ++i) {
    atoms.push_back({"a" + std::to_string(i), AtomKind::m});
    ids.push_back(atoms.back().id);
  }
  auto const big = Universe::build(atoms, {ids});
  CHECK_THROWS_AS(is_valid(big, f("a -> b"), CheckStrategy::exhaustive(), OpMode::literal),
                  BudgetExceeded);
  auto const s = is_valid(big, f("a & b"), CheckStrategy::sampled(200, 9), OpMode::literal);
  auto const t = is_valid(big, f("a & b"), CheckStrategy::sampled(200, 9), OpMode::literal);
  REQUIRE_FALSE(s.verdict);
  REQUIRE(t.witness);
  CHECK(s.valuations_checked == t.valuations_checked);
  CHECK(s.witness->assignment() == t.witness->assignment());
}

TEST_CASE("semantic consequence") {
  auto const u = one_block();
  auto const e = CheckStrategy::exhaustive();
  for (auto mode : modes) {
    CHECK(semantic_consequence(u, {f("a & b")}, f("a & b"), e, mode).verdict);
    CHECK(semantic_consequence(u, {}, f("a -> a"), e, mode).verdict);
    CHECK(semantic_consequence(classical(), {f("a"), f("a -> b")}, f("b"), e, mode).verdict);
  }
}

TEST_CASE("modus ponens breaks when atoms take non-closed values") {
  auto const u = one_block();
  auto const e = CheckStrategy::exhaustive();
  for (auto mode : modes) {
    auto const r = semantic_consequence(u, {f("a"), f("a -> b")}, f("b"), e, mode);
    REQUIRE_FALSE(r.verdict);
    auto const& v = *r.witness;
    CHECK(v.at("a") == u.full());
    CHECK(cloud(v.at("b")) == u.full());
    CHECK_FALSE(is_closed(v.at("b")));
    CHECK(is_true(f("a -> b"), v, mode));
    CHECK_FALSE(is_true(f("b"), v, mode));

    auto const closed = semantic_consequence(u, {f("a"), f("a -> b")}, f("b"), e, mode,
                                             ValuationDomain::closed_only);
    CHECK(closed.verdict);
  }
}

TEST_CASE("implication conditions") {
  for (auto const& u : all_small_universes(3)) {
    for (auto mode : modes) {
      auto const r = check_implication_conditions(u, CheckStrategy::exhaustive(), mode);
      REQUIRE(r.size() == 3);
      CHECK(r[0].name == "identity");
      CHECK(r[0].holds);
      CHECK(r[2].name == "order");
      CHECK(r[2].holds);
      CHECK(r[2].valuations_checked == (std::uint64_t{1} << (2 * u.size())));
      bool const all_singletons = u.block_count() == u.size();
      CHECK(r[1].holds == all_singletons);

      auto const closed = check_implication_conditions(u, CheckStrategy::exhaustive(), mode,
                                                       ValuationDomain::closed_only);
      for (auto const& c : closed) {
        CHECK(c.holds);
      }
    }
  }
}

TEST_CASE("the consequence table agrees with recursive evaluation") {
  auto const f0 = generate_formulas({"a", "b"}, 2);
  for (auto const& u : all_small_universes(2)) {
    for (auto mode : modes) {
      ConsequenceOperator const op(u, f0, CheckStrategy::exhaustive(), mode);
      for (std::uint64_t k = 0; k < op.valuations().size(); ++k) {
        auto const v = op.valuations().valuation(k);
        for (std::size_t i = 0; i < f0.size(); ++i) {
          REQUIRE(op.value(i, k) == eval(f0[i], v, mode).mask());
        }
      }
    }
  }
}

TEST_CASE("cn") {
  auto const e  = CheckStrategy::exhaustive();
  auto const f1 = generate_formulas({"a", "b"}, 1);
  auto const u  = one_block();
  for (auto mode : modes) {
    auto const base = cn(u, {}, f1, e, mode);
    CHECK(std::ranges::find(base, f("a -> a")) != base.end());
    CHECK(std::ranges::find(base, f("b -> b")) != base.end());
    CHECK(std::ranges::find(base, f("a")) == base.end());

    auto const with_a = cn(u, {f("a & b")}, f1, e, mode);
    CHECK(std::ranges::find(with_a, f("a & b")) != with_a.end());

    ConsequenceOperator const op(u, f1, e, mode);
    for (std::size_t i = 0; i < f1.size(); ++i) {
      auto const c = op.closure(op.singleton(i));
      REQUIRE(op.closure(c) == c);
    }
    CHECK_THROWS_AS(op.set_of({f("a & b & a")}), Error);
  }
}

TEST_CASE("cn matches semantic consequence formula by formula") {
  auto const e  = CheckStrategy::exhaustive();
  auto const f1 = generate_formulas({"a", "b"}, 1);
  auto const u  = all_small_universes(3)[2];
  std::vector<Formula> const gamma{f("a | b"), f("~a")};
  for (auto mode : modes) {
    ConsequenceOperator const op(u, f1, e, mode);
    auto const                closure = op.closure(op.set_of(gamma));
    for (std::size_t i = 0; i < f1.size(); ++i) {
      REQUIRE(closure.test(i) == semantic_consequence(u, gamma, f1[i], e, mode).verdict);
    }
  }
}

TEST_CASE("consequence laws on a small universe") {
  auto const f0 = generate_formulas({"a", "b"}, 1);
  for (auto mode : modes) {
    ConsequenceOperator const op(one_block(), f0, CheckStrategy::exhaustive(), mode);
    for (auto const& r : audit_consequence(op, 3)) {
      INFO(r.name << " " << r.witness);
      CHECK(r.holds);
      CHECK(r.cases_checked > 0);
    }
  }
}

TEST_CASE("deduction theorem probe") {
  auto const e = CheckStrategy::exhaustive();
  auto const f1 = generate_formulas({"a", "b"}, 1);
  for (auto mode : modes) {
    ConsequenceOperator const op(classical(), f1, e, mode);
    CHECK_FALSE(deduction_theorem_probe(op).witness);
  }

  auto const f2 = generate_formulas({"a", "b"}, 2);
  for (auto mode : modes) {
    ConsequenceOperator const op(one_block(), f2, e, mode);
    auto const                r = deduction_theorem_probe(op);
    CHECK(r.value_classes > 0);
    if (r.witness) {
      auto const& w        = *r.witness;
      auto        premises = w.gamma;
      premises.push_back(w.alpha);
      CHECK(semantic_consequence(one_block(), premises, w.beta, e, mode).verdict);
      CHECK_FALSE(semantic_consequence(one_block(), w.gamma, Formula::cond(w.alpha, w.beta),
                                       e, mode)
                      .verdict);
    }
  }
}
