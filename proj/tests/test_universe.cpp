#include <catch_amalgamated.hpp>

#include <ranges>

#include "ilattice/universe.hpp"

using namespace ilattice;

namespace {
  Universe mixed() {
    return Universe::build({{"x1", AtomKind::m},
                            {"x2", AtomKind::m},
                            {"x3", AtomKind::m},
                            {"y", AtomKind::M}},
                           {{"x1", "x2", "x3"}, {"y"}});
  }

  Universe one_block() {
    return Universe::build({{"x1", AtomKind::m}, {"x2", AtomKind::m}}, {{"x1", "x2"}});
  }
}  // namespace

TEST_CASE("build validates the partition") {
  using A = std::vector<Atom>;
  CHECK_THROWS_AS(Universe::build(A{}, {}), UniverseError);
  CHECK_THROWS_WITH(Universe::build(A{{"x", AtomKind::m}, {"x", AtomKind::m}}, {{"x"}}),
                    Catch::Matchers::ContainsSubstring("duplicate"));
  CHECK_THROWS_WITH(Universe::build(A{{"x", AtomKind::m}}, {{"x"}, {"x"}}),
                    Catch::Matchers::ContainsSubstring("two blocks"));
  CHECK_THROWS_WITH(Universe::build(A{{"x", AtomKind::m}}, {{"z"}}),
                    Catch::Matchers::ContainsSubstring("unknown atom 'z'"));
  CHECK_THROWS_WITH(Universe::build(A{{"x", AtomKind::m}, {"y", AtomKind::m}}, {{"x"}}),
                    Catch::Matchers::ContainsSubstring("in no block"));
  CHECK_THROWS_WITH(
      Universe::build(A{{"x", AtomKind::m}, {"Y", AtomKind::M}}, {{"x", "Y"}}),
      Catch::Matchers::ContainsSubstring("singleton"));
  CHECK_THROWS_AS(Universe::build(A{{"x", AtomKind::m}}, {{"x"}, {}}), UniverseError);

  A many;
  std::vector<std::string> ids;
  for (int i = 0; i < 65; ++i) {
    many.push_back({"a" + std::to_string(i), AtomKind::m});
    ids.push_back(many.back().id);
  }
  CHECK_THROWS_AS(Universe::build(many, {ids}), UniverseError);
}

TEST_CASE("digest is canonical") {
  auto const a = Universe::build({{"p", AtomKind::m}, {"q", AtomKind::m}, {"r", AtomKind::m}},
                                 {{"r"}, {"q", "p"}});
  auto const b = Universe::build({{"p", AtomKind::m}, {"q", AtomKind::m}, {"r", AtomKind::m}},
                                 {{"p", "q"}, {"r"}});
  CHECK(a.digest() == "[[p,q],[r]]");
  CHECK(a.digest() == b.digest());
  CHECK(a == b);
  CHECK(mixed().indistinguishable("x1", "x3"));
  CHECK_FALSE(mixed().indistinguishable("x1", "y"));
}

TEST_CASE("cloud on the mixed universe") {
  auto const u = mixed();
  CHECK(cloud(u.qset({"x1"})) == u.qset({"x1", "x2", "x3"}));
  CHECK(cloud(u.qset({"y"})) == u.qset({"y"}));
  CHECK(cloud(u.empty()) == u.empty());
  CHECK(cloud(u.qset({"x2", "y"})) == u.full());
  CHECK(interior(u.qset({"x1", "x2", "y"})) == u.qset({"y"}));
  CHECK(is_closed(u.qset({"x1", "x2", "x3"})));
  CHECK_FALSE(is_closed(u.qset({"x1"})));
}

TEST_CASE("qsets of different universes do not mix") {
  auto const a = one_block();
  auto const b = mixed();
  CHECK_THROWS_AS(a.full() | b.full(), UniverseMismatch);
  CHECK_THROWS_AS(is_subset(a.empty(), b.empty()), UniverseMismatch);
  // structurally equal universes are the same universe
  CHECK((one_block().full() | one_block().empty()) == one_block().full());
}

TEST_CASE("qset construction") {
  auto const u = mixed();
  CHECK_THROWS_AS(u.qset({"nope"}), UniverseError);
  CHECK_THROWS_AS(u.from_mask(Mask{1} << 10), Error);
  auto const q = u.qset({"x3", "x1"});
  CHECK(q.size() == 2);
  CHECK(q.ids() == std::vector<std::string>{"x1", "x3"});
  CHECK(q.contains("x1"));
  CHECK_FALSE(q.contains("x2"));
  CHECK(~q == u.qset({"x2", "y"}));
}

TEST_CASE("enumeration") {
  auto const u = mixed();
  auto       all = enumerate_subsets(u);
  CHECK(std::ranges::distance(all) == 16);
  CHECK(closed_qsets(u).size() == 4);
  for (auto const& c : closed_qsets(u)) {
    CHECK(is_closed(c));
  }
  std::vector<Atom>        atoms;
  std::vector<std::string> ids;
  for (int i = 0; i < 17; ++i) {
    atoms.push_back({"a" + std::to_string(i), AtomKind::m});
    ids.push_back(atoms.back().id);
  }
  auto const big = Universe::build(atoms, {ids});
  CHECK_THROWS_WITH(enumerate_subsets(big),
                    Catch::Matchers::ContainsSubstring("sampling"));
}

TEST_CASE("cloud agrees with the block-union definition on every subset") {
  auto const u = mixed();
  for (auto const& a : enumerate_subsets(u)) {
    Mask expect = 0;
    for (std::size_t b = 0; b < u.block_count(); ++b) {
      if ((u.block_mask(b) & a.mask()) != 0) {
        expect |= u.block_mask(b);
      }
    }
    CHECK(cloud(a).mask() == expect);
    CHECK(interior(a) == ~cloud(~a));
  }
}
