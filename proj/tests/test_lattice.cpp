#include <catch_amalgamated.hpp>

#include "ilattice/lattice.hpp"
#include "ilattice/partitions.hpp"
#include "naive_oracle.hpp"

using namespace ilattice;

namespace {
  Universe one_block() {
    return Universe::build({{"x1", AtomKind::m}, {"x2", AtomKind::m}}, {{"x1", "x2"}});
  }

  Universe with_y() {
    return Universe::build({{"x1", AtomKind::m}, {"x2", AtomKind::m}, {"y", AtomKind::M}},
                           {{"x1", "x2"}, {"y"}});
  }
}  // namespace

TEST_CASE("meet readings diverge on disjoint members of one block") {
  auto const u = one_block();
  auto const a = u.qset({"x1"});
  auto const b = u.qset({"x2"});
  CHECK(meet(a, b, OpMode::literal) == u.empty());
  CHECK(meet(a, b, OpMode::closure) == u.full());
  CHECK(meet(u.full(), u.full(), OpMode::literal) == u.full());
  CHECK(meet(u.full(), u.full(), OpMode::closure) == u.full());
}

TEST_CASE("join and bounds") {
  auto const u = with_y();
  auto const a = u.qset({"x1"});
  CHECK(join(u.empty(), a) == cloud(a));
  CHECK(join(u.full(), a) == u.full());
  CHECK(join(a, u.qset({"y"})) == u.full());
  for (auto mode : {OpMode::literal, OpMode::closure}) {
    CHECK(meet(zero(u), a, mode) == u.empty());
    CHECK(meet(a, one(u), mode) == cloud(a));
  }
  CHECK(is_closed(one(u)));
}

TEST_CASE("orders") {
  auto const u = one_block();
  auto const a = u.qset({"x1"});
  auto const b = u.qset({"x2"});
  CHECK(leq(a, cloud(a)));
  CHECK(leq(u.empty(), a));
  CHECK(leq(a, u.full()));
  CHECK(leq(a, b));
  CHECK(leq1(a, b, OpMode::closure));
  CHECK_FALSE(leq1(a, b, OpMode::literal));
  auto const w = with_y();
  CHECK_FALSE(leq(w.qset({"y"}), w.qset({"x1"})));
}

TEST_CASE("orthogonality") {
  auto const u = with_y();
  auto const a = u.qset({"x1"});
  auto const y = u.qset({"y"});
  CHECK(orthogonal(a, y));
  CHECK(incompatible(a, y));
  CHECK_FALSE(accessible(a, y));
  CHECK_FALSE(orthogonal(a, a));
  CHECK(orthogonal(u.empty(), a));
  CHECK(ortho(a) == y);
  CHECK(ortho(u.empty()) == u.full());

  std::vector<QSet> family{a, y};
  CHECK(pairwise_orthogonal(family));
  std::vector<QSet> clash{a, cloud(a)};
  CHECK_FALSE(pairwise_orthogonal(clash));
  CHECK(pairwise_orthogonal(std::vector<QSet>{}));
}

TEST_CASE("orthomodular and modular instances") {
  auto const u = one_block();
  auto const a = u.qset({"x1"});
  auto const b = u.qset({"x2"});
  CHECK(orthomodular_instance(u.empty(), b));
  CHECK(orthomodular_instance(u.full(), u.full()));
  CHECK(orthomodular_instance(a, b));
  // A ≰ B leaves the instance vacuous
  auto const w = with_y();
  CHECK(orthomodular_instance(w.qset({"y"}), w.qset({"x1"})));

  for (auto mode : {OpMode::literal, OpMode::closure}) {
    for (auto const& x : closed_qsets(w)) {
      for (auto const& y : closed_qsets(w)) {
        for (auto const& z : closed_qsets(w)) {
          CHECK(modular_instance(x, y, z, mode));
        }
      }
    }
  }
}

TEST_CASE("operations match the set-based oracle on every small universe") {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (auto const& p : enumerate_partitions(n)) {
      auto const u = partition_universe(p);
      std::vector<std::vector<int>> blocks;
      for (auto const& b : p) {
        blocks.emplace_back(b.begin(), b.end());
      }
      auto const w     = oracle::world(blocks);
      auto const to_set = [](QSet const& q) {
        oracle::Set s;
        for (std::size_t i = 0; i < q.universe().size(); ++i) {
          if (q.contains(i)) {
            s.insert(static_cast<int>(i));
          }
        }
        return s;
      };
      for (auto const& a : enumerate_subsets(u)) {
        auto const sa = to_set(a);
        REQUIRE(to_set(cloud(a)) == oracle::cloud(w, sa));
        REQUIRE(to_set(ortho(a)) == oracle::perp(w, sa));
        for (auto const& b : enumerate_subsets(u)) {
          auto const sb = to_set(b);
          REQUIRE(to_set(join(a, b)) == oracle::join(w, sa, sb));
          REQUIRE(to_set(meet(a, b, OpMode::literal)) == oracle::meet(w, sa, sb, true));
          REQUIRE(to_set(meet(a, b, OpMode::closure)) == oracle::meet(w, sa, sb, false));
          REQUIRE(leq(a, b) == oracle::leq(w, sa, sb));
        }
      }
    }
  }
}
