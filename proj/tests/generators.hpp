#pragma once

// Seeded generators for property tests.

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ilattice/formula.hpp"
#include "ilattice/universe.hpp"

namespace gen {

  using Rng = std::mt19937_64;

  /// Random partition of n m-atoms named x1..xn, with atom ids shuffled
  /// across blocks.
  inline ilattice::Universe universe(Rng& rng, std::size_t n) {
    std::vector<ilattice::Atom> atoms;
    for (std::size_t i = 0; i < n; ++i) {
      atoms.push_back({"x" + std::to_string(i + 1), ilattice::AtomKind::m});
    }
    std::vector<std::vector<std::string>> blocks;
    for (auto const& a : atoms) {
      std::uniform_int_distribution<std::size_t> pick(0, blocks.size());
      auto const b = pick(rng);
      if (b == blocks.size()) {
        blocks.push_back({a.id});
      } else {
        blocks[b].push_back(a.id);
      }
    }
    return ilattice::Universe::build(std::move(atoms), std::move(blocks));
  }

  inline ilattice::QSet qset(Rng& rng, ilattice::Universe const& u) {
    return u.from_mask(rng() & u.full_mask());
  }

  inline ilattice::Formula formula(Rng& rng,
                                   std::vector<std::string> const& atoms,
                                   std::size_t depth) {
    std::uniform_int_distribution<int> kind(0, depth == 0 ? 0 : 6);
    auto const atom = [&] {
      std::uniform_int_distribution<std::size_t> pick(0, atoms.size() - 1);
      return ilattice::Formula::atom(atoms[pick(rng)]);
    };
    using K = ilattice::Formula::Kind;
    switch (kind(rng)) {
      case 0:
      case 1:
        return atom();
      case 2:
        return ilattice::Formula::neg(formula(rng, atoms, depth - 1));
      default: {
        static constexpr K kinds[] = {K::conj, K::disj, K::cond, K::bicond};
        std::uniform_int_distribution<int> k(0, 3);
        auto l = formula(rng, atoms, depth - 1);
        auto r = formula(rng, atoms, depth - 1);
        return ilattice::Formula::binary(kinds[k(rng)], std::move(l), std::move(r));
      }
    }
  }

}  // namespace gen
