#pragma once

/// @file
/// Set partitions of {0, ..., n-1} in restricted-growth-string order, and the
/// universes they induce.

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "ilattice/error.hpp"
#include "ilattice/universe.hpp"

namespace ilattice {

  inline constexpr std::size_t kMaxPartitionAtoms = 6;

  /// A partition as a list of blocks of element indices; blocks are ordered
  /// by their least element, elements ascending within a block.
  using Partition = std::vector<std::vector<std::size_t>>;

  /// Restricted growth string a with a[0] = 0 and a[i] ≤ 1 + max(a[0..i-1]).
  using GrowthString = std::vector<std::size_t>;

  /// Steps `rgs` to its lexicographic successor; false once exhausted.
  inline bool next_growth_string(GrowthString& rgs) {
    std::size_t const n = rgs.size();
    if (n <= 1) {
      return false;
    }
    // prefix_max[i] = max(rgs[0..i-1])
    std::vector<std::size_t> prefix_max(n, 0);
    for (std::size_t i = 1; i < n; ++i) {
      prefix_max[i] = std::max(prefix_max[i - 1], rgs[i - 1]);
    }
    for (std::size_t i = n - 1; i > 0; --i) {
      if (rgs[i] <= prefix_max[i]) {
        ++rgs[i];
        std::fill(rgs.begin() + static_cast<std::ptrdiff_t>(i) + 1,
                  rgs.end(),
                  0);
        return true;
      }
    }
    return false;
  }

  inline Partition to_partition(GrowthString const& rgs) {
    Partition blocks;
    for (std::size_t i = 0; i < rgs.size(); ++i) {
      if (rgs[i] >= blocks.size()) {
        blocks.resize(rgs[i] + 1);
      }
      blocks[rgs[i]].push_back(i);
    }
    return blocks;
  }

  /// Every set partition of {0..n-1} exactly once, in restricted growth
  /// string order. Requires 1 ≤ n ≤ 6.
  inline std::vector<Partition> enumerate_partitions(std::size_t n) {
    if (n < 1 || n > kMaxPartitionAtoms) {
      throw Error("partition size must be in 1.."
                  + std::to_string(kMaxPartitionAtoms) + ", got "
                  + std::to_string(n));
    }
    std::vector<Partition> out;
    GrowthString           rgs(n, 0);
    do {
      out.push_back(to_partition(rgs));
    } while (next_growth_string(rgs));
    return out;
  }

  /// Universe with m-atoms x1..xn grouped by `partition`.
  inline Universe partition_universe(Partition const& partition) {
    std::size_t n = 0;
    for (auto const& block : partition) {
      n += block.size();
    }
    std::vector<Atom> atoms;
    for (std::size_t i = 0; i < n; ++i) {
      atoms.push_back({"x" + std::to_string(i + 1), AtomKind::m});
    }
    std::vector<std::vector<std::string>> blocks;
    for (auto const& block : partition) {
      auto& ids = blocks.emplace_back();
      for (auto i : block) {
        ids.push_back(atoms.at(i).id);
      }
    }
    return Universe::build(std::move(atoms), std::move(blocks));
  }

  /// The universes of every partition of n = 1..max_atoms atoms.
  inline std::vector<Universe> all_small_universes(std::size_t max_atoms) {
    std::vector<Universe> out;
    for (std::size_t n = 1; n <= max_atoms; ++n) {
      for (auto const& p : enumerate_partitions(n)) {
        out.push_back(partition_universe(p));
      }
    }
    return out;
  }

}  // namespace ilattice
