#pragma once

/// @file
/// Checks registry laws on finite universes: exhaustive and sampled
/// strategies, counterexample minimization, whole-registry audits and the
/// search for the smallest universe violating a law.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "ilattice/error.hpp"
#include "ilattice/laws.hpp"
#include "ilattice/lattice.hpp"
#include "ilattice/partitions.hpp"
#include "ilattice/universe.hpp"

namespace ilattice {

  inline constexpr std::uint64_t kDefaultCaseBudget = std::uint64_t{1} << 24;

  enum class StrategyKind { exhaustive, sampled };

  struct CheckStrategy {
    StrategyKind  kind = StrategyKind::exhaustive;
    std::uint64_t sample_count = 0;
    std::uint64_t seed = 0;
    /// Largest tuple space an exhaustive check may walk.
    std::uint64_t case_budget = kDefaultCaseBudget;
    /// Threads splitting an exhaustive tuple range; results do not depend
    /// on it.
    unsigned workers = 1;

    static CheckStrategy exhaustive(std::uint64_t budget = kDefaultCaseBudget) {
      return {StrategyKind::exhaustive, 0, 0, budget, 1};
    }

    static CheckStrategy sampled(std::uint64_t count, std::uint64_t seed) {
      if (count == 0) {
        throw Error("sample count must be positive");
      }
      return {StrategyKind::sampled, count, seed, kDefaultCaseBudget, 1};
    }
  };

  enum class LawStatus { holds, fails, skipped };

  inline char const* to_string(LawStatus s) {
    switch (s) {
      case LawStatus::holds:
        return "holds";
      case LawStatus::fails:
        return "fails";
      default:
        return "skipped";
    }
  }

  /// Name of the i-th quantified variable: A, B, C.
  inline std::string variable_name(std::size_t i) {
    return std::string(1, static_cast<char>('A' + i));
  }

  struct LawReport {
    std::string           law;
    std::optional<OpMode> mode;  // empty for mode-free laws
    std::string           universe_digest;
    LawStatus             status = LawStatus::holds;
    std::uint64_t         cases_checked = 0;
    /// Present iff status is fails, one qset per variable.
    std::optional<std::vector<QSet>> counterexample;
    bool                             minimal = false;
  };

  inline std::string mode_label(std::optional<OpMode> mode) {
    return mode ? to_string(*mode) : "n/a";
  }

  struct AuditTable {
    std::vector<LawReport> rows;
  };

  namespace detail {
    // splitmix64 step
    inline std::uint64_t splitmix64(std::uint64_t& state) {
      std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
      z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
      z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
      return z ^ (z >> 31);
    }

    // FNV-1a, stable across platforms unlike std::hash
    inline std::uint64_t fnv1a(std::string_view text) {
      std::uint64_t h = 0xcbf29ce484222325ULL;
      for (unsigned char ch : text) {
        h ^= ch;
        h *= 0x100000001b3ULL;
      }
      return h;
    }

    /// Deterministic 64-bit stream keyed by a seed and any number of labels.
    class KeyedStream {
     public:
      KeyedStream(std::uint64_t seed, std::initializer_list<std::string_view> keys)
          : _state(seed) {
        for (auto key : keys) {
          _state ^= fnv1a(key);
          splitmix64(_state);
        }
      }

      std::uint64_t next() {
        return splitmix64(_state);
      }

      /// Uniform value with `bits` random low bits.
      std::uint64_t bits(std::size_t bits) {
        auto const v = next();
        return bits >= 64 ? v : v & ((std::uint64_t{1} << bits) - 1);
      }

     private:
      std::uint64_t _state;
    };

    /// The domain one quantified variable ranges over.
    struct VariableDomain {
      Universe    universe;
      Restriction restriction;

      /// log2 of the domain size.
      std::size_t bits() const {
        return restriction == Restriction::unrestricted
                   ? universe.size()
                   : universe.block_count();
      }

      Mask member(std::uint64_t index) const {
        return restriction == Restriction::unrestricted
                   ? index
                   : blocks_union(universe, index);
      }
    };

    class LawEvaluator {
     public:
      LawEvaluator(Universe u, LawSpec const& law, OpMode mode)
          : _universe(std::move(u)), _law(law), _mode(mode) {}

      bool holds(std::vector<Mask> const& masks) const {
        std::vector<QSet> args;
        args.reserve(masks.size());
        for (auto m : masks) {
          args.push_back(_universe.from_mask(m));
        }
        return _law.predicate(args, _mode);
      }

     private:
      Universe       _universe;
      LawSpec const& _law;
      OpMode         _mode;
    };

    /// Removes one atom (one block, for closed-only laws) at a time while
    /// the tuple keeps failing; stops when no single removal does.
    inline std::vector<Mask> minimize(LawEvaluator const& eval,
                                      Universe const&     u,
                                      Restriction         restriction,
                                      std::vector<Mask>   tuple) {
      bool progress = true;
      while (progress) {
        progress = false;
        for (std::size_t v = 0; v < tuple.size() && !progress; ++v) {
          for (std::size_t atom = 0; atom < u.size() && !progress; ++atom) {
            if (((tuple[v] >> atom) & 1U) == 0) {
              continue;
            }
            Mask const drop = restriction == Restriction::closed_only
                                  ? u.block_mask(u.block_of(atom))
                                  : Mask{1} << atom;
            auto candidate = tuple;
            candidate[v] &= ~drop;
            if (!eval.holds(candidate)) {
              tuple    = std::move(candidate);
              progress = true;
            }
          }
        }
      }
      return tuple;
    }

    inline std::vector<Mask> decode_tuple(VariableDomain const& domain,
                                          std::size_t           arity,
                                          std::uint64_t         index) {
      std::vector<Mask> masks(arity);
      std::size_t const bits = domain.bits();
      for (std::size_t v = arity; v-- > 0;) {
        masks[v] = domain.member(index & ((std::uint64_t{1} << bits) - 1));
        index >>= bits;
      }
      return masks;
    }
  }  // namespace detail

  /// Evaluates `law` on explicit arguments.
  inline bool evaluate_law(LawSpec const&        law,
                           std::span<QSet const> args,
                           OpMode                mode) {
    if (args.size() != law.arity) {
      throw Error("law '" + law.name + "' takes "
                  + std::to_string(law.arity) + " arguments");
    }
    for (auto const& a : args) {
      args[0].require_same(a);
    }
    return law.predicate(args, mode);
  }

  /// Number of tuples an exhaustive check of `law` walks on `u`, or nullopt
  /// when it does not fit in 64 bits.
  inline std::optional<std::uint64_t> exhaustive_case_count(
      Universe const& u,
      std::size_t     arity,
      Restriction     restriction) {
    std::size_t const bits = (restriction == Restriction::unrestricted
                                  ? u.size()
                                  : u.block_count())
                             * arity;
    if (bits >= 64) {
      return std::nullopt;
    }
    return std::uint64_t{1} << bits;
  }

  /// Checks one law on one universe.
  ///
  /// Exhaustive checks walk all tuples in canonical order (variable A most
  /// significant, each variable in binary counting order); closed-only laws,
  /// or any law when `restriction` says so, range over closed qsets only.
  /// Sampled checks draw tuples from a stream keyed by the seed, the
  /// universe digest and the law name. The first failing tuple is minimized.
  ///
  /// Throws BudgetExceeded if an exhaustive walk exceeds the case budget or
  /// the universe is larger than kExhaustiveAtomLimit.
  inline LawReport check_law(Universe const&            u,
                             LawSpec const&             law,
                             OpMode                     mode,
                             CheckStrategy const&       strategy,
                             std::optional<Restriction> restriction = {}) {
    Restriction const effective = restriction.value_or(law.restriction);
    detail::VariableDomain const domain{u, effective};
    detail::LawEvaluator const   eval(u, law, mode);

    LawReport report;
    report.law = law.name;
    if (law.mode_sensitivity == ModeSensitivity::per_mode) {
      report.mode = mode;
    }
    report.universe_digest = u.digest();

    std::optional<std::vector<Mask>> failing;

    if (strategy.kind == StrategyKind::exhaustive) {
      auto const total = exhaustive_case_count(u, law.arity, effective);
      if (u.size() > kExhaustiveAtomLimit || !total
          || *total > strategy.case_budget) {
        throw BudgetExceeded(
            "exhaustive check of '" + law.name + "' on " + u.digest()
            + " needs 2^"
            + std::to_string(domain.bits() * law.arity)
            + " cases, budget is " + std::to_string(strategy.case_budget)
            + "; use a sampling strategy");
      }
      std::atomic<std::uint64_t> first_failure{*total};
      auto scan = [&](std::uint64_t lo, std::uint64_t hi) {
        for (std::uint64_t i = lo; i < hi && i < first_failure.load(); ++i) {
          if (!eval.holds(detail::decode_tuple(domain, law.arity, i))) {
            auto seen = first_failure.load();
            while (i < seen && !first_failure.compare_exchange_weak(seen, i)) {
            }
            return;
          }
        }
      };
      unsigned const workers = std::max(1U, strategy.workers);
      if (workers == 1 || *total < workers) {
        scan(0, *total);
      } else {
        std::vector<std::jthread> pool;
        std::uint64_t const       chunk = (*total + workers - 1) / workers;
        for (unsigned w = 0; w < workers; ++w) {
          std::uint64_t const lo = w * chunk;
          pool.emplace_back(scan, lo, std::min(*total, lo + chunk));
        }
      }
      auto const fail_index = first_failure.load();
      if (fail_index < *total) {
        failing = detail::decode_tuple(domain, law.arity, fail_index);
        report.cases_checked = fail_index + 1;
      } else {
        report.cases_checked = *total;
      }
    } else {
      detail::KeyedStream stream(strategy.seed, {u.digest(), law.name});
      for (std::uint64_t s = 0; s < strategy.sample_count; ++s) {
        std::vector<Mask> masks(law.arity);
        for (auto& m : masks) {
          m = domain.member(stream.bits(domain.bits()));
        }
        ++report.cases_checked;
        if (!eval.holds(masks)) {
          failing = std::move(masks);
          break;
        }
      }
    }

    if (failing) {
      auto const minimal
          = detail::minimize(eval, u, effective, std::move(*failing));
      std::vector<QSet> witness;
      for (auto m : minimal) {
        witness.push_back(u.from_mask(m));
      }
      report.status         = LawStatus::fails;
      report.counterexample = std::move(witness);
      report.minimal        = true;
    }
    return report;
  }

  enum class BudgetPolicy { propagate, skip };

  /// Runs `laws` (default: the whole registry) on one universe. Mode-free
  /// laws give one row with mode n/a; per-mode laws one row per mode. Rows
  /// are ordered by (law name, mode).
  inline AuditTable audit(Universe const&             u,
                          std::vector<OpMode> const&  modes,
                          CheckStrategy const&        strategy,
                          BudgetPolicy                policy = BudgetPolicy::propagate,
                          std::vector<LawSpec> const& laws = law_registry()) {
    AuditTable table;
    for (auto const& law : laws) {
      std::vector<OpMode> law_modes = modes;
      if (law.mode_sensitivity == ModeSensitivity::mode_free) {
        law_modes = {OpMode::closure};
      }
      for (auto mode : law_modes) {
        try {
          table.rows.push_back(check_law(u, law, mode, strategy));
        } catch (BudgetExceeded const&) {
          if (policy == BudgetPolicy::propagate) {
            throw;
          }
          LawReport skipped;
          skipped.law             = law.name;
          skipped.universe_digest = u.digest();
          skipped.status          = LawStatus::skipped;
          if (law.mode_sensitivity == ModeSensitivity::per_mode) {
            skipped.mode = mode;
          }
          table.rows.push_back(std::move(skipped));
        }
      }
    }
    std::ranges::stable_sort(table.rows, [](auto const& x, auto const& y) {
      if (x.law != y.law) {
        return x.law < y.law;
      }
      return mode_label(x.mode) < mode_label(y.mode);
    });
    return table;
  }

  struct SearchResult {
    Universe  universe;
    LawReport report;
  };

  /// Walks the universes of all partitions of 1..max_atoms atoms in
  /// restricted-growth order and returns the first one on which `law`
  /// fails, with its minimized counterexample.
  inline std::optional<SearchResult> search_counterexample(LawSpec const& law,
                                                           OpMode         mode,
                                                           std::size_t max_atoms) {
    if (max_atoms > kMaxPartitionAtoms) {
      throw Error("search is limited to "
                  + std::to_string(kMaxPartitionAtoms) + " atoms");
    }
    auto const strategy = CheckStrategy::exhaustive(std::uint64_t{1} << 20);
    for (std::size_t n = 1; n <= max_atoms; ++n) {
      for (auto const& partition : enumerate_partitions(n)) {
        auto u      = partition_universe(partition);
        auto report = check_law(u, law, mode, strategy);
        if (report.status == LawStatus::fails) {
          return SearchResult{std::move(u), std::move(report)};
        }
      }
    }
    return std::nullopt;
  }

}  // namespace ilattice
