#pragma once

/// @file
/// Finite universes with an indistinguishability partition, qsets over them,
/// and the cloud/interior operators.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <ranges>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ilattice/error.hpp"

namespace ilattice {

  /// Membership bit vector; bit i is the i-th atom in normalized order.
  using Mask = std::uint64_t;

  /// Hard capacity of a universe (one machine word of membership bits).
  inline constexpr std::size_t kMaxAtoms = 64;

  /// Default bound on |U| for exhaustive subset enumeration.
  inline constexpr std::size_t kExhaustiveAtomLimit = 16;

  enum class AtomKind { m, M };

  inline char const* to_string(AtomKind kind) {
    return kind == AtomKind::m ? "m" : "M";
  }

  struct Atom {
    std::string id;
    AtomKind    kind = AtomKind::m;

    friend bool operator==(Atom const&, Atom const&) = default;
  };

  class QSet;

  namespace detail {
    struct UniverseRep {
      std::vector<Atom>                            atoms;
      std::vector<std::vector<std::size_t>>        blocks;
      std::vector<Mask>                            block_masks;
      std::vector<std::size_t>                     block_of;
      std::map<std::string, std::size_t, std::less<>> index;
      Mask                                         full = 0;
      std::string                                  digest;
    };

    template <typename F>
    void for_each_bit(Mask mask, F&& f) {
      while (mask != 0) {
        f(static_cast<std::size_t>(std::countr_zero(mask)));
        mask &= mask - 1;
      }
    }
  }  // namespace detail

  /// A finite carrier of atoms together with its partition into blocks of
  /// mutually indistinguishable atoms.
  ///
  /// Universe is a cheap handle: copies share the same immutable
  /// representation. Atom order is declaration order; blocks and the atoms
  /// inside each block are sorted by first occurrence in that order.
  class Universe {
   public:
    /// Validates and normalizes a universe.
    ///
    /// Throws UniverseError on an empty carrier, an empty or duplicate id,
    /// more than kMaxAtoms atoms, an unknown id in a block, an empty block,
    /// an atom listed twice or never, or an M-atom sharing its block.
    static Universe build(std::vector<Atom>                     atoms,
                          std::vector<std::vector<std::string>> blocks);

    std::size_t size() const noexcept {
      return _rep->atoms.size();
    }

    std::vector<Atom> const& atoms() const noexcept {
      return _rep->atoms;
    }

    /// Blocks as lists of atom indices, normalized.
    std::vector<std::vector<std::size_t>> const& blocks() const noexcept {
      return _rep->blocks;
    }

    std::size_t block_count() const noexcept {
      return _rep->blocks.size();
    }

    Mask block_mask(std::size_t block) const {
      return _rep->block_masks.at(block);
    }

    std::size_t block_of(std::size_t atom) const {
      return _rep->block_of.at(atom);
    }

    Mask full_mask() const noexcept {
      return _rep->full;
    }

    /// Index of an atom id; throws UniverseError if unknown.
    std::size_t index_of(std::string_view id) const {
      auto it = _rep->index.find(id);
      if (it == _rep->index.end()) {
        throw UniverseError("unknown atom id '" + std::string(id) + "'");
      }
      return it->second;
    }

    bool contains_id(std::string_view id) const {
      return _rep->index.find(id) != _rep->index.end();
    }

    /// Canonical text of the blocks, e.g. "[[x1,x2],[y]]".
    std::string const& digest() const noexcept {
      return _rep->digest;
    }

    /// True iff the two atoms share a block.
    bool indistinguishable(std::string_view x, std::string_view y) const {
      return block_of(index_of(x)) == block_of(index_of(y));
    }

    bool same_as(Universe const& other) const noexcept {
      return _rep == other._rep
             || (_rep->atoms == other._rep->atoms
                 && _rep->blocks == other._rep->blocks);
    }

    friend bool operator==(Universe const& a, Universe const& b) noexcept {
      return a.same_as(b);
    }

    QSet empty() const;
    QSet full() const;
    QSet from_mask(Mask members) const;
    QSet qset(std::vector<std::string> const& ids) const;
    QSet qset(std::initializer_list<std::string_view> ids) const;

   private:
    explicit Universe(std::shared_ptr<detail::UniverseRep const> rep)
        : _rep(std::move(rep)) {}

    std::shared_ptr<detail::UniverseRep const> _rep;
  };

  /// A subset of a universe's carrier.
  ///
  /// Two qsets are equal iff they belong to the same universe and have the
  /// same members.
  class QSet {
   public:
    QSet(Universe universe, Mask members)
        : _universe(std::move(universe)), _members(members) {
      if ((_members & ~_universe.full_mask()) != 0) {
        throw UniverseError("qset references atoms outside its universe");
      }
    }

    Universe const& universe() const noexcept {
      return _universe;
    }

    Mask mask() const noexcept {
      return _members;
    }

    bool empty() const noexcept {
      return _members == 0;
    }

    std::size_t size() const noexcept {
      return static_cast<std::size_t>(std::popcount(_members));
    }

    bool contains(std::size_t atom) const noexcept {
      return atom < kMaxAtoms && ((_members >> atom) & 1U) != 0;
    }

    bool contains(std::string_view id) const {
      return contains(_universe.index_of(id));
    }

    /// Member ids in normalized atom order.
    std::vector<std::string> ids() const {
      std::vector<std::string> out;
      detail::for_each_bit(_members, [&](std::size_t i) {
        out.push_back(_universe.atoms()[i].id);
      });
      return out;
    }

    /// Same universe, different members (no validation beyond range).
    QSet with_mask(Mask members) const {
      return QSet(_universe, members);
    }

    friend bool operator==(QSet const& a, QSet const& b) {
      a.require_same(b);
      return a._members == b._members;
    }

    friend QSet operator|(QSet const& a, QSet const& b) {
      a.require_same(b);
      return a.unchecked(a._members | b._members);
    }

    friend QSet operator&(QSet const& a, QSet const& b) {
      a.require_same(b);
      return a.unchecked(a._members & b._members);
    }

    friend QSet operator-(QSet const& a, QSet const& b) {
      a.require_same(b);
      return a.unchecked(a._members & ~b._members);
    }

    /// Complement relative to the universe.
    QSet operator~() const {
      return unchecked(_universe.full_mask() & ~_members);
    }

    void require_same(QSet const& other) const {
      if (!_universe.same_as(other._universe)) {
        throw UniverseMismatch();
      }
    }

   private:
    struct Unchecked {};
    QSet(Universe universe, Mask members, Unchecked)
        : _universe(std::move(universe)), _members(members) {}

    QSet unchecked(Mask members) const {
      return QSet(_universe, members, Unchecked{});
    }

    Universe _universe;
    Mask     _members;
  };

  ////////////////////////////////////////////////////////////////////////
  // Set algebra
  ////////////////////////////////////////////////////////////////////////

  inline QSet unite(QSet const& a, QSet const& b) {
    return a | b;
  }

  inline QSet intersect(QSet const& a, QSet const& b) {
    return a & b;
  }

  inline QSet difference(QSet const& a, QSet const& b) {
    return a - b;
  }

  inline QSet complement(QSet const& a) {
    return ~a;
  }

  inline bool is_subset(QSet const& a, QSet const& b) {
    a.require_same(b);
    return (a.mask() & ~b.mask()) == 0;
  }

  ////////////////////////////////////////////////////////////////////////
  // Cloud and interior
  ////////////////////////////////////////////////////////////////////////

  /// Union of the blocks meeting `members`.
  inline Mask cloud_mask(Universe const& u, Mask members) {
    Mask out = 0;
    detail::for_each_bit(members, [&](std::size_t i) {
      out |= u.block_mask(u.block_of(i));
    });
    return out;
  }

  /// Every atom of U indistinguishable from some member of `a`.
  inline QSet cloud(QSet const& a) {
    return a.with_mask(cloud_mask(a.universe(), a.mask()));
  }

  /// Complement of the cloud of the complement: the union of the blocks
  /// lying entirely inside `a`.
  inline QSet interior(QSet const& a) {
    return ~cloud(~a);
  }

  /// Closed means equal to its own cloud, i.e. a union of blocks.
  inline bool is_closed(QSet const& a) {
    return cloud_mask(a.universe(), a.mask()) == a.mask();
  }

  ////////////////////////////////////////////////////////////////////////
  // Enumeration
  ////////////////////////////////////////////////////////////////////////

  /// All 2^|U| subsets, binary counting over atom order (bit i = atom i).
  ///
  /// Throws BudgetExceeded when |U| exceeds `limit`; callers should switch
  /// to a sampling strategy in that case.
  inline auto enumerate_subsets(Universe const& u,
                                std::size_t     limit = kExhaustiveAtomLimit) {
    if (u.size() > limit || u.size() >= kMaxAtoms) {
      throw BudgetExceeded("universe has " + std::to_string(u.size())
                           + " atoms, exhaustive limit is "
                           + std::to_string(limit)
                           + "; use a sampling strategy");
    }
    Mask const count = Mask{1} << u.size();
    return std::views::iota(Mask{0}, count)
           | std::views::transform([u](Mask m) { return u.from_mask(m); });
  }

  /// Union of the blocks selected by the bits of `selector`.
  inline Mask blocks_union(Universe const& u, Mask selector) {
    Mask out = 0;
    detail::for_each_bit(selector,
                         [&](std::size_t b) { out |= u.block_mask(b); });
    return out;
  }

  /// Every closed qset: 2^(#blocks) unions of blocks, bit i of the position
  /// selecting block i.
  inline std::vector<QSet> closed_qsets(Universe const& u,
                                        std::size_t limit
                                        = kExhaustiveAtomLimit) {
    if (u.block_count() > limit) {
      throw BudgetExceeded("universe has " + std::to_string(u.block_count())
                           + " blocks, exhaustive limit is "
                           + std::to_string(limit));
    }
    std::vector<QSet> out;
    Mask const        count = Mask{1} << u.block_count();
    out.reserve(count);
    for (Mask s = 0; s < count; ++s) {
      out.push_back(u.from_mask(blocks_union(u, s)));
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Universe implementation
  ////////////////////////////////////////////////////////////////////////

  inline Universe Universe::build(std::vector<Atom>                     atoms,
                                  std::vector<std::vector<std::string>> blocks) {
    if (atoms.empty()) {
      throw UniverseError("a universe needs at least one atom");
    }
    if (atoms.size() > kMaxAtoms) {
      throw UniverseError("a universe holds at most "
                          + std::to_string(kMaxAtoms) + " atoms, got "
                          + std::to_string(atoms.size()));
    }
    auto rep = std::make_shared<detail::UniverseRep>();
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      if (atoms[i].id.empty()) {
        throw UniverseError("atom " + std::to_string(i) + " has an empty id");
      }
      if (!rep->index.emplace(atoms[i].id, i).second) {
        throw UniverseError("duplicate atom id '" + atoms[i].id + "'");
      }
    }

    std::size_t const        none = atoms.size();
    std::vector<std::size_t> owner(atoms.size(), none);
    std::vector<std::vector<std::size_t>> normalized;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      if (blocks[b].empty()) {
        throw UniverseError("block " + std::to_string(b) + " is empty");
      }
      std::vector<std::size_t> members;
      for (auto const& id : blocks[b]) {
        auto it = rep->index.find(id);
        if (it == rep->index.end()) {
          throw UniverseError("block " + std::to_string(b)
                              + " names unknown atom '" + id + "'");
        }
        if (owner[it->second] != none) {
          throw UniverseError("atom '" + id + "' appears in two blocks");
        }
        owner[it->second] = b;
        members.push_back(it->second);
      }
      std::ranges::sort(members);
      if (members.size() > 1) {
        for (auto i : members) {
          if (atoms[i].kind == AtomKind::M) {
            throw UniverseError("M-atom '" + atoms[i].id
                                + "' must be in a singleton block");
          }
        }
      }
      normalized.push_back(std::move(members));
    }
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      if (owner[i] == none) {
        throw UniverseError("atom '" + atoms[i].id + "' is in no block");
      }
    }
    std::ranges::sort(normalized,
                      [](auto const& x, auto const& y) { return x[0] < y[0]; });

    rep->block_of.resize(atoms.size());
    for (std::size_t b = 0; b < normalized.size(); ++b) {
      Mask m = 0;
      for (auto i : normalized[b]) {
        m |= Mask{1} << i;
        rep->block_of[i] = b;
      }
      rep->block_masks.push_back(m);
      rep->full |= m;
    }

    std::string digest = "[";
    for (std::size_t b = 0; b < normalized.size(); ++b) {
      digest += b == 0 ? "[" : ",[";
      for (std::size_t k = 0; k < normalized[b].size(); ++k) {
        if (k != 0) {
          digest += ',';
        }
        digest += atoms[normalized[b][k]].id;
      }
      digest += ']';
    }
    digest += ']';

    rep->atoms  = std::move(atoms);
    rep->blocks = std::move(normalized);
    rep->digest = std::move(digest);
    return Universe(std::move(rep));
  }

  inline QSet Universe::empty() const {
    return QSet(*this, 0);
  }

  inline QSet Universe::full() const {
    return QSet(*this, full_mask());
  }

  inline QSet Universe::from_mask(Mask members) const {
    return QSet(*this, members);
  }

  inline QSet Universe::qset(std::vector<std::string> const& ids) const {
    Mask m = 0;
    for (auto const& id : ids) {
      m |= Mask{1} << index_of(id);
    }
    return QSet(*this, m);
  }

  inline QSet Universe::qset(std::initializer_list<std::string_view> ids) const {
    Mask m = 0;
    for (auto id : ids) {
      m |= Mask{1} << index_of(id);
    }
    return QSet(*this, m);
  }

}  // namespace ilattice
