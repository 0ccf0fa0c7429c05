#pragma once

/// @file
/// Semantics of the propositional logic over the lattice of
/// indiscernibility: valuations, truth, validity, semantic consequence, the
/// conditions a conditional should meet, and a finite consequence operator
/// over a depth-bounded formula universe.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "ilattice/error.hpp"
#include "ilattice/formula.hpp"
#include "ilattice/lattice.hpp"
#include "ilattice/universe.hpp"
#include "ilattice/verifier.hpp"

namespace ilattice {

  /// Assignment of a qset of one universe to each propositional atom.
  class Valuation {
   public:
    explicit Valuation(Universe universe) : _universe(std::move(universe)) {}

    Valuation(Universe universe, std::map<std::string, QSet> assignment)
        : _universe(std::move(universe)) {
      for (auto& [name, value] : assignment) {
        assign(name, std::move(value));
      }
    }

    Universe const& universe() const noexcept {
      return _universe;
    }

    std::map<std::string, QSet> const& assignment() const noexcept {
      return _assignment;
    }

    void assign(std::string const& atom, QSet value) {
      if (!value.universe().same_as(_universe)) {
        throw ValuationError("atom '" + atom
                             + "' is assigned a qset of another universe");
      }
      _assignment.insert_or_assign(atom, std::move(value));
    }

    QSet const& at(std::string const& atom) const {
      auto it = _assignment.find(atom);
      if (it == _assignment.end()) {
        throw ValuationError("atom '" + atom + "' has no value");
      }
      return it->second;
    }

   private:
    Universe                    _universe;
    std::map<std::string, QSet> _assignment;
  };

  /// Which qsets valuations may assign to atoms. All subsets is the default;
  /// closed-only restricts atoms to unions of blocks.
  enum class ValuationDomain { all_subsets, closed_only };

  ////////////////////////////////////////////////////////////////////////
  // Evaluation
  ////////////////////////////////////////////////////////////////////////

  /// Value of α ↠ β from the values of α and β: β ⋎ (∼α ⋏ ∼β).
  inline QSet conditional_value(QSet const& a, QSet const& b, OpMode mode) {
    return join(b, meet(ortho(a), ortho(b), mode));
  }

  /// Value of the biconditional: (α ↠ β) ⋏ (β ↠ α).
  inline QSet biconditional_value(QSet const& a, QSet const& b, OpMode mode) {
    return meet(conditional_value(a, b, mode), conditional_value(b, a, mode), mode);
  }

  inline QSet eval(Formula const& f, Valuation const& v, OpMode mode) {
    switch (f.kind()) {
      case Formula::Kind::atom:
        return v.at(f.name());
      case Formula::Kind::neg:
        return ortho(eval(f.inner(), v, mode));
      case Formula::Kind::conj:
        return meet(eval(f.left(), v, mode), eval(f.right(), v, mode), mode);
      case Formula::Kind::disj:
        return join(eval(f.left(), v, mode), eval(f.right(), v, mode));
      case Formula::Kind::cond:
        return conditional_value(
            eval(f.left(), v, mode), eval(f.right(), v, mode), mode);
      case Formula::Kind::bicond:
        return biconditional_value(
            eval(f.left(), v, mode), eval(f.right(), v, mode), mode);
    }
    throw Error("unknown formula kind");
  }

  /// True means the value is the whole universe.
  inline bool is_true(Formula const& f, Valuation const& v, OpMode mode) {
    return eval(f, v, mode) == one(v.universe());
  }

  inline bool is_definable_by(QSet const&      a,
                              Formula const&   f,
                              Valuation const& v,
                              OpMode           mode) {
    return eval(f, v, mode) == a;
  }

  ////////////////////////////////////////////////////////////////////////
  // Valuation sweeps
  ////////////////////////////////////////////////////////////////////////

  /// The valuations of a list of atoms visited by a strategy.
  ///
  /// Exhaustive order counts in base |domain| with the first atom most
  /// significant; sampled valuations come from a stream keyed by the seed,
  /// the universe digest and the atom names.
  class ValuationSpace {
   public:
    ValuationSpace(Universe                 u,
                   std::vector<std::string> atoms,
                   CheckStrategy const&     strategy,
                   ValuationDomain          domain = ValuationDomain::all_subsets)
        : _universe(std::move(u)),
          _atoms(std::move(atoms)),
          _domain{_universe,
                  domain == ValuationDomain::all_subsets
                      ? Restriction::unrestricted
                      : Restriction::closed_only} {
      std::size_t const bits = _domain.bits() * _atoms.size();
      if (strategy.kind == StrategyKind::exhaustive) {
        if (_universe.size() > kExhaustiveAtomLimit || bits >= 64
            || (std::uint64_t{1} << bits) > strategy.case_budget) {
          throw BudgetExceeded("exhaustive sweep over "
                               + std::to_string(_atoms.size())
                               + " atoms on " + _universe.digest()
                               + " needs 2^" + std::to_string(bits)
                               + " valuations, budget is "
                               + std::to_string(strategy.case_budget));
        }
        _count = std::uint64_t{1} << bits;
      } else {
        std::string joined;
        for (auto const& a : _atoms) {
          joined += a;
          joined += ',';
        }
        detail::KeyedStream stream(strategy.seed,
                                   {_universe.digest(), "valuations", joined});
        _samples.reserve(strategy.sample_count);
        for (std::uint64_t s = 0; s < strategy.sample_count; ++s) {
          auto& masks = _samples.emplace_back(_atoms.size());
          for (auto& m : masks) {
            m = _domain.member(stream.bits(_domain.bits()));
          }
        }
        _count = strategy.sample_count;
      }
    }

    std::uint64_t size() const noexcept {
      return _count;
    }

    std::vector<std::string> const& atoms() const noexcept {
      return _atoms;
    }

    Universe const& universe() const noexcept {
      return _universe;
    }

    std::vector<Mask> masks(std::uint64_t k) const {
      if (!_samples.empty()) {
        return _samples.at(k);
      }
      return detail::decode_tuple(_domain, _atoms.size(), k);
    }

    Valuation valuation(std::uint64_t k) const {
      auto const m = masks(k);
      Valuation  v(_universe);
      for (std::size_t i = 0; i < _atoms.size(); ++i) {
        v.assign(_atoms[i], _universe.from_mask(m[i]));
      }
      return v;
    }

   private:
    Universe                       _universe;
    std::vector<std::string>       _atoms;
    detail::VariableDomain         _domain;
    std::uint64_t                  _count = 0;
    std::vector<std::vector<Mask>> _samples;
  };

  struct ValidityReport {
    bool                     verdict = true;
    std::uint64_t            valuations_checked = 0;
    std::optional<Valuation> witness;  // a valuation falsifying the formula
  };

  /// True in every valuation of the formula's atoms visited by `strategy`.
  inline ValidityReport is_valid(Universe const&      u,
                                 Formula const&       f,
                                 CheckStrategy const& strategy,
                                 OpMode               mode,
                                 ValuationDomain domain = ValuationDomain::all_subsets) {
    auto const          names = f.atoms();
    ValuationSpace const space(u, {names.begin(), names.end()}, strategy, domain);
    ValidityReport       report;
    for (std::uint64_t k = 0; k < space.size(); ++k) {
      auto v = space.valuation(k);
      ++report.valuations_checked;
      if (!is_true(f, v, mode)) {
        report.verdict = false;
        report.witness = std::move(v);
        break;
      }
    }
    return report;
  }

  enum class ConsequenceRelation { semantic, cn_syntactic };

  inline char const* to_string(ConsequenceRelation r) {
    return r == ConsequenceRelation::semantic ? "semantic" : "cn-syntactic";
  }

  struct ConsequenceReport {
    std::vector<Formula>     gamma;
    Formula                  alpha = Formula::atom("a");
    ConsequenceRelation      relation = ConsequenceRelation::semantic;
    bool                     verdict = true;
    std::uint64_t            valuations_checked = 0;
    std::optional<Valuation> witness;  // a model of gamma falsifying alpha
  };

  /// Γ ⊨ α: every valuation making all of Γ true makes α true.
  inline ConsequenceReport semantic_consequence(
      Universe const&             u,
      std::vector<Formula> const& gamma,
      Formula const&              alpha,
      CheckStrategy const&        strategy,
      OpMode                      mode,
      ValuationDomain             domain = ValuationDomain::all_subsets) {
    std::set<std::string> names = alpha.atoms();
    for (auto const& g : gamma) {
      names.merge(g.atoms());
    }
    ValuationSpace const space(u, {names.begin(), names.end()}, strategy, domain);
    ConsequenceReport    report{gamma, alpha, ConsequenceRelation::semantic};
    for (std::uint64_t k = 0; k < space.size(); ++k) {
      auto v = space.valuation(k);
      ++report.valuations_checked;
      bool const model = std::ranges::all_of(
          gamma, [&](auto const& g) { return is_true(g, v, mode); });
      if (model && !is_true(alpha, v, mode)) {
        report.verdict = false;
        report.witness = std::move(v);
        break;
      }
    }
    return report;
  }

  struct ConditionReport {
    std::string              name;
    bool                     holds = true;
    std::uint64_t            valuations_checked = 0;
    std::optional<Valuation> witness;
  };

  /// The three conditions for a conditional over atoms a and b:
  /// identity (a ↠ a valid), modus ponens (a and a ↠ b true ⇒ b true) and
  /// order (a ↠ b true ⇔ v(a) ≤ v(b)).
  inline std::vector<ConditionReport> check_implication_conditions(
      Universe const&      u,
      CheckStrategy const& strategy,
      OpMode               mode,
      ValuationDomain      domain = ValuationDomain::all_subsets) {
    auto const a  = Formula::atom("a");
    auto const b  = Formula::atom("b");
    auto const ab = Formula::cond(a, b);

    std::vector<ConditionReport> out;
    auto const identity = is_valid(u, Formula::cond(a, a), strategy, mode, domain);
    out.push_back({"identity", identity.verdict, identity.valuations_checked,
                   identity.witness});

    ValuationSpace const space(u, {"a", "b"}, strategy, domain);
    ConditionReport      mp{"modus-ponens"};
    ConditionReport      order{"order"};
    for (std::uint64_t k = 0; k < space.size(); ++k) {
      auto const v = space.valuation(k);
      bool const cond_true = is_true(ab, v, mode);
      if (mp.holds) {
        ++mp.valuations_checked;
        if (is_true(a, v, mode) && cond_true && !is_true(b, v, mode)) {
          mp.holds   = false;
          mp.witness = v;
        }
      }
      if (order.holds) {
        ++order.valuations_checked;
        if (cond_true != leq(v.at("a"), v.at("b"))) {
          order.holds   = false;
          order.witness = v;
        }
      }
    }
    out.push_back(std::move(mp));
    out.push_back(std::move(order));
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Finite formula universes
  ////////////////////////////////////////////////////////////////////////

  inline constexpr std::size_t kMaxFormulaDepth = 3;
  inline constexpr std::size_t kMaxFormulaAtoms = 2;
  inline constexpr std::size_t kFormulaBudget = std::size_t{1} << 20;

  /// Every formula over `atoms` of depth at most `depth`, without
  /// structural duplicates, closed under subformulas.
  ///
  /// Order: level by level; each level appends negations of the previous
  /// level, then ⋏, ⋎, ↠, ↔ over all ordered pairs of it.
  class FormulaUniverse {
   public:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    FormulaUniverse(std::vector<std::string> atoms, std::size_t depth)
        : _atoms(std::move(atoms)), _depth(depth) {
      if (depth > kMaxFormulaDepth || _atoms.size() > kMaxFormulaAtoms
          || _atoms.empty()) {
        throw BudgetExceeded("formula universe of depth " + std::to_string(depth)
                             + " over " + std::to_string(_atoms.size())
                             + " atoms is outside the budget (1.."
                             + std::to_string(kMaxFormulaAtoms)
                             + " atoms, depth at most "
                             + std::to_string(kMaxFormulaDepth) + ")");
      }
      for (auto const& a : _atoms) {
        add(Formula::atom(a), npos, npos);
      }
      for (std::size_t d = 1; d <= depth; ++d) {
        std::size_t const prev = _formulas.size();
        if (4 * prev * prev + prev + prev > kFormulaBudget) {
          throw BudgetExceeded("formula universe of depth "
                               + std::to_string(depth) + " over "
                               + std::to_string(_atoms.size())
                               + " atoms exceeds the formula budget of "
                               + std::to_string(kFormulaBudget));
        }
        for (std::size_t i = 0; i < prev; ++i) {
          add(Formula::neg(_formulas[i]), i, npos);
        }
        for (auto kind : {Formula::Kind::conj,
                          Formula::Kind::disj,
                          Formula::Kind::cond,
                          Formula::Kind::bicond}) {
          for (std::size_t i = 0; i < prev; ++i) {
            for (std::size_t j = 0; j < prev; ++j) {
              add(Formula::binary(kind, _formulas[i], _formulas[j]), i, j);
            }
          }
        }
      }
    }

    std::vector<std::string> const& atoms() const noexcept {
      return _atoms;
    }

    std::size_t depth() const noexcept {
      return _depth;
    }

    std::size_t size() const noexcept {
      return _formulas.size();
    }

    std::vector<Formula> const& formulas() const noexcept {
      return _formulas;
    }

    Formula const& operator[](std::size_t i) const {
      return _formulas.at(i);
    }

    /// Position of `f`, or npos.
    std::size_t find(Formula const& f) const {
      auto it = _index.find(f);
      return it == _index.end() ? npos : it->second;
    }

    /// Operand positions of formula i (npos where absent).
    std::pair<std::size_t, std::size_t> children(std::size_t i) const {
      return _children.at(i);
    }

   private:
    void add(Formula f, std::size_t l, std::size_t r) {
      if (_index.emplace(f, _formulas.size()).second) {
        _formulas.push_back(std::move(f));
        _children.emplace_back(l, r);
      }
    }

    std::vector<std::string>                         _atoms;
    std::size_t                                      _depth;
    std::vector<Formula>                             _formulas;
    std::vector<std::pair<std::size_t, std::size_t>> _children;
    std::map<Formula, std::size_t>                   _index;
  };

  inline FormulaUniverse generate_formulas(std::vector<std::string> atoms,
                                           std::size_t              depth) {
    return FormulaUniverse(std::move(atoms), depth);
  }

  ////////////////////////////////////////////////////////////////////////
  // Consequence operator
  ////////////////////////////////////////////////////////////////////////

  /// Set of positions in a FormulaUniverse.
  using FormulaSet = boost::dynamic_bitset<>;

  /// Semantic closure Cn(Γ) = {α ∈ F0 : Γ ⊨ α} restricted to a formula
  /// universe F0. Theories are the sets with Cn(Γ) = Γ.
  class ConsequenceOperator {
   public:
    ConsequenceOperator(Universe               u,
                        FormulaUniverse const& f0,
                        CheckStrategy const&   strategy,
                        OpMode                 mode,
                        ValuationDomain domain = ValuationDomain::all_subsets)
        : _f0(&f0),
          _space(std::move(u), f0.atoms(), strategy, domain),
          _mode(mode) {
      std::size_t const n = f0.size();
      std::size_t const k = _space.size();
      _values.assign(n * k, 0);
      auto const& uni = _space.universe();
      for (std::uint64_t v = 0; v < k; ++v) {
        auto const masks = _space.masks(v);
        for (std::size_t i = 0; i < n; ++i) {
          auto const [l, r] = f0.children(i);
          auto const& f     = f0[i];
          auto        at    = [&](std::size_t j) {
            return uni.from_mask(_values[j * k + v]);
          };
          QSet value = uni.empty();
          switch (f.kind()) {
            case Formula::Kind::atom: {
              auto const pos = std::ranges::find(f0.atoms(), f.name())
                               - f0.atoms().begin();
              value = uni.from_mask(masks[static_cast<std::size_t>(pos)]);
              break;
            }
            case Formula::Kind::neg:
              value = ortho(at(l));
              break;
            case Formula::Kind::conj:
              value = meet(at(l), at(r), mode);
              break;
            case Formula::Kind::disj:
              value = join(at(l), at(r));
              break;
            case Formula::Kind::cond:
              value = conditional_value(at(l), at(r), mode);
              break;
            case Formula::Kind::bicond:
              value = biconditional_value(at(l), at(r), mode);
              break;
          }
          _values[i * k + v] = value.mask();
        }
      }
      _truth.assign(n, boost::dynamic_bitset<>(k));
      Mask const full = uni.full_mask();
      for (std::size_t i = 0; i < n; ++i) {
        for (std::uint64_t v = 0; v < k; ++v) {
          _truth[i][v] = _values[i * k + v] == full;
        }
      }
    }

    FormulaUniverse const& formulas() const noexcept {
      return *_f0;
    }

    ValuationSpace const& valuations() const noexcept {
      return _space;
    }

    OpMode mode() const noexcept {
      return _mode;
    }

    std::size_t size() const noexcept {
      return _f0->size();
    }

    /// Value of formula i under valuation v.
    Mask value(std::size_t i, std::uint64_t v) const {
      return _values.at(i * _space.size() + v);
    }

    /// Valuations in which formula i is true.
    boost::dynamic_bitset<> const& truth(std::size_t i) const {
      return _truth.at(i);
    }

    /// Valuations in which every member of `gamma` is true.
    boost::dynamic_bitset<> models(FormulaSet const& gamma) const {
      boost::dynamic_bitset<> m(_space.size());
      m.set();
      for (auto i = gamma.find_first(); i != FormulaSet::npos;
           i      = gamma.find_next(i)) {
        m &= _truth[i];
      }
      return m;
    }

    FormulaSet closure(FormulaSet const& gamma) const {
      auto const m = models(gamma);
      FormulaSet out(size());
      for (std::size_t i = 0; i < size(); ++i) {
        out[i] = m.is_subset_of(_truth[i]);
      }
      return out;
    }

    bool entails(FormulaSet const& gamma, std::size_t alpha) const {
      return models(gamma).is_subset_of(_truth.at(alpha));
    }

    bool is_theory(FormulaSet const& gamma) const {
      return closure(gamma) == gamma;
    }

    /// Least theory containing α.
    FormulaSet least_theory(std::size_t alpha) const {
      return closure(singleton(alpha));
    }

    FormulaSet empty_set() const {
      return FormulaSet(size());
    }

    FormulaSet singleton(std::size_t i) const {
      FormulaSet s(size());
      s.set(i);
      return s;
    }

    /// Positions of `gamma` in F0; throws Error for formulas outside it.
    FormulaSet set_of(std::vector<Formula> const& gamma) const {
      FormulaSet s(size());
      for (auto const& g : gamma) {
        auto const i = _f0->find(g);
        if (i == FormulaUniverse::npos) {
          throw Error("formula '" + render(g)
                      + "' is outside the formula universe");
        }
        s.set(i);
      }
      return s;
    }

    std::vector<Formula> formulas_of(FormulaSet const& s) const {
      std::vector<Formula> out;
      for (auto i = s.find_first(); i != FormulaSet::npos; i = s.find_next(i)) {
        out.push_back((*_f0)[i]);
      }
      return out;
    }

   private:
    FormulaUniverse const*               _f0;
    ValuationSpace                       _space;
    OpMode                               _mode;
    std::vector<Mask>                    _values;
    std::vector<boost::dynamic_bitset<>> _truth;
  };

  /// Cn(Γ) within F0: the members of F0 semantically entailed by Γ.
  inline std::vector<Formula> cn(Universe const&             u,
                                 std::vector<Formula> const& gamma,
                                 FormulaUniverse const&      f0,
                                 CheckStrategy const&        strategy,
                                 OpMode                      mode,
                                 ValuationDomain domain = ValuationDomain::all_subsets) {
    ConsequenceOperator const op(u, f0, strategy, mode, domain);
    return op.formulas_of(op.closure(op.set_of(gamma)));
  }

  ////////////////////////////////////////////////////////////////////////
  // Consequence laws
  ////////////////////////////////////////////////////////////////////////

  struct PropertyReport {
    std::string   name;
    bool          holds = true;
    std::uint64_t cases_checked = 0;
    std::string   witness;  // rendered failing instance
  };

  namespace detail {
    inline std::string render_set(ConsequenceOperator const& op,
                                  FormulaSet const&          s) {
      std::string out = "{";
      bool        first = true;
      for (auto const& f : op.formulas_of(s)) {
        out += first ? "" : ", ";
        out += render(f);
        first = false;
      }
      return out + "}";
    }

    /// Premise sets the consequence laws quantify over: ∅, every singleton
    /// of F0, every pair of depth ≤ 1 formulas, and `extra` random sets of
    /// 2 to 4 formulas.
    inline std::vector<FormulaSet> premise_family(ConsequenceOperator const& op,
                                                  std::uint64_t              seed,
                                                  std::size_t                extra) {
      auto const&             f0 = op.formulas();
      std::vector<FormulaSet> family{op.empty_set()};
      std::vector<std::size_t> shallow;
      for (std::size_t i = 0; i < f0.size(); ++i) {
        family.push_back(op.singleton(i));
        if (f0[i].depth() <= 1) {
          shallow.push_back(i);
        }
      }
      for (std::size_t i = 0; i < shallow.size(); ++i) {
        for (std::size_t j = i + 1; j < shallow.size(); ++j) {
          auto s = op.singleton(shallow[i]);
          s.set(shallow[j]);
          family.push_back(std::move(s));
        }
      }
      KeyedStream stream(seed, {"premises"});
      for (std::size_t e = 0; e < extra; ++e) {
        auto       s     = op.empty_set();
        auto const count = 2 + stream.next() % 3;
        for (std::uint64_t c = 0; c < count; ++c) {
          s.set(stream.next() % f0.size());
        }
        family.push_back(std::move(s));
      }
      return family;
    }
  }  // namespace detail

  /// Checks the Tarski operator axioms and the standard properties of ⊢ for
  /// an induced consequence operator over a family of premise sets.
  ///
  /// One-set laws cover the whole premise family; pair laws cross a smaller
  /// family with itself.
  inline std::vector<PropertyReport> audit_consequence(
      ConsequenceOperator const& op,
      std::uint64_t              seed = 0,
      std::size_t                extra_sets = 48) {
    auto const family = detail::premise_family(op, seed, extra_sets);
    std::size_t const n = op.size();

    // pair laws run over ∅, the random sets and a strided sample of
    // singletons
    std::vector<FormulaSet> pair_family{family.front()};
    pair_family.insert(pair_family.end(),
                       family.end() - static_cast<std::ptrdiff_t>(extra_sets),
                       family.end());
    std::size_t const stride = std::max<std::size_t>(1, n / 64);
    for (std::size_t i = 0; i < n; i += stride) {
      pair_family.push_back(op.singleton(i));
    }

    std::vector<FormulaSet> closures;
    closures.reserve(family.size());
    for (auto const& g : family) {
      closures.push_back(op.closure(g));
    }
    std::vector<FormulaSet> pair_closures;
    for (auto const& g : pair_family) {
      pair_closures.push_back(op.closure(g));
    }

    auto fail = [&](PropertyReport& r, std::string w) {
      if (r.holds) {
        r.holds   = false;
        r.witness = std::move(w);
      }
    };

    PropertyReport extensive{"tarski-extensive"};
    PropertyReport idempotent{"tarski-idempotent"};
    PropertyReport membership{"membership"};
    for (std::size_t k = 0; k < family.size(); ++k) {
      ++extensive.cases_checked;
      ++idempotent.cases_checked;
      if (!family[k].is_subset_of(closures[k])) {
        fail(extensive, detail::render_set(op, family[k]));
      }
      if (!op.closure(closures[k]).is_subset_of(closures[k])) {
        fail(idempotent, detail::render_set(op, family[k]));
      }
      for (auto i = family[k].find_first(); i != FormulaSet::npos;
           i      = family[k].find_next(i)) {
        ++membership.cases_checked;
        if (!op.entails(family[k], i)) {
          fail(membership, detail::render_set(op, family[k]) + " ⊬ "
                               + render(op.formulas()[i]));
        }
      }
    }

    PropertyReport monotone{"tarski-monotone"};
    PropertyReport weakening{"premise-monotonicity"};
    PropertyReport cut{"cut"};
    PropertyReport intersection{"theory-intersection"};
    detail::KeyedStream stream(seed, {"cut"});
    for (std::size_t x = 0; x < pair_family.size(); ++x) {
      for (std::size_t y = 0; y < pair_family.size(); ++y) {
        auto const& g  = pair_family[x];
        auto const& d  = pair_family[y];
        auto const  gd = g | d;
        auto const  cgd = op.closure(gd);
        ++monotone.cases_checked;
        if (!pair_closures[x].is_subset_of(cgd)) {
          fail(monotone, detail::render_set(op, g) + " ⊆ "
                             + detail::render_set(op, gd));
        }
        ++weakening.cases_checked;
        auto const gd_models = op.models(gd);
        for (auto i = pair_closures[x].find_first(); i != FormulaSet::npos;
             i      = pair_closures[x].find_next(i)) {
          if (!gd_models.is_subset_of(op.truth(i))) {
            fail(weakening, detail::render_set(op, gd) + " ⊬ "
                                + render(op.formulas()[i]));
            break;
          }
        }
        // Γ ⊆ Cn(Δ) ⇒ Cn(Γ) ⊆ Cn(Δ), with Γ a random part of Cn(Δ) so the
        // hypothesis is met
        ++cut.cases_checked;
        auto gamma = pair_closures[y];
        for (auto i = gamma.find_first(); i != FormulaSet::npos;
             i      = gamma.find_next(i)) {
          if ((stream.next() & 7U) != 0) {
            gamma.reset(i);
          }
        }
        gamma |= g & pair_closures[y];
        if (!op.closure(gamma).is_subset_of(pair_closures[y])) {
          fail(cut, detail::render_set(op, gamma) + " from "
                        + detail::render_set(op, d));
        }
        ++intersection.cases_checked;
        auto const meet_theories = pair_closures[x] & pair_closures[y];
        if (!op.is_theory(meet_theories)) {
          fail(intersection, "Cn" + detail::render_set(op, g) + " ∩ Cn"
                                 + detail::render_set(op, d));
        }
      }
    }

    PropertyReport trivial{"trivial-theory"};
    ++trivial.cases_checked;
    FormulaSet everything(n);
    everything.set();
    if (!op.is_theory(everything)) {
      fail(trivial, "F0");
    }

    PropertyReport least{"least-theory"};
    for (std::size_t i = 0; i < n; i += stride) {
      auto const t = op.least_theory(i);
      for (auto const& c : pair_closures) {
        if (c.test(i)) {
          ++least.cases_checked;
          if (!t.is_subset_of(c)) {
            fail(least, render(op.formulas()[i]));
          }
        }
      }
    }

    PropertyReport identity{"empty-closure-identity"};
    auto const     base = op.closure(op.empty_set());
    for (auto const& a : op.formulas().atoms()) {
      ++identity.cases_checked;
      auto const self = Formula::cond(Formula::atom(a), Formula::atom(a));
      auto const i    = op.formulas().find(self);
      if (i == FormulaUniverse::npos || !base.test(i)) {
        fail(identity, render(self));
      }
    }

    return {extensive, monotone,  idempotent, membership, weakening,
            cut,       intersection, trivial, least,      identity};
  }

  ////////////////////////////////////////////////////////////////////////
  // Deduction theorem probe
  ////////////////////////////////////////////////////////////////////////

  struct DeductionWitness {
    std::vector<Formula> gamma;
    Formula              alpha;
    Formula              beta;
  };

  struct DeductionProbeReport {
    std::optional<DeductionWitness> witness;
    std::uint64_t                   triples_checked = 0;
    std::size_t                     value_classes = 0;
  };

  /// Looks for Γ ∪ {α} ⊨ β while Γ ⊭ α ↠ β, with α, β ∈ F0 and Γ either ∅
  /// or a singleton of F0.
  ///
  /// Formulas with identical values under every valuation are
  /// interchangeable, so the search runs over one representative per value
  /// class (its first member in F0 order) and reports the first witness in
  /// (Γ, α, β) order.
  inline DeductionProbeReport deduction_theorem_probe(ConsequenceOperator const& op) {
    std::size_t const   n = op.size();
    std::uint64_t const k = op.valuations().size();
    auto const&         uni = op.valuations().universe();
    Mask const          full = uni.full_mask();

    std::map<std::vector<Mask>, std::size_t> seen;
    std::vector<std::size_t>                 reps;
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<Mask> row(k);
      for (std::uint64_t v = 0; v < k; ++v) {
        row[v] = op.value(i, v);
      }
      if (seen.emplace(std::move(row), i).second) {
        reps.push_back(i);
      }
    }

    // premise candidates: ∅ first, then singletons; keep one per model set
    std::vector<boost::dynamic_bitset<>> premise_models;
    std::vector<std::optional<std::size_t>> premise_of;
    {
      std::set<boost::dynamic_bitset<>> distinct;
      auto all = op.models(op.empty_set());
      distinct.insert(all);
      premise_models.push_back(all);
      premise_of.push_back(std::nullopt);
      for (auto r : reps) {
        if (distinct.insert(op.truth(r)).second) {
          premise_models.push_back(op.truth(r));
          premise_of.push_back(r);
        }
      }
    }

    DeductionProbeReport report;
    report.value_classes = reps.size();
    using Key = std::tuple<std::size_t, std::size_t, std::size_t>;
    std::optional<Key> best;
    boost::dynamic_bitset<> cond_truth(k);
    boost::dynamic_bitset<> local(k);
    for (std::size_t a = 0; a < reps.size(); ++a) {
      for (std::size_t b = 0; b < reps.size(); ++b) {
        if (best && std::get<0>(*best) == 0
            && std::make_pair(a, b)
                   > std::make_pair(std::get<1>(*best), std::get<2>(*best))) {
          continue;
        }
        for (std::uint64_t v = 0; v < k; ++v) {
          Mask const ca = cloud_mask(uni, op.value(reps[a], v));
          Mask const cb = cloud_mask(uni, op.value(reps[b], v));
          // ∼α and ∼β are closed, so both meets agree on them
          cond_truth[v] = (cb | (~ca & ~cb & full)) == full;
        }
        // Γ ∪ {α} ⊨ β  ⇔  models(Γ) ⊆ ¬truth(α) ∪ truth(β)
        local = ~op.truth(reps[a]);
        local |= op.truth(reps[b]);
        for (std::size_t g = 0; g < premise_models.size(); ++g) {
          if (best && Key{g, a, b} > *best) {
            break;
          }
          ++report.triples_checked;
          if (premise_models[g].is_subset_of(local)
              && !premise_models[g].is_subset_of(cond_truth)) {
            best = Key{g, a, b};
            break;
          }
        }
      }
    }
    if (best) {
      auto const [g, a, b] = *best;
      DeductionWitness w{{}, op.formulas()[reps[a]], op.formulas()[reps[b]]};
      if (premise_of[g]) {
        w.gamma.push_back(op.formulas()[*premise_of[g]]);
      }
      report.witness = std::move(w);
    }
    return report;
  }

}  // namespace ilattice
