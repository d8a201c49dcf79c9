#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "andgraph/characterization.hpp"
#include "andgraph/graph.hpp"
#include "andgraph/ordering.hpp"
#include "andgraph/rational.hpp"
#include "andgraph/realization.hpp"

namespace andgraph {

enum class Relation { LessEqual, Less };

/// sum_j coeffs[j] * x_j  (<= or <)  bound
struct LinearConstraint {
  std::vector<Rational> coeffs;
  Relation relation = Relation::LessEqual;
  Rational bound;

  bool satisfied_by(std::span<const Rational> x) const;
};

class LinearConstraintSystem {
 public:
  LinearConstraintSystem() = default;
  explicit LinearConstraintSystem(std::vector<std::string> variables);

  /// Returns the index of the new variable. Existing constraints get a zero
  /// coefficient for it.
  int add_variable(std::string name);

  int arity() const { return static_cast<int>(variables_.size()); }
  const std::vector<std::string>& variables() const { return variables_; }
  const std::vector<LinearConstraint>& constraints() const { return constraints_; }

  /// Throws PreconditionError when the coefficient count differs from arity().
  void add(LinearConstraint c);
  /// Sparse form: (variable index, coefficient) terms.
  void add(std::span<const std::pair<int, Rational>> terms, Relation rel, Rational bound);

  bool satisfied_by(std::span<const Rational> x) const;

 private:
  std::vector<std::string> variables_;
  std::vector<LinearConstraint> constraints_;
};

struct Feasible {
  std::vector<Rational> witness;
};
struct Infeasible {};

using FeasibilityResult = std::variant<Feasible, Infeasible>;

/// Fourier-Motzkin elimination. A combined constraint is strict iff one of its
/// parents is. The witness is built by back-substitution: each variable takes
/// the midpoint of its residual interval, bound +/- 1 when one side is open,
/// or 0 when unconstrained. An empty system is feasible at the zero point.
FeasibilityResult eliminate_feasible(const LinearConstraintSystem& s);

inline bool is_feasible(const FeasibilityResult& r) { return std::holds_alternative<Feasible>(r); }

/// Central realization whose point order is exactly `o`, or nullopt.
/// Each non-edge needs one of the two radii to fall short of the distance;
/// the choices are enumerated with pruning.
std::optional<Realization> cand1_for_ordering(const Graph& g, const Ordering& o);

struct CandLimits {
  std::uint64_t node_budget = 100'000'000;  // ordering-search node expansions
  std::uint64_t case_budget = 10'000'000;   // feasibility systems solved
  int max_complete_n = 7;  // larger components never report NotMember
};

struct FoundRealization {
  Realization realization;
};

struct Cand1Result {
  std::variant<FoundRealization, NotMember, Exhausted> verdict;
  std::uint64_t orderings = 0;  // four-point orderings examined
  std::uint64_t cases = 0;      // feasibility systems solved

  bool found() const { return std::holds_alternative<FoundRealization>(verdict); }
  bool not_member() const { return std::holds_alternative<NotMember>(verdict); }
  bool exhausted() const { return std::holds_alternative<Exhausted>(verdict); }
  const Realization& realization() const { return std::get<FoundRealization>(verdict).realization; }
};

/// Enumerates four-point orderings of each component (up to reversal) and
/// tries cand1_for_ordering on each. Components are laid out left to right.
/// A Found realization is checked to be central and to induce g.
Cand1Result cand1_recognize(const Graph& g, const CandLimits& limits = {});

}  // namespace andgraph
