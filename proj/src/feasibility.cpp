#include "andgraph/feasibility.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "andgraph/errors.hpp"

namespace andgraph {

bool LinearConstraint::satisfied_by(std::span<const Rational> x) const {
  Rational lhs = 0;
  for (std::size_t j = 0; j < coeffs.size(); ++j) lhs += coeffs[j] * x[j];
  return relation == Relation::Less ? lhs < bound : lhs <= bound;
}

LinearConstraintSystem::LinearConstraintSystem(std::vector<std::string> variables)
    : variables_(std::move(variables)) {}

int LinearConstraintSystem::add_variable(std::string name) {
  variables_.push_back(std::move(name));
  for (auto& c : constraints_) c.coeffs.emplace_back(0);
  return arity() - 1;
}

void LinearConstraintSystem::add(LinearConstraint c) {
  if (static_cast<int>(c.coeffs.size()) != arity()) {
    throw PreconditionError("constraint has " + std::to_string(c.coeffs.size()) +
                            " coefficients for " + std::to_string(arity()) + " variables");
  }
  constraints_.push_back(std::move(c));
}

void LinearConstraintSystem::add(std::span<const std::pair<int, Rational>> terms, Relation rel,
                                 Rational bound) {
  LinearConstraint c{std::vector<Rational>(static_cast<std::size_t>(arity()), Rational(0)), rel,
                     std::move(bound)};
  for (const auto& [j, a] : terms) {
    if (j < 0 || j >= arity()) throw PreconditionError("variable index out of range");
    c.coeffs[j] += a;
  }
  constraints_.push_back(std::move(c));
}

bool LinearConstraintSystem::satisfied_by(std::span<const Rational> x) const {
  if (static_cast<int>(x.size()) != arity()) return false;
  return std::all_of(constraints_.begin(), constraints_.end(),
                     [&](const LinearConstraint& c) { return c.satisfied_by(x); });
}

namespace {

struct Bound {
  Rational value;
  bool strict = false;
};

// Rows keyed by their coefficient vector, scaled so the first nonzero
// coefficient is +-1. Only the tightest bound per key is kept.
class RowSet {
 public:
  // Returns false if the row is a violated constant constraint.
  bool insert(std::vector<Rational> a, Rational b, bool strict) {
    std::size_t lead = 0;
    while (lead < a.size() && a[lead] == 0) ++lead;
    if (lead == a.size()) return strict ? b > 0 : b >= 0;
    const Rational scale = abs_value(a[lead]);
    if (scale != 1) {
      for (std::size_t j = lead; j < a.size(); ++j) a[j] /= scale;
      b /= scale;
    }
    auto [it, inserted] = rows_.try_emplace(std::move(a), Bound{b, strict});
    if (!inserted) {
      Bound& cur = it->second;
      if (b < cur.value || (b == cur.value && strict)) cur = Bound{std::move(b), strict};
    }
    return true;
  }

  const std::map<std::vector<Rational>, Bound>& rows() const { return rows_; }

 private:
  std::map<std::vector<Rational>, Bound> rows_;
};

struct Stage {
  int variable = 0;
  std::vector<std::pair<std::vector<Rational>, Bound>> rows;  // rows mentioning the variable
};

}  // namespace

FeasibilityResult eliminate_feasible(const LinearConstraintSystem& s) {
  const int n = s.arity();
  RowSet current;
  for (const auto& c : s.constraints()) {
    if (!current.insert(c.coeffs, c.bound, c.relation == Relation::Less)) return Infeasible{};
  }

  std::vector<bool> done(static_cast<std::size_t>(n), false);
  std::vector<Stage> stages;
  for (int step = 0; step < n; ++step) {
    // Pick the variable whose elimination creates the fewest new rows.
    int best = -1;
    long best_cost = 0;
    for (int k = 0; k < n; ++k) {
      if (done[k]) continue;
      long pos = 0;
      long neg = 0;
      for (const auto& [a, bnd] : current.rows()) {
        if (a[k] > 0) ++pos;
        else if (a[k] < 0) ++neg;
      }
      const long cost = pos * neg - pos - neg;
      if (best < 0 || cost < best_cost) {
        best = k;
        best_cost = cost;
      }
    }
    done[best] = true;

    Stage stage{best, {}};
    std::vector<const std::pair<const std::vector<Rational>, Bound>*> pos;
    std::vector<const std::pair<const std::vector<Rational>, Bound>*> neg;
    RowSet next;
    for (const auto& row : current.rows()) {
      const Rational& ak = row.first[best];
      if (ak == 0) {
        next.insert(row.first, row.second.value, row.second.strict);
        continue;
      }
      stage.rows.emplace_back(row.first, row.second);
      (ak > 0 ? pos : neg).push_back(&row);
    }
    for (const auto* p : pos) {
      for (const auto* q : neg) {
        const Rational cp = -q->first[best];  // > 0
        const Rational cq = p->first[best];   // > 0
        std::vector<Rational> a(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j) a[j] = cp * p->first[j] + cq * q->first[j];
        a[best] = 0;
        Rational b = cp * p->second.value + cq * q->second.value;
        if (!next.insert(std::move(a), std::move(b), p->second.strict || q->second.strict)) {
          return Infeasible{};
        }
      }
    }
    stages.push_back(std::move(stage));
    current = std::move(next);
  }

  std::vector<Rational> x(static_cast<std::size_t>(n), Rational(0));
  for (auto it = stages.rbegin(); it != stages.rend(); ++it) {
    const int k = it->variable;
    std::optional<Bound> lo;
    std::optional<Bound> hi;
    for (const auto& [a, bnd] : it->rows) {
      Rational rest = bnd.value;
      for (int j = 0; j < n; ++j) {
        if (j != k && a[j] != 0) rest -= a[j] * x[j];
      }
      Rational v = rest / a[k];
      if (a[k] > 0) {
        if (!hi || v < hi->value || (v == hi->value && bnd.strict)) hi = Bound{v, bnd.strict};
      } else {
        if (!lo || v > lo->value || (v == lo->value && bnd.strict)) lo = Bound{v, bnd.strict};
      }
    }
    if (lo && hi) {
      x[k] = lo->value == hi->value ? lo->value : midpoint(lo->value, hi->value);
    } else if (lo) {
      x[k] = lo->value + 1;
    } else if (hi) {
      x[k] = hi->value - 1;
    }
  }
  if (!s.satisfied_by(x)) throw std::logic_error("elimination produced an invalid witness");
  return Feasible{std::move(x)};
}

namespace {

// Unknowns: the points at ranks 2..n (the rank-1 point is pinned at 0) and
// one radius per vertex.
class CentralSystemBuilder {
 public:
  CentralSystemBuilder(const Graph& g, const Ordering& o) : g_(g), o_(o), n_(g.order()) {}

  int point_var(int rank) const { return rank - 2; }
  int radius_var(VertexId v) const { return n_ - 1 + (v - 1); }

  LinearConstraintSystem base() const {
    std::vector<std::string> names;
    for (int k = 2; k <= n_; ++k) names.push_back("p@" + std::to_string(k));
    for (VertexId v = 1; v <= n_; ++v) names.push_back("r" + std::to_string(v));
    LinearConstraintSystem s(std::move(names));
    using Terms = std::vector<std::pair<int, Rational>>;
    for (int k = 1; k < n_; ++k) {
      Terms t = distance(k, k + 1);
      for (auto& [j, a] : t) a = -a;
      s.add(t, Relation::Less, 0);
    }
    for (VertexId v = 1; v <= n_; ++v) {
      Terms t{{radius_var(v), Rational(-1)}};
      s.add(t, Relation::Less, 0);
    }
    for (const Edge& e : g_.edges()) {
      int i = o_.rank(e.u);
      int j = o_.rank(e.v);
      if (i > j) std::swap(i, j);
      for (VertexId w : {e.u, e.v}) {
        Terms t = distance(i, j);
        t.emplace_back(radius_var(w), Rational(-1));
        s.add(t, Relation::LessEqual, 0);
      }
    }
    return s;
  }

  // r_w < p_j - p_i where w sits at rank i or j.
  void add_short_radius(LinearConstraintSystem& s, int i, int j, VertexId w) const {
    std::vector<std::pair<int, Rational>> t = distance(i, j);
    for (auto& [k, a] : t) a = -a;
    t.emplace_back(radius_var(w), Rational(1));
    s.add(t, Relation::Less, 0);
  }

  Realization realize(const std::vector<Rational>& x) const {
    std::vector<Placement> placements;
    for (VertexId v = 1; v <= n_; ++v) {
      const int k = o_.rank(v);
      const Rational p = k == 1 ? Rational(0) : x[point_var(k)];
      placements.push_back(Placement::centered(p, x[radius_var(v)]));
    }
    return Realization(1, std::move(placements));
  }

 private:
  // Terms of p_j - p_i for ranks i < j.
  std::vector<std::pair<int, Rational>> distance(int i, int j) const {
    std::vector<std::pair<int, Rational>> t;
    t.emplace_back(point_var(j), Rational(1));
    if (i > 1) t.emplace_back(point_var(i), Rational(-1));
    return t;
  }

  const Graph& g_;
  const Ordering& o_;
  int n_;
};

// A non-edge between ranks i < j is settled by r_left < d or r_right < d.
// right_cut[i] is the smallest rank beyond i already known to lie outside the
// box of the vertex at rank i; left_cut[j] symmetric. A pair is implied when
// one of the cuts already reaches it.
class CaseSearch {
 public:
  CaseSearch(const Graph& g, const Ordering& o, std::uint64_t case_budget)
      : g_(g),
        o_(o),
        n_(g.order()),
        builder_(g, o),
        budget_(case_budget),
        right_cut_(static_cast<std::size_t>(n_) + 2, n_ + 1),
        left_cut_(static_cast<std::size_t>(n_) + 2, 0) {}

  std::optional<Realization> run() {
    const NeighborhoodSpan span = neighborhood_span(g_, o_);
    LinearConstraintSystem s = builder_.base();
    std::vector<std::pair<int, int>> open;
    for (int i = 1; i <= n_; ++i) {
      for (int j = i + 1; j <= n_; ++j) {
        const VertexId u = o_.at_rank(i);
        const VertexId v = o_.at_rank(j);
        if (g_.adjacent(u, v)) continue;
        const bool u_reaches = span.right[u - 1] > j;  // r_u >= a distance beyond v
        const bool v_reaches = span.left[v - 1] < i;
        if (u_reaches && v_reaches) return std::nullopt;  // four point violation
        if (u_reaches) {
          cut(s, i, j, true);
        } else if (v_reaches) {
          cut(s, i, j, false);
        } else {
          open.emplace_back(i, j);
        }
      }
    }
    std::stable_sort(open.begin(), open.end(), [](const auto& a, const auto& b) {
      return a.second - a.first < b.second - b.first;
    });
    open_ = std::move(open);
    if (!solve(s)) return std::nullopt;
    if (dfs(s, 0)) return builder_.realize(witness_);
    return std::nullopt;
  }

  std::uint64_t cases() const { return cases_; }
  bool out_of_budget() const { return out_of_budget_; }

 private:
  // Records r_{rank i} < d (right side) or r_{rank j} < d (left side).
  void cut(LinearConstraintSystem& s, int i, int j, bool at_right_end) {
    if (at_right_end) {
      builder_.add_short_radius(s, i, j, o_.at_rank(j));
      left_cut_[j] = std::max(left_cut_[j], i);
    } else {
      builder_.add_short_radius(s, i, j, o_.at_rank(i));
      right_cut_[i] = std::min(right_cut_[i], j);
    }
  }

  bool implied(int i, int j) const { return right_cut_[i] <= j || left_cut_[j] >= i; }

  bool solve(const LinearConstraintSystem& s) {
    if (cases_ >= budget_) {
      out_of_budget_ = true;
      return false;
    }
    ++cases_;
    FeasibilityResult r = eliminate_feasible(s);
    if (auto* f = std::get_if<Feasible>(&r)) {
      witness_ = std::move(f->witness);
      return true;
    }
    return false;
  }

  bool dfs(const LinearConstraintSystem& s, std::size_t idx) {
    while (idx < open_.size() && implied(open_[idx].first, open_[idx].second)) ++idx;
    if (idx == open_.size()) return true;  // witness_ is from the last feasible solve
    const auto [i, j] = open_[idx];
    for (bool at_right_end : {false, true}) {
      const int saved_right = right_cut_[i];
      const int saved_left = left_cut_[j];
      LinearConstraintSystem next = s;
      cut(next, i, j, at_right_end);
      const bool ok = solve(next) && dfs(next, idx + 1);
      right_cut_[i] = saved_right;
      left_cut_[j] = saved_left;
      if (ok) return true;
      if (out_of_budget_) return false;
    }
    return false;
  }

  const Graph& g_;
  const Ordering& o_;
  int n_;
  CentralSystemBuilder builder_;
  std::uint64_t budget_;
  std::uint64_t cases_ = 0;
  bool out_of_budget_ = false;
  std::vector<int> right_cut_;
  std::vector<int> left_cut_;
  std::vector<std::pair<int, int>> open_;
  std::vector<Rational> witness_;
};

void check_central_realization(const Realization& r, const Graph& g) {
  if (!is_central(r) || !verify(r, g).empty()) {
    throw std::logic_error("central realization failed its self-check");
  }
}

}  // namespace

std::optional<Realization> cand1_for_ordering(const Graph& g, const Ordering& o) {
  if (g.order() != o.size()) {
    throw PreconditionError("ordering covers " + std::to_string(o.size()) +
                            " vertices, graph has " + std::to_string(g.order()));
  }
  if (g.order() == 0) return Realization(1);
  if (g.order() == 1) return Realization(1, {Placement::centered(0, 1)});
  CaseSearch search(g, o, UINT64_MAX);
  auto r = search.run();
  if (r) check_central_realization(*r, g);
  return r;
}

Cand1Result cand1_recognize(const Graph& g, const CandLimits& limits) {
  Cand1Result result;
  std::vector<std::optional<Placement>> placed(static_cast<std::size_t>(g.order()));
  std::uint64_t nodes_left = limits.node_budget;
  Rational next_left = 0;
  for (const auto& comp : g.components()) {
    const Graph sub = g.induced_subgraph(comp);
    std::optional<Realization> found;
    bool cases_exhausted = false;
    std::uint64_t used = 0;
    const bool complete = for_each_and1_ordering(
        sub, nodes_left,
        [&](const Ordering& o) {
          ++result.orderings;
          if (sub.order() == 1) {
            found = Realization(1, {Placement::centered(0, 1)});
            return false;
          }
          CaseSearch search(sub, o, limits.case_budget - result.cases);
          found = search.run();
          result.cases += search.cases();
          if (search.out_of_budget()) cases_exhausted = true;
          return !found && !cases_exhausted;
        },
        &used);
    nodes_left = used >= nodes_left ? 0 : nodes_left - used;
    if (!found) {
      if (complete && !cases_exhausted && sub.order() <= limits.max_complete_n) {
        result.verdict = NotMember{};
      } else {
        result.verdict = Exhausted{};
      }
      return result;
    }
    check_central_realization(*found, sub);
    Rational lo = found->interval(1).lo;
    Rational hi = found->interval(1).hi;
    for (VertexId v = 1; v <= found->order(); ++v) {
      lo = std::min(lo, found->interval(v).lo);
      hi = std::max(hi, found->interval(v).hi);
    }
    const Rational shift = next_left - lo;
    const Realization moved = transform(*found, shift, 1);
    for (VertexId v = 1; v <= moved.order(); ++v) placed[comp[v - 1] - 1] = moved.at(v);
    next_left = hi + shift + 1;
  }
  std::vector<Placement> all;
  for (auto& p : placed) all.push_back(std::move(*p));
  Realization r(1, std::move(all));
  check_central_realization(r, g);
  result.verdict = FoundRealization{std::move(r)};
  return result;
}

}  // namespace andgraph
