#include "formation/merge.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>

#include "formation/catalog.hpp"
#include "formation/meta.hpp"

namespace formation {

const char* reasonName(FeasibilityReason r) {
  switch (r) {
    case FeasibilityReason::Ok: return "ok";
    case FeasibilityReason::MissingDofExceeded: return "missing-dof-exceeded";
    case FeasibilityReason::NonStructuralVsZeroDof: return "3D-nonstructural-vs-zero-dof";
    case FeasibilityReason::TwoLoneLeaders: return "3D-two-lone-leaders";
    case FeasibilityReason::TooFewVertices: return "too-few-vertices";
  }
  return "?";
}

int dofCapacity(Dim d, std::size_t vertexCount) { return dofConstant(d, vertexCount); }

namespace {

int missingFromLedger(const Formation& f, Dim d) {
  return dofCapacity(d, f.vertexCount()) - ledger(f, d).totalDof;
}

bool loneLeader(const Formation& f, Dim d) {
  DofLedger l = ledger(f, d);
  return d == Dim::Three && f.vertexCount() >= 3 && l.allocation() == std::vector<int>{3} && l.leaders.size() == 1;
}

std::string allocText(const std::vector<int>& alloc) {
  std::string s = "(";
  for (std::size_t i = 0; i < alloc.size(); ++i) s += (i ? "," : "") + std::to_string(alloc[i]);
  return s + ")";
}

}  // namespace

int missingDof(const Formation& f, Dim d, const PersistenceOptions& options) {
  if (!isPersistent(f, d, options).persistent) throw PreconditionError("formation is not persistent");
  return missingFromLedger(f, d);
}

Feasibility feasibility(const std::vector<Formation>& collection, Dim d, const PersistenceOptions& options) {
  requirePersistent(collection, d, options, "collection");
  Feasibility out;
  std::size_t vertices = 0;
  for (const Formation& f : collection) {
    out.missing.push_back(missingFromLedger(f, d));
    out.totalMissing += out.missing.back();
    vertices += f.vertexCount();
  }
  auto verdict = [&](FeasibilityReason r) {
    out.reason = r;
    out.feasible = r == FeasibilityReason::Ok;
    return out;
  };
  if (vertices < 2) return verdict(FeasibilityReason::TooFewVertices);
  if (out.totalMissing > (d == Dim::Two ? 3 : 6)) return verdict(FeasibilityReason::MissingDofExceeded);
  if (d == Dim::Three && collection.size() == 2) {
    for (int i = 0; i < 2; ++i) {
      DofLedger mine = ledger(collection[i], d);
      DofLedger other = ledger(collection[1 - i], d);
      if (mine.leaders.size() > 1 && other.totalDof == 0) return verdict(FeasibilityReason::NonStructuralVsZeroDof);
    }
    if (loneLeader(collection[0], d) && loneLeader(collection[1], d))
      return verdict(FeasibilityReason::TwoLoneLeaders);
  }
  return verdict(FeasibilityReason::Ok);
}

std::size_t pairEdgeCount(Dim d, std::size_t na, std::size_t nb) {
  return requiredRank(d, na + nb) - requiredRank(d, na) - requiredRank(d, nb);
}

std::vector<Edge> MergePlan::interEdges() const {
  std::vector<Edge> out;
  for (const PlannedEdge& e : edges) out.push_back(e.edge);
  return out;
}

namespace {

struct Unit {
  VertexId v;
  int side;
  int dof;
};

using Usage = std::map<VertexId, int>;
using Candidate = std::vector<PlannedEdge>;

class PairPlanner {
 public:
  PairPlanner(const Formation& a, const Formation& b, Dim d, const PersistenceOptions& options)
      : f_{&a, &b}, led_{ledger(a, d), ledger(b, d)}, dim_(d), options_(options) {
    (void)MetaFormation(std::vector<Formation>{a, b}, {});
    required_ = static_cast<int>(pairEdgeCount(d, a.vertexCount(), b.vertexCount()));
    big_ = d == Dim::Three && a.vertexCount() >= 3 && b.vertexCount() >= 3;
    small_ = a.vertexCount() <= b.vertexCount() ? 0 : 1;
  }

  Candidate run() {
    std::vector<Unit> units = orderedUnits();
    for (bool strict : {true, false}) {
      Candidate found;
      std::vector<int> used(units.size(), 0);
      enumerate(units, used, 0, required_, [&](const Usage& u) { return tryUsage(u, strict, found); });
      if (!found.empty()) return found;
      if (dim_ == Dim::Two) break;
    }
    throw PlanningError("no construction found for DOF allocations " + allocText(led_[0].allocation()) + " and " +
                        allocText(led_[1].allocation()));
  }

 private:
  std::vector<Unit> orderedUnits() const {
    std::vector<Unit> units;
    for (int s = 0; s < 2; ++s)
      for (std::size_t i = 0; i < led_[s].vertices.size(); ++i)
        if (led_[s].dof[i] > 0) units.push_back({led_[s].vertices[i], s, led_[s].dof[i]});
    // Spec ordering: largest DOF first when both sides are bodies, smaller side first otherwise.
    auto rank = [&](const Unit& u) { return big_ ? u.side : (u.side == small_ ? 0 : 1); };
    std::stable_sort(units.begin(), units.end(), [&](const Unit& x, const Unit& y) {
      if (big_) {
        if (x.dof != y.dof) return x.dof > y.dof;
        if (x.side != y.side) return x.side < y.side;
      } else {
        if (rank(x) != rank(y)) return rank(x) < rank(y);
        if (x.dof != y.dof) return x.dof > y.dof;
      }
      return x.v < y.v;
    });
    return units;
  }

  // Usage vectors with the given sum, lexicographically descending.
  bool enumerate(const std::vector<Unit>& units, std::vector<int>& used, std::size_t i, int left,
                 const std::function<bool(const Usage&)>& visit) {
    if (left == 0) {
      Usage u;
      for (std::size_t k = 0; k < units.size(); ++k)
        if (used[k]) u[units[k].v] = used[k];
      return visit(u);
    }
    if (i == units.size()) return false;
    int capacity = 0;
    for (std::size_t k = i; k < units.size(); ++k) capacity += units[k].dof;
    if (capacity < left) return false;
    for (int take = std::min(units[i].dof, left); take >= 0; --take) {
      used[i] = take;
      if (enumerate(units, used, i + 1, left - take, visit)) return true;
    }
    used[i] = 0;
    return false;
  }

  int usedOf(const Usage& u, VertexId v) const {
    auto it = u.find(v);
    return it == u.end() ? 0 : it->second;
  }

  bool residualOnLeaders(const Usage& u, int s) const {
    int total = 0;
    bool allLeaders = true;
    for (std::size_t i = 0; i < led_[s].vertices.size(); ++i) {
      int used = usedOf(u, led_[s].vertices[i]);
      int left = led_[s].dof[i] - used;
      total += left;
      if (left > 0 && !(used == 0 && led_[s].outDegree[i] == 0)) allLeaders = false;
    }
    return (total == 3 || total == 6) && allLeaders;
  }

  bool tryUsage(const Usage& u, bool strict, Candidate& found) {
    std::vector<Candidate> candidates;
    if (dim_ == Dim::Two) {
      return headSearch(u, found);
    } else if (big_) {
      if (u.size() < 3) return false;
      if (strict && (residualOnLeaders(u, 0) || residualOnLeaders(u, 1))) return false;
      candidates = catalogCandidates(u);
    } else {
      candidates = smallCandidates(u);
    }
    for (Candidate& c : candidates)
      if (acceptable(c, strict)) {
        found = std::move(c);
        return true;
      }
    return false;
  }

  bool acceptable(const Candidate& c, bool strict) const {
    std::vector<Edge> edges;
    for (const PlannedEdge& e : c) edges.push_back(e.edge);
    Formation flat = flatten(MetaFormation(std::vector<Formation>{*f_[0], *f_[1]}, edges));
    if (!checkRigidity(underlying(flat), dim_, options_.rigidity).rigid) return false;
    if (dim_ == Dim::Two) return true;
    DofLedger l = ledger(flat, dim_);
    if (l.leaders.size() > 1) return false;
    if (strict && l.leaders.size() == 1 && l.totalDof == 3) return false;
    return true;
  }

  // Selected vertices (used desc, id asc) then the rest (id asc).
  std::pair<std::vector<VertexId>, std::vector<VertexId>> slotsOf(const Usage& u, int s) const {
    std::vector<VertexId> sel, rest;
    for (VertexId v : f_[s]->vertices()) (usedOf(u, v) > 0 ? sel : rest).push_back(v);
    std::sort(sel.begin(), sel.end(), [&](VertexId x, VertexId y) {
      if (usedOf(u, x) != usedOf(u, y)) return usedOf(u, x) > usedOf(u, y);
      return x < y;
    });
    std::sort(rest.begin(), rest.end());
    return {sel, rest};
  }

  static std::optional<Candidate> fill(const CatalogEntry& entry, const std::vector<VertexId>& slotsA,
                                       const std::vector<VertexId>& slotsB, const std::string& pattern) {
    if (static_cast<std::size_t>(entry.slots(Side::A)) > slotsA.size() ||
        static_cast<std::size_t>(entry.slots(Side::B)) > slotsB.size())
      return std::nullopt;
    Candidate c;
    for (const SlotEdge& e : entry.edges) {
      Edge edge = e.tail == Side::A ? Edge{slotsA[e.tailSlot], slotsB[e.headSlot]}
                                    : Edge{slotsB[e.tailSlot], slotsA[e.headSlot]};
      c.push_back({edge, e.rule, pattern, 0});
    }
    return c;
  }

  static std::vector<VertexId> concat(std::vector<VertexId> a, const std::vector<VertexId>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
  }

  std::vector<Candidate> catalogCandidates(const Usage& u) const {
    std::array<std::vector<VertexId>, 2> sel, rest;
    std::array<std::vector<int>, 2> alloc;
    std::array<int, 2> sum{0, 0};
    for (int s = 0; s < 2; ++s) {
      std::tie(sel[s], rest[s]) = slotsOf(u, s);
      for (VertexId v : sel[s]) {
        alloc[s].push_back(usedOf(u, v));
        sum[s] += usedOf(u, v);
      }
    }
    int x = sum[0] >= sum[1] ? 0 : 1, y = 1 - x;
    std::vector<Candidate> out;
    auto push = [&](const CatalogEntry* e, int sa, int sb) {
      if (!e) return;
      std::string pattern = e->partition + " " + allocText(e->allocA) + (e->allocB.empty() ? "" : "/" + allocText(e->allocB));
      if (auto c = fill(*e, concat(sel[sa], rest[sa]), concat(sel[sb], rest[sb]), pattern)) out.push_back(*c);
    };
    if (sum[y] == 0) {
      push(findCatalog(alloc[x], {}), x, y);
    } else if (sum[x] == 5 && sum[y] == 1) {
      reductionCandidates(u, sel[x], rest[x], sel[y][0], rest[y], out);
    } else {
      push(findCatalog(alloc[x], alloc[y]), x, y);
      if (sum[x] == sum[y]) push(findCatalog(alloc[y], alloc[x]), y, x);
    }
    return out;
  }

  // 5-1: plan 6-0 with one extra DOF on a source vertex, then reverse that
  // vertex's edge so it leaves the single DOF vertex `ydof` of the other side.
  void reductionCandidates(const Usage& u, const std::vector<VertexId>& selX, const std::vector<VertexId>& restX,
                           VertexId ydof, const std::vector<VertexId>& restY, std::vector<Candidate>& out) const {
    if (restY.size() < 2) return;
    auto attempt = [&](std::vector<std::pair<VertexId, int>> aug, VertexId w) {
      std::stable_sort(aug.begin(), aug.end(), [](const auto& p, const auto& q) { return p.second > q.second; });
      std::vector<int> alloc;
      std::vector<VertexId> slotsA;
      int ws = -1;
      for (auto& [v, c] : aug) {
        if (v == w) ws = static_cast<int>(slotsA.size());
        alloc.push_back(c);
        slotsA.push_back(v);
      }
      const CatalogEntry* e = findCatalog(alloc, {});
      if (!e) return;
      std::string pattern = "5-1 via 6-0 " + allocText(alloc);
      for (std::size_t k = 0; k < e->edges.size(); ++k) {
        if (e->edges[k].tailSlot != ws) continue;
        int j = e->edges[k].headSlot;
        std::vector<VertexId> slotsB(3);
        slotsB[j] = ydof;
        std::size_t next = 0;
        for (int b = 0; b < 3; ++b)
          if (b != j) slotsB[b] = restY[next++];
        auto c = fill(*e, slotsA, slotsB, pattern);
        if (!c) continue;
        (*c)[k].edge = {ydof, w};
        (*c)[k].rule += "+reversal";
        out.push_back(*c);
      }
    };
    std::vector<std::pair<VertexId, int>> base;
    for (VertexId v : selX) base.emplace_back(v, usedOf(u, v));
    if (!restX.empty()) {
      auto aug = base;
      aug.emplace_back(restX[0], 1);
      attempt(aug, restX[0]);
    }
    for (auto it = base.rbegin(); it != base.rend(); ++it) {
      if (it->second >= 3) continue;
      auto aug = base;
      for (auto& p : aug)
        if (p.first == it->first) ++p.second;
      std::stable_sort(aug.begin(), aug.end(), [](const auto& p, const auto& q) {
        return p.second != q.second ? p.second > q.second : p.first < q.first;
      });
      attempt(aug, it->first);
    }
  }

  std::vector<Candidate> smallCandidates(const Usage& u) const {
    int s = small_, l = 1 - small_;
    std::size_t ns = f_[s]->vertexCount(), nl = f_[l]->vertexCount();
    std::vector<std::pair<int, int>> pattern;
    if (ns == 1) {
      for (std::size_t j = 0; j < std::min<std::size_t>(nl, 3); ++j) pattern.emplace_back(0, static_cast<int>(j));
    } else {
      pattern = {{0, 0}, {0, 1}, {1, 0}, {1, 1}};
      if (nl >= 3) pattern.insert(pattern.begin() + 2, {0, 2});
    }
    std::vector<VertexId> smallSlots = f_[s]->vertices();
    std::sort(smallSlots.begin(), smallSlots.end());
    auto [sel, rest] = slotsOf(u, l);
    if (sel.size() > 3) return {};
    std::vector<VertexId> largeSlots = concat(sel, rest);
    largeSlots.resize(std::min<std::size_t>(nl, 3));

    std::vector<Candidate> out;
    std::vector<int> sp(smallSlots.size()), lp(largeSlots.size());
    std::iota(sp.begin(), sp.end(), 0);
    std::string label = "small-graph (" + std::to_string(ns) + "," + (nl >= 3 ? std::string(">=3") : std::to_string(nl)) + ")";
    do {
      std::iota(lp.begin(), lp.end(), 0);
      do {
        for (unsigned mask = 0; mask < (1u << pattern.size()); ++mask) {
          Candidate c;
          std::map<VertexId, int> out_;
          for (std::size_t k = 0; k < pattern.size(); ++k) {
            VertexId a = smallSlots[sp[pattern[k].first]], b = largeSlots[lp[pattern[k].second]];
            Edge e = (mask >> k & 1) ? Edge{b, a} : Edge{a, b};
            ++out_[e.tail];
            c.push_back({e, "small-graph", label, 0});
          }
          std::map<VertexId, int> want(u.begin(), u.end());
          if (out_ == want) out.push_back(std::move(c));
        }
      } while (std::next_permutation(lp.begin(), lp.end()));
    } while (std::next_permutation(sp.begin(), sp.end()));
    return out;
  }

  // 2D: tails fixed by the usage, heads by lowest ids on the other side.
  bool headSearch(const Usage& u, Candidate& found) const {
    std::vector<std::pair<VertexId, int>> tails;
    for (int s : {small_, 1 - small_})
      for (VertexId v : slotsOf(u, s).first) {
        for (int k = 0; k < usedOf(u, v); ++k) tails.emplace_back(v, s);
      }
    std::array<std::vector<VertexId>, 2> heads{f_[0]->vertices(), f_[1]->vertices()};
    for (auto& h : heads) std::sort(h.begin(), h.end());
    Candidate chosen;
    std::function<bool(std::size_t)> dfs = [&](std::size_t i) -> bool {
      if (i == tails.size()) {
        for (int s = 0; s < 2; ++s) {
          std::set<VertexId> touched;
          for (const PlannedEdge& e : chosen)
            for (VertexId v : {e.edge.tail, e.edge.head})
              if (f_[s]->hasVertex(v)) touched.insert(v);
          if (touched.size() < std::min<std::size_t>(2, f_[s]->vertexCount())) return false;
        }
        return acceptable(chosen, false);
      }
      auto [t, s] = tails[i];
      for (VertexId h : heads[1 - s]) {
        bool repeat = std::any_of(chosen.begin(), chosen.end(), [&](const PlannedEdge& e) {
          return (e.edge.tail == t && e.edge.head == h) || (e.edge.tail == h && e.edge.head == t);
        });
        if (repeat) continue;
        chosen.push_back({{t, h}, "2D-pair", "2D pair (" + std::to_string(required_) + " edges)", 0});
        if (dfs(i + 1)) return true;
        chosen.pop_back();
      }
      return false;
    };
    if (!dfs(0)) return false;
    found = chosen;
    return true;
  }

  std::array<const Formation*, 2> f_;
  std::array<DofLedger, 2> led_;
  Dim dim_;
  PersistenceOptions options_;
  int required_ = 0;
  bool big_ = false;
  int small_ = 0;
};

MergePlan pairPlan(const Formation& a, const Formation& b, Dim d, const PersistenceOptions& options) {
  Feasibility feas = feasibility({a, b}, d, options);
  if (!feas.feasible)
    throw InfeasibleError(feas.reason, std::string("cannot merge: ") + reasonName(feas.reason));
  MergePlan plan;
  plan.dim = d;
  plan.order = {0, 1};
  for (PlannedEdge& e : PairPlanner(a, b, d, options).run()) plan.edges.push_back(std::move(e));
  MergeStep step;
  step.merged = {0};
  step.member = 1;
  step.edgeCount = plan.edges.size();
  step.missingBefore = feas.totalMissing;
  step.missingAfter = missingFromLedger(flatten(MetaFormation({a, b}, plan.interEdges())), d);
  step.pattern = plan.edges.empty() ? "" : plan.edges.front().pattern;
  plan.steps.push_back(step);
  return plan;
}

}  // namespace

MergePlan planPair2D(const Formation& a, const Formation& b, const PersistenceOptions& options) {
  return pairPlan(a, b, Dim::Two, options);
}

MergePlan planPair3D(const Formation& a, const Formation& b, const PersistenceOptions& options) {
  return pairPlan(a, b, Dim::Three, options);
}

MergePlan planCollection(const std::vector<Formation>& collection, Dim d, const PersistenceOptions& options) {
  Feasibility feas = feasibility(collection, d, options);
  if (!feas.feasible)
    throw InfeasibleError(feas.reason, std::string("cannot merge: ") + reasonName(feas.reason));
  MergePlan plan;
  plan.dim = d;
  std::vector<std::size_t> order(collection.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](auto x, auto y) { return feas.missing[x] < feas.missing[y]; });
  if (d == Dim::Three) {
    auto last = [&](auto pred) {
      auto it = std::find_if(order.begin(), order.end(), pred);
      if (it == order.end()) return;
      std::size_t m = *it;
      order.erase(it);
      order.push_back(m);
    };
    last([&](std::size_t i) { return ledger(collection[i], d).totalDof == 0; });
    last([&](std::size_t i) { return loneLeader(collection[i], d); });
  }
  plan.order = order;
  if (collection.empty()) return plan;

  Formation partial = collection[order[0]];
  std::vector<std::size_t> merged{order[0]};
  for (std::size_t k = 1; k < order.size(); ++k) {
    const Formation& next = collection[order[k]];
    Candidate edges = PairPlanner(partial, next, d, options).run();
    std::vector<Edge> inter;
    for (PlannedEdge& e : edges) {
      e.step = k;
      inter.push_back(e.edge);
      plan.edges.push_back(e);
    }
    MergeStep step;
    step.step = k;
    step.merged = merged;
    step.member = order[k];
    step.edgeCount = edges.size();
    step.missingBefore = missingFromLedger(partial, d) + missingFromLedger(next, d);
    partial = flatten(MetaFormation({partial, next}, inter));
    step.missingAfter = missingFromLedger(partial, d);
    step.pattern = edges.empty() ? "" : edges.front().pattern;
    plan.steps.push_back(step);
    merged.push_back(order[k]);
  }
  return plan;
}

PlanReport verifyPlan(const std::vector<Formation>& collection, const std::vector<Edge>& plan, Dim d,
                      const PersistenceOptions& options) {
  MetaFormation meta(collection, plan);
  PersistenceVerdict v = mergedPersistence(meta, d, options);
  PlanReport r;
  r.persistent = v.persistent;
  r.structurallyPersistent = v.structurallyPersistent;
  r.criterion = v.criterion;
  r.ledger = v.ledger;
  r.edgeOptimalPersistent = v.persistent && edgeOptimalPersistent(meta, d, options);
  int before = 0;
  for (const Formation& f : collection) before += missingFromLedger(f, d);
  r.missingDofConserved = v.persistent && missingFromLedger(flatten(meta), d) == before;
  return r;
}

}  // namespace formation
