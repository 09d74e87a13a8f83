#include "formation/meta.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>

namespace formation {

const char* kindName(MetaKind k) {
  switch (k) {
    case MetaKind::N: return "N";
    case MetaKind::D: return "D";
    case MetaKind::S: return "S";
  }
  return "?";
}

const char* countingName(CountingStatus s) {
  switch (s) {
    case CountingStatus::NotApplicable: return "not-applicable";
    case CountingStatus::Found: return "found";
    case CountingStatus::NotFound: return "not-found";
    case CountingStatus::Skipped: return "skipped";
  }
  return "?";
}

long MetaClass::bound() const {
  long n_ = static_cast<long>(n.size()), d_ = static_cast<long>(d.size()), s_ = static_cast<long>(s.size());
  if (n_ + d_ + s_ <= 1) return 0;
  // Two lone vertices in 3D still need their one bar.
  if (dim == Dim::Three && n_ + d_ == 0 && s_ == 2) return 1;
  return dim == Dim::Two ? 3 * n_ + 2 * s_ - 3 : 6 * n_ + 5 * d_ + 3 * s_ - 6;
}

MetaClass classify(const MetaFormation& meta, Dim d, const RigidityOptions& options) {
  MetaClass cls;
  cls.dim = d;
  for (std::size_t i = 0; i < meta.size(); ++i) {
    const Formation& m = meta.metaVertices()[i];
    std::string where = "metaVertices[" + std::to_string(i) + "]";
    MetaKind kind;
    if (m.vertexCount() == 0) throw InputError(where + ": empty meta-vertex");
    if (m.vertexCount() == 1) {
      kind = MetaKind::S;
    } else if (d == Dim::Three && m.vertexCount() == 2) {
      if (m.edgeCount() != 1) throw PreconditionError(where + ": two-vertex meta-vertex without its edge");
      kind = MetaKind::D;
    } else {
      if (!checkRigidity(underlying(m), d, options).rigid)
        throw PreconditionError(where + " is not rigid in " + std::to_string(toInt(d)) + "D");
      kind = MetaKind::N;
    }
    cls.kinds.push_back(kind);
    (kind == MetaKind::N ? cls.n : kind == MetaKind::D ? cls.d : cls.s).push_back(i);
  }
  return cls;
}

namespace {

// Up to three distinct incident vertices per meta-vertex.
struct Incidence {
  std::array<VertexId, 3> seen{};
  int count = 0;
  void add(VertexId v) {
    for (int i = 0; i < std::min(count, 3); ++i)
      if (seen[i] == v) return;
    if (count < 3) seen[count] = v;
    ++count;
  }
};

class Counter {
 public:
  Counter(const MetaFormation& meta, const MetaClass& cls) : meta_(meta), cls_(cls) {
    for (const Edge& e : meta.interEdges()) owners_.push_back({meta.owner(e.tail), meta.owner(e.head)});
  }

  MetaCount count(const std::vector<std::size_t>& subset) const {
    std::map<std::size_t, Incidence> touched;
    for (std::size_t idx : subset) {
      const Edge& e = meta_.interEdges().at(idx);
      touched[owners_[idx].first].add(e.tail);
      touched[owners_[idx].second].add(e.head);
    }
    MetaCount c;
    c.size = subset.size();
    int incident = 0;
    for (const auto& [m, inc] : touched) {
      incident += std::min(inc.count, 3);
      if (cls_.dim == Dim::Two) {
        (inc.count >= 2 ? c.i : c.j).push_back(m);
      } else if (inc.count >= 3) {
        c.i.push_back(m);
      } else if (inc.count == 2) {
        (meta_.metaVertices()[m].adjacent(inc.seen[0], inc.seen[1]) ? c.j : c.i).push_back(m);
      } else {
        c.k.push_back(m);
      }
    }
    long i = static_cast<long>(c.i.size()), j = static_cast<long>(c.j.size()), k = static_cast<long>(c.k.size());
    if (cls_.dim == Dim::Two)
      c.bound = 3 * i + 2 * j - 3;
    else
      c.bound = incident == 2 ? 1 : 6 * i + 5 * j + 3 * k - 6;
    return c;
  }

 private:
  const MetaFormation& meta_;
  const MetaClass& cls_;
  std::vector<std::pair<std::size_t, std::size_t>> owners_;
};

MetaWitness fromRigidity(const RigidityWitness& w) {
  return std::visit([](const auto& x) -> MetaWitness { return x; }, w);
}

std::vector<std::size_t> interIndices(std::size_t offset, const std::vector<std::size_t>& flatIndices) {
  std::vector<std::size_t> out;
  for (std::size_t i : flatIndices)
    if (i >= offset) out.push_back(i - offset);
  return out;
}

std::vector<Edge> interEdgesAt(const MetaFormation& meta, const std::vector<std::size_t>& indices) {
  std::vector<Edge> out;
  for (std::size_t i : indices) out.push_back(meta.interEdges()[i]);
  return out;
}

std::size_t internalEdgeCount(const MetaFormation& meta) {
  std::size_t n = 0;
  for (const Formation& m : meta.metaVertices()) n += m.edgeCount();
  return n;
}

class CountingSearch {
 public:
  CountingSearch(const MetaFormation& meta, const MetaClass& cls, std::size_t target, std::size_t workCap)
      : counter_(meta, cls), m_(meta.interEdges().size()), target_(target), workCap_(workCap) {}

  CountingStatus run() {
    try {
      return dfs(0) ? CountingStatus::Found : CountingStatus::NotFound;
    } catch (const ResourceError&) {
      chosen_.clear();
      return CountingStatus::Skipped;
    }
  }
  const std::vector<std::size_t>& chosen() const { return chosen_; }

 private:
  bool addable(std::size_t e) {
    std::size_t c = chosen_.size();
    work_ += std::size_t{1} << c;
    if (work_ > workCap_) throw ResourceError("counting screen work cap");
    std::vector<std::size_t> sub;
    for (std::size_t mask = 0; mask < (std::size_t{1} << c); ++mask) {
      sub.clear();
      for (std::size_t b = 0; b < c; ++b)
        if (mask >> b & 1) sub.push_back(chosen_[b]);
      sub.push_back(e);
      if (counter_.count(sub).violated()) return false;
    }
    return true;
  }

  bool dfs(std::size_t start) {
    if (chosen_.size() == target_) return true;
    for (std::size_t e = start; e + (target_ - chosen_.size()) <= m_; ++e) {
      if (!addable(e)) continue;
      chosen_.push_back(e);
      if (dfs(e + 1)) return true;
      chosen_.pop_back();
    }
    return false;
  }

  Counter counter_;
  std::size_t m_;
  std::size_t target_;
  std::size_t workCap_;
  std::size_t work_ = 0;
  std::vector<std::size_t> chosen_;
};

}  // namespace

MetaCount metaCount(const MetaFormation& meta, const MetaClass& cls, const std::vector<std::size_t>& subset) {
  return Counter(meta, cls).count(subset);
}

std::optional<MetaCount> metaCountViolation3D(const MetaFormation& meta, const MetaClass& cls,
                                              const std::vector<std::size_t>& subset) {
  if (cls.dim != Dim::Three) throw InputError("metaCountViolation3D needs a 3D classification");
  MetaCount c = metaCount(meta, cls, subset);
  if (c.violated()) return c;
  return std::nullopt;
}

MetaFormation substituteMinimal(const MetaFormation& meta, Dim d, const RigidityOptions& options) {
  MetaClass cls = classify(meta, d, options);
  std::vector<Formation> replaced;
  for (std::size_t i = 0; i < meta.size(); ++i) {
    const Formation& m = meta.metaVertices()[i];
    if (cls.kinds[i] != MetaKind::N) {
      replaced.push_back(m);
      continue;
    }
    std::vector<Edge> kept;
    for (std::size_t e : minimallyRigidSpanning(underlying(m), d, {}, options)) kept.push_back(m.edges()[e]);
    replaced.push_back(m.withEdges(std::move(kept)));
  }
  return MetaFormation(std::move(replaced), meta.interEdges());
}

MetaVerdict metaRigid2D(const MetaFormation& meta, const MetaOptions& options) {
  MetaVerdict v;
  v.classes = classify(meta, Dim::Two, options.rigidity);
  if (meta.totalVertices() < 2) throw PreconditionError("meta-formation needs at least 2 vertices in 2D");
  v.bound = v.classes.bound();
  v.interEdgeCount = meta.interEdges().size();
  v.criterion = "substituted-laman-count";

  MetaFormation sub = substituteMinimal(meta, Dim::Two, options.rigidity);
  UndirectedView view = underlying(flatten(sub));
  std::size_t offset = internalEdgeCount(sub);
  PebbleRun run = runPebbleGame(view);
  std::size_t required = requiredRank(Dim::Two, view.vertexCount());
  v.rank = run.accepted.size();
  v.rigid = run.accepted.size() == required;
  std::vector<std::size_t> selected = interIndices(offset, run.accepted);
  if (v.rigid) {
    v.selected = interEdgesAt(meta, selected);
  } else if (!run.firstViolation.empty()) {
    std::vector<std::size_t> bad = interIndices(offset, run.firstViolation);
    v.witness = MetaViolation{interEdgesAt(meta, bad), metaCount(meta, v.classes, bad)};
  } else {
    v.witness = RankDeficit{run.accepted.size(), required, view.links(run.accepted)};
  }
  v.edgeOptimal = v.rigid && static_cast<long>(v.interEdgeCount) == v.bound;
  return v;
}

MetaVerdict metaRigid3D(const MetaFormation& meta, const MetaOptions& options) {
  MetaVerdict v;
  v.classes = classify(meta, Dim::Three, options.rigidity);
  v.bound = v.classes.bound();
  v.interEdgeCount = meta.interEdges().size();
  v.criterion = "substituted-generic-rank";

  if (v.bound < 0) {
    v.counting = CountingStatus::NotApplicable;
  } else if (static_cast<std::size_t>(v.bound) > v.interEdgeCount) {
    v.counting = CountingStatus::NotFound;
  } else if (v.interEdgeCount > options.subsetEdgeCap) {
    v.counting = CountingStatus::Skipped;
  } else {
    CountingSearch search(meta, v.classes, static_cast<std::size_t>(v.bound), options.subsetWorkCap);
    v.counting = search.run();
    v.countingSubset = interEdgesAt(meta, search.chosen());
  }

  MetaFormation sub = substituteMinimal(meta, Dim::Three, options.rigidity);
  UndirectedView view = underlying(flatten(sub));
  std::size_t offset = internalEdgeCount(sub);
  RigidityVerdict r = rigid3DCheck(view, options.rigidity);
  v.rigid = r.rigid;
  v.rank = r.rank;
  if (v.rigid) {
    OracleResult oracle = genericRankOracle(view, Dim::Three, options.rigidity.seed, options.rigidity.trials);
    v.selected = interEdgesAt(meta, interIndices(offset, oracle.independent));
  } else {
    v.witness = fromRigidity(r.witness);
  }
  v.edgeOptimal = v.rigid && static_cast<long>(v.interEdgeCount) == v.bound;
  return v;
}

MetaVerdict metaRigid(const MetaFormation& meta, Dim d, const MetaOptions& options) {
  return d == Dim::Two ? metaRigid2D(meta, options) : metaRigid3D(meta, options);
}

bool edgeOptimalRigid(const MetaFormation& meta, Dim d, const MetaOptions& options) {
  return metaRigid(meta, d, options).edgeOptimal;
}

bool edgeOptimalPersistent(const MetaFormation& meta, Dim d, const PersistenceOptions& options) {
  requirePersistent(meta.metaVertices(), d, options, "metaVertices");
  MetaOptions mo;
  mo.rigidity = options.rigidity;
  mo.subsetEdgeCap = 0;  // verdict only, no counting certificate
  return edgeOptimalRigid(meta, d, mo) && localDofCompliance(meta, d).compliant;
}

}  // namespace formation
