#include "formation/catalog.hpp"

#include <algorithm>
#include <set>

#include "formation/graph.hpp"

namespace formation {

namespace {

void checkHeads(const std::vector<int>& heads, std::size_t expected, int excluded) {
  if (heads.size() != expected)
    throw PreconditionError("operation needs " + std::to_string(expected) + " target slots");
  std::set<int> seen;
  for (int h : heads)
    if (h < 0 || h > 2 || h == excluded || !seen.insert(h).second)
      throw PreconditionError("invalid target slot " + std::to_string(h));
}

int freshVertex(PartialPattern& p) {
  if (p.nextA >= p.maxA) throw PreconditionError("no fresh source vertex left");
  return p.nextA++;
}

}  // namespace

PartialPattern opV(const PartialPattern& p, const std::vector<int>& heads) {
  int t = p.operations;
  if (t > 2) throw PreconditionError("op (v) needs t <= 2");
  checkHeads(heads, static_cast<std::size_t>(3 - t), -1);
  PartialPattern out = p;
  int i = freshVertex(out);
  for (int h : heads) {
    out.edges.emplace_back(i, h);
    out.rules.push_back("op-v");
  }
  ++out.operations;
  return out;
}

PartialPattern opE(const PartialPattern& p, std::size_t reroute, const std::vector<int>& extraHeads) {
  if (p.edges.empty()) throw PreconditionError("op (e) needs an existing planned edge");
  if (reroute >= p.edges.size()) throw PreconditionError("op (e): no planned edge " + std::to_string(reroute));
  int t = p.operations;
  int j = p.edges[reroute].second;
  checkHeads(extraHeads, static_cast<std::size_t>(std::max(0, 3 - t)), j);
  PartialPattern out = p;
  int i = freshVertex(out);
  out.edges[reroute] = {i, j};
  out.rules[reroute] = "op-e";
  for (int h : extraHeads) {
    if (std::find(out.edges.begin(), out.edges.end(), std::make_pair(i, h)) != out.edges.end())
      throw PreconditionError("op (e): repeated edge");
    out.edges.emplace_back(i, h);
    out.rules.push_back("op-e");
  }
  ++out.operations;
  return out;
}

int CatalogEntry::slots(Side s) const {
  int n = 0;
  for (const SlotEdge& e : edges) {
    int a = e.tail == Side::A ? e.tailSlot : e.headSlot;
    int b = e.tail == Side::A ? e.headSlot : e.tailSlot;
    n = std::max(n, (s == Side::A ? a : b) + 1);
  }
  if (s == Side::B) n = std::max(n, 3);
  return n;
}

namespace {

std::vector<PartialPattern> basePatterns() {
  PartialPattern p321 = opV(opV(opV({}, {0, 1, 2}), {0, 1}), {0});
  PartialPattern p222 = opE(opV(opV({}, {0, 1, 2}), {0, 1}), 2, {0});
  PartialPattern p3111 = opE(p321, 4, {});
  PartialPattern p2211 = opE(p222, 5, {});
  PartialPattern p21111 = opE(p2211, 4, {});
  PartialPattern p111111 = opE(p21111, 1, {});
  return {p321, p222, p3111, p2211, p21111, p111111};
}

CatalogEntry fromPattern(const PartialPattern& p) {
  std::vector<int> out(p.nextA, 0);
  for (auto [a, b] : p.edges) ++out[a];
  std::vector<int> order(p.nextA);
  for (int i = 0; i < p.nextA; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return out[x] > out[y]; });
  std::vector<int> slot(p.nextA);
  CatalogEntry e;
  e.partition = "6-0";
  for (int s = 0; s < p.nextA; ++s) {
    slot[order[s]] = s;
    if (out[order[s]] > 0) e.allocA.push_back(out[order[s]]);
  }
  for (std::size_t k = 0; k < p.edges.size(); ++k)
    e.edges.push_back({Side::A, slot[p.edges[k].first], p.edges[k].second, p.rules[k]});
  for (int x : e.allocA) e.base += std::to_string(x);
  return e;
}

std::vector<CatalogEntry> buildCatalog() {
  std::vector<CatalogEntry> all;
  for (const PartialPattern& p : basePatterns()) all.push_back(fromPattern(p));
  const Side A = Side::A, B = Side::B;
  auto add = [&](const char* part, std::vector<int> a, std::vector<int> b, const char* base,
                 std::vector<std::tuple<Side, int, int>> edges) {
    CatalogEntry e{part, std::move(a), std::move(b), base, {}};
    std::string rule = std::string("catalog-") + part;
    for (auto [s, t, h] : edges) e.edges.push_back({s, t, h, rule});
    all.push_back(std::move(e));
  };
  // Reorientations of the 6-0 constructions.
  add("4-2", {3, 1}, {2}, "321", {{A, 0, 0}, {A, 0, 1}, {A, 0, 2}, {B, 0, 1}, {A, 1, 1}, {B, 0, 2}});
  add("4-2", {3, 1}, {1, 1}, "321", {{A, 0, 0}, {A, 0, 1}, {A, 0, 2}, {B, 0, 2}, {B, 1, 2}, {A, 1, 0}});
  add("4-2", {2, 2}, {2}, "321", {{B, 0, 0}, {A, 0, 1}, {A, 0, 2}, {A, 1, 0}, {A, 1, 1}, {B, 0, 2}});
  add("4-2", {2, 2}, {1, 1}, "321", {{A, 0, 0}, {B, 1, 0}, {A, 0, 2}, {A, 1, 0}, {A, 1, 1}, {B, 0, 2}});
  add("4-2", {2, 1, 1}, {2}, "321", {{B, 0, 0}, {A, 0, 1}, {A, 0, 2}, {B, 0, 1}, {A, 1, 1}, {A, 2, 0}});
  add("4-2", {2, 1, 1}, {1, 1}, "321", {{B, 0, 1}, {B, 1, 1}, {A, 1, 2}, {A, 0, 0}, {A, 0, 1}, {A, 2, 0}});
  add("4-2", {1, 1, 1, 1}, {2}, "2211", {{B, 0, 0}, {A, 0, 1}, {B, 0, 1}, {A, 1, 1}, {A, 2, 2}, {A, 3, 0}});
  add("4-2", {1, 1, 1, 1}, {1, 1}, "3111", {{B, 0, 0}, {B, 1, 0}, {A, 0, 2}, {A, 1, 0}, {A, 2, 0}, {A, 3, 1}});
  add("3-3", {3}, {2, 1}, "321", {{A, 0, 0}, {A, 0, 1}, {A, 0, 2}, {B, 0, 1}, {B, 1, 1}, {B, 0, 2}});
  add("3-3", {3}, {1, 1, 1}, "222", {{A, 0, 0}, {B, 0, 1}, {A, 0, 1}, {B, 1, 1}, {B, 2, 2}, {A, 0, 2}});
  add("3-3", {2, 1}, {2, 1}, "321", {{B, 0, 0}, {A, 0, 1}, {A, 0, 2}, {B, 0, 2}, {B, 1, 2}, {A, 1, 0}});
  add("3-3", {2, 1}, {1, 1, 1}, "321", {{B, 0, 2}, {B, 1, 2}, {B, 2, 2}, {A, 0, 0}, {A, 0, 1}, {A, 1, 0}});
  add("3-3", {1, 1, 1}, {1, 1, 1}, "321", {{A, 0, 0}, {B, 1, 0}, {B, 2, 0}, {B, 0, 1}, {A, 1, 1}, {A, 2, 0}});
  return all;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = buildCatalog();
  return entries;
}

const CatalogEntry* findCatalog(const std::vector<int>& allocA, const std::vector<int>& allocB) {
  for (const CatalogEntry& e : catalog())
    if (e.allocA == allocA && e.allocB == allocB) return &e;
  return nullptr;
}

}  // namespace formation
