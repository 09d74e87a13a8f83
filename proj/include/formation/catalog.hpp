#pragma once

#include <climits>
#include <string>
#include <utility>
#include <vector>

namespace formation {

enum class Side { A, B };

// Pattern edge between slot `tailSlot` on side `tail` and slot `headSlot`
// on the other side. Slots of a side list its DOF-spending vertices first
// (by out-degree in the pattern, descending), then head-only vertices.
struct SlotEdge {
  Side tail = Side::A;
  int tailSlot = 0;
  int headSlot = 0;
  std::string rule;
};

// Edges from source slots (A) to target slots b0..b2 (B), built by op (v)/(e).
struct PartialPattern {
  std::vector<std::pair<int, int>> edges;
  std::vector<std::string> rules;
  int nextA = 0;
  int operations = 0;
  int maxA = INT_MAX;
};

// op (v): a fresh source vertex joined to 3 - t target slots, t = operations so far.
PartialPattern opV(const PartialPattern& p, const std::vector<int>& heads);
// op (e): planned edge `reroute` (k,j) becomes (i,j) for a fresh i, which
// also takes max(0, 3 - t) further target slots.
PartialPattern opE(const PartialPattern& p, std::size_t reroute, const std::vector<int>& extraHeads);

struct CatalogEntry {
  std::string partition;  // "6-0", "4-2" or "3-3"
  std::vector<int> allocA;
  std::vector<int> allocB;
  std::string base;
  std::vector<SlotEdge> edges;

  int slots(Side s) const;
};

const std::vector<CatalogEntry>& catalog();
const CatalogEntry* findCatalog(const std::vector<int>& allocA, const std::vector<int>& allocB);

}  // namespace formation
