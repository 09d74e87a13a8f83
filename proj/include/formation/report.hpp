#pragma once

#include <string>
#include <vector>

#include "formation/io.hpp"
#include "formation/merge.hpp"
#include "formation/meta.hpp"
#include "formation/persistence.hpp"
#include "formation/rigidity.hpp"

namespace formation {

Json toJson(const RigidityWitness& w);
Json toJson(const RigidityVerdict& v);
Json toJson(const DofLedger& l);
Json toJson(const PersistenceVerdict& v);
Json toJson(const MetaClass& c);
Json toJson(const MetaVerdict& v);
Json toJson(const Feasibility& f);
Json toJson(const MergePlan& plan, const std::vector<Formation>& collection);
Json toJson(const PlanReport& r);

std::string toText(const RigidityVerdict& v);
std::string toText(const PersistenceVerdict& v);
std::string toText(const MetaVerdict& v);
std::string toText(const Feasibility& f);
std::string toText(const MergePlan& plan);
std::string toText(const PlanReport& r);

// Inter-edges of a plan document: top-level "interEdges" (plan or meta-formation file).
std::vector<Edge> planEdgesFromJson(std::string_view text);

}  // namespace formation
