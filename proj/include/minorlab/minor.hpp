#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "minorlab/execution.hpp"
#include "minorlab/graph.hpp"

namespace minorlab {

// branch_sets[i] is the host vertex set contracted onto pattern vertex i.
struct MinorModel {
  std::vector<VertexSet> branch_sets;

  friend bool operator==(const MinorModel&, const MinorModel&) = default;
};

enum class MinorStatus { Found, Absent, BudgetExceeded };

struct MinorSearchOptions {
  std::uint64_t budget = 50'000'000;  // backtracking node expansions
  Execution execution = Execution::Parallel;
  bool reduce = true;                 // exact low-degree host reductions before searching
};

struct MinorSearchResult {
  MinorStatus status = MinorStatus::Absent;
  MinorModel model;                   // set when status == Found
  std::uint64_t nodes = 0;
};

// Returns the first model in the fixed search order, pruned to inclusion-minimal branch sets.
MinorSearchResult find_minor(const Graph& host, const Graph& pattern, const MinorSearchOptions& opts = {});

struct ModelViolation {
  std::string invariant;  // "size", "range", "nonempty", "disjointness", "connectivity", "edge coverage"
  std::vector<int> witness;
  std::string message;
};

std::optional<ModelViolation> verify_model(const Graph& host, const Graph& pattern, const MinorModel& m);

struct PackingSearchResult {
  MinorStatus status = MinorStatus::Absent;
  std::vector<MinorModel> models;
  std::uint64_t nodes = 0;
};

PackingSearchResult find_disjoint_minors(const Graph& host, const Graph& pattern, int k,
                                         const MinorSearchOptions& opts = {});

// Drops vertices (highest id first) while the model stays valid.
MinorModel minimize_model(const Graph& host, const Graph& pattern, MinorModel m);

bool sets_adjacent(const Graph& host, const VertexSet& a, const VertexSet& b);

nlohmann::json model_json(const MinorModel& m);
MinorModel model_from_json(const nlohmann::json& j);
const char* status_name(MinorStatus s);

}  // namespace minorlab
