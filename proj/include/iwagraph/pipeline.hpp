#pragma once

#include <functional>
#include <string>
#include <vector>

#include "iwagraph/invariants.hpp"
#include "iwagraph/io.hpp"
#include "iwagraph/tower.hpp"

namespace iwagraph {

struct AnalysisOptions {
  long levels = 4;  // kappa levels 0..levels (clamped by the resource cap)
  long resource_cap = kDefaultResourceCap;
  long prefix_degree = 8;
  long truncation_degree = 16;  // series degree for non-exact voltages
  bool cross_validate = true;   // fit nu from tree counts
  bool allow_uncertified = false;
};

struct Analysis {
  IwasawaInvariants invariants;
  std::vector<Int> series_prefix;
  std::vector<KappaLevel> kappa_levels;
};

// Full pipeline: admissibility (auto-selected spanning tree among
// zero-voltage edges), characteristic series, mu/lambda, kappa levels and
// the nu fit. Levels that exceed the resource cap are dropped, never fatal,
// as long as enough levels remain for the nu fit when requested.
Analysis analyze_tower(const Multigraph& g, const VoltageAssignment& v,
                       const AnalysisOptions& opts = {});

/// One pinned regression check against a published value.
struct PinnedCheck {
  std::string name;
  std::function<bool(std::string& detail)> run;
};

// Regression corpus over the published worked examples.
std::vector<PinnedCheck> pinned_corpus();

}  // namespace iwagraph
