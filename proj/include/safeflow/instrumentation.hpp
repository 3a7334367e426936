#pragma once

#include <cstdint>

namespace safeflow {

/// Exact work counters. These are first-class outputs: the complexity
/// acceptance checks assert on them, never on wall-clock time.
struct Counters {
  std::uint64_t simple_ops = 0;        // decomposition walk + two-pointer steps
  std::uint64_t funnel_build_ops = 0;  // funnel edges/vertices touched in Build-Funnels
  std::uint64_t funnel_report_ops = 0; // funnel edges/vertices touched while reporting
  std::uint64_t heap_ops = 0;          // push / extract-min / non-trivial merge
  std::uint64_t touched_edges = 0;     // edges read by safety verification

  std::uint64_t funnel_ops() const { return funnel_build_ops + funnel_report_ops; }
};

}  // namespace safeflow
