#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "pries/frame.hpp"
#include "pries/jt.hpp"

namespace pries {

/// One (L, M) pair of the exhaustive JT sweep.
struct SweepInstance {
  std::size_t index = 0;
  FramePtr source;
  FramePtr target;
  std::string source_label;  // "d<dual size>#<catalog position>"
  std::string target_label;
};

/// All ordered pairs of frames whose spectra have at most `max_dual_size`
/// points (the 1-element frame, dual size 0, included), ordered by
/// (source dual size, source position, target dual size, target position).
std::vector<SweepInstance> sweep_instances(std::size_t max_dual_size);

struct SweepTotals {
  std::size_t instances = 0;
  std::size_t homs = 0;
  std::size_t violations = 0;
  std::size_t all_true = 0;
  std::size_t all_true_non_identity = 0;
  std::size_t all_false = 0;

  friend bool operator==(const SweepTotals&, const SweepTotals&) = default;
};

struct SweepResult {
  std::vector<JTReport> reports;  // instance order, then hom order
  SweepTotals totals;
};

/// Reference implementation: one instance after another.
SweepResult sweep_jt_serial(const std::vector<SweepInstance>& instances);

/// OpenMP fan-out over instances; per-instance slots are merged in instance
/// order, so the result is identical to the serial sweep for any thread
/// count. `threads == 0` keeps the OpenMP default.
SweepResult sweep_jt_parallel(const std::vector<SweepInstance>& instances, int threads = 0);

/// Totals over reports gathered from `instances` sweep instances.
SweepTotals totals_of(const std::vector<JTReport>& reports, std::size_t instances);

/// Reports for one instance, stamped with its index and labels.
std::vector<JTReport> sweep_instance(const SweepInstance& inst);

}  // namespace pries
