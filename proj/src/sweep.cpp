#include "pries/sweep.hpp"

#include <exception>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "pries/duality.hpp"
#include "pries/enumerate.hpp"

namespace pries {

namespace {

struct Labeled {
  FramePtr frame;
  std::string label;
};

std::vector<Labeled> labeled_frames(std::size_t max_dual_size) {
  std::vector<Labeled> out;
  out.push_back({clopup_frame(share(Poset::antichain(0))).frame, "d0#0"});
  for (std::size_t n = 1; n <= max_dual_size; ++n) {
    auto frames = catalog_frames(n);
    for (std::size_t i = 0; i < frames.size(); ++i)
      out.push_back({frames[i], "d" + std::to_string(n) + "#" + std::to_string(i)});
  }
  return out;
}

void tally(SweepTotals& t, const JTReport& r) {
  ++t.homs;
  if (!r.ok()) ++t.violations;
  if (r.all_true()) {
    ++t.all_true;
    if (!r.is_identity()) ++t.all_true_non_identity;
  }
  if (r.all_false()) ++t.all_false;
}

SweepResult merge(const std::vector<SweepInstance>& instances, std::vector<std::vector<JTReport>>& slots) {
  SweepResult res;
  for (auto& slot : slots)
    for (auto& r : slot) res.reports.push_back(std::move(r));
  res.totals = totals_of(res.reports, instances.size());
  return res;
}

}  // namespace

SweepTotals totals_of(const std::vector<JTReport>& reports, std::size_t instances) {
  SweepTotals t;
  t.instances = instances;
  for (const auto& r : reports) tally(t, r);
  return t;
}

std::vector<SweepInstance> sweep_instances(std::size_t max_dual_size) {
  const auto frames = labeled_frames(max_dual_size);
  std::vector<SweepInstance> out;
  out.reserve(frames.size() * frames.size());
  for (const auto& l : frames)
    for (const auto& m : frames)
      out.push_back(SweepInstance{out.size(), l.frame, m.frame, l.label, m.label});
  return out;
}

std::vector<JTReport> sweep_instance(const SweepInstance& inst) {
  auto reps = verify_jt(inst.source, inst.target);
  for (auto& r : reps) {
    r.instance = inst.index;
    r.source_label = inst.source_label;
    r.target_label = inst.target_label;
  }
  return reps;
}

SweepResult sweep_jt_serial(const std::vector<SweepInstance>& instances) {
  std::vector<std::vector<JTReport>> slots(instances.size());
  for (std::size_t i = 0; i < instances.size(); ++i) slots[i] = sweep_instance(instances[i]);
  return merge(instances, slots);
}

SweepResult sweep_jt_parallel(const std::vector<SweepInstance>& instances, int threads) {
  std::vector<std::vector<JTReport>> slots(instances.size());
  std::exception_ptr failure;
  const auto count = static_cast<std::ptrdiff_t>(instances.size());
#ifdef _OPENMP
  if (threads <= 0) threads = omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
#endif
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    try {
      slots[static_cast<std::size_t>(i)] = sweep_instance(instances[static_cast<std::size_t>(i)]);
    } catch (...) {
#ifdef _OPENMP
#pragma omp critical(pries_sweep_failure)
#endif
      if (!failure) failure = std::current_exception();
    }
  }
  (void)threads;
  if (failure) std::rethrow_exception(failure);
  return merge(instances, slots);
}

}  // namespace pries
