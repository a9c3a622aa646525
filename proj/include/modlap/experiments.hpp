#pragma once

#include <atomic>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "modlap/dynamics.hpp"
#include "modlap/geometry.hpp"
#include "modlap/mask.hpp"
#include "modlap/metrics.hpp"
#include "modlap/periodicity.hpp"
#include "modlap/schedule.hpp"
#include "modlap/taxonomy.hpp"

namespace modlap {

struct NamedSeed {
  std::string name;
  LatticeState state;
};

struct NamedSchedule {
  std::string name;
  Schedule schedule;
  int k = 0;  // family parameters when generated as [2,k,2 x s]
  int s = 0;
};

// Repeating cycle [2, k, 2 x s]: one binary step, one k step, s binary
// steps, over and over.
inline NamedSchedule carpet_family_schedule(int k, int s) {
  if (k < 2 || k > 36 || s < 0) throw std::invalid_argument("bad carpet family parameters");
  Schedule sch;
  sch.cycle.push_back(2);
  sch.cycle.push_back(k);
  for (int i = 0; i < s; ++i) sch.cycle.push_back(2);
  NamedSchedule named{sch.to_string(), std::move(sch), k, s};
  return named;
}

struct SweepSpec {
  std::vector<NamedSeed> seeds;
  std::vector<Mask> masks;
  std::vector<NamedSchedule> schedules;
  UpdateRule rule = UpdateRule::laplacian;
  long long horizon = 80;
  CarpetCriteria criteria;
  bool double_symmetric_only = true;  // carpet campaigns keep only double x double cells
  int threads = 1;

  void validate() const {
    if (seeds.empty()) throw std::invalid_argument("sweep needs at least one seed");
    if (masks.empty()) throw std::invalid_argument("sweep needs at least one mask");
    if (schedules.empty()) throw std::invalid_argument("sweep needs at least one schedule");
    if (horizon < criteria.horizon)
      throw std::invalid_argument("sweep horizon is shorter than the classification horizon");
    if (threads < 1) throw std::invalid_argument("sweep needs at least one thread");
    criteria.validate();
  }
};

struct SweepCell {
  std::string seed, mask, schedule;
  int k = 0, s = 0;
  FigureClass result;
};

struct SweepResult {
  std::vector<SweepCell> cells;  // seed-major, then mask, then schedule order

  int carpet_count(int k) const {
    int n = 0;
    for (const SweepCell& c : cells)
      if (c.k == k && c.result.verdict == Verdict::carpet) ++n;
    return n;
  }
  int carpet_count(int k, int s) const {
    int n = 0;
    for (const SweepCell& c : cells)
      if (c.k == k && c.s == s && c.result.verdict == Verdict::carpet) ++n;
    return n;
  }
};

// Runs every (seed, mask, schedule) cell and classifies its trajectory.
// Cells are fixed up front and written to their own slot, so the result is
// identical for any worker count.
inline SweepResult run_sweep(const SweepSpec& spec) {
  spec.validate();

  struct Job {
    const NamedSeed* seed;
    const Mask* mask;
    const NamedSchedule* schedule;
  };
  std::vector<Job> jobs;
  for (const NamedSeed& seed : spec.seeds) {
    for (const Mask& mask : spec.masks) {
      if (spec.double_symmetric_only) {
        bool ok = figure_symmetry(seed.state).klass() == SymmetryClass::double_symmetric &&
                  mask_symmetry(mask).klass() == SymmetryClass::double_symmetric;
        if (!ok) continue;
      }
      for (const NamedSchedule& sch : spec.schedules) jobs.push_back({&seed, &mask, &sch});
    }
  }

  SweepResult result;
  result.cells.resize(jobs.size());
  std::atomic<size_t> next{0};
  auto worker = [&]() {
    for (size_t i = next.fetch_add(1); i < jobs.size(); i = next.fetch_add(1)) {
      const Job& job = jobs[i];
      auto traj = run_collect(job.seed->state, *job.mask, job.schedule->schedule, spec.rule,
                              spec.horizon);
      SweepCell cell;
      cell.seed = job.seed->name;
      cell.mask = job.mask->name;
      cell.schedule = job.schedule->name;
      cell.k = job.schedule->k;
      cell.s = job.schedule->s;
      cell.result = classify(traj, spec.criteria);
      result.cells[i] = std::move(cell);
    }
  };
  if (spec.threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < spec.threads; ++i) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }
  return result;
}

inline std::string sweep_csv(const SweepResult& result) {
  std::string out = classification_csv_header() + "\n";
  for (const SweepCell& c : result.cells)
    out += classification_csv_line(c.seed, c.mask, c.schedule, c.result) + "\n";
  return out;
}

struct PeriodScanReport {
  PredictedLaw law;
  std::vector<long long> return_times;
  std::vector<ReplicationEvent> events;        // decompositions against the seed, by time
  std::vector<long long> off_law_event_times;  // event times outside law
  std::optional<ReplicationEvent> first_big;
  long long seed_extent = 0;                   // larger bounding-box side
  long long copies_across = 0;                 // distinct shift coordinates per axis at first big
  std::optional<long long> predicted_big;      // t_big for the observed copy count
  bool lemma_holds = true;                     // 2 tau >= w s at the first big event
};

// Constant-k campaign: returns, replication events against the seed, and the
// comparison of the first big event with the predicted law.
inline PeriodScanReport period_scan(const LatticeState& seed, const Mask& mask, int k,
                                    UpdateRule rule, long long horizon,
                                    Exactness mode = Exactness::exact) {
  if (horizon < 0) throw std::invalid_argument("horizon must be nonnegative");
  PeriodScanReport report;
  report.law = predict_times(k, horizon);
  auto traj = run_collect(seed, mask, constant_schedule(k), rule, horizon);
  report.return_times = detect_return(traj, seed, mode);

  BoundingBox b = seed.bounding_box();
  report.seed_extent = std::max(b.width(), b.height());
  for (long long t = 1; t <= horizon; ++t) {
    auto e = detect_replication(seed, traj[size_t(t)], mode);
    if (!e) continue;
    e->tau = t;
    if (!report.law.contains(t)) report.off_law_event_times.push_back(t);
    if (!report.first_big && e->kind == EventKind::big_period) report.first_big = *e;
    report.events.push_back(std::move(*e));
  }
  if (report.first_big) {
    std::vector<int> xs, ys;
    for (Point p : report.first_big->shifts) {
      xs.push_back(p.x);
      ys.push_back(p.y);
    }
    auto distinct = [](std::vector<int>& v) {
      std::sort(v.begin(), v.end());
      return (long long)(std::unique(v.begin(), v.end()) - v.begin());
    };
    report.copies_across = std::max(distinct(xs), distinct(ys));
    report.lemma_holds = 2 * report.first_big->tau >= report.copies_across * report.seed_extent;
    if (report.copies_across >= 2) {
      try {
        report.predicted_big = t_big(report.seed_extent, report.copies_across, report.law);
      } catch (const std::runtime_error&) {
        report.predicted_big = std::nullopt;
      }
    }
  }
  return report;
}

struct FingerprintReport {
  std::vector<long long> minima;  // times of window-local density minima
  std::optional<int> modal_mod8;
  double regularity_mod8 = 0.0;
  std::optional<int> modal_mod16;
  double regularity_mod16 = 0.0;
};

namespace detail {

// t is a minimum when no nearby density undercuts it within +/- 4 steps;
// plateaus keep their first step only.
inline std::vector<long long> window_minima(const std::vector<double>& rho) {
  std::vector<long long> minima;
  long long n = (long long)rho.size();
  for (long long t = 1; t + 1 < n; ++t) {
    bool is_min = true;
    for (long long u = std::max(0LL, t - 4); u <= std::min(n - 1, t + 4) && is_min; ++u) {
      if (u == t) continue;
      if (rho[size_t(u)] < rho[size_t(t)] || (rho[size_t(u)] == rho[size_t(t)] && u < t))
        is_min = false;
    }
    if (is_min) minima.push_back(t);
  }
  return minima;
}

inline void fit_modal_class(const std::vector<long long>& minima, int modulus,
                            std::optional<int>& modal, double& regularity) {
  if (minima.empty()) {
    modal = std::nullopt;
    regularity = 0.0;
    return;
  }
  std::vector<int> counts(size_t(modulus), 0);
  for (long long t : minima) ++counts[size_t(t % modulus)];
  int best = 0;
  for (int c = 1; c < modulus; ++c)
    if (counts[size_t(c)] > counts[size_t(best)]) best = c;
  modal = best;
  regularity = double(counts[size_t(best)]) / double(minima.size());
}

}  // namespace detail

inline FingerprintReport density_fingerprint(const std::vector<double>& rho_trace) {
  FingerprintReport report;
  report.minima = detail::window_minima(rho_trace);
  detail::fit_modal_class(report.minima, 8, report.modal_mod8, report.regularity_mod8);
  detail::fit_modal_class(report.minima, 16, report.modal_mod16, report.regularity_mod16);
  return report;
}

inline FingerprintReport density_fingerprint(const LatticeState& seed, const Mask& mask,
                                             const Schedule& schedule, UpdateRule rule,
                                             long long horizon) {
  if (horizon < 32) throw std::invalid_argument("fingerprint needs a horizon of at least 32");
  std::vector<double> rho;
  rho.reserve(size_t(horizon) + 1);
  run(seed, mask, schedule, rule, horizon,
      [&](long long, const LatticeState& s) { rho.push_back(density(s)); });
  return density_fingerprint(rho);
}

struct EntropyJumpReport {
  std::vector<long long> top_jump_times;  // sorted ascending
  double overlap_score = 0.0;             // fraction landing on landmark times
};

// Largest single-step entropy jumps, scored against the landmark times where
// binary and ternary period structure shows up.
inline EntropyJumpReport entropy_jumps(const LatticeState& seed, const Mask& mask,
                                       const Schedule& schedule, UpdateRule rule,
                                       long long horizon, int top_n = 8) {
  if (horizon < 1 || top_n < 1) throw std::invalid_argument("bad entropy jump parameters");
  int K = schedule.modulus_bound();
  std::vector<double> entropy;
  entropy.reserve(size_t(horizon) + 1);
  run(seed, mask, schedule, rule, horizon,
      [&](long long, const LatticeState& s) { entropy.push_back(color_entropy(s, K)); });
  std::vector<std::pair<double, long long>> jumps;
  for (size_t t = 1; t < entropy.size(); ++t)
    jumps.push_back({std::fabs(entropy[t] - entropy[t - 1]), (long long)t});
  std::sort(jumps.begin(), jumps.end(), [](const auto& a, const auto& b) {
    return a.first != b.first ? a.first > b.first : a.second < b.second;
  });
  EntropyJumpReport report;
  for (int i = 0; i < top_n && i < (int)jumps.size(); ++i)
    report.top_jump_times.push_back(jumps[size_t(i)].second);
  std::sort(report.top_jump_times.begin(), report.top_jump_times.end());
  static const long long landmarks[] = {8, 16, 27, 32, 54, 64, 81, 128};
  int hits = 0;
  for (long long t : report.top_jump_times)
    for (long long m : landmarks)
      if (t == m) ++hits;
  if (!report.top_jump_times.empty())
    report.overlap_score = double(hits) / double(report.top_jump_times.size());
  return report;
}

}  // namespace modlap
