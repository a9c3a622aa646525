#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "modlap/dynamics.hpp"
#include "modlap/lattice.hpp"

namespace modlap {

enum class EventKind { small_period, big_period };

inline std::string to_string(EventKind k) {
  return k == EventKind::big_period ? "big" : "small";
}

// exact compares residues; support_only compares nonzero patterns.
enum class Exactness { exact, support_only };

// A state that decomposes into s >= 2 translated copies of a motif. shifts
// holds every copy offset, including (0,0) when the motif itself sits in
// place; has_identity mirrors that membership. kind is big when the copies'
// enclosing rectangles are pairwise disjoint, small when some overlap.
// shifted_by > 0 marks events found between two mid-run states rather than
// against the seed.
struct ReplicationEvent {
  long long tau = 0;
  long long shifted_by = 0;
  std::vector<Point> shifts;
  bool has_identity = false;
  EventKind kind = EventKind::small_period;
  Exactness exactness = Exactness::exact;

  int copies() const { return int(shifts.size()); }
  int non_identity_copies() const { return copies() - (has_identity ? 1 : 0); }
};

inline std::string format_event(const ReplicationEvent& e) {
  std::string line = "t=" + std::to_string(e.tau);
  line += " kind=" + to_string(e.kind);
  line += " s=" + std::to_string(e.copies());
  line += " shifts=[";
  for (size_t i = 0; i < e.shifts.size(); ++i) {
    if (i) line += ",";
    line += "(" + std::to_string(e.shifts[i].x) + "," + std::to_string(e.shifts[i].y) + ")";
  }
  line += "] exact=";
  line += e.exactness == Exactness::exact ? "true" : "false";
  return line;
}

namespace detail {

// Row-major (y, then x) order; translation-invariant, which makes the cover
// below deterministic.
inline bool support_less(Point a, Point b) {
  return a.y != b.y ? a.y < b.y : a.x < b.x;
}

}  // namespace detail

// Decomposes state into translated copies of motif: an exact cover of the
// support where every copy reproduces the motif's support (and its residues
// when mode is exact). The copy containing the row-major-first uncovered
// cell must align the motif's own first cell with it, so the cover is unique
// when it exists and a single greedy pass either finds it or proves there is
// none. Single-copy matches (state == translated motif) are not events and
// yield nullopt. tau/shifted_by are left for the caller.
inline std::optional<ReplicationEvent> detect_replication(const LatticeState& motif,
                                                          const LatticeState& state,
                                                          Exactness mode = Exactness::exact) {
  std::vector<Point> ms = motif.support();
  if (ms.empty()) throw std::invalid_argument("replication motif must be nonempty");
  std::vector<Point> ss = state.support();
  if (ss.size() < 2 * ms.size() || ss.size() % ms.size() != 0) return std::nullopt;

  std::vector<char> covered(ss.size(), 0);
  auto find_cell = [&](Point q) -> long long {
    auto it = std::lower_bound(ss.begin(), ss.end(), q, detail::support_less);
    if (it == ss.end() || !(*it == q)) return -1;
    return it - ss.begin();
  };

  std::vector<Point> shifts;
  shifts.reserve(ss.size() / ms.size());
  bool residues_match = true;
  size_t anchor = 0;
  while (true) {
    while (anchor < ss.size() && covered[anchor]) ++anchor;
    if (anchor == ss.size()) break;
    Point d{ss[anchor].x - ms[0].x, ss[anchor].y - ms[0].y};
    for (Point g : ms) {
      long long idx = find_cell(g + d);
      if (idx < 0 || covered[idx]) return std::nullopt;
      if (state.get(g + d) != motif.get(g)) {
        if (mode == Exactness::exact) return std::nullopt;
        residues_match = false;
      }
      covered[size_t(idx)] = 1;
    }
    shifts.push_back(d);
  }
  if (shifts.size() < 2) return std::nullopt;

  ReplicationEvent e;
  std::sort(shifts.begin(), shifts.end());
  e.shifts = std::move(shifts);
  e.has_identity = std::binary_search(e.shifts.begin(), e.shifts.end(), Point{0, 0});
  e.exactness = residues_match ? Exactness::exact : Exactness::support_only;

  BoundingBox mb = motif.bounding_box();
  int w = mb.width(), h = mb.height();
  e.kind = EventKind::big_period;
  for (size_t i = 0; i + 1 < e.shifts.size() && e.kind == EventKind::big_period; ++i)
    for (size_t j = i + 1; j < e.shifts.size(); ++j) {
      if (e.shifts[j].x - e.shifts[i].x >= w) break;  // sorted by x first
      int dy = e.shifts[j].y - e.shifts[i].y;
      if ((dy < 0 ? -dy : dy) < h) {
        e.kind = EventKind::small_period;
        break;
      }
    }
  return e;
}

// True when state agrees with the seed on every cell of the seed's bounding
// box, at its original position.
inline bool window_matches(const LatticeState& state, const LatticeState& seed,
                           Exactness mode = Exactness::exact) {
  BoundingBox b = seed.bounding_box();
  for (int y = b.min_y; y <= b.max_y; ++y)
    for (int x = b.min_x; x <= b.max_x; ++x) {
      uint8_t sv = seed.get(x, y), tv = state.get(x, y);
      if (mode == Exactness::exact ? tv != sv : (tv != 0) != (sv != 0)) return false;
    }
  return true;
}

namespace detail {

inline bool support_equal(const LatticeState& a, const LatticeState& b) {
  return a.support() == b.support();
}

}  // namespace detail

// Seed returns: steps whose state revives the seed in its own window and is
// globally either the seed alone or a union of seed copies.
inline std::vector<long long> detect_return(const std::vector<LatticeState>& trajectory,
                                            const LatticeState& seed,
                                            Exactness mode = Exactness::exact) {
  std::vector<long long> times;
  for (size_t t = 1; t < trajectory.size(); ++t) {
    const LatticeState& s = trajectory[t];
    if (!window_matches(s, seed, mode)) continue;
    bool whole = mode == Exactness::exact ? s == seed : detail::support_equal(s, seed);
    if (whole || detect_replication(seed, s, mode).has_value()) times.push_back((long long)t);
  }
  return times;
}

// Published replication-time laws by modulus. Times are the positive
// multiples of base within the horizon; composite moduli intersect their
// prime-power component laws.
struct PredictedLaw {
  int k = 2;
  long long base = 16;
  std::string note;
  std::vector<long long> times;

  bool contains(long long t) const { return t > 0 && t % base == 0; }
};

inline PredictedLaw predict_times(int k, long long horizon) {
  if (k < 2 || k > 16) throw std::invalid_argument("unsupported modulus for period laws: " + std::to_string(k));
  // Scale per prime-power factor: binary moduli share the 16 scale; ternary
  // lifts from 27 to 81 for 9; larger primes replicate at p^2.
  int rest = k;
  long long base = 1;
  std::string parts;
  for (int p : {2, 3, 5, 7, 11, 13}) {
    if (rest % p != 0) continue;
    int a = 0;
    while (rest % p == 0) rest /= p, ++a;
    long long b = 0;
    if (p == 2) b = 16;
    else if (p == 3) b = a == 1 ? 27 : 81;
    else b = (long long)p * p;
    base = std::lcm(base, b);
    if (!parts.empty()) parts += " intersected with ";
    parts += "multiples of " + std::to_string(b);
  }
  PredictedLaw law;
  law.k = k;
  law.base = base;
  law.note = parts;
  for (long long t = base; t <= horizon; t += base) law.times.push_back(t);
  return law;
}

// Least predicted time whose copies can be pairwise disjoint: 2t >= ws for
// seed extent s and w copies across an axis.
inline long long t_big(long long seed_extent, long long copies, const PredictedLaw& law) {
  if (seed_extent < 1) throw std::invalid_argument("seed extent must be >= 1");
  if (copies < 2) throw std::invalid_argument("copy count must be >= 2");
  for (long long t : law.times)
    if (2 * t >= copies * seed_extent) return t;
  throw std::runtime_error("no predicted time within the law's horizon satisfies 2t >= ws");
}

namespace detail {

inline bool is_prime(long long p) {
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace detail

// Nonzero test for the multinomial coefficient t! / prod(parts!) mod prime
// p: nonzero exactly when the parts' base-p digits add without carries,
// i.e. sum to t's digit in every position.
inline bool lucas_multinomial_odd(long long t, const std::vector<long long>& parts, long long p) {
  if (!detail::is_prime(p)) throw std::invalid_argument("modulus for the digit test must be prime");
  if (t < 0) throw std::invalid_argument("exponent must be nonnegative");
  long long total = 0;
  for (long long a : parts) {
    if (a < 0) throw std::invalid_argument("parts must be nonnegative");
    total += a;
  }
  if (total != t) throw std::invalid_argument("parts must sum to the exponent");
  long long rt = t;
  std::vector<long long> rp = parts;
  while (rt > 0) {
    long long digit_sum = 0;
    for (long long& a : rp) {
      digit_sum += a % p;
      a /= p;
    }
    if (digit_sum != rt % p) return false;
    rt /= p;
  }
  return true;
}

// Recurrences of mid-run states: for every start t0 and lag tau on the grid,
// reports decompositions of state(t0 + tau) into copies of state(t0).
inline std::vector<ReplicationEvent> shifted_period_scan(const LatticeState& seed, const Mask& mask,
                                                         const Schedule& schedule, UpdateRule rule,
                                                         long long t0_max, long long tau_max,
                                                         Exactness mode = Exactness::exact) {
  if (t0_max < 0 || tau_max < 1) throw std::invalid_argument("scan grid must have t0 >= 0 and tau >= 1");
  auto traj = run_collect(seed, mask, schedule, rule, t0_max + tau_max);
  std::vector<ReplicationEvent> events;
  for (long long t0 = 0; t0 <= t0_max; ++t0) {
    if (traj[size_t(t0)].support().empty()) continue;
    for (long long tau = 1; tau <= tau_max; ++tau) {
      auto e = detect_replication(traj[size_t(t0)], traj[size_t(t0 + tau)], mode);
      if (!e) continue;
      e->tau = tau;
      e->shifted_by = t0;
      events.push_back(std::move(*e));
    }
  }
  std::stable_sort(events.begin(), events.end(),
                   [](const ReplicationEvent& a, const ReplicationEvent& b) {
                     return a.tau != b.tau ? a.tau < b.tau : a.shifted_by < b.shifted_by;
                   });
  return events;
}

}  // namespace modlap
