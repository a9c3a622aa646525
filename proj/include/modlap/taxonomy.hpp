#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "modlap/geometry.hpp"
#include "modlap/lattice.hpp"
#include "modlap/metrics.hpp"

namespace modlap {

struct CarpetCriteria {
  double min_density = 0.056;
  double max_stripe_fraction = 0.10;
  double max_hole_fraction = 0.10;
  long long horizon = 80;

  void validate() const {
    auto frac = [](double v) { return v > 0.0 && v < 1.0; };
    if (!frac(min_density) || !frac(max_stripe_fraction) || !frac(max_hole_fraction))
      throw std::invalid_argument("carpet criteria fractions must lie in (0,1)");
    if (horizon < 1) throw std::invalid_argument("carpet horizon must be >= 1");
  }
};

struct StripeHoleAudit {
  double horizontal_stripe = 0.0;  // widest empty row band / box height
  double vertical_stripe = 0.0;    // widest empty column band / box width
  double hole = 0.0;               // largest centered empty square side / min box side
};

// Widest empty bands and the largest empty axis-aligned square whose center
// falls in the middle half of the bounding box, all as box-relative
// fractions.
inline StripeHoleAudit stripe_and_hole_audit(const LatticeState& state) {
  BoundingBox b = state.bounding_box();
  if (b.empty()) throw std::invalid_argument("stripe and hole audit needs a nonempty state");
  int w = b.width(), h = b.height();

  std::vector<char> row_occupied(size_t(h), 0), col_occupied(size_t(w), 0);
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x)
      if (state.get(b.min_x + x, b.min_y + y)) {
        row_occupied[size_t(y)] = 1;
        col_occupied[size_t(x)] = 1;
      }
  auto longest_gap = [](const std::vector<char>& occ) {
    long long best = 0, run = 0;
    for (char c : occ) {
      run = c ? 0 : run + 1;
      best = std::max(best, run);
    }
    return best;
  };

  StripeHoleAudit a;
  a.horizontal_stripe = double(longest_gap(row_occupied)) / h;
  a.vertical_stripe = double(longest_gap(col_occupied)) / w;

  // side(x,y): largest empty square with its lower-left cell at (x,y).
  std::vector<int> side(size_t(w) * size_t(h), 0);
  auto at = [&](int x, int y) -> int& { return side[size_t(y) * size_t(w) + size_t(x)]; };
  for (int y = h; y-- > 0;)
    for (int x = w; x-- > 0;) {
      if (state.get(b.min_x + x, b.min_y + y)) continue;
      int s = 1;
      if (x + 1 < w && y + 1 < h)
        s = 1 + std::min({at(x + 1, y), at(x, y + 1), at(x + 1, y + 1)});
      at(x, y) = s;
    }
  // A square of side s anchored at local (x,y) has center (x + s/2, y + s/2)
  // in cell-edge units; the middle half of the box is [w/4, 3w/4] x [h/4,
  // 3h/4]. Doubling both sides keeps the test in integers.
  long long best_side = 0;
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x) {
      long long m = at(x, y);
      if (m <= best_side) continue;
      long long hi_x = (3LL * w - 4 * x) / 2, hi_y = (3LL * h - 4 * y) / 2;
      long long lo_x = std::max(1LL, (1LL * w - 4 * x + 1) / 2), lo_y = std::max(1LL, (1LL * h - 4 * y + 1) / 2);
      long long s = std::min({m, hi_x, hi_y});
      if (s >= std::max(lo_x, lo_y)) best_side = std::max(best_side, s);
    }
  a.hole = double(best_side) / std::min(w, h);
  return a;
}

enum class Verdict { carpet, quasi_carpet, rug_chaotic, rug_disappearing, rug_solid };

inline std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::carpet: return "carpet";
    case Verdict::quasi_carpet: return "quasi-carpet";
    case Verdict::rug_chaotic: return "rug-chaotic";
    case Verdict::rug_disappearing: return "rug-disappearing";
    default: return "rug-solid";
  }
}

struct FigureClass {
  Verdict verdict = Verdict::rug_chaotic;
  double min_rho = 1.0;                  // over the settled half of the horizon
  double worst_stripe = 0.0;             // over the settled half of the horizon
  double worst_hole = 0.0;               // over the settled half of the horizon
  bool sym_persisted = false;            // double symmetry at every step
  std::vector<long long> vanish_times;   // steps at (or below twice) seed scale
};

// Carpet: double-symmetric at every step and all numeric criteria hold.
// Quasi-carpet: symmetric throughout but criteria fail. Rugs: disappearing
// when the support repeatedly falls back to seed scale (or dies), solid when
// one axis survives throughout and the figure never empties, chaotic
// otherwise. An empty step counts as vacuously double-symmetric.
//
// Symmetry and vanish scans cover every step in [0, horizon]. The numeric
// criteria are measured over the settled window [horizon/2, horizon] only: a
// small seed's first few figures occupy a handful of cells, so band and hole
// fractions there are dominated by lattice granularity, and judging them
// would misreport every small-seed run as criteria-violating regardless of
// its long-run structure. An empty step anywhere still zeroes min_rho, since
// a figure that dies can never be a carpet.
inline FigureClass classify(const std::vector<LatticeState>& trajectory,
                            const CarpetCriteria& criteria = {}) {
  criteria.validate();
  if ((long long)trajectory.size() <= criteria.horizon)
    throw std::invalid_argument("trajectory does not reach the classification horizon");

  FigureClass out;
  long long seed_support = trajectory[0].support_size();
  long long measure_from = criteria.horizon / 2;
  bool all_double = true, all_single = true, ever_empty = false;
  for (long long t = 0; t <= criteria.horizon; ++t) {
    const LatticeState& s = trajectory[size_t(t)];
    if (s.support_size() == 0) {
      ever_empty = true;
      out.min_rho = 0.0;
      if (t >= 1) out.vanish_times.push_back(t);
      continue;
    }
    SymmetrySignature sig = figure_symmetry(s);
    all_double = all_double && sig.klass() == SymmetryClass::double_symmetric;
    all_single = all_single && sig.axis_count() >= 1;
    if (t >= measure_from) {
      out.min_rho = std::min(out.min_rho, density(s));
      StripeHoleAudit audit = stripe_and_hole_audit(s);
      out.worst_stripe = std::max({out.worst_stripe, audit.horizontal_stripe, audit.vertical_stripe});
      out.worst_hole = std::max(out.worst_hole, audit.hole);
    }
    if (t >= 1 && s.support_size() <= 2 * seed_support) out.vanish_times.push_back(t);
  }
  out.sym_persisted = all_double;

  if (all_double) {
    bool ok = out.min_rho >= criteria.min_density &&
              out.worst_stripe <= criteria.max_stripe_fraction &&
              out.worst_hole <= criteria.max_hole_fraction;
    out.verdict = ok ? Verdict::carpet : Verdict::quasi_carpet;
    return out;
  }
  if (out.vanish_times.size() >= 2)
    out.verdict = Verdict::rug_disappearing;
  else if (all_single && !ever_empty)
    out.verdict = Verdict::rug_solid;
  else
    out.verdict = Verdict::rug_chaotic;
  return out;
}

enum class ExpectedOutcome { carpet_possible, single_axis_persists, no_carpet };

inline std::string to_string(ExpectedOutcome e) {
  switch (e) {
    case ExpectedOutcome::carpet_possible: return "carpet-possible";
    case ExpectedOutcome::single_axis_persists: return "single-axis-persists";
    default: return "no-carpet";
  }
}

// Symmetry inheritance lookup: only double x double can carpet; a shared
// axis persists; any asymmetric partner forecloses carpets.
inline ExpectedOutcome predict_class(const SymmetrySignature& seed_sym,
                                     const SymmetrySignature& mask_sym) {
  SymmetryClass sc = seed_sym.klass(), mc = mask_sym.klass();
  if (sc == SymmetryClass::asymmetric || mc == SymmetryClass::asymmetric)
    return ExpectedOutcome::no_carpet;
  if (sc == SymmetryClass::double_symmetric && mc == SymmetryClass::double_symmetric)
    return ExpectedOutcome::carpet_possible;
  bool concordant = (seed_sym.horizontal && mask_sym.horizontal) ||
                    (seed_sym.vertical && mask_sym.vertical) ||
                    (seed_sym.main_diag && mask_sym.main_diag) ||
                    (seed_sym.anti_diag && mask_sym.anti_diag);
  if (sc == SymmetryClass::single_axis && mc == SymmetryClass::single_axis && !concordant)
    return ExpectedOutcome::no_carpet;
  return ExpectedOutcome::single_axis_persists;
}

inline std::string classification_csv_header() {
  return "seed,mask,schedule,verdict,min_rho,worst_stripe,worst_hole,sym_persisted";
}

// RFC 4180 quoting; schedule names ("2,3,[2]*") and file-stem labels can
// carry commas, and a bare comma would shift every column after it.
inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

inline std::string classification_csv_line(const std::string& seed, const std::string& mask,
                                           const std::string& schedule, const FigureClass& fc) {
  return csv_field(seed) + "," + csv_field(mask) + "," + csv_field(schedule) + "," +
         to_string(fc.verdict) + "," + format_g9(fc.min_rho) + "," +
         format_g9(fc.worst_stripe) + "," + format_g9(fc.worst_hole) + "," +
         (fc.sym_persisted ? "true" : "false");
}

}  // namespace modlap
