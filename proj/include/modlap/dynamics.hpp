#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "modlap/lattice.hpp"
#include "modlap/mask.hpp"
#include "modlap/schedule.hpp"

namespace modlap {

enum class UpdateRule {
  laplacian,          // sum_g (u(g) - u(p))
  identity_plus_sum,  // u(p) + sum_g u(g)
  neighbor_sum,       // sum_g u(g)
};

inline const char* to_string(UpdateRule r) {
  switch (r) {
    case UpdateRule::laplacian: return "laplacian";
    case UpdateRule::identity_plus_sum: return "identity-plus-sum";
    default: return "neighbor-sum";
  }
}

inline UpdateRule parse_rule(std::string_view s) {
  if (s == "laplacian") return UpdateRule::laplacian;
  if (s == "identity-plus-sum") return UpdateRule::identity_plus_sum;
  if (s == "neighbor-sum") return UpdateRule::neighbor_sum;
  throw std::invalid_argument("unknown update rule '" + std::string(s) + "'");
}

// Coefficient of u(p) itself in the update, before reduction mod k.
inline int rule_center_coeff(UpdateRule r, int degree) {
  switch (r) {
    case UpdateRule::laplacian: return -degree;
    case UpdateRule::identity_plus_sum: return 1;
    default: return 0;
  }
}

inline int floored_mod(long long a, int k) {
  int r = int(a % k);
  return r < 0 ? r + k : r;
}

// One synchronous update over the whole lattice, result reduced mod k with
// canonical residues in [0, k). Input is untouched; output window is tight.
inline LatticeState step(const LatticeState& in, const Mask& mask, int k, UpdateRule rule) {
  if (k < 2) throw std::invalid_argument("modulus must be >= 2");
  BoundingBox b = in.bounding_box();
  if (b.empty()) {
    LatticeState e;
    e.set_modulus_bound(k);
    return e;
  }
  int r = mask.radius();
  int cc = rule_center_coeff(rule, mask.degree());
  LatticeState out(b.min_x - r, b.min_y - r, b.width() + 2 * r, b.height() + 2 * r, k);
  for (int y = b.min_y - r; y <= b.max_y + r; ++y)
    for (int x = b.min_x - r; x <= b.max_x + r; ++x) {
      long long acc = (long long)cc * in.get(x, y);
      for (Point g : mask.offsets) acc += in.get(x + g.x, y + g.y);
      uint8_t v = uint8_t(floored_mod(acc, k));
      if (v) out.set(x, y, v);
    }
  return out.tightened();
}

// --- mod-2 bit-plane path ---------------------------------------------------
// Mod 2 every rule is an XOR of shifted copies of the state's parity: the
// neighbor sum contributes one shifted plane per offset, and the center
// plane joins for identity-plus-sum always and for the laplacian when the
// degree is odd.

namespace detail {

struct BitGrid {
  int x0 = 0, y0 = 0, w = 0, h = 0;
  int words_per_row = 0;
  std::vector<uint64_t> rows;  // row j starts at rows[j * words_per_row]

  bool empty() const { return w == 0 || h == 0; }
  bool get(int x, int y) const {
    if (x < x0 || x >= x0 + w || y < y0 || y >= y0 + h) return false;
    int i = x - x0, j = y - y0;
    return (rows[size_t(j) * words_per_row + size_t(i >> 6)] >> (i & 63)) & 1u;
  }
  void set(int x, int y) {
    int i = x - x0, j = y - y0;
    rows[size_t(j) * words_per_row + size_t(i >> 6)] |= uint64_t(1) << (i & 63);
  }
};

// Parity plane of a state (residues are reduced mod 2, which commutes with
// every rule's mod-2 step).
inline BitGrid to_bits(const LatticeState& s) {
  BoundingBox b = s.bounding_box();
  BitGrid g;
  if (b.empty()) return g;
  g.x0 = b.min_x;
  g.y0 = b.min_y;
  g.w = b.width();
  g.h = b.height();
  g.words_per_row = (g.w + 63) / 64;
  g.rows.assign(size_t(g.h) * g.words_per_row, 0);
  for (int y = b.min_y; y <= b.max_y; ++y)
    for (int x = b.min_x; x <= b.max_x; ++x)
      if (s.get(x, y) & 1) g.set(x, y);
  return g;
}

inline LatticeState from_bits(const BitGrid& g, int modulus_bound = 2) {
  if (g.empty()) {
    LatticeState e;
    e.set_modulus_bound(modulus_bound);
    return e;
  }
  LatticeState s(g.x0, g.y0, g.w, g.h, modulus_bound);
  for (int j = 0; j < g.h; ++j)
    for (int i = 0; i < g.w; ++i)
      if ((g.rows[size_t(j) * g.words_per_row + size_t(i >> 6)] >> (i & 63)) & 1u)
        s.set(g.x0 + i, g.y0 + j, 1);
  return s.tightened();
}

// dst ^= src << shift over word arrays; source bits beyond src_bits are
// guaranteed clear by the callers.
inline void xor_shifted_row(uint64_t* dst, int dst_words, const uint64_t* src, int src_words, int shift) {
  int word_shift = shift >> 6, bit_shift = shift & 63;
  for (int w = 0; w < src_words; ++w) {
    uint64_t v = src[w];
    if (!v) continue;
    int dw = w + word_shift;
    if (dw < dst_words) dst[dw] ^= v << bit_shift;
    if (bit_shift && dw + 1 < dst_words) dst[dw + 1] ^= v >> (64 - bit_shift);
  }
}

inline BitGrid step_bits(const BitGrid& in, const Mask& mask, UpdateRule rule) {
  BitGrid out;
  if (in.empty()) return out;
  int r = mask.radius();
  out.x0 = in.x0 - r;
  out.y0 = in.y0 - r;
  out.w = in.w + 2 * r;
  out.h = in.h + 2 * r;
  out.words_per_row = (out.w + 63) / 64;
  out.rows.assign(size_t(out.h) * out.words_per_row, 0);

  std::vector<Point> planes = mask.offsets;
  if (rule_center_coeff(rule, mask.degree()) % 2 != 0) planes.push_back({0, 0});

  for (Point g : planes) {
    // In-cell (x,y) feeds out-cell (x - g.x, y - g.y).
    int shift = r - g.x;  // in [0, 2r]
    for (int j = 0; j < in.h; ++j) {
      int oj = j + r - g.y;
      xor_shifted_row(&out.rows[size_t(oj) * out.words_per_row], out.words_per_row,
                      &in.rows[size_t(j) * in.words_per_row], in.words_per_row, shift);
    }
  }
  return out;
}

// Crop to the set bits. The growth-dominated case (tight already) is a
// cheap scan + no copy; genuine crops happen on collapsing states.
inline void tighten_bits(BitGrid& g) {
  if (g.empty()) return;
  int lo_j = -1, hi_j = -1;
  for (int j = 0; j < g.h; ++j) {
    const uint64_t* row = &g.rows[size_t(j) * g.words_per_row];
    for (int w = 0; w < g.words_per_row; ++w)
      if (row[w]) {
        if (lo_j < 0) lo_j = j;
        hi_j = j;
        break;
      }
  }
  if (lo_j < 0) {
    g = BitGrid{};
    return;
  }
  int lo_i = g.w, hi_i = -1;
  for (int j = lo_j; j <= hi_j; ++j) {
    const uint64_t* row = &g.rows[size_t(j) * g.words_per_row];
    for (int w = 0; w < g.words_per_row; ++w) {
      uint64_t v = row[w];
      if (!v) continue;
      lo_i = std::min(lo_i, w * 64 + std::countr_zero(v));
      break;
    }
    for (int w = g.words_per_row - 1; w >= 0; --w) {
      uint64_t v = row[w];
      if (!v) continue;
      hi_i = std::max(hi_i, w * 64 + 63 - std::countl_zero(v));
      break;
    }
  }
  if (lo_i == 0 && lo_j == 0 && hi_i == g.w - 1 && hi_j == g.h - 1) return;

  BitGrid t;
  t.x0 = g.x0 + lo_i;
  t.y0 = g.y0 + lo_j;
  t.w = hi_i - lo_i + 1;
  t.h = hi_j - lo_j + 1;
  t.words_per_row = (t.w + 63) / 64;
  t.rows.assign(size_t(t.h) * t.words_per_row, 0);
  for (int j = 0; j < t.h; ++j) {
    const uint64_t* src = &g.rows[size_t(lo_j + j) * g.words_per_row];
    uint64_t* dst = &t.rows[size_t(j) * t.words_per_row];
    for (int i = 0; i < t.w; ++i) {
      int si = lo_i + i;
      if ((src[si >> 6] >> (si & 63)) & 1u) dst[i >> 6] |= uint64_t(1) << (i & 63);
    }
  }
  g = std::move(t);
}

inline long long popcount_bits(const BitGrid& g) {
  long long n = 0;
  for (uint64_t w : g.rows) n += std::popcount(w);
  return n;
}

}  // namespace detail

// --- trajectory driver -------------------------------------------------------

// Called with (t, state) for t = 0 (the seed) through t_max.
using StepObserver = std::function<void(long long, const LatticeState&)>;

// Advances t_max steps. Maximal runs of k=2 steps go through the bit-plane
// path; byte states are materialized only for observers. Both paths produce
// bit-identical states.
inline LatticeState run(const LatticeState& seed, const Mask& mask, const Schedule& schedule,
                        UpdateRule rule, long long t_max, const StepObserver& observe = nullptr) {
  LatticeState state = seed.tightened();
  if (observe) observe(0, state);

  long long t = 0;
  bool byte_valid = true;
  detail::BitGrid bits;
  auto materialize = [&]() {
    if (!byte_valid) {
      state = detail::from_bits(bits, 2);
      byte_valid = true;
    }
  };

  while (t < t_max) {
    int k = schedule.at(t);
    if (k == 2) {
      if (byte_valid) {
        bits = detail::to_bits(state);
        byte_valid = false;
      }
      bits = detail::step_bits(bits, mask, rule);
      detail::tighten_bits(bits);
    } else {
      materialize();
      state = step(state, mask, k, rule);
    }
    ++t;
    if (observe) {
      materialize();
      observe(t, state);
    }
  }
  materialize();
  return state;
}

// Collects all states 0..t_max (desk-scale runs only).
inline std::vector<LatticeState> run_collect(const LatticeState& seed, const Mask& mask,
                                             const Schedule& schedule, UpdateRule rule, long long t_max) {
  std::vector<LatticeState> traj;
  traj.reserve(size_t(t_max) + 1);
  run(seed, mask, schedule, rule, t_max,
      [&](long long, const LatticeState& s) { traj.push_back(s); });
  return traj;
}

}  // namespace modlap
