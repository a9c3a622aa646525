#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "modlap/geom.hpp"

namespace modlap {

// Finitely supported function Z^2 -> {0..modulus_bound-1}, stored on a
// rectangular window. Cells outside the window are 0. Two states are equal
// iff they agree as functions on the whole lattice; the window is not
// observable through the public operations.
class LatticeState {
 public:
  LatticeState() = default;
  LatticeState(int x0, int y0, int w, int h, int modulus_bound = 2)
      : x0_(x0), y0_(y0), w_(w), h_(h), mb_(modulus_bound), v_(size_t(w) * h, 0) {
    if (w < 0 || h < 0) throw std::invalid_argument("negative window");
  }

  int modulus_bound() const { return mb_; }
  void set_modulus_bound(int mb) { mb_ = mb; }

  bool window_empty() const { return w_ == 0 || h_ == 0; }
  int window_x0() const { return x0_; }
  int window_y0() const { return y0_; }
  int window_w() const { return w_; }
  int window_h() const { return h_; }

  uint8_t get(int x, int y) const {
    if (x < x0_ || x >= x0_ + w_ || y < y0_ || y >= y0_ + h_) return 0;
    return v_[size_t(y - y0_) * w_ + (x - x0_)];
  }
  uint8_t get(Point p) const { return get(p.x, p.y); }

  void set(int x, int y, uint8_t val) {
    if (x < x0_ || x >= x0_ + w_ || y < y0_ || y >= y0_ + h_)
      throw std::out_of_range("cell outside window");
    v_[size_t(y - y0_) * w_ + (x - x0_)] = val;
  }
  void set(Point p, uint8_t val) { set(p.x, p.y, val); }

  const std::vector<uint8_t>& raw() const { return v_; }
  std::vector<uint8_t>& raw() { return v_; }

  // Nonzero cells, sorted by y then x (row-major scan order).
  std::vector<Point> support() const {
    std::vector<Point> out;
    for (int j = 0; j < h_; ++j)
      for (int i = 0; i < w_; ++i)
        if (v_[size_t(j) * w_ + i]) out.push_back({x0_ + i, y0_ + j});
    return out;
  }

  long long support_size() const {
    long long n = 0;
    for (uint8_t c : v_) n += (c != 0);
    return n;
  }

  // Tight box of the nonzero cells; empty box for the zero state.
  BoundingBox bounding_box() const {
    BoundingBox b;
    for (int j = 0; j < h_; ++j)
      for (int i = 0; i < w_; ++i)
        if (v_[size_t(j) * w_ + i]) b.include({x0_ + i, y0_ + j});
    return b;
  }

  LatticeState translated(Point shift) const {
    LatticeState c = *this;
    c.x0_ += shift.x;
    c.y0_ += shift.y;
    return c;
  }

  // Same content on a window cropped to the support box (canonical form).
  LatticeState tightened() const {
    BoundingBox b = bounding_box();
    if (b.empty()) {
      LatticeState e;
      e.mb_ = mb_;
      return e;
    }
    LatticeState out(b.min_x, b.min_y, b.width(), b.height(), mb_);
    for (int y = b.min_y; y <= b.max_y; ++y)
      for (int x = b.min_x; x <= b.max_x; ++x) out.set(x, y, get(x, y));
    return out;
  }

  friend bool operator==(const LatticeState& a, const LatticeState& b) {
    BoundingBox ba = a.bounding_box(), bb = b.bounding_box();
    if (ba.empty() || bb.empty()) return ba.empty() && bb.empty();
    if (ba != bb) return false;
    for (int y = ba.min_y; y <= ba.max_y; ++y)
      for (int x = ba.min_x; x <= ba.max_x; ++x)
        if (a.get(x, y) != b.get(x, y)) return false;
    return true;
  }

 private:
  int x0_ = 0, y0_ = 0, w_ = 0, h_ = 0;
  int mb_ = 2;
  std::vector<uint8_t> v_;
};

inline std::vector<Point> support(const LatticeState& s) { return s.support(); }
inline BoundingBox bounding_box(const LatticeState& s) { return s.bounding_box(); }

// True iff b equals a translated by shift.
inline bool translate_equal(const LatticeState& a, const LatticeState& b, Point shift) {
  return a.translated(shift) == b;
}

// --- figure text format ---------------------------------------------------
// One row per line, first line is the top row (largest y). '.' is 0, '1'-'9'
// are 1-9, 'a'-'z' are 10-35. Lines starting with '#' are comments. Parsed
// figures are anchored with the grid's bounding box centered on the origin
// (floor for even sizes).

inline int figure_char_value(char c) {
  if (c == '.') return 0;
  if (c >= '1' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'z') return c - 'a' + 10;
  return -1;
}

inline char figure_value_char(int v) {
  if (v == 0) return '.';
  if (v >= 1 && v <= 9) return char('0' + v);
  if (v >= 10 && v <= 35) return char('a' + v - 10);
  throw std::invalid_argument("figure format holds residues 0..35");
}

inline LatticeState parse_figure(std::string_view text) {
  std::vector<std::string> rows;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty() && line.front() == '#') continue;
    if (line.empty()) continue;
    rows.emplace_back(line);
  }
  if (rows.empty()) return LatticeState{};
  size_t w = rows[0].size();
  for (const std::string& r : rows)
    if (r.size() != w) throw std::invalid_argument("figure rows have unequal length");
  int h = int(rows.size());
  int x0 = -int(w - 1) / 2;
  int y0 = -(h - 1) / 2;
  LatticeState s(x0, y0, int(w), h);
  int max_v = 1;
  for (int j = 0; j < h; ++j) {
    const std::string& row = rows[size_t(h - 1 - j)];  // last line = lowest y
    for (int i = 0; i < int(w); ++i) {
      int v = figure_char_value(row[size_t(i)]);
      if (v < 0) throw std::invalid_argument(std::string("invalid figure character '") + row[size_t(i)] + "'");
      s.set(x0 + i, y0 + j, uint8_t(v));
      max_v = std::max(max_v, v);
    }
  }
  s.set_modulus_bound(max_v + 1);
  return s.tightened();
}

inline std::string format_figure(const LatticeState& s) {
  BoundingBox b = s.bounding_box();
  if (b.empty()) return ".\n";
  std::string out;
  out.reserve(size_t(b.height()) * (size_t(b.width()) + 1));
  for (int y = b.max_y; y >= b.min_y; --y) {
    for (int x = b.min_x; x <= b.max_x; ++x) out.push_back(figure_value_char(s.get(x, y)));
    out.push_back('\n');
  }
  return out;
}

}  // namespace modlap
