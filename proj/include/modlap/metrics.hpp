#pragma once

#include <charconv>
#include <cmath>
#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "modlap/lattice.hpp"

namespace modlap {

// rho_t: support size over enclosing-rectangle area; 0 for the empty state.
inline double density(const LatticeState& s) {
  BoundingBox b = s.bounding_box();
  if (b.empty()) return 0.0;
  return double(s.support_size()) / double(b.area());
}

// Fraction of box cells holding each residue 0..K-1. Sums to 1; the zero
// state is all background by convention.
inline std::vector<double> residue_densities(const LatticeState& s, int K) {
  if (K < 2) throw std::invalid_argument("K must be >= 2");
  std::vector<double> out(size_t(K), 0.0);
  BoundingBox b = s.bounding_box();
  if (b.empty()) {
    out[0] = 1.0;
    return out;
  }
  std::vector<long long> counts(size_t(K), 0);
  for (int y = b.min_y; y <= b.max_y; ++y)
    for (int x = b.min_x; x <= b.max_x; ++x) {
      uint8_t v = s.get(x, y);
      if (v >= K) throw std::invalid_argument("residue outside [0,K)");
      ++counts[v];
    }
  for (int c = 0; c < K; ++c) out[size_t(c)] = double(counts[size_t(c)]) / double(b.area());
  return out;
}

// H = -sum_c p_c ln p_c in nats, 0*ln 0 = 0. Bounded by ln K.
inline double color_entropy_of(const std::vector<double>& densities) {
  double h = 0.0;
  for (double p : densities)
    if (p > 0.0) h -= p * std::log(p);
  return h;
}

inline double color_entropy(const LatticeState& s, int K) {
  return color_entropy_of(residue_densities(s, K));
}

// kappa_{t,tau} = rho_{t+tau} / rho_t.
inline double period_ratio(const std::vector<double>& rho, size_t t, size_t tau) {
  if (t + tau >= rho.size()) throw std::out_of_range("period_ratio: t + tau beyond trace");
  if (!(rho[t] > 0.0)) throw std::domain_error("period_ratio: rho_t must be positive");
  return rho[t + tau] / rho[t];
}

struct MetricsRow {
  long long t = 0;
  double rho = 0.0;
  std::optional<double> kappa;  // rho_t / rho_{t-lag}; absent for t < lag
  double entropy = 0.0;
  long long support = 0;
  int box_w = 0, box_h = 0;
  std::vector<double> rho_c;
};

inline MetricsRow metrics_row(long long t, const LatticeState& s, int K) {
  MetricsRow r;
  r.t = t;
  r.rho = density(s);
  r.rho_c = residue_densities(s, K);
  r.entropy = color_entropy_of(r.rho_c);
  r.support = s.support_size();
  BoundingBox b = s.bounding_box();
  r.box_w = b.width();
  r.box_h = b.height();
  return r;
}

// Locale-independent, 9 significant digits.
inline std::string format_g9(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 9);
  return std::string(buf, res.ptr);
}

inline std::string metrics_csv_header(int K) {
  std::string h = "t,rho,kappa,entropy,support,box_w,box_h";
  for (int c = 0; c < K; ++c) h += ",rho_" + std::to_string(c);
  return h;
}

inline std::string metrics_csv_line(const MetricsRow& r) {
  std::string line = std::to_string(r.t);
  line += "," + format_g9(r.rho);
  line += ",";
  if (r.kappa) line += format_g9(*r.kappa);
  line += "," + format_g9(r.entropy);
  line += "," + std::to_string(r.support);
  line += "," + std::to_string(r.box_w);
  line += "," + std::to_string(r.box_h);
  for (double p : r.rho_c) line += "," + format_g9(p);
  return line;
}

// Streams rows for a trajectory; kappa at row t compares against the density
// lag steps earlier and stays empty while t < lag or the earlier density is 0.
class MetricsCsvWriter {
 public:
  MetricsCsvWriter(std::ostream& os, int K, int kappa_lag = 8)
      : os_(os), K_(K), lag_(kappa_lag) {
    if (kappa_lag < 1) throw std::invalid_argument("kappa lag must be >= 1");
    os_ << metrics_csv_header(K) << '\n';
  }

  void add(long long t, const LatticeState& s) {
    MetricsRow r = metrics_row(t, s, K_);
    rhos_.push_back(r.rho);
    size_t idx = rhos_.size() - 1;
    if (idx >= size_t(lag_) && rhos_[idx - size_t(lag_)] > 0.0)
      r.kappa = rhos_[idx] / rhos_[idx - size_t(lag_)];
    os_ << metrics_csv_line(r) << '\n';
  }

 private:
  std::ostream& os_;
  int K_;
  int lag_;
  std::vector<double> rhos_;
};

}  // namespace modlap
