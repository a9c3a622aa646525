#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace modlap {

// Eventually periodic modulus schedule: finite prefix + nonempty cycle.
// k_t = prefix[t] for t < |prefix|, then the cycle repeats forever.
struct Schedule {
  std::vector<int> prefix;
  std::vector<int> cycle;

  int at(long long t) const {
    if (t < 0) throw std::out_of_range("schedule index negative");
    if (t < (long long)prefix.size()) return prefix[size_t(t)];
    return cycle[size_t((t - (long long)prefix.size()) % (long long)cycle.size())];
  }

  // Smallest K with every modulus <= K; residues live in [0, K).
  int modulus_bound() const {
    int k = 2;
    for (int v : prefix) k = std::max(k, v);
    for (int v : cycle) k = std::max(k, v);
    return k;
  }

  bool constant() const {
    if (cycle.size() != 1) return false;
    for (int v : prefix)
      if (v != cycle[0]) return false;
    return true;
  }

  std::string to_string() const {
    std::string out;
    for (int v : prefix) out += std::to_string(v) + ",";
    out += "[";
    for (size_t i = 0; i < cycle.size(); ++i) out += (i ? "," : "") + std::to_string(cycle[i]);
    out += "]*";
    return out;
  }

  friend bool operator==(const Schedule&, const Schedule&) = default;
};

// Grammar: comma-separated moduli, the last item carrying '*' as the cycle:
// "2*", "[2,3]*", "2,3,[2]*", "2,[3,2,2]*". Whitespace is ignored. Moduli
// must be in [2, 36] (36 = figure-format residue limit).
inline Schedule parse_schedule(std::string_view text) {
  std::string s;
  s.reserve(text.size());
  for (char c : text)
    if (!std::isspace((unsigned char)c)) s.push_back(c);
  if (s.empty()) throw std::invalid_argument("empty schedule");

  auto fail = [](const std::string& why) -> void { throw std::invalid_argument("bad schedule: " + why); };
  auto check_mod = [&](long v) {
    if (v < 2) fail("moduli must be >= 2");
    if (v > 36) fail("moduli above 36 are unsupported");
    return int(v);
  };

  Schedule sch;
  size_t i = 0;
  bool saw_cycle = false;
  while (i < s.size()) {
    if (saw_cycle) fail("items after the cycle");
    if (s[i] == '[') {
      size_t close = s.find(']', i);
      if (close == std::string::npos) fail("unclosed '['");
      std::string body = s.substr(i + 1, close - i - 1);
      if (close + 1 >= s.size() || s[close + 1] != '*') fail("cycle group needs a trailing '*'");
      size_t p = 0;
      while (p <= body.size()) {
        size_t comma = body.find(',', p);
        std::string tok = body.substr(p, comma == std::string::npos ? body.size() - p : comma - p);
        if (tok.empty()) fail("empty modulus in cycle");
        size_t used = 0;
        long v = std::stol(tok, &used);
        if (used != tok.size()) fail("non-numeric modulus '" + tok + "'");
        sch.cycle.push_back(check_mod(v));
        if (comma == std::string::npos) break;
        p = comma + 1;
      }
      saw_cycle = true;
      i = close + 2;
      if (i < s.size()) fail("items after the cycle");
      break;
    }
    size_t j = i;
    while (j < s.size() && std::isdigit((unsigned char)s[j])) ++j;
    if (j == i) fail(std::string("unexpected character '") + s[i] + "'");
    int v = check_mod(std::stol(s.substr(i, j - i)));
    if (j < s.size() && s[j] == '*') {
      sch.cycle.push_back(v);
      saw_cycle = true;
      i = j + 1;
      if (i < s.size()) fail("items after the cycle");
      break;
    }
    sch.prefix.push_back(v);
    if (j < s.size()) {
      if (s[j] != ',') fail(std::string("expected ',' before '") + s[j] + "'");
      ++j;
      if (j == s.size()) fail("trailing comma");
    }
    i = j;
  }
  if (!saw_cycle) fail("schedule needs a repeating tail ('k*' or '[...]*')");
  if (sch.cycle.empty()) fail("empty cycle");
  return sch;
}

inline Schedule constant_schedule(int k) {
  Schedule s;
  s.cycle = {k};
  if (k < 2 || k > 36) throw std::invalid_argument("modulus outside [2,36]");
  return s;
}

}  // namespace modlap
