#pragma once

// Independent reference computations: spans of partition vectors built by
// direct enumeration, without the partition module or the closure engine.

#include "qgcat/linalg.hpp"
#include "qgcat/words.hpp"

#include <functional>
#include <string>
#include <vector>

namespace qgcat::oracle {

// All set partitions of n points as restricted growth strings.
inline std::vector<std::vector<int>> set_partitions(std::size_t n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int max_label) {
    if (cur.size() == n) {
      out.push_back(cur);
      return;
    }
    for (int l = 0; l <= max_label + 1; ++l) {
      cur.push_back(l);
      rec(std::max(max_label, l));
      cur.pop_back();
    }
  };
  rec(-1);
  return out;
}

inline bool noncrossing(const std::vector<int>& lab) {
  const std::size_t n = lab.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c)
        for (std::size_t d = c + 1; d < n; ++d)
          if (lab[a] == lab[c] && lab[b] == lab[d] && lab[a] != lab[b]) return false;
  return true;
}

inline std::vector<std::vector<std::size_t>> blocks_of(const std::vector<int>& lab) {
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t i = 0; i < lab.size(); ++i) {
    if (static_cast<std::size_t>(lab[i]) >= out.size()) out.resize(lab[i] + 1);
    out[lab[i]].push_back(i);
  }
  return out;
}

// Block-size window for the easy families (max_block 0 means unbounded).
struct Family {
  int min_block = 1;
  int max_block = 0;
  // Pairs must join opposite colours.
  bool coloured = false;
};

inline const Family kPairings{2, 2, false};
inline const Family kColouredPairings{2, 2, true};
inline const Family kAllPartitions{1, 0, false};
inline const Family kPairsAndSingletons{1, 2, false};

inline bool admits(const Family& f, const Word& w, const std::vector<int>& lab) {
  if (!noncrossing(lab)) return false;
  for (const auto& b : blocks_of(lab)) {
    const int s = static_cast<int>(b.size());
    if (s < f.min_block || (f.max_block > 0 && s > f.max_block)) return false;
    if (f.coloured && (s != 2 || w[b[0]] == w[b[1]])) return false;
  }
  return true;
}

// Vector sum over index tuples constant on every block.
inline std::vector<Scalar> partition_vector(const std::vector<int>& lab, int N) {
  const std::size_t n = lab.size();
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= static_cast<std::size_t>(N);
  std::vector<Scalar> v(total);
  std::vector<int> digit(n);
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::size_t r = idx;
    for (std::size_t i = n; i-- > 0;) {
      digit[i] = static_cast<int>(r % N);
      r /= N;
    }
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = i + 1; j < n && ok; ++j)
        if (lab[i] == lab[j] && digit[i] != digit[j]) ok = false;
    if (ok) v[idx] = Scalar(1);
  }
  return v;
}

inline Subspace span_at(const Family& f, const Word& w, int N) {
  Subspace s(N, 0, static_cast<int>(w.size()));
  for (const auto& lab : set_partitions(w.size())) {
    if (admits(f, w, lab)) s.insert_dense(partition_vector(lab, N));
  }
  return s;
}

}  // namespace qgcat::oracle
