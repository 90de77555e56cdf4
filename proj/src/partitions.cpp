#include "qgcat/partitions.hpp"

#include "qgcat/error.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace qgcat {

namespace {

char flip(char c) { return c == 'w' ? 'b' : 'w'; }

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

Word white_word(std::size_t n) { return Word::parse(std::string(n, 'w')); }

}  // namespace

std::vector<int> canonical_labels(const std::vector<int>& labels) {
  std::map<int, int> rename;
  std::vector<int> out(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    auto [it, fresh] = rename.try_emplace(labels[i], static_cast<int>(rename.size()));
    out[i] = it->second;
  }
  return out;
}

Partition Partition::from_blocks(const Word& upper, const Word& lower,
                                 const std::vector<std::vector<int>>& blocks) {
  const std::size_t n = upper.size() + lower.size();
  std::vector<int> label(n, -1);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) throw ShapeError("empty block in partition");
    for (int pt : blocks[b]) {
      if (pt < 1 || static_cast<std::size_t>(pt) > n) {
        throw ShapeError("block point " + std::to_string(pt) + " outside 1.." + std::to_string(n));
      }
      if (label[pt - 1] != -1) throw ShapeError("point " + std::to_string(pt) + " in two blocks");
      label[pt - 1] = static_cast<int>(b);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (label[i] == -1) throw ShapeError("point " + std::to_string(i + 1) + " in no block");
  }
  return Partition{upper, lower, canonical_labels(label)};
}

Partition Partition::one_row(const Word& lower, std::vector<int> labels) {
  if (labels.size() != lower.size()) throw ShapeError("label count does not match the word");
  return Partition{Word(), lower, canonical_labels(labels)};
}

Partition Partition::identity(const Word& w) {
  std::vector<int> label(2 * w.size());
  for (std::size_t i = 0; i < w.size(); ++i) label[i] = label[w.size() + i] = static_cast<int>(i);
  return Partition{w, w, label};
}

std::size_t Partition::block_count() const {
  int m = -1;
  for (int b : block) m = std::max(m, b);
  return static_cast<std::size_t>(m + 1);
}

std::vector<std::vector<int>> Partition::blocks_1based() const {
  std::vector<std::vector<int>> out(block_count());
  for (std::size_t i = 0; i < block.size(); ++i) out[block[i]].push_back(static_cast<int>(i) + 1);
  return out;
}

std::string Partition::text() const {
  std::string s = upper.text() + "/" + lower.text() + ":";
  bool first_block = true;
  for (const auto& b : blocks_1based()) {
    s += first_block ? "{" : ",{";
    first_block = false;
    for (std::size_t i = 0; i < b.size(); ++i) s += (i ? "," : "") + std::to_string(b[i]);
    s += "}";
  }
  return s;
}

std::strong_ordering Partition::operator<=>(const Partition& other) const {
  if (auto c = points() <=> other.points(); c != 0) return c;
  if (auto c = upper <=> other.upper; c != 0) return c;
  if (auto c = lower <=> other.lower; c != 0) return c;
  return block <=> other.block;
}

LinMap partition_map(const Partition& p, int N) {
  const std::size_t m = p.upper.size();
  const std::size_t n = p.lower.size();
  LinMap t(N, static_cast<int>(m), static_cast<int>(n));
  const std::size_t blocks = p.block_count();
  // Each assignment of values to blocks gives exactly one nonzero entry.
  std::vector<int> value(blocks, 0);
  for (;;) {
    std::size_t row = 0;
    std::size_t col = 0;
    for (std::size_t i = 0; i < m; ++i) col = col * N + value[p.block[i]];
    for (std::size_t j = 0; j < n; ++j) row = row * N + value[p.block[m + j]];
    t.at(row, col) = 1;
    std::size_t b = 0;
    while (b < blocks && ++value[b] == N) value[b++] = 0;
    if (b == blocks) break;
  }
  return t;
}

Composite partition_compose(const Partition& q, const Partition& p) {
  if (q.upper != p.lower) {
    throw ShapeError("cannot compose partitions: upper row \"" + q.upper.text() +
                     "\" does not match lower row \"" + p.lower.text() + "\"");
  }
  const std::size_t m = p.upper.size();
  const std::size_t n = p.lower.size();
  const std::size_t r = q.lower.size();
  const std::size_t total = m + n + r;
  UnionFind uf(total);
  // Points of p occupy 0..m+n-1, points of q occupy m..total-1.
  {
    std::map<int, int> first;
    for (std::size_t i = 0; i < m + n; ++i) {
      auto [it, fresh] = first.try_emplace(p.block[i], static_cast<int>(i));
      if (!fresh) uf.unite(static_cast<int>(i), it->second);
    }
  }
  {
    std::map<int, int> first;
    for (std::size_t i = 0; i < n + r; ++i) {
      const int pt = static_cast<int>(m + i);
      auto [it, fresh] = first.try_emplace(q.block[i], pt);
      if (!fresh) uf.unite(pt, it->second);
    }
  }
  std::vector<int> label;
  std::set<int> outer;
  for (std::size_t i = 0; i < m; ++i) label.push_back(uf.find(static_cast<int>(i)));
  for (std::size_t i = m + n; i < total; ++i) label.push_back(uf.find(static_cast<int>(i)));
  outer.insert(label.begin(), label.end());
  std::set<int> inner;
  for (std::size_t i = m; i < m + n; ++i) {
    int root = uf.find(static_cast<int>(i));
    if (!outer.count(root)) inner.insert(root);
  }
  return Composite{Partition{p.upper, q.lower, canonical_labels(label)}, static_cast<int>(inner.size())};
}

Partition partition_tensor(const Partition& p, const Partition& q) {
  const int shift = static_cast<int>(p.block_count());
  const std::size_t pm = p.upper.size();
  const std::size_t qm = q.upper.size();
  std::vector<int> label;
  for (std::size_t i = 0; i < pm; ++i) label.push_back(p.block[i]);
  for (std::size_t i = 0; i < qm; ++i) label.push_back(q.block[i] + shift);
  for (std::size_t i = pm; i < p.block.size(); ++i) label.push_back(p.block[i]);
  for (std::size_t i = qm; i < q.block.size(); ++i) label.push_back(q.block[i] + shift);
  return Partition{p.upper + q.upper, p.lower + q.lower, canonical_labels(label)};
}

Partition partition_involute(const Partition& p) {
  const std::size_t m = p.upper.size();
  std::vector<int> label(p.block.begin() + static_cast<std::ptrdiff_t>(m), p.block.end());
  label.insert(label.end(), p.block.begin(), p.block.begin() + static_cast<std::ptrdiff_t>(m));
  return Partition{p.lower, p.upper, canonical_labels(label)};
}

Partition partition_rotate(const Partition& p) {
  const std::size_t m = p.upper.size();
  const std::size_t n = p.lower.size();
  const std::size_t total = m + n;
  if (total == 0) return p;
  // Boundary slots: upper 0..m-1, then lower n-1..0. Slot s maps to the point index.
  auto point_of_slot = [&](std::size_t s) { return s < m ? s : m + (n - 1 - (s - m)); };
  auto colour_of_point = [&](std::size_t pt) { return pt < m ? p.upper[pt] : p.lower[pt - m]; };
  std::vector<int> label(total);
  std::string up(m, 'w'), low(n, 'w');
  for (std::size_t s = 0; s < total; ++s) {
    const std::size_t src = point_of_slot(s);
    const std::size_t dst = point_of_slot((s + total - 1) % total);
    label[dst] = p.block[src];
    char c = colour_of_point(src);
    if ((src < m) != (dst < m)) c = flip(c);
    (dst < m ? up[dst] : low[dst - m]) = c;
  }
  return Partition{Word::parse(up), Word::parse(low), canonical_labels(label)};
}

Partition to_one_row(const Partition& p) {
  const std::size_t m = p.upper.size();
  std::vector<int> label(p.block.begin() + static_cast<std::ptrdiff_t>(m), p.block.end());
  for (std::size_t i = m; i-- > 0;) label.push_back(p.block[i]);
  return Partition{Word(), p.lower + word_star(p.upper), canonical_labels(label)};
}

Partition from_one_row(const Partition& flat, std::size_t upper_len) {
  const std::size_t total = flat.lower.size();
  if (!flat.upper.empty() || upper_len > total) throw ShapeError("not a one-row partition of that size");
  const std::size_t n = total - upper_len;
  std::vector<int> label;
  for (std::size_t i = 0; i < upper_len; ++i) label.push_back(flat.block[total - 1 - i]);
  for (std::size_t j = 0; j < n; ++j) label.push_back(flat.block[j]);
  Word upper = word_star(flat.lower.substr(n));
  return Partition{upper, flat.lower.substr(0, n), canonical_labels(label)};
}

std::vector<Partition> PartitionCategory::at_word(const Word& w) const {
  std::vector<Partition> out;
  auto it = rows_.find(colour_blind_ ? white_word(w.size()) : w);
  if (it == rows_.end()) return out;
  for (const auto& labels : it->second) out.push_back(Partition{Word(), w, labels});
  return out;
}

std::vector<Partition> PartitionCategory::morphisms(const Word& upper, const Word& lower) const {
  std::vector<Partition> out;
  for (const auto& flat : at_word(lower + word_star(upper))) out.push_back(from_one_row(flat, upper.size()));
  std::sort(out.begin(), out.end());
  return out;
}

bool PartitionCategory::contains(const Partition& p) const {
  Partition flat = to_one_row(p);
  auto it = rows_.find(colour_blind_ ? white_word(flat.lower.size()) : flat.lower);
  return it != rows_.end() && it->second.count(flat.block) > 0;
}

std::size_t PartitionCategory::one_row_count(std::size_t points) const {
  std::size_t count = 0;
  for (const auto& [w, set] : rows_) {
    if (w.size() != points) continue;
    count += set.size() * (colour_blind_ ? (std::size_t{1} << points) : 1);
  }
  return count;
}

std::vector<Partition> PartitionCategory::all() const {
  std::vector<Partition> out;
  for (const Word& w : enumerate_words(static_cast<int>(max_points_))) {
    for (const auto& flat : at_word(w)) {
      for (std::size_t m = 0; m <= w.size(); ++m) out.push_back(from_one_row(flat, m));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Subspace PartitionCategory::span_at(const Word& w, int N) const {
  Subspace s(N, 0, static_cast<int>(w.size()));
  for (const auto& p : at_word(w)) s.insert(partition_map(p, N));
  return s;
}

PartitionCategory partition_closure(const std::vector<Partition>& generators, std::size_t max_points,
                                    bool orthogonal_base, std::size_t work_points) {
  if (work_points < max_points) work_points = max_points + 2;
  std::vector<Partition> seeds;
  for (const auto& g : generators) {
    if (g.points() > work_points) {
      throw CutoffError("generator " + g.text() + " exceeds the point bound " + std::to_string(work_points));
    }
    seeds.push_back(to_one_row(g));
  }
  for (const char* w : {"wb", "bw"}) seeds.push_back(Partition::one_row(Word::parse(w), {0, 0}));
  if (orthogonal_base) seeds.push_back(Partition::one_row(Word::parse("ww"), {0, 0}));

  PartitionCategory cat(max_points, false);
  std::deque<std::pair<Word, std::vector<int>>> queue;
  std::vector<std::pair<Word, std::vector<int>>> members;
  int generation = 0;

  auto switch_to_colour_blind = [&]() {
    cat.colour_blind_ = true;
    std::map<Word, std::set<std::vector<int>>> merged;
    for (auto& [w, set] : cat.rows_) merged[white_word(w.size())].insert(set.begin(), set.end());
    cat.rows_ = std::move(merged);
    queue.clear();
    members.clear();
    ++generation;
    for (const auto& [w, set] : cat.rows_) {
      for (const auto& labels : set) {
        queue.emplace_back(w, labels);
        members.emplace_back(w, labels);
      }
    }
  };

  auto add = [&](Word w, std::vector<int> labels) {
    if (w.size() > work_points) return;
    labels = canonical_labels(labels);
    if (cat.colour_blind_) w = white_word(w.size());
    if (!cat.rows_[w].insert(labels).second) return;
    queue.emplace_back(w, labels);
    members.emplace_back(w, labels);
    if (!cat.colour_blind_ && w.size() == 2 && w[0] == w[1] && labels[0] == labels[1]) {
      switch_to_colour_blind();
    }
  };

  for (const auto& s : seeds) add(s.lower, s.block);

  while (!queue.empty()) {
    auto [w, labels] = queue.front();
    queue.pop_front();
    const std::size_t k = w.size();
    if (k > 0) {
      // Rotation: last point to the front.
      Word rw = w.substr(k - 1) + w.substr(0, k - 1);
      std::vector<int> rl{labels.back()};
      rl.insert(rl.end(), labels.begin(), labels.end() - 1);
      add(rw, rl);
      // Reflection: reverse and invert colours.
      add(word_star(w), std::vector<int>(labels.rbegin(), labels.rend()));
    }
    // Contraction of neighbours with opposite colours (any neighbours once colour blind).
    for (std::size_t i = 0; i + 1 < k; ++i) {
      if (!cat.colour_blind_ && w[i] == w[i + 1]) continue;
      std::vector<int> cl;
      const int a = labels[i];
      const int b = labels[i + 1];
      for (std::size_t j = 0; j < k; ++j) {
        if (j == i || j == i + 1) continue;
        cl.push_back(labels[j] == b ? a : labels[j]);
      }
      add(w.substr(0, i) + w.substr(i + 2), cl);
    }
    // Tensor with every stored member, on both sides.
    if (k == 0) continue;
    const int gen = generation;
    const std::size_t count = members.size();
    for (std::size_t idx = 0; idx < count && gen == generation; ++idx) {
      const auto [v, other] = members[idx];
      if (v.empty() || k + v.size() > work_points) continue;
      std::vector<int> left = labels;
      for (int x : other) left.push_back(x + 1000);
      add(w + v, left);
      std::vector<int> right = other;
      for (int x : labels) right.push_back(x + 1000);
      add(v + w, right);
    }
  }
  return cat;
}

}  // namespace qgcat
