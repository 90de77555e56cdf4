#pragma once

#include "qgcat/linalg.hpp"
#include "qgcat/words.hpp"

#include <compare>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace qgcat {

// Two-coloured partition. Points are numbered upper row first (left to
// right), then lower row (left to right); block[i] is the block label of
// point i, relabelled in order of first appearance.
struct Partition {
  Word upper;
  Word lower;
  std::vector<int> block;

  // `blocks` holds 1-based point lists; throws ShapeError unless they cover
  // every point exactly once.
  static Partition from_blocks(const Word& upper, const Word& lower,
                               const std::vector<std::vector<int>>& blocks);
  // Fix-vector shaped partition from a label vector on the lower row.
  static Partition one_row(const Word& lower, std::vector<int> labels);
  static Partition identity(const Word& w);

  std::size_t points() const { return upper.size() + lower.size(); }
  std::size_t block_count() const;
  std::vector<std::vector<int>> blocks_1based() const;
  std::string text() const;

  std::strong_ordering operator<=>(const Partition& other) const;
  bool operator==(const Partition&) const = default;
};

std::vector<int> canonical_labels(const std::vector<int>& labels);

// (T_p)_{j,i} = 1 when the labelling by i (upper) and j (lower) is constant on
// every block. Colours are ignored.
LinMap partition_map(const Partition& p, int N);

struct Composite {
  Partition partition;
  int loops = 0;
};
// q after p; requires upper(q) = lower(p).
Composite partition_compose(const Partition& q, const Partition& p);
Partition partition_tensor(const Partition& p, const Partition& q);
// Upside-down flip.
Partition partition_involute(const Partition& p);
// Moves every point one slot back along the boundary (upper row left to
// right, then lower row right to left). With an empty upper row this is the
// cyclic move of the last lower point to the front; points changing rows
// change colour.
Partition partition_rotate(const Partition& p);

// Frobenius form: C(w1, w2) partitions correspond to one-row partitions on
// w2 star(w1), the upper points appended in reverse order.
Partition to_one_row(const Partition& p);
Partition from_one_row(const Partition& flat, std::size_t upper_len);

// A category of partitions up to a point bound, stored through its one-row
// members. Once it contains a pair on two points of equal colour, colours are
// irrelevant and members are stored on all-white words.
class PartitionCategory {
 public:
  PartitionCategory(std::size_t max_points, bool colour_blind)
      : max_points_(max_points), colour_blind_(colour_blind) {}

  std::size_t max_points() const { return max_points_; }
  bool colour_blind() const { return colour_blind_; }

  // One-row members at the word w (upper row empty).
  std::vector<Partition> at_word(const Word& w) const;
  std::vector<Partition> morphisms(const Word& upper, const Word& lower) const;
  bool contains(const Partition& p) const;
  // Number of one-row members over all words of each point count, counting
  // every colouring separately.
  std::size_t one_row_count(std::size_t points) const;
  // Every member in canonical order. Grows fast with the point bound.
  std::vector<Partition> all() const;

  // Span of the partition maps at w.
  Subspace span_at(const Word& w, int N) const;

 private:
  friend PartitionCategory partition_closure(const std::vector<Partition>&, std::size_t, bool,
                                             std::size_t);

  std::size_t max_points_;
  bool colour_blind_;
  std::map<Word, std::set<std::vector<int>>> rows_;
};

// Least category containing the generators, identities and the pairs on "wb"
// and "bw" (plus the pair on "ww" when `orthogonal_base`), closed under
// tensor, compose, involute and rotate. Intermediates may use up to
// `work_points` points (max_points + 2 when smaller than max_points).
PartitionCategory partition_closure(const std::vector<Partition>& generators, std::size_t max_points,
                                    bool orthogonal_base = true, std::size_t work_points = 0);

}  // namespace qgcat
