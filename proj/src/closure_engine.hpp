#pragma once

// Saturation of fix-space tables under tensor products, contractions,
// rotations and reflections. The engine is generic over the word model so the
// plain two-coloured and the Z_k-extended tables share one loop.
//
// Every inserted vector is queued once. Processing a vector applies the unary
// operations and tensors it with every stored vector on both sides, so each
// pair is seen after the later of the two arrives. Spaces are built in
// echelon form and brought to reduced echelon form at the end of run(), so the
// output is the least fixpoint in canonical form, independent of queue order
// or thread count.

#include "qgcat/frame.hpp"
#include "qgcat/linalg.hpp"

#include <atomic>
#include <cstddef>
#include <deque>
#include <map>
#include <thread>
#include <utility>
#include <vector>

namespace qgcat::detail {

// Model requirements:
//   using Key;
//   bool admissible(const Key&) const;
//   std::vector<bool> black(const Key&) const;       one flag per leg
//   Key rotate(const Key&) const;  Key rotate_inv(const Key&) const;
//   Key reflect(const Key&) const;
//   void contractions(const Key&, std::vector<std::pair<std::size_t, Key>>&) const;
//   void tensor_targets(const Key& u, const Key& y, std::vector<Key>&) const;
//   bool cyclic() const;  rotation is a plain cyclic shift fixing every key, so
//                         inverse rotations and the reversed tensor order add
//                         nothing to a rotation-closed space
template <class Model>
class ClosureEngine {
 public:
  using Key = typename Model::Key;

  struct Entry {
    Subspace space;
    std::vector<bool> black;
    std::vector<SparseVec> gens;
    bool full() const { return space.dim() == space.ambient(); }
  };

  ClosureEngine(const Frame& frame, Model model, int threads)
      : frame_(frame), model_(std::move(model)), threads_(threads < 1 ? 1 : threads) {}

  void seed(const Key& key, const SparseVec& v) {
    if (v.empty() || !model_.admissible(key)) return;
    Entry& e = entry(key);
    if (e.space.insert_echelon(v)) {
      e.gens.push_back(v);
      queue_.emplace_back(key, e.gens.size() - 1);
    }
  }

  void run() {
    Batch batch;
    while (!queue_.empty()) {
      batch.clear();
      std::size_t count = 0;
      while (!queue_.empty() && count < kBatchCandidates) {
        auto [key, idx] = queue_.front();
        queue_.pop_front();
        generate(key, idx, batch, count);
      }
      commit(batch);
    }
    for (auto& kv : store_) kv.second.space.finish_echelon();
  }

  const std::map<Key, Entry>& entries() const { return store_; }

 private:
  using Batch = std::map<Key, std::vector<SparseVec>>;
  static constexpr std::size_t kBatchCandidates = 1 << 14;

  Entry& entry(const Key& key) {
    auto it = store_.find(key);
    if (it != store_.end()) return it->second;
    std::vector<bool> black = model_.black(key);
    Entry e{Subspace(frame_.N, 0, static_cast<int>(black.size())), std::move(black), {}};
    return store_.emplace(key, std::move(e)).first->second;
  }

  void push(Batch& batch, std::size_t& count, const Key& target, SparseVec v) const {
    if (v.empty() || !model_.admissible(target)) return;
    auto it = store_.find(target);
    if (it != store_.end() && it->second.full()) return;
    batch[target].push_back(std::move(v));
    ++count;
  }

  void generate(const Key& key, std::size_t idx, Batch& batch, std::size_t& count) {
    const Entry& e = store_.at(key);
    const SparseVec v = e.gens[idx];
    const std::vector<bool> black = e.black;
    const std::size_t legs = black.size();

    if (legs > 0) {
      push(batch, count, model_.rotate(key), kernel::rotate(frame_, v, black));
      if (!model_.cyclic()) push(batch, count, model_.rotate_inv(key), kernel::rotate_inv(frame_, v, black));
    }
    push(batch, count, model_.reflect(key), kernel::reflect(frame_, v, black));

    contractions_.clear();
    model_.contractions(key, contractions_);
    for (const auto& [pos, target] : contractions_) {
      push(batch, count, target, kernel::contract(frame_, v, black, pos));
    }

    for (const auto& [ykey, y] : store_) {
      const std::size_t ysize = y.space.ambient();
      targets_.clear();
      model_.tensor_targets(key, ykey, targets_);
      for (const Key& t : targets_) {
        for (const SparseVec& g : y.gens) push(batch, count, t, kernel::tensor(v, g, ysize));
      }
      if (model_.cyclic()) continue;
      targets_.clear();
      model_.tensor_targets(ykey, key, targets_);
      for (const Key& t : targets_) {
        for (const SparseVec& g : y.gens) push(batch, count, t, kernel::tensor(g, v, e.space.ambient()));
      }
    }
  }

  void commit(Batch& batch) {
    std::vector<std::pair<Entry*, std::vector<SparseVec>*>> groups;
    groups.reserve(batch.size());
    for (auto& [key, cands] : batch) groups.emplace_back(&entry(key), &cands);
    std::vector<std::vector<std::size_t>> fresh(groups.size());

    auto work = [&](std::size_t g) {
      Entry& e = *groups[g].first;
      for (SparseVec& v : *groups[g].second) {
        if (e.full()) break;
        if (e.space.insert_echelon(v)) {
          e.gens.push_back(std::move(v));
          fresh[g].push_back(e.gens.size() - 1);
        }
      }
    };
    const std::size_t nthreads = std::min<std::size_t>(static_cast<std::size_t>(threads_), groups.size());
    if (nthreads <= 1) {
      for (std::size_t g = 0; g < groups.size(); ++g) work(g);
    } else {
      std::atomic<std::size_t> next{0};
      std::vector<std::thread> pool;
      for (std::size_t t = 0; t < nthreads; ++t) {
        pool.emplace_back([&] {
          for (std::size_t g = next++; g < groups.size(); g = next++) work(g);
        });
      }
      for (auto& th : pool) th.join();
    }

    std::size_t g = 0;
    for (const auto& kv : batch) {
      for (std::size_t idx : fresh[g]) queue_.emplace_back(kv.first, idx);
      ++g;
    }
  }

  const Frame& frame_;
  Model model_;
  int threads_;
  std::map<Key, Entry> store_;
  std::deque<std::pair<Key, std::size_t>> queue_;
  std::vector<std::pair<std::size_t, Key>> contractions_;
  std::vector<Key> targets_;
};

}  // namespace qgcat::detail
