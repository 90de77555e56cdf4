#include "qgcat/presets.hpp"

#include "qgcat/error.hpp"

#include <functional>
#include <map>

namespace qgcat {

namespace {

Word white(std::size_t n) { return Word::parse(std::string(n, 'w')); }

bool crossing(const std::vector<int>& lab) {
  const std::size_t n = lab.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c)
        for (std::size_t d = c + 1; d < n; ++d)
          if (lab[a] == lab[c] && lab[b] == lab[d] && lab[a] != lab[b]) return true;
  return false;
}

std::vector<Partition> noncrossing_upto(std::size_t max_points) {
  std::vector<Partition> out;
  for (std::size_t n = 1; n <= max_points; ++n) {
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int top) {
      if (cur.size() == n) {
        if (!crossing(cur)) out.push_back(Partition::one_row(white(n), cur));
        return;
      }
      for (int l = 0; l <= top + 1; ++l) {
        cur.push_back(l);
        rec(std::max(top, l));
        cur.pop_back();
      }
    };
    rec(-1);
  }
  return out;
}

}  // namespace

std::vector<std::string> preset_names() { return {"B+", "O+", "S+", "U+"}; }

bool is_preset(const std::string& name) {
  for (const auto& n : preset_names()) {
    if (n == name) return true;
  }
  return false;
}

std::vector<Partition> preset_partitions(const std::string& name) {
  const Partition pair = Partition::one_row(white(2), {0, 0});
  const Partition singleton = Partition::one_row(white(1), {0});
  if (name == "O+") return {pair};
  if (name == "U+") return {};
  if (name == "B+") return {pair, singleton};
  if (name == "S+") return noncrossing_upto(4);
  throw ParseError("unknown preset \"" + name + "\" (known: B+, O+, S+, U+)");
}

std::vector<FixGenerator> partition_generators(const std::vector<Partition>& parts, int N) {
  std::map<Word, Subspace> by_word;
  for (const Partition& p : parts) {
    const Partition flat = to_one_row(p);
    auto it = by_word.try_emplace(flat.lower, N, 0, static_cast<int>(flat.lower.size())).first;
    it->second.insert(partition_map(flat, N));
  }
  std::vector<FixGenerator> out;
  for (auto& [w, s] : by_word) out.push_back({w, std::move(s)});
  return out;
}

std::vector<FixGenerator> preset_generators(const std::string& name, int N) {
  return partition_generators(preset_partitions(name), N);
}

}  // namespace qgcat
