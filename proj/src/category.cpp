#include "qgcat/category.hpp"

#include "closure_engine.hpp"
#include "qgcat/error.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <thread>
#include <tuple>

namespace qgcat {

namespace {

int resolve_threads(const ClosureOptions& options) {
  if (options.threads > 0) return options.threads;
  if (const char* env = std::getenv("QGCAT_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

SparseVec column_vector(const LinMap& m) { return sparse_from_dense(m.entries()); }

struct WordModel {
  using Key = Word;
  int work;

  bool admissible(const Word& w) const { return static_cast<int>(w.size()) <= work; }
  std::vector<bool> black(const Word& w) const { return colour_flags(w); }
  Word rotate(const Word& w) const { return w.substr(w.size() - 1) + w.substr(0, w.size() - 1); }
  Word rotate_inv(const Word& w) const { return w.substr(1) + w.substr(0, 1); }
  Word reflect(const Word& w) const { return word_star(w); }
  void contractions(const Word& w, std::vector<std::pair<std::size_t, Word>>& out) const {
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (w[i] != w[i + 1]) out.emplace_back(i, w.substr(0, i) + w.substr(i + 2));
    }
  }
  void tensor_targets(const Word& u, const Word& y, std::vector<Word>& out) const {
    if (u.empty() || y.empty()) return;
    if (static_cast<int>(u.size() + y.size()) <= work) out.push_back(u + y);
  }
  bool cyclic() const { return false; }
};

// One key per length, the all-white word. Valid when every colouring of a
// word carries the same space; the alternating flags make every neighbour
// pair contractible, and with F = 1 the kernels ignore colours. Rotation is
// then a cyclic shift, so contracting the first pair reaches every pair.
struct LengthModel {
  using Key = Word;
  int work;

  static Word white(std::size_t n) { return Word::parse(std::string(n, 'w')); }

  bool admissible(const Word& w) const { return static_cast<int>(w.size()) <= work; }
  std::vector<bool> black(const Word& w) const {
    std::vector<bool> out(w.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = i % 2 == 1;
    return out;
  }
  Word rotate(const Word& w) const { return w; }
  Word rotate_inv(const Word& w) const { return w; }
  Word reflect(const Word& w) const { return w; }
  void contractions(const Word& w, std::vector<std::pair<std::size_t, Word>>& out) const {
    if (w.size() >= 2) out.emplace_back(0, white(w.size() - 2));
  }
  void tensor_targets(const Word& u, const Word& y, std::vector<Word>& out) const {
    if (u.empty() || y.empty()) return;
    if (static_cast<int>(u.size() + y.size()) <= work) out.push_back(white(u.size() + y.size()));
  }
  bool cyclic() const { return true; }
};

std::int64_t abs_exponents(const ExtWord& w) {
  std::int64_t s = w.lead() < 0 ? -w.lead() : w.lead();
  for (const auto& q : w.body()) s += q.exp < 0 ? -q.exp : q.exp;
  return s;
}

struct ExtModel {
  using Key = ExtWord;
  std::int64_t k;
  int squares;
  int budget;

  bool admissible(const ExtWord& w) const {
    if (static_cast<int>(w.square_count()) > squares) return false;
    return k != 0 || abs_exponents(w) <= budget;
  }
  std::vector<bool> black(const ExtWord& w) const {
    std::vector<bool> out;
    for (const auto& q : w.body()) out.push_back(q.black);
    return out;
  }
  ExtWord rotate(const ExtWord& w) const {
    auto body = w.body();
    std::rotate(body.rbegin(), body.rbegin() + 1, body.rend());
    return ExtWord(k, 0, std::move(body)).cyclic_normal();
  }
  ExtWord rotate_inv(const ExtWord& w) const {
    auto body = w.body();
    std::rotate(body.begin(), body.begin() + 1, body.end());
    return ExtWord(k, 0, std::move(body)).cyclic_normal();
  }
  ExtWord reflect(const ExtWord& w) const { return ext_star(w).cyclic_normal(); }
  void contractions(const ExtWord& w, std::vector<std::pair<std::size_t, ExtWord>>& out) const {
    const auto& body = w.body();
    for (std::size_t i = 0; i + 1 < body.size(); ++i) {
      if (body[i].black == body[i + 1].black || body[i].exp != 0) continue;
      std::int64_t lead = w.lead();
      std::vector<ExtWord::Letter> rest(body.begin(), body.begin() + static_cast<std::ptrdiff_t>(i));
      (i == 0 ? lead : rest.back().exp) += body[i + 1].exp;
      rest.insert(rest.end(), body.begin() + static_cast<std::ptrdiff_t>(i + 2), body.end());
      out.emplace_back(i, ExtWord(k, lead, std::move(rest)).cyclic_normal());
    }
  }
  // A vector at the normal form u is also a vector at t^c u' (u' the body with
  // its last exponent lowered by c), so concatenation sees every shift.
  void tensor_targets(const ExtWord& u, const ExtWord& y, std::vector<ExtWord>& out) const {
    if (u.square_count() == 0 && u.lead() == 0) return;
    if (y.square_count() == 0 && y.lead() == 0) return;
    if (static_cast<int>(u.square_count() + y.square_count()) > squares) return;
    auto add = [&](const ExtWord& w) {
      const ExtWord n = w.cyclic_normal();
      if (admissible(n) && std::find(out.begin(), out.end(), n) == out.end()) out.push_back(n);
    };
    if (u.square_count() == 0) {
      add(ext_concat(u, y));
      return;
    }
    std::int64_t lo = 0;
    std::int64_t hi = k - 1;
    if (k == 0) {
      lo = -2 * static_cast<std::int64_t>(budget);
      hi = 2 * static_cast<std::int64_t>(budget);
    }
    for (std::int64_t c = lo; c <= hi; ++c) {
      auto body = u.body();
      body.back().exp -= c;
      add(ext_concat(ExtWord(k, c, std::move(body)), y));
    }
  }
  bool cyclic() const { return false; }
};

void check_frame(const FixTable& a, const FixTable& b) {
  if (!(a.frame() == b.frame())) throw ShapeError("tables have different frames");
}

}  // namespace

std::string semantics_text(Semantics s) { return s == Semantics::exact ? "exact" : "lower_bound"; }

// ---------------------------------------------------------------- FixTable

FixTable::FixTable(Frame frame, int report_cutoff, int work_cutoff, Semantics semantics)
    : frame_(std::move(frame)), report_(report_cutoff), work_(work_cutoff), semantics_(semantics) {
  if (report_ < 0 || work_ < report_) {
    throw ShapeError("cutoffs need 0 <= report <= work, got " + std::to_string(report_) + " and " +
                     std::to_string(work_));
  }
  std::vector<std::shared_ptr<const Subspace>> zeros;
  for (int n = 0; n <= work_; ++n) zeros.push_back(std::make_shared<const Subspace>(frame_.N, 0, n));
  const std::size_t count = word_count_upto(work_);
  spaces_.reserve(count);
  for (std::size_t i = 0; i < count; ++i) spaces_.push_back(zeros[word_from_index(i).size()]);
}

std::size_t FixTable::checked_index(const Word& w) const {
  if (static_cast<int>(w.size()) > work_) {
    throw CutoffError("word \"" + w.text() + "\" is longer than the work cutoff " + std::to_string(work_));
  }
  return word_index(w);
}

const Subspace& FixTable::space(const Word& w) const { return *spaces_[checked_index(w)]; }

std::shared_ptr<const Subspace> FixTable::shared_space(const Word& w) const { return spaces_[checked_index(w)]; }

void FixTable::set_space(const Word& w, Subspace s) { set_space(w, std::make_shared<const Subspace>(std::move(s))); }

void FixTable::set_space(const Word& w, std::shared_ptr<const Subspace> s) {
  const std::size_t i = checked_index(w);
  if (s->dim_N() != frame_.N || s->dom_len() != 0 || s->cod_len() != static_cast<int>(w.size())) {
    throw ShapeError("space of shape " + s->shape_text() + " does not fit the word \"" + w.text() + "\"");
  }
  spaces_[i] = std::move(s);
}

// ---------------------------------------------------------------- closure

namespace {

template <class Engine>
void seed_plain(Engine& engine, const Frame& frame, const std::vector<FixGenerator>& generators) {
  engine.seed(Word(), SparseVec{{0, Scalar(1)}});
  engine.seed(Word::parse("wb"), column_vector(frame.xi_wb));
  engine.seed(Word::parse("bw"), column_vector(frame.xi_bw));
  for (const auto& g : generators) {
    for (const auto& row : g.space.rows()) engine.seed(g.word, row);
  }
}

// With F = 1, the pairing on "ww" makes u equal to its conjugate, so all
// colourings of a word share one space. Probed with a short closure.
bool colour_blind(const Frame& frame, const std::vector<FixGenerator>& generators, int threads) {
  if (!(frame.F == Matrix::identity(frame.N))) return false;
  constexpr int kProbe = 4;
  detail::ClosureEngine<WordModel> probe(frame, WordModel{kProbe}, threads);
  seed_plain(probe, frame, generators);
  probe.run();
  const auto it = probe.entries().find(Word::parse("ww"));
  return it != probe.entries().end() && it->second.space.contains_vector(column_vector(frame.xi_wb));
}

}  // namespace

FixTable closure(const Frame& frame, const std::vector<FixGenerator>& generators, int report_cutoff,
                 int work_cutoff, const ClosureOptions& options) {
  FixTable table(frame, report_cutoff, work_cutoff, Semantics::lower_bound);
  for (const auto& g : generators) {
    if (g.space.dim_N() != frame.N || g.space.dom_len() != 0 ||
        g.space.cod_len() != static_cast<int>(g.word.size())) {
      throw ShapeError("generator at \"" + g.word.text() + "\" has shape " + g.space.shape_text() +
                       ", expected a fix space with N = " + std::to_string(frame.N));
    }
    if (static_cast<int>(g.word.size()) > work_cutoff) {
      throw CutoffError("generator word \"" + g.word.text() + "\" exceeds the work cutoff " +
                        std::to_string(work_cutoff));
    }
  }

  const int threads = resolve_threads(options);
  if (options.colour_blind && colour_blind(frame, generators, threads)) {
    detail::ClosureEngine<LengthModel> engine(frame, LengthModel{work_cutoff}, threads);
    engine.seed(Word(), SparseVec{{0, Scalar(1)}});
    engine.seed(LengthModel::white(2), column_vector(frame.xi_wb));
    for (const auto& g : generators) {
      for (const auto& row : g.space.rows()) engine.seed(LengthModel::white(g.word.size()), row);
    }
    engine.run();
    std::vector<std::shared_ptr<const Subspace>> by_length(static_cast<std::size_t>(work_cutoff) + 1);
    for (const auto& [w, e] : engine.entries()) by_length[w.size()] = std::make_shared<const Subspace>(e.space);
    for (const Word& w : enumerate_words(work_cutoff)) {
      if (by_length[w.size()]) table.set_space(w, by_length[w.size()]);
    }
    return table;
  }

  detail::ClosureEngine<WordModel> engine(frame, WordModel{work_cutoff}, threads);
  seed_plain(engine, frame, generators);
  engine.run();
  for (const auto& [w, e] : engine.entries()) table.set_space(w, e.space);
  return table;
}

Subspace mor_space(const FixTable& table, const Word& w1, const Word& w2) {
  if (static_cast<int>(w1.size() + w2.size()) > table.report_cutoff()) {
    throw CutoffError("|w1| + |w2| = " + std::to_string(w1.size() + w2.size()) +
                      " exceeds the report cutoff " + std::to_string(table.report_cutoff()));
  }
  const int N = table.N();
  Subspace out(N, static_cast<int>(w1.size()), static_cast<int>(w2.size()));
  const Word flat = w2 + word_star(w1);
  for (const LinMap& eta : table.space(flat).basis()) {
    out.insert(mor_from_fix(table.frame(), eta, w1, w2));
  }
  return out;
}

// ---------------------------------------------------------------- lattice ops

std::optional<Word> table_difference(const FixTable& a, const FixTable& b) {
  check_frame(a, b);
  const int L = std::min(a.report_cutoff(), b.report_cutoff());
  for (const Word& w : enumerate_words(L)) {
    if (a.shared_space(w) != b.shared_space(w) && !(a.space(w) == b.space(w))) return w;
  }
  return std::nullopt;
}

bool table_equal(const FixTable& a, const FixTable& b) { return !table_difference(a, b).has_value(); }

bool table_leq(const FixTable& a, const FixTable& b) {
  check_frame(a, b);
  const int L = std::min(a.report_cutoff(), b.report_cutoff());
  for (const Word& w : enumerate_words(L)) {
    if (!b.space(w).contains(a.space(w))) return false;
  }
  return true;
}

FixTable table_intersect(const FixTable& a, const FixTable& b) {
  check_frame(a, b);
  const Semantics s = a.semantics() == Semantics::exact && b.semantics() == Semantics::exact
                          ? Semantics::exact
                          : Semantics::lower_bound;
  FixTable out(a.frame(), std::min(a.report_cutoff(), b.report_cutoff()),
               std::min(a.work_cutoff(), b.work_cutoff()), s);
  // Shared inputs give shared outputs.
  std::map<std::pair<const Subspace*, const Subspace*>, std::shared_ptr<const Subspace>> seen;
  for (const Word& w : enumerate_words(out.work_cutoff())) {
    auto sa = a.shared_space(w);
    auto sb = b.shared_space(w);
    auto& slot = seen[{sa.get(), sb.get()}];
    if (!slot) {
      if (sb->dim() == sb->ambient()) {
        slot = sa;
      } else if (sa->dim() == sa->ambient()) {
        slot = sb;
      } else {
        slot = std::make_shared<const Subspace>(intersect(*sa, *sb));
      }
    }
    out.set_space(w, slot);
  }
  return out;
}

std::vector<FixGenerator> table_generators(const FixTable& t) {
  std::vector<FixGenerator> out;
  for (const Word& w : enumerate_words(t.work_cutoff())) {
    if (!t.space(w).is_zero()) out.push_back({w, t.space(w)});
  }
  return out;
}

FixTable table_join(const FixTable& a, const FixTable& b, const ClosureOptions& options) {
  check_frame(a, b);
  const int report = std::min(a.report_cutoff(), b.report_cutoff());
  const int work = std::min(a.work_cutoff(), b.work_cutoff());
  std::vector<FixGenerator> gens;
  for (const FixTable* t : {&a, &b}) {
    for (const Word& w : enumerate_words(work)) {
      if (!t->space(w).is_zero()) gens.push_back({w, t->space(w)});
    }
  }
  return closure(a.frame(), gens, report, work, options);
}

FixTable full_table(const Frame& frame, std::int64_t k, int cutoff) {
  FixTable out(frame, cutoff, cutoff, Semantics::exact);
  std::vector<std::shared_ptr<const Subspace>> full;
  for (int n = 0; n <= cutoff; ++n) full.push_back(std::make_shared<const Subspace>(Subspace::full(frame.N, 0, n)));
  for (const Word& w : enumerate_words(cutoff)) {
    const std::int64_t c = colour_sum(w);
    const bool keep = k == 0 ? c == 0 : c % k == 0;
    if (keep) out.set_space(w, full[w.size()]);
  }
  return out;
}

// ---------------------------------------------------------------- ExtFixTable

ExtFixTable::ExtFixTable(Frame frame, std::int64_t modulus, int square_cutoff, int exponent_budget,
                         Semantics semantics)
    : frame_(std::move(frame)),
      k_(modulus),
      squares_(square_cutoff),
      budget_(exponent_budget < 0 ? square_cutoff : exponent_budget),
      semantics_(semantics) {
  if (k_ < 0) throw ShapeError("negative modulus " + std::to_string(k_));
}

bool ExtFixTable::within_cutoffs(const ExtWord& key) const {
  if (static_cast<int>(key.square_count()) > squares_) return false;
  return k_ != 0 || abs_exponents(key) <= budget_;
}

bool ExtFixTable::covers(const ExtWord& w) const {
  if (w.modulus() != k_) return false;
  const ExtWord key = w.cyclic_normal();
  if (!within_cutoffs(key)) return false;
  return !computed_ || computed_->count(key) > 0;
}

Subspace ExtFixTable::space(const ExtWord& w) const {
  if (w.modulus() != k_) {
    throw ShapeError("word \"" + w.text() + "\" has modulus " + std::to_string(w.modulus()) +
                     ", table has " + std::to_string(k_));
  }
  if (!covers(w)) throw CutoffError("extended word \"" + w.text() + "\" lies outside the computed table");
  const ExtWord key = w.cyclic_normal();
  auto it = spaces_.find(key);
  if (it != spaces_.end()) return it->second;
  return Subspace(frame_.N, 0, static_cast<int>(key.square_count()));
}

void ExtFixTable::set(const ExtWord& w, Subspace s) {
  const ExtWord key = w.cyclic_normal();
  if (s.is_zero()) {
    spaces_.erase(key);
  } else {
    spaces_[key] = std::move(s);
  }
}

ExtFixTable ext_closure(const Frame& frame, std::int64_t k, const std::vector<ExtGenerator>& generators,
                        int square_cutoff, int exponent_budget, const ClosureOptions& options) {
  ExtFixTable table(frame, k, square_cutoff, exponent_budget, Semantics::lower_bound);
  ExtModel model{k, square_cutoff, table.exponent_budget()};
  for (const auto& g : generators) {
    if (g.word.modulus() != k) {
      throw ShapeError("generator word \"" + g.word.text() + "\" has modulus " +
                       std::to_string(g.word.modulus()) + ", expected " + std::to_string(k));
    }
    if (g.space.dim_N() != frame.N || g.space.dom_len() != 0 ||
        g.space.cod_len() != static_cast<int>(g.word.square_count())) {
      throw ShapeError("generator at \"" + g.word.text() + "\" has shape " + g.space.shape_text());
    }
    if (!model.admissible(g.word.cyclic_normal())) {
      throw CutoffError("generator word \"" + g.word.text() + "\" exceeds the extended cutoffs");
    }
  }

  detail::ClosureEngine<ExtModel> engine(frame, model, resolve_threads(options));
  engine.seed(ExtWord(k), SparseVec{{0, Scalar(1)}});
  engine.seed(ExtWord::parse("sS", k), column_vector(frame.xi_wb));
  engine.seed(ExtWord::parse("Ss", k), column_vector(frame.xi_bw));
  for (const auto& g : generators) {
    const ExtWord key = g.word.cyclic_normal();
    for (const auto& row : g.space.rows()) engine.seed(key, row);
  }
  engine.run();
  for (const auto& [w, e] : engine.entries()) table.set(w, e.space);
  return table;
}

// ---------------------------------------------------------------- free product

namespace {

// One factorization w = w0 t w1 t ... t wl: H-words w1..w(l-1), the extended
// outer word wl w0, the leg colours in tensor order and the number of
// rotations that bring the legs back to the order of w.
struct Factorization {
  std::vector<Word> inner;
  ExtWord outer;
  std::vector<bool> black;
  std::size_t rotations = 0;

  auto key() const { return std::tie(inner, outer, rotations); }
  bool operator<(const Factorization& o) const { return key() < o.key(); }
};

std::int64_t mod(std::int64_t a, std::int64_t l) { return ((a % l) + l) % l; }

// Every placement of l chosen triangles into the gaps of a cyclic normal word
// with n >= 1 squares (gap g follows square g and gap n - 1 wraps around).
std::vector<Factorization> factorizations(const ExtWord& w, std::int64_t l) {
  const auto& body = w.body();
  const std::size_t n = body.size();
  std::set<Factorization> out;
  std::vector<int> m(n, 0);

  auto emit = [&]() {
    std::vector<std::size_t> T;
    for (std::size_t g = 0; g < n; ++g) T.insert(T.end(), static_cast<std::size_t>(m[g]), g);
    const std::size_t L = T.size();
    // Squares on the arc from chosen triangle T[i] to T[i + 1] (cyclically).
    auto arc = [&](std::size_t i) -> std::size_t {
      if (i + 1 < L) return T[i + 1] - T[i];
      return n - (T[L - 1] - T[0]);
    };
    for (std::size_t r = 0; r < L; ++r) {
      const std::size_t first_gap = T[r];
      const std::size_t last_idx = (r + L - 1) % L;
      const std::size_t last_gap = T[last_idx];
      bool ok = true;
      std::int64_t outer_exp = 0;
      for (std::size_t g = 0; g < n && ok; ++g) {
        if (m[g] == 0) continue;
        const std::int64_t rem = mod(body[g].exp - m[g], l);
        if (g == first_gap || g == last_gap) {
          outer_exp += rem;
        } else if (rem != 0) {
          ok = false;
        }
      }
      if (!ok) continue;

      Factorization f;
      std::size_t square = (first_gap + 1) % n;
      for (std::size_t j = 0; j + 1 < L && ok; ++j) {
        const std::size_t c = arc((r + j) % L);
        Word piece;
        for (std::size_t s = 0; s < c; ++s) {
          const std::size_t q = (square + s) % n;
          if (s + 1 < c && body[q].exp != 0) ok = false;
          piece.push_back(body[q].black ? 'b' : 'w');
          f.black.push_back(body[q].black);
        }
        square = (square + c) % n;
        f.inner.push_back(piece);
      }
      if (!ok) continue;
      const std::size_t c = arc(last_idx);
      std::vector<ExtWord::Letter> outer;
      for (std::size_t s = 0; s < c; ++s) {
        const std::size_t q = (square + s) % n;
        outer.push_back({body[q].black, s + 1 < c ? body[q].exp : outer_exp});
        f.black.push_back(body[q].black);
      }
      f.outer = outer.empty() ? ExtWord(l, outer_exp, {}) : ExtWord(l, 0, std::move(outer)).cyclic_normal();
      f.rotations = (first_gap + 1) % n;
      out.insert(std::move(f));
    }
  };

  // Enumerate multisets of gaps of size l.
  std::function<void(std::size_t, std::int64_t)> place = [&](std::size_t g, std::int64_t left) {
    if (g + 1 == n) {
      m[g] = static_cast<int>(left);
      emit();
      m[g] = 0;
      return;
    }
    for (std::int64_t c = 0; c <= left; ++c) {
      m[g] = static_cast<int>(c);
      place(g + 1, left - c);
    }
    m[g] = 0;
  };
  place(0, l);
  return {out.begin(), out.end()};
}

bool triangle_free(const ExtWord& w) {
  if (w.lead() != 0) return false;
  for (const auto& q : w.body()) {
    if (q.exp != 0) return false;
  }
  return true;
}

}  // namespace

ExtFixTable free_product_table(const FixTable& H, std::int64_t l, const std::vector<ExtWord>& targets) {
  if (l < 2) throw NotApplicable("the free product recursion needs l >= 2, got " + std::to_string(l));
  const Frame& fr = H.frame();
  const int N = fr.N;
  const int cutoff = H.report_cutoff();

  std::vector<ExtWord> start;
  if (targets.empty()) {
    for (const Word& w : enumerate_words(cutoff)) start.push_back(glue_word(w, l).cyclic_normal());
  } else {
    for (const ExtWord& w : targets) {
      if (w.modulus() != l) throw ShapeError("target \"" + w.text() + "\" has the wrong modulus");
      if (static_cast<int>(w.square_count()) > cutoff) {
        throw CutoffError("target \"" + w.text() + "\" has more squares than the report cutoff " +
                          std::to_string(cutoff));
      }
      start.push_back(w.cyclic_normal());
    }
  }

  // Reachable words with their factorizations.
  std::map<ExtWord, std::vector<Factorization>> terms;
  std::vector<ExtWord> stack(start.begin(), start.end());
  while (!stack.empty()) {
    ExtWord w = stack.back();
    stack.pop_back();
    if (terms.count(w)) continue;
    auto& list = terms[w];
    if (w.square_count() == 0 || triangle_free(w)) continue;
    list = factorizations(w, l);
    for (const auto& f : list) {
      if (!terms.count(f.outer)) stack.push_back(f.outer);
    }
  }

  std::map<ExtWord, Subspace> spaces;
  for (const auto& [w, list] : terms) {
    Subspace s(N, 0, static_cast<int>(w.square_count()));
    if (w.square_count() == 0) {
      if (mod(w.lead(), l) == 0) s.insert(SparseVec{{0, Scalar(1)}});
    } else if (triangle_free(w)) {
      s = H.space(w.squares());
    }
    spaces.emplace(w, std::move(s));
  }

  // Kleene iteration of the factorization operator.
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto& [w, list] : terms) {
      Subspace& target = spaces.at(w);
      for (const auto& f : list) {
        if (target.dim() == target.ambient()) break;
        std::vector<const std::vector<SparseVec>*> factors;
        std::vector<std::size_t> sizes;
        bool empty = false;
        for (const Word& piece : f.inner) {
          const Subspace& s = H.space(piece);
          if (s.is_zero()) empty = true;
          factors.push_back(&s.rows());
          sizes.push_back(s.ambient());
        }
        // Copied: the outer word may be the target itself.
        const std::vector<SparseVec> outer_rows = spaces.at(f.outer).rows();
        if (outer_rows.empty()) empty = true;
        factors.push_back(&outer_rows);
        sizes.push_back(spaces.at(f.outer).ambient());
        if (empty) continue;

        std::vector<std::size_t> pick(factors.size(), 0);
        while (true) {
          SparseVec v{{0, Scalar(1)}};
          for (std::size_t j = 0; j < factors.size(); ++j) v = kernel::tensor(v, (*factors[j])[pick[j]], sizes[j]);
          kernel::Vec dense = dense_from_sparse(v, target.ambient());
          std::vector<bool> black = f.black;
          for (std::size_t r = 0; r < f.rotations; ++r) {
            dense = kernel::rotate(fr, dense, black);
            std::rotate(black.rbegin(), black.rbegin() + 1, black.rend());
          }
          if (target.insert(sparse_from_dense(dense))) changed = true;
          std::size_t j = 0;
          while (j < pick.size() && ++pick[j] == factors[j]->size()) pick[j++] = 0;
          if (j == pick.size()) break;
        }
      }
    }
  }

  ExtFixTable out(fr, l, cutoff, -1, H.semantics());
  std::set<ExtWord> covered;
  for (auto& [w, s] : spaces) {
    covered.insert(w);
    out.set(w, std::move(s));
  }
  out.restrict_coverage(std::move(covered));
  return out;
}

FixTable glue_table(const ExtFixTable& G, int cutoff) {
  const int L = cutoff < 0 ? G.square_cutoff() : cutoff;
  if (L > G.square_cutoff()) {
    throw CutoffError("glue cutoff " + std::to_string(L) + " exceeds the square cutoff " +
                      std::to_string(G.square_cutoff()));
  }
  FixTable out(G.frame(), L, L, G.semantics());
  for (const Word& w : enumerate_words(L)) out.set_space(w, G.space(glue_word(w, G.modulus())));
  return out;
}

}  // namespace qgcat
