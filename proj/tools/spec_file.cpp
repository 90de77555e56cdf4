#include "spec_file.hpp"

#include "qgcat/error.hpp"
#include "qgcat/partitions.hpp"
#include "qgcat/presets.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace qgcat::cli {

using nlohmann::json;

namespace {

std::string position_text(const std::string& text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

const json& field(const json& obj, const char* key, const std::string& where) {
  if (!obj.contains(key)) throw ParseError(where + ": missing field \"" + key + "\"");
  return obj.at(key);
}

std::string string_field(const json& obj, const char* key, const std::string& where) {
  const json& v = field(obj, key, where);
  if (!v.is_string()) throw ParseError(where + ": field \"" + key + "\" must be a string");
  return v.get<std::string>();
}

int int_field(const json& v, const std::string& where) {
  if (!v.is_number_integer()) throw ParseError(where + " must be an integer");
  return v.get<int>();
}

Scalar scalar_of(const json& v, const std::string& where) {
  if (v.is_string()) return Scalar::parse(v.get<std::string>());
  if (v.is_number_integer()) return Scalar(v.get<std::int64_t>());
  throw ParseError(where + ": scalars are strings such as \"1/2\" or \"1+i\"");
}

Matrix matrix_of(const json& v, int N, const std::string& where) {
  if (!v.is_array() || static_cast<int>(v.size()) != N) {
    throw ShapeError(where + ": expected " + std::to_string(N) + " rows");
  }
  Matrix m(N);
  for (int i = 0; i < N; ++i) {
    if (!v[i].is_array() || static_cast<int>(v[i].size()) != N) {
      throw ShapeError(where + ": row " + std::to_string(i + 1) + " needs " + std::to_string(N) + " entries");
    }
    for (int j = 0; j < N; ++j) m(i, j) = scalar_of(v[i][j], where);
  }
  return m;
}

LinMap linmap_of(const json& v, int N, int dom, int cod, const std::string& where) {
  LinMap t(N, dom, cod);
  if (!v.is_array() || v.size() != t.rows()) {
    throw ShapeError(where + ": expected " + std::to_string(t.rows()) + " rows of " + std::to_string(t.cols()) +
                     " entries");
  }
  for (std::size_t r = 0; r < t.rows(); ++r) {
    if (!v[r].is_array() || v[r].size() != t.cols()) {
      throw ShapeError(where + ": row " + std::to_string(r + 1) + " needs " + std::to_string(t.cols()) + " entries");
    }
    for (std::size_t c = 0; c < t.cols(); ++c) t.at(r, c) = scalar_of(v[r][c], where);
  }
  return t;
}

void check_keys(const json& obj, const std::set<std::string>& allowed, const std::string& where) {
  for (const auto& [k, v] : obj.items()) {
    if (!allowed.count(k)) throw ParseError(where + ": unknown field \"" + k + "\"");
  }
}

}  // namespace

QGSpec parse_spec(const std::string& text, const SpecOverrides& overrides) {
  json doc;
  if (text.find_first_not_of(" \t\r\n") == std::string::npos) {
    doc = json::object();
  } else {
    try {
      doc = json::parse(text);
    } catch (const json::parse_error& e) {
      throw ParseError("spec: " + position_text(text, e.byte == 0 ? 0 : e.byte - 1) + ": " + e.what());
    }
  }
  if (!doc.is_object()) throw ParseError("spec: the document must be an object");
  check_keys(doc, {"N", "F", "preset", "generators", "cutoffs", "modulus"}, "spec");

  QGSpec spec;
  if (doc.contains("N")) spec.N = int_field(doc["N"], "spec: N");
  if (overrides.N) spec.N = *overrides.N;
  if (spec.N < 1) throw ShapeError("spec: N must be positive");

  Matrix F = Matrix::identity(spec.N);
  if (doc.contains("F")) F = matrix_of(doc["F"], spec.N, "spec: F");
  spec.frame = make_frame(F);

  if (doc.contains("cutoffs")) {
    const json& c = doc["cutoffs"];
    if (!c.is_object()) throw ParseError("spec: cutoffs must be an object");
    check_keys(c, {"report", "work"}, "spec: cutoffs");
    if (c.contains("report")) spec.report_cutoff = int_field(c["report"], "spec: cutoffs.report");
    spec.work_cutoff = c.contains("work") ? int_field(c["work"], "spec: cutoffs.work") : spec.report_cutoff + 2;
  }
  if (overrides.report_cutoff) {
    spec.report_cutoff = *overrides.report_cutoff;
    if (!overrides.work_cutoff && !(doc.contains("cutoffs") && doc["cutoffs"].contains("work"))) {
      spec.work_cutoff = spec.report_cutoff + 2;
    }
  }
  if (overrides.work_cutoff) spec.work_cutoff = *overrides.work_cutoff;
  if (spec.report_cutoff < 0 || spec.work_cutoff < spec.report_cutoff) {
    throw CutoffError("cutoffs need 0 <= report <= work, got report " + std::to_string(spec.report_cutoff) +
                      " and work " + std::to_string(spec.work_cutoff));
  }

  if (doc.contains("modulus")) {
    const int k = int_field(doc["modulus"], "spec: modulus");
    if (k < 0) throw ShapeError("spec: modulus must be non-negative");
    spec.modulus = k;
  }

  std::string preset = doc.contains("preset") ? string_field(doc, "preset", "spec") : std::string();
  if (!overrides.preset.empty()) preset = overrides.preset;
  if (!preset.empty()) {
    if (spec.modulus) throw ParseError("spec: presets are plain categories; drop the modulus");
    spec.generators = preset_generators(preset, spec.N);
  }

  json gens_canonical = json::array();
  if (doc.contains("generators")) {
    const json& gens = doc["generators"];
    if (!gens.is_array()) throw ParseError("spec: generators must be a list");
    for (std::size_t g = 0; g < gens.size(); ++g) {
      const std::string where = "spec: generator " + std::to_string(g + 1);
      const json& gen = gens[g];
      if (!gen.is_object()) throw ParseError(where + " must be an object");
      const std::string kind = string_field(gen, "kind", where);
      if (kind == "partition") {
        check_keys(gen, {"kind", "upper", "lower", "blocks"}, where);
        if (spec.modulus) throw ParseError(where + ": partitions need a plain spec");
        const Word upper = Word::parse(string_field(gen, "upper", where));
        const Word lower = Word::parse(string_field(gen, "lower", where));
        const auto blocks = field(gen, "blocks", where).get<std::vector<std::vector<int>>>();
        const Partition p = Partition::from_blocks(upper, lower, blocks);
        for (auto& fg : partition_generators({p}, spec.N)) spec.generators.push_back(std::move(fg));
      } else if (kind == "matrix") {
        check_keys(gen, {"kind", "domain", "codomain", "entries"}, where);
        const std::string dom = string_field(gen, "domain", where);
        const std::string cod = string_field(gen, "codomain", where);
        if (spec.modulus) {
          const ExtWord w1 = ExtWord::parse(dom, *spec.modulus);
          const ExtWord w2 = ExtWord::parse(cod, *spec.modulus);
          const LinMap t = linmap_of(field(gen, "entries", where), spec.N, static_cast<int>(w1.square_count()),
                                     static_cast<int>(w2.square_count()), where);
          ExtGenerator eg{ext_concat(w2, ext_star(w1)), span({fix_from_mor(spec.frame, t, w1.squares(),
                                                                          w2.squares())})};
          spec.ext_generators.push_back(std::move(eg));
        } else {
          const Word w1 = Word::parse(dom);
          const Word w2 = Word::parse(cod);
          const LinMap t = linmap_of(field(gen, "entries", where), spec.N, static_cast<int>(w1.size()),
                                     static_cast<int>(w2.size()), where);
          spec.generators.push_back({w2 + word_star(w1), span({fix_from_mor(spec.frame, t, w1, w2)})});
        }
      } else {
        throw ParseError(where + ": unknown kind \"" + kind + "\" (expected partition or matrix)");
      }
      gens_canonical.push_back(gen);
    }
  }

  json& c = spec.canonical;
  c["N"] = spec.N;
  c["F"] = json::array();
  for (int i = 0; i < spec.N; ++i) {
    json row = json::array();
    for (int j = 0; j < spec.N; ++j) row.push_back(F(i, j).text());
    c["F"].push_back(row);
  }
  c["preset"] = preset;
  c["generators"] = gens_canonical;
  c["cutoffs"] = {{"report", spec.report_cutoff}, {"work", spec.work_cutoff}};
  if (spec.modulus) c["modulus"] = *spec.modulus;
  return spec;
}

QGSpec load_spec(const std::string& path, const SpecOverrides& overrides) {
  if (path.empty()) return parse_spec("", overrides);
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read spec file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_spec(buf.str(), overrides);
}

}  // namespace qgcat::cli
