#include "stabgeo/surface_io.hpp"

#include "stabgeo/errors.hpp"

#include <json.hpp>

#include <cctype>
#include <fstream>
#include <sstream>

namespace stabgeo {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw Error(Errc::ParseError, where + ": " + what);
}

Rational rational_from(const json& v, const std::string& where) {
  if (v.is_number_integer()) return Rational(v.get<long long>());
  if (v.is_number_unsigned()) return Rational(v.get<unsigned long long>());
  if (v.is_number_float()) {
    fail(where,
         "floating-point literals lose exactness; quote the value as a string");
  }
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const Error& e) {
      fail(where, e.what());
    }
  }
  fail(where, "expected an integer or a rational string");
}

Integer integer_from(const json& v, const std::string& where) {
  const Rational r = rational_from(v, where);
  if (denominator(r) != 1) {
    fail(where, "expected an integer, got " + to_string(r));
  }
  return numerator(r);
}

DivisorClass divisor_from(const json& v, const std::string& where) {
  if (!v.is_array()) fail(where, "expected a coordinate array");
  std::vector<Rational> coords;
  coords.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    coords.push_back(
        rational_from(v[i], where + "[" + std::to_string(i) + "]"));
  }
  return DivisorClass(std::move(coords));
}

void reject_unknown_keys(const json& obj, const std::string& where,
                         std::initializer_list<const char*> known) {
  for (const auto& [key, value] : obj.items()) {
    bool found = false;
    for (const char* k : known) {
      if (key == k) {
        found = true;
        break;
      }
    }
    if (!found) fail(where, "unknown key '" + key + "'");
  }
}

std::vector<std::vector<Integer>> gram_from(const json& v, std::size_t rank,
                                            const std::string& where) {
  if (!v.is_array()) fail(where, "expected an array");
  std::vector<std::vector<Integer>> gram(rank, std::vector<Integer>(rank));
  if (!v.empty() && v.front().is_array()) {
    if (v.size() != rank) {
      fail(where, "expected " + std::to_string(rank) + " rows");
    }
    for (std::size_t i = 0; i < rank; ++i) {
      const std::string row_where = where + "[" + std::to_string(i) + "]";
      if (!v[i].is_array() || v[i].size() != rank) {
        fail(row_where, "expected " + std::to_string(rank) + " entries");
      }
      for (std::size_t j = 0; j < rank; ++j) {
        gram[i][j] =
            integer_from(v[i][j], row_where + "[" + std::to_string(j) + "]");
      }
    }
    return gram;
  }
  // Flat row-major layout.
  if (v.size() != rank * rank) {
    fail(where, "expected " + std::to_string(rank * rank) +
                    " row-major entries, got " + std::to_string(v.size()));
  }
  for (std::size_t i = 0; i < rank; ++i) {
    for (std::size_t j = 0; j < rank; ++j) {
      gram[i][j] = integer_from(
          v[i * rank + j], where + "[" + std::to_string(i * rank + j) + "]");
    }
  }
  return gram;
}

SurfaceData surface_from_tree(const json& root) {
  if (!root.is_object()) fail("document", "expected an object");
  reject_unknown_keys(root, "document",
                      {"rank", "gram", "ample", "stable_characters",
                       "albanese_finite"});

  SurfaceData data;
  if (!root.contains("rank")) fail("rank", "missing");
  const Integer rank = integer_from(root.at("rank"), "rank");
  if (rank < 0 || rank > 64) {
    fail("rank", "Picard rank " + rank.str() + " outside supported range");
  }
  data.rank = static_cast<std::size_t>(static_cast<long long>(rank));

  if (!root.contains("gram")) fail("gram", "missing");
  data.gram = gram_from(root.at("gram"), data.rank, "gram");

  if (!root.contains("ample")) fail("ample", "missing");
  const json& ample = root.at("ample");
  if (!ample.is_object()) fail("ample", "expected an object");
  reject_unknown_keys(ample, "ample", {"mode", "generators", "reference"});
  if (!ample.contains("mode") || !ample.at("mode").is_string()) {
    fail("ample.mode", "missing or not a string");
  }
  const std::string mode = ample.at("mode").get<std::string>();
  if (mode == "polyhedral") {
    data.ample_mode = AmpleMode::Polyhedral;
    if (!ample.contains("generators") || !ample.at("generators").is_array()) {
      fail("ample.generators", "polyhedral mode needs a generator array");
    }
    const json& gens = ample.at("generators");
    for (std::size_t i = 0; i < gens.size(); ++i) {
      data.ample_generators.push_back(divisor_from(
          gens[i], "ample.generators[" + std::to_string(i) + "]"));
    }
  } else if (mode == "positive_cone") {
    data.ample_mode = AmpleMode::PositiveCone;
    if (!ample.contains("reference")) {
      fail("ample.reference", "positive_cone mode needs a reference class");
    }
    data.ample_reference = divisor_from(ample.at("reference"), "ample.reference");
  } else {
    fail("ample.mode", "unknown mode '" + mode + "'");
  }

  if (root.contains("stable_characters")) {
    const json& chars = root.at("stable_characters");
    if (!chars.is_array()) fail("stable_characters", "expected an array");
    for (std::size_t i = 0; i < chars.size(); ++i) {
      const std::string where = "stable_characters[" + std::to_string(i) + "]";
      const json& entry = chars[i];
      if (!entry.is_object()) fail(where, "expected an object");
      reject_unknown_keys(entry, where,
                          {"rank", "c1", "ch2", "applicability", "polarization"});
      StableCharacter sc;
      if (!entry.contains("rank")) fail(where + ".rank", "missing");
      sc.character.rank = integer_from(entry.at("rank"), where + ".rank");
      if (!entry.contains("c1")) fail(where + ".c1", "missing");
      sc.character.c1 = divisor_from(entry.at("c1"), where + ".c1");
      if (!entry.contains("ch2")) fail(where + ".ch2", "missing");
      sc.character.ch2 = rational_from(entry.at("ch2"), where + ".ch2");
      std::string applicability = "all_polarizations";
      if (entry.contains("applicability")) {
        if (!entry.at("applicability").is_string()) {
          fail(where + ".applicability", "expected a string");
        }
        applicability = entry.at("applicability").get<std::string>();
      }
      if (applicability == "all_polarizations") {
        sc.applicability = Applicability::AllPolarizations;
      } else if (applicability == "fixed_polarization") {
        sc.applicability = Applicability::FixedPolarization;
        if (!entry.contains("polarization")) {
          fail(where + ".polarization",
               "fixed_polarization entries need a polarization class");
        }
        sc.polarization =
            divisor_from(entry.at("polarization"), where + ".polarization");
      } else {
        fail(where + ".applicability",
             "unknown applicability '" + applicability + "'");
      }
      data.stable_characters.push_back(std::move(sc));
    }
  }

  if (root.contains("albanese_finite")) {
    if (!root.at("albanese_finite").is_boolean()) {
      fail("albanese_finite", "expected a boolean");
    }
    data.albanese_finite = root.at("albanese_finite").get<bool>();
  }
  return data;
}

// Minimal TOML reader covering the surface schema: bare keys, [tables],
// [[arrays of tables]], strings, integers, booleans, and (possibly
// multiline) arrays. Numbers are kept as literal strings so every value
// stays exact; bare decimals like 1.5 are therefore fine here, unlike in
// JSON where the parser would round them through a double first.
class TomlReader {
public:
  explicit TomlReader(const std::string& text) : text_(text) {}

  json parse() {
    json root = json::object();
    json* current = &root;
    std::istringstream lines(text_);
    std::string raw;
    while (std::getline(lines, raw)) {
      ++line_no_;
      std::string line = strip_comment(raw);
      if (trim(line).empty()) continue;

      // Pull in continuation lines until array brackets balance.
      while (bracket_depth(line) > 0) {
        std::string next;
        if (!std::getline(lines, next)) {
          fail_here("unterminated array");
        }
        ++line_no_;
        line += ' ';
        line += strip_comment(next);
      }

      const std::string stmt = trim(line);
      if (stmt.rfind("[[", 0) == 0) {
        if (stmt.size() < 5 || stmt.substr(stmt.size() - 2) != "]]") {
          fail_here("malformed table-array header");
        }
        const std::string name = trim(stmt.substr(2, stmt.size() - 4));
        check_bare_key(name);
        if (!root.contains(name)) root[name] = json::array();
        if (!root[name].is_array()) fail_here("'" + name + "' is not an array");
        root[name].push_back(json::object());
        current = &root[name].back();
      } else if (stmt.front() == '[') {
        if (stmt.back() != ']') fail_here("malformed table header");
        const std::string name = trim(stmt.substr(1, stmt.size() - 2));
        check_bare_key(name);
        if (!root.contains(name)) root[name] = json::object();
        if (!root[name].is_object()) fail_here("'" + name + "' is not a table");
        current = &root[name];
      } else {
        const auto eq = find_top_level(stmt, '=');
        if (eq == std::string::npos) fail_here("expected 'key = value'");
        const std::string key = trim(stmt.substr(0, eq));
        check_bare_key(key);
        if (current->contains(key)) fail_here("duplicate key '" + key + "'");
        (*current)[key] = parse_value(trim(stmt.substr(eq + 1)));
      }
    }
    return root;
  }

private:
  [[noreturn]] void fail_here(const std::string& what) {
    fail("line " + std::to_string(line_no_), what);
  }

  static std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
  }

  static std::string strip_comment(const std::string& s) {
    bool in_string = false;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] == '"' && (i == 0 || s[i - 1] != '\\')) in_string = !in_string;
      if (s[i] == '#' && !in_string) return s.substr(0, i);
    }
    return s;
  }

  static int bracket_depth(const std::string& s) {
    bool in_string = false;
    int depth = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] == '"' && (i == 0 || s[i - 1] != '\\')) in_string = !in_string;
      if (in_string) continue;
      if (s[i] == '[') ++depth;
      if (s[i] == ']') --depth;
    }
    return depth;
  }

  static std::size_t find_top_level(const std::string& s, char target) {
    bool in_string = false;
    int depth = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] == '"' && (i == 0 || s[i - 1] != '\\')) in_string = !in_string;
      if (in_string) continue;
      if (s[i] == '[') ++depth;
      if (s[i] == ']') --depth;
      if (s[i] == target && depth == 0) return i;
    }
    return std::string::npos;
  }

  void check_bare_key(const std::string& key) {
    if (key.empty()) fail_here("empty key");
    for (char c : key) {
      if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '-') {
        fail_here("unsupported key '" + key + "'; use bare keys and [table] headers");
      }
    }
  }

  json parse_value(const std::string& s) {
    if (s.empty()) fail_here("missing value");
    if (s.front() == '"') {
      if (s.size() < 2 || s.back() != '"') fail_here("unterminated string");
      std::string out;
      for (std::size_t i = 1; i + 1 < s.size(); ++i) {
        if (s[i] == '\\' && i + 2 < s.size()) {
          ++i;
          if (s[i] == '"' || s[i] == '\\') {
            out += s[i];
          } else {
            fail_here("unsupported escape in string");
          }
        } else {
          out += s[i];
        }
      }
      return json(out);
    }
    if (s.front() == '[') {
      if (s.back() != ']') fail_here("malformed array");
      json arr = json::array();
      const std::string inner = trim(s.substr(1, s.size() - 2));
      if (inner.empty()) return arr;
      std::size_t start = 0;
      bool in_string = false;
      int depth = 0;
      for (std::size_t i = 0; i <= inner.size(); ++i) {
        if (i < inner.size()) {
          const char c = inner[i];
          if (c == '"' && (i == 0 || inner[i - 1] != '\\')) in_string = !in_string;
          if (in_string) continue;
          if (c == '[') ++depth;
          if (c == ']') --depth;
          if (c != ',' || depth != 0) continue;
        }
        const std::string item = trim(inner.substr(start, i - start));
        start = i + 1;
        if (item.empty()) {
          if (i == inner.size()) break;  // trailing comma
          fail_here("empty array element");
        }
        arr.push_back(parse_value(item));
      }
      return arr;
    }
    if (s == "true") return json(true);
    if (s == "false") return json(false);
    // Numeric literal: keep the text so the converter parses it exactly.
    for (std::size_t i = 0; i < s.size(); ++i) {
      const char c = s[i];
      const bool sign = (c == '+' || c == '-') && i == 0;
      if (!sign && !std::isdigit(static_cast<unsigned char>(c)) && c != '.' &&
          c != '/') {
        fail_here("unsupported value '" + s + "'");
      }
    }
    return json(s);
  }

  const std::string& text_;
  std::size_t line_no_ = 0;
};

}  // namespace

SurfaceData parse_surface_json(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(Errc::ParseError, std::string("invalid JSON: ") + e.what());
  }
  return surface_from_tree(root);
}

SurfaceData parse_surface_toml(const std::string& text) {
  return surface_from_tree(TomlReader(text).parse());
}

SurfaceData load_surface_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(Errc::ParseError, "cannot open '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();

  if (path.size() >= 5 && path.substr(path.size() - 5) == ".toml") {
    return parse_surface_toml(text);
  }
  if (path.size() >= 5 && path.substr(path.size() - 5) == ".json") {
    return parse_surface_json(text);
  }
  throw Error(Errc::ParseError,
              "unsupported surface file extension on '" + path +
                  "' (expected .json or .toml)");
}

}  // namespace stabgeo
