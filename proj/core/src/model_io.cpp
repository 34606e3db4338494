#include "okb/model_io.hpp"

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <fstream>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "json.hpp"
#include "okb/errors.hpp"
#include "okb/rational.hpp"

namespace okb {

namespace {

using ojson = nlohmann::ordered_json;

std::pair<int, int> line_col(const std::string& text, std::size_t byte) {
  // nlohmann reports the 1-based index of the last byte it read.
  std::size_t limit = (byte == 0) ? 0 : byte - 1;
  if (limit > text.size()) limit = text.size();
  int line = 1;
  int col = 1;
  for (std::size_t i = 0; i < limit; ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

[[noreturn]] void fail(const std::string& origin, const std::string& path,
                       const std::string& message) {
  throw ParseError(origin + ": " + path + ": " + message);
}

const ojson& member(const ojson& j, const char* key, const std::string& origin,
                    const std::string& path) {
  if (!j.is_object()) fail(origin, path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(origin, path, std::string("missing key \"") + key + "\"");
  return *it;
}

std::string string_field(const ojson& j, const std::string& origin, const std::string& path) {
  if (!j.is_string()) fail(origin, path, "expected a string");
  return j.get<std::string>();
}

Rational rational_field(const ojson& j, const std::string& origin, const std::string& path) {
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const ParseError& e) {
      fail(origin, path, e.what());
    }
  }
  // Bare integers are accepted on input; output always uses strings.
  if (j.is_number_integer() || j.is_number_unsigned()) return parse_rational(j.dump());
  fail(origin, path, "expected a rational written as \"a/b\" or \"a\"");
}

DivisorClass coords_field(const ojson& j, int rank, const std::string& origin,
                          const std::string& path) {
  if (!j.is_array()) fail(origin, path, "expected an array of coordinates");
  if (static_cast<int>(j.size()) != rank)
    fail(origin, path,
         "expected " + std::to_string(rank) + " coordinates, got " + std::to_string(j.size()));
  QVec v;
  v.reserve(j.size());
  for (std::size_t k = 0; k < j.size(); ++k)
    v.push_back(rational_field(j[k], origin, path + "[" + std::to_string(k) + "]"));
  return DivisorClass(std::move(v));
}

std::vector<NamedClass> class_list_field(const ojson& j, int rank, const std::string& origin,
                                         const std::string& path) {
  if (!j.is_array()) fail(origin, path, "expected an array");
  std::vector<NamedClass> out;
  out.reserve(j.size());
  for (std::size_t k = 0; k < j.size(); ++k) {
    std::string entry = path + "[" + std::to_string(k) + "]";
    const ojson& e = j[k];
    NamedClass nc;
    nc.label = string_field(member(e, "label", origin, entry), origin, entry + ".label");
    nc.cls = coords_field(member(e, "coords", origin, entry), rank, origin, entry + ".coords");
    out.push_back(std::move(nc));
  }
  return out;
}

ojson coords_to_json(const DivisorClass& cls) {
  ojson arr = ojson::array();
  for (int i = 0; i < cls.rank(); ++i) arr.push_back(to_string(cls[i]));
  return arr;
}

std::string trim(const std::string& s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

}  // namespace

SurfaceModel parse_model(const std::string& text, const std::string& origin) {
  ojson j;
  try {
    j = ojson::parse(text);
  } catch (const ojson::parse_error& e) {
    auto [line, col] = line_col(text, e.byte);
    std::string detail = e.what();
    if (auto cut = detail.find("] "); cut != std::string::npos) detail = detail.substr(cut + 2);
    throw ParseError(origin + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " +
                     detail);
  }
  if (!j.is_object()) fail(origin, "$", "model file must be a JSON object");

  SurfaceModel m;
  m.name = string_field(member(j, "name", origin, "$"), origin, "name");

  const ojson& jrank = member(j, "rank", origin, "$");
  if (!jrank.is_number_integer() && !jrank.is_number_unsigned())
    fail(origin, "rank", "expected an integer");
  long long rank_value = jrank.get<long long>();
  if (rank_value < 1 || rank_value > 1000) fail(origin, "rank", "rank out of range");
  int rank = static_cast<int>(rank_value);

  const ojson& jlabels = member(j, "basis_labels", origin, "$");
  if (!jlabels.is_array() || static_cast<int>(jlabels.size()) != rank)
    fail(origin, "basis_labels", "expected an array of " + std::to_string(rank) + " strings");
  for (std::size_t k = 0; k < jlabels.size(); ++k)
    m.basis_labels.push_back(
        string_field(jlabels[k], origin, "basis_labels[" + std::to_string(k) + "]"));

  const ojson& jgram = member(j, "gram", origin, "$");
  if (!jgram.is_array() || static_cast<int>(jgram.size()) != rank)
    fail(origin, "gram", "expected " + std::to_string(rank) + " rows");
  for (std::size_t r = 0; r < jgram.size(); ++r) {
    std::string row_path = "gram[" + std::to_string(r) + "]";
    const ojson& jrow = jgram[r];
    if (!jrow.is_array() || static_cast<int>(jrow.size()) != rank)
      fail(origin, row_path, "expected " + std::to_string(rank) + " entries");
    QVec row;
    for (std::size_t c = 0; c < jrow.size(); ++c)
      row.push_back(rational_field(jrow[c], origin, row_path + "[" + std::to_string(c) + "]"));
    m.gram.push_back(std::move(row));
  }

  m.negative_curves =
      class_list_field(member(j, "negative_curves", origin, "$"), rank, origin, "negative_curves");
  m.effective_generators = class_list_field(member(j, "effective_generators", origin, "$"), rank,
                                            origin, "effective_generators");
  return m;
}

SurfaceModel load_model_unchecked(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path + ": cannot open model file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_model(buf.str(), path);
}

SurfaceModel load_model(const std::string& path) {
  SurfaceModel m = load_model_unchecked(path);
  require_valid(m);
  return m;
}

std::string model_to_json(const SurfaceModel& m) {
  ojson j;
  j["name"] = m.name;
  j["rank"] = m.rank();
  j["basis_labels"] = m.basis_labels;
  ojson gram = ojson::array();
  for (const QVec& row : m.gram) {
    ojson jrow = ojson::array();
    for (const Rational& q : row) jrow.push_back(to_string(q));
    gram.push_back(std::move(jrow));
  }
  j["gram"] = std::move(gram);
  auto classes = [](const std::vector<NamedClass>& list) {
    ojson arr = ojson::array();
    for (const NamedClass& nc : list) {
      ojson e;
      e["label"] = nc.label;
      e["coords"] = coords_to_json(nc.cls);
      arr.push_back(std::move(e));
    }
    return arr;
  };
  j["negative_curves"] = classes(m.negative_curves);
  j["effective_generators"] = classes(m.effective_generators);
  return j.dump(2) + "\n";
}

DivisorClass parse_class_expression(const SurfaceModel& m, const std::string& text) {
  std::string s = trim(text);
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')')
    s = trim(s.substr(1, s.size() - 2));
  if (s.empty()) throw ParseError("empty class expression");

  if (s.find(',') != std::string::npos) {
    std::vector<std::string> pieces;
    std::size_t start = 0;
    while (true) {
      std::size_t comma = s.find(',', start);
      if (comma == std::string::npos) {
        pieces.push_back(s.substr(start));
        break;
      }
      pieces.push_back(s.substr(start, comma - start));
      start = comma + 1;
    }
    if (static_cast<int>(pieces.size()) != m.rank())
      throw ParseError("expected " + std::to_string(m.rank()) + " coordinates, got " +
                       std::to_string(pieces.size()));
    QVec v;
    for (std::size_t k = 0; k < pieces.size(); ++k) {
      try {
        v.push_back(parse_rational(pieces[k]));
      } catch (const ParseError& e) {
        throw ParseError("coordinate " + std::to_string(k + 1) + ": " + e.what());
      }
    }
    return DivisorClass(std::move(v));
  }

  // A rank-1 coordinate vector has no comma to give it away.
  if (m.rank() == 1) {
    try {
      return DivisorClass({parse_rational(s)});
    } catch (const ParseError&) {
      // fall through to the label grammar
    }
  }

  std::unordered_map<std::string, DivisorClass> table;
  for (int i = 0; i < m.rank(); ++i) table.emplace(m.basis_labels[i], m.basis_class(i));
  for (const NamedClass& nc : m.negative_curves) table.emplace(nc.label, nc.cls);
  for (const NamedClass& nc : m.effective_generators) table.emplace(nc.label, nc.cls);

  DivisorClass sum = DivisorClass::zero(m.rank());
  std::size_t i = 0;
  const std::size_t n = s.size();
  auto skip_ws = [&] {
    while (i < n && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  };
  auto at = [&] { return " at position " + std::to_string(i + 1); };

  bool first = true;
  skip_ws();
  while (i < n) {
    int sgn = 1;
    bool saw_sign = false;
    while (i < n && (s[i] == '+' || s[i] == '-')) {
      if (s[i] == '-') sgn = -sgn;
      saw_sign = true;
      ++i;
      skip_ws();
    }
    if (!first && !saw_sign) throw ParseError("expected '+' or '-'" + at());

    Rational coef(1);
    if (i < n && std::isdigit(static_cast<unsigned char>(s[i]))) {
      std::size_t num_start = i;
      while (i < n && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      if (i < n && s[i] == '/') {
        ++i;
        if (i >= n || !std::isdigit(static_cast<unsigned char>(s[i])))
          throw ParseError("expected a denominator" + at());
        while (i < n && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      }
      coef = parse_rational(s.substr(num_start, i - num_start));
      skip_ws();
      if (i < n && s[i] == '*') {
        ++i;
        skip_ws();
      }
    }

    if (i >= n || !(std::isalpha(static_cast<unsigned char>(s[i])) || s[i] == '_'))
      throw ParseError("expected a label" + at());
    std::size_t label_start = i;
    while (i < n && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
    std::string label = s.substr(label_start, i - label_start);
    auto it = table.find(label);
    if (it == table.end()) {
      std::vector<std::string> known;
      known.reserve(table.size());
      for (const auto& [name, cls] : table) known.push_back(name);
      std::sort(known.begin(), known.end());
      std::string list;
      for (const std::string& k : known) {
        if (!list.empty()) list += ", ";
        list += k;
      }
      throw ParseError("unknown label '" + label + "' (known: " + list + ")");
    }
    sum += (Rational(sgn) * coef) * it->second;
    skip_ws();
    first = false;
  }
  return sum;
}

}  // namespace okb
