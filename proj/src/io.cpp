#include "kmroot/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "kmroot/errors.hpp"

namespace kmroot {

namespace {

// Line/column (1-based) of a byte offset, for error reporting.
std::pair<int, int> position_of(const std::string& text, size_t byte) {
  int line = 1, col = 1;
  for (size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

GcmFile from_matrix(int n, const std::vector<std::vector<Int>>& rows,
                    std::vector<std::string> labels) {
  SquareMat m(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      m(i, j) = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
  return GcmFile{Gcm::validate(m), std::move(labels)};
}

}  // namespace

GcmFile parse_gcm_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& ex) {
    const auto [line, col] = position_of(text, ex.byte > 0 ? ex.byte - 1 : 0);
    throw ParseError(line, col, "malformed JSON");
  }
  if (!j.is_object()) throw ParseError(1, 1, "top level is not an object");
  if (!j.contains("n") || !j["n"].is_number_integer())
    throw ParseError(1, 1, "missing integer field 'n'");
  const long long n = j["n"].get<long long>();
  if (n < 1 || n > 64) throw ParseError(1, 1, "field 'n' outside 1..64");
  if (!j.contains("entries") || !j["entries"].is_array() ||
      j["entries"].size() != static_cast<size_t>(n))
    throw ParseError(1, 1, "field 'entries' is not an array of n rows");
  std::vector<std::vector<Int>> rows;
  for (const auto& row : j["entries"]) {
    if (!row.is_array() || row.size() != static_cast<size_t>(n))
      throw ParseError(1, 1, "matrix row is not an array of n integers");
    std::vector<Int> r;
    for (const auto& v : row) {
      if (!v.is_number_integer()) throw ParseError(1, 1, "matrix entry is not an integer");
      r.push_back(v.get<Int>());
    }
    rows.push_back(std::move(r));
  }
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    if (!j["labels"].is_array() || j["labels"].size() != static_cast<size_t>(n))
      throw ParseError(1, 1, "field 'labels' is not an array of n strings");
    for (const auto& l : j["labels"]) {
      if (!l.is_string()) throw ParseError(1, 1, "label is not a string");
      labels.push_back(l.get<std::string>());
    }
  }
  return from_matrix(static_cast<int>(n), rows, std::move(labels));
}

GcmFile parse_gcm_text(const std::string& text) {
  struct Token {
    Int value;
    int line, col;
  };
  std::vector<Token> tokens;
  int line = 1, col = 1;
  size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c == '\n') {
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++col;
      ++i;
      continue;
    }
    const int tl = line, tc = col;
    std::string tok;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) {
      tok += text[i];
      ++i;
      ++col;
    }
    size_t pos = 0;
    Int value = 0;
    bool ok = true;
    try {
      value = std::stoll(tok, &pos);
    } catch (...) {
      ok = false;
    }
    if (!ok || pos != tok.size()) throw ParseError(tl, tc, "expected an integer, got '" + tok + "'");
    tokens.push_back(Token{value, tl, tc});
  }
  if (tokens.empty()) throw ParseError(line, col, "empty input");
  const Int n = tokens[0].value;
  if (n < 1 || n > 64) throw ParseError(tokens[0].line, tokens[0].col, "rank outside 1..64");
  const size_t need = 1 + static_cast<size_t>(n) * static_cast<size_t>(n);
  if (tokens.size() < need)
    throw ParseError(line, col,
                     "expected " + std::to_string(need - 1) + " matrix entries, got " +
                         std::to_string(tokens.size() - 1));
  if (tokens.size() > need) {
    const Token& t = tokens[need];
    throw ParseError(t.line, t.col, "trailing input after the matrix");
  }
  std::vector<std::vector<Int>> rows(static_cast<size_t>(n),
                                     std::vector<Int>(static_cast<size_t>(n)));
  for (size_t t = 1; t < need; ++t) {
    const size_t e = t - 1;
    rows[e / static_cast<size_t>(n)][e % static_cast<size_t>(n)] = tokens[t].value;
  }
  return from_matrix(static_cast<int>(n), rows, {});
}

GcmFile parse_gcm(const std::string& text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '{' ? parse_gcm_json(text) : parse_gcm_text(text);
  }
  throw ParseError(1, 1, "empty input");
}

GcmFile read_gcm_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_gcm(ss.str());
}

std::string to_json(const Gcm& g, const std::vector<std::string>& labels) {
  nlohmann::json j;
  j["n"] = g.n();
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < g.n(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int k = 0; k < g.n(); ++k) row.push_back(g.at(i, k));
    rows.push_back(std::move(row));
  }
  j["entries"] = std::move(rows);
  if (!labels.empty()) j["labels"] = labels;
  return j.dump(2) + "\n";
}

std::string to_text(const Gcm& g) {
  std::string s = std::to_string(g.n()) + "\n";
  for (int i = 0; i < g.n(); ++i) {
    for (int k = 0; k < g.n(); ++k) {
      if (k) s += ' ';
      s += std::to_string(g.at(i, k));
    }
    s += '\n';
  }
  return s;
}

}  // namespace kmroot
