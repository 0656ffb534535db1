#pragma once

// Code file formats.
//
// Text (one word per line):
//   line 1:      "q n"
//   other lines: n contiguous digits in {0..q-1}; '#' starts a comment line;
//                blank lines are ignored; duplicate words are an error.
//
// JSON mirror: {"q": 2, "n": 19, "words": ["0101...", ...]} with the same
// validation. parse_code() auto-detects the format.

#include <fstream>
#include <map>
#include <sstream>
#include <string>

#include <json.hpp>

#include "codebounds/code.hpp"

namespace codebounds {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

inline Code parse_code_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;

  auto strip = [](std::string& s) {
    while (!s.empty() && (s.back() == '\r' || s.back() == ' ' || s.back() == '\t')) s.pop_back();
  };

  if (!std::getline(in, line)) throw ParseError(1, "empty input; expected header \"q n\"");
  ++lineno;
  strip(line);
  long long q = 0, n = 0;
  {
    std::istringstream header(line);
    std::string extra;
    if (!(header >> q >> n) || (header >> extra))
      throw ParseError(1, "expected header \"q n\", got \"" + line + "\"");
  }
  if (q < 2 || q > 10)
    throw ParseError(1, "alphabet size q must be in 2..10 for the digit format, got " +
                            std::to_string(q));
  if (n < 1 || n > 4096) throw ParseError(1, "length n must be in 1..4096, got " + std::to_string(n));

  std::vector<Word> words;
  std::map<Word, int> first_seen;
  while (std::getline(in, line)) {
    ++lineno;
    strip(line);
    if (line.empty() || line[0] == '#') continue;
    if (static_cast<long long>(line.size()) != n)
      throw ParseError(lineno, "word has length " + std::to_string(line.size()) + ", expected " +
                                   std::to_string(n));
    Word w;
    w.reserve(line.size());
    for (char ch : line) {
      if (ch < '0' || ch >= '0' + q)
        throw ParseError(lineno, std::string("symbol '") + ch + "' out of range for q=" +
                                     std::to_string(q));
      w.push_back(static_cast<std::uint8_t>(ch - '0'));
    }
    const auto [it, inserted] = first_seen.emplace(w, lineno);
    if (!inserted)
      throw ParseError(lineno, "duplicate word " + word_to_string(w, static_cast<int>(q)) +
                                   " (first seen at line " + std::to_string(it->second) + ")");
    words.push_back(std::move(w));
  }
  if (words.empty()) throw ParseError(lineno, "no codewords");
  return Code(static_cast<int>(q), static_cast<int>(n), std::move(words));
}

inline Code code_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("q") || !j.contains("n") || !j.contains("words"))
    throw ParseError(0, "JSON code must be an object with fields q, n, words");
  if (!j["q"].is_number_integer() || !j["n"].is_number_integer() || !j["words"].is_array())
    throw ParseError(0, "JSON code fields have wrong types (q, n integers; words array)");
  const long long q = j["q"].get<long long>();
  const long long n = j["n"].get<long long>();
  if (q < 2 || q > 10) throw ParseError(0, "alphabet size q must be in 2..10, got " + std::to_string(q));
  if (n < 1 || n > 4096) throw ParseError(0, "length n must be in 1..4096, got " + std::to_string(n));

  std::vector<Word> words;
  std::map<Word, std::size_t> first_seen;
  for (std::size_t i = 0; i < j["words"].size(); ++i) {
    const auto& entry = j["words"][i];
    if (!entry.is_string()) throw ParseError(0, "words[" + std::to_string(i) + "] is not a string");
    const std::string s = entry.get<std::string>();
    if (static_cast<long long>(s.size()) != n)
      throw ParseError(0, "words[" + std::to_string(i) + "] has length " +
                              std::to_string(s.size()) + ", expected " + std::to_string(n));
    Word w;
    try {
      w = word_from_digits(s, static_cast<int>(q));
    } catch (const std::invalid_argument& e) {
      throw ParseError(0, "words[" + std::to_string(i) + "]: " + e.what());
    }
    const auto [it, inserted] = first_seen.emplace(w, i);
    if (!inserted)
      throw ParseError(0, "duplicate word " + s + " (words[" + std::to_string(it->second) +
                              "] and words[" + std::to_string(i) + "])");
    words.push_back(std::move(w));
  }
  if (words.empty()) throw ParseError(0, "no codewords");
  return Code(static_cast<int>(q), static_cast<int>(n), std::move(words));
}

inline Code parse_code(const std::string& text) {
  std::size_t i = 0;
  while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == '\n' || text[i] == '\r'))
    ++i;
  if (i < text.size() && text[i] == '{') {
    try {
      return code_from_json(nlohmann::json::parse(text));
    } catch (const nlohmann::json::parse_error& e) {
      const std::size_t upto = std::min<std::size_t>(e.byte, text.size());
      const int line = 1 + static_cast<int>(std::count(text.begin(), text.begin() + upto, '\n'));
      throw ParseError(line, std::string("invalid JSON: ") + e.what());
    }
  }
  return parse_code_text(text);
}

inline std::string code_to_text(const Code& c) {
  std::string out = std::to_string(c.q()) + " " + std::to_string(c.n()) + "\n";
  for (const Word& w : c.words()) {
    out += word_to_string(w, c.q());
    out += '\n';
  }
  return out;
}

inline nlohmann::json code_to_json(const Code& c) {
  nlohmann::json j;
  j["q"] = c.q();
  j["n"] = c.n();
  auto& arr = j["words"] = nlohmann::json::array();
  for (const Word& w : c.words()) arr.push_back(word_to_string(w, c.q()));
  return j;
}

inline Code read_code_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_code(buf.str());
}

inline void write_code_file(const std::string& path, const Code& c, bool as_json = false) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  if (as_json)
    out << code_to_json(c).dump(2) << "\n";
  else
    out << code_to_text(c);
}

}  // namespace codebounds
