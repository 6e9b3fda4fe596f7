#include "noneq/cli/ini.hpp"

#include <algorithm>
#include <cctype>

namespace noneq::cli {

ParseError::ParseError(const std::string& message, std::size_t line,
                       std::size_t column)
    : std::runtime_error("line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ": " + message),
      message_(message),
      line_(line),
      column_(column) {}

const IniEntry* IniSection::find(std::string_view key) const {
  for (const auto& e : entries)
    if (e.key == key) return &e;
  return nullptr;
}

const IniSection* IniDocument::find(std::string_view name) const {
  for (const auto& s : sections)
    if (s.name == name) return &s;
  return nullptr;
}

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

bool is_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' ||
         c == '.';
}

// strip a trailing comment and whitespace; returns the kept length
std::size_t content_length(std::string_view line) {
  std::size_t end = line.size();
  for (std::size_t i = 0; i < line.size(); ++i)
    if ((line[i] == '#' || line[i] == ';') && (i == 0 || is_space(line[i - 1]))) {
      end = i;
      break;
    }
  while (end > 0 && is_space(line[end - 1])) --end;
  return end;
}

}  // namespace

IniDocument parse_ini(std::string_view text) {
  IniDocument doc;
  doc.sections.push_back({"", 0, {}});
  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = std::min(text.find('\n', pos), text.size());
    const std::string_view raw = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++lineno;
    const std::string_view line = raw.substr(0, content_length(raw));
    std::size_t b = 0;
    while (b < line.size() && is_space(line[b])) ++b;
    if (b == line.size()) {
      if (nl == text.size()) break;
      continue;
    }

    if (line[b] == '[') {
      if (line.back() != ']')
        throw ParseError("expected ']' to close the section header", lineno,
                         line.size() + 1);
      std::size_t s = b + 1, e = line.size() - 1;
      while (s < e && is_space(line[s])) ++s;
      while (e > s && is_space(line[e - 1])) --e;
      const std::string name(line.substr(s, e - s));
      if (name.empty()) throw ParseError("empty section name", lineno, b + 2);
      for (std::size_t i = s; i < e; ++i)
        if (!is_name_char(line[i]))
          throw ParseError("invalid character in section name", lineno, i + 1);
      if (doc.find(name))
        throw ParseError("duplicate section [" + name + "]", lineno, b + 1);
      doc.sections.push_back({name, lineno, {}});
    } else {
      std::size_t k = b;
      while (k < line.size() && is_name_char(line[k])) ++k;
      if (k == b)
        throw ParseError("expected a key or a section header", lineno, b + 1);
      const std::string key(line.substr(b, k - b));
      std::size_t eq = k;
      while (eq < line.size() && is_space(line[eq])) ++eq;
      if (eq == line.size() || line[eq] != '=')
        throw ParseError("expected '=' after key '" + key + "'", lineno,
                         eq + 1);
      std::size_t v = eq + 1;
      while (v < line.size() && is_space(line[v])) ++v;
      if (v == line.size())
        throw ParseError("missing value for key '" + key + "'", lineno, v + 1);
      auto& sec = doc.sections.back();
      if (sec.find(key))
        throw ParseError("duplicate key '" + key + "'", lineno, b + 1);
      sec.entries.push_back({key, std::string(line.substr(v)), lineno, b + 1,
                             v + 1});
    }
    if (nl == text.size()) break;
  }
  return doc;
}

}  // namespace noneq::cli
