#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace noneq::cli {

// Scenario syntax or value error with a 1-based source position.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  std::string message_;
  std::size_t line_, column_;
};

struct IniEntry {
  std::string key;
  std::string value;
  std::size_t line = 0;
  std::size_t key_column = 0;
  std::size_t value_column = 0;
};

struct IniSection {
  std::string name;  // empty for keys before the first header
  std::size_t line = 0;
  std::vector<IniEntry> entries;

  const IniEntry* find(std::string_view key) const;
};

struct IniDocument {
  std::vector<IniSection> sections;

  const IniSection* find(std::string_view name) const;
};

// Flat sectioned key = value text. '#' and ';' start comments at the
// beginning of a line or after whitespace. Duplicate sections and keys are
// errors.
IniDocument parse_ini(std::string_view text);

}  // namespace noneq::cli
