#pragma once

#include <algorithm>
#include <cctype>
#include <optional>
#include <string>
#include <vector>

#include "dpl/errors.hpp"

namespace dpl {

inline bool is_identifier(const std::string& name) {
  if (name.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(name[0])) && name[0] != '_')
    return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

/// Ordered finite set of propositional symbols. The construction order is
/// fixed and used as the canonical world-encoding order.
class Vocabulary {
 public:
  Vocabulary() = default;

  explicit Vocabulary(std::vector<std::string> symbols)
      : symbols_(std::move(symbols)) {
    for (const auto& s : symbols_) {
      if (!is_identifier(s))
        throw Error("vocabulary symbol is not an identifier: '" + s + "'");
      if (s == "top" || s == "bot")
        throw Error("vocabulary symbol '" + s + "' is a reserved word");
      if (std::count(symbols_.begin(), symbols_.end(), s) != 1)
        throw Error("duplicate vocabulary symbol: '" + s + "'");
    }
  }

  std::size_t size() const { return symbols_.size(); }
  const std::string& symbol(std::size_t i) const { return symbols_[i]; }
  const std::vector<std::string>& symbols() const { return symbols_; }

  std::optional<std::size_t> index_of(const std::string& name) const {
    for (std::size_t i = 0; i < symbols_.size(); ++i)
      if (symbols_[i] == name) return i;
    return std::nullopt;
  }

  bool contains(const std::string& name) const {
    return index_of(name).has_value();
  }

  friend bool operator==(const Vocabulary&, const Vocabulary&) = default;

 private:
  std::vector<std::string> symbols_;
};

}  // namespace dpl
