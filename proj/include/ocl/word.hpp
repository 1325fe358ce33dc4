#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ocl {

// A word is a sequence of symbol indices into an Alphabet, packed one symbol
// per byte. Byte order equals alphabet declaration order, so std::string's
// built-in comparison gives the per-position symbol order and (length, bytes)
// gives the length-lexicographic order used throughout.
using Word = std::string;

inline Word word_of(std::initializer_list<int> syms) {
  Word w;
  for (int s : syms) w.push_back(static_cast<char>(s));
  return w;
}

// true iff u comes before v in the length-first lexicographic order.
inline bool length_lex_less(const Word& u, const Word& v) {
  if (u.size() != v.size()) return u.size() < v.size();
  return u < v;
}

// Ordered set of distinct symbol names. Declaration order is the total order
// on symbols that the lexicographic word order derives from.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {
    if (symbols_.empty()) throw std::invalid_argument("alphabet must be non-empty");
    if (symbols_.size() > 200) throw std::invalid_argument("alphabet too large");
    for (size_t i = 0; i < symbols_.size(); ++i) {
      for (size_t j = i + 1; j < symbols_.size(); ++j) {
        if (symbols_[i] == symbols_[j])
          throw std::invalid_argument("duplicate symbol: " + symbols_[i]);
      }
    }
  }

  int size() const { return static_cast<int>(symbols_.size()); }
  const std::string& name(int idx) const { return symbols_.at(idx); }
  const std::vector<std::string>& names() const { return symbols_; }

  std::optional<int> index_of(const std::string& name) const {
    for (size_t i = 0; i < symbols_.size(); ++i)
      if (symbols_[i] == name) return static_cast<int>(i);
    return std::nullopt;
  }

  bool operator==(const Alphabet& o) const { return symbols_ == o.symbols_; }

  // "a a p2 b" -> word; empty string -> epsilon.
  Word parse_spaced(const std::string& text) const {
    Word w;
    size_t i = 0;
    while (i < text.size()) {
      while (i < text.size() && text[i] == ' ') ++i;
      if (i >= text.size()) break;
      size_t j = i;
      while (j < text.size() && text[j] != ' ') ++j;
      std::string sym = text.substr(i, j - i);
      auto idx = index_of(sym);
      if (!idx) throw std::invalid_argument("unknown symbol: " + sym);
      w.push_back(static_cast<char>(*idx));
      i = j;
    }
    return w;
  }

  std::string format(const Word& w, const char* sep = " ") const {
    std::string out;
    for (size_t i = 0; i < w.size(); ++i) {
      if (i) out += sep;
      out += name(static_cast<unsigned char>(w[i]));
    }
    return out;
  }

 private:
  std::vector<std::string> symbols_;
};

}  // namespace ocl
