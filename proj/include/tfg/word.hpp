#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "tfg/error.hpp"

namespace tfg {

using Letter = uint8_t;

/// Finite ordered alphabet. Letters are referred to by index everywhere;
/// symbols are only used at the I/O boundary.
class Alphabet {
 public:
  explicit Alphabet(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {
    require(!symbols_.empty(), errc::bad_config, "alphabet must be non-empty");
    require(symbols_.size() <= 250, errc::bad_config, "alphabet too large");
    for (size_t i = 0; i < symbols_.size(); ++i) {
      require(!symbols_[i].empty(), errc::bad_config, "empty alphabet symbol");
      auto ins = index_.emplace(symbols_[i], Letter(i));
      require(ins.second, errc::bad_config, "duplicate alphabet symbol " + symbols_[i]);
    }
  }

  size_t size() const { return symbols_.size(); }
  const std::string& symbol(Letter a) const { return symbols_.at(a); }
  Letter letter(const std::string& s) const {
    auto it = index_.find(s);
    require(it != index_.end(), errc::bad_config, "unknown symbol " + s);
    return it->second;
  }
  bool has_symbol(const std::string& s) const { return index_.count(s) != 0; }

  bool operator==(const Alphabet& o) const { return symbols_ == o.symbols_; }

 private:
  std::vector<std::string> symbols_;
  std::map<std::string, Letter> index_;
};

/// A finite word over an alphabet, stored as letter indices.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  Word(std::initializer_list<Letter> l) : letters_(l) {}

  static Word single(Letter a) { return Word(std::vector<Letter>{a}); }

  size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter at(size_t i) const { return letters_.at(i); }
  Letter operator[](size_t i) const { return letters_[i]; }

  const std::vector<Letter>& letters() const { return letters_; }

  Word sub(size_t pos, size_t len) const {
    require(pos + len <= letters_.size(), errc::word_too_short, "subword out of range");
    return Word(std::vector<Letter>(letters_.begin() + pos, letters_.begin() + pos + len));
  }
  Word prefix(size_t len) const { return sub(0, len); }
  Word suffix(size_t len) const { return sub(size() - len, len); }

  Word operator+(const Word& o) const {
    std::vector<Letter> v = letters_;
    v.insert(v.end(), o.letters_.begin(), o.letters_.end());
    return Word(std::move(v));
  }
  Word prepend(Letter a) const {
    std::vector<Letter> v;
    v.reserve(size() + 1);
    v.push_back(a);
    v.insert(v.end(), letters_.begin(), letters_.end());
    return Word(std::move(v));
  }
  Word append(Letter a) const {
    std::vector<Letter> v = letters_;
    v.push_back(a);
    return Word(std::move(v));
  }

  bool is_periodic_with(size_t p) const {
    if (p == 0 || p >= size()) return false;
    for (size_t i = 0; i + p < size(); ++i)
      if (letters_[i] != letters_[i + p]) return false;
    return true;
  }

  auto operator<=>(const Word& o) const = default;

  std::string str(const Alphabet& ab) const {
    std::string s;
    for (Letter a : letters_) s += ab.symbol(a);
    return s;
  }

  static Word parse(const Alphabet& ab, const std::string& s) {
    // single-character symbols only; sufficient for the shipped systems
    std::vector<Letter> v;
    for (char c : s) v.push_back(ab.letter(std::string(1, c)));
    return Word(std::move(v));
  }

 private:
  std::vector<Letter> letters_;
};

}  // namespace tfg
