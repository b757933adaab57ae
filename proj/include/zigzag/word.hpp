#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace zigzag {

/// Raised for malformed literals, files and violated preconditions on user input.
class input_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Letter : char { plus = '+', minus = '-' };

inline constexpr Letter flip(Letter a) noexcept {
  return a == Letter::plus ? Letter::minus : Letter::plus;
}

/// A finite word over {+, -}. Letters are stored as the characters '+' and '-'.
///
/// Words are ordered canonically: shorter words first, then lexicographically
/// with '+' before '-'.
class Word {
 public:
  Word() = default;

  explicit Word(std::string_view letters) : letters_(letters) {
    for (char c : letters_)
      if (c != '+' && c != '-')
        throw input_error("invalid letter '" + std::string(1, c) + "' in word \"" +
                          std::string(letters) + "\"");
  }

  explicit Word(Letter a) : letters_(1, static_cast<char>(a)) {}

  /// Parses the textual literal: "e" is the empty word, anything else must be
  /// a nonempty string over '+' and '-'.
  static Word parse(std::string_view literal) {
    if (literal == "e") return Word{};
    if (literal.empty()) throw input_error("empty word literal (use \"e\")");
    return Word{literal};
  }

  std::size_t length() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  Letter operator[](std::size_t i) const noexcept { return static_cast<Letter>(letters_[i]); }

  const std::string& letters() const noexcept { return letters_; }

  Word substr(std::size_t pos, std::size_t count = std::string::npos) const {
    Word w;
    w.letters_ = letters_.substr(pos, count);
    return w;
  }

  void push_back(Letter a) { letters_.push_back(static_cast<char>(a)); }

  Word& operator+=(const Word& other) {
    letters_ += other.letters_;
    return *this;
  }

  friend Word operator+(Word lhs, const Word& rhs) { return lhs += rhs; }

  friend Word operator+(Word lhs, Letter a) {
    lhs.push_back(a);
    return lhs;
  }

  friend Word operator+(Letter a, const Word& rhs) {
    Word w{a};
    return w += rhs;
  }

  friend bool operator==(const Word&, const Word&) = default;

  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    if (auto c = a.length() <=> b.length(); c != 0) return c;
    // '+' (0x2b) sorts before '-' (0x2d) in plain character order.
    return a.letters_.compare(b.letters_) <=> 0;
  }

 private:
  std::string letters_;
};

/// Literal form: "e" for the empty word.
inline std::string to_string(const Word& w) { return w.empty() ? std::string("e") : w.letters(); }

/// u is a subword of v: u is obtained from v by deleting letters.
inline bool subword_leq(const Word& u, const Word& v) noexcept {
  std::size_t i = 0;
  for (std::size_t j = 0; j < v.length() && i < u.length(); ++j)
    if (u[i] == v[j]) ++i;
  return i == u.length();
}

/// Reverses the word and interchanges + and -.
inline Word involute(const Word& u) {
  Word r;
  for (std::size_t i = u.length(); i-- > 0;) r.push_back(flip(u[i]));
  return r;
}

/// All words of length exactly n, in canonical order.
inline std::vector<Word> words_of_length(std::size_t n) {
  std::vector<Word> out;
  out.reserve(std::size_t{1} << n);
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    Word w;
    for (std::size_t i = 0; i < n; ++i)
      w.push_back((mask >> (n - 1 - i)) & 1U ? Letter::minus : Letter::plus);
    out.push_back(std::move(w));
  }
  return out;
}

/// All words of length at most n, in canonical order.
inline std::vector<Word> words_up_to(std::size_t n) {
  std::vector<Word> out;
  for (std::size_t k = 0; k <= n; ++k) {
    auto layer = words_of_length(k);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

}  // namespace zigzag

template <>
struct std::hash<zigzag::Word> {
  std::size_t operator()(const zigzag::Word& w) const noexcept {
    return std::hash<std::string>{}(w.letters());
  }
};
