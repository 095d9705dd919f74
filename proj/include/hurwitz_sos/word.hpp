#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>

namespace hsos {

enum class Letter : char { A = 'A', B = 'B' };

/// A nonempty word over {A, B}. Serialized as an uppercase string, e.g. "AABAABB".
class Word {
 public:
  /// Throws InvalidInput unless `letters` is nonempty and contains only 'A'/'B'.
  explicit Word(std::string_view letters);

  const std::string& str() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  Letter operator[](std::size_t i) const { return static_cast<Letter>(letters_[i]); }
  std::size_t count(Letter l) const;

  Word rotated(std::size_t shift) const;
  Word reversed() const;
  /// A <-> B letterwise.
  Word swapped() const;

  friend auto operator<=>(const Word&, const Word&) = default;
  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::string letters_;
};

/// Rotation class of a word, keyed by its lexicographically least rotation (A < B).
class CyclicClass {
 public:
  const Word& representative() const { return rep_; }
  std::size_t length() const { return rep_.size(); }
  std::size_t b_count() const { return b_count_; }
  const std::string& str() const { return rep_.str(); }

  friend auto operator<=>(const CyclicClass& a, const CyclicClass& b) { return a.rep_ <=> b.rep_; }
  friend bool operator==(const CyclicClass& a, const CyclicClass& b) { return a.rep_ == b.rep_; }

 private:
  friend CyclicClass canonical_rotation(const Word& w);
  explicit CyclicClass(Word rep);

  Word rep_;
  std::size_t b_count_;
};

/// Index of the lexicographically least rotation (Booth's algorithm, O(n)).
std::size_t least_rotation(std::string_view s);

CyclicClass canonical_rotation(const Word& w);
/// Convenience overload; throws InvalidInput for an empty or non-{A,B} string.
CyclicClass canonical_rotation(std::string_view letters);

Word reverse(const Word& w);

}  // namespace hsos
