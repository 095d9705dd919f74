#include "hurwitz_sos/word.hpp"

#include <algorithm>
#include <vector>

#include "hurwitz_sos/error.hpp"

namespace hsos {

Word::Word(std::string_view letters) : letters_(letters) {
  if (letters_.empty()) throw InvalidInput("word must be nonempty");
  for (char c : letters_) {
    if (c != 'A' && c != 'B') {
      throw InvalidInput("word '" + letters_ + "' contains a letter outside {A,B}");
    }
  }
}

std::size_t Word::count(Letter l) const {
  return static_cast<std::size_t>(std::count(letters_.begin(), letters_.end(), static_cast<char>(l)));
}

Word Word::rotated(std::size_t shift) const {
  shift %= letters_.size();
  std::string s = letters_.substr(shift) + letters_.substr(0, shift);
  return Word(s);
}

Word Word::reversed() const { return Word(std::string(letters_.rbegin(), letters_.rend())); }

Word Word::swapped() const {
  std::string s = letters_;
  for (char& c : s) c = (c == 'A') ? 'B' : 'A';
  return Word(s);
}

std::size_t least_rotation(std::string_view s) {
  // Booth: failure function over the doubled string.
  const std::size_t n = s.size();
  if (n == 0) return 0;
  std::vector<long> f(2 * n, -1);
  std::size_t k = 0;
  for (std::size_t j = 1; j < 2 * n; ++j) {
    const char sj = s[j % n];
    long i = f[j - k - 1];
    while (i != -1 && sj != s[(k + static_cast<std::size_t>(i) + 1) % n]) {
      if (sj < s[(k + static_cast<std::size_t>(i) + 1) % n]) k = j - static_cast<std::size_t>(i) - 1;
      i = f[static_cast<std::size_t>(i)];
    }
    if (i == -1 && sj != s[(k + static_cast<std::size_t>(i) + 1) % n]) {
      if (sj < s[(k + static_cast<std::size_t>(i) + 1) % n]) k = j;
      f[j - k] = -1;
    } else {
      f[j - k] = i + 1;
    }
  }
  return k % n;
}

CyclicClass::CyclicClass(Word rep) : rep_(std::move(rep)), b_count_(rep_.count(Letter::B)) {}

CyclicClass canonical_rotation(const Word& w) {
  return CyclicClass(w.rotated(least_rotation(w.str())));
}

CyclicClass canonical_rotation(std::string_view letters) { return canonical_rotation(Word(letters)); }

Word reverse(const Word& w) { return w.reversed(); }

}  // namespace hsos
