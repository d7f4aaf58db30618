#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bohrseq {

// The two generators of the rank-2 free group.
enum class Gen : std::uint8_t { A = 0, B = 1 };

inline char gen_char(Gen g) { return g == Gen::A ? 'a' : 'b'; }
inline Gen other_gen(Gen g) { return g == Gen::A ? Gen::B : Gen::A; }

class WordError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Syntax error in word text; position is a 0-based byte offset.
class ParseError : public WordError {
 public:
  ParseError(const std::string& msg, std::size_t position);
  std::size_t position;
};

class ExponentOverflow : public WordError {
 public:
  using WordError::WordError;
};

// Run of a single generator with a nonzero signed exponent.
struct Syllable {
  Gen gen;
  std::int64_t exp;
  friend bool operator==(const Syllable&, const Syllable&) = default;
};

// Freely reduced word over {a, b}: adjacent syllables always have distinct
// generators and every exponent is nonzero. The empty word is the identity.
// Words are immutable values; all operations below are pure.
class Word {
 public:
  Word() = default;
  static Word generator(Gen g, std::int64_t exp = 1);
  // Reduces the given runs; accepts arbitrary (unreduced) input.
  static Word from_syllables(const std::vector<Syllable>& runs);

  const std::vector<Syllable>& syllables() const { return syl_; }
  bool is_identity() const { return syl_.empty(); }
  std::uint64_t letter_length() const;

  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Syllable> syl_;
  // Appends g^e maintaining the reduced invariant (stack merge).
  void push(Gen g, std::int64_t e);

  friend Word concat(const Word&, const Word&);
  friend Word inverse(const Word&);
  friend Word power(const Word&, std::int64_t);
};

// Grammar: letters a, b (capitals A, B are inverses), optional `^` signed
// integer exponent, parentheses for grouping, [x,y] for the commutator,
// juxtaposition for the product, whitespace ignored, `e` or the empty
// string for the identity.
Word parse(std::string_view text);

// Canonical form: syllables space-separated, `a` for exponent 1, `a^k`
// otherwise, `e` for the identity. parse(format(w)) == w.
std::string format(const Word& w);

Word concat(const Word& u, const Word& v);
Word inverse(const Word& w);
Word power(const Word& w, std::int64_t k);
Word commutator(const Word& u, const Word& v);  // u v u^-1 v^-1
Word conjugate(const Word& u, const Word& v);   // u v u^-1

inline bool is_identity(const Word& w) { return w.is_identity(); }
inline std::uint64_t letter_length(const Word& w) { return w.letter_length(); }

std::ostream& operator<<(std::ostream& os, const Word& w);

}  // namespace bohrseq
