#include "bohrseq/word.hpp"

#include <cctype>
#include <charconv>
#include <ostream>

namespace bohrseq {

namespace {

// Letter-count guard: words past this are almost certainly runaway input.
constexpr std::uint64_t kMaxLetters = std::uint64_t{1} << 62;

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) {
    throw ExponentOverflow("syllable exponent overflow");
  }
  return out;
}

}  // namespace

ParseError::ParseError(const std::string& msg, std::size_t pos)
    : WordError(msg + " at position " + std::to_string(pos)), position(pos) {}

Word Word::generator(Gen g, std::int64_t exp) {
  Word w;
  w.push(g, exp);
  return w;
}

Word Word::from_syllables(const std::vector<Syllable>& runs) {
  Word w;
  for (const auto& s : runs) w.push(s.gen, s.exp);
  return w;
}

void Word::push(Gen g, std::int64_t e) {
  if (e == 0) return;
  if (!syl_.empty() && syl_.back().gen == g) {
    const std::int64_t merged = checked_add(syl_.back().exp, e);
    if (merged == 0) {
      syl_.pop_back();
    } else {
      syl_.back().exp = merged;
    }
    return;
  }
  syl_.push_back({g, e});
}

std::uint64_t Word::letter_length() const {
  std::uint64_t total = 0;
  for (const auto& s : syl_) {
    const std::uint64_t mag =
        s.exp == INT64_MIN ? (std::uint64_t{1} << 63)
                           : static_cast<std::uint64_t>(s.exp < 0 ? -s.exp : s.exp);
    total += mag;
    if (total > kMaxLetters) throw ExponentOverflow("word letter length overflow");
  }
  return total;
}

Word concat(const Word& u, const Word& v) {
  Word out = u;
  for (const auto& s : v.syl_) out.push(s.gen, s.exp);
  return out;
}

Word inverse(const Word& w) {
  Word out;
  out.syl_.reserve(w.syl_.size());
  for (auto it = w.syl_.rbegin(); it != w.syl_.rend(); ++it) {
    if (it->exp == INT64_MIN) throw ExponentOverflow("syllable exponent overflow");
    out.syl_.push_back({it->gen, -it->exp});
  }
  return out;
}

Word power(const Word& w, std::int64_t k) {
  if (k == 0 || w.is_identity()) return Word{};
  if (k < 0) {
    if (k == INT64_MIN) throw ExponentOverflow("power exponent overflow");
    return inverse(power(w, -k));
  }
  const unsigned __int128 projected =
      static_cast<unsigned __int128>(w.letter_length()) * static_cast<unsigned __int128>(k);
  if (projected > kMaxLetters) throw ExponentOverflow("word power too long");

  // Square-and-multiply over free reduction.
  Word acc;
  Word base = w;
  std::uint64_t e = static_cast<std::uint64_t>(k);
  while (true) {
    if (e & 1) acc = concat(acc, base);
    e >>= 1;
    if (e == 0) break;
    base = concat(base, base);
  }
  return acc;
}

Word commutator(const Word& u, const Word& v) {
  return concat(concat(u, v), concat(inverse(u), inverse(v)));
}

Word conjugate(const Word& u, const Word& v) {
  return concat(concat(u, v), inverse(u));
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Word run() {
    Word w = parse_product(/*stoppers=*/"");
    skip_ws();
    if (pos_ != text_.size()) throw ParseError("unexpected character", pos_);
    return w;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool at_end() {
    skip_ws();
    return pos_ == text_.size();
  }

  char peek() { return text_[pos_]; }

  Word parse_product(std::string_view stoppers) {
    Word out;
    while (!at_end() && stoppers.find(peek()) == std::string_view::npos) {
      out = concat(out, parse_term());
    }
    return out;
  }

  Word parse_term() {
    Word factor = parse_factor();
    skip_ws();
    if (pos_ < text_.size() && peek() == '^') {
      ++pos_;
      return power(factor, parse_exponent());
    }
    return factor;
  }

  Word parse_factor() {
    skip_ws();
    if (pos_ == text_.size()) throw ParseError("unexpected end of input", pos_);
    const char c = peek();
    switch (c) {
      case 'a':
        ++pos_;
        return Word::generator(Gen::A, 1);
      case 'b':
        ++pos_;
        return Word::generator(Gen::B, 1);
      case 'A':
        ++pos_;
        return Word::generator(Gen::A, -1);
      case 'B':
        ++pos_;
        return Word::generator(Gen::B, -1);
      case 'e':
        ++pos_;
        return Word{};
      case '(': {
        ++pos_;
        Word inner = parse_product(")");
        expect(')');
        return inner;
      }
      case '[': {
        ++pos_;
        Word left = parse_product(",");
        expect(',');
        Word right = parse_product("]");
        expect(']');
        return commutator(left, right);
      }
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    }
  }

  void expect(char c) {
    skip_ws();
    if (pos_ == text_.size() || peek() != c) {
      throw ParseError(std::string("expected '") + c + "'", pos_);
    }
    ++pos_;
  }

  std::int64_t parse_exponent() {
    skip_ws();
    const std::size_t start = pos_;
    if (pos_ < text_.size() && (peek() == '+' || peek() == '-')) ++pos_;
    const std::size_t digits_start = pos_;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    if (pos_ == digits_start) throw ParseError("expected integer exponent", start);
    std::int64_t value = 0;
    const auto res = std::from_chars(text_.data() + start, text_.data() + pos_, value);
    if (res.ec == std::errc::result_out_of_range) {
      throw ExponentOverflow("exponent out of range at position " +
                             std::to_string(start));
    }
    if (res.ec != std::errc{} || res.ptr != text_.data() + pos_) {
      throw ParseError("malformed exponent", start);
    }
    return value;
  }
};

}  // namespace

Word parse(std::string_view text) { return Parser(text).run(); }

std::string format(const Word& w) {
  if (w.is_identity()) return "e";
  std::string out;
  bool first = true;
  for (const auto& s : w.syllables()) {
    if (!first) out += ' ';
    first = false;
    out += gen_char(s.gen);
    if (s.exp != 1) {
      out += '^';
      out += std::to_string(s.exp);
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Word& w) {
  return os << format(w);
}

}  // namespace bohrseq
