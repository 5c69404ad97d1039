#include "hkprod/parse.hpp"

#include <cctype>
#include <limits>
#include <string>

#include "hkprod/errors.hpp"

namespace hkprod {

namespace {

class Parser {
 public:
  Parser(std::string text, const RingPtr& ring) : text_(std::move(text)), ring_(ring) {}

  Polynomial parse() {
    skip_space();
    if (at_end()) fail("empty expression");
    Polynomial result = expression();
    skip_space();
    if (!at_end()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return result;
  }

 private:
  // expression ::= ['+'|'-'] product (('+'|'-') product)*
  Polynomial expression() {
    Polynomial acc(ring_);
    bool negate = false;
    skip_space();
    if (peek('+')) {
      ++pos_;
    } else if (peek('-')) {
      ++pos_;
      negate = true;
    }
    Polynomial first = product();
    acc = negate ? -first : first;
    for (;;) {
      skip_space();
      if (peek('+')) {
        ++pos_;
        acc = acc + product();
      } else if (peek('-')) {
        ++pos_;
        acc = acc - product();
      } else {
        return acc;
      }
    }
  }

  // product ::= factor ('*' factor)*
  Polynomial product() {
    Polynomial acc = factor();
    for (;;) {
      skip_space();
      if (!peek('*')) return acc;
      ++pos_;
      acc = acc * factor();
    }
  }

  // factor ::= atom ('^' nat)?
  Polynomial factor() {
    Polynomial base = atom();
    skip_space();
    if (!peek('^')) return base;
    ++pos_;
    skip_space();
    if (at_end() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) fail("exponent must be a natural number");
    std::uint64_t e = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      std::uint64_t digit = static_cast<std::uint64_t>(text_[pos_++] - '0');
      if (e > (std::numeric_limits<std::uint32_t>::max() - digit) / 10) fail("exponent too large");
      e = e * 10 + digit;
    }
    return base.pow(e);
  }

  // atom ::= integer | variable | '(' expression ')' | '-' factor
  Polynomial atom() {
    skip_space();
    if (at_end()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = expression();
      skip_space();
      if (!peek(')')) fail("missing ')'");
      ++pos_;
      return inner;
    }
    if (c == '-') {
      ++pos_;
      return -factor();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::uint64_t p = ring_->characteristic();
      std::uint64_t value = 0;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
        value = (value * 10 + static_cast<std::uint64_t>(text_[pos_++] - '0')) % p;
      return Polynomial::constant(ring_, static_cast<std::int64_t>(value));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
      std::string name = text_.substr(start, pos_ - start);
      auto idx = ring_->index_of(name);
      if (!idx) fail("unknown variable '" + name + "'");
      return Polynomial::variable(ring_, *idx);
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  bool at_end() const { return pos_ >= text_.size(); }
  bool peek(char c) const { return !at_end() && text_[pos_] == c; }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at position " + std::to_string(pos_) + " in \"" + text_ + "\"");
  }

  std::string text_;
  const RingPtr& ring_;
  std::size_t pos_ = 0;
};

std::string normalize_minus(std::string_view text) {
  static constexpr std::string_view kUnicodeMinus = "\xE2\x88\x92";
  std::string out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size();) {
    if (text.substr(i, kUnicodeMinus.size()) == kUnicodeMinus) {
      out.push_back('-');
      i += kUnicodeMinus.size();
    } else {
      out.push_back(text[i++]);
    }
  }
  return out;
}

}  // namespace

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring) {
  return Parser(normalize_minus(text), ring).parse();
}

Polynomial parse_polynomial(std::string_view text, const RingPresentation& ring) {
  return parse_polynomial(text, ring.base());
}

}  // namespace hkprod
