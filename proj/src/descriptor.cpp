#include "horo/descriptor.hpp"

#include <cctype>
#include <charconv>
#include <limits>

#include "horo/errors.hpp"

namespace horo {

namespace {

std::string normalize(std::string_view text) {
  std::string out;
  int depth = 0;
  std::size_t first = text.find_first_not_of(" \t\r\n");
  std::size_t last = text.find_last_not_of(" \t\r\n");
  if (first == std::string_view::npos) return out;
  for (char c : text.substr(first, last - first + 1)) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (depth > 0 && std::isspace(static_cast<unsigned char>(c))) continue;
    out += c;
  }
  return out;
}

class Cursor {
 public:
  explicit Cursor(std::string text) : text_(std::move(text)) {}

  bool done() const { return pos_ >= text_.size(); }
  char peek() const { return done() ? '\0' : text_[pos_]; }

  bool accept(std::string_view token) {
    if (text_.compare(pos_, token.size(), token) == 0) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  void expect(std::string_view token) {
    if (!accept(token)) fail("expected '" + std::string(token) + "'");
  }

  std::int64_t integer() {
    const std::size_t start = pos_;
    while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected an integer");
    std::int64_t value = 0;
    const auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, value);
    if (ec != std::errc()) {
      pos_ = start;
      fail("integer out of range");
    }
    return value;
  }

  int small_integer() {
    const std::size_t start = pos_;
    const std::int64_t v = integer();
    if (v > std::numeric_limits<int>::max()) {
      pos_ = start;
      fail("integer out of range");
    }
    return static_cast<int>(v);
  }

  void finish() {
    if (!done()) fail("unexpected trailing input");
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at '" + bad_token() + "' (position " + std::to_string(pos_) +
                     ") in descriptor '" + text_ + "'");
  }

 private:
  std::string bad_token() const {
    if (done()) return "<end>";
    std::size_t end = pos_ + 1;
    if (std::isalnum(static_cast<unsigned char>(text_[pos_])))
      while (end < text_.size() && std::isalnum(static_cast<unsigned char>(text_[end]))) ++end;
    return text_.substr(pos_, end - pos_);
  }

  std::string text_;
  std::size_t pos_ = 0;
};

std::vector<std::int64_t> integer_list(Cursor& cur, bool allow_empty) {
  std::vector<std::int64_t> values;
  if (allow_empty && (cur.peek() == ')' || cur.peek() == ';')) return values;
  values.push_back(cur.integer());
  while (cur.accept(",")) values.push_back(cur.integer());
  return values;
}

HorosphericalFamily family(Cursor& cur) {
  cur.expect("X");
  const char which = cur.peek();
  switch (which) {
    case '1': {
      cur.expect("1");
      cur.expect("(");
      const int n = cur.small_integer();
      cur.expect(")");
      return HorosphericalFamily::X1(n);
    }
    case '2': cur.expect("2"); return HorosphericalFamily::X2();
    case '3': {
      cur.expect("3");
      cur.expect("(");
      const int n = cur.small_integer();
      cur.expect(",");
      const int m = cur.small_integer();
      cur.expect(")");
      return HorosphericalFamily::X3(n, m);
    }
    case '4': cur.expect("4"); return HorosphericalFamily::X4();
    case '5': cur.expect("5"); return HorosphericalFamily::X5();
    default: cur.fail("unknown family");
  }
}

int codim_suffix(Cursor& cur) {
  cur.expect("+c");
  return cur.small_integer();
}

}  // namespace

HorosphericalFamily parse_family(std::string_view text) {
  Cursor cur(normalize(text));
  HorosphericalFamily f = family(cur);
  cur.finish();
  return f;
}

ClassifiedVariety parse_descriptor(std::string_view text) {
  Cursor cur(normalize(text));
  if (cur.done()) cur.fail("empty descriptor");

  if (cur.peek() == 'X') {
    HorosphericalFamily f = family(cur);
    cur.finish();
    return f;
  }
  if (cur.accept("WCI(")) {
    auto weights = integer_list(cur, false);
    cur.expect(";");
    auto degrees = integer_list(cur, true);
    cur.expect(")");
    cur.finish();
    return CompleteIntersection(WeightedProjectiveSpace(std::move(weights)), std::move(degrees));
  }
  if (cur.accept("OG(")) {
    const int k = cur.small_integer();
    cur.expect(",");
    const int n = cur.small_integer();
    cur.expect(")");
    const int c = codim_suffix(cur);
    cur.finish();
    if (n != 2 * k)
      throw DomainError("OG(k,n) sections need n = 2k, got OG(" + std::to_string(k) + "," +
                        std::to_string(n) + ")");
    return LinearSection::orthogonal(k, c);
  }
  if (cur.accept("G(")) {
    const int k = cur.small_integer();
    cur.expect(",");
    const int n = cur.small_integer();
    cur.expect(")");
    const int c = codim_suffix(cur);
    cur.finish();
    return LinearSection::grassmannian(k, n, c);
  }

  const char s = cur.peek();
  if (std::string_view("ABCDEFG").find(s) == std::string_view::npos)
    cur.fail("unknown descriptor kind");
  cur.expect(std::string(1, s));
  const int rank = cur.small_integer();
  cur.expect("/P");
  const int k = cur.small_integer();
  cur.finish();
  return HomogeneousSpace(LieType(static_cast<Series>(s), rank), k);
}

}  // namespace horo
