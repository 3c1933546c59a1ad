#include "posetahedra/rational.hpp"

#include <cstdlib>
#include <string>

#include "posetahedra/errors.hpp"

namespace posetahedra {

namespace {

constexpr std::string_view kUnicodeMinus = "\xE2\x88\x92";

bool is_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (s.starts_with(kUnicodeMinus)) {
    negative = true;
    s.remove_prefix(kUnicodeMinus.size());
  } else if (s.starts_with('-')) {
    negative = true;
    s.remove_prefix(1);
  } else if (s.starts_with('+')) {
    s.remove_prefix(1);
  }
  auto slash = s.find('/');
  std::string_view num = s.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
  if (!is_digits(num) || !is_digits(den)) {
    throw ParseError("not a rational: '" + std::string(text) + "'");
  }
  Integer n{std::string(num)};
  Integer d{std::string(den)};
  if (d == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
  Rational value(n, d);
  return negative ? Rational(-value) : value;
}

std::string format_rational(const Rational& value) {
  return boost::multiprecision::numerator(value).str() + "/" +
         boost::multiprecision::denominator(value).str();
}

double to_double(const Rational& value) { return value.convert_to<double>(); }

std::size_t bit_size(const Rational& value) {
  auto bits = [](const Integer& z) -> std::size_t {
    if (z == 0) return 1;
    return boost::multiprecision::msb(boost::multiprecision::abs(z)) + 1;
  };
  return bits(boost::multiprecision::numerator(value)) + bits(boost::multiprecision::denominator(value));
}

std::size_t max_bit_size(const RationalVector& values) {
  std::size_t best = 0;
  for (const auto& v : values) best = std::max(best, bit_size(v));
  return best;
}

std::optional<std::size_t> max_bits_from_env() {
  const char* raw = std::getenv("POSETAHEDRA_MAX_BITS");
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  char* end = nullptr;
  unsigned long long v = std::strtoull(raw, &end, 10);
  if (end == raw || *end != '\0') {
    throw ParseError("POSETAHEDRA_MAX_BITS must be a non-negative integer");
  }
  return static_cast<std::size_t>(v);
}

void enforce_bit_limit(const std::vector<RationalVector>& rows, std::string_view stage) {
  auto cap = max_bits_from_env();
  if (!cap) return;
  for (const auto& row : rows) {
    std::size_t bits = max_bit_size(row);
    if (bits > *cap) {
      throw BitLimitError("rational of " + std::to_string(bits) + " bits exceeds POSETAHEDRA_MAX_BITS=" +
                          std::to_string(*cap) + " at " + std::string(stage));
    }
  }
}

Rational dot(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) throw PreconditionError("dot: length mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rational sum(const RationalVector& values) {
  Rational s = 0;
  for (const auto& v : values) s += v;
  return s;
}

}  // namespace posetahedra
