#include "radix/scalar.hpp"

#include <cctype>

#include "radix/error.hpp"

namespace radix {

namespace {

constexpr std::string_view kUnicodeMinus = "\xE2\x88\x92";  // U+2212

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);

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

  std::string_view num = s;
  std::string_view den = "1";
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    num = s.substr(0, slash);
    den = s.substr(slash + 1);
  }
  if (!all_digits(num) || !all_digits(den)) {
    throw Error(ErrorKind::ParseError, "not a rational literal: '" + std::string(text) + "'");
  }

  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) {
    throw Error(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
  }
  Scalar value(negative ? mpz_class(-n) : n, d);
  value.canonicalize();
  return value;
}

std::string to_string(const Scalar& value) { return value.get_str(); }

std::string to_string(const Vector& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ' ';
    out += v[i].get_str();
  }
  return out;
}

bool is_zero(const Vector& v) {
  for (const auto& x : v) {
    if (x != 0) return false;
  }
  return true;
}

Vector zero_vector(std::size_t n) { return Vector(n, Scalar(0)); }

Vector unit_vector(std::size_t n, std::size_t index) {
  Vector v(n, Scalar(0));
  v.at(index) = 1;
  return v;
}

Scalar dot(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorKind::DimensionMismatch, "dot of vectors with different lengths");
  }
  Scalar acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

}  // namespace radix
