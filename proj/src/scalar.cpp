#include "liederiv/scalar.hpp"

#include <cctype>

#include "liederiv/errors.hpp"

namespace liederiv {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' || den[0] == '+') {
    throw InputError(error_code::kBadScalar, "not a rational literal: '" + std::string(text) + "'");
  }
  const std::string num_str(num[0] == '+' ? num.substr(1) : num);
  mpz_class n(num_str, 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) {
    throw InputError(error_code::kBadScalar, "zero denominator: '" + std::string(text) + "'");
  }
  Scalar q(n, d);
  q.canonicalize();
  return q;
}

std::string format_scalar(const Scalar& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

bool is_zero(const Vector& v) {
  for (const auto& x : v) {
    if (!is_zero(x)) return false;
  }
  return true;
}

Vector zero_vector(std::size_t n) { return Vector(n, Scalar(0)); }

Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v(n, Scalar(0));
  v.at(i) = 1;
  return v;
}

Vector add(const Vector& a, const Vector& b) {
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b.at(i);
  return out;
}

Vector sub(const Vector& a, const Vector& b) {
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b.at(i);
  return out;
}

Vector scale(const Scalar& s, const Vector& v) {
  Vector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = s * v[i];
  return out;
}

std::string vector_key(const Vector& v) {
  std::string key;
  for (const auto& x : v) {
    key += format_scalar(x);
    key += ',';
  }
  return key;
}

}  // namespace liederiv
