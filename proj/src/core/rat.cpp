#include "pathweights/rat.hpp"

#include <cctype>
#include <utility>

#include "pathweights/errors.hpp"

namespace pathweights {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rat::Rat(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rat::Rat(std::int64_t num, std::int64_t den) {
  if (den == 0) throw InvalidParameter("rational with zero denominator");
  value_ = mpq_class(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
  value_.canonicalize();
}

Rat Rat::parse(std::string_view text) {
  std::string_view body = text;
  if (!body.empty() && body.front() == '-') body.remove_prefix(1);
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw ParseError("not a rational number: '" + std::string(text) + "'");
  }
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  if (text.front() == '-') n = -n;
  return Rat(mpq_class(n, d));
}

std::string Rat::str() const { return value_.get_str(10); }

std::string Rat::numerator_str() const { return value_.get_num().get_str(10); }

std::string Rat::denominator_str() const { return value_.get_den().get_str(10); }

bool Rat::is_integer() const { return value_.get_den() == 1; }

Rat Rat::operator-() const { return Rat(mpq_class(-value_)); }

Rat& Rat::operator+=(const Rat& other) {
  value_ += other.value_;
  return *this;
}

Rat& Rat::operator-=(const Rat& other) {
  value_ -= other.value_;
  return *this;
}

Rat& Rat::operator*=(const Rat& other) {
  value_ *= other.value_;
  return *this;
}

Rat& Rat::operator/=(const Rat& other) {
  if (other.is_zero()) throw InvalidParameter("division by zero");
  value_ /= other.value_;
  return *this;
}

Rat Rat::half() const { return Rat(mpq_class(value_ / 2)); }

std::size_t Rat::hash() const { return std::hash<std::string>{}(str()); }

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

}  // namespace pathweights
