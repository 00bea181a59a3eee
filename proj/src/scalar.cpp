#include "dgh/scalar.hpp"

#include <cctype>

namespace dgh {

const char* kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::InvalidParam: return "InvalidParam";
    case ErrorKind::RingMismatch: return "RingMismatch";
    case ErrorKind::LabelMismatch: return "LabelMismatch";
    case ErrorKind::VariantMismatch: return "VariantMismatch";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::InvalidBasisKey: return "InvalidBasisKey";
    case ErrorKind::DegreeBoundExceeded: return "DegreeBoundExceeded";
    case ErrorKind::SingularTable: return "SingularTable";
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::NotStabilized: return "NotStabilized";
    case ErrorKind::FiltrationLeak: return "FiltrationLeak";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::InternalError: return "InternalError";
  }
  return "Unknown";
}

void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

namespace {

bool is_integer_text(std::string_view s) {
  size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  text = trim(text);
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_text(num) || !is_integer_text(den) || den.front() == '-')
    fail(ErrorKind::InvalidParam, "not a rational number: '" + std::string(text) + "'");
  std::string n(num), m(den);
  if (n.front() == '+') n.erase(0, 1);
  if (m.front() == '+') m.erase(0, 1);
  mpz_class zn(n, 10), zd(m, 10);
  if (zd == 0) fail(ErrorKind::DivisionByZero, "zero denominator in '" + std::string(text) + "'");
  Scalar r(zn, zd);
  r.canonicalize();
  return r;
}

std::vector<Scalar> parse_scalar_list(std::string_view text) {
  std::vector<Scalar> out;
  text = trim(text);
  if (text.empty()) return out;
  size_t start = 0;
  while (true) {
    size_t comma = text.find(',', start);
    out.push_back(parse_scalar(text.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string to_string(const Scalar& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Scalar divide(const Scalar& a, const Scalar& b) {
  if (b == 0) fail(ErrorKind::DivisionByZero, "division of " + to_string(a) + " by zero");
  return Scalar(a / b);
}

Scalar power(const Scalar& x, long e) {
  if (e < 0) return power(divide(Scalar(1), x), -e);
  Scalar r = 1, b = x;
  while (e > 0) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

}  // namespace dgh
