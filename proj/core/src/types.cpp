#include "rootcount/types.hpp"

#include <sstream>

namespace rootcount {

std::string_view to_string(GroupFamily family) {
  switch (family) {
    case GroupFamily::GL: return "gl";
    case GroupFamily::U: return "u";
    case GroupFamily::Sp: return "sp";
    case GroupFamily::OrthoSum: return "o-sum";
    case GroupFamily::OrthoPlus: return "o+";
    case GroupFamily::OrthoMinus: return "o-";
    case GroupFamily::OrthoOdd: return "o-odd";
  }
  return "?";
}

GroupFamily parse_family(std::string_view name) {
  if (name == "gl") return GroupFamily::GL;
  if (name == "u") return GroupFamily::U;
  if (name == "sp") return GroupFamily::Sp;
  if (name == "o-sum") return GroupFamily::OrthoSum;
  if (name == "o+") return GroupFamily::OrthoPlus;
  if (name == "o-") return GroupFamily::OrthoMinus;
  if (name == "o-odd") return GroupFamily::OrthoOdd;
  throw std::invalid_argument("unknown group family '" + std::string(name) + "'");
}

bool is_orthogonal(GroupFamily family) {
  return family == GroupFamily::OrthoSum || family == GroupFamily::OrthoPlus ||
         family == GroupFamily::OrthoMinus || family == GroupFamily::OrthoOdd;
}

std::string to_decimal(const Integer& value) { return value.get_str(10); }

std::string to_fraction(const Rational& value) {
  Rational v = value;
  v.canonicalize();
  return v.get_num().get_str(10) + "/" + v.get_den().get_str(10);
}

Rational parse_fraction(std::string_view text) {
  Rational v;
  if (v.set_str(std::string(text), 10) != 0) {
    throw std::invalid_argument("malformed fraction '" + std::string(text) + "'");
  }
  if (v.get_den() == 0) throw std::invalid_argument("zero denominator");
  v.canonicalize();
  return v;
}

}  // namespace rootcount
