#pragma once

// Coefficient field selector: the rationals, or a prime field F_p.

#include <stdexcept>
#include <string>

namespace edgealg {

struct FieldTag {
  enum class Kind { rationals, prime };
  Kind kind = Kind::rationals;
  int p = 0;  // valid when kind == prime

  static FieldTag rationals() { return FieldTag{}; }

  static FieldTag prime(int p) {
    if (p < 2) throw std::invalid_argument("FieldTag: characteristic must be a prime >= 2");
    for (int d = 2; d * d <= p; ++d)
      if (p % d == 0) throw std::invalid_argument("FieldTag: characteristic must be prime");
    return FieldTag{Kind::prime, p};
  }

  std::string name() const {
    return kind == Kind::rationals ? "Q" : "F" + std::to_string(p);
  }

  bool operator==(const FieldTag&) const = default;
};

// Accepts "q", "Q", "f2", "F2", "f3", ...
inline FieldTag parse_field(const std::string& s) {
  if (s == "q" || s == "Q") return FieldTag::rationals();
  if ((s.size() >= 2) && (s[0] == 'f' || s[0] == 'F')) {
    try {
      return FieldTag::prime(std::stoi(s.substr(1)));
    } catch (const std::invalid_argument&) {
      // fall through to the generic error
    }
  }
  throw std::invalid_argument("unrecognized field '" + s + "' (expected q or f<p>)");
}

}  // namespace edgealg
