#include "bisetforge/rational.hpp"

#include <cctype>

#include "bisetforge/errors.hpp"

namespace bisetforge {

std::string_view ring_name(Ring ring) {
  switch (ring) {
    case Ring::Q: return "Q";
    case Ring::Z: return "Z";
    case Ring::Z2: return "Z2";
    case Ring::Z3: return "Z3";
    case Ring::F2: return "F2";
    case Ring::F3: return "F3";
  }
  throw InternalError("unknown ring tag");
}

Ring parse_ring(std::string_view text) {
  if (text == "Q") return Ring::Q;
  if (text == "Z") return Ring::Z;
  if (text == "Z2" || text == "Z_(2)" || text == "Z(2)") return Ring::Z2;
  if (text == "Z3" || text == "Z_(3)" || text == "Z(3)") return Ring::Z3;
  if (text == "F2") return Ring::F2;
  if (text == "F3") return Ring::F3;
  throw ParseError("unknown ring '" + std::string(text) + "' (expected Q, Z, Z2, Z3, F2, F3)");
}

unsigned long ring_prime(Ring ring) {
  switch (ring) {
    case Ring::Z2:
    case Ring::F2: return 2;
    case Ring::Z3:
    case Ring::F3: return 3;
    default: return 0;
  }
}

bool is_finite_field(Ring ring) { return ring == Ring::F2 || ring == Ring::F3; }

bool is_integral(const Rational& q) { return q.get_den() == 1; }

bool is_p_integral(const Rational& q, unsigned long p) {
  return mpz_divisible_ui_p(q.get_den().get_mpz_t(), p) == 0;
}

long p_valuation(const Rational& q, unsigned long p) {
  if (q == 0) throw DomainError("valuation of zero");
  Integer num = abs(q.get_num());
  Integer den = q.get_den();
  long v = 0;
  while (mpz_divisible_ui_p(num.get_mpz_t(), p)) {
    num /= p;
    ++v;
  }
  while (mpz_divisible_ui_p(den.get_mpz_t(), p)) {
    den /= p;
    --v;
  }
  return v;
}

bool divisible_by_prime_power(const Rational& q, unsigned long p, unsigned k) {
  if (q == 0) return true;
  return p_valuation(q, p) >= static_cast<long>(k);
}

Rational residue_mod(const Rational& q, unsigned long p) {
  if (!is_p_integral(q, p)) {
    throw DomainError(to_string(q) + " is not " + std::to_string(p) + "-integral");
  }
  Integer modulus = p;
  Integer inv;
  Integer den = q.get_den();
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), modulus.get_mpz_t());
  Integer r = q.get_num() * inv;
  mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), modulus.get_mpz_t());
  return Rational(r);
}

bool belongs_to(const Rational& q, Ring ring) {
  switch (ring) {
    case Ring::Q: return true;
    case Ring::Z: return is_integral(q);
    case Ring::Z2:
    case Ring::Z3: return is_p_integral(q, ring_prime(ring));
    case Ring::F2:
    case Ring::F3: return is_integral(q) && q >= 0 && q < static_cast<long>(ring_prime(ring));
  }
  return false;
}

Rational normalize(const Rational& q, Ring ring) {
  if (is_finite_field(ring)) return residue_mod(q, ring_prime(ring));
  if (!belongs_to(q, ring)) {
    throw DomainError(to_string(q) + " is not an element of " + std::string(ring_name(ring)));
  }
  return q;
}

bool is_unit(const Rational& q, Ring ring) {
  switch (ring) {
    case Ring::Q: return q != 0;
    case Ring::Z: return q == 1 || q == -1;
    case Ring::Z2:
    case Ring::Z3: return q != 0 && is_p_integral(q, ring_prime(ring)) && p_valuation(q, ring_prime(ring)) == 0;
    case Ring::F2:
    case Ring::F3: return residue_mod(q, ring_prime(ring)) != 0;
  }
  return false;
}

Rational parse_rational(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (!s.empty() && s.front() == '+') s.erase(s.begin());
  if (s.empty()) throw ParseError("empty rational");
  auto slash = s.find('/');
  auto valid_int = [](std::string_view t) {
    if (t.empty()) return false;
    std::size_t i = (t.front() == '-') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    }
    return true;
  };
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den.front() == '-') {
    throw ParseError("malformed rational '" + std::string(text) + "'");
  }
  Integer d(den);
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  Rational q(Integer(num), d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }
std::string to_string(const Integer& z) { return z.get_str(); }

RationalVector zero_vector(std::size_t n) { return RationalVector(n, Rational(0)); }

bool is_zero(const RationalVector& v) {
  for (const auto& x : v) {
    if (x != 0) return false;
  }
  return true;
}

}  // namespace bisetforge
