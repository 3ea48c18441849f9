#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace bisetforge {

using Integer = mpz_class;
using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

/// Coefficient rings handled by the workbench. Z_(p) is the localization at
/// p (rationals with denominator prime to p); F_p elements are stored as
/// canonical residues 0..p-1.
enum class Ring { Q, Z, Z2, Z3, F2, F3 };

std::string_view ring_name(Ring ring);
/// Accepts "Q", "Z", "Z2", "Z3", "F2", "F3" and the spellings "Z_(2)", "Z_(3)".
Ring parse_ring(std::string_view text);
/// The prime attached to a localized or finite ring, 0 for Q and Z.
unsigned long ring_prime(Ring ring);
bool is_finite_field(Ring ring);

bool is_integral(const Rational& q);
/// Denominator coprime to p.
bool is_p_integral(const Rational& q, unsigned long p);
/// p-adic valuation of a nonzero rational.
long p_valuation(const Rational& q, unsigned long p);
/// v_p(q) >= k for p-integral q; zero is divisible by everything.
bool divisible_by_prime_power(const Rational& q, unsigned long p, unsigned k);

/// Residue of a p-integral rational in 0..p-1.
Rational residue_mod(const Rational& q, unsigned long p);

bool belongs_to(const Rational& q, Ring ring);
/// Brings q into canonical form for the ring (reduces mod p for F_p).
/// Throws DomainError if q is not an element of the ring (or, for F_p, not
/// p-integral).
Rational normalize(const Rational& q, Ring ring);
bool is_unit(const Rational& q, Ring ring);

/// Parses "3", "-1/12", "+2". Result is canonical.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

RationalVector zero_vector(std::size_t n);
bool is_zero(const RationalVector& v);

}  // namespace bisetforge
