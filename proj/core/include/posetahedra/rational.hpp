#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace posetahedra {

using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;
using RationalVector = std::vector<Rational>;

/// Accepts "p" or "p/q" with an optional ASCII or U+2212 minus sign.
Rational parse_rational(std::string_view text);

/// Reduced "p/q" with q > 0; integers keep the "/1".
std::string format_rational(const Rational& value);

double to_double(const Rational& value);

/// Bits of numerator plus bits of denominator.
std::size_t bit_size(const Rational& value);
std::size_t max_bit_size(const RationalVector& values);

/// Value of POSETAHEDRA_MAX_BITS, or nullopt when unset.
std::optional<std::size_t> max_bits_from_env();

/// Throws BitLimitError if any entry exceeds the configured cap.
void enforce_bit_limit(const std::vector<RationalVector>& rows, std::string_view stage);

Rational dot(const RationalVector& a, const RationalVector& b);
Rational sum(const RationalVector& values);

}  // namespace posetahedra
