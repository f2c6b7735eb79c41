#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace minfill {

// Every quantity on the solve path is an exact rational; no floating point
// anywhere in the library.
using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

/// Violation of a domain contract (bad metric file, mismatched tour, ...).
/// The CLI maps this to exit code 1.
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Parses "3", "-3", "7/2", "1.5" into an exact rational.
Rat parse_rational(const std::string& text);

/// Canonical rendering: "p/q", with "/1" omitted ("3", "-7/2").
std::string rat_to_string(const Rat& q);

/// Least common multiple of the denominators of v (1 for an empty vector).
Int lcm_denominators(const std::vector<Rat>& v);

}  // namespace minfill
