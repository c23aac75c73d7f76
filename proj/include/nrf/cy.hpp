#pragma once

// Twisted and untwisted fractional Calabi-Yau certificates.

#include "nrf/bimodule.hpp"

#include <optional>
#include <string>
#include <vector>

namespace nrf {

struct CyCertificate {
  std::size_t ell = 1;
  long m = 0;
  bool twisted = true;
  std::string evidence;
};

/// nu^ell(A) is quasi-isomorphic to A[m] as a one-sided complex.
bool check_twisted_cy(const AlgebraPtr& a, std::size_t ell, long m, std::size_t cap = 0);
/// The shift m with nu^ell(A) = A[m] one-sidedly, if any.
std::optional<long> twisted_shift(const AlgebraPtr& a, std::size_t ell, std::size_t cap = 0);

/// (DA)^{(x)^L ell} is quasi-isomorphic to A[m] as a complex of bimodules.
bool check_untwisted_cy(const AlgebraPtr& a, std::size_t ell, long m, std::size_t cap = 0);

/// Smallest ell <= ell_max with a shift m, |m| <= m_max. Iterates nu once per
/// ell and stops early if the cap is hit.
std::optional<CyCertificate> find_twisted_cy(const AlgebraPtr& a, std::size_t ell_max, std::size_t m_max,
                                             std::size_t cap = 0);

/// Reduced m / ell as "p/q".
struct Fraction {
  long num = 0;
  long den = 1;
  bool operator==(const Fraction&) const = default;
};
Fraction reduce(long num, long den);
Fraction cy_dimension(const CyCertificate& c);
std::string to_string(const Fraction& f);

/// Certificate of a tensor product from factor certificates: ell = lcm of
/// the ell_i, m = ell * sum m_i / ell_i.
CyCertificate tensor_certificate(const std::vector<CyCertificate>& factors);

}  // namespace nrf
