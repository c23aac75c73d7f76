#include "nrf/cy.hpp"

#include "nrf/errors.hpp"

#include <numeric>

namespace nrf {

namespace {

std::size_t effective_cap(const Algebra& a, std::size_t cap) { return cap ? cap : default_cap(a); }

}  // namespace

std::optional<long> twisted_shift(const AlgebraPtr& a, std::size_t ell, std::size_t cap) {
  cap = effective_cap(*a, cap);
  global_dimension(a, cap);
  ProjComplex p = nakayama_power(stalk_regular(a), ell, cap);
  auto s = is_shifted_regular(p);
  if (!s) return std::nullopt;
  return static_cast<long>(*s);
}

bool check_twisted_cy(const AlgebraPtr& a, std::size_t ell, long m, std::size_t cap) {
  auto s = twisted_shift(a, ell, cap);
  return s && *s == m;
}

bool check_untwisted_cy(const AlgebraPtr& a, std::size_t ell, long m, std::size_t cap) {
  cap = effective_cap(*a, cap);
  global_dimension(a, cap);
  AlgebraPtr env = enveloping_of(a);
  AlgebraPtr op = opposite_of(a);
  // Bimodule functor - (x)_A DA on projective bimodules P_x (x) P_v^op.
  ProjFunctor f = tensor_functor(nakayama_functor(a), identity_functor(op), env, env);
  std::size_t ecap = default_cap(*env) > cap ? default_cap(*env) : cap;
  ProjComplex p = to_projective_complex(stalk(regular_bimodule(a)), ecap);
  for (std::size_t k = 0; k < ell; ++k) p = to_projective_complex(realize(p, f), ecap);
  Complex c = realize(p);
  auto supp = cohomology_support(c);
  if (supp.size() != 1 || supp[0] != -m) return false;
  return is_isomorphic(cohomology(c, supp[0]), regular_bimodule(a));
}

std::optional<CyCertificate> find_twisted_cy(const AlgebraPtr& a, std::size_t ell_max, std::size_t m_max,
                                             std::size_t cap) {
  cap = effective_cap(*a, cap);
  global_dimension(a, cap);
  ProjComplex p = stalk_regular(a);
  for (std::size_t ell = 1; ell <= ell_max; ++ell) {
    try {
      p = nakayama(p, cap);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::CapExceeded) return std::nullopt;
      throw;
    }
    auto s = is_shifted_regular(p);
    if (s && static_cast<std::size_t>(std::labs(*s)) <= m_max) {
      CyCertificate c;
      c.ell = ell;
      c.m = *s;
      c.twisted = true;
      c.evidence = "nu^" + std::to_string(ell) + "(A) has cohomology only in degree " + std::to_string(-c.m) +
                   ", isomorphic to A";
      return c;
    }
  }
  return std::nullopt;
}

Fraction reduce(long num, long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  long g = std::gcd(num < 0 ? -num : num, den);
  if (g == 0) g = 1;
  return {num / g, den / g};
}

Fraction cy_dimension(const CyCertificate& c) { return reduce(c.m, static_cast<long>(c.ell)); }

std::string to_string(const Fraction& f) { return std::to_string(f.num) + "/" + std::to_string(f.den); }

CyCertificate tensor_certificate(const std::vector<CyCertificate>& factors) {
  CyCertificate out;
  out.ell = 1;
  for (const auto& c : factors) out.ell = std::lcm(out.ell, c.ell);
  out.m = 0;
  for (const auto& c : factors) out.m += c.m * static_cast<long>(out.ell / c.ell);
  out.twisted = true;
  for (const auto& c : factors) out.twisted = out.twisted && c.twisted;
  out.evidence = "combined from " + std::to_string(factors.size()) + " factor certificates";
  return out;
}

}  // namespace nrf
