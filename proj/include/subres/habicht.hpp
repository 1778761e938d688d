#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "subres/subresultant.hpp"

namespace subres {

/* Parameters of one instance of the scaled product identity
 *   r_w0^epsilon * R_u(F) = R_v(R_w0(F), R_(w0+e_1)(F), ..., R_(w0+e_n)(F))
 * with v = (k,...,k) + e_i, u = w0 + v, epsilon = |v + e_i| + k - 2.
 * Closed forms: epsilon = (n+1)k - 2 for i == 0, (n+1)k for i >= 1. */
struct HabichtParams {
  std::vector<std::size_t> d;  /* degrees of F, for validity checks */
  DeltaIndex w0;
  std::size_t k = 0;
  std::size_t i = 0;  /* 0..n; which component of v gets the extra unit */
  DeltaIndex v, u;
  unsigned long epsilon = 0;

  std::size_t n() const { return w0.size(); }
};

/* Derives v, u, epsilon from (d, w0, k, i) and validates k >= 1, i <= n,
 * |u| <= d0. Throws std::invalid_argument outside that range. */
HabichtParams derive_params(const std::vector<std::size_t>& d, const DeltaIndex& w0,
                            std::size_t k, std::size_t i);

/* Left side r_w0^epsilon * R_u, exact. */
Poly identity_lhs(const PolySystem& f, const HabichtParams& p);

/* The inner cluster (R_w0, R_(w0+e_1), ..., R_(w0+e_n)). */
std::vector<Poly> inner_cluster(const PolySystem& f, const DeltaIndex& w0);

/* Right side: the v-subresultant of the inner cluster taken as a system,
 * evaluated on the actual degrees. Throws std::domain_error if any cluster
 * member misses its generic degree (d0-|w0| for the first, one less for
 * the rest); the defining shape of the outer call is gone then. */
Poly identity_rhs(const PolySystem& f, const HabichtParams& p);

struct VerificationReport {
  HabichtParams params;
  std::optional<Poly> lhs, rhs;   /* absent when the instance degenerated */
  bool equal = false;
  /* cluster positions j (0..n) whose subresultant lost its generic degree */
  std::vector<std::size_t> degree_drops;

  bool applicable() const { return degree_drops.empty(); }
};

/* Evaluates both sides on a standard system (deg F_0 minimal, F_0 monic).
 * Degree drops are reported, not patched: lhs/rhs stay empty and equal is
 * false, but applicable() distinguishes that from a counterexample. */
VerificationReport verify_identity(const PolySystem& f, const HabichtParams& p);

/* The two ladder equations at step width j >= 1: the i = 0 instance
 * (exponent (n+1)j - 2) followed by the i = 1..n instances (exponent
 * (n+1)j). Requires |w0| + nj + 1 <= d0. */
std::vector<VerificationReport> verify_induction_equations(const PolySystem& f,
                                                           const DeltaIndex& w0,
                                                           std::size_t j);

}  // namespace subres
