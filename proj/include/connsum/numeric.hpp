#pragma once

#include <complex>
#include <string>
#include <vector>

#include "connsum/core.hpp"
#include "connsum/relation.hpp"

namespace connsum {

using Complex = std::complex<double>;

/// C(a_1, ..., a_n) = a_1! ... a_n! / (a_1 + ... + a_n)!, exactly.
Rational connector(const std::vector<long>& a);
/// log C(a), through lgamma.
double log_connector(const std::vector<long>& a);

/// N^2 * sum over positive compositions a of N into n parts of C(a) / prod a_i.
double connector_moment(int n, long N);

/// Box-truncated sum of a Z symbol: every top summation variable at most M.
Complex zterm_partial(const ZTerm& t, long M);
Scalar zterm_partial_exact(const ZTerm& t, long M);

/// Partial sum of an MPL with the outermost summation variable at most N.
Complex mpl_partial(const MplTerm& m, long N);
Scalar mpl_partial_exact(const MplTerm& m, long N);

struct EvalReport {
  Complex value;         // best estimate of the limit
  Complex partial_sum;   // the plain truncated sum at the requested bound
  long truncation = 0;
  double tail_estimate = 0;
  bool converged = false;
  std::string method;    // "partial" or "extrapolated"
};

/// Evaluates a Z symbol from box sums at M, M/2, ..., M/16.  When the fitted
/// tail model is more self-consistent than the plain sums, the fitted limit
/// is reported as value; partial_sum always holds the box sum at M.
EvalReport eval_zterm(const ZTerm& t, long M, double tol = 1e-6);
/// Same scheme for a single MPL (coefficient included).
EvalReport eval_mpl(const MplTerm& m, long N, double tol = 1e-6);

struct VerifyOptions {
  long mpl_bound = 1L << 18;
  long z_bound = 400;
  double tol = 1e-6;
  int jobs = 1;
};

struct TermReport {
  std::string label;
  Complex value;  // coefficient included
  double tail = 0;
};

struct VerifyReport {
  bool passed = false;
  bool converged = false;
  Complex lhs;
  Complex rhs;
  double difference = 0;
  double tail = 0;
  double tol = 0;
  std::vector<TermReport> terms;
};

/// Evaluates both sides; the relation passes when |lhs - rhs| plus the
/// accumulated tail estimates stays within tol.
VerifyReport verify_relation(const Relation& r, const VerifyOptions& opts = {});

/// Data for the finite-N telescoping identity behind the fundamental identity.
struct TelescopingInstance {
  std::vector<long> m_minus;  // d entries, non-negative
  std::vector<long> m_plus;   // n - d entries, positive
  long q = 0;
  std::vector<Scalar> v;      // d entries with sum 1/v_i = t
  Scalar t;
  long N = 10;
};

/// Both sides of the truncated identity, exactly.
std::pair<Scalar, Scalar> telescoping_sides(const TelescopingInstance& inst);
bool telescoping_check(const TelescopingInstance& inst);

}  // namespace connsum
