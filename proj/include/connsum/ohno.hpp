#pragma once

#include <vector>

#include "connsum/core.hpp"
#include "connsum/hoffman.hpp"
#include "connsum/relation.hpp"

namespace connsum {

/// All weak compositions of h into r non-negative parts, in lexicographic order.
std::vector<std::vector<int>> weak_compositions(int h, int r);

/// O_h(p): the sum of Li^sh_{k+c}(z) over weak compositions c of h.
MplExpr ohno_sum(const Pair& p, int h);

/// Replaces every entry (z_i, l_i) with z_i != 1 by ({z_i}^{b_i+1}; {1}^{b_i}, l_i).
Pair insert_repeats(const Pair& p, const std::vector<int>& b);

/// O_h(p) = (-1)^iota sum_i sum_{|b| = i} O_{h-i}((p^dagger)_b), built combinatorially.
Relation ohno_relation(const Pair& p, int h);
/// The same identity read off from L(sigma(w)) = L(sigma(tau(w))) in degree h.
Relation ohno_relation_algebraic(const Pair& p, int h);

/// Checks, for every h <= order, that the algebraic and combinatorial Ohno
/// identities for the word's pair coincide term by term.
bool algebraic_ohno_check(const hoffman::Word& w, int order);

/// rho o tau' = tau o rho on a word, compared through degree order.
bool rho_tau_commute(const hoffman::Word& w, int order);

/// Degree-h part of L((sigma o rho)(w)).
MplExpr boundary_series(const hoffman::Word& w, int h);

/// Li_k(z) = - sum over indices of weight k of Li_k({z/(z-1)}^dep).
Relation landen_relation(const Scalar& z, int k);

/// g(a, b) = ab / (ab - a - b).
Scalar g_map(const Scalar& a, const Scalar& b);

/// Three-term (three variables) or eight-term (four variables) relation among
/// depth-2 or depth-3 MPLs, for variables with sum of reciprocals 1.  The
/// relation's lhs is the sum produced by transporting the fundamental-identity
/// terms, its rhs is zero, and closed_form holds the textbook expression.
struct MultiTerm {
  Relation relation;
  MplExpr closed_form;
};
MultiTerm multi_term_relation(const std::vector<Scalar>& zs);

}  // namespace connsum
