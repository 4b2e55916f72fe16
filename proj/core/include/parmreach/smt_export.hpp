#pragma once

#include <string>

#include "parmreach/scc_checker.hpp"

namespace parmreach {

/// QF_NRA script over the model parameters asserting
///   0 < P(s,s') for every edge of m,
///   P(s,s') < 1 for every non-constant edge,
///   d != 0 for every recorded abstraction denominator d.
/// Constraints that hold trivially are left out; the script ends with
/// (check-sat) and is not solved here.
std::string collect_constraints(const ReachabilityResult& r, const Pdtmc& m);

/// SMT-LIB term of a polynomial, coefficients divided by `scale`.
std::string smt_term(const Polynomial& p, const Rational& scale = Rational(1));

}  // namespace parmreach
