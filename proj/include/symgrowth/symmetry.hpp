#pragma once

#include "symgrowth/gset.hpp"
#include "symgrowth/rational.hpp"

namespace symgrowth {

/// Sym_eta(A) = {x : |A cap xA| >= eta |A|}, always a symmetric
/// neighbourhood of the identity inside A A^-1.
struct SymmetrySet {
    GSet base;
    Rational eta;
    GSet members;
};

/// count >= eta * size, compared exactly.
bool meets_threshold(std::uint64_t count, const Rational& eta, std::uint64_t size);

/// Requires A non-empty and 0 < eta <= 1. Candidates are drawn from A A^-1 only.
SymmetrySet sym_set(const GSet& a, const Rational& eta);

/// 1 in S and S = S^-1.
bool is_symmetric_neighbourhood(const GSet& s);

/// Sym_eta(A) within Sym_eta'(A) for eta >= eta'.
bool check_nesting(const GSet& a, const Rational& eta, const Rational& eta_lower);

/// Sym_{1-eps}(A) Sym_{1-eps'}(A) within Sym_{1-(eps+eps')}(A), for
/// eps, eps' in [0,1) with eps + eps' < 1.
bool check_submultiplicativity(const GSet& a, const Rational& eps, const Rational& eps_other);

/// Sym_{1-eps}(A)^k within Sym_{1-k eps}(A), for k >= 1, eps >= 0 and k eps < 1.
bool check_iterated_submultiplicativity(const GSet& a, const Rational& eps, unsigned k);

}  // namespace symgrowth
