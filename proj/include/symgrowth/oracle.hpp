#pragma once

// Brute-force reference semantics. Nothing here uses set_arith, symmetry or
// the lemma machinery: only the group law and plain sorted vectors, so the
// checks stay independent of the code they check.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "symgrowth/gset.hpp"
#include "symgrowth/iteration.hpp"
#include "symgrowth/ledger.hpp"
#include "symgrowth/rational.hpp"

namespace symgrowth {

GSet oracle_product(const GSet& a, const GSet& b);
GSet oracle_inverse(const GSet& a);
GSet oracle_power(const GSet& a, unsigned k);

/// #{(a, b) in A x B : ab = x}.
std::uint64_t oracle_conv_value(const GSet& a, const GSet& b, Element x);
std::map<Element, std::uint64_t> oracle_conv_table(const GSet& a, const GSet& b);

/// #{(b, c, d, e) : bc = de} by four nested loops. Charges |B||C||D||E|
/// against the pair budget.
std::uint64_t oracle_quadruples(const GSet& b, const GSet& c, const GSet& d, const GSet& e);

GSet oracle_sym_set(const GSet& a, const Rational& eta);

/// Full scan of the dichotomy: every qualifying t is collected, nothing exits early.
struct OracleLemma {
    Rational tau;
    std::uint64_t aprime_a_size = 0;
    std::vector<Element> level_set;
    std::vector<Element> qualifying;  ///< t in L with |A'_t A| <= (1 - eps)|A'A|
    std::optional<Element> chosen;    ///< smallest qualifying t
    std::optional<GSet> shrunk;       ///< A'_t for the chosen t
    std::uint64_t shrunk_product_size = 0;
};

OracleLemma oracle_lemma_step(const GSet& aprime, const GSet& a, const Rational& eps);

/// S^k within A^2 A^-2.
bool oracle_power_within_double_difference(const GSet& s, unsigned k, const GSet& a);

/// S^k A within A^2 A^-2 A.
bool oracle_chain_within(const GSet& s, unsigned k, const GSet& a);

struct VerificationCheck {
    std::string name;
    std::string expected;
    std::string actual;
    bool pass = false;
};

struct VerificationReport {
    std::vector<VerificationCheck> checks;
    bool overall = false;

    json to_json() const;
};

/// Re-derives a certificate from scratch against A: membership of S in the
/// symmetry set, S^k within A^2 A^-2, the full iteration replay, and every
/// ledger entry.
VerificationReport verify_certificate(const Certificate& cert, const GSet& a);

}  // namespace symgrowth
