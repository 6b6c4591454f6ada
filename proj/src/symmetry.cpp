#include "symgrowth/symmetry.hpp"

#include "symgrowth/error.hpp"
#include "symgrowth/set_arith.hpp"

namespace symgrowth {

namespace {

void require_epsilon(const Rational& eps, const char* name) {
    if (eps < 0 || eps >= 1) throw InvalidArgument(std::string(name) + " must lie in [0,1)");
}

}  // namespace

bool meets_threshold(std::uint64_t count, const Rational& eta, std::uint64_t size) {
    return Integer(count) * boost::multiprecision::denominator(eta) >=
           boost::multiprecision::numerator(eta) * Integer(size);
}

SymmetrySet sym_set(const GSet& a, const Rational& eta) {
    if (a.empty()) throw EmptySet("sym_set requires a non-empty set");
    if (eta <= 0 || eta > 1) throw InvalidArgument("sym_set threshold must lie in (0,1], got " + to_string(eta));
    // 1_A * 1_{A^-1}(x) = |A cap xA|, supported on A A^-1.
    const auto table = conv_table(a, inverse_set(a));
    std::vector<Element> members;
    for (std::size_t i = 0; i < table.values.size(); ++i) {
        if (meets_threshold(table.values[i], eta, a.size())) members.push_back(table.support[i]);
    }
    return SymmetrySet{a, eta, GSet::from_sorted_unique(a.group_ptr(), std::move(members))};
}

bool is_symmetric_neighbourhood(const GSet& s) {
    return s.contains(s.group().identity()) && inverse_set(s) == s;
}

bool check_nesting(const GSet& a, const Rational& eta, const Rational& eta_lower) {
    if (eta < eta_lower) throw InvalidArgument("check_nesting requires eta >= eta'");
    return is_subset(sym_set(a, eta).members, sym_set(a, eta_lower).members);
}

bool check_submultiplicativity(const GSet& a, const Rational& eps, const Rational& eps_other) {
    require_epsilon(eps, "eps");
    require_epsilon(eps_other, "eps'");
    const Rational total = eps + eps_other;
    if (total >= 1) throw InvalidArgument("check_submultiplicativity requires eps + eps' < 1");
    const auto left = sym_set(a, 1 - eps).members;
    const auto right = sym_set(a, 1 - eps_other).members;
    return is_subset(product(left, right), sym_set(a, 1 - total).members);
}

bool check_iterated_submultiplicativity(const GSet& a, const Rational& eps, unsigned k) {
    require_epsilon(eps, "eps");
    if (k == 0) throw InvalidArgument("check_iterated_submultiplicativity requires k >= 1");
    const Rational total = eps * k;
    if (total >= 1) throw InvalidArgument("check_iterated_submultiplicativity requires k eps < 1");
    const auto base = sym_set(a, 1 - eps).members;
    const auto target = sym_set(a, 1 - total).members;
    return is_subset(power(base, k), target);
}

}  // namespace symgrowth
