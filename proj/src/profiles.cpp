#include "brauer/profiles.hpp"

#include <algorithm>
#include <map>

#include "brauer/errors.hpp"

namespace brauer {

namespace {

std::optional<Integer> single_prime(Integer n) {
  if (n < 2) return std::nullopt;
  Integer p = 2;
  while (p * p <= n && !mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) ++p;
  if (p * p > n) p = n;
  while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) n /= p;
  if (n != 1) return std::nullopt;
  return p;
}

std::string range_to_string(const ObstructionRule& r) {
  if (!r.hi) return "i>=" + r.lo.get_str();
  return r.lo.get_str() + "<=i<=" + r.hi->get_str();
}

}  // namespace

Multiplicity Multiplicity::finite(const Integer& k) {
  if (k < 0) throw SemanticError("multiplicity must be nonnegative");
  Multiplicity m;
  m.value_ = k;
  return m;
}

Multiplicity Multiplicity::omega() {
  Multiplicity m;
  m.omega_ = true;
  return m;
}

Multiplicity Multiplicity::choose2() const {
  if (omega_) return omega();
  return finite(Integer(value_ * (value_ - 1) / 2));
}

std::string Multiplicity::to_string() const { return omega_ ? "w" : value_.get_str(); }

Multiplicity operator+(const Multiplicity& a, const Multiplicity& b) {
  if (a.omega_ || b.omega_) return Multiplicity::omega();
  return Multiplicity::finite(Integer(a.value_ + b.value_));
}

Multiplicity operator*(const Multiplicity& a, const Multiplicity& b) {
  if (a.is_zero() || b.is_zero()) return Multiplicity::finite(0);
  if (a.omega_ || b.omega_) return Multiplicity::omega();
  return Multiplicity::finite(Integer(a.value_ * b.value_));
}

CyclicProfile::CyclicProfile(std::vector<CyclicSummand> summands) {
  std::map<Integer, Multiplicity> merged;
  for (auto& s : summands) {
    if (s.order < 2) throw SemanticError("profile orders must be at least 2, got " + s.order.get_str());
    if (s.multiplicity.is_zero()) throw SemanticError("profile multiplicities must be positive");
    auto it = merged.find(s.order);
    if (it == merged.end()) merged.emplace(s.order, s.multiplicity);
    else it->second = it->second + s.multiplicity;
  }
  for (auto& [order, mult] : merged) summands_.push_back({order, mult});
}

Multiplicity CyclicProfile::total_multiplicity() const {
  Multiplicity total = Multiplicity::finite(0);
  for (const auto& s : summands_) total = total + s.multiplicity;
  return total;
}

std::optional<Integer> CyclicProfile::prime() const {
  std::optional<Integer> p;
  for (const auto& s : summands_) {
    auto q = single_prime(s.order);
    if (!q || (p && *p != *q)) return std::nullopt;
    p = q;
  }
  return p;
}

Integer CyclicProfile::exponent() const {
  Integer e = 1;
  for (const auto& s : summands_) mpz_lcm(e.get_mpz_t(), e.get_mpz_t(), s.order.get_mpz_t());
  return e;
}

FgAbGroup CyclicProfile::to_group() const {
  IntVector orders;
  for (const auto& s : summands_) {
    if (s.multiplicity.is_omega()) throw SemanticError("profile " + to_string() + " is not finitely generated");
    for (Integer k = 0; k < s.multiplicity.value(); ++k) orders.push_back(s.order);
  }
  return FgAbGroup::from_cyclic_orders(orders);
}

CyclicProfile CyclicProfile::from_group(const FgAbGroup& g) {
  if (g.free_rank() != 0) throw SemanticError("a cyclic profile has no free summands");
  std::vector<CyclicSummand> s;
  for (const auto& d : g.invariant_factors()) s.push_back({d, Multiplicity::finite(1)});
  return CyclicProfile(std::move(s));
}

std::string CyclicProfile::to_string() const {
  if (summands_.empty()) return "0";
  std::string out;
  for (const auto& s : summands_) {
    if (!out.empty()) out += " + ";
    out += "(Z/" + s.order.get_str() + ")^" + s.multiplicity.to_string();
  }
  return out;
}

SymbolicTorsionGroup SymbolicTorsionGroup::make(std::vector<std::pair<Integer, Multiplicity>> divisible,
                                                CyclicProfile reduced) {
  std::map<Integer, Multiplicity> merged;
  for (auto& [p, m] : divisible) {
    if (single_prime(p) != p) throw SemanticError("Prufer group needs a prime, got " + p.get_str());
    if (m.is_zero()) throw SemanticError("Prufer multiplicity must be positive");
    auto it = merged.find(p);
    if (it == merged.end()) merged.emplace(p, m);
    else it->second = it->second + m;
  }
  SymbolicTorsionGroup g;
  for (auto& [p, m] : merged) g.divisible_part.emplace_back(p, m);
  g.reduced_part = std::move(reduced);
  return g;
}

std::optional<Integer> SymbolicTorsionGroup::prime() const {
  std::optional<Integer> p;
  if (!reduced_part.empty()) {
    p = reduced_part.prime();
    if (!p) return std::nullopt;
  }
  for (const auto& [q, _] : divisible_part) {
    if (p && *p != q) return std::nullopt;
    p = q;
  }
  return p;
}

std::string SymbolicTorsionGroup::to_string() const {
  std::string out;
  for (const auto& [p, m] : divisible_part) {
    if (!out.empty()) out += " + ";
    out += "Z(" + p.get_str() + "^inf)";
    if (m.is_omega() || m.value() != 1) out += "^" + m.to_string();
  }
  if (!reduced_part.empty()) {
    if (!out.empty()) out += " + ";
    out += reduced_part.to_string();
  }
  return out.empty() ? "0" : out;
}

CyclicProfile lambda_square_profile(const CyclicProfile& p) {
  std::vector<CyclicSummand> out;
  const auto& s = p.summands();
  for (std::size_t a = 0; a < s.size(); ++a) {
    Multiplicity internal = s[a].multiplicity.choose2();
    if (!internal.is_zero()) out.push_back({s[a].order, internal});
    for (std::size_t b = a + 1; b < s.size(); ++b) {
      Integer g;
      mpz_gcd(g.get_mpz_t(), s[a].order.get_mpz_t(), s[b].order.get_mpz_t());
      if (g >= 2) out.push_back({g, s[a].multiplicity * s[b].multiplicity});
    }
  }
  return CyclicProfile(std::move(out));
}

BgBrauer brauer_of_bg(const CyclicProfile& p) {
  CyclicProfile pairs = lambda_square_profile(p);
  // Ext^1(Z/d, Z) = Z/d, so for a finite sum the product is the sum itself.
  if (pairs.is_finite()) return pairs.to_group();
  ProductDescriptor d;
  d.expression = "Tors(prod " + pairs.to_string() + ")";
  d.factors = pairs;
  d.exponent = pairs.exponent();
  d.restricted_sum = pairs;
  d.product_is_torsion = true;
  return d;
}

std::string to_string(const BgBrauer& b) {
  if (const auto* g = std::get_if<FgAbGroup>(&b)) return g->to_string();
  return std::get<ProductDescriptor>(b).expression;
}

BasicReduction reduce_to_basic(const SymbolicTorsionGroup& g) {
  BasicReduction r;
  r.basic = g.reduced_part;
  SymbolicTorsionGroup d = g;
  d.reduced_part = CyclicProfile();
  r.conditions.push_back("B = " + r.basic.to_string() + " is a direct sum of cyclic groups");
  r.conditions.push_back("G/B = " + d.to_string() + " is divisible (a sum of Prufer groups)");
  r.conditions.push_back("nB = nG meet B for every n, since G = D + B is a direct sum");
  return r;
}

std::string Affine::to_string() const {
  std::string out;
  if (a == 0) return b.get_str();
  if (a == 1) out = "i";
  else if (a == -1) out = "-i";
  else out = a.get_str() + "i";
  if (b > 0) out += "+" + b.get_str();
  else if (b < 0) out += b.get_str();
  return out;
}

std::string ObstructionRule::to_string() const {
  return "rule " + range_to_string(*this) + ": J=(" + lower.to_string() + ", " +
         (upper ? upper->to_string() + "]" : std::string("inf)"));
}

ObstructionDescriptor::ObstructionDescriptor(std::vector<ObstructionRule> rules) : rules_(std::move(rules)) {
  for (const auto& r : rules_) {
    if (r.lo < 0) throw SemanticError(r.to_string() + ": index range starts below 0");
    if (r.hi && *r.hi < r.lo) throw SemanticError(r.to_string() + ": empty index range");
    // J_i must lie strictly above i: lower(i) >= i on the whole range.
    const Affine gap{r.lower.a - 1, r.lower.b};
    bool ok = gap.at(r.lo) >= 0;
    if (r.hi) ok = ok && gap.at(*r.hi) >= 0;
    else ok = ok && gap.a >= 0;
    if (!ok) throw SemanticError(r.to_string() + ": J_i must contain only indices j > i");
  }
  std::sort(rules_.begin(), rules_.end(), [](const auto& x, const auto& y) { return x.lo < y.lo; });
  for (std::size_t k = 0; k + 1 < rules_.size(); ++k) {
    const auto& r = rules_[k];
    if (!r.hi || *r.hi >= rules_[k + 1].lo) {
      throw SemanticError("index ranges of '" + r.to_string() + "' and '" + rules_[k + 1].to_string() +
                          "' overlap");
    }
  }
}

std::string ObstructionDescriptor::to_string() const {
  if (rules_.empty()) return "none";
  std::string out;
  for (const auto& r : rules_) {
    if (!out.empty()) out += "; ";
    out += r.to_string();
  }
  return out;
}

const char* to_string(NonBrauerVerdict v) {
  switch (v) {
    case NonBrauerVerdict::CertifiedNotInBr: return "CERTIFIED_NOT_IN_BR";
    case NonBrauerVerdict::ConditionFails: return "CONDITION_FAILS";
    case NonBrauerVerdict::NotApplicable: return "NOT_APPLICABLE";
  }
  return "NOT_APPLICABLE";
}

NonBrauerCertificate non_brauer_certificate(const CyclicProfile& p, const ObstructionDescriptor& alpha) {
  NonBrauerCertificate c;
  const auto prime = p.prime();
  if (!prime || p.is_finite()) {
    c.verdict = NonBrauerVerdict::NotApplicable;
    c.witness.push_back("profile " + p.to_string() +
                        (prime ? " is finite" : " is not primary for a single prime"));
    return c;
  }
  c.finitely_many_infinite = true;
  for (const auto& r : alpha.rules()) {
    if (!r.upper) {
      const bool infinite_range = !r.hi;
      c.witness.push_back(r.to_string() + ": J_i infinite for " +
                          (infinite_range ? std::string("infinitely many i") : "finitely many i"));
      if (infinite_range) c.finitely_many_infinite = false;
      continue;
    }
    const Integer slope = r.upper->a - r.lower.a;
    const Integer offset = r.upper->b - r.lower.b;
    c.witness.push_back(r.to_string() + ": |J_i| = max(0, " + Affine{slope, offset}.to_string() + ")");
    if (!r.hi && slope > 0) c.unbounded_finite_sizes = true;
  }
  c.witness.push_back(std::string("all but finitely many J_i finite: ") +
                      (c.finitely_many_infinite ? "yes" : "no"));
  c.witness.push_back(std::string("sizes of finite J_i unbounded: ") + (c.unbounded_finite_sizes ? "yes" : "no"));
  c.verdict = c.finitely_many_infinite && c.unbounded_finite_sizes ? NonBrauerVerdict::CertifiedNotInBr
                                                                   : NonBrauerVerdict::ConditionFails;
  return c;
}

}  // namespace brauer
