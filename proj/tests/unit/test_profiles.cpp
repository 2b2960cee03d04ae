#include <map>
#include <numeric>

#include "brauer/errors.hpp"
#include "brauer/profiles.hpp"
#include "doctest.h"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace brauer;

namespace {

const FgAbGroup Z = FgAbGroup::free(1);
Multiplicity fin(long k) { return Multiplicity::finite(k); }
const Multiplicity w = Multiplicity::omega();

CyclicProfile profile(std::vector<std::pair<long, Multiplicity>> s) {
  std::vector<CyclicSummand> out;
  for (auto& [o, m] : s) out.push_back({o, m});
  return CyclicProfile(std::move(out));
}

CyclicProfile random_finite_profile(testgen::Rng& rng, std::size_t kinds, long max_order) {
  std::vector<CyclicSummand> s;
  const std::size_t n = rng.index(1, kinds);
  for (std::size_t i = 0; i < n; ++i) s.push_back({rng.uniform(2, max_order), fin(rng.uniform(1, 3))});
  return CyclicProfile(std::move(s));
}

// Independent bookkeeping: expand to a list of orders and count every pair.
std::map<long, long> pair_gcd_counts(const CyclicProfile& p) {
  std::vector<long> orders;
  for (const auto& s : p.summands()) {
    for (long k = 0; k < s.multiplicity.value().get_si(); ++k) orders.push_back(s.order.get_si());
  }
  std::map<long, long> out;
  for (std::size_t i = 0; i < orders.size(); ++i) {
    for (std::size_t j = i + 1; j < orders.size(); ++j) {
      const long g = std::gcd(orders[i], orders[j]);
      if (g >= 2) ++out[g];
    }
  }
  return out;
}

ObstructionRule rule(long lo, std::optional<long> hi, Affine lower, std::optional<Affine> upper) {
  ObstructionRule r;
  r.lo = lo;
  if (hi) r.hi = Integer(*hi);
  r.lower = lower;
  r.upper = upper;
  return r;
}

}  // namespace

TEST_SUITE("profiles") {

TEST_CASE("omega arithmetic") {
  CHECK((w + fin(3)).is_omega());
  CHECK((fin(2) + fin(3)) == fin(5));
  CHECK((w * fin(3)).is_omega());
  CHECK((w * fin(0)).is_zero());
  CHECK(w.choose2().is_omega());
  CHECK(w.to_string() == "w");
  for (long k = 0; k <= 8; ++k) {
    long pairs = 0;
    for (long i = 0; i < k; ++i)
      for (long j = i + 1; j < k; ++j) ++pairs;
    CHECK(fin(k).choose2() == fin(pairs));
  }
  CHECK_THROWS_AS(fin(-1), SemanticError);
}

TEST_CASE("profiles normalize") {
  const CyclicProfile p = profile({{4, fin(1)}, {2, fin(2)}, {4, w}});
  REQUIRE(p.summands().size() == 2);
  CHECK(p.summands()[0].order == 2);
  CHECK(p.summands()[1].multiplicity.is_omega());
  CHECK(p.to_string() == "(Z/2)^2 + (Z/4)^w");
  CHECK(p.prime() == Integer(2));
  CHECK_FALSE(p.is_finite());
  CHECK(p.exponent() == 4);
  CHECK_FALSE(profile({{2, fin(1)}, {3, fin(1)}}).prime());
  CHECK(profile({{9, fin(1)}, {27, w}}).prime() == Integer(3));
  CHECK_THROWS_AS(profile({{1, fin(1)}}), SemanticError);
  CHECK_THROWS_AS(profile({{5, fin(0)}}), SemanticError);
  CHECK(CyclicProfile().to_string() == "0");
  CHECK(profile({{2, fin(1)}, {6, fin(2)}}).to_group() == FgAbGroup::from_cyclic_orders({2, 6, 6}));
  CHECK_THROWS_AS(profile({{2, w}}).to_group(), SemanticError);
  CHECK(CyclicProfile::from_group(FgAbGroup::from_cyclic_orders({2, 6})).to_group() ==
        FgAbGroup::from_cyclic_orders({2, 6}));
}

TEST_CASE("lambda square of profiles: worked cases") {
  CHECK(lambda_square_profile(profile({{7, w}})) == profile({{7, w}}));
  CHECK(lambda_square_profile(profile({{2, fin(1)}, {4, fin(1)}})) == profile({{2, fin(1)}}));
  CHECK(lambda_square_profile(profile({{9, fin(1)}})).empty());
  CHECK(lambda_square_profile(profile({{2, fin(1)}, {3, w}})) == profile({{3, w}}));
  CHECK(lambda_square_profile(profile({{2, fin(3)}})) == profile({{2, fin(3)}}));
}

TEST_CASE("lambda square bookkeeping matches pair enumeration") {
  testgen::Rng rng(404);
  for (int t = 0; t < 300; ++t) {
    const CyclicProfile p = random_finite_profile(rng, 4, 16);
    std::vector<CyclicSummand> expected;
    for (const auto& [g, k] : pair_gcd_counts(p)) expected.push_back({g, fin(k)});
    CHECK(lambda_square_profile(p) == CyclicProfile(expected));
  }
}

TEST_CASE("lambda square of profiles agrees with the group-level exterior square") {
  testgen::Rng rng(405);
  for (int t = 0; t < 300; ++t) {
    const CyclicProfile p = random_finite_profile(rng, 4, 16);
    const FgAbGroup g = p.to_group();
    CHECK(lambda_square_profile(p).to_group() == exterior_square(g));
  }
}

TEST_CASE("Br'(BG) for finite profiles: two independent paths") {
  testgen::Rng rng(406);
  for (int t = 0; t < 300; ++t) {
    const CyclicProfile p = random_finite_profile(rng, 4, 16);
    const BgBrauer b = brauer_of_bg(p);
    REQUIRE(std::holds_alternative<FgAbGroup>(b));
    const FgAbGroup via_groups = torsion_part(ext1(exterior_square(p.to_group()), Z));
    CHECK(std::get<FgAbGroup>(b) == via_groups);
    // Third path: presentation oracle for the exterior square.
    std::vector<Integer> orders;
    for (const auto& s : p.summands())
      for (long k = 0; k < s.multiplicity.value().get_si(); ++k) orders.push_back(s.order);
    const IntMatrix rel = IntMatrix::diagonal(orders.size(), orders.size(), orders);
    CHECK(torsion_part(from_presentation(oracle::exterior_square_relations(rel))) == via_groups);
  }
}

TEST_CASE("Br'(BG) worked cases") {
  CHECK(std::get<FgAbGroup>(brauer_of_bg(profile({{4, fin(1)}, {6, fin(1)}}))) == FgAbGroup::cyclic(2));
  CHECK(std::get<FgAbGroup>(brauer_of_bg(profile({{2, fin(1)}, {4, fin(1)}, {8, fin(1)}}))) ==
        FgAbGroup::from_cyclic_orders({2, 2, 4}));
  const BgBrauer b = brauer_of_bg(profile({{5, w}}));
  REQUIRE(std::holds_alternative<ProductDescriptor>(b));
  const auto& d = std::get<ProductDescriptor>(b);
  CHECK(d.exponent == 5);
  CHECK(d.restricted_sum == profile({{5, w}}));
  CHECK(d.product_is_torsion);
  CHECK(d.expression == "Tors(prod (Z/5)^w)");
  CHECK(to_string(b) == "Tors(prod (Z/5)^w)");
}

TEST_CASE("reduction to the basic subgroup") {
  const auto g = SymbolicTorsionGroup::make({{Integer(3), fin(1)}}, profile({{3, w}}));
  CHECK(g.to_string() == "Z(3^inf) + (Z/3)^w");
  const BasicReduction r = reduce_to_basic(g);
  CHECK(r.basic == profile({{3, w}}));
  CHECK(r.conditions.size() == 3);
  const auto pure = SymbolicTorsionGroup::make({}, profile({{4, fin(2)}}));
  CHECK(reduce_to_basic(pure).basic == pure.reduced_part);
  const auto div = SymbolicTorsionGroup::make({{Integer(2), fin(1)}}, CyclicProfile());
  CHECK(reduce_to_basic(div).basic.empty());
  CHECK(std::get<FgAbGroup>(brauer_of_bg(reduce_to_basic(div).basic)).is_trivial());
  CHECK(div.prime() == Integer(2));
  CHECK_THROWS_AS(SymbolicTorsionGroup::make({{Integer(4), fin(1)}}, CyclicProfile()), SemanticError);
  CHECK_FALSE(SymbolicTorsionGroup::make({{Integer(2), fin(1)}}, profile({{3, fin(1)}})).prime());
}

TEST_CASE("affine and rule printing") {
  CHECK(Affine{1, 0}.to_string() == "i");
  CHECK(Affine{2, 0}.to_string() == "2i");
  CHECK(Affine{1, 1}.to_string() == "i+1");
  CHECK(Affine{-1, 0}.to_string() == "-i");
  CHECK(Affine{0, 3}.to_string() == "3");
  CHECK(Affine{3, -2}.to_string() == "3i-2");
  CHECK(rule(1, {}, {1, 0}, Affine{2, 0}).to_string() == "rule i>=1: J=(i, 2i]");
  CHECK(rule(1, 5, {1, 0}, {}).to_string() == "rule 1<=i<=5: J=(i, inf)");
}

TEST_CASE("descriptors enforce strict upper triangularity and disjointness") {
  CHECK_THROWS_AS(ObstructionDescriptor({rule(0, {}, {1, -1}, Affine{2, 0})}), SemanticError);
  CHECK_THROWS_AS(ObstructionDescriptor({rule(0, {}, {0, 3}, Affine{2, 5})}), SemanticError);
  CHECK_NOTHROW(ObstructionDescriptor({rule(0, 3, {0, 3}, Affine{0, 9})}));
  CHECK_THROWS_AS(ObstructionDescriptor({rule(0, 4, {0, 3}, Affine{0, 9})}), SemanticError);
  CHECK_THROWS_AS(ObstructionDescriptor({rule(1, {}, {1, 0}, {}), rule(5, 8, {1, 0}, {})}), SemanticError);
  CHECK_THROWS_AS(ObstructionDescriptor({rule(1, 5, {1, 0}, {}), rule(5, 8, {1, 0}, {})}), SemanticError);
  CHECK_NOTHROW(ObstructionDescriptor({rule(6, {}, {1, 0}, {}), rule(1, 5, {1, 0}, {})}));
  CHECK_THROWS_AS(ObstructionDescriptor({rule(-1, {}, {1, 0}, {})}), SemanticError);
  CHECK_THROWS_AS(ObstructionDescriptor({rule(5, 3, {1, 0}, {})}), SemanticError);
  // Sorted by range start.
  const ObstructionDescriptor d({rule(6, {}, {1, 0}, {}), rule(1, 5, {1, 0}, {})});
  CHECK(d.rules().front().lo == 1);
  CHECK(ObstructionDescriptor().to_string() == "none");
}

TEST_CASE("triangularity check against pointwise evaluation") {
  testgen::Rng rng(77);
  for (int t = 0; t < 500; ++t) {
    const long lo = rng.uniform(0, 5);
    const std::optional<long> hi = rng.coin() ? std::optional<long>(lo + rng.uniform(0, 6)) : std::nullopt;
    const Affine lower{rng.uniform(-1, 2), rng.uniform(-3, 3)};
    bool ok = true;
    const long last = hi ? *hi : lo + 50;
    for (long i = lo; i <= last; ++i) ok = ok && lower.at(i) >= i;
    // Unbounded ranges: a slope below 1 eventually drops under i.
    if (!hi && lower.a < 1) ok = false;
    if (ok) CHECK_NOTHROW(ObstructionDescriptor({rule(lo, hi, lower, {})}));
    else CHECK_THROWS_AS(ObstructionDescriptor({rule(lo, hi, lower, {})}), SemanticError);
  }
}

TEST_CASE("non-Brauer certificate: worked cases") {
  const CyclicProfile p = profile({{3, w}});
  const auto cert = non_brauer_certificate(p, ObstructionDescriptor({rule(1, {}, {1, 0}, Affine{2, 0})}));
  CHECK(cert.verdict == NonBrauerVerdict::CertifiedNotInBr);
  CHECK(cert.finitely_many_infinite);
  CHECK(cert.unbounded_finite_sizes);
  CHECK(non_brauer_certificate(p, ObstructionDescriptor()).verdict == NonBrauerVerdict::ConditionFails);
  CHECK(non_brauer_certificate(p, ObstructionDescriptor({rule(0, {}, {1, 0}, Affine{1, 1})})).verdict ==
        NonBrauerVerdict::ConditionFails);
  // Infinite J_i for infinitely many i breaks condition (a).
  CHECK(non_brauer_certificate(p, ObstructionDescriptor({rule(0, {}, {1, 0}, {})})).verdict ==
        NonBrauerVerdict::ConditionFails);
  // Finitely many infinite J_i are allowed.
  const ObstructionDescriptor mixed({rule(0, 3, {1, 0}, {}), rule(4, {}, {1, 0}, Affine{3, 0})});
  CHECK(non_brauer_certificate(p, mixed).verdict == NonBrauerVerdict::CertifiedNotInBr);
  CHECK(non_brauer_certificate(profile({{3, fin(5)}}), mixed).verdict == NonBrauerVerdict::NotApplicable);
  CHECK(non_brauer_certificate(profile({{2, w}, {3, w}}), mixed).verdict == NonBrauerVerdict::NotApplicable);
  CHECK(to_string(NonBrauerVerdict::CertifiedNotInBr) == std::string("CERTIFIED_NOT_IN_BR"));
}

TEST_CASE("non-Brauer conditions against pointwise evaluation") {
  // Evaluate |J_i| on i <= 400 and compare with the coefficient reading.
  testgen::Rng rng(88);
  const CyclicProfile p = profile({{2, w}});
  for (int t = 0; t < 300; ++t) {
    std::vector<ObstructionRule> rules;
    long start = 0;
    const std::size_t n = rng.index(0, 3);
    for (std::size_t k = 0; k < n; ++k) {
      const long lo = start + rng.uniform(0, 3);
      const bool last = k + 1 == n;
      const std::optional<long> hi = last && rng.coin() ? std::nullopt : std::optional<long>(lo + rng.uniform(0, 5));
      const Affine lower{rng.uniform(1, 2), rng.uniform(0, 2)};
      std::optional<Affine> upper;
      if (rng.coin(0.8)) upper = Affine{lower.a + rng.uniform(0, 2), lower.b + rng.uniform(0, 3)};
      rules.push_back(rule(lo, hi, lower, upper));
      start = hi ? *hi + 1 : 0;
      if (!hi) break;
    }
    const ObstructionDescriptor d(rules);
    long infinite_count_tail = 0;
    long max_size_early = 0, max_size_late = 0;
    for (long i = 0; i <= 400; ++i) {
      for (const auto& r : d.rules()) {
        if (i < r.lo || (r.hi && i > *r.hi)) continue;
        if (!r.upper) {
          if (i > 200) ++infinite_count_tail;
          continue;
        }
        const Integer size = std::max(Integer(0), Integer(r.upper->at(i) - r.lower.at(i)));
        if (i <= 200) max_size_early = std::max(max_size_early, size.get_si());
        else max_size_late = std::max(max_size_late, size.get_si());
      }
    }
    const bool a = infinite_count_tail == 0;
    const bool b = max_size_late > max_size_early;
    const auto cert = non_brauer_certificate(p, d);
    CHECK(cert.finitely_many_infinite == a);
    CHECK(cert.unbounded_finite_sizes == b);
    CHECK((cert.verdict == NonBrauerVerdict::CertifiedNotInBr) == (a && b));
  }
}

TEST_CASE("non-Brauer certificate is monotone under adding rules") {
  testgen::Rng rng(89);
  const CyclicProfile p = profile({{5, w}});
  for (int t = 0; t < 200; ++t) {
    // A certified rule on a late unbounded range plus bounded extra rules in
    // front of it.
    const long start = rng.uniform(10, 20);
    std::vector<ObstructionRule> rules{rule(start, {}, {1, 0}, Affine{rng.uniform(2, 4), rng.uniform(0, 3)})};
    REQUIRE(non_brauer_certificate(p, ObstructionDescriptor(rules)).verdict == NonBrauerVerdict::CertifiedNotInBr);
    long lo = 0;
    while (lo + 2 < start && rng.coin(0.7)) {
      const long hi = std::min(start - 1, lo + rng.uniform(0, 3));
      std::optional<Affine> upper;
      if (rng.coin()) upper = Affine{1, rng.uniform(1, 5)};
      rules.push_back(rule(lo, hi, {1, 0}, upper));
      lo = hi + 1;
    }
    CHECK(non_brauer_certificate(p, ObstructionDescriptor(rules)).verdict == NonBrauerVerdict::CertifiedNotInBr);
  }
}

}  // TEST_SUITE
