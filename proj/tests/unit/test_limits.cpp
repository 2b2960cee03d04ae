#include <numeric>
#include <set>

#include "brauer/errors.hpp"
#include "brauer/limits.hpp"
#include "doctest.h"
#include "support/generators.hpp"

using namespace brauer;

namespace {

const FgAbGroup Z = FgAbGroup::free(1);
FgAbGroup Zn(long n) { return FgAbGroup::cyclic(n); }
IntMatrix scalar(long k) { return IntMatrix{{k}}; }

const std::vector<long> kSmallPrimes{2, 3, 5, 7, 11, 13};

// Free strand Z -(m)-> Z -(m)-> ...: the stage-0 generator maps to m^k at
// stage k, so it is q^e-divisible in the colimit iff q^e | m^k for some k.
std::set<long> divisible_primes_free_strand(long m, int stages) {
  std::set<long> out;
  for (long q : kSmallPrimes) {
    Integer q3 = q * q * q, image = 1;
    for (int k = 0; k <= stages; ++k) {
      if (k > 0) image *= m;
      if (image != 0 && mpz_divisible_p(image.get_mpz_t(), q3.get_mpz_t())) {
        out.insert(q);
        break;
      }
    }
  }
  return out;
}

// Z/o -(m)-> Z/o -(m)-> ...: order in the colimit of the stage-0 generator,
// i.e. the eventual order of its images m^k mod o.
long eventual_order(long o, long m, int stages) {
  long best = o;
  Integer image = 1;
  for (int k = 0; k <= stages; ++k) {
    if (k > 0) image = (image * m) % o;
    Integer g;
    Integer oo = o;
    mpz_gcd(g.get_mpz_t(), image.get_mpz_t(), oo.get_mpz_t());
    best = std::min(best, o / g.get_si());
  }
  return best;
}

}  // namespace

TEST_SUITE("limits") {

TEST_CASE("atom flags follow the table") {
  const auto q = SymbolicAtom::rationals().flags();
  CHECK(q.divisible == Tri::Yes);
  CHECK(q.torsion_free == Tri::Yes);
  const auto pr = SymbolicAtom::prufer(5).flags();
  CHECK(pr.divisible == Tri::Yes);
  CHECK(pr.torsion == Tri::Yes);
  const auto loc = SymbolicAtom::localized(6).flags();
  CHECK(loc.divisible == Tri::No);
  CHECK(loc.torsion_free == Tri::Yes);
  CHECK(SymbolicAtom::padic(3).flags().divisible == Tri::No);
  CHECK(SymbolicAtom::continuum_q_vector().flags().divisible == Tri::Yes);
  CHECK_THROWS_AS(SymbolicAtom::prufer(6), SemanticError);
  CHECK_THROWS_AS(SymbolicAtom::padic(1), SemanticError);
  CHECK(SymbolicAtom::localized(12).parameter == 6);
}

TEST_CASE("symbolic groups print and add canonically") {
  CHECK(SymbolicGroup().to_string() == "0");
  CHECK(SymbolicGroup::of(SymbolicAtom::localized(5)).to_string() == "Z[1/5]");
  const SymbolicGroup a = SymbolicGroup(Zn(6)) + SymbolicGroup::of(SymbolicAtom::rationals());
  CHECK(a.to_string() == "Z/6 + Q");
  const SymbolicGroup b = SymbolicGroup::of(SymbolicAtom::prufer(2)) + SymbolicGroup::of(SymbolicAtom::prufer(2));
  CHECK(b.to_string() == "Z(2^inf)^2");
  CHECK(b == SymbolicGroup::of(SymbolicAtom::prufer(2), 2));
  const SymbolicGroup c1 = SymbolicGroup::of(SymbolicAtom::rationals()) + SymbolicGroup::of(SymbolicAtom::prufer(3));
  const SymbolicGroup c2 = SymbolicGroup::of(SymbolicAtom::prufer(3)) + SymbolicGroup::of(SymbolicAtom::rationals());
  CHECK(c1 == c2);
  CHECK(a.divisible() == Tri::No);
  CHECK(a.torsion() == Tri::No);
  CHECK(a.nonzero() == Tri::Yes);
  CHECK(SymbolicGroup().nonzero() == Tri::No);
}

TEST_CASE("ext1_symbolic table") {
  CHECK(ext1_symbolic(SymbolicGroup(FgAbGroup::free(3))).is_zero());
  CHECK(ext1_symbolic(SymbolicGroup(Zn(6))) == SymbolicGroup(Zn(6)));
  CHECK(ext1_symbolic(SymbolicGroup::of(SymbolicAtom::prufer(7))) == SymbolicGroup::of(SymbolicAtom::padic(7)));
  CHECK(ext1_symbolic(SymbolicGroup::of(SymbolicAtom::rationals())) ==
        SymbolicGroup::of(SymbolicAtom::continuum_q_vector()));
  const SymbolicGroup e = ext1_symbolic(SymbolicGroup::of(SymbolicAtom::localized(5)));
  CHECK(e.divisible() == Tri::Yes);
  CHECK(e.nonzero() == Tri::Yes);
  CHECK(e.to_string() == "Ext(Z[1/5],Z)");
  CHECK_THROWS_AS(ext1_symbolic(SymbolicGroup::of(SymbolicAtom::padic(2))), UnsupportedError);
  CHECK_THROWS_AS(ext1_symbolic(e), UnsupportedError);
}

TEST_CASE("ext1_symbolic agrees with the finitely generated functor") {
  testgen::Rng rng(71);
  for (int t = 0; t < 200; ++t) {
    const FgAbGroup g = testgen::random_group(rng, 3, 3, 30);
    CHECK(ext1_symbolic(SymbolicGroup(g)) == SymbolicGroup(ext1(g, Z)));
  }
}

TEST_CASE("Ext of a torsion-free source is flagged divisible") {
  const std::vector<SymbolicGroup> sources{
      SymbolicGroup(FgAbGroup::free(2)),
      SymbolicGroup::of(SymbolicAtom::rationals()),
      SymbolicGroup::of(SymbolicAtom::localized(2)),
      SymbolicGroup::of(SymbolicAtom::localized(30), 2) + SymbolicGroup(Z),
  };
  for (const auto& s : sources) {
    REQUIRE(s.torsion_free() == Tri::Yes);
    CHECK(ext1_symbolic(s).divisible() == Tri::Yes);
  }
}

TEST_CASE("Ext(Z[1/p], Z) is nonzero: Z -> Z_p is not onto") {
  // 0 -> Z -> Z[1/p] -> Z(p^inf) -> 0 gives Z -> Z_p -> Ext(Z[1/p],Z) -> 0.
  // The p-adic unit 1/(1+p) is not an integer: residues of an integer n mod
  // p^k are eventually n (n >= 0) or p^k + n (n < 0); these are neither.
  for (long p : {2L, 3L, 5L, 7L}) {
    std::vector<Integer> residues;
    Integer pk = 1;
    for (int k = 1; k <= 12; ++k) {
      pk *= p;
      Integer inv, unit = 1 + p;
      mpz_invert(inv.get_mpz_t(), unit.get_mpz_t(), pk.get_mpz_t());
      residues.push_back(inv);
    }
    // Over the last three levels an integer shows a constant residue or a
    // constant gap to p^k.
    bool eventually_constant = true, eventually_negative = true;
    for (int k = 9; k < 11; ++k) {
      Integer pk0, pk1;
      mpz_ui_pow_ui(pk0.get_mpz_t(), p, k + 1);
      mpz_ui_pow_ui(pk1.get_mpz_t(), p, k + 2);
      eventually_constant = eventually_constant && residues[k] == residues[k + 1];
      eventually_negative = eventually_negative && pk0 - residues[k] == pk1 - residues[k + 1];
    }
    CHECK_FALSE(eventually_constant);
    CHECK_FALSE(eventually_negative);
    CHECK(ext1_symbolic(SymbolicGroup::of(SymbolicAtom::localized(p))).nonzero() == Tri::Yes);
  }
}

TEST_CASE("torsion and torsion-free parts of symbolic groups") {
  const SymbolicGroup g = SymbolicGroup(FgAbGroup::from_invariants(1, {6})) +
                          SymbolicGroup::of(SymbolicAtom::prufer(2)) + SymbolicGroup::of(SymbolicAtom::rationals());
  CHECK(torsion_subgroup(g) == SymbolicGroup(Zn(6)) + SymbolicGroup::of(SymbolicAtom::prufer(2)));
  CHECK(torsion_free_quotient(g) == SymbolicGroup(Z) + SymbolicGroup::of(SymbolicAtom::rationals()));
  const SymbolicGroup opaque = ext1_symbolic(SymbolicGroup::of(SymbolicAtom::localized(3)));
  CHECK_THROWS_AS(torsion_subgroup(opaque), UnsupportedError);
}

TEST_CASE("first Ulm subgroup") {
  testgen::Rng rng(5);
  for (int t = 0; t < 50; ++t) CHECK(first_ulm(testgen::random_group(rng, 3, 3, 20)).is_trivial());
  const SymbolicGroup q = SymbolicGroup::of(SymbolicAtom::rationals());
  CHECK(first_ulm(q) == q);
  CHECK(first_ulm(SymbolicGroup(Zn(6)) + q) == q);
  CHECK(first_ulm(SymbolicGroup::of(SymbolicAtom::localized(5))).is_zero());
  const SymbolicGroup mixed = SymbolicGroup::of(SymbolicAtom::prufer(3)) + SymbolicGroup::of(SymbolicAtom::padic(3));
  CHECK(first_ulm(mixed) == SymbolicGroup::of(SymbolicAtom::prufer(3)));
}

TEST_CASE("periodic chains validate their seams") {
  CHECK_NOTHROW(Tower({}, {}, {Zn(2)}, {scalar(1)}, Zn(4)));
  // Z/2 -> Z/4 sending 1 to 1 is not a homomorphism; 1 -> 2 is.
  CHECK_THROWS_AS(DirectedSystem({}, {}, {Zn(2)}, {scalar(1)}, Zn(4)), SemanticError);
  CHECK_NOTHROW(DirectedSystem({}, {}, {Zn(2)}, {scalar(2)}, Zn(4)));
  CHECK(Tower({}, {}, {Zn(2)}, {scalar(1)}, Zn(6)).growth() == 3);
  CHECK_THROWS_AS(Tower({}, {}, {Zn(6)}, {scalar(1)}, Zn(4)), SemanticError);
  CHECK_THROWS_AS(Tower({}, {}, {}, {}, Zn(4)), SemanticError);
  const Tower t({Z}, {scalar(0)}, {Zn(2)}, {scalar(1)}, Zn(4));
  CHECK(t.growth() == 2);
  CHECK(t.group(0) == Z);
  CHECK(t.group(1) == Zn(2));
  CHECK(t.group(2) == Zn(4));
  CHECK(t.group(4) == Zn(16));
  CHECK(t.map(2).domain() == Zn(8));
  CHECK(t.map(2).codomain() == Zn(4));
}

TEST_CASE("lim1: all-finite towers vanish by Jensen") {
  const Tower t({}, {}, {Zn(2)}, {scalar(1)}, Zn(4));
  const auto c = lim1_certificate(t);
  CHECK(c.verdict == Lim1Verdict::Vanishes);
  CHECK(c.reason == Lim1Reason::JensenFinite);
  const Tower u({Zn(3)}, {scalar(0)}, {Zn(5), Zn(25)}, {scalar(5), scalar(5)}, Zn(5));
  CHECK(lim1_certificate(u).reason == Lim1Reason::JensenFinite);
}

TEST_CASE("lim1: constant identity and surjective blocks satisfy Mittag-Leffler") {
  const auto c = lim1_certificate(Tower::constant(Z, scalar(1)));
  CHECK(c.verdict == Lim1Verdict::Vanishes);
  CHECK(c.reason == Lim1Reason::MittagLeffler);
  testgen::Rng rng(99);
  for (int t = 0; t < 60; ++t) {
    const std::size_t r = rng.index(1, 4);
    const IntMatrix u = testgen::random_unimodular(rng, r);
    const FgAbGroup g = FgAbGroup::free(r);
    const FgAbGroup prefix = testgen::random_group(rng, 2, 2, 10);
    const Tower tw({prefix}, {IntMatrix(prefix.generator_count(), r)}, {g}, {u}, g);
    const auto cert = lim1_certificate(tw);
    CHECK(cert.verdict == Lim1Verdict::Vanishes);
    CHECK(cert.reason == Lim1Reason::MittagLeffler);
  }
}

TEST_CASE("lim1: stabilizing but non-surjective images") {
  // Idempotent projection: images Z + 0 from the first step on.
  const Tower t = Tower::constant(FgAbGroup::free(2), IntMatrix{{1, 0}, {0, 0}});
  const auto c = lim1_certificate(t);
  CHECK(c.verdict == Lim1Verdict::Vanishes);
  CHECK(c.reason == Lim1Reason::MittagLeffler);
  // Oracle: image chains of powers of the map are literally constant.
  const IntMatrix m{{1, 0}, {0, 0}};
  CHECK(image_basis(m) == image_basis(m * m));
}

TEST_CASE("lim1: multiplication by p is inconclusive") {
  for (long p : {2L, 3L, 5L, 7L}) {
    const Tower t = Tower::constant(Z, scalar(p));
    const auto c = lim1_certificate(t);
    CHECK(c.verdict == Lim1Verdict::Inconclusive);
    CHECK(c.reason == Lim1Reason::None);
    CHECK_FALSE(c.witness.empty());
    // Oracle: the images p^k Z strictly shrink.
    for (int k = 1; k < 6; ++k) {
      Integer pk, pk1;
      mpz_ui_pow_ui(pk.get_mpz_t(), p, k);
      mpz_ui_pow_ui(pk1.get_mpz_t(), p, k + 1);
      CHECK_FALSE(mpz_divisible_p(pk.get_mpz_t(), pk1.get_mpz_t()));
    }
  }
}

TEST_CASE("lim1: mixed free and torsion with a nilpotent part") {
  // Z + Z/4 with map (x, y) -> (x, 2y): images into stage 0 are Z + 2^k Z/4,
  // stable only from k = 2 on, so comparing one period with two would miss it.
  const FgAbGroup g = FgAbGroup::from_invariants(1, {4});
  const Tower t = Tower::constant(g, IntMatrix{{1, 0}, {0, 2}});
  CHECK(lim1_certificate(t).verdict == Lim1Verdict::Vanishes);
}

TEST_CASE("colimit of free strands against the divisibility oracle") {
  for (long m = -12; m <= 12; ++m) {
    const SymbolicGroup colim = colimit_symbolic(DirectedSystem::constant(Z, scalar(m)));
    if (m == 0) {
      CHECK(colim.is_zero());
      continue;
    }
    const auto div = divisible_primes_free_strand(m, 12);
    if (div.empty()) {
      CHECK(colim == SymbolicGroup(Z));
      continue;
    }
    const Integer radical = std::accumulate(div.begin(), div.end(), 1L, std::multiplies<long>());
    CHECK(colim == SymbolicGroup::of(SymbolicAtom::localized(radical)));
    CHECK(colim.torsion_free() == Tri::Yes);
    CHECK(colim.divisible() == Tri::No);
  }
}

TEST_CASE("colimit of constant torsion strands against the eventual-order oracle") {
  for (long o = 2; o <= 30; ++o) {
    for (long m = 0; m <= 12; ++m) {
      const SymbolicGroup colim = colimit_symbolic(DirectedSystem::constant(Zn(o), scalar(m)));
      REQUIRE(colim.is_finitely_generated());
      const auto order = colim.finitely_generated_part().order();
      REQUIRE(order);
      CHECK(*order == eventual_order(o, m, 12));
      CHECK(colim.finitely_generated_part().invariant_factors().size() <= 1);
    }
  }
}

TEST_CASE("colimit of inclusions Z/p -> Z/p^2 -> ... is Prufer") {
  for (long p : {2L, 3L, 5L, 11L}) {
    const DirectedSystem d({}, {}, {Zn(p)}, {scalar(p)}, Zn(p * p));
    const SymbolicGroup colim = colimit_symbolic(d);
    CHECK(colim == SymbolicGroup::of(SymbolicAtom::prufer(p)));
    // Oracle: the stage-j generator has order p^{j+1} in every later stage
    // (p^k times it is p^{k+1} e_{j+1}, nonzero until k = j+1), so the
    // subgroup orders grow without bound and everything is p-divisible.
    for (std::size_t j = 0; j < 12; ++j) {
      const GroupHom h = d.composite(j, 3);
      CHECK(d.group(j).order() == h.image().order());
      CHECK(h.is_injective());
    }
  }
  // Growth p with multiplier p^2 kills everything.
  CHECK(colimit_symbolic(DirectedSystem({}, {}, {Zn(3)}, {scalar(9)}, Zn(9))).is_zero());
}

TEST_CASE("colimit with a prefix and several strands") {
  const FgAbGroup g = FgAbGroup::from_invariants(1, {6});
  const DirectedSystem d({Zn(5)}, {IntMatrix(2, 1)}, {g}, {IntMatrix{{5, 0}, {0, 1}}}, g);
  CHECK(colimit_symbolic(d) == SymbolicGroup(Zn(6)) + SymbolicGroup::of(SymbolicAtom::localized(5)));
  const DirectedSystem nondiag = DirectedSystem::constant(FgAbGroup::free(2), IntMatrix{{1, 1}, {0, 1}});
  CHECK_THROWS_AS(colimit_symbolic(nondiag), UnsupportedError);
}

TEST_CASE("phantom_of_telescope") {
  CHECK(phantom_of_telescope(DirectedSystem::constant(Zn(7), scalar(1)), 3).is_zero());
  CHECK(phantom_of_telescope(DirectedSystem::constant(Z, scalar(1)), 2).is_zero());
  for (long p : {2L, 3L, 5L}) {
    const SymbolicGroup ph = phantom_of_telescope(DirectedSystem::constant(Z, scalar(p)), 2);
    CHECK(ph.nonzero() == Tri::Yes);
    CHECK(ph.divisible() == Tri::Yes);
  }
  CHECK(phantom_of_telescope(DirectedSystem::constant(Z, scalar(5)), 0).is_zero());
}

TEST_CASE("phantom of any system with finite colimit is zero") {
  testgen::Rng rng(1234);
  for (int t = 0; t < 100; ++t) {
    const long o = rng.uniform(2, 40), m = rng.uniform(0, 10);
    CHECK(phantom_of_telescope(DirectedSystem::constant(Zn(o), scalar(m)), rng.index(1, 6)).is_zero());
  }
}

}  // TEST_SUITE
