// Acceptance suite: one PASS/FAIL line per criterion, with the elapsed time
// checked against the criterion's limit.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "brauer/abgroup.hpp"
#include "brauer/chaincx.hpp"
#include "brauer/cli/execute.hpp"
#include "brauer/cli/parser.hpp"
#include "brauer/cli/printer.hpp"
#include "brauer/cli/reproduce.hpp"
#include "brauer/errors.hpp"
#include "brauer/intlin.hpp"
#include "brauer/limits.hpp"
#include "brauer/profiles.hpp"
#include "brauer/spaces.hpp"
#include "support/generators.hpp"
#include "support/literals.hpp"
#include "support/oracles.hpp"

using namespace brauer;

namespace {

class Tally {
 public:
  template <typename Describe>
  void check(bool ok, Describe&& describe) {
    ++checks_;
    if (!ok && failures_.size() < 5) failures_.push_back(describe());
    if (!ok) ++failed_;
  }
  std::size_t checks() const { return checks_; }
  std::size_t failed() const { return failed_; }
  const std::vector<std::string>& failures() const { return failures_; }

 private:
  std::size_t checks_ = 0;
  std::size_t failed_ = 0;
  std::vector<std::string> failures_;
};

struct Criterion {
  int number;
  const char* title;
  double limit_seconds;
  std::function<void(Tally&)> run;
};

const FgAbGroup kZ = FgAbGroup::free(1);
FgAbGroup cyc(long n) { return FgAbGroup::cyclic(n); }

std::vector<SpaceDescription> finite_corpus() {
  std::vector<SpaceDescription> out;
  for (long n = 1; n <= 12; ++n) out.push_back(moore_3cell(n));
  for (std::size_t n = 1; n <= 6; ++n) out.push_back(sphere(n));
  for (long n = 2; n <= 6; ++n) out.push_back(lens(n, 6));
  out.push_back(product(lens(4, 3), lens(6, 3)));
  out.push_back(product(sphere(2), product(sphere(2), sphere(2))));
  out.push_back(wedge({sphere(2), moore_3cell(5), lens(3, 4)}));
  testgen::Rng rng(2024);
  for (int i = 0; i < 150; ++i) out.push_back(testgen::random_finite_space(rng));
  return out;
}

// ---- 1 --------------------------------------------------------------------

void worked_examples(Tally& t) {
  for (long n = 2; n <= 12; ++n) {
    const auto y = moore_3cell(n);
    const std::string s = std::to_string(n);
    t.check(std::get<FgAbGroup>(brauer_prime(y)) == cyc(n), [&] { return "Br'(moore3(" + s + "))"; });
    t.check(cohomology(y.complex(), 3) == cyc(n), [&] { return "H^3(moore3(" + s + "))"; });
    const auto b = catalog_lookup(bpgl(n));
    t.check(b.br_prime == "Z/" + s && b.equality == EqualityVerdict::Equal, [&] { return "catalog bpgl(" + s + ")"; });
    const auto k = catalog_lookup(eilenberg_maclane(cyc(n), 2));
    t.check(k.br_prime == "Z/" + s && k.br == "0" && k.equality == EqualityVerdict::Strict,
            [&] { return "catalog k(Z/" + s + ",2)"; });
    for (std::size_t j = 3; j <= 5; ++j) {
      for (const auto& g : {cyc(n), direct_sum(kZ, cyc(n)), FgAbGroup::from_cyclic_orders({n, n, 0})}) {
        t.check(catalog_lookup(eilenberg_maclane(g, j)).br_prime == "0",
                [&] { return "catalog k(" + g.to_string() + "," + std::to_string(j) + ")"; });
      }
    }
  }
  t.check(catalog_lookup(eilenberg_maclane_qz(2)).br_prime == "0", [] { return std::string("catalog k(Q/Z,2)"); });
}

// ---- 2 --------------------------------------------------------------------

void snf_suite(Tally& t) {
  testgen::Rng rng(7001);
  for (int i = 0; i < 1000; ++i) {
    const IntMatrix a = testgen::random_matrix(rng, rng.index(1, 8), rng.index(1, 8), -9, 9);
    const SmithForm f = smith_normal_form(a);
    const std::string m = to_string(a);
    t.check(f.U * a * f.V == f.S, [&] { return "U A V != S for " + m; });
    t.check(abs(determinant(f.U)) == 1 && abs(determinant(f.V)) == 1, [&] { return "non-unimodular transform for " + m; });
    bool diagonal = true, chain = true;
    for (std::size_t r = 0; r < f.S.rows(); ++r) {
      for (std::size_t c = 0; c < f.S.cols(); ++c) {
        if (r != c && f.S(r, c) != 0) diagonal = false;
      }
    }
    for (std::size_t k = 0; k < f.diagonal.size(); ++k) {
      if (f.diagonal[k] < 0) chain = false;
      if (k + 1 < f.diagonal.size()) {
        const Integer& d = f.diagonal[k];
        const Integer& e = f.diagonal[k + 1];
        if (d == 0 ? e != 0 : !mpz_divisible_p(e.get_mpz_t(), d.get_mpz_t())) chain = false;
      }
    }
    t.check(diagonal && chain, [&] { return "S not a divisibility-chain diagonal for " + m; });
    const auto brute = oracle::cokernel_order_by_enumeration(a, 2000);
    const auto order = cokernel_structure(a).order();
    if (order && *order <= 2000) {
      t.check(brute && Integer(static_cast<unsigned long>(*brute)) == *order,
              [&] { return "cokernel order mismatch for " + m; });
    } else {
      t.check(!brute, [&] { return "enumeration found a small cokernel the SNF missed for " + m; });
    }
  }
}

// ---- 3 --------------------------------------------------------------------

// Every element of Z/o_1 + ... + Z/o_k (k <= 3) as a mixed-radix index.
class ElementTable {
 public:
  explicit ElementTable(std::vector<long> orders) : orders_(std::move(orders)) {
    size_ = 1;
    for (long o : orders_) size_ *= o;
  }
  long size() const { return size_; }
  long scaled(long index, long k) const {
    long out = 0, radix = 1;
    for (long o : orders_) {
      const long x = index % o;
      index /= o;
      out += ((x * k) % o) * radix;
      radix *= o;
    }
    return out;
  }
  // |B[d]|
  long killed_by(long d) const {
    long n = 0;
    for (long i = 0; i < size_; ++i) n += scaled(i, d) == 0;
    return n;
  }
  // |(B / aB)[d]| = #{x : d x in aB} / |aB|
  long quotient_killed_by(long a, long d) const {
    std::vector<char> in_image(static_cast<std::size_t>(size_), 0);
    long image = 0;
    for (long i = 0; i < size_; ++i) {
      char& c = in_image[static_cast<std::size_t>(scaled(i, a))];
      image += c == 0;
      c = 1;
    }
    long n = 0;
    for (long i = 0; i < size_; ++i) n += in_image[static_cast<std::size_t>(scaled(i, d))];
    return n / image;
  }

 private:
  std::vector<long> orders_;
  long size_ = 1;
};

void functor_suite(Tally& t) {
  std::vector<std::vector<long>> groups{{}};
  for (long a = 2; a <= 12; ++a) {
    groups.push_back({a});
    for (long b = a; b <= 12; ++b) {
      groups.push_back({a, b});
      for (long c = b; c <= 12; ++c) groups.push_back({a, b, c});
    }
  }
  const std::vector<long> primes{2, 3, 5, 7, 11};
  std::vector<long> probes;  // p^k, k = 1..4
  for (long p : primes) {
    long q = 1;
    for (int k = 1; k <= 4; ++k) probes.push_back(q *= p);
  }
  auto probe_index = [&](long d) { return static_cast<std::size_t>(std::find(probes.begin(), probes.end(), d) - probes.begin()); };

  // killed[g][k] = |G[k]| for k <= 12; quotient[g][a][probe] = |(G/aG)[probe]|.
  const std::size_t n = groups.size();
  std::vector<std::vector<long>> killed(n, std::vector<long>(13));
  std::vector<std::vector<std::vector<long>>> quotient(n, std::vector<std::vector<long>>(13, std::vector<long>(probes.size())));
  std::vector<FgAbGroup> canonical(n);
  for (std::size_t g = 0; g < n; ++g) {
    const ElementTable e(groups[g]);
    for (long k = 1; k <= 12; ++k) killed[g][static_cast<std::size_t>(k)] = e.killed_by(k);
    for (long a = 2; a <= 12; ++a) {
      for (std::size_t p = 0; p < probes.size(); ++p) {
        quotient[g][static_cast<std::size_t>(a)][p] = e.quotient_killed_by(a, probes[p]);
      }
    }
    IntVector o(groups[g].begin(), groups[g].end());
    canonical[g] = FgAbGroup::from_cyclic_orders(o);
  }

  using oracle::primary_parts;
  using oracle::primary_parts_from_counts;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto& a = groups[i];
      const auto& b = groups[j];
      auto hom_count = [&](long d) {
        long c = 1;
        for (long x : a) c *= killed[j][static_cast<std::size_t>(std::gcd(x, d))];
        return c;
      };
      auto ext_count = [&](long d) {
        long c = 1;
        for (long x : a) c *= quotient[j][static_cast<std::size_t>(x)][probe_index(d)];
        return c;
      };
      auto tor_count = [&](long d) {
        long c = 1;
        for (long y : b) c *= killed[i][static_cast<std::size_t>(std::gcd(y, d))];
        return c;
      };
      auto tensor_count = [&](long d) {
        long c = 1;
        for (long y : b) c *= quotient[i][static_cast<std::size_t>(y)][probe_index(d)];
        return c;
      };
      const FgAbGroup& A = canonical[i];
      const FgAbGroup& B = canonical[j];
      auto name = [&](const char* f) { return std::string(f) + "(" + A.to_string() + ", " + B.to_string() + ")"; };
      t.check(primary_parts(hom(A, B)) == primary_parts_from_counts(primes, 4, hom_count), [&] { return name("Hom"); });
      t.check(primary_parts(ext1(A, B)) == primary_parts_from_counts(primes, 4, ext_count), [&] { return name("Ext"); });
      t.check(primary_parts(tor1(A, B)) == primary_parts_from_counts(primes, 4, tor_count), [&] { return name("Tor"); });
      t.check(primary_parts(tensor(A, B)) == primary_parts_from_counts(primes, 4, tensor_count),
              [&] { return name("Tensor"); });
    }
  }
  testgen::Rng rng(3003);
  for (int k = 0; k < 200; ++k) {
    const FgAbGroup g = testgen::random_group(rng, 3, 4, 40);
    t.check(ext1(g, kZ) == torsion_part(g), [&] { return "Ext(" + g.to_string() + ", Z)"; });
  }
}

// ---- 4 --------------------------------------------------------------------

void lambda_suite(Tally& t) {
  for (long m = 2; m <= 8; ++m) {
    for (long n = 2; n <= 8; ++n) {
      const FgAbGroup want = cyc(std::gcd(m, n));
      const std::string tag = "(" + std::to_string(m) + "," + std::to_string(n) + ")";
      const CyclicProfile p({{m, Multiplicity::finite(1)}, {n, Multiplicity::finite(1)}});
      t.check(lambda_square_profile(p).to_group() == want, [&] { return "closed formula " + tag; });
      t.check(std::get<FgAbGroup>(brauer_of_bg(p)) == want, [&] { return "Br'(BG) formula " + tag; });
      t.check(from_presentation(oracle::exterior_square_relations(IntMatrix{{m, 0}, {0, n}})) == want,
              [&] { return "presentation oracle " + tag; });
      t.check(homology(tensor_complexes(lens(m, 3).complex(), lens(n, 3).complex()), 2) == want,
              [&] { return "Kunneth H_2 " + tag; });
    }
  }
}

// ---- 5 --------------------------------------------------------------------

void uct_suite(Tally& t) {
  testgen::Rng rng(5005);
  for (int i = 0; i < 500; ++i) {
    const ChainComplex c = testgen::random_complex(rng, 6, 6, 4);
    long chi_h = 0, chi_co = 0;
    for (std::size_t n = 0; n <= c.top_degree() + 1; ++n) {
      const UctDecomposition u = uct_decompose(c, n);
      t.check(u.total == direct_sum(u.ext_part, u.hom_part) && u.total == cohomology(c, n),
              [&] { return "UCT in degree " + std::to_string(n) + " of complex #" + std::to_string(i); });
      const long sign = n % 2 == 0 ? 1 : -1;
      chi_h += sign * static_cast<long>(homology(c, n).free_rank());
      chi_co += sign * static_cast<long>(u.total.free_rank());
    }
    t.check(chi_h == c.euler_characteristic() && chi_co == c.euler_characteristic(),
            [&] { return "Euler characteristic of complex #" + std::to_string(i); });
  }
}

// ---- 6 --------------------------------------------------------------------

void bockstein_suite(Tally& t) {
  for (long m = 2; m <= 10; ++m) {
    const auto c = moore_3cell(m).complex();
    const GroupHom b = bockstein(c, 2, m);
    const std::string s = std::to_string(m);
    t.check(b.is_injective(), [&] { return "beta injective, m = " + s; });
    t.check(b.image() == m_torsion(b.codomain(), m) && b.codomain() == cohomology(c, 3),
            [&] { return "image is the m-torsion of H^3, m = " + s; });
    for (std::size_t g = 0; g < b.domain().generator_count(); ++g) {
      IntVector e(b.domain().generator_count());
      e[g] = 1;
      IntVector y = b.apply(e);
      for (auto& v : y) v *= m;
      const IntVector z = normalize_coordinates(b.codomain(), y);
      t.check(std::all_of(z.begin(), z.end(), [](const Integer& v) { return v == 0; }),
              [&] { return "m * beta != 0, m = " + s; });
    }
  }
}

// ---- 7 --------------------------------------------------------------------

void phantom_suite(Tally& t) {
  for (const auto& x : finite_corpus()) {
    for (std::size_t n = 0; n <= x.complex().top_degree() + 2; ++n) {
      t.check(phantom_subgroup(x, n).group.is_zero(), [&] { return "Ph^" + std::to_string(n) + "(" + x.label() + ")"; });
      const FgAbGroup below = n == 0 ? FgAbGroup() : homology(x.complex(), n - 1);
      t.check(ext1(free_quotient(below), kZ).is_trivial(), [&] { return "Ext(free, Z) for " + x.label(); });
    }
  }
  for (long p : {2, 3, 5, 7, 11}) {
    const auto d = DirectedSystem::constant(kZ, IntMatrix{{p}});
    const auto x = telescope(d, 1, cli::telescope_label(d, 1));
    const SymbolicGroup g = phantom_subgroup(x, 2).group;
    t.check(g.nonzero() == Tri::Yes && g.divisible() == Tri::Yes,
            [&] { return "telescope(Z, x" + std::to_string(p) + ") phantom flags"; });
  }
  for (long n = 2; n <= 12; ++n) {
    const auto x = lens_periodic(n);
    for (std::size_t k = 0; k <= 12; ++k) {
      t.check(phantom_subgroup(x, k).group.is_zero(), [&] { return "Ph^" + std::to_string(k) + "(" + x.label() + ")"; });
    }
  }
}

// ---- 8 --------------------------------------------------------------------

void lim1_suite(Tally& t) {
  testgen::Rng rng(8008);
  for (int i = 0; i < 100; ++i) {
    std::vector<FgAbGroup> prefix(rng.index(0, 2)), block(rng.index(1, 3));
    for (auto& g : prefix) g = testgen::random_group(rng, 0, 3, 12);
    for (auto& g : block) g = testgen::random_group(rng, 0, 3, 12);
    std::vector<IntMatrix> pm, bm;
    for (std::size_t k = 0; k < prefix.size(); ++k) {
      pm.push_back(testgen::random_hom_matrix(rng, k + 1 < prefix.size() ? prefix[k + 1] : block[0], prefix[k]));
    }
    for (std::size_t k = 0; k < block.size(); ++k) {
      bm.push_back(testgen::random_hom_matrix(rng, k + 1 < block.size() ? block[k + 1] : block[0], block[k]));
    }
    const Tower tw(prefix, pm, block, bm, block[0]);
    const auto c = lim1_certificate(tw);
    t.check(c.verdict == Lim1Verdict::Vanishes && c.reason == Lim1Reason::JensenFinite,
            [&] { return "finite tower " + cli::print(tw); });
  }
  for (int i = 0; i < 100; ++i) {
    const std::size_t r = rng.index(1, 3);
    const FgAbGroup g = FgAbGroup::free(r);
    std::vector<FgAbGroup> block(rng.index(1, 3), g);
    std::vector<IntMatrix> bm;
    for (std::size_t k = 0; k < block.size(); ++k) bm.push_back(testgen::random_unimodular(rng, r));
    std::vector<FgAbGroup> prefix{testgen::random_group(rng, 2, 2, 9)};
    std::vector<IntMatrix> pm{testgen::random_hom_matrix(rng, g, prefix[0])};
    const Tower tw(prefix, pm, block, bm, g);
    const auto c = lim1_certificate(tw);
    t.check(c.verdict == Lim1Verdict::Vanishes && c.reason == Lim1Reason::MittagLeffler,
            [&] { return "surjective tower " + cli::print(tw); });
  }
  for (long p = 2; p <= 13; ++p) {
    const auto c = lim1_certificate(Tower::constant(kZ, IntMatrix{{p}}));
    t.check(c.verdict == Lim1Verdict::Inconclusive, [&] { return "(Z, x" + std::to_string(p) + ") tower"; });
  }
}

// ---- 9 --------------------------------------------------------------------

void certificate_suite(Tally& t) {
  for (const auto& x : finite_corpus()) {
    const auto c = equality_certificate(x);
    t.check(c.verdict == EqualityVerdict::Equal && c.reason == EqualityReason::CompactSerre,
            [&] { return "CompactSerre for " + x.label(); });
    const auto dim = x.dimension();
    if (!dim || *dim < 3 || *dim > 4) continue;
    const auto rules = applicable_rules(x);
    t.check(std::any_of(rules.begin(), rules.end(), [](const auto& r) { return r.reason == EqualityReason::WoodwardDimLe4; }),
            [&] { return "Woodward rule for " + x.label(); });
    const FgAbGroup br = std::get<FgAbGroup>(brauer_prime(x));
    const Integer e = br.exponent();
    for (Integer k = 1; k <= e; ++k) {
      if (!mpz_divisible_p(e.get_mpz_t(), k.get_mpz_t())) continue;
      const auto rank = min_bundle_rank(x, k);
      t.check(rank && *rank == k, [&] { return "min_bundle_rank(" + x.label() + ", " + k.get_str() + ")"; });
    }
  }
  for (const auto& x : {product(lens(4, 2), lens(6, 2)), moore_3cell(9), product(moore_3cell(2), sphere(1))}) {
    t.check(x.dimension() && *x.dimension() >= 3 && *x.dimension() <= 4, [&] { return "dimension of " + x.label(); });
  }
  const auto even = infinite_wedge(product(sphere(2), product(sphere(2), sphere(2))));
  const auto ce = equality_certificate(even);
  t.check(even.dimension() == std::optional<std::size_t>(6) && ce.verdict == EqualityVerdict::Equal &&
              ce.reason == EqualityReason::EvenCells,
          [] { return std::string("EvenCells on the 6-dimensional even-cell space"); });
  for (long p : {2, 3, 5, 7}) {
    const CyclicProfile prof({{p, Multiplicity::omega()}});
    const ObstructionDescriptor doubling({ObstructionRule{1, std::nullopt, Affine{1, 0}, Affine{2, 0}}});
    const ObstructionDescriptor bounded({ObstructionRule{0, std::nullopt, Affine{1, 0}, Affine{1, 3}}});
    t.check(non_brauer_certificate(prof, doubling).verdict == NonBrauerVerdict::CertifiedNotInBr,
            [&] { return "doubling rule for p = " + std::to_string(p); });
    t.check(non_brauer_certificate(prof, bounded).verdict == NonBrauerVerdict::ConditionFails,
            [&] { return "bounded rule for p = " + std::to_string(p); });
  }
}

// ---- 10 -------------------------------------------------------------------

template <typename T, typename Gen, typename Parse>
void round_trip(Tally& t, const char* grammar, std::uint64_t seed, Gen gen, Parse parse) {
  testgen::Rng rng(seed);
  for (int i = 0; i < 500; ++i) {
    const T x = gen(rng);
    const std::string text = cli::print(x);
    bool ok = false;
    try {
      const T back = parse(text);
      ok = back == x && cli::print(back) == text;
    } catch (const std::exception&) {
    }
    t.check(ok, [&] { return std::string(grammar) + " round trip: " + text; });
  }
}

void cli_suite(Tally& t) {
  using testgen::Rng;
  round_trip<FgAbGroup>(t, "group", 101, [](Rng& r) { return testgen::random_group(r, 3, 4, 60); }, cli::parse_group);
  round_trip<CyclicProfile>(t, "profile", 102, [](Rng& r) { return testgen::random_profile(r); }, cli::parse_profile);
  round_trip<IntMatrix>(t, "matrix", 103,
                        [](Rng& r) { return testgen::random_matrix(r, r.index(1, 5), r.index(1, 5), -99, 99); },
                        cli::parse_matrix);
  round_trip<ChainComplex>(t, "complex", 104, [](Rng& r) { return testgen::random_complex(r); }, cli::parse_complex);
  round_trip<Tower>(t, "tower", 105, [](Rng& r) { return testgen::random_tower(r); }, cli::parse_tower);
  round_trip<DirectedSystem>(t, "system", 106, [](Rng& r) { return testgen::random_system(r); }, cli::parse_system);
  round_trip<ObstructionDescriptor>(t, "descriptor", 107, [](Rng& r) { return testgen::random_descriptor(r); },
                                    cli::parse_descriptor);
  round_trip<Affine>(t, "affine", 108, [](Rng& r) { return testgen::random_affine(r); }, cli::parse_affine);
  round_trip<SymbolicTorsionGroup>(t, "torsion group", 109, [](Rng& r) { return testgen::random_torsion_group(r); },
                                   cli::parse_torsion_group);
  round_trip<SpaceDescription>(t, "space", 110, [](Rng& r) { return testgen::random_space(r); }, cli::parse_space);
  round_trip<cli::Request>(t, "request", 111, [](Rng& r) { return testgen::random_request(r); },
                           [](const std::string& s) { return cli::parse_request(s); });

  for (const auto& item : cli::run_reproduce()) {
    t.check(item.passed, [&] {
      return "reproduce " + item.request + " " + item.field + ": expected " + item.expected + ", got " + item.actual;
    });
  }

  testgen::Rng rng(112);
  std::vector<std::string> lines;
  for (int i = 0; i < 200; ++i) {
    const auto r = testgen::random_request(rng);
    if (r.command != cli::Command::Reproduce) lines.push_back(cli::print(r));
  }
  const cli::OutputOptions opts{true, true};
  const auto first = cli::run_batch(lines, opts, 8);
  const auto second = cli::run_batch(lines, opts, 8);
  const auto serial = cli::run_batch(lines, opts, 1);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    t.check(first[i].output == second[i].output && first[i].output == serial[i].output,
            [&] { return "non-deterministic output for " + lines[i]; });
  }
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "worked example table (moore3, BPGL, K(Z/n,2), K(G,j>=3), K(Q/Z,2))", 5, worked_examples},
      {2, "Smith normal form properties on 1000 random matrices", 30, snf_suite},
      {3, "Hom/Ext/Tensor/Tor against element counts, all small pairs", 30, functor_suite},
      {4, "exterior square three-way agreement", 10, lambda_suite},
      {5, "universal coefficients on 500 complexes", 60, uct_suite},
      {6, "Bockstein onto the m-torsion", 5, bockstein_suite},
      {7, "phantom subgroups", 5, phantom_suite},
      {8, "lim^1 certificates", 5, lim1_suite},
      {9, "Br = Br' certificates", 5, certificate_suite},
      {10, "request grammar round trips, reproduce, determinism", 60, cli_suite},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Tally t;
    std::string error;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(t);
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool ok = error.empty() && t.failed() == 0 && secs < c.limit_seconds;
    failed += ok ? 0 : 1;
    std::printf("[%s] %2d %s: %zu/%zu checks (%.2f s, limit %.0f s)\n", ok ? "PASS" : "FAIL", c.number, c.title,
                t.checks() - t.failed(), t.checks(), secs, c.limit_seconds);
    if (!error.empty()) std::printf("       exception: %s\n", error.c_str());
    for (const auto& f : t.failures()) std::printf("       failed: %s\n", f.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
