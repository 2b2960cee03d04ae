#include "brauer/cli/execute.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

#include "brauer/cli/parser.hpp"
#include "brauer/cli/printer.hpp"
#include "brauer/cli/reproduce.hpp"
#include "brauer/errors.hpp"

namespace brauer::cli {

namespace {

using nlohmann::json;

constexpr const char* kCellular = "cellular chain complex of the given cell structure";
constexpr const char* kTelescopeHomology = "homology of a mapping telescope is the colimit of the stages";
constexpr const char* kCwBrauer = "Br'(X) = Torsion Ext^1(H_2(X), Z) = Torsion H^3(X; Z) for CW-complexes";
constexpr const char* kUct = "universal coefficient theorem: 0 -> Ext^1(H_{n-1}, Z) -> H^n -> Hom(H_n, Z) -> 0";
constexpr const char* kBockstein = "Bockstein of 0 -> Z -> Z -> Z/m -> 0: H^n(X; Z/m) -> H^{n+1}(X; Z) has image the "
                                   "m-torsion, and its kernel is the reduction of H^n(X; Z)";
constexpr const char* kPhantom = "phantom classes in H^n(X) = Ext^1(H_{n-1}(X)/Torsion, Z)";
constexpr const char* kMilnor = "Milnor sequence: 0 -> lim^1 H^{n-1}(X_a) -> H^n(X) -> lim H^n(X_a) -> 0";
constexpr const char* kSerre = "Serre: Br = Br' for finite CW-complexes";
constexpr const char* kWoodward = "Woodward: in dimension <= 4 every class of order r is the obstruction of a "
                                  "projective bundle of rank r";
constexpr const char* kEvenCells = "Br = Br' for finite-dimensional CW-complexes without odd cells of dimension >= 5";
constexpr const char* kJensen = "Jensen: lim^1 of a tower of finite groups vanishes";
constexpr const char* kMittagLeffler = "Mittag-Leffler: lim^1 vanishes when the images stabilize";
constexpr const char* kLambda = "H_2(G) = Lambda^2(G) for abelian G; Lambda^2 of a sum of cyclic groups is the sum "
                                "over pairs i < j of Z/gcd(n_i, n_j)";
constexpr const char* kBgBrauer = "Br'(BG) = Torsion prod_{i<j} Z/gcd(n_i, n_j) for G with basic subgroup sum Z/n_i";
constexpr const char* kNonBrauer = "p-primary G with infinite basic subgroup: a class with all but finitely many J_i "
                                   "finite and |J_i| unbounded lies in Br'(BG) but not in Br(BG)";

std::string sub(std::size_t n) { return std::to_string(n); }

// A finite skeleton covering degrees 0..top, when the space has one.
ChainComplex cochain_model(const SpaceDescription& x, std::size_t top, const char* what) {
  if (x.kind() == SpaceKind::Finite) return x.complex();
  if (x.kind() == SpaceKind::Periodic) return x.periodic_complex().unroll(top);
  throw UnsupportedError(std::string(what) + " needs a finite or periodic cell structure; " + x.label() +
                         " has neither");
}

std::string vector_text(const IntVector& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += v[i].get_str();
  }
  return out + "]";
}

void trace_boundaries(Report& rep, const ChainComplex& c, std::size_t lo, std::size_t hi) {
  for (std::size_t k = std::max<std::size_t>(lo, 1); k <= hi && k <= c.top_degree(); ++k) {
    rep.trace.push_back("SNF diagonal of d_" + sub(k) + " (" + sub(c.rank(k - 1)) + "x" + sub(c.rank(k)) +
                        "): " + vector_text(smith_diagonal(c.boundary(k))));
  }
}

void trace_space(Report& rep, const SpaceDescription& x, std::size_t lo, std::size_t hi) {
  switch (x.kind()) {
    case SpaceKind::Finite:
    case SpaceKind::InfiniteWedge:
      trace_boundaries(rep, x.complex(), lo, hi);
      break;
    case SpaceKind::Periodic:
      trace_boundaries(rep, x.periodic_complex().unroll(hi), lo, hi);
      break;
    case SpaceKind::Telescope:
      rep.trace.push_back("telescope of Moore spaces in degree " + sub(x.telescope_degree()) + " along " +
                          print(static_cast<const PeriodicChain&>(x.system())));
      break;
    case SpaceKind::Catalog:
      rep.trace.push_back("catalog entry " + x.label());
      break;
  }
}

json flags_json(const SymbolicGroup& g) {
  return json{{"divisible", to_string(g.divisible())},
              {"nonzero", to_string(g.nonzero())},
              {"torsion", to_string(g.torsion())},
              {"torsion_free", to_string(g.torsion_free())}};
}

json brauer_json(const BrauerValue& b) {
  json out;
  out["br_prime"] = to_string(b);
  if (const auto* p = std::get_if<ProductDescriptor>(&b)) {
    out["kind"] = "product";
    out["factors"] = print(p->factors);
    out["exponent"] = p->exponent.get_str();
    out["restricted_sum"] = print(p->restricted_sum);
    out["product_is_torsion"] = p->product_is_torsion;
  } else if (const auto* s = std::get_if<SymbolicGroup>(&b)) {
    out["kind"] = "symbolic";
    out["flags"] = flags_json(*s);
  } else {
    out["kind"] = "finitely_generated";
  }
  return out;
}

const char* equality_citation(EqualityReason r) {
  switch (r) {
    case EqualityReason::CompactSerre: return kSerre;
    case EqualityReason::WoodwardDimLe4: return kWoodward;
    case EqualityReason::EvenCells: return kEvenCells;
    case EqualityReason::NonBrauerCondition: return kNonBrauer;
    case EqualityReason::CatalogTheorem:
    case EqualityReason::None: break;
  }
  return nullptr;
}

void homology_cmd(const Request& r, Report& rep) {
  const auto& x = std::get<SpaceDescription>(r.subject);
  const std::size_t n = *r.degree;
  const HomologyValue h = space_homology(x, n);
  rep.result["group"] = to_string(h);
  rep.result["finitely_generated"] = std::holds_alternative<FgAbGroup>(h);
  rep.lines.push_back("H_" + sub(n) + "(" + x.label() + ") = " + to_string(h));
  rep.citations.push_back(x.kind() == SpaceKind::Telescope ? kTelescopeHomology : kCellular);
  trace_space(rep, x, n, n + 1);
}

void cohomology_cmd(const Request& r, Report& rep) {
  const auto& x = std::get<SpaceDescription>(r.subject);
  const std::size_t n = *r.degree;
  const Integer m = r.modulus.value_or(0);
  const ChainComplex c = cochain_model(x, n + 1, "cohomology");
  const FgAbGroup g = cohomology(c, n, m);
  rep.result["group"] = print(g);
  const std::string coeff = m == 0 ? "" : "; Z/" + m.get_str();
  rep.lines.push_back("H^" + sub(n) + "(" + x.label() + coeff + ") = " + print(g));
  rep.citations.push_back(kCellular);
  trace_boundaries(rep, c, n, n + 1);
}

void uct_cmd(const Request& r, Report& rep) {
  const auto& x = std::get<SpaceDescription>(r.subject);
  const std::size_t n = *r.degree;
  const ChainComplex c = cochain_model(x, n + 1, "uct");
  const UctDecomposition u = uct_decompose(c, n);
  rep.result["ext"] = print(u.ext_part);
  rep.result["hom"] = print(u.hom_part);
  rep.result["total"] = print(u.total);
  rep.result["splits"] = u.splits();
  rep.lines.push_back("Ext^1(H_" + sub(n == 0 ? 0 : n - 1) + ", Z) = " + print(u.ext_part));
  rep.lines.push_back("Hom(H_" + sub(n) + ", Z) = " + print(u.hom_part));
  rep.lines.push_back("H^" + sub(n) + " = " + print(u.total) + (u.splits() ? " (= Ext + Hom)" : " (MISMATCH)"));
  rep.citations.push_back(kUct);
  trace_boundaries(rep, c, n, n + 1);
}

void bockstein_cmd(const Request& r, Report& rep) {
  const auto& x = std::get<SpaceDescription>(r.subject);
  const std::size_t n = *r.degree;
  const Integer m = *r.modulus;
  const ChainComplex c = cochain_model(x, n + 2, "bockstein");
  const GroupHom b = bockstein(c, n, m);
  const FgAbGroup image = b.image();
  const FgAbGroup tors = m_torsion(b.codomain(), m);
  const bool injective = b.is_injective();
  const bool annihilated = compose(GroupHom::multiplication(b.codomain(), m), b).image().is_trivial();
  rep.result["domain"] = print(b.domain());
  rep.result["codomain"] = print(b.codomain());
  rep.result["matrix"] = print(b.matrix());
  rep.result["image"] = print(image);
  rep.result["kernel"] = print(b.kernel());
  rep.result["m_torsion"] = print(tors);
  rep.result["injective"] = injective;
  rep.result["onto_m_torsion"] = image == tors;
  rep.result["annihilated_by_m"] = annihilated;
  rep.lines.push_back("beta: H^" + sub(n) + "(" + x.label() + "; Z/" + m.get_str() + ") = " + print(b.domain()) +
                      " -> H^" + sub(n + 1) + " = " + print(b.codomain()));
  rep.lines.push_back("image = " + print(image) + ", " + m.get_str() + "-torsion = " + print(tors) +
                      ", injective: " + (injective ? "yes" : "no") +
                      ", m*beta = 0: " + (annihilated ? "yes" : "no"));
  rep.citations.push_back(kBockstein);
  trace_boundaries(rep, c, n, n + 2);
}

void brauer_cmd(const Request& r, Report& rep) {
  const auto& x = std::get<SpaceDescription>(r.subject);
  const BrauerValue b = brauer_prime(x);
  rep.result = brauer_json(b);
  rep.lines.push_back("Br' = " + to_string(b));
  if (x.kind() == SpaceKind::Finite || x.kind() == SpaceKind::Periodic) {
    const FgAbGroup h3 = cohomology(cochain_model(x, 4, "brauer"), 3);
    rep.result["torsion_h3"] = print(torsion_part(h3));
    rep.lines.push_back("Torsion H^3 = " + print(torsion_part(h3)));
  }
  if (x.kind() == SpaceKind::Catalog) {
    rep.citations.push_back(catalog_lookup(x).citation);
  } else {
    rep.citations.push_back(kCwBrauer);
    trace_space(rep, x, 2, 3);
  }
}

void phantom_cmd(const Request& r, Report& rep) {
  const auto& x = std::get<SpaceDescription>(r.subject);
  const std::size_t n = *r.degree;
  const PhantomResult p = phantom_subgroup(x, n);
  rep.result["group"] = p.group.to_string();
  rep.result["flags"] = flags_json(p.group);
  rep.result["justification"] = p.justification;
  rep.lines.push_back("Ph^" + sub(n) + "(" + x.label() + ") = " + p.group.to_string());
  rep.lines.push_back("divisible: " + std::string(to_string(p.group.divisible())) +
                      ", nonzero: " + to_string(p.group.nonzero()));
  rep.citations.push_back(kPhantom);
  rep.citations.push_back(kMilnor);
  rep.trace.push_back(p.justification);
}

void certify_cmd(const Request& r, Report& rep) {
  const auto& x = std::get<SpaceDescription>(r.subject);
  const EqualityCertificate c = equality_certificate(x);
  const auto rules = applicable_rules(x);
  rep.result["verdict"] = to_string(c.verdict);
  rep.result["reason"] = to_string(c.reason);
  rep.result["witness"] = c.witness;
  json fired = json::array();
  for (const auto& rule : rules) fired.push_back(to_string(rule.reason));
  rep.result["rules"] = fired;
  rep.lines.push_back(std::string("Br = Br': ") + to_string(c.verdict) + " (" + to_string(c.reason) + ")");
  for (const auto& rule : rules) {
    if (const char* cite = equality_citation(rule.reason)) rep.citations.push_back(cite);
    else if (rule.reason == EqualityReason::CatalogTheorem) rep.citations.push_back(catalog_lookup(x).citation);
    rep.trace.push_back(std::string(to_string(rule.reason)) + " -> " + to_string(rule.verdict) + ": " + rule.detail);
  }
  if (rules.empty()) {
    rep.citations.push_back(kCwBrauer);
    rep.trace.push_back("no rule applies");
  }
  if (r.order) {
    const auto rank = min_bundle_rank(x, *r.order);
    rep.result["min_bundle_rank"] = rank ? rank->get_str() : "unknown";
    rep.lines.push_back("minimal bundle rank for a class of order " + r.order->get_str() + ": " +
                        (rank ? rank->get_str() : std::string("unknown")));
    if (rank) rep.citations.push_back(kWoodward);
  }
  std::sort(rep.citations.begin(), rep.citations.end());
  rep.citations.erase(std::unique(rep.citations.begin(), rep.citations.end()), rep.citations.end());
}

void lim1_cmd(const Request& r, Report& rep) {
  const auto& t = std::get<Tower>(r.subject);
  const Lim1Certificate c = lim1_certificate(t);
  rep.result["verdict"] = to_string(c.verdict);
  rep.result["reason"] = to_string(c.reason);
  rep.result["witness"] = c.witness;
  rep.result["growth"] = t.growth().get_str();
  rep.result["all_finite"] = t.all_groups_finite();
  rep.lines.push_back(std::string("lim^1: ") + to_string(c.verdict) + " (" + to_string(c.reason) + ")");
  if (c.reason == Lim1Reason::JensenFinite) rep.citations.push_back(kJensen);
  else if (c.reason == Lim1Reason::MittagLeffler) rep.citations.push_back(kMittagLeffler);
  else {
    rep.citations.push_back(kJensen);
    rep.citations.push_back(kMittagLeffler);
  }
  rep.trace = c.witness;
}

void profile_brauer_cmd(const Request& r, Report& rep) {
  const auto& p = std::get<CyclicProfile>(r.subject);
  const CyclicProfile l2 = lambda_square_profile(p);
  const BgBrauer b = brauer_of_bg(p);
  rep.result["lambda2"] = print(l2);
  if (const auto* g = std::get_if<FgAbGroup>(&b)) {
    rep.result["br_prime"] = print(*g);
    rep.result["kind"] = "finitely_generated";
  } else {
    rep.result = brauer_json(std::get<ProductDescriptor>(b));
    rep.result["lambda2"] = print(l2);
  }
  if (const auto q = p.prime()) rep.result["prime"] = q->get_str();
  rep.lines.push_back("Lambda^2 = " + print(l2));
  rep.lines.push_back("Br'(BG) = " + to_string(b));
  rep.citations.push_back(kLambda);
  rep.citations.push_back(kBgBrauer);
  for (const auto& s : l2.summands()) {
    rep.trace.push_back("Lambda^2 summand (Z/" + s.order.get_str() + ")^" + s.multiplicity.to_string());
  }
}

void non_brauer_cmd(const Request& r, Report& rep) {
  const auto& p = std::get<CyclicProfile>(r.subject);
  const NonBrauerCertificate c = non_brauer_certificate(p, *r.descriptor);
  const EqualityCertificate e = equality_certificate(c);
  rep.result["verdict"] = to_string(c.verdict);
  rep.result["condition_finitely_many_infinite"] = c.finitely_many_infinite;
  rep.result["condition_unbounded_finite_sizes"] = c.unbounded_finite_sizes;
  rep.result["witness"] = c.witness;
  rep.result["equality"] = to_string(e.verdict);
  rep.lines.push_back(std::string("class ") + to_string(c.verdict) + "; Br = Br': " + to_string(e.verdict));
  rep.citations.push_back(kNonBrauer);
  rep.citations.push_back(kBgBrauer);
  rep.trace = c.witness;
}

json record_json(const CatalogRecord& rec) {
  return json{{"name", rec.name},
              {"br_prime", rec.br_prime},
              {"br", rec.br},
              {"equality", to_string(rec.equality)},
              {"citation", rec.citation}};
}

void catalog_cmd(const Request& r, Report& rep) {
  auto show = [&](const CatalogRecord& rec) {
    rep.result = record_json(rec);
    rep.lines.push_back(rec.name + ": Br' = " + rec.br_prime + ", Br = " + rec.br + ", " + to_string(rec.equality));
    rep.citations.push_back(rec.citation);
  };
  if (const auto* x = std::get_if<SpaceDescription>(&r.subject)) {
    show(catalog_lookup(*x));
  } else if (const auto* f = std::get_if<CatalogFact>(&r.subject)) {
    const auto facts = catalog_facts();
    const auto it = std::find_if(facts.begin(), facts.end(), [&](const auto& rec) { return rec.name == f->name; });
    if (it == facts.end()) throw SemanticError("no catalog fact named " + f->name);
    show(*it);
  } else {
    json entries = json::array();
    for (const char* family : {"bpgl(n)", "k(G,j)", "k(Q/Z,j)", "bg(D + B)"}) {
      entries.push_back(family);
      rep.lines.push_back(std::string("space family ") + family);
    }
    for (const auto& rec : catalog_facts()) {
      entries.push_back(rec.name);
      rep.lines.push_back("fact " + rec.name + ": " + rec.citation);
      rep.citations.push_back(rec.citation);
    }
    rep.result["entries"] = entries;
  }
}

}  // namespace

Report execute(const Request& r) {
  Report rep;
  rep.request = print(r);
  switch (r.command) {
    case Command::Homology: homology_cmd(r, rep); break;
    case Command::Cohomology: cohomology_cmd(r, rep); break;
    case Command::Uct: uct_cmd(r, rep); break;
    case Command::Bockstein: bockstein_cmd(r, rep); break;
    case Command::Brauer: brauer_cmd(r, rep); break;
    case Command::Phantom: phantom_cmd(r, rep); break;
    case Command::Certify: certify_cmd(r, rep); break;
    case Command::Lim1: lim1_cmd(r, rep); break;
    case Command::ProfileBrauer: profile_brauer_cmd(r, rep); break;
    case Command::NonBrauerCheck: non_brauer_cmd(r, rep); break;
    case Command::Catalog: catalog_cmd(r, rep); break;
    case Command::Reproduce: throw SemanticError("reproduce is not a single computation; use run_reproduce");
  }
  return rep;
}

json to_json(const Report& r, bool with_trace) {
  return json{{"request", r.request},
              {"result", r.result},
              {"citations", r.citations},
              {"trace", with_trace ? json(r.trace) : json::array()}};
}

std::string render_text(const Report& r, bool with_trace) {
  std::ostringstream os;
  os << "request: " << r.request;
  for (const auto& l : r.lines) os << "\n" << l;
  for (const auto& c : r.citations) os << "\ncitation: " << c;
  if (with_trace) {
    for (const auto& t : r.trace) os << "\ntrace: " << t;
  }
  return os.str();
}

namespace {

LineOutcome error_outcome(int code, const char* kind, const std::string& message, std::string_view line,
                          const OutputOptions& opts, const ParseError* pe = nullptr) {
  LineOutcome o;
  o.exit_code = code;
  if (opts.json) {
    json err{{"kind", kind}, {"message", message}};
    if (pe) {
      err["line"] = pe->line();
      err["column"] = pe->column();
    }
    o.output = json{{"request", std::string(line)}, {"error", err}}.dump();
  } else {
    o.output = std::string(kind) + " error: " + message;
  }
  return o;
}

}  // namespace

LineOutcome run_line(std::string_view line, std::size_t line_number, const OutputOptions& opts) {
  try {
    const Request r = parse_request(line, line_number);
    if (r.command == Command::Reproduce) {
      const auto items = run_reproduce();
      const bool ok = std::all_of(items.begin(), items.end(), [](const auto& i) { return i.passed; });
      return {ok ? kExitOk : kExitReproduceFailed,
              opts.json ? reproduce_to_json(items).dump() : render_reproduce_text(items)};
    }
    const Report rep = execute(r);
    return {kExitOk, opts.json ? to_json(rep, opts.trace).dump() : render_text(rep, opts.trace)};
  } catch (const ParseError& e) {
    return error_outcome(kExitParse, "parse", e.what(), line, opts, &e);
  } catch (const SemanticError& e) {
    return error_outcome(kExitSemantic, "semantic", e.what(), line, opts);
  } catch (const UnsupportedError& e) {
    return error_outcome(kExitUnsupported, "unsupported", e.what(), line, opts);
  }
}

std::vector<LineOutcome> run_batch(const std::vector<std::string>& lines, const OutputOptions& opts, unsigned jobs) {
  std::vector<std::pair<std::size_t, std::string_view>> work;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const auto first = lines[i].find_first_not_of(" \t\r");
    if (first == std::string::npos || lines[i][first] == '#') continue;
    work.emplace_back(i + 1, lines[i]);
  }
  std::vector<LineOutcome> out(work.size());
  std::atomic<std::size_t> cursor{0};
  auto worker = [&] {
    for (std::size_t k; (k = cursor.fetch_add(1)) < work.size();) {
      out[k] = run_line(work[k].second, work[k].first, opts);
    }
  };
  const unsigned n = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(work.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return out;
}

}  // namespace brauer::cli
