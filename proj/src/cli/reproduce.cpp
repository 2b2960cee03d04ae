#include "brauer/cli/reproduce.hpp"

#include <map>
#include <numeric>
#include <sstream>

#include "brauer/cli/execute.hpp"
#include "brauer/cli/parser.hpp"
#include "brauer/errors.hpp"

namespace brauer::cli {

namespace {

using nlohmann::json;

struct Check {
  std::string group;
  std::string request;
  std::string field;
  std::string expected;
};

std::string cyclic(long n) { return n == 1 ? "0" : "Z/" + std::to_string(n); }
std::string cyclic_profile(long n) { return n == 1 ? "0" : "(Z/" + std::to_string(n) + ")^1"; }

std::vector<Check> table(const ReproduceOptions& opts) {
  if (!opts.inject_fault.empty() && opts.inject_fault != "gcd") {
    throw SemanticError("unknown fault '" + opts.inject_fault + "'; known faults: gcd");
  }
  auto gcd = [&](long m, long n) { return std::gcd(m, n) + (opts.inject_fault == "gcd" ? 1 : 0); };

  std::vector<Check> t;
  const std::string g1 = "1 moore3 and catalog table";
  for (long n = 2; n <= 12; ++n) {
    const std::string s = std::to_string(n);
    t.push_back({g1, "brauer moore3(" + s + ")", "/br_prime", cyclic(n)});
    t.push_back({g1, "cohomology moore3(" + s + ") 3", "/group", cyclic(n)});
    t.push_back({g1, "catalog bpgl(" + s + ")", "/br_prime", cyclic(n)});
    t.push_back({g1, "catalog bpgl(" + s + ")", "/equality", "EQUAL"});
    t.push_back({g1, "catalog k(Z/" + s + ", 2)", "/br_prime", cyclic(n)});
    t.push_back({g1, "catalog k(Z/" + s + ", 2)", "/br", "0"});
    t.push_back({g1, "catalog k(Z/" + s + ", 2)", "/equality", "STRICT"});
    t.push_back({g1, "catalog k(Z/" + s + ", " + std::to_string(3 + n % 3) + ")", "/br_prime", "0"});
    t.push_back({g1, "catalog k(Z^2 + Z/" + s + ", 3)", "/br_prime", "0"});
  }
  t.push_back({g1, "catalog k(Q/Z, 2)", "/br_prime", "0"});

  const std::string g4 = "4 exterior square and Kunneth";
  for (long m = 2; m <= 8; ++m) {
    for (long n = 2; n <= 8; ++n) {
      const std::string ms = std::to_string(m), ns = std::to_string(n);
      const long g = gcd(m, n);
      t.push_back({g4, "profile-brauer (Z/" + ms + ")^1 + (Z/" + ns + ")^1", "/lambda2", cyclic_profile(g)});
      t.push_back({g4, "profile-brauer (Z/" + ms + ")^1 + (Z/" + ns + ")^1", "/br_prime", cyclic(g)});
      t.push_back({g4, "homology product(lens(" + ms + ", 3), lens(" + ns + ", 3)) 2", "/group", cyclic(g)});
    }
  }

  const std::string g6 = "6 Bockstein";
  for (long m = 2; m <= 10; ++m) {
    const std::string req = "bockstein moore3(" + std::to_string(m) + ") 2 mod " + std::to_string(m);
    t.push_back({g6, req, "/injective", "true"});
    t.push_back({g6, req, "/onto_m_torsion", "true"});
    t.push_back({g6, req, "/image", cyclic(m)});
    t.push_back({g6, req, "/annihilated_by_m", "true"});
  }

  const std::string g7 = "7 phantom classes";
  for (const char* x : {"moore3(6)", "sphere(3)", "product(lens(4, 3), lens(6, 3))", "wedge(sphere(2), moore3(5))"}) {
    for (int d = 0; d <= 7; ++d) {
      t.push_back({g7, "phantom " + std::string(x) + " " + std::to_string(d), "/group", "0"});
    }
  }
  for (long p : {2, 3, 5, 7}) {
    const std::string req = "phantom telescope(Z, x" + std::to_string(p) + ") 2";
    t.push_back({g7, req, "/flags/nonzero", "yes"});
    t.push_back({g7, req, "/flags/divisible", "yes"});
  }
  for (long n = 2; n <= 6; ++n) {
    for (int d = 0; d <= 8; ++d) {
      t.push_back({g7, "phantom lensinf(" + std::to_string(n) + ") " + std::to_string(d), "/group", "0"});
    }
  }

  const std::string g8 = "8 lim1 certificates";
  t.push_back({g8, "lim1 tower prefix [] block [Z/4 <-(x1)- Z/4]", "/reason", "JensenFinite"});
  t.push_back({g8, "lim1 tower prefix [Z/3 <-(0)-] block [Z/2 <-(x1)- Z/4 <-(x2)- Z/2]", "/reason", "JensenFinite"});
  t.push_back({g8, "lim1 tower prefix [] block [Z <-(x1)- Z]", "/reason", "MittagLeffler"});
  t.push_back({g8, "lim1 tower prefix [] block [Z^2 <-([[0,1],[1,0]])- Z^2]", "/reason", "MittagLeffler"});
  for (long p : {2, 3, 5}) {
    t.push_back({g8, "lim1 tower prefix [] block [Z <-(x" + std::to_string(p) + ")- Z]", "/verdict", "INCONCLUSIVE"});
  }

  const std::string g9 = "9 Br = Br' certificates";
  for (const char* x : {"moore3(6)", "sphere(2)", "lens(5, 7)", "product(moore3(4), moore3(6))"}) {
    t.push_back({g9, "certify " + std::string(x), "/verdict", "EQUAL"});
    t.push_back({g9, "certify " + std::string(x), "/reason", "CompactSerre"});
  }
  t.push_back({g9, "certify moore3(6) order 3", "/rules/1", "WoodwardDimLe4"});
  t.push_back({g9, "certify moore3(6) order 3", "/min_bundle_rank", "3"});
  t.push_back({g9, "certify product(lens(4, 2), lens(6, 2)) order 2", "/rules/1", "WoodwardDimLe4"});
  t.push_back({g9, "certify product(lens(4, 2), lens(6, 2)) order 2", "/min_bundle_rank", "2"});
  t.push_back({g9, "certify infwedge(product(sphere(2), product(sphere(2), sphere(2))))", "/verdict", "EQUAL"});
  t.push_back({g9, "certify infwedge(product(sphere(2), product(sphere(2), sphere(2))))", "/reason", "EvenCells"});
  for (long p : {2, 3, 5}) {
    const std::string prof = "(Z/" + std::to_string(p) + ")^w";
    t.push_back({g9, "non-brauer-check " + prof + " with rule i>=1: J=(i, 2i]", "/verdict", "CERTIFIED_NOT_IN_BR"});
    t.push_back({g9, "non-brauer-check " + prof + " with rule i>=1: J=(i, 2i]", "/equality", "STRICT"});
    t.push_back({g9, "non-brauer-check " + prof + " with rule i>=0: J=(i, i+3]", "/verdict", "CONDITION_FAILS"});
  }
  return t;
}

std::string field_text(const json& result, const std::string& pointer) {
  const json::json_pointer ptr(pointer);
  if (!result.contains(ptr)) return "<missing " + pointer + ">";
  const json& v = result.at(ptr);
  return v.is_string() ? v.get<std::string>() : v.dump();
}

}  // namespace

std::vector<ReproduceItem> run_reproduce(const ReproduceOptions& opts) {
  std::map<std::string, json> cache;
  std::vector<ReproduceItem> items;
  for (const Check& c : table(opts)) {
    ReproduceItem item{c.group, c.request, c.field, c.expected, "", false};
    auto it = cache.find(c.request);
    if (it == cache.end()) {
      json result;
      try {
        result = execute(parse_request(c.request)).result;
      } catch (const std::exception& e) {
        result = json{{"error", e.what()}};
      }
      it = cache.emplace(c.request, std::move(result)).first;
    }
    item.actual = it->second.contains("error") ? "error: " + it->second["error"].get<std::string>()
                                               : field_text(it->second, c.field);
    item.passed = item.actual == item.expected;
    items.push_back(std::move(item));
  }
  return items;
}

std::string render_reproduce_text(const std::vector<ReproduceItem>& items) {
  std::ostringstream os;
  std::size_t passed = 0;
  for (const auto& i : items) {
    if (i.passed) {
      ++passed;
      os << "PASS [" << i.group << "] " << i.request << " " << i.field << " = " << i.actual << "\n";
    } else {
      os << "FAIL [" << i.group << "] " << i.request << " " << i.field << "\n"
         << "  - expected: " << i.expected << "\n"
         << "  + actual:   " << i.actual << "\n";
    }
  }
  os << "reproduce: " << passed << "/" << items.size() << " items passed";
  return os.str();
}

json reproduce_to_json(const std::vector<ReproduceItem>& items) {
  json list = json::array();
  std::size_t passed = 0;
  for (const auto& i : items) {
    passed += i.passed ? 1 : 0;
    list.push_back(json{{"group", i.group},
                        {"request", i.request},
                        {"field", i.field},
                        {"expected", i.expected},
                        {"actual", i.actual},
                        {"status", i.passed ? "pass" : "fail"}});
  }
  return json{{"request", "reproduce"},
              {"result", json{{"items", list}, {"passed", passed}, {"failed", items.size() - passed}}},
              {"citations", json::array()},
              {"trace", json::array()}};
}

}  // namespace brauer::cli
