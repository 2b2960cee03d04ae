// Command-line front end: one request from the arguments, or a batch file
// with one request per line.

#include <fstream>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "brauer/cli/execute.hpp"
#include "brauer/cli/reproduce.hpp"
#include "brauer/errors.hpp"

namespace {

constexpr const char* kUsage = R"(Requests:
  homology X n | cohomology X n [mod m] | uct X n | bockstein X n mod m
  brauer X | phantom X n | certify X [order k] | lim1 TOWER
  profile-brauer PROFILE | non-brauer-check PROFILE with DESCRIPTOR
  catalog [X | plus] | reproduce
Spaces: moore3(n), sphere(n), lens(n, top), lensinf(n), product(a, b),
  wedge(a, b, ...), infwedge(a), telescope(G, xk[, d]), bpgl(n), k(G, j),
  k(Q/Z, j), bg(Z(p^inf)^k + (Z/d)^w), complex { cells n: k; boundary n: [[...]] }
Exit codes: 0 ok, 1 reproduce mismatch, 2 parse error, 3 semantic error,
  4 unsupported)";

// Flags may also follow the request words (`brauer reproduce --json`).
void take_trailing_flags(std::vector<std::string>& words, bool& json, bool& trace, std::string& fault) {
  std::vector<std::string> kept;
  for (std::size_t i = 0; i < words.size(); ++i) {
    const std::string& w = words[i];
    if (w == "--json") json = true;
    else if (w == "--trace") trace = true;
    else if (w.rfind("--inject-fault=", 0) == 0) fault = w.substr(15);
    else if (w == "--inject-fault" && i + 1 < words.size()) fault = words[++i];
    else kept.push_back(w);
  }
  words = std::move(kept);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Brauer groups, phantom classes and lim^1 certificates for CW-complexes"};
  app.footer(kUsage);
  app.prefix_command();
  bool json = false, trace = false;
  std::string batch, fault;
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  app.add_flag("--json", json, "structured output, one document per request");
  app.add_flag("--trace", trace, "include SNF diagonals and rule evaluations");
  app.add_option("--batch", batch, "file with one request per line ('-' for standard input)");
  app.add_option("--jobs", jobs, "worker threads for batch mode")->check(CLI::PositiveNumber);
  app.add_option("--inject-fault", fault, "reproduce only: corrupt an expected-value formula (gcd)");
  CLI11_PARSE(app, argc, argv);

  std::vector<std::string> words = app.remaining();
  take_trailing_flags(words, json, trace, fault);
  const brauer::cli::OutputOptions opts{json, trace};

  if (!batch.empty()) {
    std::vector<std::string> lines;
    std::ifstream file;
    if (batch != "-") {
      file.open(batch);
      if (!file) {
        std::cerr << "cannot open " << batch << "\n";
        return brauer::cli::kExitSemantic;
      }
    }
    std::istream& in = batch == "-" ? std::cin : file;
    for (std::string line; std::getline(in, line);) lines.push_back(line);
    int code = brauer::cli::kExitOk;
    for (const auto& o : brauer::cli::run_batch(lines, opts, jobs)) {
      std::cout << o.output << "\n";
      if (code == brauer::cli::kExitOk) code = o.exit_code;
    }
    return code;
  }

  if (words.empty()) {
    std::cout << app.help() << "\n";
    return brauer::cli::kExitParse;
  }

  if (words.size() == 1 && words[0] == "reproduce") {
    try {
      const auto items = brauer::cli::run_reproduce({fault});
      std::cout << (json ? brauer::cli::reproduce_to_json(items).dump() : brauer::cli::render_reproduce_text(items))
                << "\n";
      for (const auto& i : items) {
        if (!i.passed) return brauer::cli::kExitReproduceFailed;
      }
      return brauer::cli::kExitOk;
    } catch (const brauer::SemanticError& e) {
      std::cerr << "semantic error: " << e.what() << "\n";
      return brauer::cli::kExitSemantic;
    }
  }

  std::string text;
  for (const auto& w : words) text += (text.empty() ? "" : " ") + w;
  const auto o = brauer::cli::run_line(text, 1, opts);
  (o.exit_code == brauer::cli::kExitOk || json ? std::cout : std::cerr) << o.output << "\n";
  return o.exit_code;
}
