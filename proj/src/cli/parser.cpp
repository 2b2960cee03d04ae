#include "brauer/cli/parser.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "brauer/cli/lexer.hpp"
#include "brauer/cli/printer.hpp"
#include "brauer/errors.hpp"

namespace brauer::cli {

namespace {

// A map literal before the groups on both sides are known.
struct RawMap {
  enum class Kind { Scalar, Zero, Matrix } kind = Kind::Zero;
  Integer scalar = 0;
  IntMatrix matrix;
  bool explicit_empty = false;
  std::size_t line = 1;
  std::size_t column = 1;
};

std::string where(std::size_t line, std::size_t column) {
  return " at line " + std::to_string(line) + ", column " + std::to_string(column);
}

class Parser {
 public:
  Parser(std::string_view text, std::size_t line) : tokens_(tokenize(text, line)) {}

  const Token& peek(std::size_t ahead = 0) const {
    return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
  }
  Token next() {
    Token t = peek();
    if (pos_ + 1 < tokens_.size()) ++pos_;
    return t;
  }

  [[noreturn]] void fail(const std::string& message) const {
    const Token& t = peek();
    const std::string found = t.kind == TokenKind::End ? "end of input" : "'" + t.text + "'";
    throw ParseError(message + ", found " + found, t.line, t.column);
  }
  [[noreturn]] void semantic(const std::string& message, const Token& at) const {
    throw SemanticError(message + where(at.line, at.column));
  }

  bool at_symbol(std::string_view s, std::size_t ahead = 0) const {
    return peek(ahead).kind == TokenKind::Symbol && peek(ahead).text == s;
  }
  bool at_word(std::string_view w, std::size_t ahead = 0) const {
    return peek(ahead).kind == TokenKind::Word && peek(ahead).text == w;
  }
  bool at_integer() const { return peek().kind == TokenKind::Integer; }
  bool at_end() const { return peek().kind == TokenKind::End; }

  void expect_symbol(std::string_view s) {
    if (!at_symbol(s)) fail("expected '" + std::string(s) + "'");
    next();
  }
  void expect_word(std::string_view w) {
    if (!at_word(w)) fail("expected '" + std::string(w) + "'");
    next();
  }
  void expect_end() {
    if (!at_end()) fail("expected end of input");
  }

  Integer integer() {
    bool negative = false;
    if (at_symbol("-")) {
      next();
      negative = true;
    }
    if (!at_integer()) fail("expected integer");
    Integer v(next().text);
    return negative ? Integer(-v) : v;
  }

  std::size_t natural(const std::string& what) {
    const Token at = peek();
    const Integer v = integer();
    if (v < 0) semantic("negative " + what + " " + v.get_str(), at);
    if (!v.fits_ulong_p()) semantic(what + " " + v.get_str() + " is too large", at);
    return v.get_ui();
  }

  // ---- groups -----------------------------------------------------------

  FgAbGroup group() {
    IntVector orders;
    group_term(orders);
    while (at_symbol("+")) {
      next();
      group_term(orders);
    }
    return FgAbGroup::from_cyclic_orders(orders);
  }

  void group_term(IntVector& orders) {
    if (at_integer() && peek().text == "0") {
      next();
      return;
    }
    if (!at_word("Z")) fail("expected group term 'Z', 'Z^r', 'Z/d' or '0'");
    next();
    if (at_symbol("^")) {
      next();
      const std::size_t r = natural("free rank");
      for (std::size_t k = 0; k < r; ++k) orders.push_back(0);
    } else if (at_symbol("/")) {
      next();
      const Token at = peek();
      const Integer d = integer();
      if (d < 2) semantic("Z/" + d.get_str() + " is not allowed; cyclic orders start at 2", at);
      orders.push_back(d);
    } else {
      orders.push_back(0);
    }
  }

  // ---- profiles and torsion groups ---------------------------------------

  Multiplicity multiplicity() {
    if (at_word("w")) {
      next();
      return Multiplicity::omega();
    }
    const Token at = peek();
    const Integer k = integer();
    if (k < 1) semantic("multiplicity must be positive, got " + k.get_str(), at);
    return Multiplicity::finite(k);
  }

  CyclicSummand cyclic_power() {
    expect_symbol("(");
    expect_word("Z");
    expect_symbol("/");
    const Token at = peek();
    const Integer d = integer();
    if (d < 2) semantic("Z/" + d.get_str() + " is not allowed; cyclic orders start at 2", at);
    expect_symbol(")");
    expect_symbol("^");
    return {d, multiplicity()};
  }

  CyclicProfile profile() {
    std::vector<CyclicSummand> s;
    if (at_integer() && peek().text == "0") {
      next();
      return CyclicProfile();
    }
    s.push_back(cyclic_power());
    while (at_symbol("+")) {
      next();
      s.push_back(cyclic_power());
    }
    return CyclicProfile(std::move(s));
  }

  SymbolicTorsionGroup torsion_group() {
    std::vector<std::pair<Integer, Multiplicity>> divisible;
    std::vector<CyclicSummand> reduced;
    auto term = [&] {
      if (at_integer() && peek().text == "0") {
        next();
      } else if (at_word("Z")) {
        next();
        expect_symbol("(");
        const Integer p = integer();
        expect_symbol("^");
        expect_word("inf");
        expect_symbol(")");
        Multiplicity m = Multiplicity::finite(1);
        if (at_symbol("^")) {
          next();
          m = multiplicity();
        }
        divisible.emplace_back(p, m);
      } else if (at_symbol("(")) {
        reduced.push_back(cyclic_power());
      } else {
        fail("expected torsion term 'Z(p^inf)', '(Z/d)^k' or '0'");
      }
    };
    term();
    while (at_symbol("+")) {
      next();
      term();
    }
    return SymbolicTorsionGroup::make(std::move(divisible), CyclicProfile(std::move(reduced)));
  }

  // ---- matrices and maps -------------------------------------------------

  IntMatrix matrix() {
    const Token at = peek();
    expect_symbol("[");
    std::vector<IntVector> rows;
    if (!at_symbol("]")) {
      rows.push_back(matrix_row());
      while (at_symbol(",")) {
        next();
        rows.push_back(matrix_row());
      }
    }
    expect_symbol("]");
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    std::vector<Integer> entries;
    for (const auto& r : rows) {
      if (r.size() != cols) semantic("matrix rows have different lengths", at);
      entries.insert(entries.end(), r.begin(), r.end());
    }
    return IntMatrix(rows.size(), cols, std::move(entries));
  }

  IntVector matrix_row() {
    expect_symbol("[");
    IntVector row;
    if (!at_symbol("]")) {
      row.push_back(integer());
      while (at_symbol(",")) {
        next();
        row.push_back(integer());
      }
    }
    expect_symbol("]");
    return row;
  }

  RawMap raw_map() {
    RawMap m;
    m.line = peek().line;
    m.column = peek().column;
    if (peek().kind == TokenKind::Word && peek().text.size() > 1 && peek().text[0] == 'x' &&
        peek().text.find_first_not_of("0123456789", 1) == std::string::npos) {
      m.kind = RawMap::Kind::Scalar;
      m.scalar = Integer(next().text.substr(1));
    } else if (at_word("x") && peek(1).kind == TokenKind::Symbol && peek(1).text == "-" &&
               peek(2).kind == TokenKind::Integer) {
      // x-3: a negative scalar.
      next();
      next();
      m.kind = RawMap::Kind::Scalar;
      m.scalar = -Integer(next().text);
    } else if (at_integer() && peek().text == "0") {
      next();
      m.kind = RawMap::Kind::Zero;
    } else if (at_symbol("[")) {
      m.kind = RawMap::Kind::Matrix;
      m.matrix = matrix();
    } else {
      fail("expected map 'xk', '0' or a matrix");
    }
    return m;
  }

  IntMatrix resolve(const RawMap& m, std::size_t rows, std::size_t cols, const std::string& what) const {
    switch (m.kind) {
      case RawMap::Kind::Zero:
        return IntMatrix(rows, cols);
      case RawMap::Kind::Scalar: {
        if (rows != cols) {
          throw SemanticError("scalar map " + what + " needs groups with equal generator counts" +
                              where(m.line, m.column));
        }
        IntMatrix out(rows, cols);
        for (std::size_t i = 0; i < rows; ++i) out(i, i) = m.scalar;
        return out;
      }
      case RawMap::Kind::Matrix:
        if (m.matrix.rows() * m.matrix.cols() == 0 && rows * cols == 0) return IntMatrix(rows, cols);
        if (m.matrix.rows() != rows || m.matrix.cols() != cols) {
          throw SemanticError("map " + what + " must be " + std::to_string(rows) + "x" + std::to_string(cols) +
                              ", got " + std::to_string(m.matrix.rows()) + "x" +
                              std::to_string(m.matrix.cols()) + where(m.line, m.column));
        }
        return m.matrix;
    }
    return IntMatrix(rows, cols);
  }

  // `-(f)->` or `<-(f)-`; the chain kind fixes the direction, so both
  // spellings are accepted.
  RawMap arrow() {
    if (at_symbol("-")) {
      next();
      expect_symbol("(");
      RawMap m = raw_map();
      expect_symbol(")");
      expect_symbol("->");
      return m;
    }
    if (at_symbol("<-")) {
      next();
      expect_symbol("(");
      RawMap m = raw_map();
      expect_symbol(")");
      expect_symbol("-");
      return m;
    }
    fail("expected arrow '-(map)->' or '<-(map)-'");
  }

  bool at_arrow() const { return at_symbol("-") || at_symbol("<-"); }

  PeriodicChain chain(ChainDirection expected) {
    const Token head = peek();
    if (expected == ChainDirection::Tower) expect_word("tower");
    else expect_word("system");
    expect_word("prefix");
    expect_symbol("[");
    std::vector<FgAbGroup> prefix_groups;
    std::vector<RawMap> prefix_raw;
    while (!at_symbol("]")) {
      prefix_groups.push_back(group());
      prefix_raw.push_back(arrow());
    }
    next();
    expect_word("block");
    expect_symbol("[");
    std::vector<FgAbGroup> block_groups{group()};
    std::vector<RawMap> block_raw;
    FgAbGroup closing;
    if (!at_arrow()) fail("expected arrow after the first block group");
    while (at_arrow()) {
      block_raw.push_back(arrow());
      FgAbGroup g = group();
      if (at_arrow()) block_groups.push_back(std::move(g));
      else closing = std::move(g);
    }
    expect_symbol("]");

    auto shaped = [&](const RawMap& m, const FgAbGroup& lower, const FgAbGroup& upper, const std::string& what) {
      // lower = A_j, upper = A_{j+1}
      if (expected == ChainDirection::Tower) {
        return resolve(m, lower.generator_count(), upper.generator_count(), what);
      }
      return resolve(m, upper.generator_count(), lower.generator_count(), what);
    };
    std::vector<IntMatrix> prefix_maps, block_maps;
    for (std::size_t i = 0; i < prefix_raw.size(); ++i) {
      const FgAbGroup& upper = i + 1 < prefix_groups.size() ? prefix_groups[i + 1] : block_groups.front();
      prefix_maps.push_back(shaped(prefix_raw[i], prefix_groups[i], upper, "prefix " + std::to_string(i)));
    }
    for (std::size_t i = 0; i < block_raw.size(); ++i) {
      const FgAbGroup& upper = i + 1 < block_groups.size() ? block_groups[i + 1] : closing;
      block_maps.push_back(shaped(block_raw[i], block_groups[i], upper, "block " + std::to_string(i)));
    }
    try {
      return PeriodicChain(expected, std::move(prefix_groups), std::move(prefix_maps), std::move(block_groups),
                           std::move(block_maps), std::move(closing));
    } catch (const SemanticError& e) {
      throw SemanticError(std::string(e.what()) + where(head.line, head.column));
    }
  }

  static Tower as_tower(const PeriodicChain& c) {
    return Tower(c.prefix_groups(), c.prefix_maps(), c.block_groups(), c.block_maps(), c.closing_group());
  }
  static DirectedSystem as_system(const PeriodicChain& c) {
    return DirectedSystem(c.prefix_groups(), c.prefix_maps(), c.block_groups(), c.block_maps(), c.closing_group());
  }

  // ---- complexes and spaces ----------------------------------------------

  ChainComplex complex() {
    const Token head = peek();
    expect_word("complex");
    expect_symbol("{");
    std::map<std::size_t, std::size_t> cells;
    std::map<std::size_t, std::pair<RawMap, Token>> boundaries;
    while (!at_symbol("}")) {
      const Token at = peek();
      if (at_word("cells")) {
        next();
        const std::size_t n = natural("degree");
        expect_symbol(":");
        const std::size_t k = natural("cell count");
        if (!cells.emplace(n, k).second) semantic("cells " + std::to_string(n) + " given twice", at);
      } else if (at_word("boundary")) {
        next();
        const std::size_t n = natural("degree");
        expect_symbol(":");
        RawMap m = raw_map();
        if (m.kind == RawMap::Kind::Scalar) semantic("boundary maps are matrices or 0", at);
        if (!boundaries.emplace(n, std::make_pair(std::move(m), at)).second) {
          semantic("boundary " + std::to_string(n) + " given twice", at);
        }
      } else {
        fail("expected 'cells' or 'boundary'");
      }
      if (at_symbol(";")) next();
      else if (!at_symbol("}")) fail("expected ';' or '}'");
    }
    next();
    std::size_t top = 0;
    for (const auto& [n, _] : cells) top = std::max(top, n);
    std::vector<std::size_t> ranks(top + 1, 0);
    for (const auto& [n, k] : cells) ranks[n] = k;
    std::map<std::size_t, IntMatrix> maps;
    for (const auto& [n, entry] : boundaries) {
      const auto& [m, at] = entry;
      if (n == 0 || n > top) semantic("boundary " + std::to_string(n) + " has no cells on both sides", at);
      maps.emplace(n, resolve(m, ranks[n - 1], ranks[n], "boundary " + std::to_string(n)));
    }
    try {
      return ChainComplex::from_sparse(std::move(ranks), maps);
    } catch (const SemanticError& e) {
      throw SemanticError(std::string(e.what()) + where(head.line, head.column));
    }
  }

  Integer builder_integer() { return integer(); }

  SpaceDescription space() {
    const Token head = peek();
    if (head.kind != TokenKind::Word) fail("expected a space");
    const std::string name = head.text;
    if (name == "complex") {
      ChainComplex c = complex();
      std::string label = print(c);
      return finite_complex(std::move(c), std::move(label));
    }
    next();
    expect_symbol("(");
    SpaceDescription out = [&]() -> SpaceDescription {
      try {
        return builder(name, head);
      } catch (const SemanticError& e) {
        const std::string msg = e.what();
        if (msg.find(" at line ") != std::string::npos) throw;
        throw SemanticError(msg + where(head.line, head.column));
      }
    }();
    expect_symbol(")");
    return out;
  }

  SpaceDescription builder(const std::string& name, const Token& head) {
    if (name == "sphere") return sphere(natural("sphere dimension"));
    if (name == "moore3") return moore_3cell(integer());
    if (name == "lens") {
      const Integer n = integer();
      expect_symbol(",");
      return lens(n, natural("top degree"));
    }
    if (name == "lensinf") return lens_periodic(integer());
    if (name == "product") {
      SpaceDescription a = space();
      expect_symbol(",");
      SpaceDescription b = space();
      return product(a, b);
    }
    if (name == "wedge") {
      std::vector<SpaceDescription> parts{space()};
      while (at_symbol(",")) {
        next();
        parts.push_back(space());
      }
      return wedge(parts);
    }
    if (name == "infwedge") return infinite_wedge(space());
    if (name == "telescope") {
      if (at_word("system")) {
        DirectedSystem d = as_system(chain(ChainDirection::Directed));
        expect_symbol(",");
        const std::size_t deg = natural("degree");
        return telescope(d, deg, telescope_label(d, deg));
      }
      const FgAbGroup g = group();
      expect_symbol(",");
      const RawMap m = raw_map();
      std::size_t deg = 1;
      if (at_symbol(",")) {
        next();
        deg = natural("degree");
      }
      DirectedSystem d = DirectedSystem::constant(g, resolve(m, g.generator_count(), g.generator_count(), "of the telescope"));
      return telescope(d, deg, telescope_label(d, deg));
    }
    if (name == "bpgl") return bpgl(integer());
    if (name == "k") {
      if (at_word("Q")) {
        next();
        expect_symbol("/");
        expect_word("Z");
        expect_symbol(",");
        return eilenberg_maclane_qz(natural("degree"));
      }
      const FgAbGroup g = group();
      expect_symbol(",");
      return eilenberg_maclane(g, natural("degree"));
    }
    if (name == "bg") return classifying_space(torsion_group());
    throw ParseError("unknown space builder '" + name + "'", head.line, head.column);
  }

  // ---- descriptors -------------------------------------------------------

  Affine affine() {
    Affine out;
    bool negative = false;
    if (at_symbol("-")) {
      next();
      negative = true;
    }
    affine_term(out, negative);
    while (at_symbol("+") || at_symbol("-")) {
      negative = next().text == "-";
      affine_term(out, negative);
    }
    return out;
  }

  void affine_term(Affine& acc, bool negative) {
    Integer coeff = 1;
    bool has_coeff = false;
    if (at_integer()) {
      coeff = Integer(next().text);
      has_coeff = true;
      if (at_symbol("*")) {
        next();
        if (!at_word("i")) fail("expected 'i' after '*'");
      }
    }
    if (negative) coeff = -coeff;
    if (at_word("i")) {
      next();
      acc.a += coeff;
    } else if (has_coeff) {
      acc.b += coeff;
    } else {
      fail("expected integer or 'i'");
    }
  }

  ObstructionRule rule() {
    expect_word("rule");
    ObstructionRule r;
    if (at_word("i")) {
      next();
      expect_symbol(">=");
      r.lo = integer();
    } else {
      r.lo = integer();
      expect_symbol("<=");
      expect_word("i");
      expect_symbol("<=");
      r.hi = integer();
    }
    expect_symbol(":");
    expect_word("J");
    expect_symbol("=");
    expect_symbol("(");
    r.lower = affine();
    expect_symbol(",");
    if (at_word("inf")) {
      next();
      expect_symbol(")");
    } else {
      r.upper = affine();
      expect_symbol("]");
    }
    return r;
  }

  ObstructionDescriptor descriptor() {
    const Token head = peek();
    if (at_word("none")) {
      next();
      return ObstructionDescriptor();
    }
    std::vector<ObstructionRule> rules{rule()};
    while (at_symbol(";")) {
      next();
      rules.push_back(rule());
    }
    try {
      return ObstructionDescriptor(std::move(rules));
    } catch (const SemanticError& e) {
      throw SemanticError(std::string(e.what()) + where(head.line, head.column));
    }
  }

  // ---- requests ----------------------------------------------------------

  Request request() {
    const Token head = peek();
    if (head.kind != TokenKind::Word) fail("expected a command");
    const auto cmd = command_from_name(head.text);
    if (!cmd) throw ParseError("unknown command '" + head.text + "'", head.line, head.column);
    next();
    Request r;
    r.command = *cmd;
    switch (*cmd) {
      case Command::Homology:
      case Command::Uct:
      case Command::Phantom:
        r.subject = space();
        r.degree = natural("degree");
        break;
      case Command::Cohomology:
        r.subject = space();
        r.degree = natural("degree");
        if (at_word("mod")) {
          next();
          r.modulus = modulus();
        }
        break;
      case Command::Bockstein:
        r.subject = space();
        r.degree = natural("degree");
        expect_word("mod");
        r.modulus = modulus();
        break;
      case Command::Brauer:
        r.subject = space();
        break;
      case Command::Certify:
        r.subject = space();
        if (at_word("order")) {
          next();
          const Token at = peek();
          r.order = integer();
          if (*r.order < 1) semantic("class order must be at least 1", at);
        }
        break;
      case Command::Lim1:
        r.subject = as_tower(chain(ChainDirection::Tower));
        break;
      case Command::ProfileBrauer:
        r.subject = profile();
        break;
      case Command::NonBrauerCheck:
        r.subject = profile();
        expect_word("with");
        r.descriptor = descriptor();
        break;
      case Command::Catalog:
        if (at_word("plus") && peek(1).kind == TokenKind::End) {
          next();
          r.subject = CatalogFact{"plus"};
        } else if (!at_end()) {
          r.subject = space();
        }
        break;
      case Command::Reproduce:
        break;
    }
    expect_end();
    return r;
  }

  Integer modulus() {
    const Token at = peek();
    Integer m = integer();
    if (m < 2) semantic("modulus must be at least 2, got " + m.get_str(), at);
    return m;
  }

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

template <typename F>
auto whole(std::string_view text, F&& f) {
  Parser p(text, 1);
  auto out = f(p);
  p.expect_end();
  return out;
}

}  // namespace

Request parse_request(std::string_view text, std::size_t line) {
  Parser p(text, line);
  return p.request();
}

FgAbGroup parse_group(std::string_view text) {
  return whole(text, [](Parser& p) { return p.group(); });
}
CyclicProfile parse_profile(std::string_view text) {
  return whole(text, [](Parser& p) { return p.profile(); });
}
IntMatrix parse_matrix(std::string_view text) {
  return whole(text, [](Parser& p) { return p.matrix(); });
}
ChainComplex parse_complex(std::string_view text) {
  return whole(text, [](Parser& p) { return p.complex(); });
}
SpaceDescription parse_space(std::string_view text) {
  return whole(text, [](Parser& p) { return p.space(); });
}
Tower parse_tower(std::string_view text) {
  return whole(text, [](Parser& p) { return Parser::as_tower(p.chain(ChainDirection::Tower)); });
}
DirectedSystem parse_system(std::string_view text) {
  return whole(text, [](Parser& p) { return Parser::as_system(p.chain(ChainDirection::Directed)); });
}
SymbolicTorsionGroup parse_torsion_group(std::string_view text) {
  return whole(text, [](Parser& p) { return p.torsion_group(); });
}
ObstructionDescriptor parse_descriptor(std::string_view text) {
  return whole(text, [](Parser& p) { return p.descriptor(); });
}
Affine parse_affine(std::string_view text) {
  return whole(text, [](Parser& p) { return p.affine(); });
}

}  // namespace brauer::cli
