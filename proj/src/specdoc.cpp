#include "mvstone/specdoc.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace mvstone {

namespace {

enum class Tok { kIdent, kInt, kSym, kSep, kEnd };

struct Token {
  Tok kind;
  std::string text;
  int line, col;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : s_(text) { run(); }
  const std::vector<Token>& tokens() const { return toks_; }

 private:
  void run() {
    int depth = 0;
    while (pos_ < s_.size()) {
      char c = s_[pos_];
      if (c == '#') {
        while (pos_ < s_.size() && s_[pos_] != '\n') advance();
        continue;
      }
      if (c == '\n') {
        if (depth == 0) sep();
        advance();
        continue;
      }
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
        continue;
      }
      if (c == ';') {
        if (depth == 0)
          sep();
        else
          sym(";");
        advance();
        continue;
      }
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        int l = line_, co = col_;
        std::string id;
        while (pos_ < s_.size() && ident_char()) {
          id += s_[pos_];
          advance();
        }
        toks_.push_back({Tok::kIdent, id, l, co});
        continue;
      }
      if (std::isdigit(static_cast<unsigned char>(c))) {
        int l = line_, co = col_;
        std::string n;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
          n += s_[pos_];
          advance();
        }
        toks_.push_back({Tok::kInt, n, l, co});
        continue;
      }
      if (c == '-' && pos_ + 1 < s_.size() && s_[pos_ + 1] == '>') {
        sym("->");
        advance();
        advance();
        continue;
      }
      if (c == '{' || c == '(') ++depth;
      if (c == '}' || c == ')') --depth;
      if (std::string("{}(),:=/^*").find(c) != std::string::npos) {
        sym(std::string(1, c));
        advance();
        continue;
      }
      throw ParseError("unexpected character '" + std::string(1, c) + "'", line_, col_);
    }
    sep();
    toks_.push_back({Tok::kEnd, "", line_, col_});
  }

  bool ident_char() {
    char c = s_[pos_];
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') return true;
    // '-' continues an identifier only when a letter follows (keeps '->').
    if (c == '-' && pos_ + 1 < s_.size() &&
        std::isalpha(static_cast<unsigned char>(s_[pos_ + 1])))
      return true;
    return false;
  }

  void sep() {
    if (!toks_.empty() && toks_.back().kind != Tok::kSep)
      toks_.push_back({Tok::kSep, "", line_, col_});
  }
  void sym(const std::string& t) { toks_.push_back({Tok::kSym, t, line_, col_}); }
  void advance() {
    if (s_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  const std::string& s_;
  size_t pos_ = 0;
  int line_ = 1, col_ = 1;
  std::vector<Token> toks_;
};

const std::set<std::string>& known_commands() {
  static const std::set<std::string> cmds = {
      "topology",       "hausdorff",        "compactness",
      "skeleton",       "clopen",           "maximal-ideals",
      "dualize-algebra", "dualize-space",   "roundtrip-algebra",
      "roundtrip-space", "square",          "cuts",
      "lcc",            "factorize",        "continuous",
      "boolen-convert", "boolen-roundtrip", "stone-n-dualize",
      "multiset",       "sn"};
  return cmds;
}

class Parser {
 public:
  explicit Parser(const std::string& text) : lex_(text) {}

  SpecDocument parse() {
    skip_seps();
    while (!at(Tok::kEnd)) {
      statement();
      skip_seps();
    }
    return std::move(doc_);
  }

 private:
  // -- token plumbing ------------------------------------------------------

  const Token& peek(size_t ahead = 0) const {
    size_t i = std::min(pos_ + ahead, lex_.tokens().size() - 1);
    return lex_.tokens()[i];
  }
  bool at(Tok k) const { return peek().kind == k; }
  bool at_sym(const std::string& s) const {
    return peek().kind == Tok::kSym && peek().text == s;
  }
  bool at_ident(const std::string& s) const {
    return peek().kind == Tok::kIdent && peek().text == s;
  }
  Token take() { return lex_.tokens()[pos_++]; }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, peek().line, peek().col);
  }
  Token expect(Tok k, const std::string& what) {
    if (!at(k)) fail("expected " + what);
    return take();
  }
  void expect_sym(const std::string& s) {
    if (!at_sym(s)) fail("expected '" + s + "'");
    take();
  }
  void expect_kw(const std::string& s) {
    if (!at_ident(s)) fail("expected '" + s + "'");
    take();
  }
  void skip_seps() {
    while (at(Tok::kSep)) take();
  }
  void end_statement() {
    if (at(Tok::kEnd)) return;
    if (!at(Tok::kSep)) fail("expected end of statement");
  }

  long long expect_int(const std::string& what) {
    Token t = expect(Tok::kInt, what);
    return std::stoll(t.text);
  }

  Rat expect_rational() {
    long long num = expect_int("a number");
    long long den = 1;
    if (at_sym("/")) {
      take();
      den = expect_int("a denominator");
    }
    return Rat(num, den);
  }

  // -- name registry -------------------------------------------------------

  void declare(const std::string& name, int line) {
    auto it = names_.find(name);
    if (it != names_.end())
      fail("duplicate name '" + name + "' (first declared at line " +
           std::to_string(it->second) + ")");
    names_[name] = line;
  }

  Signature signature_of(const std::string& name) {
    auto p = doc_.products.find(name);
    if (p != doc_.products.end()) return p->second;
    auto c = doc_.chains.find(name);
    if (c != doc_.chains.end()) return Signature({c->second.order});
    fail("unresolved chain or product '" + name + "'");
  }

  Chain chain_of(const std::string& name) {
    auto c = doc_.chains.find(name);
    if (c == doc_.chains.end()) fail("unresolved chain '" + name + "'");
    return c->second;
  }

  UniversePtr points_of(const std::string& name) {
    auto p = doc_.point_sets.find(name);
    if (p == doc_.point_sets.end()) fail("unresolved point set '" + name + "'");
    return p->second;
  }

  // -- grid conversion -----------------------------------------------------

  int grid_numerator(const Rat& v, int order, const Token& where) {
    long long scaled = v.num * (order - 1);
    if (v.num < 0 || scaled % v.den != 0 || scaled / v.den > order - 1)
      throw ParseError("value " + v.str() + " off the L" + std::to_string(order) +
                           " grid",
                       where.line, where.col);
    return static_cast<int>(scaled / v.den);
  }

  // -- statements ----------------------------------------------------------

  void statement() {
    Token head = expect(Tok::kIdent, "a declaration or check");
    const std::string& kw = head.text;
    try {
      if (kw == "chain") parse_chain();
      else if (kw == "product") parse_product();
      else if (kw == "points") parse_points();
      else if (kw == "algebra") parse_algebra();
      else if (kw == "subset") parse_subset();
      else if (kw == "map") parse_map();
      else if (kw == "topology") parse_topology();
      else if (kw == "metric") parse_metric();
      else if (kw == "boolen") parse_boolen();
      else if (kw == "check") parse_check();
      else throw ParseError("unknown statement '" + kw + "'", head.line, head.col);
    } catch (const ParseError&) {
      throw;
    } catch (const ResourceLimitError&) {
      throw;
    } catch (const MvError& e) {
      // Declaration materialization failures are document errors.
      throw ParseError(e.what(), head.line, head.col);
    }
    end_statement();
  }

  void parse_chain() {
    Token name = expect(Tok::kIdent, "a chain name like L3");
    if (name.text.size() < 2 || name.text[0] != 'L')
      throw ParseError("chain names are L<order>", name.line, name.col);
    for (size_t i = 1; i < name.text.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(name.text[i])))
        throw ParseError("chain names are L<order>", name.line, name.col);
    int order = std::stoi(name.text.substr(1));
    if (order < 2) throw ParseError("chain order must be >= 2", name.line, name.col);
    declare(name.text, name.line);
    doc_.chains.emplace(name.text, Chain(order));
  }

  void parse_product() {
    Token name = expect(Tok::kIdent, "a product name");
    expect_sym("=");
    std::vector<int> orders;
    for (;;) {
      Token f = expect(Tok::kIdent, "a chain name");
      orders.push_back(chain_of(f.text).order);
      if (at_ident("x")) {
        take();
        continue;
      }
      break;
    }
    declare(name.text, name.line);
    doc_.products.emplace(name.text, Signature(std::move(orders)));
  }

  void parse_points() {
    Token name = expect(Tok::kIdent, "a point-set name");
    expect_sym("=");
    expect_sym("{");
    std::vector<std::string> pts;
    while (!at_sym("}")) {
      pts.push_back(expect(Tok::kIdent, "a point name").text);
      if (at_sym(",")) take();
    }
    expect_sym("}");
    if (pts.empty()) fail("empty point set");
    declare(name.text, name.line);
    doc_.point_sets.emplace(name.text, make_universe(std::move(pts)));
  }

  MvElem parse_element(const Signature& sig) {
    MvElem e;
    if (sig.arity() == 1) {
      Token where = peek();
      Rat v = expect_rational();
      e.push_back(grid_numerator(v, sig.orders[0], where));
      return e;
    }
    expect_sym("(");
    for (size_t i = 0; i < sig.arity(); ++i) {
      Token where = peek();
      Rat v = expect_rational();
      e.push_back(grid_numerator(v, sig.orders[i], where));
      if (i + 1 < sig.arity()) expect_sym(",");
    }
    expect_sym(")");
    return e;
  }

  void parse_algebra() {
    Token name = expect(Tok::kIdent, "an algebra name");
    expect_sym("=");
    Token kind = expect(Tok::kIdent, "'gen' or 'full'");
    if (kind.text == "full") {
      Token sig_name = expect(Tok::kIdent, "a chain or product name");
      Signature sig = signature_of(sig_name.text);
      declare(name.text, name.line);
      doc_.algebras.emplace(
          name.text, std::make_shared<const MvAlgebra>(MvAlgebra::full_product(sig)));
      return;
    }
    if (kind.text != "gen")
      throw ParseError("expected 'gen' or 'full'", kind.line, kind.col);
    Token sig_name = expect(Tok::kIdent, "a chain or product name");
    Signature sig = signature_of(sig_name.text);
    expect_sym("{");
    std::vector<MvElem> gens;
    while (!at_sym("}")) {
      gens.push_back(parse_element(sig));
      if (at_sym(",")) take();
    }
    expect_sym("}");
    declare(name.text, name.line);
    doc_.algebras.emplace(
        name.text, std::make_shared<const MvAlgebra>(MvAlgebra::generate(sig, gens)));
  }

  void parse_subset() {
    Token name = expect(Tok::kIdent, "a subset name");
    expect_sym("=");
    expect_kw("over");
    UniversePtr uni = points_of(expect(Tok::kIdent, "a point set").text);
    expect_kw("on");
    Chain chain = chain_of(expect(Tok::kIdent, "a chain").text);
    expect_sym("{");
    std::vector<int> vals(uni->size(), -1);
    while (!at_sym("}")) {
      Token pt = expect(Tok::kIdent, "a point name");
      int idx = uni->index_of(pt.text);
      if (idx < 0) throw ParseError("unknown point '" + pt.text + "'", pt.line, pt.col);
      if (vals[idx] >= 0)
        throw ParseError("point '" + pt.text + "' assigned twice", pt.line, pt.col);
      expect_sym(":");
      Token where = peek();
      vals[idx] = grid_numerator(expect_rational(), chain.order, where);
      if (at_sym(",")) take();
    }
    expect_sym("}");
    for (size_t i = 0; i < vals.size(); ++i)
      if (vals[i] < 0)
        fail("point '" + uni->point(i) + "' has no value in subset '" + name.text + "'");
    declare(name.text, name.line);
    doc_.subsets.emplace(name.text, FuzzySubset(uni, chain, std::move(vals)));
  }

  void parse_map() {
    Token name = expect(Tok::kIdent, "a map name");
    expect_sym("=");
    UniversePtr src = points_of(expect(Tok::kIdent, "a source point set").text);
    expect_sym("->");
    UniversePtr tgt = points_of(expect(Tok::kIdent, "a target point set").text);
    expect_sym("{");
    std::vector<int> table(src->size(), -1);
    while (!at_sym("}")) {
      Token from = expect(Tok::kIdent, "a source point");
      int fi = src->index_of(from.text);
      if (fi < 0)
        throw ParseError("unknown point '" + from.text + "'", from.line, from.col);
      expect_sym(":");
      Token to = expect(Tok::kIdent, "a target point");
      int ti = tgt->index_of(to.text);
      if (ti < 0) throw ParseError("unknown point '" + to.text + "'", to.line, to.col);
      if (table[fi] >= 0)
        throw ParseError("point '" + from.text + "' mapped twice", from.line, from.col);
      table[fi] = ti;
      if (at_sym(",")) take();
    }
    expect_sym("}");
    for (size_t i = 0; i < table.size(); ++i)
      if (table[i] < 0) fail("point '" + src->point(i) + "' has no image");
    declare(name.text, name.line);
    doc_.maps.emplace(name.text, PointMap(src, tgt, std::move(table)));
  }

  void parse_topology() {
    Token name = expect(Tok::kIdent, "a topology name");
    expect_sym("=");
    Token kind = expect(Tok::kIdent, "'opens', 'base' or 'metric'");
    if (kind.text == "metric") {
      Token metric_name = expect(Tok::kIdent, "a metric name");
      auto it = doc_.metrics.find(metric_name.text);
      if (it == doc_.metrics.end())
        throw ParseError("unresolved metric '" + metric_name.text + "'",
                         metric_name.line, metric_name.col);
      expect_kw("on");
      Chain chain = chain_of(expect(Tok::kIdent, "a chain").text);
      expect_kw("radii");
      expect_sym("{");
      std::vector<Rat> radii;
      while (!at_sym("}")) {
        radii.push_back(expect_rational());
        if (at_sym(",")) take();
      }
      expect_sym("}");
      declare(name.text, name.line);
      MetricBallResult r = metric_ball_base(it->second, chain, radii);
      doc_.topologies.emplace(
          name.text, std::make_shared<const MvTopology>(std::move(r.closed_variant)));
      return;
    }
    if (kind.text != "opens" && kind.text != "base")
      throw ParseError("expected 'opens', 'base' or 'metric'", kind.line, kind.col);
    expect_kw("over");
    UniversePtr uni = points_of(expect(Tok::kIdent, "a point set").text);
    expect_kw("on");
    Chain chain = chain_of(expect(Tok::kIdent, "a chain").text);
    expect_sym("{");
    std::vector<FuzzySubset> members;
    while (!at_sym("}")) {
      Token ref = expect(Tok::kIdent, "a subset name");
      auto it = doc_.subsets.find(ref.text);
      if (it == doc_.subsets.end())
        throw ParseError("unresolved subset '" + ref.text + "'", ref.line, ref.col);
      const FuzzySubset& f = it->second;
      if (!same_universe(f.universe(), uni) || !(f.chain() == chain))
        throw ParseError("subset '" + ref.text + "' is not over this space", ref.line,
                         ref.col);
      members.push_back(f);
      if (at_sym(",")) take();
    }
    expect_sym("}");
    declare(name.text, name.line);
    if (kind.text == "base") {
      doc_.topologies.emplace(name.text, std::make_shared<const MvTopology>(
                                             generate_from_base(uni, chain, members)));
    } else {
      // Open lists always include 0 and 1.
      members.push_back(FuzzySubset::zero(uni, chain));
      members.push_back(FuzzySubset::one(uni, chain));
      doc_.topologies.emplace(name.text, std::make_shared<const MvTopology>(
                                             MvTopology(uni, chain, members)));
    }
  }

  void parse_metric() {
    Token name = expect(Tok::kIdent, "a metric name");
    expect_sym("=");
    expect_kw("over");
    UniversePtr uni = points_of(expect(Tok::kIdent, "a point set").text);
    expect_sym("{");
    size_t n = uni->size();
    std::vector<Rat> d(n * n, Rat(0, 1));
    std::vector<bool> seen(n * n, false);
    while (!at_sym("}")) {
      Token a = expect(Tok::kIdent, "a point name");
      Token b = expect(Tok::kIdent, "a point name");
      int ia = uni->index_of(a.text), ib = uni->index_of(b.text);
      if (ia < 0) throw ParseError("unknown point '" + a.text + "'", a.line, a.col);
      if (ib < 0) throw ParseError("unknown point '" + b.text + "'", b.line, b.col);
      if (ia == ib)
        throw ParseError("diagonal distances are fixed at 0", a.line, a.col);
      expect_sym(":");
      Rat v = expect_rational();
      if (seen[static_cast<size_t>(ia) * n + ib])
        throw ParseError("distance declared twice", a.line, a.col);
      seen[static_cast<size_t>(ia) * n + ib] = true;
      seen[static_cast<size_t>(ib) * n + ia] = true;
      d[static_cast<size_t>(ia) * n + ib] = v;
      d[static_cast<size_t>(ib) * n + ia] = v;
      if (at_sym(";")) take();
    }
    expect_sym("}");
    for (size_t i = 0; i < n; ++i)
      for (size_t j = i + 1; j < n; ++j)
        if (!seen[i * n + j])
          fail("missing distance between '" + uni->point(i) + "' and '" +
               uni->point(j) + "'");
    MetricTable m{uni, std::move(d)};
    validate_metric(m);
    declare(name.text, name.line);
    doc_.metrics.emplace(name.text, std::move(m));
  }

  void parse_boolen() {
    Token name = expect(Tok::kIdent, "a boolen name");
    expect_sym("=");
    expect_kw("atoms");
    int k = static_cast<int>(expect_int("an atom count"));
    expect_kw("n");
    int n = static_cast<int>(expect_int("the sequence parameter"));
    if (n < 2) fail("n must be >= 2");
    expect_kw("ideals");
    expect_sym("{");
    BooleanAlgebra alg(k);
    std::vector<uint32_t> gens;
    while (!at_sym("}")) {
      expect_sym("{");
      uint32_t gen = 0;
      while (!at_sym("}")) {
        Token at = peek();
        long long atom = expect_int("an atom index");
        if (atom < 1 || atom > k)
          throw ParseError("atom index out of range", at.line, at.col);
        gen |= uint32_t(1) << (atom - 1);
        if (at_sym(",")) take();
      }
      expect_sym("}");
      gens.push_back(gen);
      if (at_sym(";")) take();
    }
    expect_sym("}");
    BooleN bn{alg, n, std::move(gens)};
    ObjectVerdict v = validate_boole_n(bn);
    if (!v.pass) fail("invalid boolen object: " + v.reason);
    declare(name.text, name.line);
    doc_.boolens.emplace(name.text, std::move(bn));
  }

  // -- checks --------------------------------------------------------------

  void require_arg_count(const CheckStmt& c, size_t n) {
    if (c.args.size() != n)
      fail("command '" + c.command + "' takes " + std::to_string(n) + " argument(s)");
  }
  void require_algebra(const std::string& name) {
    if (!doc_.algebras.count(name)) fail("unresolved algebra '" + name + "'");
  }
  void require_topology(const std::string& name) {
    if (!doc_.topologies.count(name)) fail("unresolved topology '" + name + "'");
  }
  void require_boolen(const std::string& name) {
    if (!doc_.boolens.count(name)) fail("unresolved boolen object '" + name + "'");
  }

  std::string parse_sn_literal() {
    std::string lit = expect(Tok::kInt, "a supernatural literal").text;
    for (;;) {
      if (at_sym("^")) {
        take();
        lit += "^";
        if (at_ident("w")) {
          take();
          lit += "w";
        } else {
          lit += expect(Tok::kInt, "an exponent or w").text;
        }
        continue;
      }
      if (at_sym("*")) {
        take();
        lit += "*";
        lit += expect(Tok::kInt, "a prime").text;
        continue;
      }
      break;
    }
    parse_supernatural(lit);  // validate eagerly
    return lit;
  }

  void parse_check() {
    CheckStmt c;
    Token cmd = expect(Tok::kIdent, "a command");
    c.command = cmd.text;
    c.line = cmd.line;
    if (!known_commands().count(c.command))
      throw ParseError("unknown command '" + c.command + "'", cmd.line, cmd.col);
    if (c.command == "sn") {
      Token op = expect(Tok::kIdent, "an sn operation");
      if (op.text != "join" && op.text != "meet" && op.text != "leq" &&
          op.text != "member")
        throw ParseError("sn operations are join, meet, leq, member", op.line, op.col);
      c.args.push_back(op.text);
      c.args.push_back(parse_sn_literal());
      if (op.text == "member")
        c.args.push_back(std::to_string(expect_int("a natural number")));
      else
        c.args.push_back(parse_sn_literal());
    } else {
      while (at(Tok::kIdent)) c.args.push_back(take().text);
      validate_check(c);
    }
    doc_.checks.push_back(std::move(c));
  }

  void validate_check(const CheckStmt& c) {
    const std::string& k = c.command;
    if (k == "topology" || k == "hausdorff" || k == "compactness" ||
        k == "skeleton" || k == "clopen" || k == "dualize-space" ||
        k == "roundtrip-space") {
      require_arg_count(c, 1);
      require_topology(c.args[0]);
    } else if (k == "maximal-ideals" || k == "dualize-algebra" ||
               k == "roundtrip-algebra" || k == "square" || k == "cuts" ||
               k == "lcc" || k == "factorize" || k == "multiset") {
      require_arg_count(c, 1);
      require_algebra(c.args[0]);
    } else if (k == "continuous") {
      require_arg_count(c, 3);
      if (!doc_.maps.count(c.args[0])) fail("unresolved map '" + c.args[0] + "'");
      require_topology(c.args[1]);
      require_topology(c.args[2]);
      const PointMap& f = doc_.maps.at(c.args[0]);
      if (!same_universe(f.source(), doc_.topologies.at(c.args[1])->universe()) ||
          !same_universe(f.target(), doc_.topologies.at(c.args[2])->universe()))
        fail("map and topologies are over different point sets");
    } else if (k == "boolen-convert" || k == "boolen-roundtrip" ||
               k == "stone-n-dualize") {
      require_arg_count(c, 1);
      require_boolen(c.args[0]);
    }
  }

  Lexer lex_;
  size_t pos_ = 0;
  SpecDocument doc_;
  std::map<std::string, int> names_;
};

}  // namespace

SpecDocument parse_spec(const std::string& text) { return Parser(text).parse(); }

Supernatural parse_supernatural(const std::string& text) {
  std::map<long long, long long> exps;
  size_t pos = 0;
  auto read_int = [&]() -> long long {
    size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      ++pos;
    if (start == pos) throw InvalidArgumentError("bad supernatural literal: " + text);
    return std::stoll(text.substr(start, pos - start));
  };
  // Plain natural number: defer to factorization.
  if (text.find('^') == std::string::npos && text.find('*') == std::string::npos)
    return Supernatural::from_natural(read_int());
  for (;;) {
    long long p = read_int();
    long long e = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      if (pos < text.size() && text[pos] == 'w') {
        ++pos;
        e = Supernatural::omega;
      } else {
        e = read_int();
      }
    }
    if (!is_prime_number(p))
      throw InvalidArgumentError("supernatural base " + std::to_string(p) +
                                 " is not prime");
    if (exps.count(p))
      throw InvalidArgumentError("prime repeated in supernatural literal");
    exps[p] = e;
    if (pos == text.size()) break;
    if (text[pos] != '*')
      throw InvalidArgumentError("bad supernatural literal: " + text);
    ++pos;
  }
  return Supernatural::from_exponents(std::move(exps));
}

}  // namespace mvstone
