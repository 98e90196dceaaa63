#include "suplogic/syntax.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace suplogic {

namespace {

enum class Tok {
  Ident,
  True,
  False,
  O,
  Box,
  Delta,
  Sup,
  SupSet,
  D,
  CO,
  CSup,
  LParen,
  RParen,
  Comma,
  Semi,
  Tilde,
  Amp,
  Bar,
  Arrow,    // ->
  DArrow,   // <->
  SupOp,    // <|
  SImpOp,   // ~>
  End,
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t line, column;
};

class Lexer {
public:
  explicit Lexer(const std::string& src) : src_(src) {}

  Token next() {
    skip_space();
    std::size_t line = line_, col = col_;
    if (pos_ >= src_.size()) return {Tok::End, "", line, col};
    char c = src_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c))) return word(line, col);
    advance();
    switch (c) {
      case '(': return {Tok::LParen, "(", line, col};
      case ')': return {Tok::RParen, ")", line, col};
      case ',': return {Tok::Comma, ",", line, col};
      case ';': return {Tok::Semi, ";", line, col};
      case '&': return {Tok::Amp, "&", line, col};
      case '|': return {Tok::Bar, "|", line, col};
      case '~':
        if (peek() == '>') {
          advance();
          return {Tok::SImpOp, "~>", line, col};
        }
        return {Tok::Tilde, "~", line, col};
      case '-':
        if (peek() == '>') {
          advance();
          return {Tok::Arrow, "->", line, col};
        }
        throw SourceError(line, col, "expected '->'");
      case '<':
        if (peek() == '|') {
          advance();
          return {Tok::SupOp, "<|", line, col};
        }
        if (peek() == '-') {
          advance();
          if (peek() == '>') {
            advance();
            return {Tok::DArrow, "<->", line, col};
          }
          throw SourceError(line, col, "expected '<->'");
        }
        throw SourceError(line, col, "expected '<|' or '<->'");
      default:
        throw SourceError(line, col,
                          std::string("unexpected character '") + c + "'");
    }
  }

private:
  char peek() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }

  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_space() {
    while (pos_ < src_.size() &&
           std::isspace(static_cast<unsigned char>(src_[pos_])))
      advance();
  }

  Token word(std::size_t line, std::size_t col) {
    std::string w;
    while (pos_ < src_.size() &&
           (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
            src_[pos_] == '_')) {
      w += src_[pos_];
      advance();
    }
    if (std::isupper(static_cast<unsigned char>(w[0]))) {
      if (w == "O") return {Tok::O, w, line, col};
      if (w == "Box") return {Tok::Box, w, line, col};
      if (w == "Delta") return {Tok::Delta, w, line, col};
      if (w == "Sup") return {Tok::Sup, w, line, col};
      if (w == "SupSet") return {Tok::SupSet, w, line, col};
      if (w == "D") return {Tok::D, w, line, col};
      if (w == "CO") return {Tok::CO, w, line, col};
      if (w == "CSup") return {Tok::CSup, w, line, col};
      throw SourceError(line, col, "unknown keyword '" + w + "'");
    }
    for (char ch : w)
      if (std::isupper(static_cast<unsigned char>(ch)))
        throw SourceError(line, col, "atoms are lowercase: '" + w + "'");
    if (w == "true") return {Tok::True, w, line, col};
    if (w == "false") return {Tok::False, w, line, col};
    return {Tok::Ident, w, line, col};
  }

  const std::string& src_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1, col_ = 1;
};

class Parser {
public:
  explicit Parser(const std::string& src) : lexer_(src) { cur_ = lexer_.next(); }

  Formula parse() {
    Formula f = level0();
    expect(Tok::End, "end of input");
    return f;
  }

private:
  [[noreturn]] void fail(const std::string& what) {
    throw SourceError(cur_.line, cur_.column,
                      "expected " + what + ", got '" +
                          (cur_.kind == Tok::End ? "end of input" : cur_.text) +
                          "'");
  }

  void bump() { cur_ = lexer_.next(); }

  void expect(Tok kind, const std::string& what) {
    if (cur_.kind != kind) fail(what);
    bump();
  }

  Formula level0() {
    Formula a = level1();
    if (cur_.kind == Tok::SupOp || cur_.kind == Tok::SImpOp) {
      Tok op = cur_.kind;
      bump();
      Formula b = level1();
      if (cur_.kind == Tok::SupOp || cur_.kind == Tok::SImpOp)
        throw SourceError(cur_.line, cur_.column,
                          "'<|' and '~>' are non-associative; parenthesize");
      return op == Tok::SupOp ? Formula::sup({a}, b)
                              : Formula::strict_imp(a, b);
    }
    return a;
  }

  Formula level1() {
    Formula a = level2();
    while (cur_.kind == Tok::DArrow) {
      bump();
      a = Formula::iff(a, level2());
    }
    return a;
  }

  Formula level2() {
    Formula a = level3();
    if (cur_.kind == Tok::Arrow) {
      bump();
      return Formula::imp(a, level2());
    }
    return a;
  }

  Formula level3() {
    Formula a = level4();
    while (cur_.kind == Tok::Bar) {
      bump();
      a = Formula::disj(a, level4());
    }
    return a;
  }

  Formula level4() {
    Formula a = prefix();
    while (cur_.kind == Tok::Amp) {
      bump();
      a = Formula::conj(a, prefix());
    }
    return a;
  }

  Formula prefix() {
    switch (cur_.kind) {
      case Tok::Tilde:
        bump();
        return Formula::neg(prefix());
      case Tok::O:
        bump();
        return Formula::agree(prefix());
      case Tok::Box:
        bump();
        return Formula::box(prefix());
      case Tok::Delta:
        bump();
        return Formula::delta(prefix());
      default:
        return primary();
    }
  }

  Formula primary() {
    switch (cur_.kind) {
      case Tok::Ident: {
        Formula f = Formula::atom(cur_.text);
        bump();
        return f;
      }
      case Tok::True:
        bump();
        return Formula::top();
      case Tok::False:
        bump();
        return Formula::bot();
      case Tok::LParen: {
        bump();
        Formula f = level0();
        expect(Tok::RParen, "')'");
        return f;
      }
      case Tok::Sup: {
        bump();
        expect(Tok::LParen, "'('");
        std::vector<Formula> ants = formula_list();
        expect(Tok::Semi, "';'");
        Formula cons = level0();
        expect(Tok::RParen, "')'");
        return Formula::sup(std::move(ants), cons);
      }
      case Tok::SupSet: {
        bump();
        expect(Tok::LParen, "'('");
        std::vector<Formula> ants = formula_list();
        expect(Tok::Semi, "';'");
        std::vector<Formula> cons = formula_list();
        expect(Tok::RParen, "')'");
        return Formula::supset(std::move(ants), std::move(cons));
      }
      case Tok::D: {
        bump();
        expect(Tok::LParen, "'('");
        std::vector<Formula> ants = formula_list();
        expect(Tok::Semi, "';'");
        Formula cons = level0();
        expect(Tok::RParen, "')'");
        return Formula::det(std::move(ants), cons);
      }
      case Tok::CO: {
        bump();
        expect(Tok::LParen, "'('");
        Formula cond = level0();
        expect(Tok::Semi, "';'");
        Formula body = level0();
        expect(Tok::RParen, "')'");
        return Formula::cond_agree(cond, body);
      }
      case Tok::CSup: {
        bump();
        expect(Tok::LParen, "'('");
        Formula cond = level0();
        expect(Tok::Semi, "';'");
        Formula ant = level0();
        expect(Tok::Semi, "';'");
        Formula cons = level0();
        expect(Tok::RParen, "')'");
        return Formula::cond_sup(cond, ant, cons);
      }
      default:
        fail("a formula");
    }
  }

  // Possibly empty comma-separated list, ending at ';' or ')'.
  std::vector<Formula> formula_list() {
    std::vector<Formula> fs;
    if (cur_.kind == Tok::Semi || cur_.kind == Tok::RParen) return fs;
    fs.push_back(level0());
    while (cur_.kind == Tok::Comma) {
      bump();
      fs.push_back(level0());
    }
    return fs;
  }

  Lexer lexer_;
  Token cur_;
};

// Binding levels for the printer; children printed at a level tighter than
// their own get parenthesized.
int print_level(const Formula& f) {
  switch (f.op()) {
    case Op::StrictImp: return 0;
    case Op::Iff: return 1;
    case Op::Imp: return 2;
    case Op::Or: return 3;
    case Op::And: return 4;
    case Op::Not:
    case Op::Agree:
    case Op::Box:
    case Op::Delta: return 5;
    default: return 6;  // atoms, constants, call forms
  }
}

void print_to(const Formula& f, int min_level, std::string& out);

void print_list(std::span<const Formula> fs, std::string& out) {
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (i) out += ", ";
    print_to(fs[i], 0, out);
  }
}

void print_raw(const Formula& f, std::string& out) {
  switch (f.op()) {
    case Op::Atom:
      out += f.atom_name();
      return;
    case Op::Top:
      out += "true";
      return;
    case Op::Bot:
      out += "false";
      return;
    case Op::Not:
      out += "~";
      print_to(f.child(), 5, out);
      return;
    case Op::Agree:
      out += "O ";
      print_to(f.child(), 5, out);
      return;
    case Op::Box:
      out += "Box ";
      print_to(f.child(), 5, out);
      return;
    case Op::Delta:
      out += "Delta ";
      print_to(f.child(), 5, out);
      return;
    case Op::And:
      print_to(f.left(), 4, out);
      out += " & ";
      print_to(f.right(), 5, out);
      return;
    case Op::Or:
      print_to(f.left(), 3, out);
      out += " | ";
      print_to(f.right(), 4, out);
      return;
    case Op::Imp:
      print_to(f.left(), 3, out);
      out += " -> ";
      print_to(f.right(), 2, out);
      return;
    case Op::Iff:
      print_to(f.left(), 1, out);
      out += " <-> ";
      print_to(f.right(), 2, out);
      return;
    case Op::StrictImp:
      print_to(f.left(), 1, out);
      out += " ~> ";
      print_to(f.right(), 1, out);
      return;
    case Op::Sup:
      out += "Sup(";
      print_list(f.ants(), out);
      out += "; ";
      print_to(f.cons(), 0, out);
      out += ")";
      return;
    case Op::SupSet:
      out += "SupSet(";
      print_list(f.ants(), out);
      out += ";";
      if (!f.cons_list().empty()) {
        out += " ";
        print_list(f.cons_list(), out);
      }
      out += ")";
      return;
    case Op::Det:
      out += "D(";
      print_list(f.ants(), out);
      out += "; ";
      print_to(f.cons(), 0, out);
      out += ")";
      return;
    case Op::CondAgree:
      out += "CO(";
      print_to(f.cond(), 0, out);
      out += "; ";
      print_to(f.body(), 0, out);
      out += ")";
      return;
    case Op::CondSup:
      out += "CSup(";
      print_to(f.cond(), 0, out);
      out += "; ";
      print_to(f.cond_ant(), 0, out);
      out += "; ";
      print_to(f.cond_cons(), 0, out);
      out += ")";
      return;
  }
  throw std::logic_error("unreachable formula op");
}

void print_to(const Formula& f, int min_level, std::string& out) {
  if (print_level(f) < min_level) {
    out += "(";
    print_raw(f, out);
    out += ")";
  } else {
    print_raw(f, out);
  }
}

std::vector<std::string> mask_to_world_names(const GeneralizedModel& m,
                                             WorldMask mask) {
  std::vector<std::string> names;
  for (int w = 0; w < m.world_count(); ++w)
    if ((mask >> w) & 1) names.push_back(m.world_name(w));
  return names;
}

std::pair<std::size_t, std::size_t> line_col_of_offset(const std::string& text,
                                                       std::size_t offset) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

}  // namespace

Formula parse_formula(const std::string& text) {
  return Parser(text).parse();
}

std::string print_formula(const Formula& f) {
  std::string out;
  print_to(f, 0, out);
  return out;
}

GeneralizedModel parse_model(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    auto [line, col] = line_col_of_offset(text, e.byte ? e.byte - 1 : 0);
    throw SourceError(line, col, e.what());
  }
  if (!j.is_object()) throw ModelError("model file must be a JSON object");
  if (!j.contains("worlds") || !j["worlds"].is_array())
    throw ModelError("model file needs a \"worlds\" array");

  std::vector<std::string> worlds;
  for (const auto& w : j["worlds"]) {
    if (!w.is_string()) throw ModelError("world names must be strings");
    worlds.push_back(w.get<std::string>());
  }

  GeneralizedModel::ValuationByName valuation;
  if (j.contains("valuation")) {
    if (!j["valuation"].is_object())
      throw ModelError("\"valuation\" must map atoms to world arrays");
    for (const auto& [atom, members] : j["valuation"].items()) {
      try {
        Formula parsed = parse_formula(atom);
        if (parsed.op() != Op::Atom) throw SourceError(1, 1, "not an atom");
      } catch (const SourceError&) {
        throw ModelError("invalid atom name: " + atom);
      }
      auto& list = valuation[atom];
      for (const auto& w : members) list.push_back(w.get<std::string>());
    }
  }

  bool universal = j.value("universal", false);
  std::optional<GeneralizedModel::TernaryByName> ternary;
  if (j.contains("ternary")) {
    ternary.emplace();
    for (const auto& [w, pairs] : j["ternary"].items()) {
      auto& list = (*ternary)[w];
      for (const auto& p : pairs) {
        if (!p.is_array() || p.size() != 2)
          throw ModelError("ternary entries must be [u, v] pairs");
        list.emplace_back(p[0].get<std::string>(), p[1].get<std::string>());
      }
    }
  }
  std::optional<GeneralizedModel::BinaryByName> binary;
  if (j.contains("binary")) {
    binary.emplace();
    for (const auto& [w, succs] : j["binary"].items()) {
      auto& list = (*binary)[w];
      for (const auto& u : succs) list.push_back(u.get<std::string>());
    }
  }

  if (!ternary && !binary && !universal)
    throw ModelError(
        "model file needs at least one of ternary/binary/universal");
  if (universal && binary)
    throw ModelError("\"universal\" conflicts with an explicit binary map");

  if (universal) {
    GeneralizedModel base = universal_model(worlds, valuation);
    if (!ternary) return base;
    // Keep the explicit ternary relation, add the universal binary one.
    GeneralizedModel::BinaryByName bin;
    for (const auto& w : worlds) bin[w] = worlds;
    return GeneralizedModel(worlds, std::move(ternary), std::move(bin),
                            valuation);
  }
  return GeneralizedModel(std::move(worlds), std::move(ternary),
                          std::move(binary), valuation);
}

Derivation parse_derivation(const std::string& text) {
  Derivation d;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;

    std::size_t dot = line.find('.');
    if (dot == std::string::npos)
      throw SourceError(lineno, first + 1, "expected '<index>.'");
    int index = 0;
    try {
      std::size_t used = 0;
      index = std::stoi(line.substr(first, dot - first), &used);
      if (first + used != dot)
        throw SourceError(lineno, first + 1, "bad line index");
    } catch (const std::exception&) {
      throw SourceError(lineno, first + 1, "bad line index");
    }

    std::size_t jpos = line.find(";;", dot);
    if (jpos == std::string::npos)
      throw SourceError(lineno, line.size() + 1,
                        "missing ';; <justification>'");
    std::string ftext = line.substr(dot + 1, jpos - dot - 1);
    Formula f;
    try {
      f = parse_formula(ftext);
    } catch (const SourceError& e) {
      throw SourceError(lineno, dot + 1 + e.column(), e.message());
    }

    std::istringstream js(line.substr(jpos + 2));
    std::string word;
    if (!(js >> word))
      throw SourceError(lineno, jpos + 3, "missing justification");
    Justification just{};
    auto read_ref = [&](int& ref) {
      if (!(js >> ref))
        throw SourceError(lineno, jpos + 3, "justification needs a line index");
    };
    if (word == "axiom") {
      just.kind = Justification::Kind::Axiom;
      if (!(js >> just.axiom))
        throw SourceError(lineno, jpos + 3, "axiom justification needs a name");
    } else if (word == "mp") {
      just.kind = Justification::Kind::MP;
      read_ref(just.ref1);
      read_ref(just.ref2);
    } else if (word == "gen") {
      just.kind = Justification::Kind::Gen;
      read_ref(just.ref1);
    } else if (word == "nec-o") {
      just.kind = Justification::Kind::NecO;
      read_ref(just.ref1);
    } else if (word == "rekw") {
      just.kind = Justification::Kind::ReKw;
      read_ref(just.ref1);
    } else {
      throw SourceError(lineno, jpos + 3, "unknown justification '" + word + "'");
    }
    std::string extra;
    if (js >> extra)
      throw SourceError(lineno, jpos + 3,
                        "trailing input after justification: '" + extra + "'");
    d.lines.push_back({index, f, just});
  }
  return d;
}

std::string model_to_json(const GeneralizedModel& m) {
  nlohmann::json j;
  j["worlds"] = m.worlds();
  nlohmann::json val = nlohmann::json::object();
  for (const auto& [atom, mask] : m.valuation())
    val[atom] = mask_to_world_names(m, mask);
  j["valuation"] = val;
  int k = m.world_count();
  if (m.has_ternary()) {
    nlohmann::json tern = nlohmann::json::object();
    for (int w = 0; w < k; ++w) {
      nlohmann::json pairs = nlohmann::json::array();
      for (int u = 0; u < k; ++u)
        for (int v = 0; v < k; ++v)
          if ((m.ternary_row(w, u) >> v) & 1)
            pairs.push_back({m.world_name(u), m.world_name(v)});
      if (!pairs.empty()) tern[m.world_name(w)] = pairs;
    }
    j["ternary"] = tern;
  }
  if (m.has_binary()) {
    nlohmann::json bin = nlohmann::json::object();
    for (int w = 0; w < k; ++w) {
      WorldMask succs = m.binary_successors(w);
      if (succs) bin[m.world_name(w)] = mask_to_world_names(m, succs);
    }
    j["binary"] = bin;
  }
  return j.dump(2);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

GeneralizedModel load_model(const std::string& path) {
  return parse_model(read_file(path));
}

Derivation load_derivation(const std::string& path) {
  return parse_derivation(read_file(path));
}

}  // namespace suplogic
