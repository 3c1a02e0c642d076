#include <cctype>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "conprove/syntax/tptp.hpp"

namespace conprove {

SyntaxError::SyntaxError(std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                         message),
      line_(line),
      column_(column) {}

namespace {

enum class Tok { LowerWord, UpperWord, Quoted, Distinct, Number, DollarWord, Punct, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  std::size_t line = 1;
  std::size_t column = 1;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) { advance(); }

  const Token& peek() const { return current_; }

  Token next() {
    Token t = current_;
    advance();
    return t;
  }

 private:
  char at(std::size_t k = 0) const { return pos_ + k < src_.size() ? src_[pos_ + k] : '\0'; }

  void bump() {
    if (at() == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void skip_space() {
    for (;;) {
      if (std::isspace(static_cast<unsigned char>(at()))) {
        bump();
      } else if (at() == '%') {
        while (at() != '\n' && at() != '\0') bump();
      } else if (at() == '/' && at(1) == '*') {
        const auto line = line_, column = column_;
        bump();
        bump();
        while (!(at() == '*' && at(1) == '/')) {
          if (at() == '\0') throw SyntaxError(line, column, "unterminated comment");
          bump();
        }
        bump();
        bump();
      } else {
        return;
      }
    }
  }

  static bool word_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

  void advance() {
    skip_space();
    current_ = Token{};
    current_.line = line_;
    current_.column = column_;
    const char c = at();
    if (c == '\0') {
      current_.kind = Tok::End;
      return;
    }
    std::string text;
    if (std::islower(static_cast<unsigned char>(c)) || std::isupper(static_cast<unsigned char>(c))) {
      current_.kind = std::islower(static_cast<unsigned char>(c)) ? Tok::LowerWord : Tok::UpperWord;
      while (word_char(at())) {
        text += at();
        bump();
      }
    } else if (c == '$') {
      current_.kind = Tok::DollarWord;
      text += c;
      bump();
      if (at() == '$') {
        text += '$';
        bump();
      }
      while (word_char(at())) {
        text += at();
        bump();
      }
    } else if (std::isdigit(static_cast<unsigned char>(c)) ||
               ((c == '-' || c == '+') && std::isdigit(static_cast<unsigned char>(at(1))))) {
      current_.kind = Tok::Number;
      text += c;
      bump();
      while (std::isalnum(static_cast<unsigned char>(at())) || at() == '.' || at() == '/' ||
             ((at() == '-' || at() == '+') && (text.back() == 'e' || text.back() == 'E'))) {
        // Stop before a clause-terminating period.
        if (at() == '.' && !std::isdigit(static_cast<unsigned char>(at(1)))) break;
        text += at();
        bump();
      }
    } else if (c == '\'' || c == '"') {
      current_.kind = c == '\'' ? Tok::Quoted : Tok::Distinct;
      const auto line = line_, column = column_;
      bump();
      while (at() != c) {
        if (at() == '\0') throw SyntaxError(line, column, "unterminated quoted token");
        if (at() == '\\') {
          bump();
          if (at() == '\0') throw SyntaxError(line, column, "unterminated quoted token");
        }
        text += at();
        bump();
      }
      bump();
    } else {
      current_.kind = Tok::Punct;
      static const char* const kOps[] = {"<=>", "<~>", "=>", "<=", "~|", "~&", "!=", "(", ")", "[",
                                          "]",   ",",   ".",  ":",  "!",  "?",  "~",  "&",  "|", "="};
      for (const char* op : kOps) {
        const std::string_view sv(op);
        if (src_.substr(pos_, sv.size()) == sv) {
          text = sv;
          for (std::size_t i = 0; i < sv.size(); ++i) bump();
          current_.text = text;
          return;
        }
      }
      throw SyntaxError(line_, column_, std::string("unexpected character '") + c + "'");
    }
    current_.text = std::move(text);
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
  Token current_;
};

class Parser {
 public:
  Parser(std::string_view text, Problem& problem, const ParseOptions& options, std::set<std::string>& active)
      : lex_(text), problem_(problem), options_(options), active_includes_(active) {}

  void parse_file() {
    while (lex_.peek().kind != Tok::End) {
      const Token head = expect_kind(Tok::LowerWord, "declaration keyword");
      if (head.text == "include") {
        parse_include();
      } else if (head.text == "cnf" || head.text == "fof") {
        parse_annotated(head.text == "cnf" ? Language::Cnf : Language::Fof);
      } else if (head.text == "thf" || head.text == "tff" || head.text == "tcf" || head.text == "tpi") {
        throw UnsupportedError(location(head) + "unsupported TPTP language '" + head.text + "'");
      } else {
        throw SyntaxError(head.line, head.column, "unknown declaration '" + head.text + "'");
      }
    }
  }

 private:
  static std::string location(const Token& t) {
    return "line " + std::to_string(t.line) + ", column " + std::to_string(t.column) + ": ";
  }

  [[noreturn]] void fail(const Token& t, const std::string& what) {
    if (t.kind == Tok::End) throw SyntaxError(t.line, t.column, "unexpected end of input, expected " + what);
    throw SyntaxError(t.line, t.column, "unexpected '" + t.text + "', expected " + what);
  }

  Token expect(std::string_view punct) {
    const Token& t = lex_.peek();
    if (t.kind != Tok::Punct || t.text != punct) fail(t, "'" + std::string(punct) + "'");
    return lex_.next();
  }

  Token expect_kind(Tok kind, const std::string& what) {
    if (lex_.peek().kind != kind) fail(lex_.peek(), what);
    return lex_.next();
  }

  bool at_punct(std::string_view punct) const {
    return lex_.peek().kind == Tok::Punct && lex_.peek().text == punct;
  }

  // Reports a missing ')' at the parenthesis it should close.
  void expect_close(const Token& open) {
    if (lex_.peek().kind == Tok::End) {
      throw SyntaxError(open.line, open.column, "unclosed '" + open.text + "'");
    }
    expect(open.text == "(" ? ")" : "]");
  }

  bool accept(std::string_view punct) {
    if (!at_punct(punct)) return false;
    lex_.next();
    return true;
  }

  void parse_include() {
    expect("(");
    const Token file = expect_kind(Tok::Quoted, "quoted file name");
    std::optional<std::set<std::string>> selection;
    if (accept(",")) {
      expect("[");
      selection.emplace();
      if (!at_punct("]")) {
        do {
          selection->insert(parse_name());
        } while (accept(","));
      }
      expect("]");
    }
    expect(")");
    expect(".");

    std::filesystem::path resolved;
    for (const auto& dir : {options_.include_dir, options_.base_dir}) {
      if (dir.empty()) continue;
      if (std::filesystem::exists(dir / file.text)) {
        resolved = dir / file.text;
        break;
      }
    }
    if (resolved.empty() && options_.include_dir.empty() && options_.base_dir.empty() &&
        std::filesystem::exists(file.text)) {
      resolved = file.text;
    }
    if (resolved.empty()) throw IncludeError(location(file) + "unresolved include '" + file.text + "'");
    const auto key = std::filesystem::weakly_canonical(resolved).string();
    if (active_includes_.count(key)) throw IncludeError(location(file) + "cyclic include '" + file.text + "'");

    std::ifstream in(resolved);
    if (!in) throw IncludeError(location(file) + "cannot read include '" + file.text + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    const std::string text = ss.str();

    Problem sub;
    sub.signature = problem_.signature;
    ParseOptions nested = options_;
    nested.base_dir = resolved.parent_path();
    active_includes_.insert(key);
    Parser inner(text, sub, nested, active_includes_);
    inner.parse_file();
    active_includes_.erase(key);
    problem_.signature = sub.signature;
    for (auto& d : sub.declarations) {
      if (!selection || selection->count(d.name)) problem_.declarations.push_back(std::move(d));
    }
  }

  std::string parse_name() {
    const Token& t = lex_.peek();
    if (t.kind == Tok::LowerWord || t.kind == Tok::Quoted || t.kind == Tok::Number || t.kind == Tok::UpperWord) {
      return lex_.next().text;
    }
    fail(t, "name");
  }

  void parse_annotated(Language lang) {
    const Token open = expect("(");
    Declaration decl;
    decl.language = lang;
    decl.name = parse_name();
    expect(",");
    decl.role = expect_kind(Tok::LowerWord, "formula role").text;
    expect(",");
    vars_.clear();
    scope_.clear();
    if (lang == Language::Cnf) {
      decl.clause = parse_cnf_formula();
      decl.clause.name = decl.name;
      decl.clause.origin = problem_.declarations.size();
      decl.clause.num_vars = static_cast<VarIndex>(vars_.size());
      decl.clause.var_names = vars_;
      if (decl.clause.literals.empty()) fail(lex_.peek(), "nonempty clause");
    } else {
      decl.formula = parse_fof_formula();
    }
    decl.var_names = vars_;
    // Source and useful-info annotations are skipped.
    while (accept(",")) skip_general_term();
    expect_close(open);
    expect(".");
    problem_.declarations.push_back(std::move(decl));
  }

  void skip_general_term() {
    int depth = 0;
    for (;;) {
      const Token& t = lex_.peek();
      if (t.kind == Tok::End) fail(t, "')'");
      if (t.kind == Tok::Punct) {
        if (t.text == "(" || t.text == "[") ++depth;
        if (t.text == ")" || t.text == "]") {
          if (depth == 0) return;
          --depth;
        }
        if (t.text == "," && depth == 0) return;
      }
      lex_.next();
    }
  }

  // ---- cnf ----

  Clause parse_cnf_formula() {
    Clause c;
    if (accept("(")) {
      c = parse_disjunction();
      expect(")");
    } else {
      c = parse_disjunction();
    }
    return c;
  }

  Clause parse_disjunction() {
    Clause c;
    do {
      if (accept("(")) {
        auto inner = parse_disjunction();
        expect(")");
        for (auto& l : inner.literals) c.literals.push_back(std::move(l));
      } else {
        c.literals.push_back(parse_cnf_literal());
      }
    } while (accept("|"));
    return c;
  }

  Literal parse_cnf_literal() {
    bool negated = false;
    while (accept("~")) negated = !negated;
    auto atom = parse_atom_cnf();
    if (!atom) fail(lex_.peek(), "literal");
    Literal l = std::move(*atom);
    if (negated) l.positive = !l.positive;
    return l;
  }

  std::optional<Literal> parse_atom_cnf() {
    const Token& t = lex_.peek();
    if (t.kind == Tok::DollarWord && (t.text == "$true" || t.text == "$false")) {
      throw UnsupportedError(location(t) + "$true/$false in cnf clause");
    }
    return parse_atomic(/*cnf=*/true);
  }

  VarIndex cnf_variable(const std::string& name) {
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (vars_[i] == name) return static_cast<VarIndex>(i);
    }
    vars_.push_back(name);
    return static_cast<VarIndex>(vars_.size() - 1);
  }

  // ---- shared atoms and terms ----

  std::optional<Literal> parse_atomic(bool cnf) {
    const Token& t = lex_.peek();
    if (t.kind == Tok::UpperWord || t.kind == Tok::Number || t.kind == Tok::Distinct) {
      // Only an equation can start with a non-predicate term.
      Term lhs = parse_term(cnf);
      return parse_equation_tail(std::move(lhs), cnf);
    }
    if (t.kind != Tok::LowerWord && t.kind != Tok::Quoted && t.kind != Tok::DollarWord) {
      return std::nullopt;
    }
    const Token head = lex_.next();
    std::vector<Term> args;
    if (at_punct("(")) {
      const Token open = lex_.next();
      do {
        args.push_back(parse_term(cnf));
      } while (accept(","));
      expect_close(open);
    }
    if (at_punct("=") || at_punct("!=")) {
      Term lhs = Term::apply(problem_.signature.intern(head.text), std::move(args));
      return parse_equation_tail(std::move(lhs), cnf);
    }
    if (head.kind == Tok::DollarWord && head.text != Signature::kTopName) {
      throw UnsupportedError(location(head) + "unsupported defined predicate '" + head.text + "'");
    }
    return Literal{true, problem_.signature.intern(head.text), std::move(args)};
  }

  Literal parse_equation_tail(Term lhs, bool cnf) {
    bool positive = true;
    if (accept("!=")) {
      positive = false;
    } else {
      expect("=");
    }
    Term rhs = parse_term(cnf);
    return Literal{positive, problem_.signature.intern("="), {std::move(lhs), std::move(rhs)}};
  }

  Term parse_term(bool cnf) {
    const Token t = lex_.peek();
    if (t.kind == Tok::UpperWord) {
      lex_.next();
      if (cnf) return Term::variable(cnf_variable(t.text));
      for (auto it = scope_.rbegin(); it != scope_.rend(); ++it) {
        if (it->first == t.text) return Term::variable(it->second);
      }
      throw SyntaxError(t.line, t.column, "free variable '" + t.text + "' in fof formula");
    }
    if (t.kind == Tok::LowerWord || t.kind == Tok::Quoted || t.kind == Tok::Number || t.kind == Tok::Distinct) {
      lex_.next();
      std::string name = t.kind == Tok::Distinct ? "\"" + t.text + "\"" : t.text;
      std::vector<Term> args;
      if (at_punct("(")) {
        const Token open = lex_.next();
        do {
          args.push_back(parse_term(cnf));
        } while (accept(","));
        expect_close(open);
      }
      return Term::apply(problem_.signature.intern(name), std::move(args));
    }
    if (t.kind == Tok::DollarWord) {
      throw UnsupportedError(location(t) + "unsupported defined term '" + t.text + "'");
    }
    fail(t, "term");
  }

  // ---- fof ----

  FormulaPtr parse_fof_formula() {
    FormulaPtr lhs = parse_unitary();
    const Token& t = lex_.peek();
    if (t.kind != Tok::Punct) return lhs;
    if (t.text == "&" || t.text == "|") {
      const std::string op = t.text;
      const auto kind = op == "&" ? FormulaKind::And : FormulaKind::Or;
      while (accept(op)) lhs = Formula::make_binary(kind, lhs, parse_unitary());
      if (at_punct("&") || at_punct("|")) fail(lex_.peek(), "parenthesized mix of '&' and '|'");
      return lhs;
    }
    if (t.text == "=>") {
      lex_.next();
      return Formula::make_binary(FormulaKind::Implies, lhs, parse_unitary());
    }
    if (t.text == "<=") {
      lex_.next();
      return Formula::make_binary(FormulaKind::Implies, parse_unitary(), lhs);
    }
    if (t.text == "<=>") {
      lex_.next();
      return Formula::make_binary(FormulaKind::Iff, lhs, parse_unitary());
    }
    if (t.text == "<~>") {
      lex_.next();
      return Formula::make_not(Formula::make_binary(FormulaKind::Iff, lhs, parse_unitary()));
    }
    if (t.text == "~|") {
      lex_.next();
      return Formula::make_not(Formula::make_binary(FormulaKind::Or, lhs, parse_unitary()));
    }
    if (t.text == "~&") {
      lex_.next();
      return Formula::make_not(Formula::make_binary(FormulaKind::And, lhs, parse_unitary()));
    }
    return lhs;
  }

  FormulaPtr parse_unitary() {
    const Token& t = lex_.peek();
    if (t.kind == Tok::Punct) {
      if (t.text == "(") {
        const Token open = lex_.next();
        auto f = parse_fof_formula();
        expect_close(open);
        return f;
      }
      if (t.text == "~") {
        lex_.next();
        return Formula::make_not(parse_unitary());
      }
      if (t.text == "!" || t.text == "?") {
        const auto kind = t.text == "!" ? FormulaKind::Forall : FormulaKind::Exists;
        lex_.next();
        expect("[");
        std::vector<VarIndex> bound;
        const auto saved = scope_.size();
        do {
          const Token v = expect_kind(Tok::UpperWord, "variable");
          vars_.push_back(v.text);
          const auto idx = static_cast<VarIndex>(vars_.size() - 1);
          bound.push_back(idx);
          scope_.emplace_back(v.text, idx);
        } while (accept(","));
        expect("]");
        expect(":");
        auto body = parse_unitary();
        scope_.resize(saved);
        return Formula::make_quantifier(kind, std::move(bound), std::move(body));
      }
    }
    if (t.kind == Tok::DollarWord && (t.text == "$true" || t.text == "$false")) {
      const bool value = lex_.next().text == "$true";
      return Formula::make_constant(value);
    }
    auto atom = parse_atomic(/*cnf=*/false);
    if (!atom) fail(lex_.peek(), "formula");
    if (!atom->positive) return Formula::make_not(Formula::make_atom(std::move(*atom)));
    return Formula::make_atom(std::move(*atom));
  }

  Lexer lex_;
  Problem& problem_;
  const ParseOptions& options_;
  std::set<std::string>& active_includes_;
  std::vector<std::string> vars_;
  std::vector<std::pair<std::string, VarIndex>> scope_;
};

}  // namespace

Problem parse_problem(std::string_view text, const ParseOptions& options) {
  Problem problem;
  std::set<std::string> active;
  Parser parser(text, problem, options, active);
  parser.parse_file();
  return problem;
}

Problem parse_problem_file(const std::filesystem::path& file, ParseOptions options) {
  std::ifstream in(file);
  if (!in) throw std::runtime_error("cannot read problem file '" + file.string() + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  if (options.base_dir.empty()) options.base_dir = file.parent_path();
  return parse_problem(ss.str(), options);
}

}  // namespace conprove
