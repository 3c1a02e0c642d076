#include <cctype>
#include <sstream>

#include "conprove/syntax/tptp.hpp"

namespace conprove {

namespace {

bool is_lower_word(const std::string& s) {
  if (s.empty() || !std::islower(static_cast<unsigned char>(s[0]))) return false;
  for (char c : s) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

bool is_number(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  return i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]));
}

std::string symbol_text(const std::string& name) {
  if (is_lower_word(name) || is_number(name) || name.front() == '$' || name.front() == '"') return name;
  std::string out = "'";
  for (char c : name) {
    if (c == '\'' || c == '\\') out += '\\';
    out += c;
  }
  return out + "'";
}

std::string var_text(VarIndex v, const std::vector<std::string>& names) {
  if (v < names.size()) return names[v];
  return "X" + std::to_string(v);
}

void print_formula(std::ostream& os, const Signature& sig, const Formula& f, const std::vector<std::string>& names) {
  switch (f.kind) {
    case FormulaKind::True:
      os << "$true";
      return;
    case FormulaKind::False:
      os << "$false";
      return;
    case FormulaKind::Atom:
      os << print_literal(sig, f.atom, names);
      return;
    case FormulaKind::Not:
      os << "~ (";
      print_formula(os, sig, *f.children[0], names);
      os << ")";
      return;
    case FormulaKind::Forall:
    case FormulaKind::Exists: {
      os << (f.kind == FormulaKind::Forall ? "! [" : "? [");
      for (std::size_t i = 0; i < f.bound.size(); ++i) {
        if (i) os << ",";
        os << var_text(f.bound[i], names);
      }
      os << "] : (";
      print_formula(os, sig, *f.children[0], names);
      os << ")";
      return;
    }
    default: {
      const char* op = f.kind == FormulaKind::And       ? " & "
                       : f.kind == FormulaKind::Or      ? " | "
                       : f.kind == FormulaKind::Implies ? " => "
                                                        : " <=> ";
      os << "(";
      print_formula(os, sig, *f.children[0], names);
      os << ")" << op << "(";
      print_formula(os, sig, *f.children[1], names);
      os << ")";
      return;
    }
  }
}

}  // namespace

std::string print_term(const Signature& sig, const Term& t, const std::vector<std::string>& var_names) {
  if (t.is_var()) return var_text(t.var(), var_names);
  std::string out = symbol_text(sig.name(t.functor()));
  if (!t.args().empty()) {
    out += "(";
    for (std::size_t i = 0; i < t.args().size(); ++i) {
      if (i) out += ",";
      out += print_term(sig, t.args()[i], var_names);
    }
    out += ")";
  }
  return out;
}

std::string print_literal(const Signature& sig, const Literal& l, const std::vector<std::string>& var_names) {
  const std::string& pred = sig.name(l.predicate);
  if (pred == "=" && l.args.size() == 2) {
    return print_term(sig, l.args[0], var_names) + (l.positive ? " = " : " != ") +
           print_term(sig, l.args[1], var_names);
  }
  std::string out = l.positive ? "" : "~ ";
  out += symbol_text(pred);
  if (!l.args.empty()) {
    out += "(";
    for (std::size_t i = 0; i < l.args.size(); ++i) {
      if (i) out += ",";
      out += print_term(sig, l.args[i], var_names);
    }
    out += ")";
  }
  return out;
}

std::string print_problem(const Problem& problem) {
  std::ostringstream os;
  for (const auto& d : problem.declarations) {
    if (d.language == Language::Cnf) {
      os << "cnf(" << symbol_text(d.name) << ", " << d.role << ", (";
      for (std::size_t i = 0; i < d.clause.literals.size(); ++i) {
        if (i) os << " | ";
        os << print_literal(problem.signature, d.clause.literals[i], d.clause.var_names);
      }
      os << ")).\n";
    } else {
      os << "fof(" << symbol_text(d.name) << ", " << d.role << ", ";
      print_formula(os, problem.signature, *d.formula, d.var_names);
      os << ").\n";
    }
  }
  return os.str();
}

}  // namespace conprove
