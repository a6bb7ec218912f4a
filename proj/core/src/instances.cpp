#include "codisc/instances.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <unordered_map>

namespace codisc {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::string cur;
  for (char ch : text) {
    if (ch == '\n') {
      lines.push_back(cur);
      cur.clear();
    } else if (ch != '\r') {
      cur.push_back(ch);
    }
  }
  if (!cur.empty()) lines.push_back(cur);
  return lines;
}

}  // namespace

// ---------------------------------------------------------------- DIMACS ---

SatInstance parse_dimacs(const std::string& text) {
  SatInstance inst;
  auto lines = split_lines(text);
  bool saw_header = false;
  long declared_clauses = 0;
  std::vector<int> current;  // literals of the clause being read

  auto finish_clause = [&](int line_no) {
    std::vector<int> deduped;
    bool taut = false;
    for (int lit : current) {
      if (std::find(deduped.begin(), deduped.end(), lit) != deduped.end()) continue;
      if (std::find(deduped.begin(), deduped.end(), -lit) != deduped.end()) taut = true;
      deduped.push_back(lit);
    }
    (void)line_no;
    inst.clauses.push_back(std::move(deduped));
    inst.tautological.push_back(taut ? 1 : 0);
    current.clear();
  };

  for (size_t i = 0; i < lines.size(); ++i) {
    const int line_no = static_cast<int>(i) + 1;
    const std::string& line = lines[i];
    std::istringstream ss(line);
    std::string tok;
    if (!(ss >> tok)) continue;  // blank
    if (tok == "c") continue;
    if (tok.size() > 1 && tok[0] == 'c') continue;  // "c..." comment without space
    if (tok == "p") {
      if (saw_header) throw ParseError("duplicate DIMACS header", line_no);
      std::string fmt;
      long vars = -1, cls = -1;
      if (!(ss >> fmt >> vars >> cls) || fmt != "cnf" || vars < 0 || cls < 0)
        throw ParseError("malformed DIMACS header, expected `p cnf <vars> <clauses>`", line_no);
      inst.num_vars = static_cast<int>(vars);
      declared_clauses = cls;
      saw_header = true;
      continue;
    }
    if (!saw_header)
      throw ParseError("missing DIMACS header before clause data", line_no);
    // clause tokens; first token already consumed
    do {
      int lit = 0;
      auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), lit);
      if (ec != std::errc() || p != tok.data() + tok.size())
        throw ParseError("non-integer token `" + tok + "` in clause", line_no);
      if (lit == 0) {
        finish_clause(line_no);
      } else {
        if (std::abs(lit) > inst.num_vars)
          throw ParseError("literal " + std::to_string(lit) + " out of range (num_vars=" +
                               std::to_string(inst.num_vars) + ")",
                           line_no);
        current.push_back(lit);
      }
    } while (ss >> tok);
  }

  if (!saw_header) throw ParseError("missing DIMACS header", 0);
  if (!current.empty()) finish_clause(static_cast<int>(lines.size()));  // lax EOF terminator
  if (static_cast<long>(inst.clauses.size()) != declared_clauses)
    throw ParseError("clause count mismatch: header declares " + std::to_string(declared_clauses) +
                         ", found " + std::to_string(inst.clauses.size()),
                     static_cast<int>(lines.size()));
  return inst;
}

SatInstance parse_dimacs_file(const std::string& path) {
  return parse_dimacs(read_file(path));
}

std::string SatInstance::to_dimacs() const {
  std::ostringstream out;
  out << "p cnf " << num_vars << ' ' << clauses.size() << '\n';
  for (const auto& cl : clauses) {
    for (int lit : cl) out << lit << ' ';
    out << "0\n";
  }
  return out.str();
}

// --------------------------------------------------------------- LP-lite ---
//
// Grammar (one statement per line, `#` comments):
//   min: <linear expr>;            or  max: <linear expr>;
//   <name>: <linear expr> (<=|>=|=) <rational>;
//   bounds: <lo> <= <var> <= <hi>;            (-inf / inf allowed)
//   int v1 v2 ...;

namespace {

struct LpToken {
  enum Kind { Number, Ident, Plus, Minus, Cmp, Colon, Semi, End } kind;
  std::string text;
  double value = 0.0;
  int col = 0;
};

class LpLexer {
 public:
  LpLexer(const std::string& line, int line_no) : line_(line), line_no_(line_no) { advance(); }

  const LpToken& peek() const { return tok_; }
  LpToken take() {
    LpToken t = tok_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < line_.size() && std::isspace(static_cast<unsigned char>(line_[pos_]))) ++pos_;
    tok_.col = static_cast<int>(pos_) + 1;
    if (pos_ >= line_.size() || line_[pos_] == '#') {
      tok_ = {LpToken::End, "", 0.0, tok_.col};
      return;
    }
    char c = line_[pos_];
    if (c == '+') { tok_ = {LpToken::Plus, "+", 0.0, tok_.col}; ++pos_; return; }
    if (c == '-') { tok_ = {LpToken::Minus, "-", 0.0, tok_.col}; ++pos_; return; }
    if (c == ':') { tok_ = {LpToken::Colon, ":", 0.0, tok_.col}; ++pos_; return; }
    if (c == ';') { tok_ = {LpToken::Semi, ";", 0.0, tok_.col}; ++pos_; return; }
    if (c == '<' || c == '>' || c == '=') {
      std::string op(1, c);
      ++pos_;
      if (pos_ < line_.size() && line_[pos_] == '=') { op += '='; ++pos_; }
      tok_ = {LpToken::Cmp, op, 0.0, tok_.col};
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      size_t start = pos_;
      while (pos_ < line_.size() &&
             (std::isdigit(static_cast<unsigned char>(line_[pos_])) || line_[pos_] == '.' ||
              line_[pos_] == 'e' || line_[pos_] == 'E' ||
              ((line_[pos_] == '+' || line_[pos_] == '-') && pos_ > start &&
               (line_[pos_ - 1] == 'e' || line_[pos_ - 1] == 'E'))))
        ++pos_;
      std::string num = line_.substr(start, pos_ - start);
      double v = 0.0;
      auto [p, ec] = std::from_chars(num.data(), num.data() + num.size(), v);
      if (ec != std::errc() || p != num.data() + num.size())
        throw ParseError("unparseable coefficient `" + num + "`", line_no_, tok_.col);
      tok_ = {LpToken::Number, num, v, tok_.col};
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos_;
      while (pos_ < line_.size() && (std::isalnum(static_cast<unsigned char>(line_[pos_])) ||
                                     line_[pos_] == '_'))
        ++pos_;
      tok_ = {LpToken::Ident, line_.substr(start, pos_ - start), 0.0, tok_.col};
      return;
    }
    throw ParseError(std::string("unexpected character `") + c + "` in LP input", line_no_,
                     tok_.col);
  }

  const std::string& line_;
  int line_no_;
  size_t pos_ = 0;
  LpToken tok_;
};

struct LinearExpr {
  std::vector<std::pair<std::string, double>> terms;  // (var, coeff), first-appearance order
  double constant = 0.0;
};

// Parses `[+-] [coeff] [var]` sequences. "2x2" (no whitespace) is two tokens
// from the lexer (Number then Ident) and means coefficient 2 on x2.
LinearExpr parse_linear(LpLexer& lex, int line_no) {
  LinearExpr expr;
  double sign = 1.0;
  bool expect_term = true;
  while (true) {
    const LpToken& t = lex.peek();
    if (t.kind == LpToken::End || t.kind == LpToken::Semi || t.kind == LpToken::Cmp) break;
    if (t.kind == LpToken::Plus) { lex.take(); sign = 1.0; expect_term = true; continue; }
    if (t.kind == LpToken::Minus) { lex.take(); sign = -sign; expect_term = true; continue; }
    if (!expect_term)
      throw ParseError("expected `+` or `-` between terms", line_no, t.col);
    double coeff = 1.0;
    bool saw_number = false;
    if (t.kind == LpToken::Number) {
      coeff = lex.take().value;
      saw_number = true;
    }
    if (lex.peek().kind == LpToken::Ident) {
      std::string var = lex.take().text;
      expr.terms.emplace_back(var, sign * coeff);
    } else if (saw_number) {
      expr.constant += sign * coeff;
    } else {
      throw ParseError("expected coefficient or variable", line_no, lex.peek().col);
    }
    sign = 1.0;
    expect_term = false;
  }
  return expr;
}

void expect_semi(LpLexer& lex, int line_no) {
  if (lex.peek().kind != LpToken::Semi)
    throw ParseError("expected `;` at end of statement", line_no, lex.peek().col);
  lex.take();
  if (lex.peek().kind != LpToken::End)
    throw ParseError("trailing tokens after `;`", line_no, lex.peek().col);
}

double parse_bound_value(const LpToken& t, double sign, int line_no) {
  if (t.kind == LpToken::Number) return sign * t.value;
  if (t.kind == LpToken::Ident && (t.text == "inf" || t.text == "infinity"))
    return sign * kInf;
  throw ParseError("expected numeric bound or inf", line_no, t.col);
}

}  // namespace

MilpInstance parse_lp(const std::string& text) {
  MilpInstance inst;
  std::unordered_map<std::string, int> col_of;
  std::set<std::string> bounded;  // vars with an explicit bounds line
  bool saw_objective = false;
  bool maximize = false;

  auto column = [&](const std::string& var) {
    auto it = col_of.find(var);
    if (it != col_of.end()) return it->second;
    int idx = static_cast<int>(inst.var_names.size());
    col_of.emplace(var, idx);
    inst.var_names.push_back(var);
    inst.objective.push_back(0.0);
    inst.lower.push_back(0.0);
    inst.upper.push_back(kInf);
    return idx;
  };

  auto lines = split_lines(text);
  for (size_t i = 0; i < lines.size(); ++i) {
    const int line_no = static_cast<int>(i) + 1;
    LpLexer lex(lines[i], line_no);
    if (lex.peek().kind == LpToken::End) continue;
    if (lex.peek().kind != LpToken::Ident)
      throw ParseError("expected statement keyword or constraint name", line_no, lex.peek().col);
    std::string head = lex.take().text;

    if (head == "min" || head == "max") {
      if (lex.peek().kind != LpToken::Colon)
        throw ParseError("expected `:` after objective sense", line_no, lex.peek().col);
      lex.take();
      if (saw_objective) throw ParseError("duplicate objective line", line_no);
      saw_objective = true;
      maximize = (head == "max");
      LinearExpr obj = parse_linear(lex, line_no);
      expect_semi(lex, line_no);
      for (auto& [var, coeff] : obj.terms) inst.objective[column(var)] += coeff;
      continue;
    }

    if (head == "bounds") {
      if (lex.peek().kind != LpToken::Colon)
        throw ParseError("expected `:` after bounds", line_no, lex.peek().col);
      lex.take();
      // <lo> <= var <= <hi>
      double losign = 1.0;
      if (lex.peek().kind == LpToken::Minus) { lex.take(); losign = -1.0; }
      else if (lex.peek().kind == LpToken::Plus) { lex.take(); }
      double lo = parse_bound_value(lex.take(), losign, line_no);
      if (lex.peek().kind != LpToken::Cmp || lex.peek().text != "<=")
        throw ParseError("expected `<=` in bounds statement", line_no, lex.peek().col);
      lex.take();
      if (lex.peek().kind != LpToken::Ident)
        throw ParseError("expected variable name in bounds statement", line_no, lex.peek().col);
      std::string var = lex.take().text;
      if (lex.peek().kind != LpToken::Cmp || lex.peek().text != "<=")
        throw ParseError("expected `<=` in bounds statement", line_no, lex.peek().col);
      lex.take();
      double hisign = 1.0;
      if (lex.peek().kind == LpToken::Minus) { lex.take(); hisign = -1.0; }
      else if (lex.peek().kind == LpToken::Plus) { lex.take(); }
      double hi = parse_bound_value(lex.take(), hisign, line_no);
      expect_semi(lex, line_no);
      if (!bounded.insert(var).second)
        throw ParseError("duplicate bound declaration for `" + var + "`", line_no);
      int j = column(var);
      if (lo > hi)
        throw ParseError("empty bound interval for `" + var + "`", line_no);
      inst.lower[j] = lo;
      inst.upper[j] = hi;
      continue;
    }

    if (head == "int") {
      while (lex.peek().kind == LpToken::Ident) {
        int j = column(lex.take().text);
        if (std::find(inst.integer_vars.begin(), inst.integer_vars.end(), j) ==
            inst.integer_vars.end())
          inst.integer_vars.push_back(j);
      }
      expect_semi(lex, line_no);
      continue;
    }

    // constraint: name already consumed
    if (lex.peek().kind != LpToken::Colon)
      throw ParseError("unknown section keyword `" + head + "`", line_no, lex.peek().col);
    lex.take();
    LinearExpr lhs = parse_linear(lex, line_no);
    if (lex.peek().kind != LpToken::Cmp)
      throw ParseError("expected comparison in constraint", line_no, lex.peek().col);
    std::string cmp = lex.take().text;
    RowSense sense;
    if (cmp == "<=") sense = RowSense::Le;
    else if (cmp == ">=") sense = RowSense::Ge;
    else if (cmp == "=" || cmp == "==") sense = RowSense::Eq;
    else throw ParseError("unsupported comparison `" + cmp + "`", line_no);
    double rsign = 1.0;
    if (lex.peek().kind == LpToken::Minus) { lex.take(); rsign = -1.0; }
    else if (lex.peek().kind == LpToken::Plus) { lex.take(); }
    if (lex.peek().kind != LpToken::Number)
      throw ParseError("expected numeric right-hand side", line_no, lex.peek().col);
    double rhs = rsign * lex.take().value - lhs.constant;
    expect_semi(lex, line_no);

    int row = static_cast<int>(inst.rhs.size());
    inst.rhs.push_back(rhs);
    inst.sense.push_back(sense);
    inst.row_names.push_back(head);
    std::unordered_map<int, double> row_coeffs;
    std::vector<int> order;
    for (auto& [var, coeff] : lhs.terms) {
      int j = column(var);
      if (!row_coeffs.count(j)) order.push_back(j);
      row_coeffs[j] += coeff;
    }
    for (int j : order) {
      double a = row_coeffs[j];
      if (a != 0.0) inst.matrix.push_back({row, j, a});  // drop explicit zeros
    }
  }

  if (maximize)
    for (double& w : inst.objective) w = -w;

  std::sort(inst.integer_vars.begin(), inst.integer_vars.end());
  for (int j = 0; j < inst.num_vars(); ++j)
    if (std::isfinite(inst.lower[j]) && std::isfinite(inst.upper[j]) &&
        inst.lower[j] > inst.upper[j])
      throw DataError("inconsistent bounds for variable " + inst.var_names[j]);
  return inst;
}

MilpInstance parse_lp_file(const std::string& path) { return parse_lp(read_file(path)); }

std::string MilpInstance::to_lp() const {
  std::ostringstream out;
  out << "min:";
  bool first = true;
  for (int j = 0; j < num_vars(); ++j) {
    double w = objective[j];
    if (w == 0.0) continue;
    out << (w < 0 ? " - " : (first ? " " : " + ")) << std::abs(w) << ' ' << var_names[j];
    first = false;
  }
  if (first) out << " 0";
  out << ";\n";
  int prev_row = -1;
  for (size_t k = 0; k < matrix.size(); ++k) {
    const Entry& e = matrix[k];
    if (e.row != prev_row) {
      if (prev_row >= 0) {
        const char* op = sense[prev_row] == RowSense::Le   ? "<="
                         : sense[prev_row] == RowSense::Ge ? ">="
                                                           : "=";
        out << ' ' << op << ' ' << rhs[prev_row] << ";\n";
      }
      out << row_names[e.row] << ':';
      prev_row = e.row;
      first = true;
    }
    out << (e.coeff < 0 ? " - " : (first ? " " : " + ")) << std::abs(e.coeff) << ' '
        << var_names[e.col];
    first = false;
  }
  if (prev_row >= 0) {
    const char* op = sense[prev_row] == RowSense::Le   ? "<="
                     : sense[prev_row] == RowSense::Ge ? ">="
                                                       : "=";
    out << ' ' << op << ' ' << rhs[prev_row] << ";\n";
  }
  for (int j = 0; j < num_vars(); ++j) {
    if (lower[j] != 0.0 || upper[j] != kInf) {
      out << "bounds: ";
      if (lower[j] == -kInf) out << "-inf";
      else out << lower[j];
      out << " <= " << var_names[j] << " <= ";
      if (upper[j] == kInf) out << "inf";
      else out << upper[j];
      out << ";\n";
    }
  }
  if (!integer_vars.empty()) {
    out << "int";
    for (int j : integer_vars) out << ' ' << var_names[j];
    out << ";\n";
  }
  return out.str();
}

// ---------------------------------------------------------- Eq.1 penalty ---

ObjectiveReport evaluate_assignment(const SatInstance& inst, const Assignment& x) {
  if (static_cast<int>(x.values.size()) != inst.num_vars)
    throw DataError("assignment length " + std::to_string(x.values.size()) +
                    " does not match num_vars " + std::to_string(inst.num_vars));
  int falsified = 0;
  for (const auto& cl : inst.clauses) {
    bool sat = false;
    for (int lit : cl) {
      bool val = x.values[std::abs(lit) - 1] != 0.0;
      if ((lit > 0) == val) {
        sat = true;
        break;
      }
    }
    if (!sat) ++falsified;
  }
  return {0.0, static_cast<double>(falsified)};
}

ObjectiveReport evaluate_assignment(const MilpInstance& inst, const Assignment& x) {
  const int n = inst.num_vars();
  if (static_cast<int>(x.values.size()) != n)
    throw DataError("assignment length " + std::to_string(x.values.size()) +
                    " does not match variable count " + std::to_string(n));
  double c = 0.0;
  for (int j = 0; j < n; ++j) c += inst.objective[j] * x.values[j];

  std::vector<double> row_value(inst.num_rows(), 0.0);
  for (const auto& e : inst.matrix) row_value[e.row] += e.coeff * x.values[e.col];

  double f = 0.0;
  for (int i = 0; i < inst.num_rows(); ++i) {
    double slack = row_value[i] - inst.rhs[i];
    switch (inst.sense[i]) {
      case RowSense::Le: f += std::max(0.0, slack); break;
      case RowSense::Ge: f += std::max(0.0, -slack); break;
      case RowSense::Eq: f += std::abs(slack); break;
    }
  }
  for (int j = 0; j < n; ++j) {
    if (x.values[j] < inst.lower[j]) f += inst.lower[j] - x.values[j];
    if (x.values[j] > inst.upper[j]) f += x.values[j] - inst.upper[j];
  }
  for (int j : inst.integer_vars) f += std::abs(x.values[j] - std::round(x.values[j]));
  return {c, f};
}

ObjectiveReport evaluate_assignment(const CoInstance& inst, const Assignment& x) {
  return std::visit([&](const auto& i) { return evaluate_assignment(i, x); }, inst);
}

}  // namespace codisc
