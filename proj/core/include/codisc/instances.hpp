#pragma once

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "codisc/errors.hpp"

namespace codisc {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// CNF formula in canonical form. Literals are nonzero signed ints with
// |lit| <= num_vars. Duplicate literals inside a clause are dropped at parse
// time; clauses containing both l and -l are kept but flagged tautological.
struct SatInstance {
  int num_vars = 0;
  std::vector<std::vector<int>> clauses;
  std::vector<uint8_t> tautological;  // parallel to clauses

  bool is_tautological(size_t c) const { return tautological[c] != 0; }
  std::string to_dimacs() const;
};

enum class RowSense { Le, Ge, Eq };

//   min w'x  s.t. rows of A x (<=,>=,=) b,  l <= x <= u,  x_j integer for j in I
struct MilpInstance {
  struct Entry {
    int row;
    int col;
    double coeff;
  };
  std::vector<double> objective;           // w, length n
  std::vector<Entry> matrix;               // sparse, row-major order, unique (row,col)
  std::vector<double> rhs;                 // b, length m
  std::vector<RowSense> sense;             // length m
  std::vector<double> lower, upper;        // length n, +-inf sentinels
  std::vector<int> integer_vars;           // sorted subset of 0..n-1
  std::vector<std::string> var_names;      // column order
  std::vector<std::string> row_names;

  int num_vars() const { return static_cast<int>(objective.size()); }
  int num_rows() const { return static_cast<int>(rhs.size()); }
  std::string to_lp() const;
};

using CoInstance = std::variant<SatInstance, MilpInstance>;

// Booleans for SAT, rationals for MILP; length must match the instance.
struct Assignment {
  std::vector<double> values;
};

struct ObjectiveReport {
  double c = 0.0;  // objective value (0 for SAT)
  double f = 0.0;  // constraint penalty, 0 iff feasible
};

SatInstance parse_dimacs(const std::string& text);
SatInstance parse_dimacs_file(const std::string& path);

MilpInstance parse_lp(const std::string& text);
MilpInstance parse_lp_file(const std::string& path);

ObjectiveReport evaluate_assignment(const SatInstance& inst, const Assignment& x);
ObjectiveReport evaluate_assignment(const MilpInstance& inst, const Assignment& x);
ObjectiveReport evaluate_assignment(const CoInstance& inst, const Assignment& x);

}  // namespace codisc
