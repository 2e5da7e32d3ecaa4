#pragma once

#include <cstddef>
#include <vector>

#include "hyparr/linalg.hpp"

namespace hyparr {

enum class Relation { LessEqual, GreaterEqual, Equal };
enum class Sense { Maximize, Minimize };

struct Constraint {
  QVector coeffs;
  Relation relation = Relation::LessEqual;
  Rational rhs;
};

/// Variables are free (unrestricted in sign).
struct LinearProgram {
  std::size_t dim = 0;
  QVector objective;
  Sense sense = Sense::Maximize;
  std::vector<Constraint> constraints;
};

enum class LPStatus { Optimal, Infeasible, Unbounded };

struct LPResult {
  LPStatus status = LPStatus::Infeasible;
  Rational value;
  QVector point;
};

/// Exact two-phase simplex with Bland's rule. Optimal results carry a vertex
/// of the split standard-form problem attaining the optimum.
LPResult lp_optimize(const LinearProgram& p);

}  // namespace hyparr
