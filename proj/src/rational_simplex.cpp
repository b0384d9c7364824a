#include "sgdim/rational_simplex.hpp"

#include "sgdim/error.hpp"

namespace sgdim::lp {

namespace {

class Tableau {
 public:
  Tableau(int variables, std::span<const Row> rows) : vars_(variables), m_(static_cast<int>(rows.size())) {
    int artificials = 0;
    for (const auto& r : rows) {
      if (static_cast<int>(r.coeffs.size()) != vars_) throw InvalidInput("constraint width does not match variables");
      if (r.rhs >= 0) ++artificials;
    }
    first_art_ = vars_ + m_;
    cols_ = first_art_ + artificials;
    cell_.assign(static_cast<std::size_t>(m_ + 1) * static_cast<std::size_t>(cols_ + 1), mpq_class(0));
    basis_.resize(static_cast<std::size_t>(m_));

    // Row i: sign * (a.x - s_i) = sign * b, sign chosen so the right side is >= 0.
    int art = first_art_;
    for (int i = 0; i < m_; ++i) {
      const auto& r = rows[static_cast<std::size_t>(i)];
      const int sign = r.rhs >= 0 ? 1 : -1;
      for (int j = 0; j < vars_; ++j) at(i, j) = sign * r.coeffs[static_cast<std::size_t>(j)];
      at(i, vars_ + i) = -sign;
      rhs(i) = sign * r.rhs;
      if (sign < 0) {
        basis_[static_cast<std::size_t>(i)] = vars_ + i;
      } else {
        at(i, art) = 1;
        basis_[static_cast<std::size_t>(i)] = art++;
      }
    }
    // Objective: minimise the artificial sum. Reduced costs of the original
    // columns are minus the column sums over artificial rows.
    for (int i = 0; i < m_; ++i) {
      if (basis_[static_cast<std::size_t>(i)] < first_art_) continue;
      for (int j = 0; j < first_art_; ++j) at(m_, j) -= at(i, j);
      rhs(m_) -= rhs(i);
    }
  }

  bool phase_one(SolveStats* stats) {
    for (;;) {
      int enter = -1;
      for (int j = 0; j < first_art_; ++j) {
        if (sgn(at(m_, j)) < 0) {
          enter = j;
          break;
        }
      }
      if (enter < 0) break;
      int leave = -1;
      mpq_class best;
      for (int i = 0; i < m_; ++i) {
        if (sgn(at(i, enter)) <= 0) continue;
        mpq_class ratio = rhs(i) / at(i, enter);
        if (leave < 0 || ratio < best ||
            (ratio == best && basis_[static_cast<std::size_t>(i)] < basis_[static_cast<std::size_t>(leave)])) {
          leave = i;
          best = ratio;
        }
      }
      // Phase one is bounded below by zero, so some row always limits the step.
      if (leave < 0) break;
      pivot(leave, enter);
      if (stats) ++stats->pivots;
    }
    return sgn(rhs(m_)) == 0;
  }

  std::vector<mpq_class> solution() const {
    std::vector<mpq_class> x(static_cast<std::size_t>(vars_), mpq_class(0));
    for (int i = 0; i < m_; ++i) {
      const int b = basis_[static_cast<std::size_t>(i)];
      if (b < vars_) x[static_cast<std::size_t>(b)] = rhs(i);
    }
    return x;
  }

 private:
  mpq_class& at(int i, int j) {
    return cell_[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_ + 1) + static_cast<std::size_t>(j)];
  }
  const mpq_class& at(int i, int j) const {
    return cell_[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_ + 1) + static_cast<std::size_t>(j)];
  }
  mpq_class& rhs(int i) { return at(i, cols_); }
  const mpq_class& rhs(int i) const { return at(i, cols_); }

  void pivot(int row, int col) {
    const mpq_class p = at(row, col);
    for (int j = 0; j <= cols_; ++j) {
      if (sgn(at(row, j)) != 0) at(row, j) /= p;
    }
    for (int i = 0; i <= m_; ++i) {
      if (i == row) continue;
      const mpq_class f = at(i, col);
      if (sgn(f) == 0) continue;
      for (int j = 0; j <= cols_; ++j) {
        if (sgn(at(row, j)) != 0) at(i, j) -= f * at(row, j);
      }
    }
    basis_[static_cast<std::size_t>(row)] = col;
  }

  int vars_;
  int m_;
  int first_art_ = 0;
  int cols_ = 0;
  std::vector<mpq_class> cell_;
  std::vector<int> basis_;
};

}  // namespace

std::optional<std::vector<mpq_class>> find_nonnegative_solution(int variables, std::span<const Row> rows,
                                                                SolveStats* stats) {
  if (variables < 1) throw InvalidInput("need at least one variable");
  Tableau t(variables, rows);
  if (!t.phase_one(stats)) return std::nullopt;
  return t.solution();
}

}  // namespace sgdim::lp
