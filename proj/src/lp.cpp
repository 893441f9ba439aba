#include "lawrence/lp.hpp"

#include <cassert>
#include <limits>

namespace lawrence {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

// Full-tableau simplex state. Structural variables are the split x = p - q,
// followed by one slack per row and one artificial column for phase 1.
class Tableau {
 public:
  Tableau(const std::vector<RatVec>& rows, const RatVec& rhs, const RatVec& c)
      : nfree_(c.size()), m_(rows.size()) {
    nvars_ = 2 * nfree_ + m_ + 1;  // last column index nvars_-1 = artificial
    art_ = nvars_ - 1;
    cost_.assign(nvars_, Rat(0));
    for (std::size_t j = 0; j < nfree_; ++j) {
      cost_[j] = c[j];
      cost_[nfree_ + j] = -c[j];
    }
    tab_.assign(m_, RatVec(nvars_ + 1, Rat(0)));
    basis_.assign(m_, kNone);
    for (std::size_t i = 0; i < m_; ++i) {
      for (std::size_t j = 0; j < nfree_; ++j) {
        tab_[i][j] = rows[i][j];
        tab_[i][nfree_ + j] = -rows[i][j];
      }
      tab_[i][2 * nfree_ + i] = 1;
      tab_[i][art_] = -1;
      tab_[i][nvars_] = rhs[i];
      basis_[i] = 2 * nfree_ + i;
    }
  }

  LpResult solve() {
    if (m_ > 0) {
      std::size_t worst = 0;
      for (std::size_t i = 1; i < m_; ++i)
        if (tab_[i][nvars_] < tab_[worst][nvars_]) worst = i;
      if (tab_[worst][nvars_] < 0) {
        // Phase 1: drive the artificial variable to zero.
        RatVec aux(nvars_, Rat(0));
        aux[art_] = -1;
        set_objective(aux);
        pivot(worst, art_);
        run(/*allow_artificial=*/true);
        if (obj_value_ != 0) return {LpStatus::kInfeasible, Rat(0), {}};
        expel_artificial();
      }
    }
    set_objective(cost_);
    if (!run(/*allow_artificial=*/false))
      return {LpStatus::kUnbounded, Rat(0), {}};
    LpResult res;
    res.status = LpStatus::kOptimal;
    res.value = obj_value_;
    RatVec full(nvars_, Rat(0));
    for (std::size_t i = 0; i < m_; ++i) full[basis_[i]] = tab_[i][nvars_];
    res.x.assign(nfree_, Rat(0));
    for (std::size_t j = 0; j < nfree_; ++j)
      res.x[j] = full[j] - full[nfree_ + j];
    return res;
  }

 private:
  void set_objective(const RatVec& c) {
    red_.assign(nvars_, Rat(0));
    obj_value_ = 0;
    for (std::size_t j = 0; j < nvars_; ++j) red_[j] = c[j];
    for (std::size_t i = 0; i < m_; ++i) {
      const Rat& cb = c[basis_[i]];
      if (cb == 0) continue;
      obj_value_ += cb * tab_[i][nvars_];
      for (std::size_t j = 0; j < nvars_; ++j) red_[j] -= cb * tab_[i][j];
    }
  }

  void pivot(std::size_t r, std::size_t e) {
    Rat p = tab_[r][e];
    assert(p != 0);
    for (std::size_t j = 0; j <= nvars_; ++j) tab_[r][j] /= p;
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == r || tab_[i][e] == 0) continue;
      Rat f = tab_[i][e];
      for (std::size_t j = 0; j <= nvars_; ++j) tab_[i][j] -= f * tab_[r][j];
    }
    if (!red_.empty() && red_[e] != 0) {
      Rat f = red_[e];
      obj_value_ += f * tab_[r][nvars_];
      for (std::size_t j = 0; j < nvars_; ++j) red_[j] -= f * tab_[r][j];
    }
    basis_[r] = e;
  }

  // Bland's rule: smallest improving column, smallest basic index on ties.
  bool run(bool allow_artificial) {
    while (true) {
      std::size_t enter = kNone;
      for (std::size_t j = 0; j < nvars_; ++j) {
        if (!allow_artificial && j == art_) continue;
        if (red_[j] > 0) { enter = j; break; }
      }
      if (enter == kNone) return true;
      std::size_t leave = kNone;
      Rat best;
      for (std::size_t i = 0; i < m_; ++i) {
        if (tab_[i][enter] <= 0) continue;
        Rat ratio = tab_[i][nvars_] / tab_[i][enter];
        if (leave == kNone || ratio < best ||
            (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == kNone) return false;  // unbounded direction
      pivot(leave, enter);
    }
  }

  void expel_artificial() {
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] != art_) continue;
      std::size_t e = kNone;
      for (std::size_t j = 0; j < nvars_ && e == kNone; ++j)
        if (j != art_ && tab_[i][j] != 0) e = j;
      if (e != kNone) pivot(i, e);
      // else: redundant zero row; the artificial stays basic at value 0
      // and never re-enters the objective.
    }
  }

  std::size_t nfree_, m_, nvars_ = 0, art_ = 0;
  std::vector<RatVec> tab_;
  std::vector<std::size_t> basis_;
  RatVec cost_, red_;
  Rat obj_value_ = 0;
};

}  // namespace

LpResult lp_maximize(const std::vector<RatVec>& rows, const RatVec& rhs,
                     const RatVec& objective) {
  assert(rows.size() == rhs.size());
  for (const auto& r : rows) assert(r.size() == objective.size());
  return Tableau(rows, rhs, objective).solve();
}

}  // namespace lawrence
