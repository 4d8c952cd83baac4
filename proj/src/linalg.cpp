#include "pseudomod/linalg.hpp"

#include <algorithm>

namespace pseudomod {

namespace {

void axpy(const Zmod& z, Vec& w, Int q, const Vec& row) {
  if (q == 0) return;
  Int n = z.modulus();
  for (std::size_t c = 0; c < w.size(); ++c) {
    if (row[c] == 0) continue;
    w[c] = (w[c] - q * row[c]) % n;
    if (w[c] < 0) w[c] += n;
  }
}

}  // namespace

Vec zero_vec(int n) { return Vec(static_cast<std::size_t>(n), 0); }

Vec unit_vec(int n, int i) {
  Vec v = zero_vec(n);
  v[i] = 1;
  return v;
}

bool is_zero_vec(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](Int x) { return x == 0; });
}

Mat identity_matrix(int n) {
  Mat m;
  for (int i = 0; i < n; ++i) m.push_back(unit_vec(n, i));
  return m;
}

Mat howell_form(const Zmod& z, Mat rows, int ncols) {
  const int k = z.exponent();
  Mat work;
  for (auto& r : rows) {
    if (static_cast<int>(r.size()) != ncols) throw InputError("howell_form: ragged matrix");
    for (auto& x : r) x = z.reduce(x);
    if (!is_zero_vec(r)) work.push_back(std::move(r));
  }
  Mat done;
  std::vector<int> pcol, pval;
  for (int col = 0; col < ncols && !work.empty(); ++col) {
    int best = -1, bestv = k;
    for (int i = 0; i < static_cast<int>(work.size()); ++i) {
      int v = z.valuation(work[i][col]);
      if (v < bestv) {
        bestv = v;
        best = i;
      }
    }
    if (best < 0) continue;
    Vec piv = std::move(work[best]);
    work.erase(work.begin() + best);
    const Int pv = z.power_of_p(bestv);
    const Int u = z.inverse(piv[col] / pv);
    for (auto& x : piv) x = z.mul(x, u);
    for (auto& w : work)
      if (w[col] != 0) axpy(z, w, w[col] / pv, piv);
    if (bestv > 0) {
      Vec ann = piv;
      const Int f = z.power_of_p(k - bestv);
      for (auto& x : ann) x = z.mul(x, f);
      if (!is_zero_vec(ann)) work.push_back(std::move(ann));
    }
    work.erase(std::remove_if(work.begin(), work.end(), [](const Vec& w) { return is_zero_vec(w); }),
               work.end());
    done.push_back(std::move(piv));
    pcol.push_back(col);
    pval.push_back(bestv);
  }
  for (std::size_t i = 0; i < done.size(); ++i) {
    const Int pv = z.power_of_p(pval[i]);
    for (std::size_t j = 0; j < i; ++j) axpy(z, done[j], done[j][pcol[i]] / pv, done[i]);
  }
  return done;
}

RowSpan::RowSpan(const Zmod& z, int ncols) : z_(z), n_(ncols) {}

RowSpan::RowSpan(const Zmod& z, int ncols, const Mat& rows)
    : z_(z), n_(ncols), rows_(howell_form(z, rows, ncols)) {
  index();
}

void RowSpan::index() {
  pivot_col_.clear();
  pivot_val_.clear();
  for (const auto& r : rows_) {
    int c = 0;
    while (r[c] == 0) ++c;
    pivot_col_.push_back(c);
    pivot_val_.push_back(z_.valuation(r[c]));
  }
}

Vec RowSpan::reduce(Vec v) const {
  for (auto& x : v) x = z_.reduce(x);
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Int pv = z_.power_of_p(pivot_val_[i]);
    axpy(z_, v, v[pivot_col_[i]] / pv, rows_[i]);
  }
  return v;
}

bool RowSpan::contains(const Vec& v) const { return is_zero_vec(reduce(v)); }

bool RowSpan::contains(const RowSpan& other) const {
  for (const auto& r : other.rows_)
    if (!contains(r)) return false;
  return true;
}

int RowSpan::log_size() const {
  int s = 0;
  for (int v : pivot_val_) s += z_.exponent() - v;
  return s;
}

RowSpan RowSpan::plus(const Mat& more) const {
  Mat all = rows_;
  all.insert(all.end(), more.begin(), more.end());
  return RowSpan(z_, n_, all);
}

RowSpan RowSpan::plus(const RowSpan& other) const { return plus(other.rows_); }

bool RowSpan::insert(const Vec& v) {
  Vec r = reduce(v);
  if (is_zero_vec(r)) return false;
  rows_.push_back(std::move(r));
  rows_ = howell_form(z_, std::move(rows_), n_);
  index();
  return true;
}

LinearSolver::LinearSolver(const Zmod& z, const Mat& gens, const Mat& relations, int ncols)
    : z_(z), n_(ncols), m_(static_cast<int>(gens.size())), kernel_(z, m_), image_(z, ncols) {
  Mat aug;
  for (int i = 0; i < m_; ++i) {
    Vec r = gens[i];
    r.resize(n_ + m_, 0);
    r[n_ + i] = 1;
    aug.push_back(std::move(r));
  }
  for (const auto& rel : relations) {
    Vec r = rel;
    r.resize(n_ + m_, 0);
    aug.push_back(std::move(r));
  }
  Mat h = howell_form(z, aug, n_ + m_);
  Mat ker;
  Mat img;
  for (auto& r : h) {
    int c = 0;
    while (r[c] == 0) ++c;
    if (c < n_) {
      left_col_.push_back(c);
      left_val_.push_back(z.valuation(r[c]));
      img.emplace_back(r.begin(), r.begin() + n_);
      left_.push_back(std::move(r));
    } else {
      ker.emplace_back(r.begin() + n_, r.end());
    }
  }
  kernel_ = RowSpan(z, m_, ker);
  image_ = RowSpan(z, n_, img);
}

std::optional<Vec> LinearSolver::solve(const Vec& target) const {
  Vec w(n_ + m_, 0);
  for (int i = 0; i < n_; ++i) w[i] = z_.reduce(target[i]);
  for (std::size_t i = 0; i < left_.size(); ++i) {
    const Int pv = z_.power_of_p(left_val_[i]);
    Int entry = w[left_col_[i]];
    if (entry % pv != 0) return std::nullopt;
    axpy(z_, w, entry / pv, left_[i]);
  }
  for (int i = 0; i < n_; ++i)
    if (w[i] != 0) return std::nullopt;
  Vec c(m_);
  for (int i = 0; i < m_; ++i) c[i] = z_.neg(w[n_ + i]);
  return c;
}

RowSpan kernel_mod(const Zmod& z, const Mat& images, const Mat& target_relations, int target_cols) {
  return LinearSolver(z, images, target_relations, target_cols).kernel();
}

}  // namespace pseudomod
