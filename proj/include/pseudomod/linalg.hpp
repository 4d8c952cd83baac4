#pragma once

// Row spans over Z/p^k in Howell normal form, kernels and linear solves.

#include <optional>
#include <vector>

#include "pseudomod/zmod.hpp"

namespace pseudomod {

using Mat = std::vector<Vec>;

/// Howell normal form of the row span of `rows` (each of length ncols).
/// Zero rows are dropped, so the zero span is the empty matrix.
Mat howell_form(const Zmod& z, Mat rows, int ncols);

/// A submodule of (Z/p^k)^n kept in Howell form; equality is row equality.
class RowSpan {
 public:
  RowSpan(const Zmod& z, int ncols);
  RowSpan(const Zmod& z, int ncols, const Mat& rows);

  const Zmod& zmod() const { return z_; }
  int ncols() const { return n_; }
  const Mat& rows() const { return rows_; }
  int pivot_col(int i) const { return pivot_col_[i]; }
  int pivot_val(int i) const { return pivot_val_[i]; }

  /// Canonical representative of v + span.
  Vec reduce(Vec v) const;
  bool contains(const Vec& v) const;
  bool contains(const RowSpan& other) const;
  bool is_zero() const { return rows_.empty(); }
  /// log_p of the cardinality.
  int log_size() const;

  RowSpan plus(const RowSpan& other) const;
  RowSpan plus(const Mat& more) const;
  /// Adds one vector; returns false if it was already inside.
  bool insert(const Vec& v);

  bool operator==(const RowSpan& o) const { return n_ == o.n_ && rows_ == o.rows_; }
  bool operator!=(const RowSpan& o) const { return !(*this == o); }

 private:
  void index();

  Zmod z_;
  int n_;
  Mat rows_;
  std::vector<int> pivot_col_;
  std::vector<int> pivot_val_;
};

/// Solves c . gens == target modulo the span of `relations`.
class LinearSolver {
 public:
  LinearSolver(const Zmod& z, const Mat& gens, const Mat& relations, int ncols);

  std::optional<Vec> solve(const Vec& target) const;
  /// Coefficient vectors c with c . gens in the relation span.
  const RowSpan& kernel() const { return kernel_; }
  /// The span of gens plus relations.
  const RowSpan& image() const { return image_; }
  int num_gens() const { return m_; }

 private:
  Zmod z_;
  int n_;
  int m_;
  Mat left_;
  std::vector<int> left_col_;
  std::vector<int> left_val_;
  RowSpan kernel_;
  RowSpan image_;
};

/// {c : sum c_i images_i lies in span(target_relations)}.
RowSpan kernel_mod(const Zmod& z, const Mat& images, const Mat& target_relations, int target_cols);

Mat identity_matrix(int n);
Vec zero_vec(int n);
Vec unit_vec(int n, int i);
bool is_zero_vec(const Vec& v);

}  // namespace pseudomod
