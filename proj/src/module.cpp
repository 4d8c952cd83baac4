#include "pseudomod/module.hpp"

namespace pseudomod {

namespace {

Vec flatten(const FiniteRing& r, const std::vector<Vec>& row) {
  Vec v;
  v.reserve(row.size() * static_cast<std::size_t>(r.dim()));
  for (const auto& x : row) v.insert(v.end(), x.begin(), x.end());
  return v;
}

Mat block_relations(const FiniteRing& r, int blocks) {
  const int n = r.dim();
  Mat out;
  for (int b = 0; b < blocks; ++b)
    for (const auto& rr : r.relations().rows()) {
      Vec v(static_cast<std::size_t>(n) * blocks, 0);
      std::copy(rr.begin(), rr.end(), v.begin() + static_cast<std::ptrdiff_t>(b) * n);
      out.push_back(v);
    }
  return out;
}

}  // namespace

RowSpan relation_submodule(const FinModule& m) {
  const FiniteRing& r = m.base;
  Mat rows = block_relations(r, m.ngens);
  for (const auto& rel : m.relations) {
    if (static_cast<int>(rel.size()) != m.ngens) throw InputError("FinModule: relation row has wrong length");
    for (int i = 0; i < r.dim(); ++i) {
      std::vector<Vec> scaled;
      for (const auto& x : rel) scaled.push_back(r.mul_basis_left(i, x));
      rows.push_back(flatten(r, scaled));
    }
  }
  return RowSpan(r.zmod(), m.ngens * r.dim(), rows);
}

int module_log_size(const FinModule& m) {
  return m.ngens * m.base.dim() * m.base.zmod().exponent() - relation_submodule(m).log_size();
}

int module_length(const FinModule& m) {
  LocalInfo info = local_info(m.base);
  return length_from_log(info, module_log_size(m));
}

RowSpan module_annihilator(const FinModule& m) {
  const FiniteRing& r = m.base;
  const int n = r.dim(), g = m.ngens;
  if (g == 0) return unit_ideal(r);
  RowSpan rel = relation_submodule(m);
  Mat images;
  for (int i = 0; i < n; ++i) {
    Vec row(static_cast<std::size_t>(g) * g * n, 0);
    for (int j = 0; j < g; ++j) row[static_cast<std::size_t>(j) * g * n + static_cast<std::size_t>(j) * n + i] = 1;
    images.push_back(row);
  }
  Mat target;
  for (int j = 0; j < g; ++j)
    for (const auto& rr : rel.rows()) {
      Vec v(static_cast<std::size_t>(g) * g * n, 0);
      std::copy(rr.begin(), rr.end(), v.begin() + static_cast<std::ptrdiff_t>(j) * g * n);
      target.push_back(v);
    }
  return kernel_mod(r.zmod(), images, target, g * g * n).plus(r.relations());
}

Vec determinant(const FiniteRing& r, const std::vector<std::vector<Vec>>& a) {
  const std::size_t n = a.size();
  if (n == 0) return r.one();
  if (n == 1) return r.reduce(a[0][0]);
  Vec total = r.zero();
  for (std::size_t c = 0; c < n; ++c) {
    if (r.is_zero(a[0][c])) continue;
    std::vector<std::vector<Vec>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Vec> row;
      for (std::size_t j = 0; j < n; ++j)
        if (j != c) row.push_back(a[i][j]);
      minor.push_back(row);
    }
    Vec term = r.mul(a[0][c], determinant(r, minor));
    total = (c % 2 == 0) ? r.add(total, term) : r.sub(total, term);
  }
  return total;
}

RowSpan fitting_ideal(const FinModule& m) {
  const FiniteRing& r = m.base;
  const int g = m.ngens;
  const int s = static_cast<int>(m.relations.size());
  if (g == 0) return unit_ideal(r);
  if (s < g) return zero_ideal(r);
  Mat minors;
  std::vector<int> pick(g);
  for (int i = 0; i < g; ++i) pick[i] = i;
  while (true) {
    std::vector<std::vector<Vec>> sq;
    for (int i : pick) sq.push_back(m.relations[i]);
    minors.push_back(determinant(r, sq));
    int i = g - 1;
    while (i >= 0 && pick[i] == s - g + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < g; ++j) pick[j] = pick[j - 1] + 1;
  }
  return ideal_closure(r, minors);
}

FinModule cyclic_module(const FiniteRing& r, const Mat& ideal_gens) {
  FinModule m{r, 1, {}};
  for (const auto& g : ideal_gens) m.relations.push_back({g});
  return m;
}

FinModule direct_sum(const FinModule& a, const FinModule& b) {
  FinModule m{a.base, a.ngens + b.ngens, {}};
  for (const auto& row : a.relations) {
    std::vector<Vec> r = row;
    for (int j = 0; j < b.ngens; ++j) r.push_back(a.base.zero());
    m.relations.push_back(r);
  }
  for (const auto& row : b.relations) {
    std::vector<Vec> r;
    for (int j = 0; j < a.ngens; ++j) r.push_back(a.base.zero());
    r.insert(r.end(), row.begin(), row.end());
    m.relations.push_back(r);
  }
  return m;
}

FinModule free_module(const FiniteRing& r, int rank) { return FinModule{r, rank, {}}; }

FinModule ideal_as_module(const FiniteRing& r, const RowSpan& ideal) {
  LocalInfo info = local_info(r);
  Mat gens = minimal_generators(r, info, ideal);
  const int g = static_cast<int>(gens.size());
  const int n = r.dim();
  // syzygies: coefficient vectors (c_1..c_g) in R^g with sum c_j gens_j = 0
  Mat images;
  for (int j = 0; j < g; ++j)
    for (int i = 0; i < n; ++i) images.push_back(r.mul_basis_left(i, gens[j]));
  RowSpan syz = kernel_mod(r.zmod(), images, r.relations().rows(), n).plus(block_relations(r, g));
  // minimal R-generators of the syzygy module via Nakayama
  FinModule m{r, g, {}};
  RowSpan cur(r.zmod(), g * n, block_relations(r, g));
  for (const auto& mrow : info.maximal.rows())
    for (const auto& srow : syz.rows()) {
      Vec v(static_cast<std::size_t>(g) * n, 0);
      for (int j = 0; j < g; ++j) {
        Vec c(srow.begin() + static_cast<std::ptrdiff_t>(j) * n, srow.begin() + static_cast<std::ptrdiff_t>(j + 1) * n);
        Vec p = r.mul(mrow, c);
        std::copy(p.begin(), p.end(), v.begin() + static_cast<std::ptrdiff_t>(j) * n);
      }
      cur.insert(v);
    }
  for (const auto& srow : syz.rows()) {
    if (cur.contains(srow)) continue;
    std::vector<Vec> rel;
    for (int j = 0; j < g; ++j)
      rel.push_back(r.reduce(Vec(srow.begin() + static_cast<std::ptrdiff_t>(j) * n,
                                 srow.begin() + static_cast<std::ptrdiff_t>(j + 1) * n)));
    m.relations.push_back(rel);
    FinModule probe{r, g, m.relations};
    cur = relation_submodule(probe).plus(cur);
  }
  return m;
}

}  // namespace pseudomod
