#include "pseudomod/algebra.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace pseudomod {

// ---------------------------------------------------------------- Algebra

Algebra::Algebra(const Zmod& z, int dim, const Mat& relations, Mat table, Vec one)
    : z_(z), n_(dim), rel_(z, dim, relations) {
  if (dim < 0) throw InputError("Algebra: negative dimension");
  if (table.size() != static_cast<std::size_t>(dim) * dim)
    throw InputError("Algebra: structure table has wrong size");
  for (auto& e : table) {
    if (static_cast<int>(e.size()) != dim) throw InputError("Algebra: structure constant has wrong length");
    for (auto& x : e) x = z.reduce(x);
  }
  if (static_cast<int>(one.size()) != dim) throw InputError("Algebra: unit has wrong length");
  table_ = std::make_shared<const Mat>(std::move(table));
  one_ = rel_.reduce(one);
}

Vec Algebra::add(const Vec& a, const Vec& b) const {
  Vec r(n_);
  for (int i = 0; i < n_; ++i) r[i] = a[i] + b[i];
  return reduce(r);
}

Vec Algebra::sub(const Vec& a, const Vec& b) const {
  Vec r(n_);
  for (int i = 0; i < n_; ++i) r[i] = a[i] - b[i];
  return reduce(r);
}

Vec Algebra::neg(const Vec& a) const {
  Vec r(n_);
  for (int i = 0; i < n_; ++i) r[i] = -a[i];
  return reduce(r);
}

Vec Algebra::scale(Int c, const Vec& a) const {
  Vec r(n_);
  c = z_.reduce(c);
  for (int i = 0; i < n_; ++i) r[i] = z_.mul(c, a[i]);
  return reduce(r);
}

Vec Algebra::mul(const Vec& a, const Vec& b) const {
  const Int m = z_.modulus();
  Vec r(n_, 0);
  for (int i = 0; i < n_; ++i) {
    const Int ai = z_.reduce(a[i]);
    if (ai == 0) continue;
    for (int j = 0; j < n_; ++j) {
      const Int bj = z_.reduce(b[j]);
      if (bj == 0) continue;
      const Int c = ai * bj % m;
      const Vec& t = table_entry(i, j);
      for (int l = 0; l < n_; ++l)
        if (t[l] != 0) r[l] = (r[l] + c * t[l]) % m;
    }
  }
  return reduce(r);
}

Vec Algebra::mul_basis_left(int i, const Vec& b) const {
  const Int m = z_.modulus();
  Vec r(n_, 0);
  for (int j = 0; j < n_; ++j) {
    const Int bj = z_.reduce(b[j]);
    if (bj == 0) continue;
    const Vec& t = table_entry(i, j);
    for (int l = 0; l < n_; ++l)
      if (t[l] != 0) r[l] = (r[l] + bj * t[l]) % m;
  }
  return reduce(r);
}

Vec Algebra::mul_basis_right(const Vec& a, int j) const {
  const Int m = z_.modulus();
  Vec r(n_, 0);
  for (int i = 0; i < n_; ++i) {
    const Int ai = z_.reduce(a[i]);
    if (ai == 0) continue;
    const Vec& t = table_entry(i, j);
    for (int l = 0; l < n_; ++l)
      if (t[l] != 0) r[l] = (r[l] + ai * t[l]) % m;
  }
  return reduce(r);
}

Vec Algebra::pow(const Vec& a, Int e) const {
  Vec result = one_;
  Vec base = reduce(a);
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    e >>= 1;
    if (e > 0) base = mul(base, base);
  }
  return result;
}

bool Algebra::is_commutative() const {
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if (!is_zero(Vec(sub(table_entry(i, j), table_entry(j, i))))) return false;
  return true;
}

Algebra Algebra::with_relations(const RowSpan& ideal) const {
  Algebra a = *this;
  a.rel_ = ideal.plus(rel_);
  a.one_ = a.rel_.reduce(one_);
  return a;
}

std::string check_algebra_axioms(const Algebra& a) {
  const int n = a.dim();
  for (const auto& r : a.relations().rows())
    for (int j = 0; j < n; ++j) {
      if (!a.is_zero(a.mul_basis_right(r, j)) || !a.is_zero(a.mul_basis_left(j, r)))
        return "relations are not an ideal for the structure constants";
    }
  for (int i = 0; i < n; ++i) {
    Vec e = a.basis(i);
    if (!a.equal(a.mul(a.one(), e), e) || !a.equal(a.mul(e, a.one()), e))
      return "unit law fails on basis vector " + std::to_string(i);
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Vec ij = a.table_entry(i, j);
      for (int k = 0; k < n; ++k) {
        Vec lhs = a.mul_basis_right(ij, k);
        Vec rhs = a.mul_basis_left(i, a.table_entry(j, k));
        if (!a.equal(lhs, rhs))
          return "associativity fails on (" + std::to_string(i) + "," + std::to_string(j) + "," +
                 std::to_string(k) + ")";
      }
    }
  return "";
}

// ---------------------------------------------------------------- RingHom

RingHom::RingHom(Algebra src, Algebra dst, Mat images)
    : src_(std::move(src)), dst_(std::move(dst)), images_(std::move(images)) {
  if (!(src_.zmod() == dst_.zmod())) throw InputError("RingHom: coefficient rings differ");
  if (static_cast<int>(images_.size()) != src_.dim()) throw InputError("RingHom: wrong number of images");
  for (auto& v : images_) {
    if (static_cast<int>(v.size()) != dst_.dim()) throw InputError("RingHom: image has wrong length");
    v = dst_.reduce(v);
  }
}

Vec RingHom::apply(const Vec& a) const {
  const Zmod& z = dst_.zmod();
  Vec r(dst_.dim(), 0);
  for (int i = 0; i < src_.dim(); ++i) {
    const Int ai = z.reduce(a[i]);
    if (ai == 0) continue;
    for (int l = 0; l < dst_.dim(); ++l) r[l] = (r[l] + ai * images_[i][l]) % z.modulus();
  }
  return dst_.reduce(r);
}

RowSpan RingHom::kernel() const {
  return kernel_mod(src_.zmod(), images_, dst_.relations().rows(), dst_.dim()).plus(src_.relations());
}

RowSpan RingHom::image() const { return dst_.relations().plus(images_); }

bool RingHom::is_surjective() const { return image().log_size() == dst_.dim() * dst_.zmod().exponent(); }

RowSpan RingHom::preimage(const RowSpan& ideal) const {
  return kernel_mod(src_.zmod(), images_, ideal.plus(dst_.relations()).rows(), dst_.dim())
      .plus(src_.relations());
}

RingHom RingHom::into(const Algebra& dst_quotient) const { return RingHom(src_, dst_quotient, images_); }

RingHom RingHom::from(const Algebra& src_quotient) const {
  RowSpan ker = kernel();
  if (!ker.contains(src_quotient.relations())) throw InputError("RingHom::from: map does not descend");
  return RingHom(src_quotient, dst_, images_);
}

std::string RingHom::check() const {
  for (const auto& r : src_.relations().rows())
    if (!dst_.is_zero(apply(r))) return "not well defined on relations";
  if (!dst_.equal(apply(src_.one()), dst_.one())) return "not unital";
  for (int i = 0; i < src_.dim(); ++i)
    for (int j = 0; j < src_.dim(); ++j)
      if (!dst_.equal(apply(src_.table_entry(i, j)), dst_.mul(images_[i], images_[j])))
        return "not multiplicative on (" + std::to_string(i) + "," + std::to_string(j) + ")";
  return "";
}

RingHom compose(const RingHom& g, const RingHom& f) {
  Mat imgs;
  for (const auto& v : f.images()) imgs.push_back(g.apply(v));
  return RingHom(f.src(), g.dst(), imgs);
}

RingHom identity_hom(const Algebra& a) { return RingHom(a, a, identity_matrix(a.dim())); }

Vec AssocAlgebra::embed(const Vec& a) const {
  const Zmod& z = alg.zmod();
  Vec r(alg.dim(), 0);
  for (int i = 0; i < base.dim(); ++i) {
    const Int ai = z.reduce(a[i]);
    if (ai == 0) continue;
    for (int l = 0; l < alg.dim(); ++l) r[l] = (r[l] + ai * structure[i][l]) % z.modulus();
  }
  return alg.reduce(r);
}

// ---------------------------------------------------------------- constructors

FiniteRing zmod_ring(Int p, int k) {
  Zmod z(p, k);
  return FiniteRing(z, 1, {}, {{1}}, {1});
}

FiniteRing zero_ring_like(const Zmod& z) { return FiniteRing(z, 1, {{1}}, {{1}}, {1}); }

Extension extension(const FiniteRing& base, const std::vector<Vec>& low) {
  const int d = static_cast<int>(low.size());
  if (d < 1) throw InputError("extension: polynomial must have degree at least 1");
  const int nb = base.dim();
  const int n = nb * d;
  const Zmod& z = base.zmod();
  // powers[s][j]: coefficient of x^j in x^s mod f
  std::vector<std::vector<Vec>> powers;
  std::vector<Vec> cur(d, base.zero());
  cur[0] = base.one();
  for (int s = 0; s <= 2 * d - 2; ++s) {
    powers.push_back(cur);
    std::vector<Vec> next(d, base.zero());
    for (int j = 0; j + 1 < d; ++j) next[j + 1] = cur[j];
    for (int j = 0; j < d; ++j) next[j] = base.sub(next[j], base.mul(cur[d - 1], low[j]));
    cur = next;
  }
  Mat rel;
  for (const auto& r : base.relations().rows())
    for (int j = 0; j < d; ++j) {
      Vec v(n, 0);
      for (int i = 0; i < nb; ++i) v[j * nb + i] = r[i];
      rel.push_back(v);
    }
  Mat table(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < d; ++a)
    for (int i = 0; i < nb; ++i)
      for (int b = 0; b < d; ++b)
        for (int j = 0; j < nb; ++j) {
          const Vec& c = base.table_entry(i, j);
          Vec v(n, 0);
          for (int jj = 0; jj < d; ++jj) {
            Vec coef = base.mul(c, powers[a + b][jj]);
            for (int l = 0; l < nb; ++l) v[jj * nb + l] = coef[l];
          }
          table[static_cast<std::size_t>(a * nb + i) * n + (b * nb + j)] = v;
        }
  Vec one(n, 0);
  for (int i = 0; i < nb; ++i) one[i] = base.one()[i];
  FiniteRing ring(z, n, rel, std::move(table), one);
  Vec x(n, 0);
  if (d >= 2) {
    for (int i = 0; i < nb; ++i) x[nb + i] = base.one()[i];
  } else {
    Vec mx = base.neg(low[0]);
    for (int i = 0; i < nb; ++i) x[i] = mx[i];
  }
  x = ring.reduce(x);
  Mat inc;
  for (int i = 0; i < nb; ++i) inc.push_back(unit_vec(n, i));
  RingHom inclusion(base, ring, inc);
  return Extension{ring, x, inclusion};
}

RingHom extension_hom(const Extension& ext, const RingHom& base_map, const Vec& x_image) {
  const Algebra& dst = base_map.dst();
  const int nb = base_map.src().dim();
  const int d = ext.ring.dim() / nb;
  Mat imgs(ext.ring.dim());
  Vec xp = dst.one();
  for (int a = 0; a < d; ++a) {
    for (int i = 0; i < nb; ++i) imgs[a * nb + i] = dst.mul(base_map.images()[i], xp);
    xp = dst.mul(xp, x_image);
  }
  RingHom h(ext.ring, dst, imgs);
  std::string err = h.check();
  if (!err.empty()) throw InputError("extension_hom: " + err);
  return h;
}

Vec ProductRing::pair(const Vec& a, const Vec& b) const {
  Vec r = a;
  r.insert(r.end(), b.begin(), b.end());
  return ring.reduce(r);
}

ProductRing product_ring(const Algebra& a, const Algebra& b) {
  if (!(a.zmod() == b.zmod())) throw InputError("product_ring: coefficient rings differ");
  const int na = a.dim(), nb = b.dim(), n = na + nb;
  Mat rel;
  for (const auto& r : a.relations().rows()) {
    Vec v(n, 0);
    std::copy(r.begin(), r.end(), v.begin());
    rel.push_back(v);
  }
  for (const auto& r : b.relations().rows()) {
    Vec v(n, 0);
    std::copy(r.begin(), r.end(), v.begin() + na);
    rel.push_back(v);
  }
  Mat table(static_cast<std::size_t>(n) * n, Vec(n, 0));
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < na; ++j) {
      const Vec& t = a.table_entry(i, j);
      std::copy(t.begin(), t.end(), table[static_cast<std::size_t>(i) * n + j].begin());
    }
  for (int i = 0; i < nb; ++i)
    for (int j = 0; j < nb; ++j) {
      const Vec& t = b.table_entry(i, j);
      std::copy(t.begin(), t.end(), table[static_cast<std::size_t>(na + i) * n + na + j].begin() + na);
    }
  Vec one = a.one();
  one.insert(one.end(), b.one().begin(), b.one().end());
  Algebra ring(a.zmod(), n, rel, std::move(table), one);
  Mat p1, p2;
  for (int i = 0; i < n; ++i) {
    p1.push_back(i < na ? unit_vec(na, i) : a.zero());
    p2.push_back(i < na ? b.zero() : unit_vec(nb, i - na));
  }
  return ProductRing{ring, RingHom(ring, a, p1), RingHom(ring, b, p2)};
}

Subalgebra subalgebra(const Algebra& parent, const Mat& gens) {
  const Zmod& z = parent.zmod();
  const int m = static_cast<int>(gens.size());
  LinearSolver solver(z, gens, parent.relations().rows(), parent.dim());
  Mat table;
  table.reserve(static_cast<std::size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      auto c = solver.solve(parent.mul(gens[i], gens[j]));
      if (!c) throw InputError("subalgebra: generators are not multiplicatively closed");
      table.push_back(*c);
    }
  auto one = solver.solve(parent.one());
  if (!one) throw InputError("subalgebra: unit not in span");
  Algebra alg(z, m, solver.kernel().rows(), std::move(table), *one);
  return Subalgebra{alg, RingHom(alg, parent, gens)};
}

FiberProduct fiber_product(const RingHom& f, const RingHom& g) {
  if (f.dst().dim() != g.dst().dim() || f.dst().relations() != g.dst().relations())
    throw InputError("fiber_product: maps have different targets");
  if (!f.is_surjective() || !g.is_surjective()) throw InputError("fiber_product: maps must be surjective");
  ProductRing prod = product_ring(f.src(), g.src());
  const Algebra& c = f.dst();
  Mat imgs = f.images();
  for (const auto& v : g.images()) imgs.push_back(c.neg(v));
  RowSpan ker = kernel_mod(c.zmod(), imgs, c.relations().rows(), c.dim());
  Mat gens;
  for (const auto& r : ker.rows()) {
    Vec v = prod.ring.reduce(r);
    if (!is_zero_vec(v)) gens.push_back(v);
  }
  Subalgebra sub = subalgebra(prod.ring, gens);
  return FiberProduct{sub.alg, compose(prod.pr1, sub.embedding), compose(prod.pr2, sub.embedding),
                      sub.embedding};
}

// ---------------------------------------------------------------- ideals

RowSpan zero_ideal(const Algebra& r) { return r.relations(); }

RowSpan unit_ideal(const Algebra& r) { return RowSpan(r.zmod(), r.dim(), identity_matrix(r.dim())); }

bool is_unit_ideal(const Algebra& r, const RowSpan& i) { return i.contains(r.one()); }

bool is_zero_ideal(const Algebra& r, const RowSpan& i) { return r.relations().contains(i); }

RowSpan additive_span(const Algebra& r, const Mat& gens) { return r.relations().plus(gens); }

RowSpan ideal_closure(const Algebra& r, const Mat& gens) {
  RowSpan span = additive_span(r, gens);
  const bool comm = r.is_commutative();
  std::deque<Vec> queue;
  for (const auto& g : gens) queue.push_back(r.reduce(g));
  while (!queue.empty()) {
    Vec v = std::move(queue.front());
    queue.pop_front();
    if (r.is_zero(v)) continue;
    for (int i = 0; i < r.dim(); ++i) {
      Vec w = r.mul_basis_left(i, v);
      if (span.insert(w)) queue.push_back(w);
      if (!comm) {
        Vec u = r.mul_basis_right(v, i);
        if (span.insert(u)) queue.push_back(u);
      }
    }
  }
  return span;
}

RowSpan ideal_sum(const RowSpan& a, const RowSpan& b) { return a.plus(b); }

Mat ideal_generators(const Algebra& r, const RowSpan& ideal) {
  Mat out;
  for (const auto& row : ideal.rows()) {
    Vec v = r.reduce(row);
    if (!is_zero_vec(v)) out.push_back(v);
  }
  return out;
}

RowSpan ideal_product(const Algebra& r, const RowSpan& a, const RowSpan& b) {
  Mat ga = ideal_generators(r, a), gb = ideal_generators(r, b);
  Mat prods;
  for (const auto& x : ga)
    for (const auto& y : gb) prods.push_back(r.mul(x, y));
  return ideal_closure(r, prods);
}

RowSpan ideal_power(const Algebra& r, const RowSpan& a, int e) {
  RowSpan out = unit_ideal(r);
  for (int i = 0; i < e; ++i) out = ideal_product(r, out, a);
  return out;
}

RowSpan annihilator_of_elements(const FiniteRing& r, const Mat& elems) {
  const int n = r.dim();
  const int s = static_cast<int>(elems.size());
  if (s == 0) return unit_ideal(r);
  Mat images;
  for (int i = 0; i < n; ++i) {
    Vec row;
    row.reserve(static_cast<std::size_t>(n) * s);
    for (const auto& g : elems) {
      Vec p = r.mul_basis_left(i, g);
      row.insert(row.end(), p.begin(), p.end());
    }
    images.push_back(row);
  }
  Mat rel;
  for (int b = 0; b < s; ++b)
    for (const auto& rr : r.relations().rows()) {
      Vec v(static_cast<std::size_t>(n) * s, 0);
      std::copy(rr.begin(), rr.end(), v.begin() + static_cast<std::ptrdiff_t>(b) * n);
      rel.push_back(v);
    }
  return kernel_mod(r.zmod(), images, rel, n * s).plus(r.relations());
}

RowSpan annihilator(const FiniteRing& r, const RowSpan& ideal) {
  if (is_local(r)) {
    LocalInfo info = local_info(r);
    return annihilator_of_elements(r, minimal_generators(r, info, ideal));
  }
  return annihilator_of_elements(r, ideal_generators(r, ideal));
}

Algebra quotient_ring(const Algebra& r, const RowSpan& ideal) { return r.with_relations(ideal); }

RingHom quotient_map(const Algebra& r, const RowSpan& ideal) {
  return RingHom(r, quotient_ring(r, ideal), identity_matrix(r.dim()));
}

// ---------------------------------------------------------------- local rings

RowSpan radical(const FiniteRing& r) {
  const Zmod& z = r.zmod();
  const int n = r.dim();
  Mat prel = r.relations().rows();
  for (int i = 0; i < n; ++i) {
    Vec v(n, 0);
    v[i] = z.prime();
    prel.push_back(v);
  }
  Algebra rp = r.with_relations(RowSpan(z, n, prel));
  int dim_p = rp.log_size();
  Int e = z.prime();
  while (e < dim_p) e *= z.prime();
  Mat imgs;
  for (int i = 0; i < n; ++i) imgs.push_back(rp.pow(unit_vec(n, i), e));
  return kernel_mod(z, imgs, rp.relations().rows(), n).plus(rp.relations());
}

namespace {

int frobenius_fixed_log(const Algebra& reduced) {
  const Zmod& z = reduced.zmod();
  Mat imgs;
  for (int i = 0; i < reduced.dim(); ++i) {
    Vec e = unit_vec(reduced.dim(), i);
    imgs.push_back(reduced.sub(reduced.pow(e, z.prime()), e));
  }
  RowSpan fixed = kernel_mod(z, imgs, reduced.relations().rows(), reduced.dim()).plus(reduced.relations());
  return fixed.log_size() - reduced.relations().log_size();
}

}  // namespace

bool is_local(const FiniteRing& r) {
  if (r.is_zero_ring()) return false;
  Algebra red = r.with_relations(radical(r));
  return frobenius_fixed_log(red) == 1;
}

LocalInfo local_info(const FiniteRing& r) {
  if (r.is_zero_ring()) throw InputError("local_info: zero ring");
  RowSpan m = radical(r);
  Algebra res = r.with_relations(m);
  if (frobenius_fixed_log(res) != 1) throw InputError("local_info: ring is not local");
  int f = res.log_size();
  Int q = 1;
  for (int i = 0; i < f; ++i) q *= r.zmod().prime();
  return LocalInfo{m, res, f, q};
}

int length_from_log(const LocalInfo& info, int log_p_size) {
  if (log_p_size % info.degree != 0) throw InvariantFailure("length: size is not a power of the residue field order");
  return log_p_size / info.degree;
}

int ideal_quotient_length(const FiniteRing&, const LocalInfo& info, const RowSpan& i, const RowSpan& j) {
  return length_from_log(info, i.log_size() - j.log_size());
}

Mat minimal_generators(const FiniteRing& r, const LocalInfo& info, const RowSpan& ideal) {
  RowSpan cur = ideal_product(r, info.maximal, ideal);
  Mat gens;
  for (const auto& row : ideal.rows()) {
    if (cur == ideal) break;
    if (cur.contains(row)) continue;
    Vec g = r.reduce(row);
    Mat all = cur.rows();
    all.push_back(g);
    cur = ideal_closure(r, all);
    gens.push_back(g);
  }
  if (cur != ideal) throw InvariantFailure("minimal_generators: generators do not span the ideal");
  return gens;
}

int minimal_generator_count(const FiniteRing& r, const RowSpan& ideal) {
  LocalInfo info = local_info(r);
  return static_cast<int>(minimal_generators(r, info, ideal).size());
}

int embedding_dimension(const FiniteRing& r) {
  LocalInfo info = local_info(r);
  RowSpan m2 = ideal_product(r, info.maximal, info.maximal);
  return ideal_quotient_length(r, info, info.maximal, m2);
}

bool gorenstein_test(const FiniteRing& r) {
  LocalInfo info = local_info(r);
  RowSpan soc = annihilator_of_elements(r, minimal_generators(r, info, info.maximal));
  return ideal_quotient_length(r, info, soc, r.relations()) == 1;
}

std::vector<RowSpan> maximal_subideals(const FiniteRing& r, const RowSpan& ideal) {
  LocalInfo info = local_info(r);
  Mat b = minimal_generators(r, info, ideal);
  RowSpan mj = ideal_product(r, info.maximal, ideal);
  std::vector<Vec> field = enumerate_elements(info.residue, 1u << 20);
  const int s = static_cast<int>(b.size());
  std::vector<RowSpan> out;
  for (int j = 0; j < s; ++j) {
    const int free = s - 1 - j;
    std::vector<std::size_t> idx(free, 0);
    while (true) {
      Mat gens = mj.rows();
      for (int i = 0; i < j; ++i) gens.push_back(b[i]);
      for (int t = 0; t < free; ++t) {
        int i = j + 1 + t;
        gens.push_back(r.sub(b[i], r.mul(field[idx[t]], b[j])));
      }
      out.push_back(ideal_closure(r, gens));
      int t = 0;
      while (t < free && ++idx[t] == field.size()) idx[t++] = 0;
      if (t == free) break;
    }
  }
  return out;
}

std::vector<RowSpan> all_ideals(const FiniteRing& r, std::size_t budget) {
  std::vector<Vec> elems = enumerate_elements(r, budget);
  std::vector<RowSpan> out{zero_ideal(r)};
  std::set<Mat> seen{zero_ideal(r).rows()};
  for (std::size_t at = 0; at < out.size(); ++at) {
    for (const auto& a : elems) {
      if (out[at].contains(a)) continue;
      Mat gens = out[at].rows();
      gens.push_back(a);
      RowSpan j = ideal_closure(r, gens);
      if (seen.insert(j.rows()).second) {
        out.push_back(j);
        if (out.size() > budget) throw BudgetExceeded("all_ideals: too many ideals");
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const RowSpan& x, const RowSpan& y) {
    if (x.log_size() != y.log_size()) return x.log_size() < y.log_size();
    return x.rows() < y.rows();
  });
  return out;
}

// ---------------------------------------------------------------- elements

std::vector<Vec> enumerate_elements(const Algebra& a, std::size_t budget) {
  const int n = a.dim();
  const Zmod& z = a.zmod();
  const RowSpan& rel = a.relations();
  std::vector<Int> radix(n, z.modulus());
  for (std::size_t i = 0; i < rel.rows().size(); ++i) radix[rel.pivot_col(i)] = z.power_of_p(rel.pivot_val(i));
  std::size_t total = 1;
  for (Int r : radix) {
    if (r == 0) continue;
    if (total > budget / static_cast<std::size_t>(r)) throw BudgetExceeded("enumerate_elements: ring too large");
    total *= static_cast<std::size_t>(r);
  }
  std::vector<Vec> out;
  out.reserve(total);
  Vec v(n, 0);
  // pivot columns with valuation 0 are fixed at zero (radix 1)
  while (true) {
    out.push_back(v);
    int i = n - 1;
    while (i >= 0) {
      if (radix[i] > 1 && ++v[i] < radix[i]) break;
      v[i] = 0;
      --i;
    }
    if (i < 0) break;
  }
  return out;
}

std::optional<Vec> inverse(const Algebra& a, const Vec& x) {
  Mat rows;
  for (int j = 0; j < a.dim(); ++j) rows.push_back(a.mul_basis_right(x, j));
  LinearSolver solver(a.zmod(), rows, a.relations().rows(), a.dim());
  auto y = solver.solve(a.one());
  if (!y) return std::nullopt;
  Vec inv = a.reduce(*y);
  if (!a.equal(a.mul(inv, x), a.one())) return std::nullopt;
  return inv;
}

bool is_unit(const Algebra& a, const Vec& x) { return inverse(a, x).has_value(); }

Vec unit_inverse(const Algebra& a, const Vec& x) {
  auto y = inverse(a, x);
  if (!y) throw InputError("element is not a unit");
  return *y;
}

Vec scalar(const Algebra& a, Int c) { return a.scale(c, a.one()); }

}  // namespace pseudomod
