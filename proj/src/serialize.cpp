#include "pseudomod/serialize.hpp"

namespace pseudomod {

namespace {

[[noreturn]] void bad(const std::string& where, const std::string& what) {
  throw InputError(where + ": " + what);
}

const json& field(const json& j, const char* key, const std::string& where) {
  if (!j.is_object()) bad(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) bad(where, std::string("missing field \"") + key + "\"");
  return *it;
}

Int as_int(const json& j, const std::string& where) {
  if (!j.is_number_integer()) bad(where, "expected an integer");
  return j.get<Int>();
}

int as_small(const json& j, const std::string& where, int lo, int hi) {
  Int v = as_int(j, where);
  if (v < lo || v > hi) bad(where, "value " + std::to_string(v) + " out of range [" + std::to_string(lo) + ", " +
                                       std::to_string(hi) + "]");
  return static_cast<int>(v);
}

Vec int_list(const json& j, std::size_t n, const std::string& where) {
  if (!j.is_array()) bad(where, "expected an array");
  if (j.size() != n) bad(where, "expected " + std::to_string(n) + " entries, got " + std::to_string(j.size()));
  Vec v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(as_int(j[i], where + "[" + std::to_string(i) + "]"));
  return v;
}

Zmod zmod_from_char(Int q, const std::string& where) {
  if (q < 3) bad(where, "characteristic must be an odd prime power");
  Int p = 2;
  while (q % p != 0) ++p;
  int k = 0;
  Int m = q;
  while (m % p == 0) {
    m /= p;
    ++k;
  }
  if (m != 1) bad(where, std::to_string(q) + " is not a prime power");
  if (p == 2) bad(where, "characteristic must be odd");
  return Zmod(p, k);
}

}  // namespace

json vec_to_json(const Vec& v) { return json(v); }

json ring_to_json(const FiniteRing& r) {
  const int n = r.dim();
  json mul = json::array();
  for (int i = 0; i < n; ++i) {
    json row = json::array();
    for (int j = 0; j < n; ++j) row.push_back(vec_to_json(r.table_entry(i, j)));
    mul.push_back(row);
  }
  json out = {{"schema", kRingSchema}, {"char", r.zmod().modulus()}, {"basis", n}, {"mul", mul},
              {"one", vec_to_json(r.one())}};
  if (!r.relations().is_zero()) out["rel"] = json(r.relations().rows());
  return out;
}

FiniteRing ring_from_json(const json& j, const std::string& where) {
  if (j.contains("schema") && j["schema"] != kRingSchema) bad(where + ".schema", "unsupported ring schema");
  Zmod z = zmod_from_char(as_int(field(j, "char", where), where + ".char"), where + ".char");
  const int n = as_small(field(j, "basis", where), where + ".basis", 1, 256);
  const json& mul = field(j, "mul", where);
  if (!mul.is_array() || mul.size() != static_cast<std::size_t>(n)) bad(where + ".mul", "expected n rows");
  Mat table;
  for (int a = 0; a < n; ++a) {
    const std::string wa = where + ".mul[" + std::to_string(a) + "]";
    if (!mul[a].is_array() || mul[a].size() != static_cast<std::size_t>(n)) bad(wa, "expected n entries");
    for (int b = 0; b < n; ++b) {
      Vec v = int_list(mul[a][b], n, wa + "[" + std::to_string(b) + "]");
      for (auto& c : v) c = z.reduce(c);
      table.push_back(v);
    }
  }
  Vec one = int_list(field(j, "one", where), n, where + ".one");
  for (auto& c : one) c = z.reduce(c);
  Mat rel;
  if (j.contains("rel")) {
    const json& rj = j["rel"];
    if (!rj.is_array()) bad(where + ".rel", "expected an array of rows");
    for (std::size_t i = 0; i < rj.size(); ++i) rel.push_back(int_list(rj[i], n, where + ".rel[" + std::to_string(i) + "]"));
  }
  Algebra a(z, n, rel, table, one);
  std::string err = check_algebra_axioms(a);
  if (!err.empty()) bad(where, err);
  if (!a.is_commutative()) bad(where, "coefficient rings must be commutative");
  return a;
}

Vec element_from_json(const FiniteRing& r, const json& j, const std::string& where) {
  if (j.is_number_integer()) return r.scale(r.zmod().reduce(j.get<Int>()), r.one());
  Vec v = int_list(j, static_cast<std::size_t>(r.dim()), where);
  for (auto& c : v) c = r.zmod().reduce(c);
  return r.reduce(v);
}

json ideal_to_json(const FiniteRing& r, const RowSpan& ideal) {
  return {{"rows", json(ideal.rows())}, {"log_size", ideal.log_size() - r.relations().log_size()}};
}

Mat rows_from_json(const FiniteRing& r, const json& j, const std::string& where) {
  if (!j.is_array()) bad(where, "expected an array of rows");
  Mat out;
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(element_from_json(r, j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

FiniteGroup group_from_json(const json& j, const std::string& where) {
  if (!j.is_object()) bad(where, "expected an object");
  if (!j.contains("kind") || !j["kind"].is_string()) bad(where, "missing string field \"kind\"");
  const std::string kind = j["kind"];
  const int max = FiniteGroup::kDefaultMaxOrder;
  if (kind == "cyclic") return cyclic_group(as_small(field(j, "n", where), where + ".n", 1, max));
  if (kind == "dihedral") return dihedral_group(as_small(field(j, "n", where), where + ".n", 2, max / 2));
  if (kind == "s3") return symmetric_group_s3();
  if (kind == "quaternion") return quaternion_group();
  if (kind == "permutation") {
    const json& gens = field(j, "generators", where);
    if (!gens.is_array() || gens.empty()) bad(where + ".generators", "expected a nonempty array");
    std::vector<std::vector<int>> perms;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const std::string w = where + ".generators[" + std::to_string(i) + "]";
      if (!gens[i].is_array()) bad(w, "expected a permutation");
      std::vector<int> perm;
      for (const auto& x : gens[i]) perm.push_back(as_small(x, w, 0, 15));
      perms.push_back(perm);
    }
    return permutation_group(perms);
  }
  if (kind == "table") {
    const json& t = field(j, "table", where);
    if (!t.is_array() || t.empty() || t.size() > static_cast<std::size_t>(max)) bad(where + ".table", "bad size");
    const int n = static_cast<int>(t.size());
    std::vector<std::vector<int>> table;
    for (int a = 0; a < n; ++a) {
      const std::string w = where + ".table[" + std::to_string(a) + "]";
      if (!t[a].is_array() || t[a].size() != static_cast<std::size_t>(n)) bad(w, "expected a full row");
      std::vector<int> row;
      for (const auto& x : t[a]) row.push_back(as_small(x, w, 0, n - 1));
      table.push_back(row);
    }
    std::vector<int> gens;
    for (const auto& x : field(j, "generators", where)) gens.push_back(as_small(x, where + ".generators", 0, n - 1));
    return FiniteGroup(table, gens);
  }
  bad(where + ".kind", "unknown group kind \"" + kind + "\"");
}

json group_to_json(const FiniteGroup& g) {
  return {{"kind", "table"}, {"table", g.table()}, {"generators", g.generators()}};
}

}  // namespace pseudomod
