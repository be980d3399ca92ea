#include "support.hpp"

#include <map>
#include <stdexcept>

#include "rbfam/standard.hpp"

namespace rbfam::testing {

namespace {

HomAlgebra zero_line(const std::string& name, const Scalar& th, const Scalar& p) {
  HomAlgebra a = HomAlgebra::zero(name, {"e"}, FiniteSemigroup::two_element(), Scalar::lambda());
  a.theta(0, 0) = th;
  for (auto& m : a.P) m(0, 0) = p;
  return a;
}

HomAlgebra renamed(HomAlgebra a, const std::string& prefix) {
  for (size_t i = 0; i < a.basis.size(); ++i) a.basis[i] = prefix + std::to_string(i + 1);
  return a;
}

Matrix permutation(const std::vector<size_t>& cols) {
  Matrix t(cols.size(), cols.size());
  for (size_t j = 0; j < cols.size(); ++j) t(cols[j], j) = 1;
  return t;
}

Matrix block(size_t N, size_t from, size_t count) {
  Matrix s(N, count);
  for (size_t j = 0; j < count; ++j) s(from + j, j) = 1;
  return s;
}

bool v_closed(const Host& h) {
  size_t N = h.algebra.dim();
  return check_subalgebra(h.algebra, block(N, h.split, N - h.split)).ok();
}

Host product(const HomAlgebra& a, const HomAlgebra& b, size_t split, const std::vector<size_t>& perm) {
  HomAlgebra e = direct_product(renamed(a, "p"), renamed(b, "q"), "H");
  if (!perm.empty()) e = transport(e, permutation(perm));
  Host h{e, split};
  rename(h);
  return h;
}

// T = [[A, G], [0, H]].
Matrix block_upper(Rng& rng, size_t n, size_t m, bool with_g) {
  Matrix a = random_invertible(rng, n), hm = random_invertible(rng, m);
  Matrix t(n + m, n + m);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) t(i, j) = a(i, j);
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j) t(n + i, n + j) = hm(i, j);
  if (with_g)
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < m; ++j) t(i, n + j) = Scalar(static_cast<long>(rng() % 5) - 2);
  return t;
}

}  // namespace

const std::vector<Scalar>& entry_pool() {
  static const std::vector<Scalar> pool = {0, 1, -1, 2, -2, Scalar::lambda(), -Scalar::lambda()};
  return pool;
}

Scalar sparse_entry(Rng& rng, unsigned density_percent) {
  if (rng() % 100 >= density_percent) return Scalar(0);
  const auto& pool = entry_pool();
  return pool[1 + rng() % (pool.size() - 1)];
}

Matrix random_invertible(Rng& rng, size_t k) {
  for (;;) {
    Matrix m(k, k);
    for (size_t i = 0; i < k; ++i)
      for (size_t j = 0; j < k; ++j) m(i, j) = Scalar(static_cast<long>(rng() % 5) - 2);
    if (inverse(m)) return m;
  }
}

const std::vector<HomAlgebra>& line_seeds() {
  static const std::vector<HomAlgebra> seeds = {
      standard::line_R(), standard::line_B(), zero_line("Z1", 1, 0), zero_line("Z2", 2, -Scalar::lambda())};
  return seeds;
}

const std::vector<Host>& plane_seeds() {
  static const std::vector<Host> seeds = [] {
    std::vector<Host> out;
    HomAlgebra e = standard::plane_E();
    out.push_back({e, 1});
    Matrix t(2, 2);
    t(0, 0) = 1;
    t(0, 1) = -3;
    t(1, 1) = 1;
    out.push_back({transport(e, t), 1});
    for (const auto& a : line_seeds())
      for (const auto& b : line_seeds()) out.push_back(product(a, b, 1, {}));
    for (const auto& fd : reproduce_table3().found) out.push_back({build_unified_product(flag_to_datum(fd)).algebra, 1});
    Rng rng(7);
    for (const auto& row : table2_rows()) {
      FlagDatum fd = flag_from_tuple(standard::line_R(), row.flag(random_params(row, rng)));
      out.push_back({build_unified_product(flag_to_datum(fd)).algebra, 1});
    }
    for (auto& h : out) rename(h);
    return out;
  }();
  return seeds;
}

std::vector<Host> hosts(size_t n, size_t m, bool factorizable) {
  static std::map<std::pair<size_t, size_t>, std::vector<Host>> cache;
  auto key = std::make_pair(n, m);
  if (!cache.count(key)) {
    std::vector<Host> all;
    const auto& lines = line_seeds();
    const auto& planes = plane_seeds();
    if (n == 1 && m == 1) {
      all = planes;
    } else if (n == 1 && m == 2) {
      for (const auto& p : planes)
        for (const auto& s : lines) {
          all.push_back(product(p.algebra, s, 1, {}));
          all.push_back(product(s, p.algebra, 1, {1, 0, 2}));
        }
    } else if (n == 2 && m == 1) {
      for (const auto& p : planes)
        for (const auto& s : lines) {
          all.push_back(product(s, p.algebra, 2, {}));
          all.push_back(product(p.algebra, s, 2, {0, 2, 1}));
        }
    } else if (n == 2 && m == 2) {
      for (size_t i = 0; i < planes.size(); i += 3)
        for (size_t j = 0; j < planes.size(); j += 2)
          all.push_back(product(planes[i].algebra, planes[j].algebra, 2, {0, 2, 1, 3}));
    } else {
      throw std::invalid_argument("hosts: n, m must be 1 or 2");
    }
    cache[key] = all;
  }
  std::vector<Host> out;
  for (const auto& h : cache[key])
    if (!factorizable || v_closed(h)) out.push_back(h);
  return out;
}

void rename(Host& h) {
  for (size_t i = 0; i < h.algebra.dim(); ++i)
    h.algebra.basis[i] = i < h.split ? "a" + std::to_string(i + 1) : "x" + std::to_string(i + 1 - h.split);
}

Host scramble(const Host& h, Rng& rng, bool upper_block) {
  Host out{transport(h.algebra, block_upper(rng, h.split, h.algebra.dim() - h.split, upper_block)), h.split};
  rename(out);
  return out;
}

ExtendingDatum random_valid_datum(Rng& rng, size_t n, size_t m) {
  static std::map<std::pair<size_t, size_t>, std::vector<Host>> pools;
  auto& pool = pools[{n, m}];
  if (pool.empty()) pool = hosts(n, m, false);
  Host h = scramble(pick(rng, pool), rng, true);
  ExtendingDatum d = extension_to_datum(h.algebra, canonical_retraction(n, m));
  d.name = "D";
  return d;
}

ExtendingDatum random_sparse_datum(Rng& rng, size_t n, size_t m) {
  HomAlgebra base;
  if (n == 1) {
    base = pick(rng, line_seeds());
  } else {
    base = pick(rng, plane_seeds()).algebra;
  }
  base = renamed(base, "a");
  std::vector<std::string> vb;
  for (size_t p = 0; p < m; ++p) vb.push_back("x" + std::to_string(p + 1));
  ExtendingDatum d = ExtendingDatum::zero(base, vb, "D");
  for (Bilinear* b : {&d.tri_l, &d.tri_r, &d.harp_r, &d.harp_l, &d.f, &d.mul_V})
    for (size_t i = 0; i < b->left_dim(); ++i)
      for (size_t j = 0; j < b->right_dim(); ++j)
        for (size_t k = 0; k < b->out_dim(); ++k) b->at(i, j, k) = sparse_entry(rng);
  std::vector<Matrix*> mats = {&d.eta, &d.theta_V};
  for (auto& q : d.Q) mats.push_back(&q);
  for (auto& p : d.P_V) mats.push_back(&p);
  for (Matrix* mat : mats)
    for (size_t i = 0; i < mat->rows(); ++i)
      for (size_t j = 0; j < mat->cols(); ++j) (*mat)(i, j) = sparse_entry(rng);
  return d;
}

ExtendingDatum perturb(const ExtendingDatum& src, Rng& rng) {
  ExtendingDatum d = src;
  const auto& pool = entry_pool();
  Scalar delta = pool[1 + rng() % (pool.size() - 1)];
  std::vector<Bilinear*> bil = {&d.tri_l, &d.tri_r, &d.harp_r, &d.harp_l, &d.f, &d.mul_V};
  std::vector<Matrix*> mats = {&d.eta, &d.theta_V};
  for (auto& q : d.Q) mats.push_back(&q);
  for (auto& p : d.P_V) mats.push_back(&p);
  size_t which = rng() % (bil.size() + mats.size());
  if (which < bil.size()) {
    Bilinear* b = bil[which];
    size_t i = rng() % b->left_dim(), j = rng() % b->right_dim(), k = rng() % b->out_dim();
    b->at(i, j, k) += delta;
  } else {
    Matrix* mat = mats[which - bil.size()];
    (*mat)(rng() % mat->rows(), rng() % mat->cols()) += delta;
  }
  return d;
}

std::set<Key> product_keys_of_datum_report(const Report& r) {
  static const std::map<std::string, std::string> to_axiom = [] {
    std::map<std::string, std::string> m = {
        {"R1:left-hom", "hom-assoc"},        {"R1:right-hom", "hom-assoc"}, {"R1:bimodule-compat", "hom-assoc"},
        {"R1:left-rb", "rb-family"},         {"R1:right-rb", "rb-family"},  {"R1:module-theta", "theta-P"},
        {"R17", "theta-P"}};
    for (int i = 2; i <= 12; ++i) m["R" + std::to_string(i)] = "hom-assoc";
    for (int i = 13; i <= 16; ++i) m["R" + std::to_string(i)] = "rb-family";
    return m;
  }();
  std::set<Key> out;
  for (const auto& v : r.items()) {
    auto it = to_axiom.find(v.label);
    if (it == to_axiom.end()) throw std::logic_error("unmapped label " + v.label);
    out.insert({it->second, v.at});
  }
  return out;
}

std::set<Key> keys_of(const Report& r) {
  std::set<Key> out;
  for (const auto& v : r.items()) out.insert({v.label, v.at});
  return out;
}

FlagDatum random_flag(Rng& rng) {
  FlagDatum fd = FlagDatum::zero(standard::line_R());
  fd.l[0] = sparse_entry(rng, 50);
  fd.r[0] = sparse_entry(rng, 50);
  fd.t_r(0, 0) = sparse_entry(rng, 50);
  fd.t_l(0, 0) = sparse_entry(rng, 50);
  fd.a1[0] = sparse_entry(rng, 50);
  fd.k1 = sparse_entry(rng, 50);
  for (auto& b : fd.b) b[0] = sparse_entry(rng, 50);
  for (auto& k : fd.kfam) k = sparse_entry(rng, 50);
  fd.a2[0] = sparse_entry(rng, 50);
  fd.k2 = sparse_entry(rng, 50);
  return fd;
}

FlagDatum random_table2_flag(Rng& rng) {
  const auto& row = pick(rng, table2_rows());
  return flag_from_tuple(standard::line_R(), row.flag(random_params(row, rng)));
}

MatchedPair random_matched_pair(Rng& rng) {
  size_t n = 1 + rng() % 2, m = 1 + rng() % 2;
  static std::map<std::pair<size_t, size_t>, std::vector<Host>> pools;
  auto& pool = pools[{n, m}];
  if (pool.empty()) pool = hosts(n, m, true);
  Host h = scramble(pick(rng, pool), rng, false);
  size_t N = n + m;
  Factorization f = check_factorization(h.algebra, block(N, 0, n), block(N, n, m));
  if (!f.pair) throw std::logic_error("random_matched_pair: host does not factorize");
  return *f.pair;
}

DeformationMap random_deformation(Rng& rng) {
  unsigned kind = rng() % 4;
  if (kind == 0) {
    Scalar tr = pick(rng, std::vector<Scalar>{1, -1, 2, 3, Scalar(1) / 2});
    return deformation_1dim(row10_datum(tr, 1), Scalar(static_cast<long>(rng() % 11) - 5));
  }
  if (kind == 1) {
    Scalar tr = pick(rng, std::vector<Scalar>{1, -1, 2, 3, Scalar(1) / 2});
    return deformation_1dim(row10_datum(tr, Scalar(1) / 2), -tr);
  }
  size_t n = 1 + rng() % 2, m = 1 + rng() % 2;
  static std::map<std::pair<size_t, size_t>, std::vector<Host>> pools;
  auto& pool = pools[{n, m}];
  if (pool.empty()) pool = hosts(n, m, true);
  const Host& h = pick(rng, pool);
  Matrix t = block_upper(rng, n, m, true);
  Host moved{transport(h.algebra, t), n};
  rename(moved);
  Matrix tinv = *inverse(t);
  size_t N = n + m;
  Matrix span(N, m);
  for (size_t i = 0; i < N; ++i)
    for (size_t j = 0; j < m; ++j) span(i, j) = tinv(i, n + j);
  return complement_to_deformation(Complement{UnifiedProduct{moved.algebra, n}, span});
}

Matrix random_retraction(Rng& rng, size_t n, size_t N) {
  Matrix rho(n, N);
  for (size_t i = 0; i < n; ++i) rho(i, i) = 1;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = n; j < N; ++j) rho(i, j) = sparse_entry(rng, 50);
  return rho;
}

ExtendingDatum row10_datum(const Scalar& tr, const Scalar& k2) {
  Params p = {{"tr", tr}, {"k2", k2}};
  return flag_to_datum(flag_from_tuple(standard::line_R(), table2_row("10").flag(p)));
}

}  // namespace rbfam::testing
