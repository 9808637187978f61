// SPDX-License-Identifier: Apache-2.0
#include "dynr/rootsys.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "dynr/errors.hpp"

namespace dynr {

Root operator+(const Root& a, const Root& b) {
  Root r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Root operator-(const Root& a) {
  Root r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

bool is_zero_root(const Root& a) {
  return std::all_of(a.begin(), a.end(), [](int x) { return x == 0; });
}

std::string root_to_string(const Root& a) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < a.size(); ++i) os << (i ? "," : "") << a[i];
  os << "]";
  return os.str();
}

namespace {

struct PositiveRootData {
  std::vector<int> eps;
  Matrix<Rational> e, f;  // raising and (unnormalized) lowering matrices
};

Matrix<Rational> unit(int n, int i, int j) {
  Matrix<Rational> m(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = 1;
  return m;
}

Matrix<Rational> add(Matrix<Rational> a, const Matrix<Rational>& b, int sign) {
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) += sign * b(i, j);
  return a;
}

void validate_type(char type, int rank) {
  const bool ok = (type == 'A' && rank >= 1 && rank <= 8) || (type == 'B' && rank >= 2 && rank <= 6) ||
                  (type == 'C' && rank >= 2 && rank <= 6) || (type == 'D' && rank >= 3 && rank <= 6);
  if (!ok)
    throw InvalidInput("unsupported root system " + std::string(1, type) + std::to_string(rank));
}

int matrix_size(char type, int n) {
  switch (type) {
    case 'A': return n + 1;
    case 'B': return 2 * n + 1;
    default: return 2 * n;
  }
}

int epsilon_dim(char type, int n) { return type == 'A' ? n + 1 : n; }

std::vector<PositiveRootData> positive_root_data(char type, int n) {
  std::vector<PositiveRootData> out;
  const int N = matrix_size(type, n);
  const int dim = epsilon_dim(type, n);
  auto eps = [&](int i, int si, int j, int sj) {
    std::vector<int> v(static_cast<std::size_t>(dim), 0);
    v[static_cast<std::size_t>(i)] += si;
    if (j >= 0) v[static_cast<std::size_t>(j)] += sj;
    return v;
  };
  if (type == 'A') {
    for (int i = 0; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) out.push_back({eps(i, 1, j, -1), unit(N, i, j), unit(N, j, i)});
    return out;
  }
  const int off = type == 'B' ? 1 : 0;
  auto p = [&](int i) { return off + i; };
  auto q = [&](int i) { return off + n + i; };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      // e_i - e_j
      out.push_back({eps(i, 1, j, -1), add(unit(N, p(i), p(j)), unit(N, q(j), q(i)), -1),
                     add(unit(N, p(j), p(i)), unit(N, q(i), q(j)), -1)});
      // e_i + e_j
      if (type == 'C')
        out.push_back({eps(i, 1, j, 1), add(unit(N, p(i), q(j)), unit(N, p(j), q(i)), 1),
                       add(unit(N, q(i), p(j)), unit(N, q(j), p(i)), 1)});
      else
        out.push_back({eps(i, 1, j, 1), add(unit(N, p(i), q(j)), unit(N, p(j), q(i)), -1),
                       add(unit(N, q(j), p(i)), unit(N, q(i), p(j)), -1)});
    }
  for (int i = 0; i < n; ++i) {
    if (type == 'B')
      out.push_back({eps(i, 1, -1, 0), add(unit(N, p(i), 0), unit(N, 0, q(i)), -1),
                     add(unit(N, 0, p(i)), unit(N, q(i), 0), -1)});
    if (type == 'C') out.push_back({eps(i, 2, -1, 0), unit(N, p(i), q(i)), unit(N, q(i), p(i))});
  }
  return out;
}

std::vector<std::vector<int>> simple_epsilon(char type, int n) {
  const int dim = epsilon_dim(type, n);
  std::vector<std::vector<int>> s;
  for (int i = 0; i < n; ++i) {
    std::vector<int> v(static_cast<std::size_t>(dim), 0);
    if (type == 'A' || i < n - 1) {
      v[static_cast<std::size_t>(i)] = 1;
      v[static_cast<std::size_t>(i + 1)] = -1;
    } else if (type == 'B') {
      v[static_cast<std::size_t>(i)] = 1;
    } else if (type == 'C') {
      v[static_cast<std::size_t>(i)] = 2;
    } else {
      v[static_cast<std::size_t>(i - 1)] = 1;
      v[static_cast<std::size_t>(i)] = 1;
    }
    s.push_back(v);
  }
  return s;
}

Root epsilon_to_simple(const std::vector<std::vector<int>>& simple_eps, const std::vector<int>& v) {
  const std::size_t n = simple_eps.size(), dim = v.size();
  Matrix<Rational> a(dim, n);
  std::vector<Rational> b(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < n; ++j) a(i, j) = simple_eps[j][i];
    b[i] = v[i];
  }
  const auto x = solve(a, b);
  Root r(n);
  for (std::size_t j = 0; j < n; ++j) {
    if (x[j].get_den() != 1) throw std::logic_error("root is not an integral combination");
    r[j] = static_cast<int>(x[j].get_num().get_si());
  }
  return r;
}

int height(const Root& r) {
  int h = 0;
  for (int x : r) h += x;
  return h;
}

Rational eps_scale(char type) { return type == 'C' ? Rational(1, 2) : Rational(1); }

}  // namespace

RootSystem::RootSystem(char type, int rank) : type_(type), rank_(rank) {
  validate_type(type, rank);
  const auto data = positive_root_data(type, rank);
  const auto seps = simple_epsilon(type, rank);
  std::vector<std::pair<Root, std::vector<int>>> pos;
  for (const auto& d : data) pos.emplace_back(epsilon_to_simple(seps, d.eps), d.eps);
  std::sort(pos.begin(), pos.end(), [](const auto& a, const auto& b) {
    const int ha = height(a.first), hb = height(b.first);
    if (ha != hb) return ha < hb;
    return a.first > b.first;
  });
  for (const auto& [r, e] : pos) {
    roots_.push_back(r);
    eps_.push_back(e);
  }
  for (const auto& [r, e] : pos) {
    roots_.push_back(-r);
    std::vector<int> ne = e;
    for (auto& x : ne) x = -x;
    eps_.push_back(ne);
  }
  for (std::size_t i = 0; i < roots_.size(); ++i) index_[roots_[i]] = i;
  const std::size_t n = static_cast<std::size_t>(rank);
  gram_ = Matrix<Rational>(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Rational s = 0;
      for (std::size_t k = 0; k < seps[i].size(); ++k) s += seps[i][k] * seps[j][k];
      gram_(i, j) = s * eps_scale(type);
    }
}

std::vector<Root> RootSystem::simple_roots() const {
  std::vector<Root> s;
  for (int i = 0; i < rank_; ++i) {
    Root r(static_cast<std::size_t>(rank_), 0);
    r[static_cast<std::size_t>(i)] = 1;
    s.push_back(r);
  }
  return s;
}

std::vector<Root> RootSystem::positive_roots() const {
  return {roots_.begin(), roots_.begin() + static_cast<std::ptrdiff_t>(roots_.size() / 2)};
}

std::optional<std::size_t> RootSystem::index_of(const Root& r) const {
  auto it = index_.find(r);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t RootSystem::require(const Root& r) const {
  if (r.size() != static_cast<std::size_t>(rank_))
    throw InvalidInput("root " + root_to_string(r) + " has wrong length for " + label());
  if (auto i = index_of(r)) return *i;
  throw InvalidInput(root_to_string(r) + " is not a root of " + label());
}

bool RootSystem::is_positive(const Root& r) const {
  return std::all_of(r.begin(), r.end(), [](int x) { return x >= 0; }) && !is_zero_root(r);
}

Rational RootSystem::inner(const Root& a, const Root& b) const {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      if (a[i] && b[j]) s += gram_(i, j) * a[i] * b[j];
  return s;
}

Root RootSystem::reflect(const Root& a, const Root& b) const {
  const Rational c = 2 * inner(b, a) / inner(a, a);
  if (c.get_den() != 1) throw std::logic_error("non-integral Cartan number");
  const int k = static_cast<int>(c.get_num().get_si());
  Root r = b;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= k * a[i];
  return r;
}

RootSystem build_root_system(char type, int rank) { return RootSystem(type, rank); }

Rational MatrixModel::form(const Matrix<Rational>& x, const Matrix<Rational>& y) const {
  Rational tr = 0;
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t k = 0; k < x.cols(); ++k)
      if (x(i, k) != 0 && y(k, i) != 0) tr += x(i, k) * y(k, i);
  return form_scale * tr;
}

Matrix<Rational> commutator(const Matrix<Rational>& a, const Matrix<Rational>& b) {
  return a * b - b * a;
}

MatrixModel build_matrix_model(const RootSystem& rs) {
  MatrixModel model;
  model.matrix_size = matrix_size(rs.type(), rs.rank());
  model.form_scale = (rs.type() == 'B' || rs.type() == 'D') ? Rational(1, 2) : Rational(1);
  const auto data = positive_root_data(rs.type(), rs.rank());
  const auto seps = simple_epsilon(rs.type(), rs.rank());
  std::map<Root, const PositiveRootData*> by_root;
  for (const auto& d : data) by_root[epsilon_to_simple(seps, d.eps)] = &d;
  const std::size_t npos = rs.size() / 2;
  model.root_vectors.resize(rs.size());
  for (std::size_t i = 0; i < npos; ++i) {
    const PositiveRootData& d = *by_root.at(rs.root(i));
    const Rational pairing = model.form(d.e, d.f);
    model.root_vectors[i] = d.e;
    Matrix<Rational> f = d.f;
    for (std::size_t r = 0; r < f.rows(); ++r)
      for (std::size_t c = 0; c < f.cols(); ++c) f(r, c) /= pairing;
    model.root_vectors[npos + i] = f;
  }
  for (const Root& s : rs.simple_roots()) {
    const std::size_t i = rs.require(s), j = rs.require(-s);
    model.cartan.push_back(commutator(model.root_vectors[i], model.root_vectors[j]));
  }
  return model;
}

Rational StructureTable::at(std::size_t a, std::size_t b) const {
  auto it = constants.find({a, b});
  return it == constants.end() ? Rational(0) : it->second;
}

StructureTable chevalley_constants(const RootSystem& rs, const MatrixModel& model) {
  StructureTable table;
  for (std::size_t a = 0; a < rs.size(); ++a)
    for (std::size_t b = 0; b < rs.size(); ++b) {
      auto sum = rs.index_of(rs.root(a) + rs.root(b));
      if (!sum) continue;
      const Matrix<Rational> br = commutator(model.root_vectors[a], model.root_vectors[b]);
      const Matrix<Rational>& target = model.root_vectors[*sum];
      std::optional<Rational> c;
      for (std::size_t i = 0; i < br.rows() && !c; ++i)
        for (std::size_t j = 0; j < br.cols() && !c; ++j)
          if (target(i, j) != 0) c = br(i, j) / target(i, j);
      Matrix<Rational> scaled = target;
      for (std::size_t i = 0; i < scaled.rows(); ++i)
        for (std::size_t j = 0; j < scaled.cols(); ++j) scaled(i, j) *= *c;
      if (!(scaled == br)) throw std::logic_error("bracket of root vectors is not a root vector");
      table.constants[{a, b}] = *c;
    }
  return table;
}

bool RootSubset::contains(const Root& r) const {
  return std::find(roots.begin(), roots.end(), r) != roots.end();
}

namespace {

std::set<Root> as_set(const RootSystem& rs, const std::vector<Root>& subset) {
  std::set<Root> s;
  for (const Root& r : subset) {
    rs.require(r);
    s.insert(r);
  }
  return s;
}

}  // namespace

bool check_reductive_subset(const RootSystem& rs, const std::vector<Root>& subset) {
  const auto u = as_set(rs, subset);
  for (const Root& a : u) {
    if (!u.count(-a)) return false;
    for (const Root& b : u)
      if (rs.contains(a + b) && !u.count(a + b)) return false;
  }
  return true;
}

std::vector<Rational> coordinates_in(const std::vector<Root>& pi, const Root& r) {
  const std::size_t n = r.size();
  Matrix<Rational> a(n, pi.size());
  std::vector<Rational> b(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < pi.size(); ++j) a(i, j) = pi[j][i];
    b[i] = r[i];
  }
  return solve(a, b);
}

namespace {

bool in_span(const std::vector<Root>& basis, const Root& r) {
  if (basis.empty()) return is_zero_root(r);
  const std::size_t n = r.size();
  Matrix<Rational> a(n, basis.size() + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < basis.size(); ++j) a(i, j) = basis[j][i];
    a(i, basis.size()) = r[i];
  }
  Matrix<Rational> b(n, basis.size());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) b(i, j) = basis[j][i];
  return rank(a) == rank(b);
}

}  // namespace

RootSubset levi_subset(const RootSystem& rs, const std::vector<Root>& pi,
                       const std::vector<Root>& delta) {
  for (const Root& d : delta)
    if (std::find(pi.begin(), pi.end(), d) == pi.end())
      throw InvalidInput("Delta element " + root_to_string(d) + " is not in the simple system");
  RootSubset n{{}, SubsetTag::levi};
  for (const Root& r : rs.roots())
    if (in_span(delta, r)) n.roots.push_back(r);
  return n;
}

bool check_parabolic(const RootSystem& rs, const std::vector<Root>& subset) {
  const auto p = as_set(rs, subset);
  for (const Root& r : rs.roots())
    if (!p.count(r) && !p.count(-r)) return false;
  for (const Root& a : p)
    for (const Root& b : p)
      if (rs.contains(a + b) && !p.count(a + b)) return false;
  return true;
}

YSetReport y_set_properties(const RootSystem& rs, const std::vector<Root>& parabolic) {
  if (!check_parabolic(rs, parabolic)) throw InvalidInput("subset is not parabolic");
  const auto p = as_set(rs, parabolic);
  YSetReport rep;
  std::set<Root> y;
  for (const Root& r : rs.roots())
    if (!p.count(r)) {
      y.insert(r);
      rep.y.push_back(r);
    }
  rep.no_opposite_pairs = std::none_of(y.begin(), y.end(), [&](const Root& a) { return y.count(-a) > 0; });
  rep.sum_closed = true;
  rep.difference_closed = true;
  for (const Root& a : y) {
    for (const Root& b : y)
      if (rs.contains(a + b) && !y.count(a + b)) rep.sum_closed = false;
    for (const Root& b : rs.roots()) {
      if (y.count(b)) continue;
      const Root d = a + (-b);
      if (rs.contains(d) && !y.count(d)) rep.difference_closed = false;
    }
  }
  return rep;
}

std::vector<Root> positive_roots_for(const RootSystem& rs, const std::vector<Root>& pi) {
  std::vector<Root> out;
  for (const Root& r : rs.roots()) {
    const auto k = coordinates_in(pi, r);
    if (std::all_of(k.begin(), k.end(), [](const Rational& x) { return x >= 0; })) out.push_back(r);
  }
  return out;
}

std::vector<std::vector<Root>> all_simple_systems(const RootSystem& rs) {
  std::vector<std::vector<Root>> out;
  std::set<std::vector<Root>> seen;
  std::vector<std::vector<Root>> frontier{rs.simple_roots()};
  {
    auto key = rs.simple_roots();
    std::sort(key.begin(), key.end());
    seen.insert(key);
  }
  while (!frontier.empty()) {
    std::vector<std::vector<Root>> next;
    for (const auto& pi : frontier) {
      out.push_back(pi);
      for (const Root& s : pi) {
        std::vector<Root> image;
        for (const Root& r : pi) image.push_back(rs.reflect(s, r));
        std::vector<Root> key = image;
        std::sort(key.begin(), key.end());
        if (seen.insert(key).second) next.push_back(key);
      }
    }
    frontier = std::move(next);
  }
  return out;
}

}  // namespace dynr
