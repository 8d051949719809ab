#include "galcoh/finite_group.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "galcoh/errors.hpp"

namespace galcoh {

Subgroup::Subgroup(GroupPtr parent, std::vector<std::size_t> elements)
    : parent_(std::move(parent)), elements_(std::move(elements)) {
  if (!parent_) throw DomainError("subgroup without a parent group");
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  const auto& g = *parent_;
  for (auto x : elements_)
    if (x >= g.order()) throw DomainError("subgroup element " + std::to_string(x) + " is not a group element");
  if (!contains(g.identity())) throw DomainError("subgroup " + to_string() + " does not contain the identity");
  for (auto x : elements_) {
    if (!contains(g.inverse(x))) throw DomainError("subgroup " + to_string() + " is not closed under inverses");
    for (auto y : elements_)
      if (!contains(g.mul(x, y))) throw DomainError("subgroup " + to_string() + " is not closed under products");
  }
}

std::size_t Subgroup::index() const { return parent_->order() / order(); }

bool Subgroup::contains(std::size_t g) const {
  return std::binary_search(elements_.begin(), elements_.end(), g);
}

bool Subgroup::is_subgroup_of(const Subgroup& other) const {
  return parent_ == other.parent_ &&
         std::includes(other.elements_.begin(), other.elements_.end(), elements_.begin(), elements_.end());
}

bool Subgroup::is_normal() const {
  const auto& g = *parent_;
  for (std::size_t x = 0; x < g.order(); ++x)
    for (auto h : elements_)
      if (!contains(g.mul(g.mul(x, h), g.inverse(x)))) return false;
  return true;
}

Subgroup Subgroup::conjugate(std::size_t x) const {
  const auto& g = *parent_;
  std::vector<std::size_t> c;
  for (auto h : elements_) c.push_back(g.mul(g.mul(x, h), g.inverse(x)));
  return Subgroup(parent_, std::move(c));
}

std::string Subgroup::to_string() const {
  std::string s = "{";
  for (std::size_t i = 0; i < elements_.size(); ++i) s += (i ? "," : "") + std::to_string(elements_[i]);
  return s + "}";
}

bool operator<(const Subgroup& a, const Subgroup& b) {
  if (a.order() != b.order()) return a.order() < b.order();
  return a.elements_ < b.elements_;
}

namespace {

using Table = std::vector<std::vector<std::size_t>>;

}  // namespace

GroupPtr FiniteGroup::from_table(const Table& table) {
  const std::size_t n = table.size();
  if (n == 0) throw DomainError("group table is empty");
  for (const auto& row : table) {
    if (row.size() != n) throw DomainError("group table is not square");
    for (auto v : row)
      if (v >= n) throw DomainError("group table entry out of range");
  }
  std::shared_ptr<FiniteGroup> g(new FiniteGroup());
  g->n_ = n;
  g->table_.resize(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) g->table_[a * n + b] = table[a][b];

  std::size_t e = n;
  for (std::size_t c = 0; c < n && e == n; ++c) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) ok = table[c][x] == x && table[x][c] == x;
    if (ok) e = c;
  }
  if (e == n) throw DomainError("group table has no identity element");
  g->identity_ = e;
  g->inverse_.assign(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b)
      if (table[a][b] == e && table[b][a] == e) {
        g->inverse_[a] = b;
        break;
      }
    if (g->inverse_[a] == n) throw DomainError("element " + std::to_string(a) + " has no inverse");
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (g->mul(g->mul(a, b), c) != g->mul(a, g->mul(b, c)))
          throw DomainError("group table is not associative");

  std::vector<char> seen(n, 0);
  seen[e] = 1;
  for (std::size_t x = 0; x < n; ++x) {
    if (seen[x]) continue;
    g->generators_.push_back(x);
    // closure of the current generators
    std::vector<std::size_t> elems{e};
    std::fill(seen.begin(), seen.end(), 0);
    seen[e] = 1;
    for (std::size_t i = 0; i < elems.size(); ++i)
      for (auto s : g->generators_) {
        auto y = g->mul(elems[i], s);
        if (!seen[y]) {
          seen[y] = 1;
          elems.push_back(y);
        }
      }
  }
  return g;
}

GroupPtr FiniteGroup::from_generator_permutations(const std::vector<std::vector<std::size_t>>& perms,
                                                  std::size_t cap) {
  const std::size_t degree = perms.empty() ? 0 : perms.front().size();
  for (const auto& p : perms) {
    if (p.size() != degree) throw DomainError("permutations act on sets of different sizes");
    std::vector<char> hit(degree, 0);
    for (auto v : p) {
      if (v >= degree || hit[v]) throw DomainError("generator is not a permutation");
      hit[v] = 1;
    }
  }
  using Perm = std::vector<std::size_t>;
  Perm id(degree);
  for (std::size_t i = 0; i < degree; ++i) id[i] = i;
  std::vector<Perm> elems{id};
  std::map<Perm, std::size_t> index{{id, 0}};
  auto compose = [&](const Perm& p, const Perm& q) {
    Perm r(degree);
    for (std::size_t i = 0; i < degree; ++i) r[i] = p[q[i]];
    return r;
  };
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (const auto& s : perms) {
      Perm r = compose(elems[i], s);
      if (index.emplace(r, elems.size()).second) {
        elems.push_back(std::move(r));
        if (elems.size() > cap)
          throw CapExceeded("group generated by the permutations exceeds the order cap " + std::to_string(cap));
      }
    }
  Table t(elems.size(), std::vector<std::size_t>(elems.size()));
  for (std::size_t a = 0; a < elems.size(); ++a)
    for (std::size_t b = 0; b < elems.size(); ++b) t[a][b] = index.at(compose(elems[a], elems[b]));
  return from_table(t);
}

GroupPtr FiniteGroup::trivial() { return cyclic(1); }

GroupPtr FiniteGroup::cyclic(std::size_t n) {
  if (n == 0) throw DomainError("cyclic group of order 0");
  Table t(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return from_table(t);
}

GroupPtr FiniteGroup::klein_four() { return direct_product(cyclic(2), cyclic(2)); }

GroupPtr FiniteGroup::direct_product(const GroupPtr& a, const GroupPtr& b) {
  const std::size_t m = a->order(), n = b->order();
  Table t(m * n, std::vector<std::size_t>(m * n));
  for (std::size_t x = 0; x < m * n; ++x)
    for (std::size_t y = 0; y < m * n; ++y)
      t[x][y] = a->mul(x / n, y / n) * n + b->mul(x % n, y % n);
  return from_table(t);
}

GroupPtr FiniteGroup::dihedral(std::size_t n) {
  if (n == 0) throw DomainError("dihedral group of order 0");
  // r^k s^j has index j*n + k
  Table t(2 * n, std::vector<std::size_t>(2 * n));
  for (std::size_t x = 0; x < 2 * n; ++x)
    for (std::size_t y = 0; y < 2 * n; ++y) {
      std::size_t a = x % n, i = x / n, b = y % n, j = y / n;
      std::size_t k = i ? (a + n - b) % n : (a + b) % n;
      t[x][y] = ((i + j) % 2) * n + k;
    }
  return from_table(t);
}

GroupPtr FiniteGroup::quaternion() {
  // index = 2*unit + negative, units 1, i, j, k
  static const int prod[4][4][2] = {
      {{0, 0}, {1, 0}, {2, 0}, {3, 0}},
      {{1, 0}, {0, 1}, {3, 0}, {2, 1}},
      {{2, 0}, {3, 1}, {0, 1}, {1, 0}},
      {{3, 0}, {2, 0}, {1, 1}, {0, 1}},
  };
  Table t(8, std::vector<std::size_t>(8));
  for (std::size_t x = 0; x < 8; ++x)
    for (std::size_t y = 0; y < 8; ++y) {
      const auto& p = prod[x / 2][y / 2];
      t[x][y] = 2 * p[0] + ((x % 2 + y % 2 + p[1]) % 2);
    }
  return from_table(t);
}

std::size_t FiniteGroup::element_order(std::size_t a) const {
  std::size_t k = 1;
  for (std::size_t x = a; x != identity_; x = mul(x, a)) ++k;
  return k;
}

bool FiniteGroup::is_abelian() const {
  for (std::size_t a = 0; a < n_; ++a)
    for (std::size_t b = 0; b < a; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

Subgroup FiniteGroup::whole() const {
  std::vector<std::size_t> all(n_);
  for (std::size_t i = 0; i < n_; ++i) all[i] = i;
  return Subgroup(shared_from_this(), std::move(all));
}

Subgroup FiniteGroup::trivial_subgroup() const { return Subgroup(shared_from_this(), {identity_}); }

Subgroup FiniteGroup::generated_by(const std::vector<std::size_t>& gens) const {
  for (auto s : gens)
    if (s >= n_) throw DomainError("element " + std::to_string(s) + " is not a group element");
  std::vector<char> seen(n_, 0);
  std::vector<std::size_t> elems{identity_};
  seen[identity_] = 1;
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (auto s : gens) {
      auto y = mul(elems[i], s);
      if (!seen[y]) {
        seen[y] = 1;
        elems.push_back(y);
      }
    }
  return Subgroup(shared_from_this(), std::move(elems));
}

std::vector<Subgroup> FiniteGroup::cyclic_subgroups() const {
  std::set<Subgroup> found;
  for (std::size_t x = 0; x < n_; ++x) found.insert(generated_by({x}));
  return {found.begin(), found.end()};
}

std::vector<Subgroup> FiniteGroup::all_subgroups() const {
  auto cyc = cyclic_subgroups();
  std::set<Subgroup> found(cyc.begin(), cyc.end());
  std::vector<Subgroup> work(cyc.begin(), cyc.end());
  while (!work.empty()) {
    Subgroup s = std::move(work.back());
    work.pop_back();
    for (const auto& c : cyc) {
      if (c.is_subgroup_of(s)) continue;
      auto gens = s.elements();
      gens.insert(gens.end(), c.elements().begin(), c.elements().end());
      Subgroup j = generated_by(gens);
      if (found.insert(j).second) work.push_back(j);
    }
  }
  return {found.begin(), found.end()};
}

void FiniteGroup::check_subgroup(const Subgroup& h) const {
  if (h.parent().get() != this) throw DomainError("subgroup " + h.to_string() + " is not a subgroup of this group");
}

std::vector<std::vector<std::size_t>> FiniteGroup::cosets(const Subgroup& h) const {
  check_subgroup(h);
  std::vector<char> done(n_, 0);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t g = 0; g < n_; ++g) {
    if (done[g]) continue;
    std::vector<std::size_t> c;
    for (auto x : h.elements()) {
      c.push_back(mul(g, x));
      done[c.back()] = 1;
    }
    std::sort(c.begin(), c.end());
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<std::size_t> FiniteGroup::transversal(const Subgroup& h) const {
  std::vector<std::size_t> t;
  for (const auto& c : cosets(h)) t.push_back(c.front());
  return t;
}

bool FiniteGroup::is_conjugate_contained(const Subgroup& h, const std::vector<Subgroup>& family) const {
  check_subgroup(h);
  for (const auto& d : family) {
    check_subgroup(d);
    for (std::size_t x = 0; x < n_; ++x)
      if (h.conjugate(x).is_subgroup_of(d)) return true;
  }
  return false;
}

InducedGroup FiniteGroup::subgroup_as_group(const Subgroup& h) const {
  check_subgroup(h);
  std::lock_guard<std::mutex> lock(cache_mutex_);
  auto cached = subgroup_cache_.find(h.elements());
  if (cached != subgroup_cache_.end()) return cached->second;
  const auto& el = h.elements();
  std::vector<std::size_t> pos(n_, 0);
  for (std::size_t i = 0; i < el.size(); ++i) pos[el[i]] = i;
  Table t(el.size(), std::vector<std::size_t>(el.size()));
  for (std::size_t a = 0; a < el.size(); ++a)
    for (std::size_t b = 0; b < el.size(); ++b) t[a][b] = pos[mul(el[a], el[b])];
  InducedGroup result{from_table(t), el};
  subgroup_cache_.emplace(el, result);
  return result;
}

InducedGroup FiniteGroup::quotient_group(const Subgroup& n) const {
  check_subgroup(n);
  if (!n.is_normal()) throw DomainError("subgroup " + n.to_string() + " is not normal");
  std::lock_guard<std::mutex> lock(cache_mutex_);
  auto cached = quotient_cache_.find(n.elements());
  if (cached != quotient_cache_.end()) return cached->second;
  auto cs = cosets(n);
  std::vector<std::size_t> proj(n_);
  for (std::size_t i = 0; i < cs.size(); ++i)
    for (auto x : cs[i]) proj[x] = i;
  Table t(cs.size(), std::vector<std::size_t>(cs.size()));
  for (std::size_t a = 0; a < cs.size(); ++a)
    for (std::size_t b = 0; b < cs.size(); ++b) t[a][b] = proj[mul(cs[a].front(), cs[b].front())];
  InducedGroup result{from_table(t), proj};
  quotient_cache_.emplace(n.elements(), result);
  return result;
}

std::vector<std::vector<std::size_t>> FiniteGroup::table() const {
  Table t(n_, std::vector<std::size_t>(n_));
  for (std::size_t a = 0; a < n_; ++a)
    for (std::size_t b = 0; b < n_; ++b) t[a][b] = mul(a, b);
  return t;
}

}  // namespace galcoh
