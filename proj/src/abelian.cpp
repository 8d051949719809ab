#include "galcoh/abelian.hpp"

#include <algorithm>
#include <sstream>

#include "galcoh/errors.hpp"

namespace galcoh {

AbelianPresentation::AbelianPresentation(std::size_t free_rank, std::vector<Integer> factors)
    : free_rank_(free_rank), factors_(std::move(factors)) {
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i] < 2) throw DomainError("invariant factors must be >= 2");
    if (i && !mpz_divisible_p(factors_[i].get_mpz_t(), factors_[i - 1].get_mpz_t()))
      throw DomainError("invariant factors must form a divisibility chain");
  }
}

AbelianPresentation AbelianPresentation::from_diagonal(std::span<const Integer> diagonal) {
  auto d = smith_normal_form(IntMatrix::diagonal(diagonal), {.track_left = false, .track_right = false});
  std::size_t free = diagonal.size() - d.rank;
  std::vector<Integer> f;
  for (std::size_t i = 0; i < d.rank; ++i)
    if (d.S(i, i) != 1) f.push_back(d.S(i, i));
  return AbelianPresentation(free, std::move(f));
}

AbelianPresentation AbelianPresentation::cyclic(const Integer& n) {
  Integer d = abs(n);
  if (d == 0) return AbelianPresentation(1, {});
  if (d == 1) return {};
  return AbelianPresentation(0, {d});
}

std::optional<Integer> AbelianPresentation::order() const {
  if (free_rank_ > 0) return std::nullopt;
  Integer n = 1;
  for (const auto& d : factors_) n *= d;
  return n;
}

Integer AbelianPresentation::exponent() const {
  if (free_rank_ > 0) return 0;
  return factors_.empty() ? Integer(1) : factors_.back();
}

Integer AbelianPresentation::modulus(std::size_t k) const {
  if (k >= generator_count()) throw DomainError("coordinate index out of range");
  return k < free_rank_ ? Integer(0) : factors_[k - free_rank_];
}

IntVector AbelianPresentation::normalize(IntVector coords) const {
  if (coords.size() != generator_count()) throw DomainError("coordinate vector has wrong length");
  for (std::size_t k = free_rank_; k < coords.size(); ++k) {
    const Integer& d = factors_[k - free_rank_];
    mpz_fdiv_r(coords[k].get_mpz_t(), coords[k].get_mpz_t(), d.get_mpz_t());
  }
  return coords;
}

bool AbelianPresentation::is_zero_element(std::span<const Integer> coords) const {
  return galcoh::is_zero(normalize(IntVector(coords.begin(), coords.end())));
}

IntMatrix AbelianPresentation::relations() const {
  IntMatrix r(generator_count(), factors_.size());
  for (std::size_t i = 0; i < factors_.size(); ++i) r(free_rank_ + i, i) = factors_[i];
  return r;
}

std::string AbelianPresentation::to_string() const {
  if (is_trivial()) return "0";
  std::vector<std::string> parts;
  if (free_rank_ == 1) parts.push_back("Z");
  if (free_rank_ > 1) parts.push_back("Z^" + std::to_string(free_rank_));
  for (const auto& d : factors_) parts.push_back("Z/" + d.get_str());
  std::string s = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) s += " x " + parts[i];
  return s;
}

std::string AbelianPresentation::to_machine() const {
  std::string s = "rank:" + std::to_string(free_rank_) + ";factors:";
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) s += ",";
    s += factors_[i].get_str();
  }
  return s;
}

namespace {

Integer parse_integer(const std::string& token, const std::string& whole) {
  Integer v;
  if (token.empty() || v.set_str(token, 10) != 0)
    throw DomainError("cannot parse group description '" + whole + "'");
  return v;
}

}  // namespace

AbelianPresentation AbelianPresentation::parse(const std::string& text) {
  auto trim = [](std::string s) {
    auto b = s.find_first_not_of(" \t");
    auto e = s.find_last_not_of(" \t");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
  };
  std::string t = trim(text);
  if (t.rfind("rank:", 0) == 0) {
    auto semi = t.find(';');
    if (semi == std::string::npos || t.compare(semi + 1, 8, "factors:") != 0)
      throw DomainError("cannot parse group description '" + text + "'");
    std::size_t rank = parse_integer(t.substr(5, semi - 5), text).get_ui();
    std::vector<Integer> f;
    std::string rest = t.substr(semi + 9);
    std::stringstream ss(rest);
    std::string item;
    while (std::getline(ss, item, ','))
      if (!trim(item).empty()) f.push_back(parse_integer(trim(item), text));
    return AbelianPresentation(rank, std::move(f));
  }
  if (t == "0") return {};
  std::size_t rank = 0;
  std::vector<Integer> f;
  std::size_t pos = 0;
  while (pos <= t.size()) {
    auto next = t.find(" x ", pos);
    std::string part = trim(t.substr(pos, next == std::string::npos ? std::string::npos : next - pos));
    if (part == "Z") {
      rank += 1;
    } else if (part.rfind("Z^", 0) == 0) {
      rank += parse_integer(part.substr(2), text).get_ui();
    } else if (part.rfind("Z/", 0) == 0) {
      f.push_back(parse_integer(part.substr(2), text));
    } else {
      throw DomainError("cannot parse group description '" + text + "'");
    }
    if (next == std::string::npos) break;
    pos = next + 3;
  }
  return AbelianPresentation(rank, std::move(f));
}

AbelianPresentation cokernel_presentation(const IntMatrix& a) {
  auto d = smith_normal_form(a, {.track_left = false, .track_right = false});
  std::vector<Integer> f;
  for (std::size_t i = 0; i < d.rank; ++i)
    if (d.S(i, i) != 1) f.push_back(d.S(i, i));
  return AbelianPresentation(a.rows() - d.rank, std::move(f));
}

LatticeQuotient::LatticeQuotient(const IntMatrix& basis, const IntMatrix& relations)
    : basis_(basis), solver_(basis) {
  const std::size_t n = basis.rows();
  const std::size_t k = basis.cols();
  if (relations.rows() != n) throw DomainError("LatticeQuotient: relation length mismatch");
  if (solver_.rank() != k) throw DomainError("LatticeQuotient: basis columns are dependent");
  lattice_basis_ = column_basis(basis);

  IntMatrix y(k, relations.cols());
  for (std::size_t j = 0; j < relations.cols(); ++j) {
    auto sol = solver_.solve(relations.column(j));
    if (!sol) throw DomainError("LatticeQuotient: relation lies outside the lattice");
    y.set_column(j, *sol);
  }
  auto d = smith_normal_form(y, {.track_left = true, .track_right = false, .track_left_inverse = true});
  to_smith_ = std::move(d.U);

  std::size_t free = 0;
  std::vector<Integer> factors;
  for (std::size_t j = d.rank; j < k; ++j) {
    kept_.push_back(j);
    ++free;
  }
  for (std::size_t j = 0; j < d.rank; ++j) {
    if (d.S(j, j) == 1) continue;
    kept_.push_back(j);
    factors.push_back(d.S(j, j));
  }
  presentation_ = AbelianPresentation(free, std::move(factors));

  IntMatrix lifted = basis * d.U_inverse;
  generators_ = IntMatrix(n, kept_.size());
  for (std::size_t c = 0; c < kept_.size(); ++c)
    for (std::size_t i = 0; i < n; ++i) generators_(i, c) = lifted(i, kept_[c]);
}

bool LatticeQuotient::contains(std::span<const Integer> x) const {
  return solver_.solve(x).has_value();
}

std::optional<IntVector> LatticeQuotient::try_coordinates(std::span<const Integer> x) const {
  auto y = solver_.solve(x);
  if (!y) return std::nullopt;
  IntVector z = to_smith_ * std::span<const Integer>(*y);
  IntVector c(kept_.size());
  for (std::size_t i = 0; i < kept_.size(); ++i) c[i] = z[kept_[i]];
  return presentation_.normalize(std::move(c));
}

IntVector LatticeQuotient::coordinates(std::span<const Integer> x) const {
  auto c = try_coordinates(x);
  if (!c) throw DomainError("element does not lie in the lattice");
  return *c;
}

IntVector LatticeQuotient::element(std::span<const Integer> coords) const {
  if (coords.size() != kept_.size()) throw DomainError("coordinate vector has wrong length");
  return generators_ * coords;
}

LatticeQuotient subquotient(const IntMatrix& b, const IntMatrix& a) {
  if (b.cols() != a.rows())
    throw DomainError("subquotient: B and A are not composable");
  if (!(b * a).is_zero()) throw DomainError("subquotient: B*A != 0, the input is not a complex");
  return LatticeQuotient(kernel_basis(b), a);
}

GroupHom::GroupHom(AbelianPresentation source, AbelianPresentation target, IntMatrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
  if (matrix_.rows() != target_.generator_count() || matrix_.cols() != source_.generator_count())
    throw DomainError("GroupHom: matrix shape does not match the presentations");
  for (std::size_t j = 0; j < matrix_.cols(); ++j) {
    IntVector col = target_.normalize(matrix_.column(j));
    Integer d = source_.modulus(j);
    if (d != 0 && !target_.is_zero_element(scale(d, col)))
      throw DomainError("GroupHom: map is not well defined on torsion generators");
    matrix_.set_column(j, col);
  }
}

GroupHom GroupHom::identity(const AbelianPresentation& p) {
  return GroupHom(p, p, IntMatrix::identity(p.generator_count()));
}

GroupHom GroupHom::multiplication(const AbelianPresentation& p, const Integer& k) {
  return GroupHom(p, p, k * IntMatrix::identity(p.generator_count()));
}

GroupHom GroupHom::zero(const AbelianPresentation& source, const AbelianPresentation& target) {
  return GroupHom(source, target, IntMatrix(target.generator_count(), source.generator_count()));
}

IntVector GroupHom::apply(std::span<const Integer> coords) const {
  return target_.normalize(matrix_ * coords);
}

namespace {

// Columns spanning {x : M x in span(R)}.
IntMatrix preimage_lattice(const IntMatrix& m, const IntMatrix& r) {
  IntMatrix k = kernel_basis(hconcat(m, r));
  return column_basis(k.row_block(0, m.cols()));
}

}  // namespace

LatticeQuotient GroupHom::kernel() const {
  return LatticeQuotient(preimage_lattice(matrix_, target_.relations()), source_.relations());
}

LatticeQuotient GroupHom::image() const {
  IntMatrix rel = target_.relations();
  return LatticeQuotient(column_basis(hconcat(matrix_, rel)), rel);
}

bool GroupHom::is_zero() const { return matrix_.is_zero(); }

bool GroupHom::is_injective() const { return kernel().presentation().is_trivial(); }

bool GroupHom::is_surjective() const {
  return column_basis(hconcat(matrix_, target_.relations())) ==
         IntMatrix::identity(target_.generator_count());
}

GroupHom GroupHom::then(const GroupHom& next) const {
  if (!(next.source_ == target_)) throw DomainError("GroupHom::then: presentations do not match");
  return GroupHom(source_, next.target_, next.matrix_ * matrix_);
}

bool is_exact(const GroupHom& f, const GroupHom& g) {
  if (!(f.target() == g.source())) throw DomainError("is_exact: maps are not composable");
  IntMatrix rel = f.target().relations();
  return column_basis(hconcat(f.matrix(), rel)) == preimage_lattice(g.matrix(), g.target().relations());
}

LatticeQuotient joint_kernel(const AbelianPresentation& source, const std::vector<GroupHom>& maps) {
  const std::size_t n = source.generator_count();
  std::size_t rows = 0, rels = 0;
  for (const auto& m : maps) {
    if (!(m.source() == source)) throw DomainError("joint_kernel: maps have different sources");
    rows += m.target().generator_count();
    rels += m.target().factors().size();
  }
  // [Phi_1 R_1 0 ...; Phi_2 0 R_2 ...; ...]
  IntMatrix big(rows, n + rels);
  std::size_t r0 = 0, c0 = n;
  for (const auto& m : maps) {
    IntMatrix rel = m.target().relations();
    for (std::size_t i = 0; i < m.matrix().rows(); ++i) {
      for (std::size_t j = 0; j < n; ++j) big(r0 + i, j) = m.matrix()(i, j);
      for (std::size_t j = 0; j < rel.cols(); ++j) big(r0 + i, c0 + j) = rel(i, j);
    }
    r0 += m.matrix().rows();
    c0 += rel.cols();
  }
  IntMatrix k = kernel_basis(big);
  return LatticeQuotient(column_basis(k.row_block(0, n)), source.relations());
}

GroupHom restrict_hom(const GroupHom& h, const LatticeQuotient& from, const LatticeQuotient& to) {
  if (from.ambient_dimension() != h.source().generator_count() ||
      to.ambient_dimension() != h.target().generator_count())
    throw DomainError("restrict_hom: subgroup ambients do not match the map");
  const IntMatrix& gens = from.generators();
  IntMatrix m(to.presentation().generator_count(), gens.cols());
  for (std::size_t j = 0; j < gens.cols(); ++j) {
    IntVector img = h.matrix() * std::span<const Integer>(gens.column(j));
    auto c = to.try_coordinates(img);
    if (!c) throw InvariantViolation("restrict_hom: image leaves the target subgroup");
    m.set_column(j, *c);
  }
  return GroupHom(from.presentation(), to.presentation(), m);
}

}  // namespace galcoh
