#include "toricmirror/cohomology.hpp"

#include <algorithm>

#include "toricmirror/errors.hpp"

namespace toricmirror {
namespace {

bool divides(const Monomial& d, const Monomial& m) {
  return std::includes(m.begin(), m.end(), d.begin(), d.end());
}

/// Index of the pair (a, b), a <= b, in the basis of Sym^2 of a k-dim space.
std::size_t sym_index(std::size_t a, std::size_t b, std::size_t k) {
  if (a > b) std::swap(a, b);
  return a * k - a * (a - 1) / 2 + (b - a);
}

RatVector sym_product(const RatVector& u, const RatVector& v) {
  const std::size_t k = u.size();
  RatVector out(k * (k + 1) / 2);
  for (std::size_t a = 0; a < k; ++a) {
    if (u[a] == 0) continue;
    for (std::size_t b = 0; b < k; ++b)
      if (v[b] != 0) out[sym_index(a, b, k)] += u[a] * v[b];
  }
  return out;
}

std::string format_coeff(const Rat& c, bool first, bool constant) {
  std::string out;
  const Rat mag = c < 0 ? Rat(-c) : c;
  if (first) {
    if (c < 0) out += "-";
  } else {
    out += c < 0 ? " - " : " + ";
  }
  if (constant || mag != 1) out += to_string(mag) + (constant ? "" : "*");
  return out;
}

}  // namespace

Polynomial Polynomial::constant(const Rat& c) {
  Polynomial p;
  p.add_term({}, c);
  return p;
}

Polynomial Polynomial::variable(std::size_t index, const Rat& coeff) {
  Polynomial p;
  p.add_term({index}, coeff);
  return p;
}

void Polynomial::add_term(Monomial m, const Rat& coeff) {
  if (coeff == 0) return;
  std::sort(m.begin(), m.end());
  auto [it, inserted] = terms_.try_emplace(std::move(m), coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

int Polynomial::degree() const {
  if (terms_.empty()) return 0;
  const std::size_t len = terms_.begin()->first.size();
  for (const auto& [m, c] : terms_)
    if (m.size() != len) throw Error(ErrorKind::kInvalidInput, "polynomial is not homogeneous");
  return static_cast<int>(2 * len);
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images) const {
  Polynomial out;
  for (const auto& [m, c] : terms_) {
    Polynomial term = constant(c);
    for (std::size_t v : m) term = term * images.at(v);
    out += term;
  }
  return out;
}

Polynomial Polynomial::reduce_monomials(const std::vector<Monomial>& ideal) const {
  Polynomial out;
  for (const auto& [m, c] : terms_) {
    const bool killed = std::any_of(ideal.begin(), ideal.end(), [&](const Monomial& g) { return divides(g, m); });
    if (!killed) out.terms_.emplace(m, c);
  }
  return out;
}

std::string Polynomial::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    out += format_coeff(c, first, m.empty());
    first = false;
    for (std::size_t i = 0; i < m.size();) {
      std::size_t j = i;
      while (j < m.size() && m[j] == m[i]) ++j;
      if (i > 0) out += "*";
      out += names.at(m[i]);
      if (j - i > 1) out += "^" + std::to_string(j - i);
      i = j;
    }
  }
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      Monomial m = ma;
      m.insert(m.end(), mb.begin(), mb.end());
      out.add_term(std::move(m), ca * cb);
    }
  }
  return out;
}

Polynomial operator*(const Rat& s, const Polynomial& p) { return Polynomial::constant(s) * p; }

Polynomial Presentation::linear_form(std::size_t row) const {
  Polynomial out;
  for (std::size_t i = 0; i < size(); ++i) out.add_term({i}, linear_relations(row, i));
  return out;
}

Presentation presentation(const RationalPolygon& p) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < p.size(); ++i) names.push_back("x_" + std::to_string(i + 1));
  return presentation(p, std::move(names));
}

Presentation presentation(const RationalPolygon& p, std::vector<std::string> names) {
  const std::size_t m = p.size();
  if (names.size() != m) throw Error(ErrorKind::kInvalidInput, "one variable name per edge is required");
  Presentation pres;
  pres.names = std::move(names);
  pres.linear_relations = RatMatrix(2, m);
  for (const auto& e : p.edges()) {
    pres.normals.push_back(e.normal);
    pres.linear_relations(0, e.index) = Rat(e.normal.x);
    pres.linear_relations(1, e.index) = Rat(e.normal.y);
  }
  if (m == 3) {
    pres.sr_generators.push_back({0, 1, 2});
  } else {
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j)
        if (!adjacent(p, i, j)) pres.sr_generators.push_back({i, j});
  }
  return pres;
}

bool RingElement::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](const Rat& c) { return c == 0; });
}

RingElement CohomologyRing::unit() const { return {0, {1}}; }
RingElement CohomologyRing::point_class() const { return {4, {1}}; }

RingElement CohomologyRing::variable(std::size_t i) const { return {2, deg2_nf_.row(i)}; }

RingElement CohomologyRing::zero(int degree) const {
  switch (degree) {
    case 0: return {0, {0}};
    case 2: return {2, RatVector(deg2_dim())};
    case 4: return {4, {0}};
    default:
      if (degree < 0 || degree % 2 != 0) throw Error(ErrorKind::kInvalidInput, "invalid degree");
      return {degree, {}};
  }
}

RingElement CohomologyRing::normal_form(const Polynomial& q) const {
  const int degree = q.degree();
  RingElement out = zero(degree);
  for (const auto& [m, c] : q.terms()) {
    for (std::size_t v : m)
      if (v >= num_variables()) throw Error(ErrorKind::kInvalidInput, "variable index out of range");
    switch (m.size()) {
      case 0: out.coords[0] += c; break;
      case 1:
        for (std::size_t b = 0; b < deg2_dim(); ++b) out.coords[b] += c * deg2_nf_(m[0], b);
        break;
      case 2: out.coords[0] += c * product_table_(m[0], m[1]); break;
      default: break;  // H^{>=6} = 0
    }
  }
  return out;
}

RingElement CohomologyRing::add(const RingElement& a, const RingElement& b) const {
  if (a.degree != b.degree) throw Error(ErrorKind::kInvalidInput, "cannot add classes of different degree");
  RingElement out = a;
  for (std::size_t i = 0; i < out.coords.size(); ++i) out.coords[i] += b.coords.at(i);
  return out;
}

RingElement CohomologyRing::multiply(const RingElement& a, const RingElement& b) const {
  const int degree = a.degree + b.degree;
  if (degree > 4) return zero(degree);
  if (a.degree == 0) {
    RingElement out = b;
    for (auto& c : out.coords) c *= a.coords.at(0);
    return out;
  }
  if (b.degree == 0) return multiply(b, a);
  const RatMatrix pairing = poincare_pairing();
  Rat s = 0;
  for (std::size_t i = 0; i < deg2_dim(); ++i) {
    if (a.coords[i] == 0) continue;
    for (std::size_t j = 0; j < deg2_dim(); ++j) s += a.coords[i] * pairing(i, j) * b.coords[j];
  }
  return {4, {s}};
}

RatMatrix CohomologyRing::poincare_pairing() const {
  const std::size_t k = deg2_dim();
  RatMatrix out(k, k);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) out(a, b) = product_table_(deg2_basis_[a], deg2_basis_[b]);
  return out;
}

CohomologyRing build_ring(const Presentation& pres) {
  const std::size_t m = pres.size();
  if (m < 3 || pres.normals.size() != m) throw Error(ErrorKind::kInvalidInput, "presentation needs at least 3 edges");
  CohomologyRing ring;
  ring.pres_ = pres;

  // H^2: variables modulo J. Non-pivot columns give the basis.
  const RrefResult lin = rref(pres.linear_relations);
  std::vector<bool> is_pivot(m, false);
  for (auto p : lin.pivots) is_pivot[p] = true;
  for (std::size_t i = 0; i < m; ++i)
    if (!is_pivot[i]) ring.deg2_basis_.push_back(i);
  const std::size_t k = ring.deg2_basis_.size();
  if (k != m - 2) {
    throw Error(ErrorKind::kUnexpectedBettiNumber,
                "dim H^2 = " + std::to_string(k) + ", expected " + std::to_string(m - 2));
  }
  ring.deg2_nf_ = RatMatrix(m, k);
  for (std::size_t b = 0; b < k; ++b) {
    const std::size_t free = ring.deg2_basis_[b];
    ring.deg2_nf_(free, b) = 1;
    for (std::size_t r = 0; r < lin.rank(); ++r) ring.deg2_nf_(lin.pivots[r], b) = -lin.reduced(r, free);
  }

  // H^4 = Sym^2(H^2) modulo the quadratic Stanley-Reisner monomials.
  const std::size_t sym_dim = k * (k + 1) / 2;
  std::vector<RatVector> relations;
  for (const auto& g : pres.sr_generators) {
    if (g.size() != 2) continue;
    relations.push_back(sym_product(ring.deg2_nf_.row(g[0]), ring.deg2_nf_.row(g[1])));
  }
  const std::vector<RatVector> annihilator = kernel_basis(RatMatrix::from_rows(relations, sym_dim));
  if (annihilator.size() != 1) {
    throw Error(ErrorKind::kUnexpectedBettiNumber,
                "dim H^4 = " + std::to_string(annihilator.size()) + ", expected 1");
  }
  const RatVector& point = annihilator.front();
  auto evaluate = [&](std::size_t i, std::size_t j) {
    const RatVector s = sym_product(ring.deg2_nf_.row(i), ring.deg2_nf_.row(j));
    Rat out = 0;
    for (std::size_t t = 0; t < sym_dim; ++t) out += s[t] * point[t];
    return out;
  };
  const Rat raw01 = evaluate(0, 1);
  if (raw01 == 0) throw Error(ErrorKind::kDegeneratePairing, "adjacent edges 1 and 2 have zero intersection");
  const Integer d = abs(det(pres.normals[0], pres.normals[1]));
  const Rat scale = Rat(1) / (Rat(d) * raw01);
  ring.product_table_ = RatMatrix(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j) ring.product_table_(i, j) = ring.product_table_(j, i) = scale * evaluate(i, j);

  if (k > 0 && determinant(ring.poincare_pairing()) == 0) {
    throw Error(ErrorKind::kDegeneratePairing, "Poincare pairing is singular");
  }
  return ring;
}

GroupRepresentation group_action(const CohomologyRing& ring, const RationalPolygon& p, const ReflectionGroup& group) {
  if (ring.num_variables() != p.size()) throw Error(ErrorKind::kInvalidInput, "ring and polygon do not match");
  const auto perms = element_permutations(p, group);
  const std::size_t k = ring.deg2_dim();
  const Rat t01 = ring.product_table()(0, 1);
  GroupRepresentation rep;
  for (std::size_t g = 0; g < group.rank(); ++g) rep.generators.push_back(group.generator_index(g));
  for (const auto& perm : perms) {
    RatMatrix rho(k, k);
    for (std::size_t b = 0; b < k; ++b) {
      const std::size_t image = perm[ring.deg2_basis()[b]];
      for (std::size_t a = 0; a < k; ++a) rho(a, b) = ring.deg2_nf()(image, a);
    }
    rep.deg2.push_back(std::move(rho));
    rep.deg4.push_back(ring.product_table()(perm[0], perm[1]) / t01);
  }
  return rep;
}

std::vector<RatVector> invariant_subspace(const GroupRepresentation& rep, int degree) {
  if (degree == 4) {
    for (std::size_t g : rep.generators)
      if (rep.deg4.at(g) != 1) return {};
    return {RatVector{1}};
  }
  if (degree == 0) return {RatVector{1}};
  if (degree != 2) return {};
  const std::size_t k = rep.deg2.empty() ? 0 : rep.deg2.front().rows();
  RatMatrix stacked(0, k);
  for (std::size_t g : rep.generators) stacked = stacked.stacked(rep.deg2.at(g) - RatMatrix::identity(k));
  return kernel_basis(stacked);
}

RatMatrix reynolds_operator(const GroupRepresentation& rep) {
  const std::size_t k = rep.deg2.empty() ? 0 : rep.deg2.front().rows();
  RatMatrix sum(k, k);
  for (const auto& rho : rep.deg2) sum = sum + rho;
  return (Rat(1) / Rat(rep.deg2.size())) * sum;
}

std::vector<Polynomial> equivariant_invariant_generators(const RationalPolygon& p, const ReflectionGroup& group) {
  const FundamentalRegion region = fundamental_region(p, group);
  const OrbitDecomposition orbits = orbit_decomposition(p, group, region);
  std::vector<Polynomial> out;
  for (const auto& edges : orbits.orbit_edges) {
    Polynomial sum;
    for (std::size_t e : edges) sum += Polynomial::variable(e);
    out.push_back(std::move(sum));
  }
  return out;
}

}  // namespace toricmirror
