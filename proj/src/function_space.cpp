#include "fixspace/function_space.hpp"

#include "fixspace/error.hpp"

namespace fixspace {

namespace {

std::int64_t as_i64(std::size_t v) { return static_cast<std::int64_t>(v); }

Rational count(std::size_t n) { return Rational(static_cast<std::int64_t>(n)); }

void require_degree(const GroupAction& act, const FunctionOnX& f) {
  if (f.degree() != act.degree())
    throw Error("DegreeMismatch", "function degree differs from the action's degree",
                {{"function", as_i64(f.degree())}, {"action", as_i64(act.degree())}});
}

std::optional<InvariantCertificate> certify(Partition partition, const FunctionOnX& f) {
  std::vector<GaussianRational> values;
  values.reserve(partition.size());
  for (const auto& cell : partition.cells()) {
    const GaussianRational& v = f[cell.front()];
    for (Point x : cell)
      if (!(f[x] == v)) return std::nullopt;
    values.push_back(v);
  }
  return InvariantCertificate{f, std::move(partition), std::move(values)};
}

GaussianRational cell_sum(const FunctionOnX& f, std::span<const Point> cell) {
  GaussianRational s;
  for (Point x : cell) s += f[x];
  return s;
}

}  // namespace

FunctionOnX FunctionOnX::constant(std::size_t degree, const GaussianRational& value) {
  return FunctionOnX(std::vector<GaussianRational>(degree, value));
}

FunctionOnX FunctionOnX::delta(std::size_t degree, Point x) {
  FunctionOnX f(degree);
  f[x] = 1;
  return f;
}

FunctionOnX FunctionOnX::indicator(std::size_t degree, std::span<const Point> cell) {
  FunctionOnX f(degree);
  for (Point x : cell) f[x] = 1;
  return f;
}

bool FunctionOnX::is_zero() const {
  for (const auto& v : values_)
    if (!v.is_zero()) return false;
  return true;
}

FunctionOnX& FunctionOnX::operator+=(const FunctionOnX& rhs) {
  if (rhs.degree() != degree()) throw Error("DegreeMismatch", "adding functions of different degree");
  for (std::size_t x = 0; x < values_.size(); ++x) values_[x] += rhs.values_[x];
  return *this;
}

FunctionOnX& FunctionOnX::operator-=(const FunctionOnX& rhs) {
  if (rhs.degree() != degree()) throw Error("DegreeMismatch", "subtracting functions of different degree");
  for (std::size_t x = 0; x < values_.size(); ++x) values_[x] -= rhs.values_[x];
  return *this;
}

FunctionOnX& FunctionOnX::operator*=(const GaussianRational& scalar) {
  for (auto& v : values_) v *= scalar;
  return *this;
}

FunctionOnX act_on_function(const GroupAction& act, Element a, const FunctionOnX& f) {
  require_degree(act, f);
  if (a >= act.group().order()) throw Error("InvalidElement", "no such element", {{"element", as_i64(a)}});
  const Element a_inv = act.group().inverse(a);
  FunctionOnX out(f.degree());
  for (Point x = 0; x < f.degree(); ++x) out[x] = f[act.act(a_inv, x)];
  return out;
}

std::optional<InvariantCertificate> is_invariant(const GroupAction& act, const FunctionOnX& f) {
  require_degree(act, f);
  return certify(orbits(act), f);
}

std::optional<InvariantCertificate> is_invariant(const GroupAction& act, const Subgroup& h, const FunctionOnX& f) {
  require_degree(act, f);
  return certify(orbits(act, h), f);
}

std::vector<FunctionOnX> indicator_basis(const GroupAction& act) {
  std::vector<FunctionOnX> basis;
  const Partition cells_of = orbits(act);
  for (const auto& cell : cells_of.cells()) basis.push_back(FunctionOnX::indicator(act.degree(), cell));
  return basis;
}

GaussianRational inner_product(const FunctionOnX& f, const FunctionOnX& g) {
  if (f.degree() != g.degree())
    throw Error("DegreeMismatch", "inner product of functions of different degree",
                {{"lhs", as_i64(f.degree())}, {"rhs", as_i64(g.degree())}});
  if (f.degree() == 0) throw Error("EmptyDomain", "inner product on an empty set");
  GaussianRational s;
  for (Point x = 0; x < f.degree(); ++x) s += f[x] * g[x].conjugate();
  return s * GaussianRational(Rational(1) / count(f.degree()));
}

Rational norm_sq(const FunctionOnX& f) { return inner_product(f, f).re(); }

UnitarityCheck unitarity_check(const GroupAction& act, Element a, const FunctionOnX& f, const FunctionOnX& g) {
  UnitarityCheck r{inner_product(act_on_function(act, a, f), act_on_function(act, a, g)), inner_product(f, g)};
  if (!(r.acted == r.original))
    throw Error("IdentityViolated", "<a*f, a*g> != <f, g>", {{"element", as_i64(a)}});
  return r;
}

FunctionOnX fourier_projection(const GroupAction& act, const FunctionOnX& f) {
  require_degree(act, f);
  FunctionOnX out(f.degree());
  const Partition cells_of = orbits(act);
  for (const auto& cell : cells_of.cells()) {
    const GaussianRational average = cell_sum(f, cell) * GaussianRational(Rational(1) / count(cell.size()));
    for (Point x : cell) out[x] = average;
  }
  return out;
}

std::vector<FourierCoefficient> fourier_coefficients(const GroupAction& act, const FunctionOnX& f) {
  require_degree(act, f);
  std::vector<FourierCoefficient> out;
  const Rational n = count(f.degree());
  const Partition cells_of = orbits(act);
  for (const auto& cell : cells_of.cells()) {
    GaussianRational raw = cell_sum(f, cell);
    Rational modulus = raw.norm_sq() / (n * count(cell.size()));
    out.push_back({cell, std::move(raw), std::move(modulus)});
  }
  return out;
}

BesselCheck bessel_check(const GroupAction& act, const FunctionOnX& f) {
  require_degree(act, f);
  BesselCheck b;
  const Partition cells_of = orbits(act);
  for (const auto& cell : cells_of.cells()) b.orbit_side += cell_sum(f, cell).norm_sq() / count(cell.size());
  for (const auto& v : f.values()) b.total_side += v.norm_sq();
  if (b.orbit_side > b.total_side)
    throw Error("IdentityViolated", "Bessel's inequality fails: " + b.orbit_side.to_string() + " > " +
                                        b.total_side.to_string());
  if ((b.orbit_side == b.total_side) != is_invariant(act, f).has_value())
    throw Error("IdentityViolated", "Bessel equality disagrees with invariance");
  return b;
}

FunctionOnX strict_bessel_witness(const GroupAction& act) {
  const Partition cells_of = orbits(act);
  for (const auto& cell : cells_of.cells()) {
    if (cell.size() < 2) continue;
    FunctionOnX f = FunctionOnX::delta(act.degree(), cell.front());
    if (!(norm_sq(fourier_projection(act, f)) < norm_sq(f)))
      throw Error("IdentityViolated", "witness does not lose norm under projection",
                  {{"point", as_i64(cell.front())}});
    return f;
  }
  throw Error("ActionIsTrivial", "every orbit is a singleton, so projection is the identity");
}

GaussianRational sigma(const FunctionOnX& f) {
  GaussianRational s;
  for (const auto& v : f.values()) s += v;
  return s;
}

Decomposition decompose(const GroupAction& act, const FunctionOnX& f) {
  require_degree(act, f);
  Decomposition d;
  d.invariant_part = fourier_projection(act, f);
  d.perp_part = f - d.invariant_part;
  const GaussianRational mean = sigma(f) * GaussianRational(Rational(1) / count(f.degree()));
  d.mean_part = FunctionOnX::constant(f.degree(), mean);
  d.kernel_part = f - d.mean_part;
  d.invariant_kernel_part = d.invariant_part - d.mean_part;

  const Partition cells_of = orbits(act);

  for (const auto& cell : cells_of.cells())
    if (!cell_sum(d.perp_part, cell).is_zero())
      throw Error("IdentityViolated", "perpendicular part has nonzero orbit sum", {{"cell", as_i64(cell.front())}});
  if (!inner_product(d.invariant_part, d.perp_part).is_zero())
    throw Error("IdentityViolated", "invariant and perpendicular parts are not orthogonal");
  if (!sigma(d.kernel_part).is_zero() || !inner_product(d.mean_part, d.kernel_part).is_zero())
    throw Error("IdentityViolated", "kernel part is not in ker sigma");
  if (!sigma(d.invariant_kernel_part).is_zero() || !is_invariant(act, d.invariant_kernel_part))
    throw Error("IdentityViolated", "invariant kernel part is not in ker sigma restricted to L^G");
  return d;
}

std::vector<FunctionOnX> perp_spanning_set(const GroupAction& act) {
  const Partition p = orbits(act);
  std::vector<FunctionOnX> out;
  for (Point x = 0; x < act.degree(); ++x) {
    const auto& cell = p.cell(p.cell_of(x));
    FunctionOnX v = FunctionOnX::delta(act.degree(), x);
    v -= GaussianRational(Rational(1) / count(cell.size())) * FunctionOnX::indicator(act.degree(), cell);
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<FunctionOnX> sigma_kernel_spanning_set(std::size_t degree) {
  std::vector<FunctionOnX> out;
  for (Point x = 1; x < degree; ++x) out.push_back(FunctionOnX::delta(degree, x) - FunctionOnX::delta(degree, 0));
  return out;
}

std::vector<FunctionOnX> invariant_kernel_spanning_set(const GroupAction& act) {
  const Partition p = orbits(act);
  std::vector<FunctionOnX> out;
  const auto& first = p.cell(0);
  const FunctionOnX first_indicator = FunctionOnX::indicator(act.degree(), first);
  for (std::size_t i = 1; i < p.size(); ++i) {
    const auto& cell = p.cell(i);
    const GaussianRational ratio(count(cell.size()) / count(first.size()));
    out.push_back(FunctionOnX::indicator(act.degree(), cell) - ratio * first_indicator);
  }
  return out;
}

std::size_t rank(std::span<const FunctionOnX> functions) {
  std::vector<std::vector<GaussianRational>> rows;
  for (const auto& f : functions) rows.push_back(f.values());
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < rows.size() && rows[pivot][c].is_zero()) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    const GaussianRational inv = rows[r][c].inverse();
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][c].is_zero()) continue;
      const GaussianRational factor = rows[i][c] * inv;
      for (std::size_t k = c; k < cols; ++k) rows[i][k] -= factor * rows[r][k];
    }
    ++r;
  }
  return r;
}

PerpSubsetCheck perp_subset_check(const GroupAction& act) {
  const auto perp = perp_spanning_set(act);
  const auto basis = indicator_basis(act);
  PerpSubsetCheck out;
  out.is_subset = true;
  for (const auto& v : perp) {
    for (const auto& b : basis)
      if (!inner_product(v, b).is_zero())
        throw Error("IdentityViolated", "spanning vector is not orthogonal to L^G(X)");
    if (!sigma(v).is_zero()) out.is_subset = false;
  }
  out.perp_dimension = rank(perp);
  out.kernel_dimension = rank(sigma_kernel_spanning_set(act.degree()));
  if (out.perp_dimension != act.degree() - basis.size() || out.kernel_dimension != act.degree() - 1)
    throw Error("IdentityViolated", "spanning set dimension disagrees with the orbit count",
                {{"perp", as_i64(out.perp_dimension)}, {"kernel", as_i64(out.kernel_dimension)}});
  out.equality = out.is_subset && out.perp_dimension == out.kernel_dimension;
  return out;
}

FunctionOnX transport(const FunctionOnX& f, const Permutation& phi) {
  if (phi.size() != f.degree())
    throw Error("DegreeMismatch", "bijection length differs from function degree", {{"length", as_i64(phi.size())}});
  check_permutation(phi);
  FunctionOnX out(f.degree());
  for (Point x = 0; x < f.degree(); ++x) out[phi[x]] = f[x];
  return out;
}

}  // namespace fixspace
