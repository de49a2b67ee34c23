#include "fixspace/res_ind.hpp"

#include <algorithm>

#include "fixspace/error.hpp"

namespace fixspace {

namespace {

std::int64_t as_i64(std::size_t v) { return static_cast<std::int64_t>(v); }

}  // namespace

InvariantSubset::InvariantSubset(GroupAction action, std::vector<Point> points)
    : action_(std::move(action)), points_(std::move(points)), position_(action_.degree()) {
  for (std::size_t i = 0; i < points_.size(); ++i) position_[points_[i]] = i;
}

InvariantSubset invariant_subset(const GroupAction& act, std::vector<Point> points) {
  if (points.empty()) throw Error("EmptySubset", "an invariant subset must be nonempty");
  for (Point x : points)
    if (x >= act.degree()) throw Error("PointOutOfRange", "no such point", {{"point", as_i64(x)}});
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  InvariantSubset y(act, std::move(points));
  for (Element a = 0; a < act.group().order(); ++a)
    for (Point p : y.points())
      if (!y.contains(act.act(a, p)))
        throw Error("NotInvariant", "a point of the subset is moved outside it",
                    {{"element", as_i64(a)}, {"point", as_i64(p)}, {"image", as_i64(act.act(a, p))}});
  return y;
}

FunctionOnY make_function_on(const InvariantSubset& y, std::vector<GaussianRational> values) {
  if (values.size() != y.size())
    throw Error("DegreeMismatch", "value count differs from subset size",
                {{"values", as_i64(values.size())}, {"subset", as_i64(y.size())}});
  return FunctionOnY{y, std::move(values)};
}

bool is_invariant(const FunctionOnY& g) {
  const GroupAction& act = g.subset.action();
  for (Element a = 0; a < act.group().order(); ++a)
    for (Point p : g.subset.points())
      if (!(g.at(act.act(a, p)) == g.at(p))) return false;
  return true;
}

GaussianRational inner_product(const FunctionOnY& f, const FunctionOnY& g) {
  if (f.subset.points() != g.subset.points()) throw Error("DegreeMismatch", "functions live on different subsets");
  GaussianRational s;
  for (std::size_t i = 0; i < f.values.size(); ++i) s += f.values[i] * g.values[i].conjugate();
  return s * GaussianRational(Rational(1) / Rational(static_cast<std::int64_t>(f.values.size())));
}

FunctionOnY restrict(const FunctionOnX& f, const InvariantSubset& y) {
  if (f.degree() != y.action().degree())
    throw Error("DegreeMismatch", "function degree differs from the ambient set",
                {{"function", as_i64(f.degree())}, {"action", as_i64(y.action().degree())}});
  std::vector<GaussianRational> values;
  values.reserve(y.size());
  for (Point p : y.points()) values.push_back(f[p]);
  return FunctionOnY{y, std::move(values)};
}

FunctionOnX extend_by_zero(const FunctionOnY& g) {
  FunctionOnX out(g.subset.action().degree());
  for (std::size_t i = 0; i < g.values.size(); ++i) out[g.subset.points()[i]] = g.values[i];
  return out;
}

FunctionOnX induce(const FunctionOnY& g) {
  const GroupAction& act = g.subset.action();
  const FiniteGroup& group = act.group();
  const FunctionOnX extended = extend_by_zero(g);
  const GaussianRational scale(Rational(static_cast<std::int64_t>(act.degree())) /
                               (Rational(static_cast<std::int64_t>(group.order())) *
                                Rational(static_cast<std::int64_t>(g.subset.size()))));
  FunctionOnX out(act.degree());
  for (Point x = 0; x < act.degree(); ++x) {
    GaussianRational s;
    for (Element b = 0; b < group.order(); ++b) s += extended[act.act(group.inverse(b), x)];
    out[x] = scale * s;
  }
  return out;
}

ReciprocityReport reciprocity_check(const FunctionOnY& f, const FunctionOnX& g) {
  const GroupAction& act = f.subset.action();
  if (g.degree() != act.degree())
    throw Error("DegreeMismatch", "function degree differs from the ambient set",
                {{"function", as_i64(g.degree())}, {"action", as_i64(act.degree())}});
  ReciprocityReport r;
  r.induced_side = inner_product(induce(f), g);
  r.restricted_side = inner_product(f, restrict(g, f.subset));
  r.f_invariant = is_invariant(f);
  r.g_invariant = is_invariant(act, g).has_value();
  if (r.preconditions_hold() && !r.equal())
    throw Error("IdentityViolated", "<Ind f, g> = " + r.induced_side.to_string() + " but <f, Res g> = " +
                                        r.restricted_side.to_string());
  return r;
}

}  // namespace fixspace
