#include "flagorient/orientability.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace flagorient {

ParabolicSubset ChamberElement::theta(int rank) const {
  if (static_cast<int>(values.size()) != rank)
    throw std::invalid_argument("chamber element has wrong length");
  std::vector<int> idx;
  for (int i = 0; i < rank; ++i) {
    if (values[i] < Rat(0))
      throw std::invalid_argument("H must lie in the closed positive chamber");
    if (values[i] == Rat(0)) idx.push_back(i + 1);
  }
  return ParabolicSubset(idx);
}

Rat ChamberElement::eval(std::vector<int> const &coeffs) const {
  Rat s(0);
  for (size_t i = 0; i < coeffs.size(); ++i)
    if (coeffs[i] != 0) s += Rat(coeffs[i]) * values[i];
  return s;
}

namespace {

// Common report assembly: parity of sum_{beta in gamma} n_beta <alpha^vee, beta>
// for each checked simple index.
OrientabilityReport make_report(RootSystem const &rs, std::vector<int> const &alphas,
                                std::vector<Root> const &gamma) {
  OrientabilityReport rep;
  rep.checked_roots = gamma;
  rep.vacuous = alphas.empty();
  for (int a : alphas) {
    long long s = 0;
    for (auto const &b : gamma) s += b.mult * rs.cartan_row_dot(a, b.coeffs);
    rep.sums[a] = s;
    if (s % 2 != 0) rep.failing.push_back(a);
  }
  rep.orientable = rep.failing.empty();
  return rep;
}

std::vector<int> all_simples(RootSystem const &rs) {
  std::vector<int> v(rs.rank);
  for (int i = 0; i < rs.rank; ++i) v[i] = i + 1;
  return v;
}

}  // namespace

int gamma_det_sign(RootSystem const &rs, int alpha_index,
                   std::vector<Root> const &gamma_set) {
  if (alpha_index < 1 || alpha_index > rs.rank)
    throw std::invalid_argument("simple index out of range");
  long long s = 0;
  for (auto const &b : gamma_set) {
    if (!rs.is_root(b.coeffs))
      throw std::invalid_argument("gamma_det_sign: set contains a non-root");
    s += b.mult * rs.cartan_row_dot(alpha_index, b.coeffs);
  }
  return s % 2 == 0 ? +1 : -1;
}

OrientabilityReport flag_orientable_full(RootSystem const &rs,
                                         ParabolicSubset const &theta) {
  std::set<std::vector<int>> inside;
  for (auto const &r : span_subset(rs, theta)) inside.insert(r.coeffs);
  std::vector<Root> gamma;
  for (auto const &r : rs.positive_roots)
    if (!inside.count(r.coeffs)) gamma.push_back(r);
  return make_report(rs, all_simples(rs), gamma);
}

OrientabilityReport flag_orientable_reduced(RootSystem const &rs,
                                            ParabolicSubset const &theta) {
  std::vector<int> alphas;
  for (int i = 1; i <= rs.rank; ++i)
    if (!theta.contains(i)) alphas.push_back(i);
  return make_report(rs, alphas, span_subset(rs, theta));
}

std::vector<Root> stable_root_set(RootSystem const &rs, BundleQuery const &q) {
  if (static_cast<int>(q.H.values.size()) != rs.rank)
    throw std::invalid_argument("chamber element has wrong length");
  for (int i : q.theta.indices)
    if (i < 1 || i > rs.rank) throw std::invalid_argument("theta index out of range");
  for (int letter : q.w.letters)
    if (letter < 1 || letter > rs.rank)
      throw std::invalid_argument("word letter out of range");

  // Canonical H_Theta: 0 on Theta, 1 off Theta; beta(w H_Theta) is evaluated
  // as (w^-1 beta)(H_Theta), w^-1 being the reversed word.
  ChamberElement h_theta;
  h_theta.values.assign(rs.rank, Rat(1));
  for (int i : q.theta.indices) h_theta.values[i - 1] = Rat(0);
  WeylWord winv = q.w.reversed();

  std::vector<Root> out;
  for (auto const &pr : rs.positive_roots) {
    for (int sign : {+1, -1}) {
      std::vector<int> c(pr.coeffs);
      if (sign < 0)
        for (auto &x : c) x = -x;
      Rat at_h = q.H.eval(c);
      if (q.sign == BundleSign::Stable ? !(at_h < Rat(0)) : !(at_h > Rat(0)))
        continue;
      Root beta = rs.make_root(c);
      Root moved = weyl_apply(rs, winv, beta);
      if (h_theta.eval(moved.coeffs) < Rat(0)) out.push_back(beta);
    }
  }
  return out;
}

OrientabilityReport bundle_orientable(RootSystem const &rs, BundleQuery const &q) {
  auto gamma = stable_root_set(rs, q);
  auto theta_h = q.H.theta(rs.rank);
  return make_report(rs, theta_h.indices, gamma);
}

std::vector<FixedComponent> fixed_components_scan(RootSystem const &rs,
                                                  ParabolicSubset const &theta,
                                                  ChamberElement const &H,
                                                  unsigned long long limit) {
  return fixed_components_scan(rs, theta, H, weyl_enumerate(rs, limit));
}

std::vector<FixedComponent> fixed_components_scan(RootSystem const &rs,
                                                  ParabolicSubset const &theta,
                                                  ChamberElement const &H,
                                                  std::vector<WeylElement> const &elements) {
  using Key = std::pair<std::vector<std::vector<int>>, std::vector<std::vector<int>>>;
  std::map<Key, int> seen;
  std::vector<FixedComponent> out;

  for (auto const &e : elements) {
    BundleQuery q;
    q.theta = theta;
    q.H = H;
    q.w = e.word;

    q.sign = BundleSign::Stable;
    auto stable = stable_root_set(rs, q);
    q.sign = BundleSign::Unstable;
    auto unstable = stable_root_set(rs, q);

    Key key;
    for (auto const &r : stable) key.first.push_back(r.coeffs);
    for (auto const &r : unstable) key.second.push_back(r.coeffs);
    std::sort(key.first.begin(), key.first.end());
    std::sort(key.second.begin(), key.second.end());
    if (seen.count(key)) continue;
    seen[key] = static_cast<int>(out.size());

    FixedComponent fc;
    fc.word = e.word;
    fc.stable_set = stable;
    fc.unstable_set = unstable;
    q.sign = BundleSign::Stable;
    fc.stable = bundle_orientable(rs, q);
    q.sign = BundleSign::Unstable;
    fc.unstable = bundle_orientable(rs, q);
    for (auto const &r : stable) fc.stable_dim += r.mult;
    for (auto const &r : unstable) fc.unstable_dim += r.mult;
    out.push_back(std::move(fc));
  }
  return out;
}

}  // namespace flagorient
