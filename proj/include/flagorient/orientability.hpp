#ifndef FLAGORIENT_ORIENTABILITY_HPP
#define FLAGORIENT_ORIENTABILITY_HPP

#include <map>
#include <vector>

#include "flagorient/rootsys.hpp"

// The general orientability criteria.  A flag manifold F_Theta, or a
// stable/unstable bundle over a fixed-point component of the gradient flow
// induced by a chamber element H, is orientable iff a family of mod-2 sums
// of weighted Cartan integers all vanish.  Reports keep the full signed
// sums, not just parities, since the table machinery reuses them.

namespace flagorient {

// H in the closed positive chamber, given by its values on the simple roots.
struct ChamberElement {
  std::vector<Rat> values;  // values[i] = alpha_{i+1}(H) >= 0

  // Theta(H) = simple roots vanishing on H (exact rational equality).
  ParabolicSubset theta(int rank) const;
  // beta(H) for a root given by coefficients.
  Rat eval(std::vector<int> const &coeffs) const;
};

enum class BundleSign { Stable, Unstable };

struct BundleQuery {
  ParabolicSubset theta;
  ChamberElement H;
  WeylWord w;
  BundleSign sign = BundleSign::Stable;
};

struct OrientabilityReport {
  bool orientable = true;
  std::map<int, long long> sums;   // checked simple index -> sum n_b <a^vee,b>
  std::vector<int> failing;        // indices with odd sum
  std::vector<Root> checked_roots; // the set Gamma summed over
  bool vacuous = false;            // no simple root was checked
};

// (-1)^(sum over gamma_set of n_beta <alpha^vee, beta>).
int gamma_det_sign(RootSystem const &rs, int alpha_index,
                   std::vector<Root> const &gamma_set);

// Sums over Pi+ minus <Theta>+ for every simple root.
OrientabilityReport flag_orientable_full(RootSystem const &rs,
                                         ParabolicSubset const &theta);

// Equivalent verdict: sums over <Theta>+ for the simple roots outside Theta.
OrientabilityReport flag_orientable_reduced(RootSystem const &rs,
                                            ParabolicSubset const &theta);

// Pi_Theta^-(H,w) (stable) or Pi_Theta^+(H,w) (unstable): roots beta with
// beta(H) of the requested sign and (w^-1 beta)(H_Theta) < 0, where H_Theta
// is the canonical chamber element valued 0 on Theta and 1 elsewhere.
std::vector<Root> stable_root_set(RootSystem const &rs, BundleQuery const &q);

// Orientability of V_Theta^+-(H,w): sums over the set above, checked for
// every alpha in Theta(H); vacuously orientable when Theta(H) is empty.
OrientabilityReport bundle_orientable(RootSystem const &rs, BundleQuery const &q);

struct FixedComponent {
  WeylWord word;                    // first (shortest) witnessing w
  std::vector<Root> stable_set;
  std::vector<Root> unstable_set;
  OrientabilityReport stable;
  OrientabilityReport unstable;
  long long stable_dim = 0;         // sum of multiplicities
  long long unstable_dim = 0;
};

// Scans w over W, merging w's with identical (stable, unstable) root-set
// pairs; one entry per distinct component, in order of first appearance.
std::vector<FixedComponent> fixed_components_scan(RootSystem const &rs,
                                                  ParabolicSubset const &theta,
                                                  ChamberElement const &H,
                                                  unsigned long long limit);

// Same scan over a caller-supplied element list (e.g. a cached enumeration).
std::vector<FixedComponent> fixed_components_scan(RootSystem const &rs,
                                                  ParabolicSubset const &theta,
                                                  ChamberElement const &H,
                                                  std::vector<WeylElement> const &elements);

}  // namespace flagorient

#endif
