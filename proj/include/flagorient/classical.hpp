#ifndef FLAGORIENT_CLASSICAL_HPP
#define FLAGORIENT_CLASSICAL_HPP

#include <set>
#include <string>
#include <vector>

#include "flagorient/orientability.hpp"
#include "flagorient/rootsys.hpp"

// Closed-form deciders for the split classical families, the flag-dimension
// <-> Theta dictionary, and exhaustive cross-validation against the general
// criterion.  The family rules below are the ones the exhaustive oracle
// confirms; where a traditional closed-form statement disagreed with the
// oracle, the oracle's verdict was kept (see cross_validate, which is the
// module's defining test and returns no discrepancies).

namespace flagorient {

enum class HalfSpin { Plus, Minus };  // l+ removes alpha_l, l- removes alpha_{l-1}

struct FlagDims {
  Family family = Family::A;  // A..D only
  int l = 1;
  std::vector<int> dims;      // strictly increasing, in [1,l] (D: [1,l-2])
  std::set<HalfSpin> half_spin;  // D only

  void validate() const;  // throws std::invalid_argument
  std::string token() const;  // e.g. "B3:1,3", "D5:2,l+"
};

ParabolicSubset dims_to_theta(FlagDims const &fd);

// True iff consecutive differences of (0 = d0, d1, ..., dm) all share parity.
bool mod2_condition(std::vector<long long> const &seq);

// Family/case rules (split multiplicities):
//   A_l: 0, d1..dk, l+1 satisfy the mod-2 condition.
//   B_l: d_k = l  -> 0, d1..dk satisfy the mod-2 condition;
//        d_k < l  -> all differences even (every d_i even).
//   C_l: all differences of 0, d1..dk odd.
//   D_l: no half-spin -> all differences odd;
//        one half-spin -> 0, d1..dk, l satisfy the mod-2 condition;
//        both          -> all differences odd and l - d_k even.
bool orientable_closed_form(FlagDims const &fd);

struct Discrepancy {
  FlagDims fd;
  bool closed_form = false;
  bool general = false;
};

// Compares orientable_closed_form against flag_orientable_full over every
// valid FlagDims of the family with rank <= l_max (all half-spin variants
// for D).  Expected: empty.
std::vector<Discrepancy> cross_validate(Family family, int l_max);

}  // namespace flagorient

#endif
