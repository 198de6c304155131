#include "flagorient/classical.hpp"

#include <algorithm>
#include <stdexcept>

namespace flagorient {

namespace {

int min_rank(Family f) {
  switch (f) {
    case Family::A: return 1;
    case Family::B: return 2;
    case Family::C: return 3;
    case Family::D: return 4;
    default: throw std::invalid_argument("classical family expected (A-D)");
  }
}

std::vector<long long> with_leading_zero(std::vector<int> const &dims) {
  std::vector<long long> seq{0};
  seq.insert(seq.end(), dims.begin(), dims.end());
  return seq;
}

bool all_diffs_odd(std::vector<long long> const &seq) {
  for (size_t i = 0; i + 1 < seq.size(); ++i)
    if ((seq[i + 1] - seq[i]) % 2 == 0) return false;
  return true;
}

bool all_diffs_even(std::vector<long long> const &seq) {
  for (size_t i = 0; i + 1 < seq.size(); ++i)
    if ((seq[i + 1] - seq[i]) % 2 != 0) return false;
  return true;
}

}  // namespace

void FlagDims::validate() const {
  int lo = min_rank(family);
  if (l < lo)
    throw std::invalid_argument("rank too small for family " + family_name(family));
  int hi = family == Family::D ? l - 2 : l;
  int prev = 0;
  for (int d : dims) {
    if (d <= prev)
      throw std::invalid_argument("dims must be strictly increasing");
    if (d < 1 || d > hi)
      throw std::invalid_argument("dimension " + std::to_string(d) + " out of range");
    prev = d;
  }
  if (!half_spin.empty() && family != Family::D)
    throw std::invalid_argument("half-spin markers only apply to family D");
}

std::string FlagDims::token() const {
  std::string t = family_name(family) + std::to_string(l) + ":";
  bool first = true;
  for (int d : dims) {
    if (!first) t += ",";
    t += std::to_string(d);
    first = false;
  }
  if (half_spin.count(HalfSpin::Plus)) {
    if (!first) t += ",";
    t += "l+";
    first = false;
  }
  if (half_spin.count(HalfSpin::Minus)) {
    if (!first) t += ",";
    t += "l-";
  }
  return t;
}

ParabolicSubset dims_to_theta(FlagDims const &fd) {
  fd.validate();
  std::vector<int> removed(fd.dims);
  if (fd.half_spin.count(HalfSpin::Plus)) removed.push_back(fd.l);
  if (fd.half_spin.count(HalfSpin::Minus)) removed.push_back(fd.l - 1);
  std::vector<int> idx;
  for (int i = 1; i <= fd.l; ++i)
    if (std::find(removed.begin(), removed.end(), i) == removed.end())
      idx.push_back(i);
  return ParabolicSubset(idx);
}

bool mod2_condition(std::vector<long long> const &seq) {
  if (seq.empty() || seq.front() != 0)
    throw std::invalid_argument("sequence must start at 0");
  for (size_t i = 0; i + 1 < seq.size(); ++i)
    if (seq[i + 1] <= seq[i])
      throw std::invalid_argument("sequence must be strictly increasing");
  if (seq.size() < 3) return true;
  long long first = (seq[1] - seq[0]) % 2;
  for (size_t i = 1; i + 1 < seq.size(); ++i)
    if ((seq[i + 1] - seq[i]) % 2 != first) return false;
  return true;
}

bool orientable_closed_form(FlagDims const &fd) {
  fd.validate();
  auto seq = with_leading_zero(fd.dims);
  switch (fd.family) {
    case Family::A:
      seq.push_back(fd.l + 1);
      return mod2_condition(seq);
    case Family::B:
      if (!fd.dims.empty() && fd.dims.back() == fd.l) return mod2_condition(seq);
      return all_diffs_even(seq);
    case Family::C:
      return all_diffs_odd(seq);
    case Family::D: {
      size_t spins = fd.half_spin.size();
      if (spins == 0) return all_diffs_odd(seq);
      if (spins == 1) {
        seq.push_back(fd.l);
        return mod2_condition(seq);
      }
      long long dk = fd.dims.empty() ? 0 : fd.dims.back();
      return all_diffs_odd(seq) && (fd.l - dk) % 2 == 0;
    }
    default:
      throw std::invalid_argument("classical family expected (A-D)");
  }
}

std::vector<Discrepancy> cross_validate(Family family, int l_max) {
  std::vector<Discrepancy> out;
  for (int l = min_rank(family); l <= l_max; ++l) {
    RootSystemSpec spec;
    spec.family = family;
    spec.rank = l;
    RootSystem rs = build_root_system(spec);

    int dmax = family == Family::D ? l - 2 : l;
    std::vector<std::set<HalfSpin>> spins{{}};
    if (family == Family::D)
      spins = {{}, {HalfSpin::Plus}, {HalfSpin::Minus}, {HalfSpin::Plus, HalfSpin::Minus}};

    for (unsigned mask = 0; mask < (1u << dmax); ++mask) {
      std::vector<int> dims;
      for (int d = 1; d <= dmax; ++d)
        if (mask & (1u << (d - 1))) dims.push_back(d);
      for (auto const &hs : spins) {
        FlagDims fd;
        fd.family = family;
        fd.l = l;
        fd.dims = dims;
        fd.half_spin = hs;
        bool cf = orientable_closed_form(fd);
        bool gen = flag_orientable_full(rs, dims_to_theta(fd)).orientable;
        if (cf != gen) out.push_back({fd, cf, gen});
      }
    }
  }
  return out;
}

}  // namespace flagorient
