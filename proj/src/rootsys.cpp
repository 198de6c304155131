#include "flagorient/rootsys.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

namespace flagorient {

namespace {

std::vector<Rat> rat_vec(std::vector<long long> const &v) {
  std::vector<Rat> out;
  out.reserve(v.size());
  for (auto x : v) out.emplace_back(x);
  return out;
}

// Standard realizations.  Simple roots follow the diagram labelings used by
// the golden tables: the short/long roots sit at the positions the table
// keys assume (B_l: alpha_l short; C_l: alpha_l long; G2: alpha_1 long).
std::vector<std::vector<Rat>> simple_roots_ambient(Family f, int l) {
  std::vector<std::vector<Rat>> s;
  auto unit = [](int n, int i, long long v) {
    std::vector<Rat> e(n, Rat(0));
    e[i] = Rat(v);
    return e;
  };
  switch (f) {
    case Family::A: {
      int n = l + 1;
      for (int i = 0; i < l; ++i) {
        auto e = unit(n, i, 1);
        e[i + 1] = Rat(-1);
        s.push_back(e);
      }
      break;
    }
    case Family::B:
    case Family::BC:
    case Family::C:
    case Family::D: {
      int n = l;
      for (int i = 0; i + 1 < l; ++i) {
        auto e = unit(n, i, 1);
        e[i + 1] = Rat(-1);
        s.push_back(e);
      }
      if (f == Family::B || f == Family::BC) s.push_back(unit(n, l - 1, 1));
      if (f == Family::C) s.push_back(unit(n, l - 1, 2));
      if (f == Family::D) {
        auto e = unit(n, l - 2, 1);
        e[l - 1] = Rat(1);
        s.push_back(e);
      }
      break;
    }
    case Family::G:
      s.push_back(rat_vec({-2, 1, 1}));  // alpha_1, the longer root
      s.push_back(rat_vec({1, -1, 0}));
      break;
    case Family::F:
      s.push_back(rat_vec({0, 1, -1, 0}));
      s.push_back(rat_vec({0, 0, 1, -1}));
      s.push_back(rat_vec({0, 0, 0, 1}));
      s.push_back({Rat(1, 2), Rat(-1, 2), Rat(-1, 2), Rat(-1, 2)});
      break;
    case Family::E: {
      // sl(9)-based realization in R^9: roots lambda_i - lambda_j and
      // +-(lambda_i + lambda_j + lambda_k), inner product
      // <u,v> = u.v - (sum u)(sum v)/9.
      auto lam = [&](int i, int j) {
        auto e = unit(9, i, 1);
        e[j] = Rat(-1);
        return e;
      };
      auto tri = [&](int i, int j, int k) {
        std::vector<Rat> e(9, Rat(0));
        e[i] = e[j] = e[k] = Rat(-1);
        return e;
      };
      // alpha_1 .. alpha_{l-1} form the chain lambda_{l-1}-lambda_l, ...,
      // lambda_1-lambda_2; alpha_l = -(lambda_1+lambda_2+lambda_3) hangs off
      // the node alpha_{l-3} and creates the branch.
      for (int i = l - 2; i >= 0; --i) s.push_back(lam(i, i + 1));
      s.push_back(tri(0, 1, 2));
      break;
    }
  }
  return s;
}

Rat ambient_inner(Family f, std::vector<Rat> const &u, std::vector<Rat> const &v) {
  Rat dot(0), su(0), sv(0);
  for (size_t i = 0; i < u.size(); ++i) {
    dot += u[i] * v[i];
    su += u[i];
    sv += v[i];
  }
  if (f == Family::E) return dot - su * sv / 9;
  return dot;
}

long long expected_positive_count(Family f, int l) {
  switch (f) {
    case Family::A: return 1LL * l * (l + 1) / 2;
    case Family::B:
    case Family::C: return 1LL * l * l;
    case Family::D: return 1LL * l * (l - 1);
    case Family::G: return 6;
    case Family::F: return 24;
    case Family::E: return l == 6 ? 36 : l == 7 ? 63 : 120;
    case Family::BC: return 1LL * l * l + l;
  }
  return 0;
}

void check_rank(Family f, int l) {
  bool ok = false;
  switch (f) {
    case Family::A: ok = l >= 1; break;
    case Family::B: ok = l >= 2; break;
    case Family::C: ok = l >= 3; break;
    case Family::D: ok = l >= 4; break;
    case Family::E: ok = l == 6 || l == 7 || l == 8; break;
    case Family::F: ok = l == 4; break;
    case Family::G: ok = l == 2; break;
    case Family::BC: ok = l >= 1; break;
  }
  if (!ok)
    throw std::invalid_argument("invalid rank " + std::to_string(l) +
                                " for family " + family_name(f));
}

}  // namespace

std::string family_name(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
    case Family::E: return "E";
    case Family::F: return "F";
    case Family::G: return "G";
    case Family::BC: return "BC";
  }
  return "?";
}

ParabolicSubset::ParabolicSubset(std::vector<int> idx) : indices(std::move(idx)) {
  std::sort(indices.begin(), indices.end());
  indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
}

bool ParabolicSubset::contains(int i) const {
  return std::binary_search(indices.begin(), indices.end(), i);
}

WeylWord WeylWord::reversed() const {
  WeylWord r;
  r.letters.assign(letters.rbegin(), letters.rend());
  return r;
}

std::optional<int> RootSystem::positive_index(std::vector<int> const &coeffs) const {
  auto it = pos_index_.find(coeffs);
  if (it == pos_index_.end()) return std::nullopt;
  return it->second;
}

bool RootSystem::is_root(std::vector<int> const &coeffs) const {
  if (positive_index(coeffs)) return true;
  std::vector<int> neg(coeffs);
  for (auto &x : neg) x = -x;
  return positive_index(neg).has_value();
}

Root RootSystem::make_root(std::vector<int> const &coeffs) const {
  std::vector<int> neg(coeffs);
  for (auto &x : neg) x = -x;
  const Root *base = nullptr;
  if (auto i = positive_index(coeffs)) base = &positive_roots[*i];
  else if (auto j = positive_index(neg)) base = &positive_roots[*j];
  else throw std::invalid_argument("not a root of " + type_token());
  Root r;
  r.coeffs = coeffs;
  r.ambient.assign(simple_ambient[0].size(), Rat(0));
  for (int j = 0; j < rank; ++j)
    for (size_t k = 0; k < r.ambient.size(); ++k)
      r.ambient[k] += Rat(coeffs[j]) * simple_ambient[j][k];
  r.mult = base->mult;
  r.length2 = base->length2;
  return r;
}

Root RootSystem::simple_root(int i) const {
  if (i < 1 || i > rank) throw std::invalid_argument("simple index out of range");
  std::vector<int> c(rank, 0);
  c[i - 1] = 1;
  return make_root(c);
}

Rat RootSystem::inner(std::vector<int> const &u, std::vector<int> const &v) const {
  Rat s(0);
  for (int i = 0; i < rank; ++i) {
    if (u[i] == 0) continue;
    for (int j = 0; j < rank; ++j) {
      if (v[j] == 0) continue;
      s += Rat(u[i]) * gram[i][j] * Rat(v[j]);
    }
  }
  return s;
}

long long RootSystem::cartan_row_dot(int i, std::vector<int> const &beta_coeffs) const {
  long long s = 0;
  for (int j = 0; j < rank; ++j) s += 1LL * cartan[i - 1][j] * beta_coeffs[j];
  return s;
}

std::string RootSystem::type_token() const {
  return family_name(spec.family) + std::to_string(rank);
}

RootSystem build_root_system(RootSystemSpec const &spec) {
  check_rank(spec.family, spec.rank);
  int const l = spec.rank;

  RootSystem rs;
  rs.spec = spec;
  rs.rank = l;
  rs.reduced = spec.family != Family::BC;
  rs.simple_ambient = simple_roots_ambient(spec.family, l);

  rs.gram.assign(l, std::vector<Rat>(l));
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j)
      rs.gram[i][j] = ambient_inner(spec.family, rs.simple_ambient[i], rs.simple_ambient[j]);

  rs.cartan.assign(l, std::vector<int>(l));
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) {
      Rat c = 2 * rs.gram[i][j] / rs.gram[i][i];
      if (c.denominator() != 1)
        throw std::logic_error("non-integral Cartan entry in " + rs.type_token());
      rs.cartan[i][j] = static_cast<int>(c.numerator());
    }

  for (int i = 0; i < l; ++i)
    for (int j = i + 1; j < l; ++j) {
      if (rs.cartan[i][j] == 0) continue;
      DynkinEdge e;
      e.i = i + 1;
      e.j = j + 1;
      e.bond = rs.cartan[i][j] * rs.cartan[j][i];
      if (e.bond > 1)  // arrow points at the shorter root
        e.arrow_to = rs.gram[i][i] < rs.gram[j][j] ? i + 1 : j + 1;
      rs.adjacency.push_back(e);
    }

  // Positive roots by root-string closure from the simple roots: for a root
  // beta and simple alpha_i, beta + alpha_i is a root iff q > 0 where
  // p - q = <alpha_i^vee, beta> and p is the depth of the string below beta.
  std::set<std::vector<int>> pos;
  auto is_known = [&](std::vector<int> c) {
    if (pos.count(c)) return true;
    for (auto &x : c) x = -x;
    return pos.count(c) != 0;
  };
  std::vector<std::vector<int>> frontier;
  for (int i = 0; i < l; ++i) {
    std::vector<int> e(l, 0);
    e[i] = 1;
    pos.insert(e);
    frontier.push_back(e);
  }
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (auto const &c : frontier) {
      for (int i = 0; i < l; ++i) {
        long long k = 0;
        for (int j = 0; j < l; ++j) k += 1LL * rs.cartan[i][j] * c[j];
        long long p = 0;
        std::vector<int> down(c);
        for (;;) {
          down[i] -= 1;
          bool zero = std::all_of(down.begin(), down.end(), [](int x) { return x == 0; });
          if (zero || !is_known(down)) break;
          ++p;
        }
        if (p - k > 0) {
          std::vector<int> up(c);
          up[i] += 1;
          if (pos.insert(up).second) next.push_back(up);
        }
      }
    }
    frontier = std::move(next);
  }

  if (spec.family == Family::BC) {
    // Append the doubled short roots 2*lambda_i = 2(alpha_i + ... + alpha_l).
    for (int i = 0; i < l; ++i) {
      std::vector<int> c(l, 0);
      for (int j = i; j < l; ++j) c[j] = 2;
      pos.insert(c);
    }
  }

  std::vector<std::vector<int>> ordered(pos.begin(), pos.end());
  std::sort(ordered.begin(), ordered.end(), [](auto const &a, auto const &b) {
    long long ha = std::accumulate(a.begin(), a.end(), 0LL);
    long long hb = std::accumulate(b.begin(), b.end(), 0LL);
    return ha != hb ? ha < hb : a < b;
  });

  if (static_cast<long long>(ordered.size()) != expected_positive_count(spec.family, l))
    throw std::logic_error("positive-root count mismatch for " + rs.type_token());

  // Length classes, ascending; a single class counts as "long".
  std::set<Rat> lengths;
  std::map<std::vector<int>, Rat> len2;
  for (auto const &c : ordered) {
    Rat q = rs.inner(c, c);
    len2[c] = q;
    lengths.insert(q);
  }
  std::map<Rat, LengthClass> cls;
  {
    std::vector<Rat> ls(lengths.begin(), lengths.end());
    if (ls.size() == 1) cls[ls[0]] = LengthClass::Long;
    else if (ls.size() == 2) {
      cls[ls[0]] = LengthClass::Short;
      cls[ls[1]] = LengthClass::Long;
    } else if (ls.size() == 3) {
      cls[ls[0]] = LengthClass::Short;
      cls[ls[1]] = LengthClass::Long;
      cls[ls[2]] = LengthClass::DoubleOfShort;
    } else {
      throw std::logic_error("unexpected number of root-length classes");
    }
  }

  auto mult_of = [&](LengthClass c) -> int {
    switch (spec.preset) {
      case MultPreset::Split: return 1;
      case MultPreset::Complex: return 2;
      case MultPreset::Custom: {
        auto it = spec.custom_mult.find(c);
        if (it == spec.custom_mult.end())
          throw std::invalid_argument("custom multiplicities missing a length class");
        if (it->second < 1)
          throw std::invalid_argument("multiplicities must be positive");
        return it->second;
      }
    }
    return 1;
  };

  for (size_t idx = 0; idx < ordered.size(); ++idx) {
    Root r;
    r.coeffs = ordered[idx];
    r.ambient.assign(rs.simple_ambient[0].size(), Rat(0));
    for (int j = 0; j < l; ++j)
      for (size_t k = 0; k < r.ambient.size(); ++k)
        r.ambient[k] += Rat(r.coeffs[j]) * rs.simple_ambient[j][k];
    r.length2 = len2[r.coeffs];
    r.mult = mult_of(cls.at(r.length2));
    rs.positive_roots.push_back(std::move(r));
    rs.pos_index_[ordered[idx]] = static_cast<int>(idx);
  }
  return rs;
}

long long cartan_integer(RootSystem const &rs, Root const &alpha, Root const &beta) {
  if (!rs.is_root(alpha.coeffs) || !rs.is_root(beta.coeffs))
    throw std::invalid_argument("cartan_integer: argument is not a root of " + rs.type_token());
  Rat c = 2 * rs.inner(alpha.coeffs, beta.coeffs) / rs.inner(alpha.coeffs, alpha.coeffs);
  if (c.denominator() != 1)
    throw std::logic_error("non-integral Cartan integer");
  return c.numerator();
}

Root reflect(RootSystem const &rs, int i, Root const &beta) {
  if (i < 1 || i > rs.rank) throw std::invalid_argument("simple index out of range");
  if (!rs.is_root(beta.coeffs)) throw std::invalid_argument("reflect: not a root");
  long long k = rs.cartan_row_dot(i, beta.coeffs);
  std::vector<int> c(beta.coeffs);
  c[i - 1] -= static_cast<int>(k);
  return rs.make_root(c);
}

Root weyl_apply(RootSystem const &rs, WeylWord const &w, Root const &beta) {
  Root r = beta;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    r = reflect(rs, *it, r);
  return r;
}

std::vector<int> WeylElement::apply(std::vector<int> const &coeffs) const {
  int n = static_cast<int>(coeffs.size());
  std::vector<int> out(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[i] += mat[i][j] * coeffs[j];
  return out;
}

WeylLimitError::WeylLimitError(unsigned long long ord, unsigned long long limit)
    : std::runtime_error("Weyl group order " + std::to_string(ord) +
                         " exceeds limit " + std::to_string(limit) +
                         "; pass a limit of at least " + std::to_string(ord)),
      order(ord) {}

unsigned long long weyl_order(Family f, int rank) {
  auto fact = [](int n) {
    unsigned long long r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
  };
  switch (f) {
    case Family::A: return fact(rank + 1);
    case Family::B:
    case Family::C:
    case Family::BC: return (1ULL << rank) * fact(rank);
    case Family::D: return (1ULL << (rank - 1)) * fact(rank);
    case Family::G: return 12;
    case Family::F: return 1152;
    case Family::E: return rank == 6 ? 51840ULL : rank == 7 ? 2903040ULL : 696729600ULL;
  }
  return 0;
}

namespace {

// Matrix of s_i on the coefficient space: identity except row i, where
// (s_i c)_i = c_i - sum_j A[i][j] c_j.
std::vector<std::vector<int>> simple_reflection_matrix(RootSystem const &rs, int i) {
  int n = rs.rank;
  std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
  for (int r = 0; r < n; ++r) m[r][r] = 1;
  for (int j = 0; j < n; ++j) m[i - 1][j] -= rs.cartan[i - 1][j];
  return m;
}

std::vector<std::vector<int>> mat_mul(std::vector<std::vector<int>> const &a,
                                      std::vector<std::vector<int>> const &b) {
  int n = static_cast<int>(a.size());
  std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      int aik = a[i][k];
      if (aik == 0) continue;
      for (int j = 0; j < n; ++j) c[i][j] += aik * b[k][j];
    }
  return c;
}

std::vector<int> flatten(std::vector<std::vector<int>> const &m) {
  std::vector<int> f;
  f.reserve(m.size() * m.size());
  for (auto const &row : m) f.insert(f.end(), row.begin(), row.end());
  return f;
}

bool coeffs_positive(std::vector<int> const &c) {
  for (int x : c)
    if (x != 0) return x > 0;
  return false;
}

void fill_signed_perm(RootSystem const &rs, WeylElement &e) {
  e.signed_perm.resize(rs.positive_roots.size());
  for (size_t r = 0; r < rs.positive_roots.size(); ++r) {
    auto img = e.apply(rs.positive_roots[r].coeffs);
    if (auto p = rs.positive_index(img)) {
      e.signed_perm[r] = *p + 1;
    } else {
      for (auto &x : img) x = -x;
      auto q = rs.positive_index(img);
      if (!q) throw std::logic_error("Weyl image is not a root");
      e.signed_perm[r] = -(*q + 1);
    }
  }
}

}  // namespace

std::vector<WeylElement> weyl_enumerate(RootSystem const &rs, unsigned long long limit) {
  unsigned long long order = weyl_order(rs.spec.family, rs.rank);
  if (order > limit) throw WeylLimitError(order, limit);

  std::vector<std::vector<std::vector<int>>> gens;
  for (int i = 1; i <= rs.rank; ++i) gens.push_back(simple_reflection_matrix(rs, i));

  std::vector<WeylElement> out;
  std::map<std::vector<int>, int> seen;

  WeylElement id;
  id.mat.assign(rs.rank, std::vector<int>(rs.rank, 0));
  for (int i = 0; i < rs.rank; ++i) id.mat[i][i] = 1;
  seen[flatten(id.mat)] = 0;
  out.push_back(id);

  for (size_t head = 0; head < out.size(); ++head) {
    auto cur = out[head];  // copy: out may reallocate
    for (int i = 1; i <= rs.rank; ++i) {
      auto m = mat_mul(gens[i - 1], cur.mat);  // s_i . w
      auto key = flatten(m);
      if (seen.count(key)) continue;
      WeylElement e;
      e.mat = std::move(m);
      e.word.letters.reserve(cur.word.letters.size() + 1);
      e.word.letters.push_back(i);  // leftmost letter applied last
      e.word.letters.insert(e.word.letters.end(), cur.word.letters.begin(),
                            cur.word.letters.end());
      seen[key] = static_cast<int>(out.size());
      out.push_back(std::move(e));
    }
  }
  if (out.size() != order)
    throw std::logic_error("Weyl enumeration size mismatch for " + rs.type_token());

  for (auto &e : out) fill_signed_perm(rs, e);
  return out;
}

WeylElement weyl_element_from_word(RootSystem const &rs, WeylWord const &w) {
  int n = rs.rank;
  WeylElement e;
  e.word = w;
  e.mat.assign(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) e.mat[i][i] = 1;
  for (int letter : w.letters) {
    if (letter < 1 || letter > n)
      throw std::invalid_argument("word letter out of range");
    e.mat = mat_mul(e.mat, simple_reflection_matrix(rs, letter));
  }
  fill_signed_perm(rs, e);
  return e;
}

WeylWord longest_element(RootSystem const &rs) {
  int n = rs.rank;
  std::vector<std::vector<std::vector<int>>> gens;
  for (int i = 1; i <= n; ++i) gens.push_back(simple_reflection_matrix(rs, i));

  std::vector<std::vector<int>> w(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) w[i][i] = 1;
  WeylWord word;
  for (;;) {
    int pick = 0;
    for (int i = 1; i <= n; ++i) {
      std::vector<int> img(n);
      for (int r = 0; r < n; ++r) img[r] = w[r][i - 1];  // w(alpha_i)
      if (coeffs_positive(img)) {
        pick = i;
        break;
      }
    }
    if (pick == 0) break;  // every simple root is inverted: w = w-
    w = mat_mul(w, gens[pick - 1]);   // extend on the right: l(w s_i) = l(w)+1
    word.letters.push_back(pick);
  }
  return word;
}

std::vector<Root> span_subset(RootSystem const &rs, ParabolicSubset const &theta) {
  for (int i : theta.indices)
    if (i < 1 || i > rs.rank)
      throw std::invalid_argument("theta index out of range");
  std::vector<Root> out;
  for (auto const &r : rs.positive_roots) {
    bool inside = true;
    for (int j = 0; j < rs.rank; ++j)
      if (r.coeffs[j] != 0 && !theta.contains(j + 1)) {
        inside = false;
        break;
      }
    if (inside) out.push_back(r);
  }
  return out;
}

}  // namespace flagorient
