#ifndef FLAGORIENT_ROOTSYS_HPP
#define FLAGORIENT_ROOTSYS_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/rational.hpp>

// Restricted root systems in exact arithmetic.  Everything downstream (the
// orientability criteria, the closed forms, the table machinery) reduces to
// mod-2 sums of Cartan integers, so all coordinates are rationals and every
// Cartan integer is asserted integral -- no floats anywhere.

namespace flagorient {

using Rat = boost::rational<long long>;

enum class Family { A, B, C, D, E, F, G, BC };

std::string family_name(Family f);

enum class MultPreset { Split, Complex, Custom };

// Root-length classes used to key custom multiplicities.  Simply-laced
// systems have a single class, conventionally "long".
enum class LengthClass { Short, Long, DoubleOfShort };

struct RootSystemSpec {
  Family family = Family::A;
  int rank = 1;
  MultPreset preset = MultPreset::Split;
  std::map<LengthClass, int> custom_mult;  // used only when preset == Custom
};

struct Root {
  std::vector<int> coeffs;    // coordinates in the simple-root basis
  std::vector<Rat> ambient;   // standard-realization coordinates
  int mult = 1;               // n_beta = dim of the restricted root space
  Rat length2;                // <beta,beta> up to a fixed global scale

  bool operator==(Root const &o) const { return coeffs == o.coeffs; }
};

// Dynkin diagram edge; bond in {1,2,3}; for multiple bonds arrow_to is the
// index (1-based) of the shorter of the two roots, -1 for single bonds.
struct DynkinEdge {
  int i = 0, j = 0;  // 1-based simple indices, i < j
  int bond = 1;
  int arrow_to = -1;
};

// Subset of simple roots, stored as sorted 1-based indices to match the
// diagram labels used everywhere in the interfaces.
struct ParabolicSubset {
  std::vector<int> indices;

  ParabolicSubset() = default;
  explicit ParabolicSubset(std::vector<int> idx);
  bool contains(int i) const;
  bool empty() const { return indices.empty(); }
  bool operator==(ParabolicSubset const &o) const { return indices == o.indices; }
  bool operator<(ParabolicSubset const &o) const { return indices < o.indices; }
};

struct WeylWord {
  std::vector<int> letters;  // 1-based simple indices; empty = identity

  WeylWord reversed() const;  // the inverse element's word
};

class RootSystem {
 public:
  RootSystemSpec spec;
  int rank = 0;
  bool reduced = true;
  std::vector<Root> positive_roots;          // height-then-lex order
  std::vector<std::vector<int>> cartan;      // cartan[i][j] = <alpha_i^vee, alpha_j>
  std::vector<DynkinEdge> adjacency;
  std::vector<std::vector<Rat>> gram;        // <alpha_i, alpha_j>
  std::vector<std::vector<Rat>> simple_ambient;

  // Index of a positive root by its coefficient vector, or nullopt.
  std::optional<int> positive_index(std::vector<int> const &coeffs) const;
  // True if coeffs (or its negation) is a root.
  bool is_root(std::vector<int> const &coeffs) const;
  // Materialize a Root (possibly negative) from a coefficient vector,
  // pulling mult/length2 from the positive-root table.
  Root make_root(std::vector<int> const &coeffs) const;
  Root simple_root(int i) const;  // 1-based

  // <u,v> for coefficient vectors, through the Gram matrix.
  Rat inner(std::vector<int> const &u, std::vector<int> const &v) const;
  // Integer <alpha_i^vee, beta> for a simple coroot: plain Cartan row dot.
  long long cartan_row_dot(int i, std::vector<int> const &beta_coeffs) const;

  std::string type_token() const;  // e.g. "B3", "BC2"

  std::map<std::vector<int>, int> pos_index_;
};

// --- construction and elementary operations ---------------------------------

RootSystem build_root_system(RootSystemSpec const &spec);

// <alpha^vee, beta> = 2<alpha,beta>/<alpha,alpha>; rejects non-roots,
// asserts integrality.
long long cartan_integer(RootSystem const &rs, Root const &alpha, Root const &beta);

// s_i(beta) = beta - <alpha_i^vee, beta> alpha_i.
Root reflect(RootSystem const &rs, int i, Root const &beta);

// Applies the word's letters right-to-left (rightmost reflection first).
Root weyl_apply(RootSystem const &rs, WeylWord const &w, Root const &beta);

// A Weyl element, stored as its integer matrix on the coefficient space
// together with a reduced word and its signed permutation of Pi+.
struct WeylElement {
  std::vector<std::vector<int>> mat;  // c -> mat * c
  WeylWord word;
  // signed_perm[r] = +-(s+1): w(beta_r) = sign * beta_s over positive roots.
  std::vector<int> signed_perm;

  std::vector<int> apply(std::vector<int> const &coeffs) const;
};

struct WeylLimitError : std::runtime_error {
  unsigned long long order;
  WeylLimitError(unsigned long long ord, unsigned long long limit);
};

// Known |W| per type; used both as an enumeration guard and as a cache check.
unsigned long long weyl_order(Family f, int rank);

// All elements of W in BFS order (identity first, words reduced).  Throws
// WeylLimitError when |W| > limit.
std::vector<WeylElement> weyl_enumerate(RootSystem const &rs, unsigned long long limit);

// Materialize the element of a given word (matrix + signed permutation).
WeylElement weyl_element_from_word(RootSystem const &rs, WeylWord const &w);

// The principal involution w-, as a reduced word.
WeylWord longest_element(RootSystem const &rs);

// <Theta>+ : positive roots supported inside theta.
std::vector<Root> span_subset(RootSystem const &rs, ParabolicSubset const &theta);

}  // namespace flagorient

#endif
