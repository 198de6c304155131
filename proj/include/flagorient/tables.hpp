#ifndef FLAGORIENT_TABLES_HPP
#define FLAGORIENT_TABLES_HPP

#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "flagorient/rootsys.hpp"

// Subdiagram contributions S(alpha, Delta) = sum over <Delta>+ of
// <alpha^vee, beta> (split multiplicities), and reproduction of the golden
// contribution tables shipped in data/.

namespace flagorient {

// Partition of theta into Dynkin-adjacency-connected parts, ascending by
// smallest element.
std::vector<ParabolicSubset> connected_components(RootSystem const &rs,
                                                  ParabolicSubset const &theta);

struct SubdiagramContribution {
  std::string sigma_type;
  int alpha_index = 0;
  ParabolicSubset delta;
  std::optional<int> linked_root;  // the unique delta-root adjacent to alpha
  long long value = 0;
};

// Requires Delta connected and alpha outside Delta; contributions of
// components not adjacent to alpha are 0.
SubdiagramContribution subdiagram_contribution(RootSystem const &rs,
                                               int alpha_index,
                                               ParabolicSubset const &delta);

// Classifies a connected subdiagram by type, e.g. "A3", "B2", "C3", "D5",
// "E7", "G2".  Doubly-laced two-node diagrams are reported as B2.
std::string classify_subdiagram(RootSystem const &rs, ParabolicSubset const &delta);

struct GoldenRow {
  std::string key;          // citation key, e.g. "t3.b3.f4"
  std::string sigma;        // type token
  int alpha = 0;            // 1-based
  std::vector<int> delta;   // 1-based indices
  long long expected = 0;   // value as printed in the source table
  bool conflict = false;    // source value known wrong; resolved holds truth
  long long resolved = 0;   // authoritative value for conflict rows
  std::string note;
};

std::vector<GoldenRow> load_golden_rows(std::istream &in);
std::vector<GoldenRow> load_golden_rows_file(std::string const &path);

struct TableRowResult {
  GoldenRow row;
  std::string delta_type;
  long long computed = 0;
  bool match = false;       // computed equals the authoritative value
};

struct TablesReport {
  std::vector<TableRowResult> rows;
  // sigma token -> set of connected proper subdiagram types occurring in it.
  std::map<std::string, std::set<std::string>> subdiagram_types;
  bool all_match = true;    // over authoritative values
  int conflicts_confirmed = 0;  // conflict rows where enumeration != printed value
};

// Checks every golden row whose sigma is in sigma_types (all rows when the
// list is empty), and enumerates the connected proper subdiagram types of
// each requested sigma.
TablesReport reproduce_tables(std::vector<GoldenRow> const &rows,
                              std::vector<std::string> const &sigma_types);

}  // namespace flagorient

#endif
