#include "flagorient/tables.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>

#include "flagorient/parse.hpp"

namespace flagorient {

std::vector<ParabolicSubset> connected_components(RootSystem const &rs,
                                                  ParabolicSubset const &theta) {
  for (int i : theta.indices)
    if (i < 1 || i > rs.rank) throw std::invalid_argument("theta index out of range");
  std::vector<ParabolicSubset> out;
  std::set<int> left(theta.indices.begin(), theta.indices.end());
  while (!left.empty()) {
    std::vector<int> comp;
    std::vector<int> stack{*left.begin()};
    left.erase(left.begin());
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (auto it = left.begin(); it != left.end();) {
        if (rs.cartan[v - 1][*it - 1] != 0) {
          stack.push_back(*it);
          it = left.erase(it);
        } else {
          ++it;
        }
      }
    }
    out.emplace_back(comp);
  }
  std::sort(out.begin(), out.end());
  return out;
}

SubdiagramContribution subdiagram_contribution(RootSystem const &rs,
                                               int alpha_index,
                                               ParabolicSubset const &delta) {
  if (alpha_index < 1 || alpha_index > rs.rank)
    throw std::invalid_argument("simple index out of range");
  if (delta.contains(alpha_index))
    throw std::invalid_argument("alpha must lie outside delta");
  if (connected_components(rs, delta).size() > 1)
    throw std::invalid_argument("delta must be connected");

  SubdiagramContribution sc;
  sc.sigma_type = rs.type_token();
  sc.alpha_index = alpha_index;
  sc.delta = delta;
  for (int d : delta.indices)
    if (rs.cartan[alpha_index - 1][d - 1] != 0) {
      sc.linked_root = d;  // unique: Dynkin diagrams have no cycles
      break;
    }
  // Split multiplicities by definition of S(alpha, Delta): the sum weights
  // every root of <Delta>+ once.
  for (auto const &b : span_subset(rs, delta))
    sc.value += rs.cartan_row_dot(alpha_index, b.coeffs);
  return sc;
}

std::string classify_subdiagram(RootSystem const &rs, ParabolicSubset const &delta) {
  if (delta.empty()) throw std::invalid_argument("empty subdiagram");
  if (connected_components(rs, delta).size() > 1)
    throw std::invalid_argument("subdiagram must be connected");
  int n = static_cast<int>(delta.indices.size());

  int max_bond = 1;
  std::map<int, int> degree;
  for (int a : delta.indices)
    for (int b : delta.indices) {
      if (a >= b || rs.cartan[a - 1][b - 1] == 0) continue;
      int bond = rs.cartan[a - 1][b - 1] * rs.cartan[b - 1][a - 1];
      max_bond = std::max(max_bond, bond);
      degree[a]++;
      degree[b]++;
    }

  if (max_bond >= 3) return "G2";
  if (max_bond == 2) {
    if (n == 2) return "B2";
    // One short (resp. long) root at an end: B_n (resp. C_n).
    Rat shortest = rs.gram[delta.indices[0] - 1][delta.indices[0] - 1];
    for (int a : delta.indices)
      shortest = std::min(shortest, rs.gram[a - 1][a - 1]);
    int nshort = 0;
    for (int a : delta.indices)
      if (rs.gram[a - 1][a - 1] == shortest) ++nshort;
    if (nshort == 1) return "B" + std::to_string(n);
    if (nshort == n - 1) return "C" + std::to_string(n);
    return "?" + std::to_string(n);
  }

  int maxdeg = 0;
  int branch = 0;
  for (int a : delta.indices)
    if (degree[a] > maxdeg) {
      maxdeg = degree[a];
      branch = a;
    }
  if (maxdeg <= 2) return "A" + std::to_string(n);
  if (maxdeg > 3) return "?" + std::to_string(n);

  // One trivalent node: measure the three arm lengths.
  std::vector<int> arms;
  for (int nb : delta.indices) {
    if (rs.cartan[branch - 1][nb - 1] == 0 || nb == branch) continue;
    int len = 0, prev = branch, cur = nb;
    for (;;) {
      ++len;
      int next = 0;
      for (int c : delta.indices)
        if (c != prev && c != cur && rs.cartan[cur - 1][c - 1] != 0) next = c;
      if (next == 0) break;
      prev = cur;
      cur = next;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms.size() != 3) return "?" + std::to_string(n);
  if (arms[0] == 1 && arms[1] == 1) return "D" + std::to_string(n);
  if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4)
    return "E" + std::to_string(n);
  return "?" + std::to_string(n);
}

std::vector<GoldenRow> load_golden_rows(std::istream &in) {
  std::vector<GoldenRow> rows;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ss(line);
    GoldenRow r;
    std::string status, delta;
    if (!(ss >> r.key)) continue;  // blank line
    if (!(ss >> r.sigma >> r.alpha >> delta >> r.expected >> status))
      throw std::invalid_argument("golden table: malformed line " + std::to_string(lineno));
    std::istringstream ds(delta);
    std::string tok;
    while (std::getline(ds, tok, ',')) r.delta.push_back(std::stoi(tok));
    if (status == "conflict") {
      r.conflict = true;
      if (!(ss >> r.resolved))
        throw std::invalid_argument("golden table: conflict row without resolution, line " +
                                    std::to_string(lineno));
    } else if (status == "ok") {
      r.resolved = r.expected;
    } else {
      throw std::invalid_argument("golden table: unknown status '" + status + "'");
    }
    std::string rest;
    std::getline(ss, rest);
    auto b = rest.find_first_not_of(" \t");
    if (b != std::string::npos) r.note = rest.substr(b);
    rows.push_back(std::move(r));
  }
  return rows;
}

std::vector<GoldenRow> load_golden_rows_file(std::string const &path) {
  std::ifstream f(path);
  if (!f) throw std::invalid_argument("cannot open golden table file: " + path);
  return load_golden_rows(f);
}

TablesReport reproduce_tables(std::vector<GoldenRow> const &rows,
                              std::vector<std::string> const &sigma_types) {
  TablesReport rep;
  std::map<std::string, RootSystem> systems;
  auto system = [&](std::string const &token) -> RootSystem const & {
    auto it = systems.find(token);
    if (it == systems.end())
      it = systems.emplace(token, build_root_system(parse_type_token(token))).first;
    return it->second;
  };

  auto wanted = [&](std::string const &sigma) {
    return sigma_types.empty() ||
           std::find(sigma_types.begin(), sigma_types.end(), sigma) != sigma_types.end();
  };

  for (auto const &row : rows) {
    if (!wanted(row.sigma)) continue;
    auto const &rs = system(row.sigma);
    ParabolicSubset delta(row.delta);
    auto sc = subdiagram_contribution(rs, row.alpha, delta);
    TableRowResult r;
    r.row = row;
    r.delta_type = classify_subdiagram(rs, delta);
    r.computed = sc.value;
    r.match = sc.value == row.resolved;
    if (!r.match) rep.all_match = false;
    if (row.conflict && sc.value != row.expected) rep.conflicts_confirmed++;
    rep.rows.push_back(std::move(r));
  }

  // Table of connected proper subdiagram types per requested sigma.
  std::set<std::string> sigmas(sigma_types.begin(), sigma_types.end());
  if (sigma_types.empty())
    for (auto const &row : rows) sigmas.insert(row.sigma);
  for (auto const &sigma : sigmas) {
    auto const &rs = system(sigma);
    auto &types = rep.subdiagram_types[sigma];
    for (unsigned mask = 1; mask + 1 < (1u << rs.rank); ++mask) {
      std::vector<int> idx;
      for (int i = 1; i <= rs.rank; ++i)
        if (mask & (1u << (i - 1))) idx.push_back(i);
      ParabolicSubset sub(idx);
      if (connected_components(rs, sub).size() != 1) continue;
      types.insert(classify_subdiagram(rs, sub));
    }
  }
  return rep;
}

}  // namespace flagorient
