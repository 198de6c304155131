// flagorient: orientability of real flag manifolds and stable/unstable
// bundles by exact root-system combinatorics.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "flagorient/classical.hpp"
#include "flagorient/orientability.hpp"
#include "flagorient/parse.hpp"
#include "flagorient/rootsys.hpp"
#include "flagorient/tables.hpp"

#ifndef FLAGORIENT_DATA_DIR
#define FLAGORIENT_DATA_DIR "data"
#endif

namespace fo = flagorient;
using json = nlohmann::ordered_json;

namespace {

constexpr char const *kSchemaVersion = "1.0.0";

struct Timings {
  std::map<std::string, double> ms;
  std::chrono::steady_clock::time_point mark = std::chrono::steady_clock::now();

  void lap(std::string const &phase) {
    auto now = std::chrono::steady_clock::now();
    ms[phase] = std::chrono::duration<double, std::milli>(now - mark).count();
    mark = now;
  }
};

std::string join_ints(std::vector<int> const &v, char sep = ',') {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(v[i]);
  }
  return s;
}

json report_json(fo::OrientabilityReport const &r) {
  json sums = json::object();
  for (auto const &[a, s] : r.sums) sums[std::to_string(a)] = s;
  return json{{"orientable", r.orientable},
              {"vacuous", r.vacuous},
              {"sums", sums},
              {"failing", r.failing},
              {"checked_roots", r.checked_roots.size()}};
}

json roots_json(std::vector<fo::Root> const &roots) {
  json arr = json::array();
  for (auto const &r : roots) arr.push_back(json{{"coeffs", r.coeffs}, {"mult", r.mult}});
  return arr;
}

std::string word_str(fo::WeylWord const &w) {
  std::string s;
  for (size_t i = 0; i < w.letters.size(); ++i) {
    if (i) s += ".";
    s += "s" + std::to_string(w.letters[i]);
  }
  return s.empty() ? "1" : s;
}

void emit(json const &query, json const &result, Timings const &t,
          std::string const &format, std::string const &text,
          std::vector<std::string> const &csv_lines) {
  if (format == "json") {
    json env{{"schema_version", kSchemaVersion},
             {"query", query},
             {"result", result},
             {"timings", t.ms}};
    std::cout << env.dump(2) << "\n";
  } else if (format == "csv") {
    for (auto const &l : csv_lines) std::cout << l << "\n";
  } else {
    std::cout << text;
  }
}

std::filesystem::path cache_dir() {
  if (char const *env = std::getenv("FLAGORIENT_CACHE")) return env;
  if (char const *home = std::getenv("HOME"))
    return std::filesystem::path(home) / ".cache" / "flagorient";
  return std::filesystem::temp_directory_path() / "flagorient";
}

// Weyl enumerations are memoized on disk as word lists, keyed by the type
// token and validated against the known group order on load.
std::vector<fo::WeylElement> cached_enumeration(fo::RootSystem const &rs,
                                                unsigned long long limit) {
  unsigned long long order = fo::weyl_order(rs.spec.family, rs.rank);
  if (order > limit) throw fo::WeylLimitError(order, limit);

  auto file = cache_dir() / ("weyl_" + rs.type_token() + ".txt");
  std::ifstream in(file);
  if (in) {
    unsigned long long count = 0;
    in >> count;
    if (count == order) {
      std::vector<fo::WeylElement> out;
      out.reserve(order);
      std::string line;
      std::getline(in, line);
      while (std::getline(in, line) && out.size() < order) {
        fo::WeylWord w;
        if (line != "-") {
          std::istringstream ss(line);
          int x;
          while (ss >> x) w.letters.push_back(x);
        }
        out.push_back(fo::weyl_element_from_word(rs, w));
      }
      if (out.size() == order) return out;
    }
  }

  auto elements = fo::weyl_enumerate(rs, limit);
  std::error_code ec;
  std::filesystem::create_directories(cache_dir(), ec);
  if (!ec) {
    std::ofstream out(file);
    out << elements.size() << "\n";
    for (auto const &e : elements) {
      if (e.word.letters.empty()) out << "-\n";
      else {
        for (size_t i = 0; i < e.word.letters.size(); ++i)
          out << (i ? " " : "") << e.word.letters[i];
        out << "\n";
      }
    }
  }
  return elements;
}

int run_orient_flag(std::string const &type_token, std::string const &theta_spec,
                    std::string const &variant, std::string const &format) {
  Timings t;
  auto spec = fo::parse_type_token(type_token);
  t.lap("parse");
  auto rs = fo::build_root_system(spec);
  auto theta = fo::parse_theta(theta_spec, rs.rank);
  t.lap("build");

  json result;
  std::ostringstream text;
  std::vector<std::string> csv{"variant,orientable,failing_alphas"};
  bool overall = true;
  for (std::string v : {std::string("full"), std::string("reduced")}) {
    if (variant != "both" && variant != v) continue;
    auto rep = v == "full" ? fo::flag_orientable_full(rs, theta)
                           : fo::flag_orientable_reduced(rs, theta);
    overall = overall && rep.orientable;
    result[v] = report_json(rep);
    text << "F_Theta over " << rs.type_token() << ", theta = {"
         << join_ints(theta.indices) << "} [" << v << " criterion]: "
         << (rep.orientable ? "orientable" : "NOT orientable") << "\n";
    for (auto const &[a, s] : rep.sums)
      text << "  alpha_" << a << ": sum = " << s
           << (s % 2 ? "  (odd)" : "") << "\n";
    csv.push_back(v + "," + (rep.orientable ? "true" : "false") + ",\"" +
                  join_ints(rep.failing, ';') + "\"");
  }
  result["orientable"] = overall;
  t.lap("compute");

  json query{{"command", "orient flag"}, {"type", type_token},
             {"theta", theta.indices}, {"variant", variant}};
  emit(query, result, t, format, text.str(), csv);
  return 0;
}

int run_orient_bundle(std::string const &type_token, std::string const &theta_spec,
                      std::string const &h_spec, std::string const &w_spec,
                      std::string const &sign_spec, bool scan_w,
                      unsigned long long limit, std::string const &format) {
  Timings t;
  auto spec = fo::parse_type_token(type_token);
  auto rs = fo::build_root_system(spec);
  auto theta = fo::parse_theta(theta_spec, rs.rank);
  auto H = fo::parse_chamber(h_spec, rs.rank);
  fo::BundleSign sign = sign_spec == "+" ? fo::BundleSign::Unstable : fo::BundleSign::Stable;
  if (sign_spec != "+" && sign_spec != "-")
    throw std::invalid_argument("--sign expects '+' or '-', got '" + sign_spec + "'");
  t.lap("parse");

  json query{{"command", "orient bundle"}, {"type", type_token},
             {"theta", theta.indices}, {"H", h_spec},
             {"sign", sign_spec}, {"scan_w", scan_w}};

  if (scan_w) {
    auto components = fo::fixed_components_scan(rs, theta, H, cached_enumeration(rs, limit));
    t.lap("compute");
    json comps = json::array();
    std::ostringstream text;
    std::vector<std::string> csv{"word,stable_dim,stable_orientable,unstable_dim,unstable_orientable"};
    text << "fixed components of " << rs.type_token() << ", theta = {"
         << join_ints(theta.indices) << "}, H = (" << h_spec << "): "
         << components.size() << " distinct\n";
    for (auto const &c : components) {
      comps.push_back(json{{"word", word_str(c.word)},
                           {"stable", report_json(c.stable)},
                           {"unstable", report_json(c.unstable)},
                           {"stable_dim", c.stable_dim},
                           {"unstable_dim", c.unstable_dim}});
      text << "  w = " << word_str(c.word)
           << ": stable dim " << c.stable_dim
           << (c.stable.orientable ? " (orientable)" : " (NOT orientable)")
           << ", unstable dim " << c.unstable_dim
           << (c.unstable.orientable ? " (orientable)" : " (NOT orientable)") << "\n";
      csv.push_back(word_str(c.word) + "," + std::to_string(c.stable_dim) + "," +
                    (c.stable.orientable ? "true" : "false") + "," +
                    std::to_string(c.unstable_dim) + "," +
                    (c.unstable.orientable ? "true" : "false"));
    }
    emit(query, json{{"components", comps}}, t, format, text.str(), csv);
    return 0;
  }

  fo::BundleQuery q;
  q.theta = theta;
  q.H = H;
  q.w = w_spec == "longest" ? fo::longest_element(rs) : fo::parse_word(w_spec, rs.rank);
  q.sign = sign;
  auto roots = fo::stable_root_set(rs, q);
  auto rep = fo::bundle_orientable(rs, q);
  long long dim = 0;
  for (auto const &r : roots) dim += r.mult;
  t.lap("compute");

  query["w"] = word_str(q.w);
  json result = report_json(rep);
  result["fiber_dim"] = dim;
  result["roots"] = roots_json(roots);

  std::ostringstream text;
  text << "V_Theta^" << (sign == fo::BundleSign::Unstable ? "+" : "-")
       << "(H, " << word_str(q.w) << ") over " << rs.type_token()
       << ", theta = {" << join_ints(theta.indices) << "}: fiber dim " << dim
       << ", " << (rep.orientable ? "orientable" : "NOT orientable")
       << (rep.vacuous ? " (vacuous: Theta(H) is empty)" : "") << "\n";
  for (auto const &[a, s] : rep.sums)
    text << "  alpha_" << a << ": sum = " << s << (s % 2 ? "  (odd)" : "") << "\n";
  std::vector<std::string> csv{
      "orientable,fiber_dim,failing_alphas",
      std::string(rep.orientable ? "true" : "false") + "," + std::to_string(dim) +
          ",\"" + join_ints(rep.failing, ';') + "\""};
  emit(query, result, t, format, text.str(), csv);
  return 0;
}

int run_scan(std::string const &type_token, std::string const &format) {
  Timings t;
  auto spec = fo::parse_type_token(type_token);
  auto rs = fo::build_root_system(spec);
  t.lap("build");

  json rows = json::array();
  std::ostringstream text;
  std::vector<std::string> csv{"theta_mask,orientable,failing_alphas,sums"};
  text << "orientability census of " << rs.type_token() << " ("
       << (1u << rs.rank) << " subsets)\n";
  for (unsigned mask = 0; mask < (1u << rs.rank); ++mask) {
    std::vector<int> idx;
    for (int i = 1; i <= rs.rank; ++i)
      if (mask & (1u << (i - 1))) idx.push_back(i);
    fo::ParabolicSubset theta(idx);
    auto rep = fo::flag_orientable_full(rs, theta);
    json sums = json::object();
    std::string sums_csv;
    for (auto const &[a, s] : rep.sums) {
      sums[std::to_string(a)] = s;
      if (!sums_csv.empty()) sums_csv += ";";
      sums_csv += std::to_string(a) + ":" + std::to_string(s);
    }
    rows.push_back(json{{"theta_mask", mask}, {"theta", idx},
                        {"orientable", rep.orientable}, {"failing", rep.failing},
                        {"sums", sums}});
    text << "  theta = {" << join_ints(idx) << "}: "
         << (rep.orientable ? "orientable" : "NOT orientable") << "\n";
    csv.push_back(std::to_string(mask) + "," + (rep.orientable ? "true" : "false") +
                  ",\"" + join_ints(rep.failing, ';') + "\",\"" + sums_csv + "\"");
  }
  t.lap("compute");
  emit(json{{"command", "scan"}, {"type", type_token}}, json{{"rows", rows}}, t,
       format, text.str(), csv);
  return 0;
}

int run_tables(std::string const &sigma_spec, std::string const &data_path,
               std::string const &format) {
  Timings t;
  std::vector<std::string> sigmas;
  if (!sigma_spec.empty()) {
    std::istringstream ss(sigma_spec);
    std::string tok;
    while (std::getline(ss, tok, ',')) sigmas.push_back(tok);
  }
  auto rows = fo::load_golden_rows_file(data_path);
  t.lap("load");
  auto rep = fo::reproduce_tables(rows, sigmas);
  t.lap("compute");

  json jrows = json::array();
  std::ostringstream text;
  std::vector<std::string> csv{"key,sigma,alpha,delta,delta_type,expected,computed,match,conflict"};
  for (auto const &r : rep.rows) {
    jrows.push_back(json{{"key", r.row.key}, {"sigma", r.row.sigma},
                         {"alpha", r.row.alpha}, {"delta", r.row.delta},
                         {"delta_type", r.delta_type},
                         {"expected", r.row.expected}, {"computed", r.computed},
                         {"match", r.match}, {"conflict", r.row.conflict},
                         {"note", r.row.note}});
    text << "  " << r.row.key << " [" << r.row.sigma << ", delta " << r.delta_type
         << " = {" << join_ints(r.row.delta) << "}, alpha_" << r.row.alpha
         << "]: computed " << r.computed;
    if (r.row.conflict)
      text << " (printed value " << r.row.expected << " refuted; resolved "
           << r.row.resolved << ")";
    else
      text << " vs " << r.row.expected;
    text << (r.match ? "  OK" : "  MISMATCH") << "\n";
    csv.push_back(r.row.key + "," + r.row.sigma + "," + std::to_string(r.row.alpha) +
                  ",\"" + join_ints(r.row.delta, ';') + "\"," + r.delta_type + "," +
                  std::to_string(r.row.expected) + "," + std::to_string(r.computed) + "," +
                  (r.match ? "true" : "false") + "," + (r.row.conflict ? "true" : "false"));
  }
  json types = json::object();
  for (auto const &[sigma, set] : rep.subdiagram_types) {
    types[sigma] = set;
    text << "  connected proper subdiagrams of " << sigma << ": ";
    bool first = true;
    for (auto const &ty : set) {
      text << (first ? "" : ", ") << ty;
      first = false;
    }
    text << "\n";
  }
  text << (rep.all_match ? "all rows match\n" : "MISMATCHES PRESENT\n");

  emit(json{{"command", "tables"}, {"sigma", sigmas}, {"data", data_path}},
       json{{"rows", jrows}, {"subdiagram_types", types},
            {"all_match", rep.all_match},
            {"conflicts_confirmed", rep.conflicts_confirmed}},
       t, format, text.str(), csv);
  return rep.all_match ? 0 : 2;
}

int run_classical(std::string const &token, bool verify, std::string const &format) {
  Timings t;
  auto fd = fo::parse_flag_dims(token);
  t.lap("parse");
  bool cf = fo::orientable_closed_form(fd);
  auto theta = fo::dims_to_theta(fd);
  t.lap("compute");

  json result{{"token", fd.token()}, {"theta", theta.indices}, {"orientable", cf}};
  std::ostringstream text;
  text << fd.token() << " (theta = {" << join_ints(theta.indices) << "}): "
       << (cf ? "orientable" : "NOT orientable") << " by the closed form\n";
  int exit_code = 0;
  if (verify) {
    fo::RootSystemSpec spec;
    spec.family = fd.family;
    spec.rank = fd.l;
    auto rs = fo::build_root_system(spec);
    bool gen = fo::flag_orientable_full(rs, theta).orientable;
    result["general_criterion"] = gen;
    result["agree"] = gen == cf;
    text << "general criterion: " << (gen ? "orientable" : "NOT orientable")
         << (gen == cf ? " (agrees)" : " (DISAGREES)") << "\n";
    if (gen != cf) exit_code = 2;
    t.lap("verify");
  }
  std::vector<std::string> csv{"token,orientable",
                               fd.token() + "," + (cf ? "true" : "false")};
  emit(json{{"command", "classical"}, {"token", token}, {"verify", verify}},
       result, t, format, text.str(), csv);
  return exit_code;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"orientability of real flag manifolds and stable/unstable bundles"};
  app.require_subcommand(1);
  app.fallthrough();  // let --format appear after the subcommand
  std::string format = "text";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));

  auto *orient = app.add_subcommand("orient", "orientability checks");
  orient->require_subcommand(1);
  orient->fallthrough();

  std::string type_token, theta_spec, variant = "full";
  auto *flag_cmd = orient->add_subcommand("flag", "flag manifold F_Theta");
  flag_cmd->fallthrough();
  flag_cmd->add_option("--type", type_token, "type token, e.g. B3 or B3:complex")->required();
  flag_cmd->add_option("--theta", theta_spec, "comma list of simple indices, '' or 'all'");
  flag_cmd->add_option("--variant", variant, "criterion variant")
      ->check(CLI::IsMember({"full", "reduced", "both"}));

  std::string b_type, b_theta, b_h, b_w, b_sign = "-";
  bool scan_w = false;
  unsigned long long limit = 1000000;
  auto *bundle_cmd = orient->add_subcommand("bundle", "stable/unstable bundle V_Theta^+-(H,w)");
  bundle_cmd->fallthrough();
  bundle_cmd->add_option("--type", b_type)->required();
  bundle_cmd->add_option("--theta", b_theta);
  bundle_cmd->add_option("--H", b_h, "comma list of nonnegative rationals")->required();
  bundle_cmd->add_option("--w", b_w, "word like s1.s2, or 'longest'");
  bundle_cmd->add_option("--sign", b_sign, "'-' stable (default), '+' unstable");
  bundle_cmd->add_flag("--scan-w", scan_w, "scan all Weyl elements, one entry per component");
  bundle_cmd->add_option("--limit", limit, "Weyl enumeration guard");

  std::string s_type;
  auto *scan_cmd = app.add_subcommand("scan", "orientability census over all Theta");
  scan_cmd->fallthrough();
  scan_cmd->add_option("--type", s_type)->required();

  std::string sigma_spec, data_path;
  if (char const *env = std::getenv("FLAGORIENT_DATA")) data_path = env;
  else data_path = std::string(FLAGORIENT_DATA_DIR) + "/contribution_tables.txt";
  auto *tables_cmd = app.add_subcommand("tables", "reproduce the golden contribution tables");
  tables_cmd->fallthrough();
  tables_cmd->add_option("--sigma", sigma_spec, "comma list of type tokens (default: all)");
  tables_cmd->add_option("--data", data_path, "golden table file");

  std::string cl_token;
  bool verify = false;
  auto *classical_cmd = app.add_subcommand("classical", "closed-form decider, e.g. B3:1,3");
  classical_cmd->fallthrough();
  classical_cmd->add_option("token", cl_token)->required();
  classical_cmd->add_flag("--verify", verify, "cross-check against the general criterion");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*flag_cmd) return run_orient_flag(type_token, theta_spec, variant, format);
    if (*bundle_cmd)
      return run_orient_bundle(b_type, b_theta, b_h, b_w, b_sign, scan_w, limit, format);
    if (*scan_cmd) return run_scan(s_type, format);
    if (*tables_cmd) return run_tables(sigma_spec, data_path, format);
    if (*classical_cmd) return run_classical(cl_token, verify, format);
  } catch (fo::WeylLimitError const &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (std::invalid_argument const &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (std::exception const &e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
