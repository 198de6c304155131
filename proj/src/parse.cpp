#include "flagorient/parse.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace flagorient {

namespace {

std::vector<std::string> split(std::string const &s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream ss(s);
  while (std::getline(ss, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.push_back("");
  return out;
}

int parse_int(std::string const &s, std::string const &what) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(c); }))
    throw std::invalid_argument("invalid " + what + ": '" + s + "'");
  return std::stoi(s);
}

Rat parse_rat(std::string const &s) {
  auto slash = s.find('/');
  if (slash == std::string::npos)
    return Rat(parse_int(s, "rational"));
  long long num = parse_int(s.substr(0, slash), "rational");
  long long den = parse_int(s.substr(slash + 1), "rational");
  if (den == 0) throw std::invalid_argument("invalid rational: '" + s + "'");
  return Rat(num, den);
}

}  // namespace

RootSystemSpec parse_type_token(std::string const &token) {
  RootSystemSpec spec;
  std::string head = token, suffix;
  auto colon = token.find(':');
  if (colon != std::string::npos) {
    head = token.substr(0, colon);
    suffix = token.substr(colon + 1);
  }

  size_t pos = 0;
  if (head.rfind("BC", 0) == 0) {
    spec.family = Family::BC;
    pos = 2;
  } else if (!head.empty() && std::string("ABCDEFG").find(head[0]) != std::string::npos) {
    switch (head[0]) {
      case 'A': spec.family = Family::A; break;
      case 'B': spec.family = Family::B; break;
      case 'C': spec.family = Family::C; break;
      case 'D': spec.family = Family::D; break;
      case 'E': spec.family = Family::E; break;
      case 'F': spec.family = Family::F; break;
      case 'G': spec.family = Family::G; break;
    }
    pos = 1;
  } else {
    throw std::invalid_argument("invalid type token: '" + token + "'");
  }
  spec.rank = parse_int(head.substr(pos), "rank in '" + token + "'");

  if (suffix.empty() || suffix == "split") {
    spec.preset = MultPreset::Split;
  } else if (suffix == "complex") {
    spec.preset = MultPreset::Complex;
  } else if (suffix.rfind("mult=", 0) == 0) {
    spec.preset = MultPreset::Custom;
    auto parts = split(suffix.substr(5), ',');
    if (parts.size() < 2 || parts.size() > 3)
      throw std::invalid_argument("mult= expects 2 or 3 values: '" + token + "'");
    spec.custom_mult[LengthClass::Short] = parse_int(parts[0], "multiplicity");
    spec.custom_mult[LengthClass::Long] = parse_int(parts[1], "multiplicity");
    if (parts.size() == 3)
      spec.custom_mult[LengthClass::DoubleOfShort] = parse_int(parts[2], "multiplicity");
  } else {
    throw std::invalid_argument("invalid multiplicity suffix: '" + suffix + "'");
  }
  return spec;
}

ParabolicSubset parse_theta(std::string const &s, int rank) {
  std::vector<int> idx;
  if (s == "all") {
    for (int i = 1; i <= rank; ++i) idx.push_back(i);
    return ParabolicSubset(idx);
  }
  if (s.empty()) return ParabolicSubset{};
  for (auto const &part : split(s, ',')) {
    int i = parse_int(part, "theta index");
    if (i < 1 || i > rank)
      throw std::invalid_argument("theta index out of range: '" + part + "'");
    idx.push_back(i);
  }
  return ParabolicSubset(idx);
}

ChamberElement parse_chamber(std::string const &s, int rank) {
  ChamberElement h;
  for (auto const &part : split(s, ',')) h.values.push_back(parse_rat(part));
  if (static_cast<int>(h.values.size()) != rank)
    throw std::invalid_argument("H expects " + std::to_string(rank) + " values: '" + s + "'");
  for (auto const &v : h.values)
    if (v < Rat(0))
      throw std::invalid_argument("H must lie in the closed positive chamber");
  return h;
}

WeylWord parse_word(std::string const &s, int rank) {
  WeylWord w;
  if (s.empty()) return w;
  for (auto part : split(s, '.')) {
    if (!part.empty() && part[0] == 's') part.erase(0, 1);
    int i = parse_int(part, "word letter");
    if (i < 1 || i > rank)
      throw std::invalid_argument("word letter out of range: '" + part + "'");
    w.letters.push_back(i);
  }
  return w;
}

FlagDims parse_flag_dims(std::string const &token) {
  auto colon = token.find(':');
  std::string head = colon == std::string::npos ? token : token.substr(0, colon);
  FlagDims fd;
  if (head.empty() || std::string("ABCD").find(head[0]) == std::string::npos)
    throw std::invalid_argument("classical family expected (A-D): '" + token + "'");
  switch (head[0]) {
    case 'A': fd.family = Family::A; break;
    case 'B': fd.family = Family::B; break;
    case 'C': fd.family = Family::C; break;
    case 'D': fd.family = Family::D; break;
  }
  fd.l = parse_int(head.substr(1), "rank in '" + token + "'");
  if (colon != std::string::npos && colon + 1 < token.size()) {
    for (auto const &part : split(token.substr(colon + 1), ',')) {
      if (part == "l+") fd.half_spin.insert(HalfSpin::Plus);
      else if (part == "l-") fd.half_spin.insert(HalfSpin::Minus);
      else fd.dims.push_back(parse_int(part, "dimension"));
    }
  }
  fd.validate();
  return fd;
}

}  // namespace flagorient
