#ifndef FLAGORIENT_PARSE_HPP
#define FLAGORIENT_PARSE_HPP

#include <string>

#include "flagorient/classical.hpp"
#include "flagorient/orientability.hpp"
#include "flagorient/rootsys.hpp"

// Text grammars shared by the CLI and the tests.  All parse failures throw
// std::invalid_argument with a message naming the offending token.

namespace flagorient {

// `(A|B|C|D|E|F|G|BC)<digits>` with an optional suffix
// `:split | :complex | :mult=<short>,<long>[,<double>]`.
RootSystemSpec parse_type_token(std::string const &token);

// Comma-separated 1-based indices; "" = empty set, "all" = the full Sigma.
ParabolicSubset parse_theta(std::string const &s, int rank);

// Comma-separated nonnegative rationals ("3,0" or "1/2,2"), one per simple.
ChamberElement parse_chamber(std::string const &s, int rank);

// Dot-separated letters: "s1.s2" (or bare "1.2"); "" is the identity.
WeylWord parse_word(std::string const &s, int rank);

// `A4:2`, `B3:1,3`, `D5:2,l+`, `D6:l+,l-`.
FlagDims parse_flag_dims(std::string const &token);

}  // namespace flagorient

#endif
