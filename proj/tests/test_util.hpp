#ifndef LETF_TEST_UTIL_HPP
#define LETF_TEST_UTIL_HPP

#include <string>
#include <vector>

#include "letf/parser.hpp"

namespace letf::test {

inline Formula F(const std::string& s) { return parse(s); }
inline std::vector<Formula> FL(const std::string& s) { return parse_formula_list(s); }

}  // namespace letf::test

#endif
