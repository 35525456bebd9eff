#pragma once

#include <iosfwd>
#include <string_view>
#include <vector>

#include "hermitia/scalar.hpp"

namespace hermitia {

/// Exit codes: 0 success, 1 a verification check failed, 2 usage or numerical error.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// "re" or "re,im".
Complex parse_complex(std::string_view text);

/// Items separated by ';' or whitespace, each accepted by parse_complex.
std::vector<Complex> parse_complex_list(std::string_view text);

}  // namespace hermitia
