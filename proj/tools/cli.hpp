#pragma once

#include <iosfwd>

#include "fflambda/error.hpp"

namespace fflambda::cli {

// 0 ok, 1 internal, 2 input validation, 3 resource bounds, 4 verification failure.
enum ExitCode : int { kOk = 0, kInternal = 1, kValidation = 2, kResource = 3, kVerification = 4 };

int exit_code_for(Errc code) noexcept;

// Runs one command line; never throws.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fflambda::cli
