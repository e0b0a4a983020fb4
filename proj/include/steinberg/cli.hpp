#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace steinberg {

/// Runs one CLI invocation. Writes a single JSON report to `out` and human
/// diagnostics to `err`. Returns 0 when the checked property holds, 1 when a
/// property fails (the report carries a witness), 2 on input, schema or
/// expression errors. STEINBERG_SEED in the environment overrides --seed.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace steinberg
