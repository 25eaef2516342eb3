#pragma once

#include <iosfwd>

namespace contavg::experiments {

// contavg run --config <json> | validate --config <json> |
//         report --input <csv> --format {csv|md}
// Exit codes: 0 success, 1 failed assertion or runtime error, 2 bad usage or
// configuration.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace contavg::experiments
