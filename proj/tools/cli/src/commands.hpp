#pragma once

#include "qlc/cli/run.hpp"

namespace qlc::cli {

/// Runs every command except corpus. Throws qlc::Error.
json dispatch(const Job& job);

}  // namespace qlc::cli
