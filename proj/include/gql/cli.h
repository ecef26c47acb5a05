// Copyright 2026 The gql Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>

namespace gql {

/// Subcommands: parse, validate, exec, serve.
/// Exit codes: 0 success, 1 diagnostics or errors present, 2 usage or I/O error.
int cliMain(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace gql
