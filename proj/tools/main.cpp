// Copyright 2026 The gql Authors
// SPDX-License-Identifier: Apache-2.0

#include "gql/cli.h"

#include <iostream>

int main(int argc, char** argv)
{
    return gql::cliMain(argc, argv, std::cout, std::cerr);
}
