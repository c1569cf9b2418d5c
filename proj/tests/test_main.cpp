// Distributed under the Apache License, Version 2.0.
// See LICENSE for details.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
