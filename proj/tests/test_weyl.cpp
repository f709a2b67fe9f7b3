#include <doctest.h>

TEST_SUITE("weyl") {}
