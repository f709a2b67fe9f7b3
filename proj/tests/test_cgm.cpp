#include <doctest.h>

TEST_SUITE("cgm") {}
