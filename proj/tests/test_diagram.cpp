#include <doctest.h>

TEST_SUITE("diagram") {}
