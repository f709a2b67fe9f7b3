#include <doctest.h>

TEST_SUITE("equiv") {}
