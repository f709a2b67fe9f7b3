#include <doctest.h>

TEST_SUITE("motive") {}
