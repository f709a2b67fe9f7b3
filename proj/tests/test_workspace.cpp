#include <doctest.h>

TEST_SUITE("workspace") {}
