#include <doctest.h>

TEST_SUITE("laurent") {}
