#include <doctest.h>

TEST_SUITE("qform") {}
