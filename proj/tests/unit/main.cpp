// main.cpp — doctest runner for the unit suites

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
