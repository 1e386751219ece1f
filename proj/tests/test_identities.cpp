#include <doctest.h>
#include "nbly/harness.hpp"
