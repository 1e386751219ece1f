#include <doctest.h>
#include "cli.hpp"
