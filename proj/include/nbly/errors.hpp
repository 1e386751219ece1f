#pragma once

#include <stdexcept>
#include <string>

namespace nbly {

/* Enumeration or brute-force work exceeded its configured safety cap. */
class budget_error : public std::runtime_error {
public:
    explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

/* An exact division failed: the dividend is not divisible by the divisor,
 * or re-multiplying the quotient did not reproduce the dividend. */
class divisibility_error : public std::runtime_error {
public:
    explicit divisibility_error(const std::string& what) : std::runtime_error(what) {}
};

/* A pruned component does not match any of the six expected shapes. */
class classify_error : public std::runtime_error {
public:
    explicit classify_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace nbly
