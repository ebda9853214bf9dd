#pragma once

/**
 * @file error.hpp
 * @brief Exception types thrown by the zng library.
 */

#include <stdexcept>
#include <string>

namespace zng {

/// Base class of every exception raised by the library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A documented precondition of an operation was violated.
class precondition_error : public error {
public:
    using error::error;
};

/// Two operands live in different rings (different modulus, group or extension).
class ring_mismatch : public error {
public:
    using error::error;
};

/// Inversion of an element that is not a unit.
class not_a_unit : public error {
public:
    using error::error;
};

/// A linear system over a local ring has no unit pivot in some column.
class singular_system : public error {
public:
    using error::error;
};

/// The strong Shoda pairs of a group do not account for the whole group ring.
class not_strongly_monomial : public error {
public:
    using error::error;
};

/// Malformed group description (bad Cayley table, bad permutation, too large).
class invalid_group : public error {
public:
    using error::error;
};

/// gcd(n, |G|) != 1.
class coprimality_error : public error {
public:
    coprimality_error(const std::string& what, long long prime) : error(what), prime_(prime) {}
    long long prime() const noexcept { return prime_; }

private:
    long long prime_;
};

} // namespace zng
