/// @file errors.hpp
/// @brief Exception types shared by all modules

#pragma once

#include <stdexcept>
#include <string>

namespace ctpm {

/// Violated precondition on an argument (out-of-range mode, bad grid, ...).
class DomainError : public std::domain_error
{
public:
	using std::domain_error::domain_error;
};

/// A numerical procedure failed to reach its tolerance or produced non-finite values.
class NumericalError : public std::runtime_error
{
public:
	using std::runtime_error::runtime_error;
};

/// Run configuration rejected by schema validation.
class ConfigError : public std::runtime_error
{
public:
	using std::runtime_error::runtime_error;
};

/// File could not be read or written.
class IoError : public std::runtime_error
{
public:
	using std::runtime_error::runtime_error;
};

} // namespace ctpm
