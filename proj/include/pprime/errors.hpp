#ifndef PPRIME_ERRORS_HPP
#define PPRIME_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pprime
{

// Bad argument: not a prime, divisor condition violated, and so on.
class ParameterError : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

// Request exceeds a configured enumeration or table bound.
class SizeError : public std::length_error
{
public:
  using std::length_error::length_error;
};

// A bounded search ran out of candidates.
class SearchExhausted : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

// Randomized step of the degree engine did not converge; retry with another seed.
class EngineError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

// An exact identity that must hold did not. Always a bug.
class ConsistencyError : public std::logic_error
{
public:
  using std::logic_error::logic_error;
};

}  // namespace pprime

#endif  // PPRIME_ERRORS_HPP
