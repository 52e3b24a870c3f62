#ifndef PARACR_ERROR_HPP_
#define PARACR_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace paracr {

// Rejected input: bad rank, out-of-range vertex, real-type violation, ...
class InputError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

[[noreturn]] inline void fail(const std::string& msg) { throw InputError(msg); }

} // namespace paracr

#endif
