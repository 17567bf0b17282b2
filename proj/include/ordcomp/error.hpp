#ifndef ORDCOMP_ERROR_HPP
#define ORDCOMP_ERROR_HPP

#include <stdexcept>
#include <string>

namespace ordcomp {

// Malformed or inconsistent input (documents, carrier mismatch, unknown
// points). The CLI maps this to exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An operation was called outside its precondition.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Two routes that must agree by a theorem disagreed, or a theorem-backed
// verification failed. Always a defect of this engine. Exit code 3.
class EngineBug : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Enumeration would exceed a documented size cap.
class SizeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ordcomp

#endif  // ORDCOMP_ERROR_HPP
