#ifndef BRAID_ERRORS_HPP
#define BRAID_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace braid {

/// Malformed or inconsistent user input (parse failures, elements outside
/// the group, bad indices). Maps to CLI exit status 1.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A configured size or enumeration bound was exceeded. Exit status 2.
class ResourceCapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal consistency check failed. Exit status 3.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace braid

#endif
