#pragma once

#include <stdexcept>
#include <string>

namespace charvan {

// Error categories map onto the CLI exit codes (Input -> 2, Resource -> 3).
class Error : public std::runtime_error {
public:
  enum class Kind { Input, Resource, Internal };

  Error(Kind kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}

  Kind kind() const { return kind_; }

private:
  Kind kind_;
};

[[noreturn]] inline void input_error(const std::string& msg) {
  throw Error(Error::Kind::Input, msg);
}

[[noreturn]] inline void resource_error(const std::string& msg) {
  throw Error(Error::Kind::Resource, msg);
}

[[noreturn]] inline void internal_error(const std::string& msg) {
  throw Error(Error::Kind::Internal, msg);
}

} // namespace charvan
