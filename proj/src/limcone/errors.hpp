#pragma once

#include <stdexcept>
#include <string>

namespace limcone {

// Error taxonomy shared by all modules.  The CLI maps Kind::Usage to exit
// code 2 and everything else to exit code 1.
enum class ErrorKind {
  Rank,
  Shape,
  Node,
  Path,
  Depth,
  System,
  InvalidTree,
  Unsupported,
  TooLarge,
  NotConsistent,
  ZeroVector,
  NotMaximalAbelian,
  RealizationBug,
  Parse,
  Usage,
};

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

private:
  ErrorKind kind_;
};

[[noreturn]] inline void raise(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace limcone
