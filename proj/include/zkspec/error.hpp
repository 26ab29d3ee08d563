#ifndef ZKSPEC_ERROR_HPP
#define ZKSPEC_ERROR_HPP

#include <stdexcept>
#include <string>

namespace zk {

enum class Errc {
  invalid_argument = 1,
  no_convergence,
  bracket,
  rank_deficient,
  io,
  eigensolver,
  not_certified
};

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

private:
  Errc code_;
};

} // namespace zk

#endif
