#ifndef NFORGE_ERRORS_HPP
#define NFORGE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace nforge {

enum class errc {
  empty_generators,
  non_coprime_generators,
  invalid_semigroup,
  not_nested,
  chain_length_mismatch,
  gorenstein_input,
  witness_not_found,
  construction_failure,
  unsupported_branch_count,
  unsupported_model,
  no_stabilization,
  not_singular,
  undeclared_singularity,
  budget_exhausted,
  guard_exceeded,
  parse_error,
  invalid_argument,
};

const char* errc_name(errc c);

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

}  // namespace nforge

#endif
