#pragma once

#include <stdexcept>
#include <string>

namespace iwagraph {

enum class Errc {
  disconnected_graph,
  zero_euler_characteristic,
  zero_series,
  non_integer_voltage,
  voltage_nonzero_on_tree,
  inadmissible_voltage,
  precision_exhausted,
  resource_cap,
  uncertified_mu,
  not_stabilized,
  enumeration_cap,
  range_error,
  hypothesis_violated,
  zero_form,
  odd_dimension,
  degenerate_form,
  degree_too_large,
  validation,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

  // Process exit code contract: 0 success, 2 validation, 3 resource cap,
  // 4 uncertified result.
  int exit_code() const {
    switch (code_) {
      case Errc::resource_cap:
      case Errc::enumeration_cap:
        return 3;
      case Errc::uncertified_mu:
        return 4;
      default:
        return 2;
    }
  }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace iwagraph
