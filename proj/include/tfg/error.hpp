#pragma once

#include <stdexcept>
#include <string>

namespace tfg {

enum class errc {
  not_bijective,
  not_closed,
  infinite_order,
  nonzero_index,
  non_integer_index,
  unsupported_system,
  irrational_frequency,
  disjointness_violated,
  recoding_required,
  return_time_cap,
  resource_cap,
  word_too_short,
  inconclusive,
  bad_config,
  parse_error,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::not_bijective: return "NotBijective";
    case errc::not_closed: return "NotClosed";
    case errc::infinite_order: return "InfiniteOrder";
    case errc::nonzero_index: return "NonzeroIndex";
    case errc::non_integer_index: return "NonIntegerIndex";
    case errc::unsupported_system: return "UnsupportedSystem";
    case errc::irrational_frequency: return "IrrationalFrequency";
    case errc::disjointness_violated: return "DisjointnessViolated";
    case errc::recoding_required: return "RecodingRequired";
    case errc::return_time_cap: return "ReturnTimeCapExceeded";
    case errc::resource_cap: return "ResourceCapExceeded";
    case errc::word_too_short: return "WordTooShort";
    case errc::inconclusive: return "Inconclusive";
    case errc::bad_config: return "BadConfig";
    case errc::parse_error: return "ParseError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

inline void require(bool ok, errc code, const std::string& what) {
  if (!ok) fail(code, what);
}

}  // namespace tfg
