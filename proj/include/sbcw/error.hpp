#pragma once

#include <stdexcept>
#include <string>

namespace sbcw {

// One code per contract violation; messages carry the offending values.
enum class errc {
  both_zero,
  not_neighbors,
  invalid_word,
  out_of_domain,
  out_of_region,
  middle_flip,
  unclassifiable,
  not_primitive,
  equal_words,
  tie_break,
  overflow,
  parse_error,
};

const char* errc_name(errc code);

class Error : public std::domain_error {
 public:
  Error(errc code, const std::string& what)
      : std::domain_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace sbcw
