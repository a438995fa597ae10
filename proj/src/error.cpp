#include "sbcw/error.hpp"

namespace sbcw {

const char* errc_name(errc code) {
  switch (code) {
    case errc::both_zero: return "BothZero";
    case errc::not_neighbors: return "NotNeighbors";
    case errc::invalid_word: return "InvalidWord";
    case errc::out_of_domain: return "OutOfDomain";
    case errc::out_of_region: return "OutOfRegion";
    case errc::middle_flip: return "MiddleFlip";
    case errc::unclassifiable: return "Unclassifiable";
    case errc::not_primitive: return "NotPrimitive";
    case errc::equal_words: return "EqualWords";
    case errc::tie_break: return "TieBreak";
    case errc::overflow: return "Overflow";
    case errc::parse_error: return "ParseError";
  }
  return "UnknownError";
}

}  // namespace sbcw
