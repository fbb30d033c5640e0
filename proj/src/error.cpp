#include "sbs/error.hpp"

namespace sbs {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidParameter: return "invalid parameter";
    case ErrorKind::InvalidArgument: return "invalid argument";
    case ErrorKind::MalformedMatrix: return "malformed matrix";
    case ErrorKind::UnsupportedRegime: return "unsupported regime";
    case ErrorKind::InvalidStep: return "invalid step";
    case ErrorKind::Overflow: return "overflow";
    case ErrorKind::IllConditioned: return "ill-conditioned";
    case ErrorKind::InvalidState: return "invalid state";
    case ErrorKind::NoClosedForm: return "no closed form";
    case ErrorKind::Io: return "i/o";
  }
  return "unknown";
}

}  // namespace sbs
