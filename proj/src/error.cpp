#include "v2xi/error.hpp"

namespace v2xi {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::domain: return "domain error";
    case ErrorCode::constraint: return "constraint error";
    case ErrorCode::parameter: return "parameter error";
    case ErrorCode::singularity: return "singularity error";
    case ErrorCode::unsupported_angle: return "unsupported angle";
    case ErrorCode::infeasible_geometry: return "infeasible geometry";
    case ErrorCode::degenerate_geometry: return "degenerate geometry";
    case ErrorCode::receiver_missing: return "receiver missing";
    case ErrorCode::undefined_mape: return "undefined MAPE";
    case ErrorCode::fit: return "fit error";
    case ErrorCode::config: return "configuration error";
  }
  return "error";
}

}  // namespace v2xi
