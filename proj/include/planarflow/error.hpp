#pragma once

#include <stdexcept>
#include <string>

namespace planarflow {

// Base class for all errors raised by the library. `code()` returns a short
// stable identifier that the CLI maps to exit statuses.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(code + ": " + what), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

#define PLANARFLOW_DEFINE_ERROR(Name)                        \
  class Name : public Error {                                \
   public:                                                   \
    explicit Name(const std::string& what = "")              \
        : Error(#Name, what) {}                              \
  }

PLANARFLOW_DEFINE_ERROR(NonPlanar);
PLANARFLOW_DEFINE_ERROR(MalformedRotation);
PLANARFLOW_DEFINE_ERROR(ParseError);
PLANARFLOW_DEFINE_ERROR(OverflowGuard);
PLANARFLOW_DEFINE_ERROR(InfiniteLambda);
PLANARFLOW_DEFINE_ERROR(InfeasiblePrice);
PLANARFLOW_DEFINE_ERROR(LoopEdge);
PLANARFLOW_DEFINE_ERROR(NonTermination);
PLANARFLOW_DEFINE_ERROR(NoNegativeCycleInDecomposition);
PLANARFLOW_DEFINE_ERROR(NegativeReducedWeight);
PLANARFLOW_DEFINE_ERROR(FaceNotInPiece);
PLANARFLOW_DEFINE_ERROR(TooSmall);
PLANARFLOW_DEFINE_ERROR(UnbalancedDemands);
PLANARFLOW_DEFINE_ERROR(NotBipartite);
PLANARFLOW_DEFINE_ERROR(StaticIndex);
PLANARFLOW_DEFINE_ERROR(NotACut);
PLANARFLOW_DEFINE_ERROR(SizeCap);
PLANARFLOW_DEFINE_ERROR(EmptyActiveSet);

#undef PLANARFLOW_DEFINE_ERROR

// Internal invariant failures ("bug signals" in the module contracts) also
// throw, so a broken solve is diagnosable instead of silently wrong.
inline void check(bool cond, const char* what) {
  if (!cond) throw Error("InternalInvariant", what);
}

}  // namespace planarflow
