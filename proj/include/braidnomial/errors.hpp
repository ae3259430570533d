#ifndef BRAIDNOMIAL_ERRORS_HPP
#define BRAIDNOMIAL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace braidnomial {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
  virtual const char* name() const noexcept { return "Error"; }
};

#define BRAIDNOMIAL_DEFINE_ERROR(Name)                                  \
  struct Name : Error {                                                 \
    explicit Name(const std::string& what) : Error(what) {}             \
    const char* name() const noexcept override { return #Name; }        \
  }

// equation validation
BRAIDNOMIAL_DEFINE_ERROR(NonConvexNewton);
BRAIDNOMIAL_DEFINE_ERROR(BadMiddleGcd);
BRAIDNOMIAL_DEFINE_ERROR(QTooSmall);
BRAIDNOMIAL_DEFINE_ERROR(GcdConditionViolated);
BRAIDNOMIAL_DEFINE_ERROR(NoInverse);
BRAIDNOMIAL_DEFINE_ERROR(BadInput);

// braid words / twists
BRAIDNOMIAL_DEFINE_ERROR(OutOfRange);
BRAIDNOMIAL_DEFINE_ERROR(StrandMismatch);
BRAIDNOMIAL_DEFINE_ERROR(DegenerateProjection);
BRAIDNOMIAL_DEFINE_ERROR(SnapCollision);

// numeric tracking
BRAIDNOMIAL_DEFINE_ERROR(StepCollapse);
BRAIDNOMIAL_DEFINE_ERROR(ResidualBlowup);
BRAIDNOMIAL_DEFINE_ERROR(LabelAmbiguity);
BRAIDNOMIAL_DEFINE_ERROR(UnresolvedCrossing);
BRAIDNOMIAL_DEFINE_ERROR(AmbiguousCollision);

// galois
BRAIDNOMIAL_DEFINE_ERROR(DegreeMismatch);

#undef BRAIDNOMIAL_DEFINE_ERROR

}  // namespace braidnomial

#endif
