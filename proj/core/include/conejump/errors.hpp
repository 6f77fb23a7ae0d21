#ifndef CONEJUMP_ERRORS_HPP
#define CONEJUMP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace conejump {

// All library failures carry a stable machine-readable code alongside the
// human message. The CLI maps codes to exit statuses.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

#define CONEJUMP_DEFINE_ERROR(Name)                        \
    class Name : public Error {                            \
    public:                                                \
        explicit Name(const std::string& message)          \
            : Error(#Name, message) {}                     \
    }

CONEJUMP_DEFINE_ERROR(NegativeDiscriminant);
CONEJUMP_DEFINE_ERROR(InvalidNumber);
CONEJUMP_DEFINE_ERROR(LatticeMismatch);
CONEJUMP_DEFINE_ERROR(WrongLatticeKind);
CONEJUMP_DEFINE_ERROR(NotSymmetric);
CONEJUMP_DEFINE_ERROR(RankTooLarge);
CONEJUMP_DEFINE_ERROR(HypothesisViolated);
CONEJUMP_DEFINE_ERROR(Degenerate);
CONEJUMP_DEFINE_ERROR(NotAmple);
CONEJUMP_DEFINE_ERROR(SideConditionFailed);
CONEJUMP_DEFINE_ERROR(PNotPositiveDefinite);
CONEJUMP_DEFINE_ERROR(DegreeTooLarge);
CONEJUMP_DEFINE_ERROR(SearchExhausted);
CONEJUMP_DEFINE_ERROR(ExpectedMismatch);
CONEJUMP_DEFINE_ERROR(NegativeT);
CONEJUMP_DEFINE_ERROR(TBelowR);
CONEJUMP_DEFINE_ERROR(KBelowThreshold);
CONEJUMP_DEFINE_ERROR(EpsilonOutOfRange);
CONEJUMP_DEFINE_ERROR(ParseError);

#undef CONEJUMP_DEFINE_ERROR

} // namespace conejump

#endif
