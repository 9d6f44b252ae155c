#pragma once

#include <stdexcept>
#include <string>

namespace hazecast {

// ValidationError: bad inputs or violated preconditions (CLI exit code 1).
// RuntimeError: failures while doing otherwise valid work (CLI exit code 2).
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct RuntimeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define HAZECAST_VALIDATION_ERROR(NAME) \
    struct NAME : ValidationError {     \
        using ValidationError::ValidationError; \
    }

// data
HAZECAST_VALIDATION_ERROR(MissingColumn);
HAZECAST_VALIDATION_ERROR(ParseError);
HAZECAST_VALIDATION_ERROR(EmptyFile);
HAZECAST_VALIDATION_ERROR(SeriesTooShort);
HAZECAST_VALIDATION_ERROR(EmptyInput);

// entropy
HAZECAST_VALIDATION_ERROR(ZeroTotalWeight);
HAZECAST_VALIDATION_ERROR(InvalidBeta);
HAZECAST_VALIDATION_ERROR(TooFewSegments);

// clustering
HAZECAST_VALIDATION_ERROR(ZeroSumSeries);
HAZECAST_VALIDATION_ERROR(EmptyCluster);
HAZECAST_VALIDATION_ERROR(InvalidK);
HAZECAST_VALIDATION_ERROR(SingleCluster);

// tensors / model
HAZECAST_VALIDATION_ERROR(ShapeMismatch);
HAZECAST_VALIDATION_ERROR(NotScalarLoss);
HAZECAST_VALIDATION_ERROR(UnrecordedId);
HAZECAST_VALIDATION_ERROR(OddHeadDim);
HAZECAST_VALIDATION_ERROR(StateStepMismatch);
HAZECAST_VALIDATION_ERROR(EmptyTrainSet);

// optimization
HAZECAST_VALIDATION_ERROR(NonFiniteObjective);
HAZECAST_VALIDATION_ERROR(InfeasibleBounds);
HAZECAST_VALIDATION_ERROR(NoModels);

#undef HAZECAST_VALIDATION_ERROR

struct DivergedLoss : RuntimeError {
    using RuntimeError::RuntimeError;
};
struct IoError : RuntimeError {
    using RuntimeError::RuntimeError;
};

}  // namespace hazecast
