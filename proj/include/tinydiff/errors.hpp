#pragma once

#include <stdexcept>
#include <string>

namespace tinydiff {

// Shape disagreement between tensors/images.
struct ShapeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A word not present in the vocabulary.
struct UnknownTokenError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad or inconsistent configuration (missing checkpoints, invalid ranges, ...).
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Non-finite values where finite ones are required.
struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Training diverged (non-finite loss), carries the step index in the message.
struct TrainingError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Corrupt file payload (checksum mismatch, truncation).
struct IntegrityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// File format version not supported by this build.
struct VersionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Filesystem failures (open/read/write).
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace tinydiff
