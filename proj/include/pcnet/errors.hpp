#pragma once

#include <stdexcept>
#include <string>

namespace pcnet {

/// Base class of every error thrown by this library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct ShapeMismatch : Error {
    using Error::Error;
};

struct LabelOutOfRange : Error {
    using Error::Error;
};

struct BadDepth : Error {
    using Error::Error;
};

struct IndexOutOfRange : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

struct CorruptCheckpoint : Error {
    using Error::Error;
};

struct DepthMismatch : Error {
    using Error::Error;
};

struct NotResidual : Error {
    using Error::Error;
};

struct OddEpochCount : Error {
    using Error::Error;
};

struct EmptyDataset : Error {
    using Error::Error;
};

struct BadRecordLength : Error {
    using Error::Error;
};

struct BadFraction : Error {
    using Error::Error;
};

struct ConfigError : Error {
    using Error::Error;
};

struct LengthMismatch : Error {
    using Error::Error;
};

}  // namespace pcnet
