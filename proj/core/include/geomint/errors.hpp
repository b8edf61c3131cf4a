#pragma once

#include <stdexcept>

namespace geomint {

/// I/O failure while reading or writing an image or manifest file.
struct ImageIoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed or unsupported image data.
struct ImageFormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A binarized image contains no figure pixels.
struct EmptyFigureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A figure has too few points for its principal axis to be defined.
struct DegenerateFigureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace geomint
