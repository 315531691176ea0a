#pragma once

#include <stdexcept>
#include <string>

namespace semfuse {

// Root of every error this library throws on purpose. The CLI maps these to
// exit code 2 (input/usage) or 3 (numeric failure).
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class MissingFileError : public Error {
public:
    explicit MissingFileError(const std::string& path)
        : Error("missing file: " + path) {}
};

class CorruptImageError : public Error {
public:
    using Error::Error;
};

class ChannelMismatchError : public Error {
public:
    using Error::Error;
};

class ColorspaceMismatchError : public Error {
public:
    using Error::Error;
};

class ShapeMismatchError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

class EmptyTextError : public Error {
public:
    EmptyTextError() : Error("empty text") {}
};

class ZeroVectorError : public Error {
public:
    ZeroVectorError() : Error("zero vector has no direction") {}
};

class BackendUnavailableError : public Error {
public:
    using Error::Error;
};

class DegenerateChannelError : public Error {
public:
    using Error::Error;
};

class EmptyManifestError : public Error {
public:
    using Error::Error;
};

// Numeric failure (exit code 3 in the CLI).
class NonFiniteLossError : public Error {
public:
    using Error::Error;
};

class VersionMismatchError : public Error {
public:
    using Error::Error;
};

class CorruptCheckpointError : public Error {
public:
    using Error::Error;
};

} // namespace semfuse
