#pragma once

#include <stdexcept>
#include <string>

namespace reflow {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Caller violated a precondition (empty input, mismatched lists, ...).
class InvalidInput : public Error {
public:
    using Error::Error;
};

// Byte string is not a canonical encoding of the expected object.
// Distinct from a verification returning false.
class DecodeError : public Error {
public:
    using Error::Error;
};

// The system entropy source failed; unrecoverable.
class EntropyError : public Error {
public:
    using Error::Error;
};

// A zero-knowledge proof or credential check failed where the protocol
// requires it to pass before proceeding (issuance gate, signature gate).
class ProofRejected : public Error {
public:
    using Error::Error;
};

// A signature whose fingerprint is already present in the seal.
class DuplicateFingerprint : public Error {
public:
    using Error::Error;
};

// Operation attempted on a closed seal, or closing an unverified one.
class SealStateError : public Error {
public:
    using Error::Error;
};

// Filesystem-level failure in the CLI layer.
class IoError : public Error {
public:
    using Error::Error;
};

} // namespace reflow
