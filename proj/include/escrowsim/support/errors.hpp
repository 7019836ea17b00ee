// Copyright (c) 2026 The EscrowSim developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef ESCROWSIM_SUPPORT_ERRORS_H
#define ESCROWSIM_SUPPORT_ERRORS_H

#include <stdexcept>
#include <string>

namespace escrowsim {

// A malformed buffer, file, or message. The message names the region that
// was missing or invalid.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Bad arguments or preconditions (oversized payload, absent txid, missing
// sentinel, non-loopback bind, ...).
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Filesystem failures.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Authenticated decryption failed: wrong key, wrong label, or tampered data.
class AuthenticationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Peer or explorer transport failure (refused, closed, timed out).
class TransportError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// The endpoint's certificate does not chain to a pinned trust anchor, or its
// channel signature fails to verify.
class UntrustedEndpointError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Unexpected failure inside a crypto primitive.
class CryptoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace escrowsim

#endif // ESCROWSIM_SUPPORT_ERRORS_H
