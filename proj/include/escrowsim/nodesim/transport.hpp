// Copyright (c) 2026 The EscrowSim developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef ESCROWSIM_NODESIM_TRANSPORT_H
#define ESCROWSIM_NODESIM_TRANSPORT_H

#include <escrowsim/support/bytes.hpp>

#include <chrono>
#include <memory>
#include <string>

namespace escrowsim {

// Framed, blocking, point-to-point byte stream. Every failure surfaces as
// TransportError; nothing hangs past the timeout.
class Stream {
public:
    virtual ~Stream() = default;
    virtual void send(ByteSpan frame) = 0;
    virtual Bytes recv() = 0;
    virtual void close() = 0;
};

using StreamPtr = std::unique_ptr<Stream>;

class Listener {
public:
    virtual ~Listener() = default;
    // Blocks for the next connection; throws TransportError once stopped.
    virtual StreamPtr accept() = 0;
    // Idempotent; unblocks a pending accept.
    virtual void stop() = 0;
    // The bound endpoint, with any requested port 0 resolved.
    virtual std::string endpoint() const = 0;
};

using ListenerPtr = std::unique_ptr<Listener>;

inline constexpr std::chrono::milliseconds TRANSPORT_TIMEOUT{5000};
inline constexpr size_t MAX_FRAME_SIZE = 64u << 20;

// Endpoint strings: "local:<name>" (in-process) or "tcp:127.0.0.1:<port>".
// Anything that is not loopback is refused outright.
ListenerPtr listen(const std::string& endpoint);
StreamPtr connect(const std::string& endpoint);

} // namespace escrowsim

#endif // ESCROWSIM_NODESIM_TRANSPORT_H
