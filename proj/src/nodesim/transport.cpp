// Copyright (c) 2026 The EscrowSim developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include <escrowsim/nodesim/transport.hpp>
#include <escrowsim/support/errors.hpp>

#include <arpa/inet.h>
#include <netinet/in.h>
#include <sys/socket.h>
#include <unistd.h>

#include <atomic>
#include <condition_variable>
#include <cstring>
#include <deque>
#include <map>
#include <mutex>

namespace escrowsim {

namespace {

// ---------------------------------------------------------------- local ---

struct LocalQueue {
    std::mutex m;
    std::condition_variable cv;
    std::deque<Bytes> frames;
    bool closed = false;
};

struct LocalConn {
    LocalQueue to_server;
    LocalQueue to_client;
};

class LocalStream final : public Stream {
public:
    LocalStream(std::shared_ptr<LocalConn> conn, LocalQueue* in, LocalQueue* out)
        : conn_(std::move(conn)), in_(in), out_(out) {}

    ~LocalStream() override { close(); }

    void send(ByteSpan frame) override
    {
        if (frame.size() > MAX_FRAME_SIZE) throw TransportError("oversized frame");
        std::lock_guard lock(out_->m);
        if (out_->closed) throw TransportError("connection closed");
        out_->frames.emplace_back(frame.begin(), frame.end());
        out_->cv.notify_one();
    }

    Bytes recv() override
    {
        std::unique_lock lock(in_->m);
        if (!in_->cv.wait_for(lock, TRANSPORT_TIMEOUT,
                              [&] { return !in_->frames.empty() || in_->closed; })) {
            throw TransportError("receive timed out");
        }
        if (in_->frames.empty()) throw TransportError("connection closed");
        Bytes frame = std::move(in_->frames.front());
        in_->frames.pop_front();
        return frame;
    }

    void close() override
    {
        for (LocalQueue* q : {in_, out_}) {
            std::lock_guard lock(q->m);
            q->closed = true;
            q->cv.notify_all();
        }
    }

private:
    std::shared_ptr<LocalConn> conn_;
    LocalQueue* in_;
    LocalQueue* out_;
};

struct LocalListenerState {
    std::string name;
    std::mutex m;
    std::condition_variable cv;
    std::deque<std::shared_ptr<LocalConn>> pending;
    bool stopped = false;
};

std::mutex g_registry_mutex;
std::map<std::string, std::shared_ptr<LocalListenerState>> g_registry;

class LocalListener final : public Listener {
public:
    explicit LocalListener(std::shared_ptr<LocalListenerState> st) : st_(std::move(st)) {}

    ~LocalListener() override { stop(); }

    StreamPtr accept() override
    {
        std::unique_lock lock(st_->m);
        st_->cv.wait(lock, [&] { return !st_->pending.empty() || st_->stopped; });
        if (st_->pending.empty()) throw TransportError("listener stopped");
        auto conn = std::move(st_->pending.front());
        st_->pending.pop_front();
        return std::make_unique<LocalStream>(conn, &conn->to_server, &conn->to_client);
    }

    void stop() override
    {
        {
            std::lock_guard lock(st_->m);
            if (st_->stopped) return;
            st_->stopped = true;
            st_->cv.notify_all();
        }
        std::lock_guard reg(g_registry_mutex);
        auto it = g_registry.find(st_->name);
        if (it != g_registry.end() && it->second == st_) g_registry.erase(it);
    }

    std::string endpoint() const override { return "local:" + st_->name; }

private:
    std::shared_ptr<LocalListenerState> st_;
};

ListenerPtr local_listen(const std::string& name)
{
    if (name.empty()) throw ValidationError("bad endpoint: empty local name");
    auto st = std::make_shared<LocalListenerState>();
    st->name = name;
    std::lock_guard reg(g_registry_mutex);
    auto [it, inserted] = g_registry.emplace(name, st);
    if (!inserted) throw TransportError("address already in use: local:" + name);
    return std::make_unique<LocalListener>(std::move(st));
}

StreamPtr local_connect(const std::string& name)
{
    std::shared_ptr<LocalListenerState> st;
    {
        std::lock_guard reg(g_registry_mutex);
        auto it = g_registry.find(name);
        if (it != g_registry.end()) st = it->second;
    }
    if (!st) throw TransportError("connection refused: local:" + name);
    auto conn = std::make_shared<LocalConn>();
    {
        std::lock_guard lock(st->m);
        if (st->stopped) throw TransportError("connection refused: local:" + name);
        st->pending.push_back(conn);
        st->cv.notify_one();
    }
    return std::make_unique<LocalStream>(conn, &conn->to_client, &conn->to_server);
}

// ------------------------------------------------------------------ tcp ---

void set_socket_timeouts(int fd)
{
    timeval tv{};
    tv.tv_sec = TRANSPORT_TIMEOUT.count() / 1000;
    tv.tv_usec = static_cast<suseconds_t>((TRANSPORT_TIMEOUT.count() % 1000) * 1000);
    setsockopt(fd, SOL_SOCKET, SO_RCVTIMEO, &tv, sizeof(tv));
    setsockopt(fd, SOL_SOCKET, SO_SNDTIMEO, &tv, sizeof(tv));
}

class TcpStream final : public Stream {
public:
    explicit TcpStream(int fd) : fd_(fd) { set_socket_timeouts(fd_); }

    ~TcpStream() override { close(); }

    void send(ByteSpan frame) override
    {
        if (frame.size() > MAX_FRAME_SIZE) throw TransportError("oversized frame");
        uint8_t len[4];
        const auto n = static_cast<uint32_t>(frame.size());
        len[0] = uint8_t(n);
        len[1] = uint8_t(n >> 8);
        len[2] = uint8_t(n >> 16);
        len[3] = uint8_t(n >> 24);
        send_all(len, sizeof(len));
        send_all(frame.data(), frame.size());
    }

    Bytes recv() override
    {
        uint8_t len[4];
        recv_all(len, sizeof(len));
        const uint32_t n = uint32_t(len[0]) | uint32_t(len[1]) << 8 |
                           uint32_t(len[2]) << 16 | uint32_t(len[3]) << 24;
        if (n > MAX_FRAME_SIZE) throw TransportError("oversized frame");
        Bytes frame(n);
        recv_all(frame.data(), frame.size());
        return frame;
    }

    void close() override
    {
        if (fd_ >= 0) {
            ::shutdown(fd_, SHUT_RDWR);
            ::close(fd_);
            fd_ = -1;
        }
    }

private:
    void send_all(const uint8_t* data, size_t size)
    {
        if (fd_ < 0) throw TransportError("connection closed");
        size_t sent = 0;
        while (sent < size) {
            const ssize_t r = ::send(fd_, data + sent, size - sent, MSG_NOSIGNAL);
            if (r <= 0) {
                if (r < 0 && (errno == EAGAIN || errno == EWOULDBLOCK))
                    throw TransportError("send timed out");
                throw TransportError("connection closed");
            }
            sent += static_cast<size_t>(r);
        }
    }

    void recv_all(uint8_t* data, size_t size)
    {
        if (fd_ < 0) throw TransportError("connection closed");
        size_t got = 0;
        while (got < size) {
            const ssize_t r = ::recv(fd_, data + got, size - got, 0);
            if (r == 0) throw TransportError("connection closed");
            if (r < 0) {
                if (errno == EAGAIN || errno == EWOULDBLOCK)
                    throw TransportError("receive timed out");
                throw TransportError("connection closed");
            }
            got += static_cast<size_t>(r);
        }
    }

    int fd_;
};

class TcpListener final : public Listener {
public:
    explicit TcpListener(uint16_t port)
    {
        fd_ = ::socket(AF_INET, SOCK_STREAM, 0);
        if (fd_ < 0) throw TransportError("cannot create socket");
        const int one = 1;
        setsockopt(fd_, SOL_SOCKET, SO_REUSEADDR, &one, sizeof(one));
        sockaddr_in addr{};
        addr.sin_family = AF_INET;
        addr.sin_addr.s_addr = htonl(INADDR_LOOPBACK);
        addr.sin_port = htons(port);
        if (::bind(fd_, reinterpret_cast<sockaddr*>(&addr), sizeof(addr)) != 0) {
            ::close(fd_);
            throw TransportError("address already in use: tcp:127.0.0.1:" + std::to_string(port));
        }
        if (::listen(fd_, 8) != 0) {
            ::close(fd_);
            throw TransportError("cannot listen on tcp:127.0.0.1:" + std::to_string(port));
        }
        sockaddr_in bound{};
        socklen_t len = sizeof(bound);
        getsockname(fd_, reinterpret_cast<sockaddr*>(&bound), &len);
        port_ = ntohs(bound.sin_port);
    }

    ~TcpListener() override
    {
        stop();
        if (fd_ >= 0) ::close(fd_);
    }

    StreamPtr accept() override
    {
        while (true) {
            if (stopped_.load()) throw TransportError("listener stopped");
            const int conn = ::accept(fd_, nullptr, nullptr);
            if (conn >= 0) return std::make_unique<TcpStream>(conn);
            if (stopped_.load()) throw TransportError("listener stopped");
            if (errno == EINTR || errno == ECONNABORTED) continue;
            throw TransportError("accept failed on " + endpoint());
        }
    }

    void stop() override
    {
        // shutdown() wakes a blocked accept(); the fd itself is closed in
        // the destructor so a racing accept never sees a reused descriptor.
        if (!stopped_.exchange(true)) ::shutdown(fd_, SHUT_RDWR);
    }

    std::string endpoint() const override
    {
        return "tcp:127.0.0.1:" + std::to_string(port_);
    }

private:
    int fd_ = -1;
    uint16_t port_ = 0;
    std::atomic<bool> stopped_{false};
};

struct TcpEndpoint {
    std::string host;
    uint16_t port = 0;
};

TcpEndpoint parse_tcp(const std::string& rest, const std::string& full)
{
    const auto colon = rest.rfind(':');
    if (colon == std::string::npos || colon == 0 || colon + 1 == rest.size())
        throw ValidationError("bad endpoint: " + full);
    TcpEndpoint ep;
    ep.host = rest.substr(0, colon);
    const std::string port_str = rest.substr(colon + 1);
    unsigned long port = 0;
    try {
        size_t pos = 0;
        port = std::stoul(port_str, &pos);
        if (pos != port_str.size() || port > 65535) throw std::invalid_argument(port_str);
    } catch (const std::exception&) {
        throw ValidationError("bad endpoint: " + full);
    }
    ep.port = static_cast<uint16_t>(port);
    if (ep.host != "127.0.0.1" && ep.host != "localhost")
        throw ValidationError("refusing non-loopback endpoint: " + full);
    return ep;
}

} // namespace

ListenerPtr listen(const std::string& endpoint)
{
    if (endpoint.rfind("local:", 0) == 0) return local_listen(endpoint.substr(6));
    if (endpoint.rfind("tcp:", 0) == 0) {
        const auto ep = parse_tcp(endpoint.substr(4), endpoint);
        return std::make_unique<TcpListener>(ep.port);
    }
    throw ValidationError("bad endpoint: " + endpoint);
}

StreamPtr connect(const std::string& endpoint)
{
    if (endpoint.rfind("local:", 0) == 0) return local_connect(endpoint.substr(6));
    if (endpoint.rfind("tcp:", 0) == 0) {
        const auto ep = parse_tcp(endpoint.substr(4), endpoint);
        const int fd = ::socket(AF_INET, SOCK_STREAM, 0);
        if (fd < 0) throw TransportError("cannot create socket");
        set_socket_timeouts(fd);
        sockaddr_in addr{};
        addr.sin_family = AF_INET;
        addr.sin_addr.s_addr = htonl(INADDR_LOOPBACK);
        addr.sin_port = htons(ep.port);
        if (::connect(fd, reinterpret_cast<sockaddr*>(&addr), sizeof(addr)) != 0) {
            ::close(fd);
            throw TransportError("connection refused: " + endpoint);
        }
        return std::make_unique<TcpStream>(fd);
    }
    throw ValidationError("bad endpoint: " + endpoint);
}

} // namespace escrowsim
