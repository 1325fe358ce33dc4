#include "ocl/protocol.hpp"

#include <arpa/inet.h>
#include <netdb.h>
#include <sys/socket.h>
#include <unistd.h>

#include <cstring>
#include <sstream>
#include <stdexcept>

#include "ocl/json_io.hpp"

namespace ocl {

namespace {

std::string strip_cr(std::string line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

}  // namespace

void teacher_protocol_serve(Teacher& teacher, std::istream& in, std::ostream& out) {
  std::string line;
  while (std::getline(in, line)) {
    line = strip_cr(line);
    try {
      if (line == "BYE") {
        out.flush();
        return;
      }
      if (line == "STATS") {
        QueryStats s = teacher.stats();
        out << "MQ=" << s.mq_count << " MEQ=" << s.meq_count << "\n" << std::flush;
        continue;
      }
      if (line.rfind("MQ", 0) == 0 && (line.size() == 2 || line[2] == ' ')) {
        Word w = teacher.alphabet().parse_spaced(line.size() > 2 ? line.substr(3) : "");
        out << (teacher.membership(w) ? "YES" : "NO") << "\n" << std::flush;
        continue;
      }
      bool peq = line.rfind("PEQ ", 0) == 0;
      if (line.rfind("EQ ", 0) == 0 || peq) {
        std::string rest = line.substr(peq ? 4 : 3);
        long long limit = -1;
        if (peq) {
          size_t sp = rest.find(' ');
          if (sp == std::string::npos) throw std::invalid_argument("PEQ needs a limit and a machine");
          limit = std::stoll(rest.substr(0, sp));
          if (limit < 0) throw std::invalid_argument("PEQ limit must be non-negative");
          rest = rest.substr(sp + 1);
        }
        AnyMachine any = machine_from_json(nlohmann::json::parse(rest));
        Doca hyp = as_doca(any);
        int filled = complete_with_sink(hyp);
        (void)filled;
        // The counterexample is minimal, so a PEQ limit simply filters it.
        std::optional<Word> ce = teacher.minimal_equivalence(hyp);
        if (peq && ce && static_cast<long long>(ce->size()) > limit) ce = std::nullopt;
        if (ce)
          out << "CE " << teacher.alphabet().format(*ce) << "\n" << std::flush;
        else
          out << "OK" << "\n" << std::flush;
        continue;
      }
      out << "ERR unknown request" << "\n" << std::flush;
    } catch (const std::exception& e) {
      std::string reason = e.what();
      for (char& c : reason)
        if (c == '\n' || c == '\r') c = ' ';
      out << "ERR " << reason << "\n" << std::flush;
    }
  }
}

RemoteTeacher::RemoteTeacher(Alphabet alphabet, std::istream& in, std::ostream& out)
    : alphabet_(std::move(alphabet)), in_(in), out_(out) {}

std::string RemoteTeacher::request(const std::string& line) {
  out_ << line << "\n" << std::flush;
  std::string reply;
  if (!std::getline(in_, reply)) throw std::runtime_error("teacher connection closed");
  reply = strip_cr(reply);
  if (reply.rfind("ERR", 0) == 0) throw std::runtime_error("teacher error: " + reply);
  return reply;
}

bool RemoteTeacher::membership(const Word& word) {
  std::string reply = request("MQ " + alphabet_.format(word));
  if (reply == "YES") return true;
  if (reply == "NO") return false;
  throw std::runtime_error("unexpected MQ reply: " + reply);
}

std::optional<Word> RemoteTeacher::minimal_equivalence(const Doca& hypothesis) {
  std::string reply = request("EQ " + machine_to_json(hypothesis).dump());
  if (reply == "OK") return std::nullopt;
  if (reply.rfind("CE", 0) == 0)
    return alphabet_.parse_spaced(reply.size() > 2 ? reply.substr(3) : "");
  throw std::runtime_error("unexpected EQ reply: " + reply);
}

QueryStats RemoteTeacher::stats() const {
  auto* self = const_cast<RemoteTeacher*>(this);
  std::string reply = self->request("STATS");
  QueryStats s;
  if (std::sscanf(reply.c_str(), "MQ=%lld MEQ=%lld", &s.mq_count, &s.meq_count) != 2)
    throw std::runtime_error("unexpected STATS reply: " + reply);
  return s;
}

namespace {

// Minimal streambuf over a socket fd, enough for getline-driven protocols.
class FdStreambuf : public std::streambuf {
 public:
  explicit FdStreambuf(int fd) : fd_(fd) { setg(buf_, buf_, buf_); }

 protected:
  int underflow() override {
    ssize_t n = ::read(fd_, buf_, sizeof(buf_));
    if (n <= 0) return traits_type::eof();
    setg(buf_, buf_, buf_ + n);
    return traits_type::to_int_type(buf_[0]);
  }
  int overflow(int ch) override {
    if (ch == traits_type::eof()) return 0;
    char c = static_cast<char>(ch);
    return ::write(fd_, &c, 1) == 1 ? ch : traits_type::eof();
  }
  std::streamsize xsputn(const char* s, std::streamsize n) override {
    std::streamsize done = 0;
    while (done < n) {
      ssize_t w = ::write(fd_, s + done, n - done);
      if (w <= 0) break;
      done += w;
    }
    return done;
  }

 private:
  int fd_;
  char buf_[4096];
};

}  // namespace

void serve_teacher_tcp(Teacher& teacher, int port) {
  int listener = ::socket(AF_INET, SOCK_STREAM, 0);
  if (listener < 0) throw std::runtime_error("socket() failed");
  int one = 1;
  ::setsockopt(listener, SOL_SOCKET, SO_REUSEADDR, &one, sizeof(one));
  sockaddr_in addr{};
  addr.sin_family = AF_INET;
  addr.sin_addr.s_addr = htonl(INADDR_ANY);
  addr.sin_port = htons(static_cast<uint16_t>(port));
  if (::bind(listener, reinterpret_cast<sockaddr*>(&addr), sizeof(addr)) != 0) {
    ::close(listener);
    throw std::runtime_error("bind() failed on port " + std::to_string(port));
  }
  if (::listen(listener, 4) != 0) {
    ::close(listener);
    throw std::runtime_error("listen() failed");
  }
  for (;;) {
    int client = ::accept(listener, nullptr, nullptr);
    if (client < 0) break;
    FdStreambuf in_buf(client), out_buf(client);
    std::istream in(&in_buf);
    std::ostream out(&out_buf);
    teacher_protocol_serve(teacher, in, out);
    ::close(client);
  }
  ::close(listener);
}

TcpTeacherConnection::~TcpTeacherConnection() {
  if (fd >= 0) {
    if (out) (*out) << "BYE\n" << std::flush;
    ::close(fd);
  }
}

std::unique_ptr<TcpTeacherConnection> connect_teacher_tcp(const std::string& host, int port,
                                                          const Alphabet& alphabet) {
  addrinfo hints{};
  hints.ai_family = AF_INET;
  hints.ai_socktype = SOCK_STREAM;
  addrinfo* result = nullptr;
  if (::getaddrinfo(host.c_str(), std::to_string(port).c_str(), &hints, &result) != 0 || !result)
    throw std::runtime_error("cannot resolve " + host);
  int fd = ::socket(result->ai_family, result->ai_socktype, result->ai_protocol);
  if (fd < 0) {
    ::freeaddrinfo(result);
    throw std::runtime_error("socket() failed");
  }
  if (::connect(fd, result->ai_addr, result->ai_addrlen) != 0) {
    ::freeaddrinfo(result);
    ::close(fd);
    throw std::runtime_error("cannot connect to " + host + ":" + std::to_string(port));
  }
  ::freeaddrinfo(result);

  auto conn = std::make_unique<TcpTeacherConnection>();
  conn->fd = fd;
  // Streambufs owned via the stream wrappers below.
  auto* in_buf = new FdStreambuf(fd);
  auto* out_buf = new FdStreambuf(fd);
  struct OwningIstream : std::istream {
    explicit OwningIstream(std::streambuf* b) : std::istream(b), buf(b) {}
    ~OwningIstream() override { delete buf; }
    std::streambuf* buf;
  };
  struct OwningOstream : std::ostream {
    explicit OwningOstream(std::streambuf* b) : std::ostream(b), buf(b) {}
    ~OwningOstream() override { delete buf; }
    std::streambuf* buf;
  };
  conn->in = std::make_unique<OwningIstream>(in_buf);
  conn->out = std::make_unique<OwningOstream>(out_buf);
  conn->teacher = std::make_unique<RemoteTeacher>(alphabet, *conn->in, *conn->out);
  return conn;
}

}  // namespace ocl
