#pragma once

#include <iostream>
#include <memory>

#include "ocl/oracle.hpp"

namespace ocl {

// Line protocol, UTF-8, one request per line:
//   "MQ <space-separated symbols>"  -> "YES" | "NO"     (empty word: no symbols)
//   "EQ <single-line JSON doca>"    -> "OK" | "CE <space-separated symbols>"
//   "PEQ <limit> <single-line JSON doca>" -> "OK" | "CE ..."   (bounded variant)
//   "STATS"                         -> "MQ=<n> MEQ=<n>"
//   "BYE"                           -> connection closes
// Malformed input gets "ERR <reason>" and the connection stays alive.
void teacher_protocol_serve(Teacher& teacher, std::istream& in, std::ostream& out);

// Presents a protocol endpoint as a Teacher. The alphabet cannot be queried
// over the wire, so the caller provides it.
class RemoteTeacher : public Teacher {
 public:
  RemoteTeacher(Alphabet alphabet, std::istream& in, std::ostream& out);

  const Alphabet& alphabet() const override { return alphabet_; }
  bool membership(const Word& word) override;
  std::optional<Word> minimal_equivalence(const Doca& hypothesis) override;
  QueryStats stats() const override;  // asks the server

 private:
  std::string request(const std::string& line);

  Alphabet alphabet_;
  std::istream& in_;
  std::ostream& out_;
};

// TCP wrappers (CLI surface). serve_teacher_tcp handles sequential clients
// until the process is stopped; returns only on listen errors.
void serve_teacher_tcp(Teacher& teacher, int port);

struct TcpTeacherConnection {
  // Owns the socket plus the stream adapters RemoteTeacher talks through.
  std::unique_ptr<std::istream> in;
  std::unique_ptr<std::ostream> out;
  std::unique_ptr<RemoteTeacher> teacher;
  ~TcpTeacherConnection();
  int fd = -1;
};

std::unique_ptr<TcpTeacherConnection> connect_teacher_tcp(const std::string& host, int port,
                                                          const Alphabet& alphabet);

}  // namespace ocl
