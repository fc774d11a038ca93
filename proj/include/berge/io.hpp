#ifndef BERGE_IO_HPP
#define BERGE_IO_HPP

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "berge/hypergraph.hpp"
#include "berge/walk.hpp"

namespace berge {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// "n r" header, then one sorted edge per line in id order.
std::string format_hypergraph(const Hypergraph& h, const std::string& comment = {});
Hypergraph parse_hypergraph(const std::string& text);
Hypergraph read_hypergraph_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

struct Certificate {
  BergePath walk;
  WalkMode mode = WalkMode::berge;
};

/// Three lines: "<kind> k", vertex sequence, edge-id sequence.
std::string format_certificate(const BergePath& w, WalkMode mode);
Certificate parse_certificate(const std::string& text);

}  // namespace berge

#endif
