#pragma once

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "hrcv/logic/trace.hpp"

namespace hrcv::io {

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Text trace format:
//
//   # bound <k>
//   # vars <name>...
//   # domain <var> <value>...      one per finite variable
//   <t> <value>...                 one line per instant 0..k
//
// Propositions are written 0/1, variables as domain values. When a file has
// no `# domain` lines, columns holding only 0/1 are read as propositions and
// any other column as a variable whose domain is its values in order of
// first appearance.
void write_trace(std::ostream& out, const logic::Trace& tr);
logic::Trace read_trace(std::istream& in);

void write_trace_file(const std::filesystem::path& path, const logic::Trace& tr);
logic::Trace read_trace_file(const std::filesystem::path& path);

}  // namespace hrcv::io
