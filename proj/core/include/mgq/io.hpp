#pragma once

#include <stdexcept>
#include <string>

#include "mgq/matrix_reps.hpp"
#include "mgq/multigraph.hpp"

namespace mgq {

// Schema violation; path is a JSON path such as edges[0].tgt.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string path, const std::string& msg)
      : std::runtime_error(path.empty() ? msg : path + ": " + msg), path_(std::move(path)) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

std::string read_file(const std::string& file);
void write_file(const std::string& file, const std::string& text);

// {"vertices":[..],"edges":[{"id","src","tgt"}],"inversion":[[e,f],..]}
Multigraph parse_multigraph(const std::string& text);
Multigraph load_multigraph(const std::string& file);
std::string multigraph_to_json(const Multigraph& g);

// {"dim":d,"assign":{"q[a][b]":[[[re,im],..],..],..}}
MagicUnitaryRep parse_rep(const std::string& text);
MagicUnitaryRep load_rep(const std::string& file);
std::string rep_to_json(const MagicUnitaryRep& rep);

}  // namespace mgq
