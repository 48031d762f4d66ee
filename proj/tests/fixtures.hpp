#pragma once

#include <string>

#include "mgq/io.hpp"
#include "mgq/multigraph.hpp"

inline std::string fixture_path(const std::string& name) { return std::string(MGQ_FIXTURE_DIR) + "/" + name + ".json"; }

inline mgq::Multigraph raw_fixture(const std::string& name) { return mgq::load_multigraph(fixture_path(name)); }

inline mgq::Graph fixture(const std::string& name) { return mgq::Graph(raw_fixture(name)); }
