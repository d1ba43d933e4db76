#pragma once

#include <map>
#include <memory>

#include "mvstone/stone_n.hpp"
#include "mvstone/supernatural.hpp"

namespace mvstone {

inline constexpr const char* kToolVersion = "0.1.0";

/// Parse/validation failure with source position; maps to exit status 2.
struct ParseError : MvError {
  int line;
  int col;
  ParseError(const std::string& msg, int l, int c)
      : MvError("line " + std::to_string(l) + ":" + std::to_string(c) + ": " + msg),
        line(l),
        col(c) {}
};

struct CheckStmt {
  std::string command;
  std::vector<std::string> args;
  int line = 0;
};

/// A parsed and name-resolved batch document. Declarations are materialized
/// eagerly; checks are validated for arity and reference types.
struct SpecDocument {
  std::map<std::string, Chain> chains;
  std::map<std::string, Signature> products;
  std::map<std::string, UniversePtr> point_sets;
  std::map<std::string, std::shared_ptr<const MvAlgebra>> algebras;
  std::map<std::string, FuzzySubset> subsets;
  std::map<std::string, PointMap> maps;
  std::map<std::string, std::shared_ptr<const MvTopology>> topologies;
  std::map<std::string, MetricTable> metrics;
  std::map<std::string, BooleN> boolens;
  std::vector<CheckStmt> checks;
};

SpecDocument parse_spec(const std::string& text);

/// Literal like "12", "2^3*5" or "2^w*3"; used by the sn commands.
Supernatural parse_supernatural(const std::string& text);

}  // namespace mvstone
