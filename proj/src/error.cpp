#include "skewspec/error.hpp"

namespace skewspec {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::DuplicateEdge: return "DuplicateEdge";
    case Errc::SelfLoop: return "SelfLoop";
    case Errc::VertexOutOfRange: return "VertexOutOfRange";
    case Errc::NotBipartite: return "NotBipartite";
    case Errc::InvalidBipartition: return "InvalidBipartition";
    case Errc::NotSymmetric: return "NotSymmetric";
    case Errc::UnderlyingGraphMismatch: return "UnderlyingGraphMismatch";
    case Errc::OddCycle: return "OddCycle";
    case Errc::NotACycle: return "NotACycle";
    case Errc::CapExceeded: return "CapExceeded";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::NotRegular: return "NotRegular";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::ParseError: return "ParseError";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

namespace {
std::string describe_cycle(const std::vector<int>& cycle) {
  std::string s = "graph is not bipartite; odd cycle:";
  for (int v : cycle) s += " " + std::to_string(v);
  return s;
}
}  // namespace

NotBipartiteError::NotBipartiteError(std::vector<int> odd_cycle)
    : Error(Errc::NotBipartite, describe_cycle(odd_cycle)), odd_cycle_(std::move(odd_cycle)) {}

ParseError::ParseError(std::size_t line, const std::string& reason)
    : Error(Errc::ParseError, "line " + std::to_string(line) + ": " + reason), line_(line) {}

}  // namespace skewspec
