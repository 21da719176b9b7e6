#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "domlab/graph.hpp"

namespace domlab {

/// Raised when a family spec string cannot be parsed; `token()` is the
/// offending piece of the input.
class FamilySpecError : public std::invalid_argument {
public:
    FamilySpecError(const std::string& message, std::string token)
        : std::invalid_argument(message), token_(std::move(token)) {}
    const std::string& token() const noexcept { return token_; }

private:
    std::string token_;
};

/// Builds a graph from a colon-separated family spec:
///
///   complete:N  cycle:N  path:N  empty:N
///   bipartite:A,B  kpartite:N1,N2,...,Np
///   complement:<spec>  prism:<spec>  corona:<spec>
///   kjoin:<spec F>:<spec H>:k=K      (default assignment)
///   random:N:P:SEED
///
/// e.g. "prism:cycle:6", "complement:path:9", "kjoin:cycle:4:complete:2:k=1".
Graph parse_family(std::string_view spec);

}  // namespace domlab
