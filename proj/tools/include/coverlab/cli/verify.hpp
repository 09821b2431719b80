#ifndef COVERLAB_CLI_VERIFY_HPP
#define COVERLAB_CLI_VERIFY_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "coverlab/cli/report.hpp"
#include "coverlab/graph.hpp"

namespace coverlab::cli {

enum class VerifyScope { Crown, Multipartite, Multiplicity, All };

struct VerifyOptions {
    VerifyScope scope = VerifyScope::All;
    std::optional<std::size_t> n;                  // crown size
    std::optional<int> s_max;
    std::optional<std::vector<std::size_t>> parts; // one multipartite family
    std::vector<std::string> graphs;               // graph specs for the multiplicity scope
    bool force = false;
    bool timing = true;
};

// Desk-scale guards, lifted by --force.
inline constexpr std::size_t kCrownMaxN = 4;
inline constexpr int kCrownMaxS = 3;
inline constexpr std::size_t kMultipartiteMaxN = 6;
inline constexpr int kMultipartiteMaxS = 4;

/// Thrown for parameter combinations the suite refuses to run.
class VerifyRangeError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Graph specs: "triangle", "crown:N", "complete:N", "multipartite:P1,P2,...".
SimpleGraph graph_from_spec(const std::string& spec);

VerificationReport verify_suite(const VerifyOptions& options);

} // namespace coverlab::cli

#endif
