#pragma once

// Command-line front end. Everything here is callable in-process so that the
// executable in tools/ is a thin wrapper around run().

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "bridgepants/errors.hpp"
#include "bridgepants/pantscomplex.hpp"
#include "bridgepants/twobridge.hpp"
#include "bridgepants/volume.hpp"

namespace bridgepants::cli {

enum ExitCode : int {
  kOk = 0,
  kBatchLineFailed = 1,
  kParseError = 2,
  kNotAKnot = 3,
  kNotHyperbolic = 4,
  kBoundTooLarge = 5,
};

inline constexpr std::int64_t kDefaultMaxBound = 500;
inline constexpr const char* kMaxBoundEnv = "BRIDGEPANTS_MAX_BOUND";

/// Malformed knot text, unreadable file or invalid flag value.
class ParseError : public Error {
 public:
  using Error::Error;
};

enum class Output { NormalForm, Cf, Twist, Distance, Complexity, Bounds, Cover };

inline const std::set<Output> kAllOutputs{Output::NormalForm, Output::Cf,     Output::Twist,
                                          Output::Distance,   Output::Complexity,
                                          Output::Bounds,     Output::Cover};

struct KnotQuery {
  std::string raw;
  std::set<Output> outputs = kAllOutputs;
  /// Restricts volume bounds to one method; both when unset.
  std::optional<BoundSource> via;
};

/// Parses "p/q" (optional leading minus) or the literal "unknot". The fraction
/// is reduced before the parity check, so "4/6" is K_{2/3}.
/// Throws ParseError or NotAKnotError.
TwoBridgeKnot parse_knot(std::string_view text);

/// Runs the invariant pipeline and renders it as a JSON object string.
/// `indent` < 0 gives a single line.
std::string render_report(const KnotQuery& query, int indent = 2);

/// Writes the bounded view as DOT or JSON.
enum class GraphFormat { Dot, Json };
void write_graph(std::ostream& out, const MetricGraphView& view, GraphFormat format);

/// Largest graph bound accepted, honouring BRIDGEPANTS_MAX_BOUND.
std::int64_t max_graph_bound();

/// Processes a batch file as JSON lines. Returns kOk when every line
/// succeeded, kBatchLineFailed otherwise, kParseError if unreadable.
int run_batch(std::istream& in, std::ostream& out);

/// JSON schema that every report and batch line validates against.
std::string_view report_schema();

/// Full command line (without argv[0]).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bridgepants::cli
