#include "fdroof/error.hpp"

namespace fdroof {

UnknownNameError::UnknownNameError(const std::string& kind, const std::string& name)
    : ValidationError("unknown " + kind + ": '" + name + "'"), name_(name) {}

namespace {
std::string parse_message(const std::string& source, std::optional<int> line,
                          const std::string& what) {
  std::string msg = source;
  if (line) msg += ":" + std::to_string(*line);
  return msg + ": " + what;
}
}  // namespace

ParseError::ParseError(const std::string& source, std::optional<int> line,
                       const std::string& what)
    : ValidationError(parse_message(source, line, what)), line_(line) {}

UnknownRatesError::UnknownRatesError(const std::string& machine)
    : Error("unachievable-rates-unknown: machine '" + machine +
            "' has no achievable peak rates") {}

}  // namespace fdroof
