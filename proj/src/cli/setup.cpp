#include "setup.hpp"

#include <algorithm>
#include <string>

#include "jhull/coeffs.hpp"

namespace jhull::cli {

Setup make_setup(const RunConfig& config) {
  CoeffTable::Options opts;
  opts.exact_depth = config.depth;
  opts.float_depth = std::max(kDefaultFloatDepth, config.depth);
  opts.allow_small_lambda = config.allow_small_lambda;
  CoeffTable table = CoeffTable::build(parse_rational(config.lambda), opts);
  Setup s;
  if (config.corrupt_row >= 0) {
    table = table.with_corrupted_row(static_cast<std::size_t>(config.corrupt_row));
    s.corrupted = true;
  }
  s.model = Model::make(std::make_shared<const CoeffTable>(std::move(table)));
  return s;
}

void require_digits(const RunConfig& config, int needed, const char* what) {
  if (config.digits < needed) {
    throw ConfigError(std::string(what) + " needs --digits >= " + std::to_string(needed) + ", have " +
                      std::to_string(config.digits));
  }
}

}  // namespace jhull::cli
