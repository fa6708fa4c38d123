#pragma once

#include <memory>

#include "jhull/cli.hpp"
#include "jhull/model.hpp"

namespace jhull::cli {

struct Setup {
  Model model;
  bool corrupted = false;
};

/// Builds the coefficient table (with the fault injection applied) and the
/// model. Regime and parse failures surface as library exceptions.
Setup make_setup(const RunConfig& config);

/// Config error unless the dyadic digit budget covers `needed` digits.
void require_digits(const RunConfig& config, int needed, const char* what);

}  // namespace jhull::cli
