#pragma once

// Tiny integer expression evaluator used to hold closed-form matrix entries
// in a form that reads like the closed-form tables themselves,
// e.g. "(s-5)/5" or "s/2-a-(2*a-1)*k".

#include "arfrf/checked.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

namespace arfrf::formula {

using Bindings = std::map<char, Int>;

/// Raised when a '/' does not divide exactly (Exact mode) or input is bad.
class FormulaError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

enum class Division { Exact, Floor };

Int evaluate(std::string_view expr, const Bindings &vars,
             Division mode = Division::Exact);

} // namespace arfrf::formula
