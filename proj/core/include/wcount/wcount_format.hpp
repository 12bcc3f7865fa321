#ifndef WCOUNT_WCOUNT_FORMAT_HPP
#define WCOUNT_WCOUNT_FORMAT_HPP

#include <string>
#include <string_view>
#include <variant>

#include "wcount/instance.hpp"

// Reader and writer for the `WCOUNT v1` text format.
//
// @code
// WCOUNT v1
// mode integer            # or: mode modular <kappa>
// dims <m> <n>
// nu <nu_1> ... <nu_n>    # integer mode only
// weights uniform <re> <im>
// entries
// <i> <j> <a_ij>          # 1-based
// end
// @endcode
//
// `weights list` followed by `n` lines of `<re> <im>` is accepted in place of
// `weights uniform`. Numbers are read exactly, so decimal weights such as
// `0.1` keep their rational value for exact evaluation.

namespace wcount {

using AnyInstance = std::variant<WeightedInstance, ModularInstance>;

AnyInstance parse_instance(std::string_view text);
AnyInstance load_instance_file(const std::string& path);

/// Parse and require integer mode.
WeightedInstance parse_weighted_instance(std::string_view text);
/// Parse and require modular mode.
ModularInstance parse_modular_instance(std::string_view text);

std::string format_instance(const WeightedInstance& inst);
std::string format_instance(const ModularInstance& inst);

/// Read a whole file; throws `Error(InvalidInput)` when it cannot be opened.
std::string read_text_file(const std::string& path);

}  // namespace wcount

#endif
