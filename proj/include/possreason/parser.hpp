#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "possreason/kb.hpp"

namespace possreason {

/// Parse the line-oriented knowledge-base DSL. Errors carry line and column.
///
///     universe Bool = { true, false }
///     var alive@2 : Bool
///     fact F1: alive@2 is {true}
///     default D2: if alive@2 is {true} then alive@3 is {true}
///     default T: typically v is {a/1, b/0.3}
///     query alive@3
///     option threshold = 0.9
KnowledgeBase parse_kb(std::string_view text);
KnowledgeBase parse_kb_file(const std::string& path);

/// Transcribed examples: nixon, nixon-quaker-only, nixon-republican-only, nixon-both, yale.
KnowledgeBase builtin(std::string_view name);
std::string_view builtin_source(std::string_view name);
std::vector<std::string> builtin_names();

}  // namespace possreason
