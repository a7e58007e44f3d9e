#pragma once

#include <string>
#include <string_view>

#include "defeasor/framework.hpp"

namespace defeasor {

// Framework text format, one statement per line, `#` starts a comment:
//
//   arg(NAME).  att(A,B).  sub(CHILD,PARENT).  conc(NAME, LITERAL).
//
// NAME is an identifier, possibly carrying the bracketed derivation syntax of
// compiled arguments (`r1[bird]`, `r2[a;b]`, `~p`). LITERAL is `atom`,
// `~atom` or an undercut claim `!rule`.

bool is_arg_name(std::string_view s);

/// Throws ParseError carrying the offending line number.
FrameworkSpec parse_framework_spec(std::string_view text);

/// Parse and build; semantic errors (unknown names, cycles) are reported as
/// ParseError on the first offending line where that can be attributed.
Framework parse_framework(std::string_view text);

/// Statements grouped as arg, att, sub, conc; declaration order is kept
/// within each group.
std::string serialize_framework(const FrameworkSpec& spec);
std::string serialize_framework(const Framework& f);

}  // namespace defeasor
