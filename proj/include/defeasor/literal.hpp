#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <variant>

namespace defeasor {

/// A propositional literal: an atom, optionally negated (`~atom`).
struct Literal {
  std::string atom;
  bool negated = false;

  Literal complement() const { return Literal{atom, !negated}; }
  std::string str() const { return negated ? "~" + atom : atom; }

  auto operator<=>(const Literal&) const = default;
  bool operator==(const Literal&) const = default;
};

/// The claim made by an undercutter: the named defeasible rule does not apply.
struct UndercutTarget {
  std::string rule;

  std::string str() const { return "!" + rule; }

  auto operator<=>(const UndercutTarget&) const = default;
  bool operator==(const UndercutTarget&) const = default;
};

/// What an argument concludes. Literals order before undercut claims.
using Conclusion = std::variant<Literal, UndercutTarget>;

std::string to_string(const Conclusion& c);

bool is_identifier(std::string_view s);

/// Parses `atom` or `~atom`. Throws InputError on anything else.
Literal parse_literal(std::string_view text);

/// Parses a literal or an undercut claim `!rule`.
Conclusion parse_conclusion(std::string_view text);

/// Complementary literals conflict; undercut claims have no complement.
bool complementary(const Conclusion& a, const Conclusion& b);

}  // namespace defeasor
