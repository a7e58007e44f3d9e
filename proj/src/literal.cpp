#include "defeasor/literal.hpp"

#include <cctype>

#include "defeasor/errors.hpp"

namespace defeasor {

std::string to_string(const Conclusion& c) {
  return std::visit([](const auto& v) { return v.str(); }, c);
}

bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  auto head = static_cast<unsigned char>(s.front());
  if (!std::isalpha(head) && head != '_') return false;
  for (char ch : s) {
    auto u = static_cast<unsigned char>(ch);
    if (!std::isalnum(u) && u != '_') return false;
  }
  return true;
}

Literal parse_literal(std::string_view text) {
  bool negated = false;
  if (!text.empty() && text.front() == '~') {
    negated = true;
    text.remove_prefix(1);
  }
  if (!is_identifier(text)) {
    throw InputError("invalid literal '" + std::string(negated ? "~" : "") + std::string(text) + "'");
  }
  return Literal{std::string(text), negated};
}

Conclusion parse_conclusion(std::string_view text) {
  if (!text.empty() && text.front() == '!') {
    text.remove_prefix(1);
    if (!is_identifier(text)) throw InputError("invalid undercut target '!" + std::string(text) + "'");
    return UndercutTarget{std::string(text)};
  }
  return parse_literal(text);
}

bool complementary(const Conclusion& a, const Conclusion& b) {
  const auto* la = std::get_if<Literal>(&a);
  const auto* lb = std::get_if<Literal>(&b);
  return la && lb && la->atom == lb->atom && la->negated != lb->negated;
}

}  // namespace defeasor
