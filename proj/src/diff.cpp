#include "defeasor/diff.hpp"

#include <algorithm>
#include <iomanip>
#include <set>
#include <sstream>

#include "defeasor/horty.hpp"
#include "json.hpp"

namespace defeasor {

DiffReport diff_semantics(const RuleBase& rb, int height_cap) {
  const auto f = compile(rb, height_cap);
  const auto horty = horty_evaluate(rb, height_cap);
  const auto grounded = evaluate(f, SemanticsKind::Grounded);
  const auto preferred = evaluate(f, SemanticsKind::Preferred);
  const auto stable = evaluate(f, SemanticsKind::Stable);

  DiffReport report;
  report.floating = detect_floating_conclusions(f, SemanticsKind::Preferred);
  report.zombies = detect_zombies(f, SemanticsKind::Preferred);
  report.no_stable_extension = stable.no_stable_extension;

  std::set<Literal> literals(rb.queries.begin(), rb.queries.end());
  for (const auto& c : concluded(f)) {
    if (const auto* l = std::get_if<Literal>(&c)) literals.insert(*l);
  }
  for (const auto& lit : literals) {
    DiffRow row;
    row.literal = lit;
    row.grounded = conclusion_status(f, grounded, lit);
    row.preferred = conclusion_status(f, preferred, lit);
    row.stable = conclusion_status(f, stable, lit);
    row.horty = horty.conclusions.count(lit) > 0;
    row.floating = std::find(report.floating.begin(), report.floating.end(), Conclusion{lit}) != report.floating.end();
    const bool g = row.grounded == Status::Justified;
    row.agree = g == (row.preferred == Status::Justified) && g == (row.stable == Status::Justified) && g == row.horty;
    report.rows.push_back(row);
  }
  return report;
}

std::string render_text(const DiffReport& report) {
  std::size_t width = 7;
  for (const auto& r : report.rows) width = std::max(width, r.literal.str().size());
  std::ostringstream out;
  out << std::left << std::setw(static_cast<int>(width) + 2) << "literal" << std::setw(12) << "grounded"
      << std::setw(12) << "preferred" << std::setw(12) << "stable" << std::setw(7) << "horty" << std::setw(10)
      << "floating" << "agree\n";
  for (const auto& r : report.rows) {
    out << std::left << std::setw(static_cast<int>(width) + 2) << r.literal.str() << std::setw(12)
        << to_string(r.grounded) << std::setw(12) << to_string(r.preferred) << std::setw(12) << to_string(r.stable)
        << std::setw(7) << (r.horty ? "true" : "false") << std::setw(10) << (r.floating ? "yes" : "-")
        << (r.agree ? "yes" : "no") << "\n";
  }
  out << "floating (preferred):";
  if (report.floating.empty()) out << " none";
  for (const auto& c : report.floating) out << ' ' << to_string(c);
  out << "\nzombies (preferred):";
  if (report.zombies.empty()) out << " none";
  for (const auto& z : report.zombies) out << " (" << z.zombie << ", " << z.victim << ")";
  out << "\n";
  if (report.no_stable_extension) out << "note: no stable extension\n";
  return out.str();
}

std::string render_json(const DiffReport& report) {
  nlohmann::ordered_json j;
  j["rows"] = nlohmann::ordered_json::array();
  for (const auto& r : report.rows) {
    j["rows"].push_back({{"literal", r.literal.str()},
                         {"grounded", to_string(r.grounded)},
                         {"preferred", to_string(r.preferred)},
                         {"stable", to_string(r.stable)},
                         {"horty", r.horty},
                         {"floating", r.floating},
                         {"agree", r.agree}});
  }
  j["floating"] = nlohmann::ordered_json::array();
  for (const auto& c : report.floating) j["floating"].push_back(to_string(c));
  j["zombies"] = nlohmann::ordered_json::array();
  for (const auto& z : report.zombies) j["zombies"].push_back({z.zombie, z.victim});
  j["no_stable_extension"] = report.no_stable_extension;
  return j.dump(2) + "\n";
}

}  // namespace defeasor
