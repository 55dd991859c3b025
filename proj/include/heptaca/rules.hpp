#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "heptaca/state.hpp"

namespace heptaca {

enum class RuleGroup : std::uint8_t { tracks, crossings, fixed_switch, passive_memory, killer, fork };

inline constexpr std::array<RuleGroup, 6> kRuleGroups = {
    RuleGroup::tracks,      RuleGroup::crossings, RuleGroup::fixed_switch,
    RuleGroup::passive_memory, RuleGroup::killer, RuleGroup::fork};

const char* group_name(RuleGroup g);
std::optional<RuleGroup> group_from_name(const std::string& name);

// One rewriting rule: the current state, the 7 neighbour states in cyclic
// order as written, and the new state. Ids are global and sequential in
// file order (tracks first, fork last), starting at 1.
struct Rule {
    int id = 0;
    State current = State::W;
    Neighbourhood nbhd{};
    State next = State::W;
    RuleGroup group = RuleGroup::tracks;
};

struct RuleParseError : std::runtime_error {
    int line = 0;
    int column = 0;
    RuleParseError(std::string msg, int line_, int col)
        : std::runtime_error(std::move(msg)), line(line_), column(col) {}
};

// Two rules whose neighbourhoods coincide up to rotation but disagree on
// the new state.
struct RuleConflictError : std::runtime_error {
    int first_id = 0;
    int second_id = 0;
    RuleConflictError(std::string msg, int a, int b)
        : std::runtime_error(std::move(msg)), first_id(a), second_id(b) {}
};

// 16-bit packed neighbourhood (nbhd[0] in the high bits so that integer
// order equals lexicographic order under W < B < R), plus the current state.
using CanonicalKey = std::uint32_t;

// Lexicographically minimal rotation of the neighbourhood, letter order
// W < B < R; all 7 rotations of the same cycle yield the same key.
CanonicalKey canonical_key(State current, const Neighbourhood& nbhd);

// Decodes a 9-letter rule line (letters may be space separated or
// contiguous). Column numbers in errors are 1-based byte offsets.
struct ParsedRule {
    State current;
    Neighbourhood nbhd;
    State next;
};
ParsedRule parse_rule_line(const std::string& line, int line_no = 0);

struct LookupResult {
    State next;
    int rule_id;
};

// The full rule set with a rotation-invariant index. Immutable once loaded;
// concurrent lookups are safe.
class RuleTable {
  public:
    static RuleTable load(std::istream& in);
    static RuleTable load_string(const std::string& text);
    static RuleTable load_file(const std::string& path);

    const std::vector<Rule>& rules() const { return rules_; }
    const Rule& rule(int id) const { return rules_.at(std::size_t(id - 1)); }
    int group_count(RuleGroup g) const { return group_count_[std::size_t(g)]; }
    int total() const { return int(rules_.size()); }

    // Missing (no matching rule up to rotation) is reported as nullopt.
    std::optional<LookupResult> lookup(State current, const Neighbourhood& nbhd) const {
        auto it = index_.find(canonical_key(current, nbhd));
        if (it == index_.end()) return std::nullopt;
        return LookupResult{it->second.first, it->second.second};
    }

  private:
    std::vector<Rule> rules_;
    std::array<int, 6> group_count_{};
    std::unordered_map<CanonicalKey, std::pair<State, int>> index_;
};

// Consistency report between rule ids cited in accompanying prose and the
// group a rule actually landed in after numbering. Inconsistencies are
// reported, never corrected.
struct AuditEntry {
    int id;
    RuleGroup actual;
    RuleGroup expected;
    bool consistent;
};

struct AuditReport {
    std::vector<AuditEntry> entries;
    int flagged = 0;
    std::string to_text() const;
};

AuditReport audit_cross_references(const RuleTable& table);

}  // namespace heptaca
