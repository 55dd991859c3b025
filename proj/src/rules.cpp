#include "heptaca/rules.hpp"

#include <fstream>
#include <sstream>

namespace heptaca {

const char* group_name(RuleGroup g) {
    switch (g) {
        case RuleGroup::tracks: return "tracks";
        case RuleGroup::crossings: return "crossings";
        case RuleGroup::fixed_switch: return "fixed_switch";
        case RuleGroup::passive_memory: return "passive_memory";
        case RuleGroup::killer: return "killer";
        case RuleGroup::fork: return "fork";
    }
    return "?";
}

std::optional<RuleGroup> group_from_name(const std::string& name) {
    for (RuleGroup g : kRuleGroups)
        if (name == group_name(g)) return g;
    return std::nullopt;
}

namespace {

std::uint16_t pack(const Neighbourhood& n) {
    std::uint16_t v = 0;
    for (State s : n) v = std::uint16_t((v << 2) | std::uint16_t(s));
    return v;
}

}  // namespace

CanonicalKey canonical_key(State current, const Neighbourhood& nbhd) {
    Neighbourhood rot = nbhd;
    std::uint16_t best = pack(rot);
    for (int k = 1; k < 7; ++k) {
        State head = rot[0];
        for (int i = 0; i < 6; ++i) rot[std::size_t(i)] = rot[std::size_t(i + 1)];
        rot[6] = head;
        best = std::min(best, pack(rot));
    }
    return (CanonicalKey(current) << 14) | best;
}

ParsedRule parse_rule_line(const std::string& line, int line_no) {
    ParsedRule out{};
    std::array<State, 9> letters{};
    int count = 0;
    for (std::size_t i = 0; i < line.size(); ++i) {
        char c = line[i];
        if (c == ' ' || c == '\t' || c == '\r') continue;
        auto s = state_from_char(c);
        if (!s)
            throw RuleParseError("unknown state letter '" + std::string(1, c) + "'", line_no, int(i) + 1);
        if (count == 9)
            throw RuleParseError("rule line has more than 9 state letters", line_no, int(i) + 1);
        letters[std::size_t(count++)] = *s;
    }
    if (count != 9)
        throw RuleParseError("rule line has " + std::to_string(count) + " state letters, expected 9",
                             line_no, int(line.size()));
    out.current = letters[0];
    for (int i = 0; i < 7; ++i) out.nbhd[std::size_t(i)] = letters[std::size_t(1 + i)];
    out.next = letters[8];
    return out;
}

RuleTable RuleTable::load(std::istream& in) {
    RuleTable t;
    std::string line;
    int line_no = 0;
    int next_section = 0;  // index into kRuleGroups that must come next
    std::optional<RuleGroup> current_group;
    while (std::getline(in, line)) {
        ++line_no;
        std::string trimmed = line;
        if (auto h = trimmed.find('#'); h != std::string::npos) trimmed.erase(h);
        while (!trimmed.empty() && (trimmed.back() == ' ' || trimmed.back() == '\r' || trimmed.back() == '\t'))
            trimmed.pop_back();
        std::size_t start = trimmed.find_first_not_of(" \t");
        if (start == std::string::npos) continue;
        trimmed.erase(0, start);

        if (trimmed.front() == '[') {
            if (trimmed.back() != ']' || trimmed.rfind("[group:", 0) != 0)
                throw RuleParseError("malformed section header: " + trimmed, line_no, 1);
            std::string name = trimmed.substr(7, trimmed.size() - 8);
            auto g = group_from_name(name);
            if (!g) throw RuleParseError("unknown rule group: " + name, line_no, 1);
            if (next_section >= int(kRuleGroups.size()) || *g != kRuleGroups[std::size_t(next_section)])
                throw RuleParseError("rule group '" + name + "' out of order", line_no, 1);
            ++next_section;
            current_group = *g;
            continue;
        }
        if (!current_group)
            throw RuleParseError("rule line before any [group:...] header", line_no, 1);
        ParsedRule p = parse_rule_line(trimmed, line_no);
        Rule r;
        r.id = int(t.rules_.size()) + 1;
        r.current = p.current;
        r.nbhd = p.nbhd;
        r.next = p.next;
        r.group = *current_group;
        t.rules_.push_back(r);
        ++t.group_count_[std::size_t(*current_group)];

        CanonicalKey key = canonical_key(r.current, r.nbhd);
        auto [it, inserted] = t.index_.try_emplace(key, r.next, r.id);
        if (!inserted && it->second.first != r.next) {
            std::ostringstream msg;
            msg << "conflicting rules " << it->second.second << " and " << r.id
                << ": same neighbourhood up to rotation (key " << to_char(r.current) << "|"
                << to_string(r.nbhd) << ") but different new states";
            throw RuleConflictError(msg.str(), it->second.second, r.id);
        }
    }
    if (next_section != int(kRuleGroups.size()))
        throw RuleParseError("missing rule group section(s); expected all six groups", line_no, 1);
    return t;
}

RuleTable RuleTable::load_string(const std::string& text) {
    std::istringstream in(text);
    return load(in);
}

RuleTable RuleTable::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open rule file: " + path);
    return load(in);
}

namespace {

// Rule ids referenced by the prose accompanying the tables, with the group
// the context implies. 168 is quoted as "already used by the passive memory
// switch" while discussing the killer, so passive_memory is what the prose
// expects its home group to be.
struct Citation {
    int id;
    RuleGroup expected;
};

constexpr Citation kCitations[] = {
    {7, RuleGroup::tracks},    {8, RuleGroup::tracks},    {9, RuleGroup::tracks},
    {10, RuleGroup::tracks},   {11, RuleGroup::tracks},   {21, RuleGroup::tracks},
    {22, RuleGroup::tracks},   {85, RuleGroup::crossings},
    {150, RuleGroup::passive_memory}, {152, RuleGroup::passive_memory},
    {156, RuleGroup::passive_memory}, {157, RuleGroup::passive_memory},
    {167, RuleGroup::passive_memory}, {168, RuleGroup::passive_memory},
    {176, RuleGroup::passive_memory}, {189, RuleGroup::passive_memory},
    {195, RuleGroup::passive_memory}, {204, RuleGroup::passive_memory},
    {205, RuleGroup::passive_memory},
    {217, RuleGroup::killer},  {218, RuleGroup::killer},  {219, RuleGroup::killer},
    {220, RuleGroup::killer},  {221, RuleGroup::killer},  {222, RuleGroup::killer},
    {223, RuleGroup::killer},  {236, RuleGroup::killer},  {243, RuleGroup::killer},
    {267, RuleGroup::fork},    {277, RuleGroup::fork},    {279, RuleGroup::fork},
    {281, RuleGroup::fork},    {283, RuleGroup::fork},
};

}  // namespace

AuditReport audit_cross_references(const RuleTable& table) {
    AuditReport report;
    for (const Citation& c : kCitations) {
        AuditEntry e{};
        e.id = c.id;
        e.expected = c.expected;
        e.actual = table.rule(c.id).group;
        e.consistent = (e.actual == e.expected);
        if (!e.consistent) ++report.flagged;
        report.entries.push_back(e);
    }
    return report;
}

std::string AuditReport::to_text() const {
    std::ostringstream os;
    for (const AuditEntry& e : entries) {
        os << "rule " << e.id << " group=" << group_name(e.actual)
           << " expected=" << group_name(e.expected) << " "
           << (e.consistent ? "consistent" : "FLAGGED") << "\n";
    }
    os << "flagged " << flagged << "\n";
    return os.str();
}

}  // namespace heptaca
