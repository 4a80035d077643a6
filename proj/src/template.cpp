#include "tknot/template.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

namespace tknot {

const std::vector<int>& Template::successors(int band) const {
    return branch_lines_[bands_[band].target_line].output_bands;
}

std::vector<int> Template::transition_matrix() const {
    const int b = static_cast<int>(bands_.size());
    std::vector<int> a(static_cast<size_t>(b) * b, 0);
    for (int i = 0; i < b; ++i)
        for (int j : successors(i)) a[i * b + j] = 1;
    return a;
}

namespace {

struct RawBand {
    std::string id;
    std::string from_line;
    int from_slot;
    std::string to_line;
    int to_slot;
    int twists;
    int line_number;
};

int parse_nonneg(const std::string& token, const char* what, int line) {
    int value = 0;
    auto [ptr, ec] =
        std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size() || value < 0)
        throw parse_error(std::string("expected a nonnegative integer ") +
                              what + ", got '" + token + "'",
                          line);
    return value;
}

// Splits "bl[3]" into the branch-line id and slot index.
std::pair<std::string, int> parse_slot_ref(const std::string& token, int line) {
    auto open = token.find('[');
    if (open == std::string::npos || token.back() != ']' || open == 0)
        throw parse_error("expected <branchline>[<slot>], got '" + token + "'",
                          line);
    std::string id = token.substr(0, open);
    std::string slot = token.substr(open + 1, token.size() - open - 2);
    return {id, parse_nonneg(slot, "slot index", line)};
}

}  // namespace

Template parse_template(const std::string& text) {
    Template t;
    std::vector<RawBand> raw_bands;
    std::vector<std::pair<int, int>> raw_crossings;  // (pos, line)
    std::map<std::string, int> line_index;
    std::map<std::string, int> band_index;
    bool saw_template = false;

    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.resize(hash);
        std::istringstream ls(line);
        std::vector<std::string> tok;
        for (std::string w; ls >> w;) tok.push_back(w);
        if (tok.empty()) continue;

        if (tok[0] == "template") {
            if (saw_template)
                throw parse_error("duplicate template line", line_no);
            if (tok.size() != 2)
                throw parse_error("usage: template <name>", line_no);
            t.name_ = tok[1];
            saw_template = true;
            continue;
        }
        if (!saw_template)
            throw parse_error("file must start with a template line", line_no);

        if (tok[0] == "branchline") {
            if (tok.size() != 2)
                throw parse_error("usage: branchline <id>", line_no);
            if (line_index.count(tok[1]))
                throw parse_error("duplicate branchline '" + tok[1] + "'",
                                  line_no);
            line_index[tok[1]] = static_cast<int>(t.branch_lines_.size());
            t.branch_lines_.push_back({tok[1], {}, {}});
        } else if (tok[0] == "band") {
            if (tok.size() != 8 || tok[2] != "from" || tok[4] != "to" ||
                tok[6] != "twists")
                throw parse_error(
                    "usage: band <id> from <bl>[<out>] to <bl>[<in>] twists <t>",
                    line_no);
            if (band_index.count(tok[1]))
                throw parse_error("duplicate band '" + tok[1] + "'", line_no);
            auto [from_line, from_slot] = parse_slot_ref(tok[3], line_no);
            auto [to_line, to_slot] = parse_slot_ref(tok[5], line_no);
            int twists = parse_nonneg(tok[7], "twist count", line_no);
            band_index[tok[1]] = static_cast<int>(raw_bands.size());
            raw_bands.push_back({tok[1], from_line, from_slot, to_line, to_slot,
                                 twists, line_no});
        } else if (tok[0] == "cross") {
            if (tok.size() != 2)
                throw parse_error("usage: cross <pos>", line_no);
            raw_crossings.emplace_back(
                parse_nonneg(tok[1], "strip position", line_no), line_no);
        } else {
            throw parse_error("unknown directive '" + tok[0] + "'", line_no);
        }
    }

    if (!saw_template) throw parse_error("empty template file");
    if (t.branch_lines_.empty())
        throw parse_error("template has no branch lines");
    if (raw_bands.empty()) throw parse_error("template has no bands");

    // Resolve bands and slot tables.
    std::vector<std::vector<int>> out_slots(t.branch_lines_.size());
    std::vector<std::vector<int>> in_slots(t.branch_lines_.size());
    for (const auto& rb : raw_bands) {
        Band band;
        band.id = rb.id;
        band.twists = rb.twists;
        auto source = line_index.find(rb.from_line);
        if (source == line_index.end())
            throw parse_error("unknown branchline '" + rb.from_line + "'",
                              rb.line_number);
        auto target = line_index.find(rb.to_line);
        if (target == line_index.end())
            throw parse_error("unknown branchline '" + rb.to_line + "'",
                              rb.line_number);
        band.source_line = source->second;
        band.source_slot = rb.from_slot;
        band.target_line = target->second;
        band.target_slot = rb.to_slot;

        int idx = static_cast<int>(t.bands_.size());
        auto place = [&](std::vector<int>& slots, int slot, const char* kind) {
            if (slot >= static_cast<int>(slots.size()))
                slots.resize(slot + 1, -1);
            if (slots[slot] != -1)
                throw parse_error("doubly-assigned " + std::string(kind) +
                                      " slot " + std::to_string(slot) + " on '" +
                                      (kind[0] == 'o' ? rb.from_line : rb.to_line) +
                                      "'",
                                  rb.line_number);
            slots[slot] = idx;
        };
        place(out_slots[band.source_line], band.source_slot, "output");
        place(in_slots[band.target_line], band.target_slot, "input");
        t.bands_.push_back(std::move(band));
    }

    for (size_t i = 0; i < t.branch_lines_.size(); ++i) {
        auto check_full = [&](const std::vector<int>& slots, const char* kind) {
            if (slots.empty())
                throw parse_error("branchline '" + t.branch_lines_[i].id +
                                  "' has no " + kind + " slots");
            for (size_t s = 0; s < slots.size(); ++s)
                if (slots[s] == -1)
                    throw parse_error("unassigned " + std::string(kind) +
                                      " slot " + std::to_string(s) + " on '" +
                                      t.branch_lines_[i].id + "'");
        };
        check_full(out_slots[i], "output");
        check_full(in_slots[i], "input");
        t.branch_lines_[i].output_bands = out_slots[i];
        t.branch_lines_[i].input_bands = in_slots[i];
    }

    // Connectivity over the template graph (vertices = branch lines).
    {
        std::vector<char> seen(t.branch_lines_.size(), 0);
        std::vector<int> stack = {0};
        seen[0] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (const auto& band : t.bands_) {
                for (int w : {band.source_line, band.target_line}) {
                    if ((band.source_line == v || band.target_line == v) &&
                        !seen[w]) {
                        seen[w] = 1;
                        stack.push_back(w);
                    }
                }
            }
        }
        for (size_t i = 0; i < seen.size(); ++i)
            if (!seen[i])
                throw parse_error("template is disconnected: branchline '" +
                                  t.branch_lines_[i].id + "' unreachable");
    }

    // Strip orders and the crossing-word permutation check.
    for (const auto& bl : t.branch_lines_)
        t.top_order_.insert(t.top_order_.end(), bl.output_bands.begin(),
                            bl.output_bands.end());
    for (const auto& bl : t.branch_lines_)
        t.bottom_order_.insert(t.bottom_order_.end(), bl.input_bands.begin(),
                               bl.input_bands.end());

    const int strips = static_cast<int>(t.bands_.size());
    std::vector<int> order = t.top_order_;
    for (auto [pos, cross_line] : raw_crossings) {
        if (pos < 1 || pos >= strips)
            throw parse_error("cross position " + std::to_string(pos) +
                                  " out of range [1, " +
                                  std::to_string(strips - 1) + "]",
                              cross_line);
        std::swap(order[pos - 1], order[pos]);
        t.crossing_word_.push_back(pos);
    }
    if (order != t.bottom_order_)
        throw parse_error(
            "crossing word does not map the top strip order to the bottom "
            "strip order");

    // J = S is the structural identity sum(m-1) = sum(s-1) = B - V.
    TKNOT_CHECK([&] {
        int joins = 0, splits = 0;
        for (const auto& bl : t.branch_lines_) {
            joins += static_cast<int>(bl.input_bands.size()) - 1;
            splits += static_cast<int>(bl.output_bands.size()) - 1;
        }
        int bv = static_cast<int>(t.bands_.size()) -
                 static_cast<int>(t.branch_lines_.size());
        return joins == splits && joins == bv;
    }());

    return t;
}

std::string preset_source(const std::string& name) {
    if (name == "lorenz")
        return "template lorenz\n"
               "branchline b\n"
               "band x from b[0] to b[0] twists 0\n"
               "band y from b[1] to b[1] twists 0\n";
    if (name == "annulus")
        return "template annulus\n"
               "branchline b\n"
               "band a from b[0] to b[0] twists 0\n";
    throw parse_error("unknown preset '" + name +
                      "' (available: lorenz, annulus)");
}

Template load_template(const std::string& path_or_preset) {
    if (path_or_preset.rfind("preset:", 0) == 0)
        return parse_template(preset_source(path_or_preset.substr(7)));
    std::ifstream in(path_or_preset);
    if (!in)
        throw parse_error("cannot open template file '" + path_or_preset + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_template(buf.str());
}

TemplateStats template_stats(const Template& t) {
    TemplateStats stats;
    stats.branch_lines = static_cast<int>(t.branch_lines().size());
    stats.bands = static_cast<int>(t.bands().size());
    for (const auto& bl : t.branch_lines()) {
        stats.joining_charts += static_cast<int>(bl.input_bands.size()) - 1;
        stats.splitting_charts += static_cast<int>(bl.output_bands.size()) - 1;
    }
    TKNOT_CHECK(stats.joining_charts == stats.splitting_charts);
    TKNOT_CHECK(stats.joining_charts == stats.bands - stats.branch_lines);
    stats.betti1 = stats.bands - stats.branch_lines + 1;

    // N = 1 + betti1 + J(1+(2J)!)(2J(1+(2J)!)-1), exact; (2J)! forces
    // arbitrary precision from J = 11 on.
    const int joins = stats.joining_charts;
    bigint factorial = 1;
    for (int i = 2; i <= 2 * joins; ++i) factorial *= i;
    bigint grown = 1 + factorial;
    stats.bound = 1 + stats.betti1 + joins * grown * (2 * joins * grown - 1);
    return stats;
}

}  // namespace tknot
