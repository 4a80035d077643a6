#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "tknot/errors.hpp"

namespace tknot {

using bigint = boost::multiprecision::cpp_int;

// A branch line of a braided template. Slot lists hold band indices; slot
// order is left to right in the planar layout.
struct BranchLine {
    std::string id;
    std::vector<int> input_bands;   // by input slot
    std::vector<int> output_bands;  // by output slot
};

// A band connecting a branch-line output slot to a branch-line input slot,
// carrying a nonnegative count of positive half twists. Positivity is
// structural: there is no sign field anywhere in the model.
struct Band {
    std::string id;
    int source_line = -1;
    int source_slot = -1;
    int target_line = -1;
    int target_slot = -1;
    int twists = 0;
};

// A positive braided template: branch lines in declaration (left-to-right)
// order, bands, and the band-strip crossing word read top to bottom.
// Validated and immutable after parse_template.
class Template {
  public:
    const std::string& name() const { return name_; }
    const std::vector<BranchLine>& branch_lines() const { return branch_lines_; }
    const std::vector<Band>& bands() const { return bands_; }
    const std::vector<int>& crossing_word() const { return crossing_word_; }

    // Band indices in top cross-section strip order: concatenated output
    // slots in branch-line order.
    const std::vector<int>& top_strip_order() const { return top_order_; }
    // Band indices in bottom cross-section strip order: concatenated input
    // slots in branch-line order.
    const std::vector<int>& bottom_strip_order() const { return bottom_order_; }

    // Output bands of the branch line the given band flows into, in slot
    // order: the alphabet-transition relation of the symbolic dynamics.
    const std::vector<int>& successors(int band) const;

    // 0/1 band transition matrix, row-major.
    std::vector<int> transition_matrix() const;

    friend Template parse_template(const std::string& text);

  private:
    std::string name_;
    std::vector<BranchLine> branch_lines_;
    std::vector<Band> bands_;
    std::vector<int> crossing_word_;
    std::vector<int> top_order_;
    std::vector<int> bottom_order_;
};

struct TemplateStats {
    int joining_charts = 0;    // J
    int splitting_charts = 0;  // S, always equal to J
    int bands = 0;             // B
    int branch_lines = 0;      // V
    int betti1 = 0;            // dim H_1 = B - V + 1
    bigint bound;              // N = 1 + betti1 + J(1+(2J)!)(2J(1+(2J)!)-1)
};

// Parses and fully validates the line-oriented template grammar:
//   template <name>
//   branchline <id>
//   band <id> from <bl>[<outslot>] to <bl>[<inslot>] twists <t>
//   cross <pos>
// '#' starts a comment; blank lines are ignored. Slots are 0-based per
// branch line; cross positions are 1-based strip gaps.
Template parse_template(const std::string& text);

// Reads a template from a file path, or from a built-in preset when the
// argument is "preset:lorenz" or "preset:annulus".
Template load_template(const std::string& path_or_preset);

// Source text of a built-in preset ("lorenz" or "annulus").
std::string preset_source(const std::string& name);

TemplateStats template_stats(const Template& t);

}  // namespace tknot
