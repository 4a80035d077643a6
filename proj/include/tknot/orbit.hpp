#pragma once

#include "tknot/braid.hpp"
#include "tknot/factor.hpp"
#include "tknot/laurent.hpp"
#include "tknot/template.hpp"

namespace tknot {

// A primitive periodic orbit of the semi-flow as a cyclic band word, stored
// as the lexicographically least rotation under band declaration order.
class OrbitWord {
  public:
    OrbitWord() = default;
    // Validates adjacency (cyclically) and primitivity, then canonicalizes.
    OrbitWord(const Template& t, std::vector<int> bands);

    int period() const { return static_cast<int>(bands_.size()); }
    const std::vector<int>& bands() const { return bands_; }
    // Band ids joined by ".".
    std::string str(const Template& t) const;

    bool operator==(const OrbitWord&) const = default;

  private:
    std::vector<int> bands_;
};

struct OrbitRecord {
    OrbitWord orbit;
    BraidWord braid;
    int crossings = 0;
    int genus = 0;
    int factor_count = 0;
    std::vector<BraidWord> factors;
    LaurentPoly alexander_poly;
};

// All primitive adjacency-valid cyclic words of period <= max_period, one
// representative per rotation class, sorted by (period, canonical word).
std::vector<OrbitWord> enumerate_orbits(const Template& t, int max_period);

// The positive braid of a closed orbit, on one strand per rotation of the
// word: top cross-section sorted by (branch line, output slot, itinerary),
// then band-strip crossings, then half twists per band, then one positive
// shuffle per branch line merging arrivals back into itinerary order.
BraidWord orbit_braid(const Template& t, const OrbitWord& w);
// Same construction from an arbitrary rotation of the cyclic word.
BraidWord orbit_braid_cyclic(const Template& t, const std::vector<int>& bands);

struct CensusOptions {
    int jobs = 1;
    // Also verify Alexander multiplicativity across each record's
    // factorization (always exact; costs one polynomial per factor).
    bool check_multiplicativity = true;
};

struct CensusResult {
    std::vector<OrbitRecord> records;
    int max_factor_count = 0;
    TemplateStats stats;
};

// One record per enumerated orbit in deterministic (period, word) order,
// independent of the number of worker threads. Verifies the trace formula
// for every period <= max_period and the per-orbit invariants; any failure
// throws internal_error naming the offending orbit.
CensusResult census(const Template& t, int max_period, CensusOptions opts = {});

// Trace of the p-th power of the band transition matrix.
bigint transition_trace(const Template& t, int power);

}  // namespace tknot
