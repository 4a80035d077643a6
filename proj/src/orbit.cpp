#include "tknot/orbit.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <numeric>
#include <thread>

#include "tknot/alexander.hpp"

namespace tknot {

namespace {

bool valid_step(const Template& t, int from, int to) {
    return t.bands()[to].source_line == t.bands()[from].target_line;
}

bool is_primitive(const std::vector<int>& w) {
    const int p = static_cast<int>(w.size());
    for (int d = 1; d < p; ++d) {
        if (p % d != 0) continue;
        bool equal = true;
        for (int i = 0; i < p && equal; ++i) equal = w[i] == w[(i + d) % p];
        if (equal) return false;
    }
    return true;
}

std::vector<int> least_rotation(const std::vector<int>& w) {
    const int p = static_cast<int>(w.size());
    int best = 0;
    for (int i = 1; i < p; ++i) {
        for (int k = 0; k < p; ++k) {
            int a = w[(i + k) % p];
            int b = w[(best + k) % p];
            if (a != b) {
                if (a < b) best = i;
                break;
            }
        }
    }
    std::vector<int> out(p);
    for (int k = 0; k < p; ++k) out[k] = w[(best + k) % p];
    return out;
}

}  // namespace

OrbitWord::OrbitWord(const Template& t, std::vector<int> bands) {
    TKNOT_CHECK(!bands.empty());
    const int p = static_cast<int>(bands.size());
    for (int i = 0; i < p; ++i) {
        TKNOT_CHECK(bands[i] >= 0 &&
                    bands[i] < static_cast<int>(t.bands().size()));
        TKNOT_CHECK(valid_step(t, bands[i], bands[(i + 1) % p]));
    }
    TKNOT_CHECK(is_primitive(bands));
    bands_ = least_rotation(bands);
}

std::string OrbitWord::str(const Template& t) const {
    std::string out;
    for (size_t i = 0; i < bands_.size(); ++i) {
        if (i) out += '.';
        out += t.bands()[bands_[i]].id;
    }
    return out;
}

std::vector<OrbitWord> enumerate_orbits(const Template& t, int max_period) {
    TKNOT_CHECK(max_period >= 1);
    std::vector<OrbitWord> orbits;
    const int band_count = static_cast<int>(t.bands().size());
    std::vector<int> path;

    // Depth-first over the transition graph. A canonical (least-rotation)
    // word starts with its minimal band, so any extension below the start
    // band can be pruned.
    auto dfs = [&](auto&& self, int period) -> void {
        if (static_cast<int>(path.size()) == period) {
            if (!valid_step(t, path.back(), path[0])) return;
            if (!is_primitive(path)) return;
            if (least_rotation(path) != path) return;
            orbits.emplace_back(t, path);
            return;
        }
        for (int next : t.successors(path.back())) {
            if (next < path[0]) continue;
            path.push_back(next);
            self(self, period);
            path.pop_back();
        }
    };

    for (int period = 1; period <= max_period; ++period) {
        for (int start = 0; start < band_count; ++start) {
            path = {start};
            dfs(dfs, period);
        }
    }
    std::sort(orbits.begin(), orbits.end(),
              [](const OrbitWord& a, const OrbitWord& b) {
                  if (a.period() != b.period()) return a.period() < b.period();
                  return a.bands() < b.bands();
              });
    return orbits;
}

namespace {

// One pass through the template for a fixed cyclic band word. Strand i is
// the orbit point about to traverse bands[i]; its future itinerary is the
// i-th rotation of the word.
class OrbitBraider {
  public:
    OrbitBraider(const Template& t, const std::vector<int>& bands)
        : t_(t), w_(bands), period_(static_cast<int>(bands.size())) {}

    BraidWord build() {
        if (period_ == 1) return BraidWord(1, {});
        compute_top_order();
        current_ = top_order_;
        int expected = 0;
        expected += stage_band_crossings();
        expected += stage_twists();
        expected += stage_merges();
        // Crossing-count ledger: the three stages account for every letter.
        TKNOT_CHECK(static_cast<int>(letters_.size()) == expected);
        check_closure();
        return BraidWord(period_, std::move(letters_));
    }

  private:
    int band_at(int rotation, int offset) const {
        return w_[(rotation + offset) % period_];
    }

    // Itinerary order of rotations i and j: follow the common future to the
    // first divergence, order by the output slots taken there, and reverse
    // once per half twist traversed strictly before the divergence.
    bool future_less(int i, int j) const {
        int parity = 0;
        for (int k = 0; k < period_; ++k) {
            int bi = band_at(i, k), bj = band_at(j, k);
            if (bi == bj) {
                parity ^= t_.bands()[bi].twists & 1;
                continue;
            }
            const Band& a = t_.bands()[bi];
            const Band& b = t_.bands()[bj];
            TKNOT_CHECK(a.source_line == b.source_line);
            bool less = a.source_slot < b.source_slot;
            return parity ? !less : less;
        }
        throw internal_error("itinerary tie: cyclic word is not primitive");
    }

    void compute_top_order() {
        top_order_.resize(period_);
        std::iota(top_order_.begin(), top_order_.end(), 0);
        std::sort(top_order_.begin(), top_order_.end(), [&](int i, int j) {
            const Band& a = t_.bands()[w_[i]];
            const Band& b = t_.bands()[w_[j]];
            if (a.source_line != b.source_line)
                return a.source_line < b.source_line;
            if (a.source_slot != b.source_slot)
                return a.source_slot < b.source_slot;
            return future_less(i, j);
        });
        strand_count_.assign(t_.bands().size(), 0);
        for (int band : w_) ++strand_count_[band];
    }

    void emit(int letter) {
        TKNOT_CHECK(letter >= 1 && letter < period_);
        letters_.push_back(letter);
        std::swap(current_[letter - 1], current_[letter]);
    }

    int stage_band_crossings() {
        std::vector<int> strips = t_.top_strip_order();
        int emitted = 0;
        for (int pos : t_.crossing_word()) {
            int left = strips[pos - 1], right = strips[pos];
            int a = strand_count_[left], b = strand_count_[right];
            if (a > 0 && b > 0) {
                int base = 0;
                for (int s = 0; s < pos - 1; ++s) base += strand_count_[strips[s]];
                // Left block of a strands passes over the right block of b:
                // the a*b-crossing positive block transposition.
                std::vector<int> images(a + b);
                for (int m = 0; m < a; ++m) images[m] = m + b;
                for (int m = 0; m < b; ++m) images[a + m] = m;
                for (int letter : positive_sort_letters(Permutation(images)))
                    emit(letter + base);
                emitted += a * b;
            }
            std::swap(strips[pos - 1], strips[pos]);
        }
        TKNOT_CHECK(strips == t_.bottom_strip_order());
        return emitted;
    }

    int stage_twists() {
        const auto& strips = t_.bottom_strip_order();
        int emitted = 0;
        for (size_t band = 0; band < t_.bands().size(); ++band) {
            int twists = t_.bands()[band].twists;
            int q = strand_count_[band];
            if (twists == 0 || q < 2) continue;
            int base = 0;
            for (int s : strips) {
                if (s == static_cast<int>(band)) break;
                base += strand_count_[s];
            }
            for (int rep = 0; rep < twists; ++rep)
                for (int letter : half_twist_letters(q)) emit(letter + base);
            emitted += twists * q * (q - 1) / 2;
        }
        return emitted;
    }

    int stage_merges() {
        int emitted = 0;
        int base = 0;
        for (const auto& bl : t_.branch_lines()) {
            int block = 0;
            for (int band : bl.input_bands) block += strand_count_[band];
            if (block > 1) {
                std::vector<int> physical(current_.begin() + base,
                                          current_.begin() + base + block);
                std::vector<int> target = physical;
                std::sort(target.begin(), target.end(), [&](int i, int j) {
                    return future_less((i + 1) % period_, (j + 1) % period_);
                });
                check_shuffle(physical, target);
                std::vector<int> images(block);
                for (int i = 0; i < block; ++i) {
                    auto it = std::find(target.begin(), target.end(), physical[i]);
                    images[i] = static_cast<int>(it - target.begin());
                }
                Permutation perm{std::move(images)};
                for (int letter : positive_sort_letters(perm))
                    emit(letter + base);
                emitted += perm.inversion_count();
            }
            base += block;
        }
        TKNOT_CHECK(base == period_);
        return emitted;
    }

    // The twist crossings already performed every within-band inversion, so
    // each merge must be a shuffle: strands of one input band keep their
    // relative order.
    void check_shuffle(const std::vector<int>& physical,
                       const std::vector<int>& target) const {
        auto band_of = [&](int rotation) { return w_[rotation]; };
        for (int band = 0; band < static_cast<int>(t_.bands().size()); ++band) {
            std::vector<int> before, after;
            for (int r : physical)
                if (band_of(r) == band) before.push_back(r);
            for (int r : target)
                if (band_of(r) == band) after.push_back(r);
            TKNOT_CHECK(before == after);
        }
    }

    void check_closure() const {
        // After one pass strand i has become rotation i+1, so the bottom
        // order re-labeled by the shift must reproduce the top order; the
        // closure permutation is then the p-cycle on rotations.
        for (int pos = 0; pos < period_; ++pos)
            TKNOT_CHECK(top_order_[pos] == (current_[pos] + 1) % period_);
    }

    const Template& t_;
    const std::vector<int>& w_;
    int period_;
    std::vector<int> top_order_;
    std::vector<int> current_;
    std::vector<int> strand_count_;
    std::vector<int> letters_;
};

}  // namespace

BraidWord orbit_braid_cyclic(const Template& t, const std::vector<int>& bands) {
    OrbitWord checked(t, bands);  // validates adjacency and primitivity
    (void)checked;
    return OrbitBraider(t, bands).build();
}

BraidWord orbit_braid(const Template& t, const OrbitWord& w) {
    return OrbitBraider(t, w.bands()).build();
}

bigint transition_trace(const Template& t, int power) {
    const int n = static_cast<int>(t.bands().size());
    auto a01 = t.transition_matrix();
    std::vector<bigint> acc(a01.begin(), a01.end());
    for (int step = 1; step < power; ++step) {
        std::vector<bigint> next(static_cast<size_t>(n) * n);
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k) {
                if (acc[i * n + k] == 0) continue;
                for (int j = 0; j < n; ++j)
                    if (a01[k * n + j]) next[i * n + j] += acc[i * n + k];
            }
        acc = std::move(next);
    }
    bigint trace = 0;
    for (int i = 0; i < n; ++i) trace += acc[i * n + i];
    return trace;
}

namespace {

OrbitRecord make_record(const Template& t, const OrbitWord& orbit,
                        bool check_multiplicativity) {
    OrbitRecord rec;
    rec.orbit = orbit;
    rec.braid = orbit_braid(t, orbit);
    TKNOT_CHECK(rec.braid.strands() == orbit.period());
    auto info = closure_info(rec.braid);
    TKNOT_CHECK(info.is_knot);
    rec.crossings = rec.braid.length();
    rec.genus = genus_positive(rec.braid);
    auto factorization = factorize(rec.braid);
    rec.factor_count = factorization.factor_count();
    rec.factors = std::move(factorization.prime_factors);
    rec.alexander_poly = alexander(rec.braid);
    if (check_multiplicativity) {
        LaurentPoly product = LaurentPoly::one();
        for (const auto& factor : rec.factors)
            product = product * alexander(factor);
        TKNOT_CHECK(product == rec.alexander_poly);
    }
    return rec;
}

}  // namespace

CensusResult census(const Template& t, int max_period, CensusOptions opts) {
    TKNOT_CHECK(max_period >= 1);
    TKNOT_CHECK(opts.jobs >= 1);
    CensusResult result;
    result.stats = template_stats(t);
    auto orbits = enumerate_orbits(t, max_period);

    // Trace formula: sum over d | p of d * (#primitive orbits of period d)
    // equals tr(A^p) for every p up to the budget.
    std::vector<long long> primitive_counts(max_period + 1, 0);
    for (const auto& orbit : orbits) ++primitive_counts[orbit.period()];
    for (int p = 1; p <= max_period; ++p) {
        bigint lhs = 0;
        for (int d = 1; d <= p; ++d)
            if (p % d == 0) lhs += bigint(d) * primitive_counts[d];
        if (lhs != transition_trace(t, p))
            throw internal_error("trace formula violated at period " +
                                 std::to_string(p));
    }

    result.records.resize(orbits.size());
    std::atomic<size_t> cursor{0};
    std::mutex error_mutex;
    std::exception_ptr first_error;

    auto worker = [&] {
        for (;;) {
            size_t i = cursor.fetch_add(1);
            if (i >= orbits.size()) return;
            try {
                result.records[i] =
                    make_record(t, orbits[i], opts.check_multiplicativity);
            } catch (const std::exception& e) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error)
                    first_error = std::make_exception_ptr(
                        internal_error("census failed at orbit " +
                                       orbits[i].str(t) + ": " + e.what()));
                return;
            }
        }
    };

    if (opts.jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int j = 0; j < opts.jobs; ++j) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (first_error) std::rethrow_exception(first_error);

    for (const auto& rec : result.records)
        result.max_factor_count = std::max(result.max_factor_count,
                                           rec.factor_count);
    return result;
}

}  // namespace tknot
