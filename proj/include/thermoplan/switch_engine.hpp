#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace thermoplan {

// Buffer sequences over a small item universe [0, universe). Positions are
// zero-based; the horizon sentinels are therefore `length` ("never excluded")
// and `length + 1` ("never required").

/// Per-position minimum and maximum buffer cardinality.
struct CardProfile {
    std::vector<int> min;
    std::vector<int> max;

    static CardProfile constant(int length, int lo, int hi)
    {
        return {std::vector<int>(length, lo), std::vector<int>(length, hi)};
    }
    int length() const { return static_cast<int>(min.size()); }
};

/// Lower (required) and upper (possible) bounds of a sequence of set
/// variables, stored densely as position-major flags.
class SetVarBounds {
public:
    SetVarBounds() = default;
    /// All positions start with lb = {} and ub = universe.
    SetVarBounds(int length, int universe)
        : length_(length), universe_(universe),
          lower_(static_cast<std::size_t>(length) * universe, 0),
          upper_(static_cast<std::size_t>(length) * universe, 1)
    {
    }

    int length() const { return length_; }
    int universe() const { return universe_; }

    bool required(int pos, int item) const { return lower_[index(pos, item)] != 0; }
    bool possible(int pos, int item) const { return upper_[index(pos, item)] != 0; }

    void set_required(int pos, int item, bool v = true) { lower_[index(pos, item)] = v; }
    void set_possible(int pos, int item, bool v = true) { upper_[index(pos, item)] = v; }

    int required_count(int pos) const;
    int possible_count(int pos) const;

private:
    std::size_t index(int pos, int item) const
    {
        return static_cast<std::size_t>(pos) * universe_ + item;
    }

    int length_ = 0;
    int universe_ = 0;
    std::vector<std::uint8_t> lower_;
    std::vector<std::uint8_t> upper_;
};

/// A maximal interval [start, end] during which `item` stays buffered.
struct Stretch {
    int item = 0;
    int start = 0;
    int end = 0;
    bool optional = false;  // no position of the stretch requires the item

    bool operator==(const Stretch&) const = default;
};

struct SwitchSupport {
    std::vector<std::vector<int>> sequence;  // sorted buffer content per position
    int switches = 0;                        // sum of |B_{i+1} \ B_i|
    int removals = 0;                        // sum of |B_i \ B_{i+1}|
    std::vector<Stretch> stretches;
    int optional_stretches = 0;  // beta
    int optional_items = 0;      // gamma: buffered somewhere, required nowhere
    std::vector<char> visited;   // union of the sequence, per item
    std::vector<char> optional_item;  // per item
    // Every position's window is [k,k], [0,k] or [0,0] for one common k.
    // The stretch bound below is only applied to such profiles.
    bool regular_profile = true;
};

struct SupportFailure {
    int position = 0;
};

struct Horizon {
    int next_required = 0;  // least pos' >= pos with item required, else length + 1
    int next_excluded = 0;  // least pos' >= pos with item impossible, else length
};

Horizon horizon_indices(int item, int pos, const SetVarBounds& bounds);

/// Priority between two distinct items at `pos`: true iff `a` is preferred
/// for staying in / entering the buffer. Evaluated with the smaller index in
/// the first role, so exactly one of precedes(a,b), precedes(b,a) holds.
bool precedes(int a, int b, int pos, const SetVarBounds& bounds);

/// Greedy switch-minimal buffer sequence; nullopt-like failure carries the
/// first position whose cardinality window cannot be met.
struct SupportResult {
    std::optional<SwitchSupport> support;
    std::optional<SupportFailure> failure;

    explicit operator bool() const { return support.has_value(); }
};

SupportResult find_support(const SetVarBounds& bounds, const CardProfile& card);

/// Lower bound on switches for sequences that also buffer every item of
/// `must_visit` somewhere. Never below support.switches; equal to it when
/// the profile is irregular, where spare room in the uncharged first buffer
/// can visit a missing item for free.
int lb_switch_plus(const SwitchSupport& support, const std::vector<char>& must_visit);
int lb_switch_plus(const SetVarBounds& bounds, const CardProfile& card,
                   const std::vector<char>& must_visit);

struct SwitchFilter {
    int z_min = 0;
    bool fail = false;
};

SwitchFilter filter_switch(const SetVarBounds& bounds, const CardProfile& card, int z_min,
                           int z_max, const std::vector<char>& must_visit);

/// Switch count of an explicit sequence (additions between consecutive positions).
int sequence_switches(const std::vector<std::vector<int>>& sequence);

}  // namespace thermoplan
