#pragma once

#include <cstdint>
#include <memory>
#include <vector>

namespace thermoplan {

class Space;

/// A filtering rule. propagate() returns false on failure and must leave the
/// space at its own fixpoint (it is not rescheduled by its own changes).
class Propagator {
public:
    virtual ~Propagator() = default;
    virtual bool propagate(Space& sp) = 0;
    virtual const char* name() const = 0;

    // Failure attribution for weighted-degree branching.
    enum class Group { None, Test, Constraint };
    Group group_kind = Group::None;
    int group = -1;
};

/// Trailed domain store: bounds-only integer variables and bitset domains for
/// allocation variables, with watch lists and a two-level propagation queue
/// (cheap rules before expensive ones).
class Space {
public:
    static constexpr int cheap = 0;
    static constexpr int expensive = 1;

    Space() = default;
    Space(const Space&) = delete;
    Space& operator=(const Space&) = delete;

    // Integer variables.
    int new_int(int lo, int hi);
    int lo(int v) const { return ints_[v].lo; }
    int hi(int v) const { return ints_[v].hi; }
    bool fixed(int v) const { return ints_[v].lo == ints_[v].hi; }
    int int_count() const { return static_cast<int>(ints_.size()); }
    bool set_lo(int v, int x);
    bool set_hi(int v, int x);
    bool assign(int v, int x) { return set_lo(v, x) && set_hi(v, x); }

    // Allocation variables over [0, size).
    int new_set_domain(int size);
    bool contains(int a, int value) const;
    int size(int a) const { return doms_[a].size; }
    int min(int a) const { return doms_[a].min; }
    int max(int a) const { return doms_[a].max; }
    bool dom_fixed(int a) const { return doms_[a].size == 1; }
    int dom_count() const { return static_cast<int>(doms_.size()); }
    bool remove(int a, int value);
    bool restrict_to(int a, int value);
    bool remove_above(int a, int bound);
    std::vector<int> values(int a) const;

    int post(std::unique_ptr<Propagator> p, int priority);
    void watch_int(int v, int prop) { int_watch_[v].push_back(prop); }
    void watch_dom(int a, int prop) { dom_watch_[a].push_back(prop); }
    void schedule(int prop);
    void schedule_all();
    Propagator& propagator(int id) { return *props_[id]; }
    int propagator_count() const { return static_cast<int>(props_.size()); }

    /// Runs queued propagators to a common fixpoint. On failure the queue is
    /// emptied and failed_propagator() names the culprit (-1 for a failing
    /// domain update made outside propagation).
    bool propagate();
    int failed_propagator() const { return failed_; }
    long long propagations() const { return propagations_; }
    /// Domain updates so far; propagators loop on it to reach their own fixpoint.
    std::uint64_t changes() const { return changes_; }

    void push_level();
    void pop_level();
    int depth() const { return static_cast<int>(levels_.size()); }

private:
    struct IntVar {
        int lo, hi;
        std::uint64_t stamp = 0;
    };
    struct SetDomain {
        std::vector<std::uint64_t> words;
        int size = 0, min = 0, max = 0, capacity = 0;
    };
    struct TrailEntry {
        enum Kind : std::uint8_t { Int, Word } kind;
        int var;
        int a, b, c;  // int: lo, hi; word: size, min, max
        int index;    // word index
        std::uint64_t word;
    };
    struct Level {
        std::size_t trail_size;
        std::uint64_t serial;
    };

    void trail_int(int v);
    void trail_word(int a, int w);
    void notify_int(int v);
    void notify_dom(int a);
    void refresh_bounds(SetDomain& d);
    std::uint64_t serial() const { return levels_.empty() ? 0 : levels_.back().serial; }

    std::vector<IntVar> ints_;
    std::vector<SetDomain> doms_;
    std::vector<std::vector<int>> int_watch_, dom_watch_;

    std::vector<std::unique_ptr<Propagator>> props_;
    std::vector<int> priority_;
    std::vector<char> queued_;
    std::vector<int> queue_[2];
    std::size_t head_[2] = {0, 0};
    int current_ = -1;
    int failed_ = -1;
    long long propagations_ = 0;
    std::uint64_t changes_ = 0;

    std::vector<TrailEntry> trail_;
    std::vector<Level> levels_;
    std::uint64_t next_serial_ = 1;
};

}  // namespace thermoplan
