#include "thermoplan/space.hpp"

#include <bit>
#include <cassert>

namespace thermoplan {

int Space::new_int(int lo, int hi)
{
    ints_.push_back({lo, hi, 0});
    int_watch_.emplace_back();
    return static_cast<int>(ints_.size()) - 1;
}

void Space::trail_int(int v)
{
    IntVar& x = ints_[v];
    const std::uint64_t s = serial();
    if (s == 0 || x.stamp == s)
        return;
    x.stamp = s;
    trail_.push_back({TrailEntry::Int, v, x.lo, x.hi, 0, 0, 0});
}

void Space::notify_int(int v)
{
    ++changes_;
    for (int p : int_watch_[v])
        schedule(p);
}

bool Space::set_lo(int v, int x)
{
    IntVar& var = ints_[v];
    if (x <= var.lo)
        return true;
    if (x > var.hi)
        return false;
    trail_int(v);
    var.lo = x;
    notify_int(v);
    return true;
}

bool Space::set_hi(int v, int x)
{
    IntVar& var = ints_[v];
    if (x >= var.hi)
        return true;
    if (x < var.lo)
        return false;
    trail_int(v);
    var.hi = x;
    notify_int(v);
    return true;
}

int Space::new_set_domain(int size)
{
    SetDomain d;
    d.capacity = size;
    d.words.assign((size + 63) / 64, ~std::uint64_t{0});
    if (size % 64)
        d.words.back() = (std::uint64_t{1} << (size % 64)) - 1;
    d.size = size;
    d.min = 0;
    d.max = size - 1;
    doms_.push_back(std::move(d));
    dom_watch_.emplace_back();
    return static_cast<int>(doms_.size()) - 1;
}

bool Space::contains(int a, int value) const
{
    const SetDomain& d = doms_[a];
    if (value < 0 || value >= d.capacity)
        return false;
    return (d.words[value / 64] >> (value % 64)) & 1u;
}

std::vector<int> Space::values(int a) const
{
    std::vector<int> out;
    const SetDomain& d = doms_[a];
    for (std::size_t w = 0; w < d.words.size(); ++w) {
        std::uint64_t bits = d.words[w];
        while (bits) {
            out.push_back(static_cast<int>(w * 64) + std::countr_zero(bits));
            bits &= bits - 1;
        }
    }
    return out;
}

void Space::trail_word(int a, int w)
{
    if (serial() == 0)
        return;
    const SetDomain& d = doms_[a];
    trail_.push_back({TrailEntry::Word, a, d.size, d.min, d.max, w, d.words[w]});
}

void Space::refresh_bounds(SetDomain& d)
{
    int size = 0;
    int lo = -1, hi = -1;
    for (std::size_t w = 0; w < d.words.size(); ++w) {
        if (!d.words[w])
            continue;
        size += std::popcount(d.words[w]);
        if (lo < 0)
            lo = static_cast<int>(w * 64) + std::countr_zero(d.words[w]);
        hi = static_cast<int>(w * 64) + 63 - std::countl_zero(d.words[w]);
    }
    d.size = size;
    d.min = lo;
    d.max = hi;
}

void Space::notify_dom(int a)
{
    ++changes_;
    for (int p : dom_watch_[a])
        schedule(p);
}

bool Space::remove(int a, int value)
{
    if (!contains(a, value))
        return true;
    SetDomain& d = doms_[a];
    if (d.size == 1)
        return false;
    const int w = value / 64;
    trail_word(a, w);
    d.words[w] &= ~(std::uint64_t{1} << (value % 64));
    --d.size;
    if (value == d.min || value == d.max)
        refresh_bounds(d);
    notify_dom(a);
    return true;
}

bool Space::restrict_to(int a, int value)
{
    if (!contains(a, value))
        return false;
    SetDomain& d = doms_[a];
    if (d.size == 1)
        return true;
    for (int w = 0; w < static_cast<int>(d.words.size()); ++w) {
        const std::uint64_t keep = w == value / 64 ? std::uint64_t{1} << (value % 64) : 0;
        if (d.words[w] != keep) {
            trail_word(a, w);
            d.words[w] = keep;
        }
    }
    d.size = 1;
    d.min = d.max = value;
    notify_dom(a);
    return true;
}

bool Space::remove_above(int a, int bound)
{
    SetDomain& d = doms_[a];
    if (d.max <= bound)
        return true;
    if (d.min > bound)
        return false;
    for (int w = 0; w < static_cast<int>(d.words.size()); ++w) {
        const int first = w * 64;
        std::uint64_t keep;
        if (first > bound)
            keep = 0;
        else if (bound - first >= 63)
            keep = ~std::uint64_t{0};
        else
            keep = (std::uint64_t{1} << (bound - first + 1)) - 1;
        if ((d.words[w] & keep) != d.words[w]) {
            trail_word(a, w);
            d.words[w] &= keep;
        }
    }
    refresh_bounds(d);
    notify_dom(a);
    return true;
}

int Space::post(std::unique_ptr<Propagator> p, int priority)
{
    props_.push_back(std::move(p));
    priority_.push_back(priority);
    queued_.push_back(0);
    const int id = static_cast<int>(props_.size()) - 1;
    schedule(id);
    return id;
}

void Space::schedule(int prop)
{
    if (prop == current_ || queued_[prop])
        return;
    queued_[prop] = 1;
    queue_[priority_[prop]].push_back(prop);
}

void Space::schedule_all()
{
    for (int p = 0; p < propagator_count(); ++p)
        schedule(p);
}

bool Space::propagate()
{
    failed_ = -1;
    for (;;) {
        int level = -1;
        for (int q = 0; q < 2; ++q)
            if (head_[q] < queue_[q].size()) {
                level = q;
                break;
            }
        if (level < 0)
            break;
        const int p = queue_[level][head_[level]++];
        queued_[p] = 0;
        current_ = p;
        ++propagations_;
        const bool ok = props_[p]->propagate(*this);
        current_ = -1;
        if (!ok) {
            failed_ = p;
            for (int q = 0; q < 2; ++q) {
                for (std::size_t k = head_[q]; k < queue_[q].size(); ++k)
                    queued_[queue_[q][k]] = 0;
                queue_[q].clear();
                head_[q] = 0;
            }
            return false;
        }
    }
    for (int q = 0; q < 2; ++q) {
        queue_[q].clear();
        head_[q] = 0;
    }
    return true;
}

void Space::push_level()
{
    levels_.push_back({trail_.size(), next_serial_++});
}

void Space::pop_level()
{
    assert(!levels_.empty());
    const std::size_t target = levels_.back().trail_size;
    while (trail_.size() > target) {
        const TrailEntry e = trail_.back();
        trail_.pop_back();
        if (e.kind == TrailEntry::Int) {
            ints_[e.var].lo = e.a;
            ints_[e.var].hi = e.b;
        } else {
            SetDomain& d = doms_[e.var];
            d.words[e.index] = e.word;
            d.size = e.a;
            d.min = e.b;
            d.max = e.c;
        }
    }
    levels_.pop_back();
}

}  // namespace thermoplan
