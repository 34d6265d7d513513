#include "ppm/matcher.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace ppm {

namespace {

// Longest strictly decreasing (resp. increasing) subsequence of the text
// starting at each position. Quadratic, fine at toolkit scale.
std::vector<Int> monotone_reach(const std::vector<Int>& text, bool decreasing) {
    const Int n = static_cast<Int>(text.size());
    std::vector<Int> reach(static_cast<std::size_t>(n), 1);
    for (Int p = n - 2; p >= 0; --p) {
        Int best = 0;
        for (Int q = p + 1; q < n; ++q) {
            const bool ok = decreasing ? text[static_cast<std::size_t>(q)] <
                                             text[static_cast<std::size_t>(p)]
                                       : text[static_cast<std::size_t>(q)] >
                                             text[static_cast<std::size_t>(p)];
            if (ok)
                best = std::max(best, reach[static_cast<std::size_t>(q)]);
        }
        reach[static_cast<std::size_t>(p)] = 1 + best;
    }
    return reach;
}

// Length of the maximal monotonic consecutive stretch of the pattern
// starting at each position.
std::vector<Int> monotone_need(const std::vector<Int>& sig, bool decreasing) {
    const Int l = static_cast<Int>(sig.size());
    std::vector<Int> need(static_cast<std::size_t>(l), 1);
    for (Int x = l - 2; x >= 0; --x) {
        const bool ok = decreasing
                            ? sig[static_cast<std::size_t>(x)] > sig[static_cast<std::size_t>(x + 1)]
                            : sig[static_cast<std::size_t>(x)] < sig[static_cast<std::size_t>(x + 1)];
        if (ok)
            need[static_cast<std::size_t>(x)] = need[static_cast<std::size_t>(x + 1)] + 1;
    }
    return need;
}

class PatternSearch {
public:
    PatternSearch(const Permutation& sigma, const Permutation& pi,
                  std::optional<std::uint64_t> budget)
        : sig_(sigma.values()),
          text_(pi.values()),
          l_(sigma.size()),
          n_(pi.size()),
          budget_(budget),
          dec_reach_(monotone_reach(text_, true)),
          inc_reach_(monotone_reach(text_, false)),
          need_dec_(monotone_need(sig_, true)),
          need_inc_(monotone_need(sig_, false)),
          phi_(static_cast<std::size_t>(l_), 0),
          lo_(static_cast<std::size_t>(l_ + 1), 0),
          hi_(static_cast<std::size_t>(l_ + 1), n_ + 1),
          image_(static_cast<std::size_t>(l_ + 1), 0),
          assigned_(static_cast<std::size_t>(l_ + 1), false) {
        // Dominance counts: dominance(p, v) = number of positions <= p whose
        // value is <= v. Lets the capacity check count only text values that
        // are still reachable (position beyond the current image). Quadratic
        // memory, so only built at toolkit scale.
        if (n_ <= 2048) {
            const std::size_t stride = static_cast<std::size_t>(n_ + 1);
            dominance_.assign(stride * stride, 0);
            for (Int p = 1; p <= n_; ++p) {
                const Int value = text_[static_cast<std::size_t>(p - 1)];
                for (Int v = 0; v <= n_; ++v)
                    dominance_[static_cast<std::size_t>(p) * stride + static_cast<std::size_t>(v)] =
                        dominance_[static_cast<std::size_t>(p - 1) * stride +
                                   static_cast<std::size_t>(v)] +
                        (value <= v ? 1 : 0);
            }
        }
    }

    MatchResult run() {
        MatchResult result;
        if (l_ > n_) {
            result.nodes_explored = nodes_;
            return result; // too long to ever occur, no search needed
        }
        if (dfs(0, 0)) {
            result.found = true;
            result.certificate = Certificate{phi_};
        }
        result.nodes_explored = nodes_;
        return result;
    }

private:
    // x: 0-based pattern position to assign; p_prev: 0-based position of the
    // previous image (-1 sentinel folded into 0 via p_prev + 1 start).
    bool dfs(Int x, Int p_prev) {
        if (x == l_)
            return true;
        const Int s = sig_[static_cast<std::size_t>(x)];
        const Int last = n_ - (l_ - x) + 1; // keep room for the remaining pattern
        for (Int p = p_prev + 1; p <= last; ++p) {
            const Int y = text_[static_cast<std::size_t>(p - 1)];
            if (y <= lo_[static_cast<std::size_t>(s)] || y >= hi_[static_cast<std::size_t>(s)])
                continue;
            if (dec_reach_[static_cast<std::size_t>(p - 1)] < need_dec_[static_cast<std::size_t>(x)] ||
                inc_reach_[static_cast<std::size_t>(p - 1)] < need_inc_[static_cast<std::size_t>(x)])
                continue;
            ++nodes_;
            if (budget_ && nodes_ > *budget_)
                throw BudgetExhausted("node budget of " + std::to_string(*budget_) +
                                          " exhausted before a definite answer",
                                      nodes_);
            const std::size_t mark = trail_.size();
            phi_[static_cast<std::size_t>(x)] = p;
            if (commit(s, y, p) && dfs(x + 1, p))
                return true;
            undo(mark, s);
        }
        return false;
    }

    // Number of text values strictly inside (lo, hi) at positions strictly
    // beyond p. Falls back to the position-blind count for big texts.
    Int available(Int lo, Int hi, Int p) const {
        if (dominance_.empty())
            return hi - lo - 1;
        const std::size_t stride = static_cast<std::size_t>(n_ + 1);
        const auto count = [&](Int pos, Int v) {
            return static_cast<Int>(
                dominance_[static_cast<std::size_t>(pos) * stride + static_cast<std::size_t>(v)]);
        };
        return count(n_, hi - 1) - count(n_, lo) - (count(p, hi - 1) - count(p, lo));
    }

    // Records the assignment s -> y, clamps the value windows of all
    // unassigned pattern values, and checks that every window still has
    // capacity for the pattern values it must host. All unassigned pattern
    // positions lie to the right of the one just fixed, so only text values
    // beyond position p count towards capacity.
    bool commit(Int s, Int y, Int p) {
        assigned_[static_cast<std::size_t>(s)] = true;
        image_[static_cast<std::size_t>(s)] = y;
        for (Int t = 1; t < s; ++t)
            if (!assigned_[static_cast<std::size_t>(t)] && hi_[static_cast<std::size_t>(t)] > y) {
                trail_.push_back({t, hi_[static_cast<std::size_t>(t)], true});
                hi_[static_cast<std::size_t>(t)] = y;
            }
        for (Int t = s + 1; t <= l_; ++t)
            if (!assigned_[static_cast<std::size_t>(t)] && lo_[static_cast<std::size_t>(t)] < y) {
                trail_.push_back({t, lo_[static_cast<std::size_t>(t)], false});
                lo_[static_cast<std::size_t>(t)] = y;
            }
        // Between value-consecutive assigned pattern values there are no used
        // text values, so each block of unassigned pattern values must fit in
        // the open interval between the bracketing images.
        Int last_image = 0;
        Int block = 0;
        for (Int t = 1; t <= l_; ++t) {
            if (assigned_[static_cast<std::size_t>(t)]) {
                if (block > available(last_image, image_[static_cast<std::size_t>(t)], p))
                    return false;
                last_image = image_[static_cast<std::size_t>(t)];
                block = 0;
            } else {
                ++block;
            }
        }
        return block <= available(last_image, n_ + 1, p);
    }

    void undo(std::size_t mark, Int s) {
        while (trail_.size() > mark) {
            const auto& e = trail_.back();
            (e.was_hi ? hi_ : lo_)[static_cast<std::size_t>(e.value)] = e.old_bound;
            trail_.pop_back();
        }
        assigned_[static_cast<std::size_t>(s)] = false;
    }

    struct TrailEntry {
        Int value;
        Int old_bound;
        bool was_hi;
    };

    std::vector<Int> sig_;
    std::vector<Int> text_;
    Int l_;
    Int n_;
    std::optional<std::uint64_t> budget_;
    std::uint64_t nodes_ = 0;
    std::vector<Int> dec_reach_, inc_reach_, need_dec_, need_inc_;
    std::vector<Int> phi_;
    std::vector<Int> lo_, hi_, image_;
    std::vector<bool> assigned_;
    std::vector<TrailEntry> trail_;
    std::vector<std::int32_t> dominance_;
};

// Calls fn with each l-combination of [1..n] in lexicographic order until fn
// returns true; reports whether any call did.
template <typename Fn>
bool any_combination(Int n, Int l, Fn&& fn) {
    if (l > n)
        return false;
    std::vector<Int> pick(static_cast<std::size_t>(l));
    for (Int i = 0; i < l; ++i)
        pick[static_cast<std::size_t>(i)] = i + 1;
    if (l == 0)
        return fn(pick);
    while (true) {
        if (fn(pick))
            return true;
        Int i = l - 1;
        while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - (l - 1 - i))
            --i;
        if (i < 0)
            return false;
        ++pick[static_cast<std::size_t>(i)];
        for (Int j = i + 1; j < l; ++j)
            pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
}

bool certifies(const Permutation& sigma, const Permutation& pi, const std::vector<Int>& pick) {
    const Int l = sigma.size();
    for (Int x = 1; x <= l; ++x)
        for (Int y = x + 1; y <= l; ++y)
            if ((sigma(x) < sigma(y)) !=
                (pi(pick[static_cast<std::size_t>(x - 1)]) < pi(pick[static_cast<std::size_t>(y - 1)])))
                return false;
    return true;
}

} // namespace

MatchResult contains_pattern(const Permutation& sigma, const Permutation& pi,
                             std::optional<std::uint64_t> budget) {
    return PatternSearch(sigma, pi, budget).run();
}

Int count_occurrences(const Permutation& sigma, const Permutation& pi) {
    if (sigma.size() > 12 || pi.size() > 20)
        throw ScaleExceeded("count_occurrences is an oracle: |sigma| <= 12, |pi| <= 20");
    Int count = 0;
    any_combination(pi.size(), sigma.size(), [&](const std::vector<Int>& pick) {
        if (certifies(sigma, pi, pick))
            ++count;
        return false; // keep enumerating
    });
    return count;
}

Int avoiders_count(const Permutation& sigma, Int n) {
    if (n > 10)
        throw ScaleExceeded("avoiders_count enumerates n! permutations: n <= 10");
    if (n < 0)
        throw ScaleExceeded("n must be nonnegative");
    std::vector<Int> values(static_cast<std::size_t>(n));
    for (Int i = 0; i < n; ++i)
        values[static_cast<std::size_t>(i)] = i + 1;
    Int count = 0;
    do {
        if (!contains_pattern_oracle(sigma, Permutation(values)))
            ++count;
    } while (std::next_permutation(values.begin(), values.end()));
    return count;
}

bool contains_pattern_oracle(const Permutation& sigma, const Permutation& pi) {
    return oracle_certificate(sigma, pi).has_value();
}

std::optional<Certificate> oracle_certificate(const Permutation& sigma, const Permutation& pi) {
    if (pi.size() > 14)
        throw ScaleExceeded("brute-force oracle limited to |pi| <= 14");
    std::optional<Certificate> found;
    any_combination(pi.size(), sigma.size(), [&](const std::vector<Int>& pick) {
        if (!certifies(sigma, pi, pick))
            return false;
        found = Certificate{pick};
        return true;
    });
    return found;
}

} // namespace ppm
