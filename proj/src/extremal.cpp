#include <iap/extremal.hpp>

#include <algorithm>
#include <chrono>
#include <limits>
#include <stdexcept>

namespace iap {

namespace
{
    using Clock = std::chrono::steady_clock;

    class BudgetMeter
    {
    public:
        explicit BudgetMeter(const SearchBudget & budget) :
            budget_(budget),
            start_(Clock::now())
        {
        }

        /// Counts one node; false once any limit has been hit.
        bool tick()
        {
            if (exhausted_)
                return false;
            ++nodes_;
            if (nodes_ > budget_.node_limit)
                exhausted_ = true;
            else if ((nodes_ & 1023) == 0) {
                std::chrono::duration<double> elapsed = Clock::now() - start_;
                if (elapsed.count() > budget_.time_limit)
                    exhausted_ = true;
            }
            return ! exhausted_;
        }

        bool exhausted() const { return exhausted_; }
        Int nodes() const { return nodes_; }

    private:
        SearchBudget budget_;
        Clock::time_point start_;
        Int nodes_ = 0;
        bool exhausted_ = false;
    };

    /// Canonical set partitions of [n] built one element at a time; element i
    /// joins an open block or starts the next one.
    class PartitionSearch
    {
    public:
        PartitionSearch(Int n, Int max_block, Int max_blocks, Int k, BudgetMeter & meter) :
            n_(n), max_block_(max_block), max_blocks_(max_blocks < 0 ? n : max_blocks), k_(k),
            meter_(meter), block_of_(static_cast<std::size_t>(n) + 1, -1),
            stamp_(static_cast<std::size_t>(n) + 1, 0)
        {
        }

        /// Stops at the first leaf when `first_only`; returns the number of leaves.
        Int run(bool first_only)
        {
            first_only_ = first_only;
            leaves_ = 0;
            descend(1);
            return leaves_;
        }

        std::vector<Int> colours() const
        {
            return std::vector<Int>(block_of_.begin() + 1, block_of_.end());
        }

    private:
        bool done() const { return meter_.exhausted() || (first_only_ && leaves_ > 0); }

        /// Whether some k-progression with last element i is rainbow.
        bool rainbow_ending_at(Int i)
        {
            if (k_ <= 0)
                return false;
            if (k_ == 1)
                return true;
            for (Int d = 1 ; (k_ - 1) * d < i ; ++d) {
                ++epoch_;
                bool distinct = true;
                for (Int j = 0 ; j < k_ && distinct ; ++j) {
                    Int c = block_of_[i - j * d];
                    if (stamp_[c] == epoch_)
                        distinct = false;
                    stamp_[c] = epoch_;
                }
                if (distinct)
                    return true;
            }
            return false;
        }

        void descend(Int i)
        {
            if (i > n_) {
                ++leaves_;
                return;
            }
            Int open = static_cast<Int>(sizes_.size());
            for (Int b = 0 ; b <= open && ! done() ; ++b) {
                if (b == open && open >= max_blocks_)
                    break;
                if (b < open && sizes_[b] >= max_block_)
                    continue;
                if (! meter_.tick())
                    return;
                if (b == open)
                    sizes_.push_back(0);
                ++sizes_[b];
                block_of_[i] = b;
                if (! rainbow_ending_at(i))
                    descend(i + 1);
                if (done())
                    return;
                block_of_[i] = -1;
                if (--sizes_[b] == 0)
                    sizes_.pop_back();
            }
        }

        Int n_, max_block_, max_blocks_, k_;
        BudgetMeter & meter_;
        std::vector<Int> block_of_;
        std::vector<Int> sizes_;
        std::vector<Int> stamp_;
        Int epoch_ = 0;
        bool first_only_ = true;
        Int leaves_ = 0;
    };

    ColoringSearchResult search_colourings(Int n, Int max_block, Int max_blocks, Int k,
            const SearchBudget & budget)
    {
        BudgetMeter meter(budget);
        PartitionSearch search(n, max_block, max_blocks, k, meter);
        ColoringSearchResult result;
        if (search.run(true) > 0) {
            auto colours = search.colours();
            result.witness = Coloring(colours);
        }
        result.outcome = result.witness || ! meter.exhausted() ? Outcome::complete : Outcome::exhausted;
        result.nodes = meter.nodes();
        return result;
    }

    class PermutationSearch
    {
    public:
        PermutationSearch(Int n, Int k, FixedPointMode mode, BudgetMeter & meter) :
            n_(n), strict_(mode == FixedPointMode::strict), meter_(meter),
            image_(static_cast<std::size_t>(n) + 1, 0),
            used_(static_cast<std::size_t>(n) + 1, false),
            through_(static_cast<std::size_t>(n) + 1)
        {
            Int max_diff = (n - 1) / (k - 1);
            for (Int d = 1 ; d <= max_diff ; ++d)
                for (Int a = 1 ; a + (k - 1) * d <= n ; ++a) {
                    Int id = static_cast<Int>(aps_.size());
                    aps_.push_back(Progression{a, d, k});
                    for (Int j = 0 ; j < k ; ++j)
                        through_[a + j * d].push_back(id);
                }
            hits_.assign(aps_.size(), 0);
            alive_ = static_cast<Int>(aps_.size());
        }

        bool run()
        {
            return descend(1);
        }

        std::vector<Int> images() const
        {
            return std::vector<Int>(image_.begin() + 1, image_.end());
        }

    private:
        bool kills(Int from, Int to) const { return from != to || strict_; }

        /// Progression p is still unhit and no unassigned element of it can
        /// be sent to an unused value inside it.
        bool safe_forever(Int id) const
        {
            if (hits_[id] > 0)
                return false;
            const auto & p = aps_[id];
            for (Int j = 0 ; j < p.length ; ++j) {
                Int x = p.at(j);
                if (image_[x] != 0)
                    continue;
                for (Int l = 0 ; l < p.length ; ++l) {
                    Int y = p.at(l);
                    if (! used_[y] && kills(x, y))
                        return false;
                }
            }
            return true;
        }

        void apply(Int i, Int v, int delta)
        {
            if (! kills(i, v))
                return;
            for (Int id : through_[i]) {
                if (! aps_[id].contains(v))
                    continue;
                if (delta > 0 && hits_[id]++ == 0)
                    --alive_;
                else if (delta < 0 && --hits_[id] == 0)
                    ++alive_;
            }
        }

        void complete_ascending()
        {
            Int next = 1;
            for (Int i = 1 ; i <= n_ ; ++i) {
                if (image_[i] != 0)
                    continue;
                while (used_[next])
                    ++next;
                image_[i] = next;
                used_[next] = true;
            }
        }

        bool descend(Int i)
        {
            if (alive_ == 0) {
                complete_ascending();
                return true;
            }
            if (i > n_)
                return false;
            for (Int v = 1 ; v <= n_ ; ++v) {
                if (used_[v])
                    continue;
                if (! meter_.tick())
                    return false;
                image_[i] = v;
                used_[v] = true;
                apply(i, v, +1);

                bool pruned = false;
                for (Int id : through_[i])
                    if (safe_forever(id)) {
                        pruned = true;
                        break;
                    }
                if (! pruned)
                    for (Int id : through_[v])
                        if (safe_forever(id)) {
                            pruned = true;
                            break;
                        }

                if (! pruned && descend(i + 1))
                    return true;
                apply(i, v, -1);
                used_[v] = false;
                image_[i] = 0;
                if (meter_.exhausted())
                    return false;
            }
            return false;
        }

        Int n_;
        bool strict_;
        BudgetMeter & meter_;
        std::vector<Int> image_;
        std::vector<bool> used_;
        std::vector<Progression> aps_;
        std::vector<std::vector<Int>> through_;
        std::vector<Int> hits_;
        Int alive_ = 0;
    };

    SizeVerdict verdict_from(Int n, bool has_witness, Outcome outcome, Int nodes)
    {
        SizeVerdict v;
        v.n = n;
        v.outcome = outcome;
        v.nodes = nodes;
        if (has_witness)
            v.bad_exists = true;
        else if (outcome == Outcome::complete)
            v.bad_exists = false;
        return v;
    }
}

std::string to_string(Outcome outcome)
{
    return outcome == Outcome::complete ? "COMPLETE" : "EXHAUSTED";
}

bool has_rainbow_ap(const Coloring & c, Int k)
{
    Int n = c.n();
    if (k < 1 || n < k)
        return false;
    if (k == 1)
        return true;
    for (Int d = 1 ; (k - 1) * d <= n - 1 ; ++d)
        for (Int a = 1 ; a + (k - 1) * d <= n ; ++a) {
            bool distinct = true;
            for (Int x = 0 ; x < k && distinct ; ++x)
                for (Int y = x + 1 ; y < k && distinct ; ++y)
                    distinct = c.color_of(a + x * d) != c.color_of(a + y * d);
            if (distinct)
                return true;
        }
    return false;
}

bool has_free_ap(const PermutationMap & p, Int k, FixedPointMode mode)
{
    Int n = p.n();
    if (k < 1 || n < k)
        return false;
    Int max_diff = k == 1 ? 1 : (n - 1) / (k - 1);
    for (Int d = 1 ; d <= max_diff ; ++d)
        for (Int a = 1 ; a + (k - 1) * d <= n ; ++a) {
            Progression ap{a, d, k};
            bool free = true;
            for (Int j = 0 ; j < k && free ; ++j) {
                Int x = ap.at(j);
                Int y = p.image(x);
                if (ap.contains(y) && (x != y || mode == FixedPointMode::strict))
                    free = false;
            }
            if (free)
                return true;
        }
    return false;
}

Int count_canonical_partitions(Int n, Int max_block, Int max_blocks)
{
    if (n < 0 || max_block < 1)
        throw std::invalid_argument("count_canonical_partitions needs n >= 0 and max_block >= 1");
    if (n == 0)
        return 1;
    SearchBudget unlimited{std::numeric_limits<Int>::max(), 1e30};
    BudgetMeter meter(unlimited);
    PartitionSearch search(n, max_block, max_blocks, 0, meter);
    return search.run(false);
}

ColoringSearchResult exists_coloring_without_rainbow(Int n, Int m, Int k, const SearchBudget & budget)
{
    if (n < 1 || m < 1 || k < 1)
        throw std::invalid_argument("colouring search needs n, m, k >= 1");
    return search_colourings(n, m, -1, k, budget);
}

ColoringSearchResult exists_equinumerous_coloring_without_rainbow(Int t, Int m, Int k,
        const SearchBudget & budget)
{
    if (t < 1 || m < 1 || k < 1)
        throw std::invalid_argument("equinumerous search needs t, m, k >= 1");
    return search_colourings(t * m, m, t, k, budget);
}

SrResult sr_exact(Int m, Int k, Int n_max, const SearchBudget & budget)
{
    if (m < 1 || k < 1)
        throw std::invalid_argument("sr_exact needs m, k >= 1");
    SrResult result;
    std::optional<Int> candidate;
    for (Int n = 1 ; n <= n_max ; ++n) {
        auto search = exists_coloring_without_rainbow(n, m, k, budget);
        result.steps.push_back(verdict_from(n, search.witness.has_value(), search.outcome, search.nodes));
        if (search.outcome == Outcome::exhausted) {
            result.outcome = Outcome::exhausted;
            return result;
        }
        if (search.witness)
            candidate.reset();
        else if (! candidate)
            candidate = n;
    }
    result.value = candidate;
    result.outcome = candidate ? Outcome::complete : Outcome::exhausted;
    return result;
}

PermutationSearchResult exists_permutation_without_free_ap(Int n, Int k, FixedPointMode mode,
        const SearchBudget & budget)
{
    if (n < 1 || k < 2)
        throw std::invalid_argument("permutation search needs n >= 1 and k >= 2");
    BudgetMeter meter(budget);
    PermutationSearch search(n, k, mode, meter);
    PermutationSearchResult result;
    if (search.run())
        result.witness = PermutationMap(search.images());
    result.outcome = result.witness || ! meter.exhausted() ? Outcome::complete : Outcome::exhausted;
    result.nodes = meter.nodes();
    return result;
}

N0Report n0_probe(Int k, FixedPointMode mode, Int n_max, const SearchBudget & budget,
        const FinderConfig & cfg, const SieveTable & table)
{
    if (k < 3)
        throw std::invalid_argument("n0_probe needs k >= 3");
    N0Report report;
    report.k = k;
    report.mode = mode;
    report.n_max = n_max;
    for (Int n = 1 ; n <= n_max ; ++n) {
        auto search = exists_permutation_without_free_ap(n, k, mode, budget);
        report.steps.push_back(PermutationVerdict{
                verdict_from(n, search.witness.has_value(), search.outcome, search.nodes), search.witness});
        if (search.witness)
            report.largest_bad = n;
    }
    try {
        report.n0_upper_bound = n0_upper_bound(k, cfg, table);
    }
    catch (const HorizonError &) {
    }

    bool settled_above = true;
    for (const auto & step : report.steps)
        if (step.verdict.n > report.largest_bad.value_or(0) && step.verdict.bad_exists != false)
            settled_above = false;

    if (mode == FixedPointMode::strict && report.largest_bad == n_max)
        report.note = "strict mode: the identity is bad for every n, so n0 does not exist under the literal reading";
    else if (settled_above && report.n0_upper_bound && n_max >= *report.n0_upper_bound) {
        report.n0_exact = report.largest_bad.value_or(0) + 1;
        report.note = "n0 settled: every n above the largest bad n was searched to completion up to the certified bound";
    }
    else
        report.note = "horizon-limited search: n0 is only bounded below by largest_bad + 1";
    return report;
}

TkReport tk_probe(Int t, Int k, Int m_max, const SearchBudget & budget)
{
    if (t < 1 || k < 1 || m_max < 1)
        throw std::invalid_argument("tk_probe needs t, k, m_max >= 1");
    TkReport report;
    report.t = t;
    report.k = k;
    report.m_max = m_max;
    report.all_forced = true;
    for (Int m = 1 ; m <= m_max ; ++m) {
        auto search = exists_equinumerous_coloring_without_rainbow(t, m, k, budget);
        ColoringVerdict step{m, verdict_from(t * m, search.witness.has_value(), search.outcome, search.nodes),
            search.witness};
        if (step.verdict.bad_exists != false)
            report.all_forced = false;
        report.steps.push_back(std::move(step));
    }
    report.note = "verdicts cover m <= m_max only; T_k quantifies over every m and is not decided here";
    return report;
}

}
