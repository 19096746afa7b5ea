#include <chiac/colouring.hpp>

#include <algorithm>
#include <numeric>
#include <string>

namespace chiac {

auto is_valid(const FreeFamily & family, const Colouring & c) -> bool
{
    for (auto s : family.sets) {
        if (popcount(s) < 2)
            continue;
        auto members = elements_of(s);
        int first = c.colours.at(members.front());
        bool bicoloured = std::any_of(members.begin() + 1, members.end(),
            [&](int x) { return c.colours.at(x) != first; });
        if (! bicoloured)
            return false;
    }
    return true;
}

auto is_valid(const Poset & p, const Poset & f, const Colouring & c) -> bool
{
    if (c.size() != p.size())
        throw std::invalid_argument("colouring has " + std::to_string(c.size()) + " entries for a poset of "
            + std::to_string(p.size()) + " elements");
    for (int colour : c.colours)
        if (colour < 1 || colour > c.k)
            throw std::invalid_argument("colour " + std::to_string(colour) + " outside 1.." + std::to_string(c.k));
    return is_valid(maximal_free(p, f, true), c);
}

namespace {
    class ColouringSearch {
    public:
        ColouringSearch(int n, const std::vector<Mask> & constraints, std::vector<int> order) :
            n_(n), order_(std::move(order)), colours_(n, 0)
        {
            std::vector<int> position(n);
            for (int i = 0; i < n; ++i)
                position[order_[i]] = i;

            // Each constraint is checked once, when its last element in the
            // search order is coloured.
            completing_.resize(n);
            for (auto s : constraints) {
                if (popcount(s) < 2)
                    throw std::invalid_argument("colouring constraints need at least two elements");
                int last = 0;
                for (int x : elements_of(s))
                    last = std::max(last, position[x]);
                completing_[last].push_back(s);
            }
        }

        auto run(int k) -> std::optional<Colouring>
        {
            k_ = k;
            class_.assign(k + 1, 0);
            if (expand(0, 0))
                return Colouring{colours_, k};
            return std::nullopt;
        }

    private:
        int n_, k_ = 0;
        std::vector<int> order_;
        std::vector<std::vector<Mask>> completing_;
        std::vector<int> colours_;
        std::vector<Mask> class_;

        auto expand(int depth, int used) -> bool
        {
            if (depth == n_)
                return true;
            int x = order_[depth];
            // Colour c+1 only after colour c has appeared.
            int limit = std::min(k_, used + 1);
            for (int c = 1; c <= limit; ++c) {
                class_[c] |= bit(x);
                bool ok = std::none_of(completing_[depth].begin(), completing_[depth].end(),
                    [&](Mask s) { return (s & ~class_[c]) == 0; });
                if (ok) {
                    colours_[x] = c;
                    if (expand(depth + 1, std::max(used, c)))
                        return true;
                }
                class_[c] &= ~bit(x);
            }
            colours_[x] = 0;
            return false;
        }
    };

    auto identity_order(int n) -> std::vector<int>
    {
        std::vector<int> order(n);
        std::iota(order.begin(), order.end(), 0);
        return order;
    }

    auto membership_order(int n, const std::vector<Mask> & constraints) -> std::vector<int>
    {
        std::vector<int> count(n, 0);
        for (auto s : constraints)
            for (int x : elements_of(s))
                ++count[x];
        auto order = identity_order(n);
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return count[a] > count[b]; });
        return order;
    }

    auto constraint_sets(const FreeFamily & family) -> std::vector<Mask>
    {
        std::vector<Mask> result;
        for (auto s : family.sets)
            if (popcount(s) >= 2)
                result.push_back(s);
        return result;
    }
}

auto find_colouring(int n, const std::vector<Mask> & constraints, int k) -> std::optional<Colouring>
{
    if (k < 1)
        return std::nullopt;
    return ColouringSearch(n, constraints, identity_order(n)).run(k);
}

auto colourable(int n, const std::vector<Mask> & constraints, int k) -> bool
{
    if (k < 1)
        return false;
    return ColouringSearch(n, constraints, membership_order(n, constraints)).run(k).has_value();
}

auto min_colours(int n, const FreeFamily & family) -> ChromaticResult
{
    auto constraints = constraint_sets(family);
    ChromaticResult result;
    result.family_size = constraints.size();
    if (constraints.empty()) {
        result.min_colours = 1;
        result.witness = Colouring{std::vector<int>(n, 1), 1};
        return result;
    }

    // All-distinct colours always work, so the loop ends by k = n.
    for (int k = 2; k <= n; ++k) {
        if (! colourable(n, constraints, k))
            continue;
        result.min_colours = k;
        result.witness = *find_colouring(n, constraints, k);
        return result;
    }
    throw std::logic_error("no valid colouring with all-distinct colours; constraint family is malformed");
}

auto min_colours(const Poset & p, const Poset & f) -> ChromaticResult
{
    return min_colours(p.size(), maximal_free(p, f, true));
}

auto theorem3_colouring(const Poset & p, const Poset & f) -> Colouring
{
    if (! hypothesis_report(f).thm3_applies)
        throw HypothesisError("pattern " + (f.name().empty() ? std::string("F") : f.name())
            + " needs at least two minimals and a non-minimal lower cover under every maximal");
    if (p.size() < 2)
        throw std::invalid_argument("constructive colourings need at least two elements");

    Colouring c{std::vector<int>(p.size(), 2), 2};
    if (is_antichain(p)) {
        c.colours[0] = 1;
        return c;
    }

    auto h = heights(p);
    int a = static_cast<int>(std::find(h.begin(), h.end(), 1) - h.begin());
    for (int x : elements_of(up_set(p, a)))
        c.colours[x] = 1;
    return c;
}

auto theorem3_dual_colouring(const Poset & p, const Poset & f) -> Colouring
{
    auto dual_f = dual(f);
    if (! hypothesis_report(dual_f).thm3_applies)
        throw HypothesisError("dual of pattern " + (f.name().empty() ? std::string("F") : f.name())
            + " needs at least two minimals and a non-minimal lower cover under every maximal");
    // Elements keep their indices under duality, so colours carry over as-is.
    return theorem3_colouring(dual(p), dual_f);
}

auto minimals_colouring(const Poset & p) -> Colouring
{
    if (p.size() < 2)
        throw std::invalid_argument("constructive colourings need at least two elements");
    Colouring c{std::vector<int>(p.size(), 2), 2};
    for (int x : elements_of(minimals(p)))
        c.colours[x] = 1;
    return c;
}

namespace {
    auto thm3_conditions(const Poset & f, bool & two_minimals, bool & covers_ok) -> void
    {
        Mask mins = minimals(f);
        two_minimals = popcount(mins) >= 2;
        std::vector<Mask> nonminimal_lower_covers(f.size(), 0);
        for (auto [lower, upper] : covers(f))
            if (! contains(mins, lower))
                nonminimal_lower_covers[upper] |= bit(lower);
        covers_ok = true;
        for (int m : elements_of(maximals(f)))
            if (! nonminimal_lower_covers[m])
                covers_ok = false;
    }
}

auto hypothesis_report(const Poset & f) -> HypothesisReport
{
    if (f.size() < 2)
        throw std::invalid_argument("hypotheses are defined for patterns with at least two elements");

    HypothesisReport r;
    thm3_conditions(f, r.two_minimals, r.maximals_have_nonminimal_cover);
    r.thm3_applies = r.two_minimals && r.maximals_have_nonminimal_cover;

    bool dual_two_minimals = false, dual_covers_ok = false;
    thm3_conditions(dual(f), dual_two_minimals, dual_covers_ok);
    r.thm3_dual_applies = dual_two_minimals && dual_covers_ok;

    r.bounded = is_bounded(f);
    r.nonbounded = ! r.bounded;
    r.no_isolated = isolated_elements(f) == 0;
    r.thm2_applies = r.nonbounded && r.no_isolated;
    r.no_interior_splitting = interior_splitting_elements(f) == 0;
    r.thm1_applies = r.bounded && r.no_interior_splitting;
    return r;
}

auto to_string(BoundSource source) -> std::string_view
{
    switch (source) {
    case BoundSource::theorem3: return "theorem3";
    case BoundSource::theorem3_dual: return "theorem3_dual";
    case BoundSource::theorem2: return "theorem2";
    case BoundSource::theorem1: return "theorem1";
    }
    return "unknown";
}

auto chi_ac_upper_from_theorems(const Poset & f) -> std::optional<TheoremBound>
{
    auto r = hypothesis_report(f);
    if (r.thm3_applies)
        return TheoremBound{2, BoundSource::theorem3};
    if (r.thm3_dual_applies)
        return TheoremBound{2, BoundSource::theorem3_dual};
    if (r.thm2_applies)
        return TheoremBound{3, BoundSource::theorem2};
    if (r.thm1_applies)
        return TheoremBound{10, BoundSource::theorem1};
    return std::nullopt;
}

} // namespace chiac
