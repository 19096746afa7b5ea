#include <chiac/embedding.hpp>

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace chiac {

namespace {
    class Embedder {
    public:
        Embedder(const Poset & host, const Poset & pattern, Mask within) :
            host_(host), pattern_(pattern), within_(within & host.ground())
        {
            int k = pattern.size();
            order_.resize(k);
            std::iota(order_.begin(), order_.end(), 0);
            std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
                return popcount(pattern.comparable_to(a)) > popcount(pattern.comparable_to(b));
            });

            auto host_heights = heights(host), host_depths = depths(host);
            auto pattern_heights = heights(pattern), pattern_depths = depths(pattern);

            // A pattern element needs at least as many elements above and below
            // it inside the candidate set, and chains at least as long.
            allowed_.assign(k, 0);
            for (int x = 0; x < k; ++x)
                for (int y : elements_of(within_))
                    if (popcount(host.above(y) & within_) >= popcount(pattern.above(x))
                        && popcount(host.below(y) & within_) >= popcount(pattern.below(x))
                        && host_heights[y] >= pattern_heights[x] && host_depths[y] >= pattern_depths[x])
                        allowed_[x] |= bit(y);

            map_.assign(k, -1);
        }

        auto run(const std::function<bool(const Embedding &)> & visit) -> void
        {
            if (pattern_.size() > popcount(within_))
                return;
            expand(0, 0, visit);
        }

    private:
        const Poset & host_;
        const Poset & pattern_;
        Mask within_;
        std::vector<int> order_;
        std::vector<Mask> allowed_;
        Embedding map_;

        auto expand(int depth, Mask used, const std::function<bool(const Embedding &)> & visit) -> bool
        {
            if (depth == pattern_.size())
                return visit(map_);

            int x = order_[depth];
            Mask candidates = allowed_[x] & ~used;
            for (int d = 0; d < depth && candidates; ++d) {
                int prior = order_[d];
                int image = map_[prior];
                if (pattern_.less(prior, x))
                    candidates &= host_.above(image);
                else if (pattern_.less(x, prior))
                    candidates &= host_.below(image);
                else
                    candidates &= ~host_.comparable_to(image);
            }

            for (int y : elements_of(candidates)) {
                map_[x] = y;
                if (! expand(depth + 1, used | bit(y), visit))
                    return false;
            }
            map_[x] = -1;
            return true;
        }
    };
}

auto for_each_embedding(const Poset & host, const Poset & pattern, Mask within,
    const std::function<bool(const Embedding &)> & visit) -> void
{
    Embedder(host, pattern, within).run(visit);
}

auto find_embedding(const Poset & host, const Poset & pattern, Mask within) -> std::optional<Embedding>
{
    std::optional<Embedding> found;
    for_each_embedding(host, pattern, within, [&](const Embedding & e) {
        found = e;
        return false;
    });
    return found;
}

auto find_embedding(const Poset & host, const Poset & pattern) -> std::optional<Embedding>
{
    return find_embedding(host, pattern, host.ground());
}

auto enumerate_copies(const Poset & host, const Poset & pattern, Mask within) -> std::vector<CopySet>
{
    if (pattern.size() < 2)
        throw std::invalid_argument("copy enumeration needs a pattern with at least two elements");

    std::vector<CopySet> copies;
    for_each_embedding(host, pattern, within, [&](const Embedding & e) {
        Mask image = 0;
        for (int y : e)
            image |= bit(y);
        copies.push_back(image);
        return true;
    });
    std::sort(copies.begin(), copies.end(), lex_less);
    copies.erase(std::unique(copies.begin(), copies.end()), copies.end());
    return copies;
}

auto enumerate_copies(const Poset & host, const Poset & pattern) -> std::vector<CopySet>
{
    return enumerate_copies(host, pattern, host.ground());
}

auto is_free(const Poset & host, Mask s, const Poset & pattern) -> bool
{
    if (popcount(s & host.ground()) < pattern.size())
        return true;
    return ! find_embedding(host, pattern, s).has_value();
}

} // namespace chiac
