#include <chiac/catalogue.hpp>
#include <chiac/named.hpp>

#include "parallel.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>

namespace chiac {

namespace {
    auto sort_unique(std::vector<CanonicalForm> & forms) -> void
    {
        std::sort(forms.begin(), forms.end());
        forms.erase(std::unique(forms.begin(), forms.end()), forms.end());
    }

    auto for_each_antichain(const Poset & p, int from, Mask chosen, Mask forbidden, std::vector<Mask> & out) -> void
    {
        out.push_back(chosen);
        for (int v = from; v < p.size(); ++v)
            if (! contains(forbidden, v))
                for_each_antichain(p, v + 1, chosen | bit(v), forbidden | p.comparable_to(v), out);
    }

    auto extensions(const Poset & base) -> std::vector<CanonicalForm>
    {
        std::vector<Mask> antichains;
        for_each_antichain(base, 0, 0, 0, antichains);

        int n = base.size() + 1;
        std::vector<Mask> up(n, 0);
        std::vector<CanonicalForm> forms;
        forms.reserve(antichains.size());
        for (auto a : antichains) {
            Mask ideal = a;
            for (int x : elements_of(a))
                ideal |= base.below(x);
            for (int x = 0; x < base.size(); ++x)
                up[x] = base.above(x) | (contains(ideal, x) ? bit(n - 1) : 0);
            up[n - 1] = 0;
            forms.push_back(canonical_form(Poset::from_up_sets(up)));
        }
        return forms;
    }

    auto members_from_forms(const std::vector<CanonicalForm> & forms) -> std::vector<Poset>
    {
        std::vector<Poset> members;
        members.reserve(forms.size());
        for (auto & form : forms)
            members.push_back(poset_from_form(form));
        return members;
    }
}

auto generate_all(int n, int threads) -> PosetCatalogue
{
    if (n < 1 || n > max_elements)
        throw std::invalid_argument("catalogue size " + std::to_string(n) + " outside 1.." + std::to_string(max_elements));
    if (n == 1)
        return PosetCatalogue{1, {antichain(1)}};

    const auto & previous = catalogue(n - 1);
    std::vector<std::vector<CanonicalForm>> per_member(previous.members.size());
    detail::parallel_for(previous.members.size(), threads,
        [&](std::size_t i) { per_member[i] = extensions(previous.members[i]); });

    std::vector<CanonicalForm> forms;
    for (auto & batch : per_member)
        forms.insert(forms.end(), batch.begin(), batch.end());
    sort_unique(forms);
    return PosetCatalogue{n, members_from_forms(forms)};
}

namespace {
    auto grow_naturally(int n, int next, std::vector<Mask> & up, std::vector<Mask> & down,
        std::vector<CanonicalForm> & out) -> void
    {
        if (next == n) {
            out.push_back(canonical_form(Poset::from_up_sets(up)));
            return;
        }
        Mask limit = Mask{1} << next;
        for (Mask s = 0; s < limit; ++s) {
            bool down_closed = true;
            for (int x : elements_of(s))
                if ((down[x] & ~s) != 0) {
                    down_closed = false;
                    break;
                }
            if (! down_closed)
                continue;
            for (int x : elements_of(s))
                up[x] |= bit(next);
            down[next] = s;
            grow_naturally(n, next + 1, up, down, out);
            for (int x : elements_of(s))
                up[x] &= ~bit(next);
        }
        down[next] = 0;
    }
}

auto generate_forms_by_filtering(int n) -> std::vector<CanonicalForm>
{
    if (n < 1 || n > 12)
        throw std::invalid_argument("filtering generation is limited to 1..12 elements");
    std::vector<Mask> up(n, 0), down(n, 0);
    std::vector<CanonicalForm> forms;
    grow_naturally(n, 0, up, down, forms);
    sort_unique(forms);
    return forms;
}

auto catalogue(int n) -> const PosetCatalogue &
{
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<PosetCatalogue>> memo;

    {
        std::lock_guard lock(mutex);
        if (auto it = memo.find(n); it != memo.end())
            return *it->second;
    }
    // Generated outside the lock: generate_all(n) recurses into catalogue(n-1).
    auto generated = std::make_unique<PosetCatalogue>(generate_all(n));
    std::lock_guard lock(mutex);
    auto [it, inserted] = memo.try_emplace(n, std::move(generated));
    return *it->second;
}

auto catalogue_range(int min_size, int max_size) -> std::vector<const Poset *>
{
    std::vector<const Poset *> result;
    for (int n = std::max(1, min_size); n <= max_size; ++n)
        for (auto & p : catalogue(n).members)
            result.push_back(&p);
    return result;
}

auto published_poset_count(int n) -> std::optional<std::uint64_t>
{
    static constexpr std::uint64_t counts[] = {1, 1, 2, 5, 16, 63, 318, 2045, 16999, 183231, 2567284};
    if (n < 0 || n > 10)
        return std::nullopt;
    return counts[n];
}

} // namespace chiac
