#include <chiac/canonical.hpp>

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace chiac {

namespace {
    using Colours = std::vector<int>;

    // Replace colours by their dense ranks under the order of keys.
    template <typename Key>
    auto rank_by(const std::vector<Key> & keys) -> std::pair<Colours, int>
    {
        int n = static_cast<int>(keys.size());
        std::vector<int> order(n);
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int a, int b) { return keys[a] < keys[b]; });
        Colours result(n);
        int rank = -1;
        for (int i = 0; i < n; ++i) {
            if (i == 0 || keys[order[i - 1]] < keys[order[i]])
                ++rank;
            result[order[i]] = rank;
        }
        return {result, rank + 1};
    }

    auto colour_count(const Colours & col) -> int
    {
        return col.empty() ? 0 : *std::max_element(col.begin(), col.end()) + 1;
    }

    // Equitable refinement against strict up- and down-neighbourhoods.
    auto refine(const Poset & p, Colours col) -> Colours
    {
        int n = p.size();
        int classes = colour_count(col);
        std::vector<std::vector<int>> signatures(n);
        while (true) {
            for (int v = 0; v < n; ++v) {
                auto & sig = signatures[v];
                sig.assign(1 + 2 * classes, 0);
                sig[0] = col[v];
                for (int u : elements_of(p.above(v)))
                    ++sig[1 + col[u]];
                for (int u : elements_of(p.below(v)))
                    ++sig[1 + classes + col[u]];
            }
            auto [next, next_classes] = rank_by(signatures);
            col = std::move(next);
            if (next_classes == classes)
                return col;
            classes = next_classes;
        }
    }

    auto individualise(const Poset & p, const Colours & col, int v) -> Colours
    {
        std::vector<int> keys(col.size());
        for (std::size_t u = 0; u < col.size(); ++u)
            keys[u] = 2 * col[u] + ((static_cast<int>(u) != v && col[u] == col[v]) ? 1 : 0);
        return refine(p, rank_by(keys).first);
    }

    auto encode(const Poset & p, const std::vector<int> & old_of_new) -> std::vector<std::uint8_t>
    {
        int n = p.size();
        std::vector<std::uint8_t> bytes(1 + (n * n + 7) / 8, 0);
        bytes[0] = static_cast<std::uint8_t>(n);
        int pos = 0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j, ++pos)
                if (p.less(old_of_new[i], old_of_new[j]))
                    bytes[1 + pos / 8] |= static_cast<std::uint8_t>(1U << (pos % 8));
        return bytes;
    }

    struct Search {
        const Poset & p;
        std::vector<std::uint8_t> best_code;
        std::vector<int> best_labelling;

        auto run(const Colours & col) -> void
        {
            int n = p.size();
            int classes = colour_count(col);
            if (classes == n) {
                std::vector<int> old_of_new(n);
                for (int v = 0; v < n; ++v)
                    old_of_new[col[v]] = v;
                auto code = encode(p, old_of_new);
                if (best_labelling.empty() || code < best_code) {
                    best_code = std::move(code);
                    best_labelling = std::move(old_of_new);
                }
                return;
            }

            // First non-singleton cell, chosen by colour so the choice is
            // labelling-invariant.
            std::vector<int> cell_size(classes, 0);
            for (int c : col)
                ++cell_size[c];
            int target = 0;
            while (cell_size[target] < 2)
                ++target;

            std::vector<int> tried;
            for (int v = 0; v < n; ++v) {
                if (col[v] != target)
                    continue;
                // Swapping two twins is an automorphism fixing everything
                // individualised so far, so their subtrees give the same codes.
                bool twin_of_tried = std::any_of(tried.begin(), tried.end(), [&](int t) {
                    return p.above(t) == p.above(v) && p.below(t) == p.below(v);
                });
                if (twin_of_tried)
                    continue;
                tried.push_back(v);
                run(individualise(p, col, v));
            }
        }
    };

    auto search(const Poset & p) -> Search
    {
        Search s{p, {}, {}};
        s.run(refine(p, Colours(p.size(), 0)));
        return s;
    }
}

auto CanonicalForm::hex() const -> std::string
{
    static constexpr char digits[] = "0123456789abcdef";
    std::string result;
    result.reserve(bytes.size() * 2);
    for (auto b : bytes) {
        result.push_back(digits[b >> 4]);
        result.push_back(digits[b & 0xF]);
    }
    return result;
}

auto CanonicalForm::from_hex(const std::string & text) -> CanonicalForm
{
    auto nibble = [&](char c) -> int {
        if (c >= '0' && c <= '9')
            return c - '0';
        if (c >= 'a' && c <= 'f')
            return c - 'a' + 10;
        if (c >= 'A' && c <= 'F')
            return c - 'A' + 10;
        throw std::invalid_argument("bad hex digit in fingerprint '" + text + "'");
    };
    if (text.size() % 2 != 0)
        throw std::invalid_argument("odd-length fingerprint '" + text + "'");
    CanonicalForm form;
    for (std::size_t i = 0; i < text.size(); i += 2)
        form.bytes.push_back(static_cast<std::uint8_t>(nibble(text[i]) * 16 + nibble(text[i + 1])));
    return form;
}

auto canonical_labelling(const Poset & p) -> std::vector<int>
{
    return search(p).best_labelling;
}

auto canonical_form(const Poset & p) -> CanonicalForm
{
    return CanonicalForm{search(p).best_code};
}

auto canonical_poset(const Poset & p) -> Poset
{
    auto result = relabel(p, canonical_labelling(p));
    result.set_name(p.name());
    return result;
}

auto poset_from_form(const CanonicalForm & form) -> Poset
{
    if (form.bytes.empty())
        throw std::invalid_argument("empty fingerprint");
    int n = form.bytes[0];
    if (n < 1 || form.bytes.size() != static_cast<std::size_t>(1 + (n * n + 7) / 8))
        throw std::invalid_argument("fingerprint length does not match its element count");
    std::vector<Relation> pairs;
    int pos = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j, ++pos)
            if ((form.bytes[1 + pos / 8] >> (pos % 8)) & 1U)
                pairs.emplace_back(i, j);
    auto result = Poset::from_relations(n, pairs);
    if (result.relation_count() != static_cast<int>(pairs.size()))
        throw std::invalid_argument("fingerprint does not encode a transitively closed order");
    return result;
}

auto is_isomorphic(const Poset & p, const Poset & q) -> bool
{
    if (p.size() != q.size() || p.relation_count() != q.relation_count())
        return false;
    return canonical_form(p) == canonical_form(q);
}

} // namespace chiac
