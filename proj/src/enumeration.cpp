#include "coheyt/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <numeric>

namespace coheyt {

namespace {

// encoding of a labeled strict order as one row mask per point
std::vector<std::uint64_t> encode(const poset& p, const std::vector<unsigned>& perm) {
    unsigned n = p.size();
    std::vector<std::uint64_t> code(n, 0);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j)
            if (i != j && p.leq(perm[i], perm[j])) code[i] |= std::uint64_t(1) << j;
    return code;
}

}

canonical_form canonical_form_of(const poset& p) {
    unsigned n = p.size();
    canonical_form best{n, {}};
    if (n == 0) return best;
    // points grouped by an isomorphism invariant to cut the permutation space
    std::vector<unsigned> key(n);
    for (unsigned i = 0; i < n; ++i)
        key[i] = mask_popcount(p.down(i)) * (max_poset_width + 1) + mask_popcount(p.up(i));
    std::vector<unsigned> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end(), [&](unsigned a, unsigned b) {
        if (key[a] != key[b]) return key[a] < key[b];
        return a < b;
    });
    bool first = true;
    do {
        // only permutations preserving the invariant classes can be minimal
        bool keys_sorted = true;
        for (unsigned i = 0; i + 1 < n && keys_sorted; ++i)
            if (key[perm[i]] > key[perm[i + 1]]) keys_sorted = false;
        if (!keys_sorted) continue;
        auto code = encode(p, perm);
        if (first || code < best.code) {
            best.code = std::move(code);
            first = false;
        }
    } while (std::next_permutation(perm.begin(), perm.end(), [&](unsigned a, unsigned b) {
        if (key[a] != key[b]) return key[a] < key[b];
        return a < b;
    }));
    return best;
}

static std::atomic<unsigned> g_enum_cap{7};

unsigned enumerate_posets_cap() { return g_enum_cap.load(); }
void set_enumerate_posets_cap(unsigned cap) { g_enum_cap.store(cap); }

std::vector<poset_ptr> enumerate_posets(unsigned n) {
    if (n > enumerate_posets_cap())
        raise(errc::cap_exceeded,
              "poset enumeration capped at " + std::to_string(enumerate_posets_cap()));
    std::vector<std::string> names;
    for (unsigned i = 0; i < n; ++i) names.push_back("p" + std::to_string(i));
    if (n == 0) {
        return {build_poset(names, {})};
    }
    // every poset admits a labeling where the labels form a linear extension,
    // so candidate strict orders live inside the upper triangle
    std::vector<std::pair<unsigned, unsigned>> slots;
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = i + 1; j < n; ++j) slots.emplace_back(i, j);
    std::map<canonical_form, poset_ptr> classes;
    std::uint64_t total = std::uint64_t(1) << slots.size();
    for (std::uint64_t bits = 0; bits < total; ++bits) {
        std::vector<mask_t> below(n, 0);
        for (std::size_t s = 0; s < slots.size(); ++s)
            if ((bits >> s) & 1) below[slots[s].second] |= mask_bit(slots[s].first);
        // transitivity filter (antisymmetry holds by upper-triangularity)
        bool transitive = true;
        std::vector<mask_t> down(n);
        for (unsigned i = 0; i < n && transitive; ++i) {
            down[i] = below[i] | mask_bit(i);
            mask_t acc = down[i];
            mask_for_each(below[i], [&](unsigned j) { acc |= down[j]; });
            if (acc != down[i]) transitive = false;
        }
        if (!transitive) continue;
        auto p = std::make_shared<poset>(names, down);
        canonical_form cf = canonical_form_of(*p);
        classes.emplace(std::move(cf), std::move(p));
    }
    std::vector<poset_ptr> out;
    for (auto& [cf, p] : classes) out.push_back(p);
    return out;
}

std::vector<subalgebra> enumerate_subalgebras(const algebra& L, std::size_t element_cap) {
    if (L.count_elements(element_cap) > element_cap)
        raise(errc::cap_exceeded, "algebra larger than subalgebra-enumeration cap");
    std::vector<downset> elems = L.elements(element_cap);
    // breadth-first closure walk: every subalgebra is reachable from {0,1}
    // by repeatedly adjoining one element and closing
    auto key_of = [](const std::vector<downset>& carrier) {
        std::vector<mask_t> k;
        for (const auto& d : carrier) k.push_back(d.bits);
        return k;
    };
    std::map<std::vector<mask_t>, subalgebra> seen;
    subalgebra start = generated_subalgebra(L, {});
    seen.emplace(key_of(start.carrier()), start);
    std::vector<subalgebra> frontier{start};
    while (!frontier.empty()) {
        std::vector<subalgebra> next;
        for (const auto& S : frontier) {
            for (const auto& x : elems) {
                if (S.contains(x)) continue;
                std::vector<downset> gens = S.carrier();
                gens.push_back(x);
                subalgebra grown = generated_subalgebra(L, std::move(gens));
                auto key = key_of(grown.carrier());
                if (seen.find(key) == seen.end()) {
                    seen.emplace(std::move(key), grown);
                    next.push_back(std::move(grown));
                }
            }
        }
        frontier = std::move(next);
    }
    std::vector<subalgebra> out;
    for (auto& [k, S] : seen) out.push_back(S);
    std::sort(out.begin(), out.end(), [](const subalgebra& a, const subalgebra& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a.carrier()[i].bits != b.carrier()[i].bits)
                return mask_canonical_less(a.carrier()[i].bits, b.carrier()[i].bits);
        }
        return false;
    });
    return out;
}

}
