#include "coheyt/variety.hpp"

#include <algorithm>

namespace coheyt {

const char* variety_name(variety_tag v) {
    switch (v) {
    case variety_tag::V1: return "V1";
    case variety_tag::V2: return "V2";
    case variety_tag::V3: return "V3";
    case variety_tag::V4: return "V4";
    case variety_tag::V5: return "V5";
    case variety_tag::V6: return "V6";
    case variety_tag::V7: return "V7";
    case variety_tag::V8: return "V8";
    }
    return "?";
}

std::optional<variety_tag> variety_from_name(const std::string& s) {
    for (int k = 1; k <= 8; ++k) {
        variety_tag v = static_cast<variety_tag>(k);
        if (s == variety_name(v)) return v;
    }
    return std::nullopt;
}

namespace {

// the defining equations, evaluated on raw masks so the parallel scans stay
// free of shared-handle traffic
bool v2_eq(const poset& E, mask_t x) {
    mask_t nx = top_minus_mask(E, x);
    return (nx & top_minus_mask(E, nx)) == 0;
}
bool v3_eq(const poset& E, mask_t x, mask_t y) {
    return (diff_mask(E, top_minus_mask(E, x) & x, y) & y) == 0;
}
bool v4_extra_eq(const poset& E, mask_t x, mask_t y) {
    mask_t z = top_minus_mask(E, y);
    mask_t sym = diff_mask(E, x, z) | diff_mask(E, z, x);
    return (diff_mask(E, x, y) & diff_mask(E, y, x) & sym) == 0;
}
bool v6_eq(const poset& E, mask_t x, mask_t y) {
    return (diff_mask(E, x, y) & diff_mask(E, y, x)) == 0;
}
bool v7_eq(const poset& E, mask_t x) { return (top_minus_mask(E, x) & x) == 0; }

}

variety_report check_equational(const algebra& L, variety_tag v, scan_mode mode) {
    variety_report rep;
    if (v == variety_tag::V1) return rep;
    if (v == variety_tag::V8) {
        if (!L.trivial()) {
            rep.member = false;
            rep.detail = "1 != 0";
        }
        return rep;
    }
    std::vector<downset> elems = L.elements();
    std::vector<mask_t> ms(elems.size());
    for (std::size_t i = 0; i < elems.size(); ++i) ms[i] = elems[i].bits;
    const poset& E = *L.pos();
    std::uint64_t n = ms.size();
    bool pairs = v != variety_tag::V2 && v != variety_tag::V7;
    auto violated = [&, v](std::uint64_t idx) {
        mask_t x = ms[pairs ? idx / n : idx];
        mask_t y = ms[pairs ? idx % n : idx];
        switch (v) {
        case variety_tag::V2: return !v2_eq(E, x);
        case variety_tag::V3: return !v3_eq(E, x, y);
        case variety_tag::V4: return !v3_eq(E, x, y) || !v4_extra_eq(E, x, y);
        case variety_tag::V5: return !v2_eq(E, x) || !v3_eq(E, x, y);
        case variety_tag::V6: return !v6_eq(E, x, y);
        case variety_tag::V7: return !v7_eq(E, x);
        default: return false;
        }
    };
    std::uint64_t space = pairs ? n * n : n;
    auto hit = find_first(space, violated, mode);
    if (hit) {
        const downset& x = elems[pairs ? *hit / n : *hit];
        const downset& y = elems[pairs ? *hit % n : *hit];
        rep.member = false;
        rep.counterexample = {x, y};
        rep.detail = "equation fails at x = " + to_text(x) + (pairs ? ", y = " + to_text(y) : "");
    }
    return rep;
}

variety_report check_structural(const algebra& L, variety_tag v) {
    variety_report rep;
    const poset& E = *L.pos();
    mask_t maxima = E.maximal_of(E.full());
    auto fail = [&](std::string why) {
        rep.member = false;
        rep.detail = std::move(why);
        return rep;
    };
    switch (v) {
    case variety_tag::V1:
        return rep;
    case variety_tag::V2: {
        auto tops = mask_indices(maxima);
        for (std::size_t i = 0; i < tops.size(); ++i)
            for (std::size_t j = i + 1; j < tops.size(); ++j)
                if ((E.down(tops[i]) & E.down(tops[j])) != 0)
                    return fail("components of 1 at " + E.name(tops[i]) + " and " +
                                E.name(tops[j]) + " meet");
        return rep;
    }
    case variety_tag::V3: {
        for (unsigned i = 0; i < E.size(); ++i)
            if (!E.point_maximal(i) && !E.point_minimal(i))
                return fail("join irreducible " + E.name(i) + " neither maximal nor minimal");
        return rep;
    }
    case variety_tag::V4: {
        variety_report v3 = check_structural(L, variety_tag::V3);
        if (!v3.member) return v3;
        auto tops = mask_indices(maxima);
        for (std::size_t i = 0; i < tops.size(); ++i)
            for (std::size_t j = i + 1; j < tops.size(); ++j)
                for (std::size_t k = j + 1; k < tops.size(); ++k)
                    if ((E.down(tops[i]) & E.down(tops[j]) & E.down(tops[k])) != 0)
                        return fail("three components of 1 share a point");
        return rep;
    }
    case variety_tag::V5: {
        variety_report v2 = check_structural(L, variety_tag::V2);
        if (!v2.member) return v2;
        return check_structural(L, variety_tag::V3);
    }
    case variety_tag::V6: {
        unsigned f = std::max<unsigned>(1, E.size());
        if (!chain_product_embedding(L, f, E.size() + 1))
            return fail("no chain-product embedding within bounds (" + std::to_string(f) + "," +
                        std::to_string(E.size() + 1) + ")");
        return rep;
    }
    case variety_tag::V7: {
        for (unsigned i = 0; i < E.size(); ++i)
            if ((E.down(i) & ~mask_bit(i)) != 0)
                return fail("poset is not an antichain at " + E.name(i));
        return rep;
    }
    case variety_tag::V8: {
        if (!L.trivial()) return fail("more than one element");
        return rep;
    }
    }
    return rep;
}

namespace {

// finite algebras lie in V6 exactly when every point of the dual poset sees
// a chain above it
bool v6_up_chains(const poset& E) {
    for (unsigned i = 0; i < E.size(); ++i) {
        auto ups = mask_indices(E.up(i));
        for (std::size_t a = 0; a < ups.size(); ++a)
            for (std::size_t b = a + 1; b < ups.size(); ++b)
                if (!E.leq(ups[a], ups[b]) && !E.leq(ups[b], ups[a])) return false;
    }
    return true;
}

}

bool variety_holds(const algebra& L, variety_tag v) {
    if (v == variety_tag::V6) return v6_up_chains(*L.pos());
    return check_structural(L, v).member;
}

int dimension(const algebra& L) { return static_cast<int>(L.pos()->longest_chain()) - 1; }

std::vector<algebra> component_factorization(const algebra& L) {
    std::vector<algebra> out;
    for (mask_t comp : L.pos()->components()) out.emplace_back(induced_subposet(*L.pos(), comp));
    return out;
}

std::optional<embedding> chain_product_embedding(const algebra& L, unsigned max_factors,
                                                 unsigned max_height) {
    const poset& E = *L.pos();
    // no embedding exists at all unless every point sees a chain above it
    if (!v6_up_chains(E)) return std::nullopt;
    // factors: the maximal chains, one per minimal point
    std::vector<unsigned> minima = mask_indices(E.minimal_of(E.full()));
    if (minima.size() > max_factors) return std::nullopt;
    std::vector<poset_ptr> chains;
    std::vector<std::vector<unsigned>> chain_pts;
    for (unsigned m : minima) {
        std::vector<unsigned> pts = mask_indices(E.up(m));
        std::sort(pts.begin(), pts.end(),
                  [&](unsigned a, unsigned b) { return mask_popcount(E.down(a)) < mask_popcount(E.down(b)); });
        if (pts.size() + 1 > max_height) return std::nullopt;
        std::vector<std::string> names;
        std::vector<mask_t> below(pts.size(), 0);
        for (unsigned k = 0; k < pts.size(); ++k) {
            names.push_back(E.name(pts[k]));
            if (k > 0) below[k] = mask_bit(k - 1);
        }
        chains.push_back(build_poset_from_relation(std::move(names), std::move(below),
                                                   max_poset_width));
        chain_pts.push_back(std::move(pts));
    }
    poset_ptr prod = disjoint_union(chains);
    algebra dst(prod);
    // point offsets of each chain inside the union
    std::vector<unsigned> offset(chains.size(), 0);
    for (std::size_t k = 1; k < chains.size(); ++k)
        offset[k] = offset[k - 1] + chains[k - 1]->size();
    std::vector<downset> imgs;
    for (unsigned x = 0; x < E.size(); ++x) {
        mask_t m = 0;
        for (std::size_t k = 0; k < chains.size(); ++k)
            for (unsigned pos = 0; pos < chain_pts[k].size(); ++pos)
                if (E.leq(chain_pts[k][pos], x)) m |= mask_bit(offset[k] + pos);
        imgs.push_back(downset{prod, m});
    }
    embedding e = embedding::full(L, std::move(dst), std::move(imgs), "chain-product");
    if (L.count_elements(4096) <= 4096) {
        check_result chk = check_embedding(e);
        if (!chk.ok)
            raise(errc::lifting_fails, "chain-product construction broke: " + chk.violation);
    }
    return e;
}

}
