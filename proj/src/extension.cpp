#include "coheyt/extension.hpp"

#include <algorithm>

namespace coheyt {

signature make_signature(downset g, downset ha, downset hb, int r) {
    if (canonical_less(hb, ha)) std::swap(ha, hb);
    return signature{std::move(g), std::move(ha), std::move(hb), r};
}

std::string to_text(const signature& s) {
    std::string h = s.h1 == s.h2 ? to_text(s.h1) : to_text(s.h1) + "," + to_text(s.h2);
    return "(" + to_text(s.g) + ",{" + h + "}," + std::to_string(s.r) + ")";
}

bool signature_valid(const subalgebra& S, const signature& sig) {
    if (!S.contains(sig.g) || !S.contains(sig.h1) || !S.contains(sig.h2)) return false;
    downset gm = S.predecessor_join(sig.g);
    if (gm == sig.g || sig.g.is_empty()) return false;   // g must be join irreducible in S
    if (sig.r == 1) return sig.h1 == sig.h2 && leq(sig.h1, sig.g) && sig.h1 != sig.g;
    if (sig.r == 2) return join(sig.h1, sig.h2) == gm;
    return false;
}

std::vector<signature> enumerate_signatures(const subalgebra& S) {
    std::vector<signature> out;
    for (const auto& g : S.jir()) {
        downset gm = S.predecessor_join(g);
        for (const auto& h : S.carrier())
            if (h != g && leq(h, g)) out.push_back(make_signature(g, h, h, 1));
        for (std::size_t i = 0; i < S.carrier().size(); ++i)
            for (std::size_t j = i; j < S.carrier().size(); ++j) {
                const downset& h1 = S.carrier()[i];
                const downset& h2 = S.carrier()[j];
                if (join(h1, h2) == gm) out.push_back(make_signature(g, h1, h2, 2));
            }
    }
    return out;
}

std::optional<signature> primitive_check(const subalgebra& S, const downset& x1,
                                         const downset& x2) {
    const algebra& L = S.parent();
    if (x1.parent.get() != L.pos().get() || x2.parent.get() != L.pos().get())
        raise(errc::parent_mismatch, "tuple outside parent algebra");
    if (S.contains(x1) || S.contains(x2)) return std::nullopt;
    downset g = S.min_cover(x1);
    if (S.predecessor_join(g) == g || g.is_empty()) return std::nullopt;   // g not irreducible
    downset gm = S.predecessor_join(g);
    downset h1 = meet(gm, x1), h2 = meet(gm, x2);
    if (!S.contains(h1) || !S.contains(h2)) return std::nullopt;
    if (x1 == x2) {
        if (!strictly_way_below(h1, x1) || !strictly_way_below(x1, g)) return std::nullopt;
        return make_signature(g, h1, h1, 1);
    }
    if (S.min_cover(x2) != g) return std::nullopt;   // lemma: g(x1,L0) = g(x2,L0)
    if (!S.contains(meet(x1, x2))) return std::nullopt;
    if (diff(g, x1) != x2 || diff(g, x2) != x1) return std::nullopt;
    return make_signature(g, h1, h2, 2);
}

bool has_intermediate_subalgebra(const algebra& L, const subalgebra& S) {
    // a strictly intermediate subalgebra exists iff some outside element
    // generates, together with the carrier, less than all of L
    std::size_t all = L.count_elements();
    if (S.size() == all) return false;
    for (const auto& x : L.elements()) {
        if (S.contains(x)) continue;
        std::vector<downset> gens = S.carrier();
        gens.push_back(x);
        if (generated_subalgebra(L, std::move(gens)).size() < all) return true;
    }
    return false;
}

minimal_ext minimal_extension(const subalgebra& S, const signature& sig, bool verify_minimal) {
    if (!signature_valid(S, sig)) raise(errc::invalid_signature, to_text(sig));
    dualization d = dualize(S);
    const poset& F = *d.pos;
    unsigned n = F.size();
    downset gm = S.predecessor_join(sig.g);
    // locate g's point in the dual poset
    int gpt = -1;
    for (unsigned i = 0; i < n; ++i)
        if (d.jirs[i] == sig.g) gpt = static_cast<int>(i);
    if (gpt < 0) raise(errc::invalid_signature, "g is not join irreducible");

    auto fresh_name = [&](const std::vector<std::string>& taken, std::string base) {
        std::string nm = base;
        int k = 1;
        auto used = [&](const std::string& s) {
            return std::find(taken.begin(), taken.end(), s) != taken.end();
        };
        while (used(nm)) nm = base + "~" + std::to_string(k++);
        return nm;
    };

    std::vector<std::string> names;
    std::vector<mask_t> below;
    std::vector<int> old_to_new(n, -1);
    if (sig.r == 1) {
        for (unsigned i = 0; i < n; ++i) {
            names.push_back(F.name(i));
            below.push_back(F.down(i) & ~mask_bit(i));
            old_to_new[i] = static_cast<int>(i);
        }
        std::string sig_tag = to_text(sig);
        names.push_back(fresh_name(names, sig_tag + "!1"));
        unsigned xi = n;
        mask_t xi_below = 0;
        for (unsigned y = 0; y < n; ++y) {
            if (leq(d.jirs[y], sig.h1)) xi_below |= mask_bit(y);              // y < xi iff y <= h1
            if (leq(sig.g, d.jirs[y])) below[y] |= mask_bit(xi);              // xi < y iff g <= y
        }
        below.push_back(xi_below);
        poset_ptr E1 = build_poset_from_relation(names, below, max_poset_width);
        algebra L1(E1);
        std::vector<downset> elems, imgs;
        for (const auto& s : S.carrier()) {
            downset base = d.iota(S, s);
            mask_t m = 0;
            mask_for_each(base.bits, [&](unsigned y) { m |= E1->down(y); });
            elems.push_back(s);
            imgs.push_back(downset{E1, m});
        }
        embedding emb =
            embedding::on_carrier(S.parent(), L1, std::move(elems), std::move(imgs),
                                  "minimal-extension " + to_text(sig));
        downset x = principal(E1, xi);
        minimal_ext out{L1, std::move(emb), x, x};
        // postconditions
        check_result chk = check_embedding(out.emb);
        if (!chk.ok) raise(errc::invalid_signature, "construction broke: " + chk.violation);
        std::vector<downset> carrier_imgs = out.emb.images();
        subalgebra S1(L1, carrier_imgs);
        auto got = primitive_check(S1, out.x1, out.x2);
        signature expect =
            make_signature(out.emb.apply(sig.g), out.emb.apply(sig.h1), out.emb.apply(sig.h2), 1);
        if (!got || !(*got == expect))
            raise(errc::invalid_signature, "tuple does not realize " + to_text(sig));
        if (verify_minimal && n < 7 && has_intermediate_subalgebra(L1, S1))
            raise(errc::invalid_signature, "extension is not minimal");
        return out;
    }

    // r = 2: replace g's point by two new points
    std::vector<unsigned> keep;
    for (unsigned i = 0; i < n; ++i)
        if (static_cast<int>(i) != gpt) keep.push_back(i);
    for (unsigned k = 0; k < keep.size(); ++k) {
        names.push_back(F.name(keep[k]));
        old_to_new[keep[k]] = static_cast<int>(k);
    }
    std::string sig_tag = to_text(sig);
    std::string nm1 = fresh_name(names, sig_tag + "!1");
    names.push_back(nm1);
    names.push_back(fresh_name(names, sig_tag + "!2"));
    unsigned xi1 = static_cast<unsigned>(keep.size());
    unsigned xi2 = xi1 + 1;
    below.assign(keep.size() + 2, 0);
    for (unsigned k = 0; k < keep.size(); ++k) {
        unsigned y = keep[k];
        mask_for_each(F.down(y) & ~mask_bit(y), [&](unsigned z) {
            if (old_to_new[z] >= 0) below[k] |= mask_bit(static_cast<unsigned>(old_to_new[z]));
        });
        // xi_i < y iff g <= y (y != g)
        if (leq(sig.g, d.jirs[y])) below[k] |= mask_bit(xi1) | mask_bit(xi2);
        // y < xi_i iff y <= h_i
        if (leq(d.jirs[y], sig.h1)) below[xi1] |= mask_bit(k);
        if (leq(d.jirs[y], sig.h2)) below[xi2] |= mask_bit(k);
    }
    poset_ptr E1 = build_poset_from_relation(names, below, max_poset_width);
    algebra L1(E1);
    // embedding: pi sends xi1, xi2 to g's point and keeps the rest
    std::vector<downset> elems, imgs;
    for (const auto& s : S.carrier()) {
        downset base = d.iota(S, s);
        mask_t m = 0;
        mask_for_each(base.bits, [&](unsigned y) {
            if (old_to_new[y] >= 0)
                m |= mask_bit(static_cast<unsigned>(old_to_new[y]));
            else
                m |= mask_bit(xi1) | mask_bit(xi2);
        });
        elems.push_back(s);
        imgs.push_back(downset{E1, m});
    }
    embedding emb = embedding::on_carrier(S.parent(), L1, std::move(elems), std::move(imgs),
                                          "minimal-extension " + to_text(sig));
    minimal_ext out{L1, std::move(emb), principal(E1, xi1), principal(E1, xi2)};
    check_result chk = check_embedding(out.emb);
    if (!chk.ok) raise(errc::invalid_signature, "construction broke: " + chk.violation);
    std::vector<downset> carrier_imgs = out.emb.images();
    subalgebra S1(L1, carrier_imgs);
    auto got = primitive_check(S1, out.x1, out.x2);
    signature expect = make_signature(out.emb.apply(sig.g), out.emb.apply(sig.h1),
                                      out.emb.apply(sig.h2), 2);
    if (!got || !(*got == expect))
        raise(errc::invalid_signature, "tuple does not realize " + to_text(sig));
    if (verify_minimal && n < 7 && has_intermediate_subalgebra(L1, S1))
        raise(errc::invalid_signature, "extension is not minimal");
    return out;
}

namespace {

// backtracking order isomorphism search between small posets, constrained to
// send fixed downsets onto fixed downsets
struct iso_search {
    const poset& A;
    const poset& B;
    const std::vector<downset>& fixA;
    const std::vector<downset>& fixB;
    std::vector<int> map;     // A point -> B point
    std::vector<bool> used;   // B point taken

    bool compatible(unsigned a, unsigned b) const {
        if (mask_popcount(A.down(a)) != mask_popcount(B.down(b))) return false;
        if (mask_popcount(A.up(a)) != mask_popcount(B.up(b))) return false;
        for (unsigned a2 = 0; a2 < A.size(); ++a2) {
            if (map[a2] < 0) continue;
            if (A.leq(a, a2) != B.leq(b, static_cast<unsigned>(map[a2]))) return false;
            if (A.leq(a2, a) != B.leq(static_cast<unsigned>(map[a2]), b)) return false;
        }
        // a fixed downset must contain a exactly when its partner contains b
        for (std::size_t k = 0; k < fixA.size(); ++k)
            if (mask_test(fixA[k].bits, a) != mask_test(fixB[k].bits, b)) return false;
        return true;
    }

    bool run(unsigned a) {
        if (a == A.size()) return true;
        for (unsigned b = 0; b < B.size(); ++b) {
            if (used[b] || !compatible(a, b)) continue;
            map[a] = static_cast<int>(b);
            used[b] = true;
            if (run(a + 1)) return true;
            map[a] = -1;
            used[b] = false;
        }
        return false;
    }
};

}

std::optional<embedding> iso_over(const algebra& L1, const std::vector<downset>& fix1,
                                  const algebra& L2, const std::vector<downset>& fix2) {
    if (fix1.size() != fix2.size()) raise(errc::index_out_of_range, "fixed carriers differ in size");
    const poset& A = *L1.pos();
    const poset& B = *L2.pos();
    if (A.size() != B.size()) return std::nullopt;
    iso_search srch{A, B, fix1, fix2, std::vector<int>(A.size(), -1),
                    std::vector<bool>(B.size(), false)};
    if (!srch.run(0)) return std::nullopt;
    std::vector<downset> imgs;
    for (unsigned a = 0; a < A.size(); ++a)
        imgs.push_back(principal(L2.pos(), static_cast<unsigned>(srch.map[a])));
    embedding e = embedding::full(L1, L2, std::move(imgs), "iso-over");
    check_result chk = check_embedding(e);
    if (!chk.ok) raise(errc::lifting_fails, "iso search produced a non-isomorphism: " + chk.violation);
    return e;
}

primitive_tuple find_primitive_tuple(const algebra& L, const subalgebra& S) {
    // any x minimal in I(L) \ L0, ties broken by the canonical element order
    std::vector<downset> candidates;
    for (const auto& x : L.jir())
        if (!S.contains(x)) candidates.push_back(x);
    if (candidates.empty()) raise(errc::not_proper, "subalgebra is all of L");
    std::vector<downset> minimal;
    for (const auto& x : candidates) {
        bool is_min = true;
        for (const auto& y : candidates)
            if (y != x && leq(y, x)) is_min = false;
        if (is_min) minimal.push_back(x);
    }
    std::sort(minimal.begin(), minimal.end(), canonical_less);
    downset x = minimal.front();
    downset g = S.min_cover(x);
    downset x2 = strictly_way_below(x, g) ? x : diff(g, x);
    auto sig = primitive_check(S, x, x2);
    if (!sig) raise(errc::not_proper, "tuple construction failed at " + to_text(x));
    return primitive_tuple{x, x2, *sig};
}

std::vector<std::pair<subalgebra, primitive_tuple>> primitive_tower(const algebra& L,
                                                                    const subalgebra& S) {
    std::vector<std::pair<subalgebra, primitive_tuple>> out;
    std::size_t all = L.count_elements();
    subalgebra cur = S;
    while (cur.size() < all) {
        primitive_tuple t = find_primitive_tuple(L, cur);
        out.emplace_back(cur, t);
        std::vector<downset> gens = cur.carrier();
        gens.push_back(t.x1);
        gens.push_back(t.x2);
        cur = generated_subalgebra(L, std::move(gens));
    }
    return out;
}

}
