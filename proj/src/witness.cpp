#include "coheyt/witness.hpp"

#include <algorithm>

#include "coheyt/enumeration.hpp"

namespace coheyt {

namespace {

std::string fresh(const std::vector<std::string>& taken, std::string base) {
    auto used = [&](const std::string& s) {
        return std::find(taken.begin(), taken.end(), s) != taken.end();
    };
    std::string nm = base;
    int k = 1;
    while (used(nm)) nm = base + "~" + std::to_string(k++);
    return nm;
}

variety_tag variety_of(int variant) { return static_cast<variety_tag>(variant); }

void require_variant(int variant) {
    if (variant < 1 || variant > 6)
        raise(errc::variety_mismatch, "witness constructions cover V1..V6 only");
}

[[noreturn]] void broken(const std::string& what) {
    throw std::logic_error("witness construction postcondition failed: " + what);
}

void verify_extension(const algebra& ext, const embedding& emb, int variant) {
    std::size_t count = ext.count_elements(1024);
    if (emb.src().count_elements(1024) <= 1024 && count <= 1024) {
        check_result chk = check_embedding(emb);
        if (!chk.ok) broken(chk.violation);
    }
    variety_tag v = variety_of(variant);
    if (!variety_holds(ext, v)) broken(std::string("extension left ") + variety_name(v));
    if (count <= 128 && !check_equational(ext, v).member)
        broken(std::string("extension fails the ") + variety_name(v) + " equation");
}

}

mask_t extension_plan::mark(const std::string& name) const {
    for (const auto& [k, m] : marks)
        if (k == name) return m;
    raise(errc::index_out_of_range, "no plan mark named " + name);
}

bool density_hypothesis(const algebra&, int variant, const downset& a, const downset& c,
                        std::string* why) {
    auto no = [&](const char* w) {
        if (why) *why = w;
        return false;
    };
    if (a.is_empty()) return no("a = 0");
    if (variant == 3 || variant == 4 || variant == 5) {
        if (!c.is_empty()) return no("c must be 0 for the D3 family");
        if (top_minus(top_minus(a)) != a) return no("a != 1-(1-a)");
        return true;
    }
    if (!strictly_way_below(c, a)) return no("c not strictly way below a");
    return true;
}

bool splitting_hypothesis(const algebra&, int variant, const downset& a, const downset& b1,
                          const downset& b2, std::string* why) {
    auto no = [&](const char* w) {
        if (why) *why = w;
        return false;
    };
    if (a.is_empty()) return no("a = 0");
    if (!strictly_way_below(join(b1, b2), a)) return no("b1 v b2 not strictly way below a");
    downset bb = meet(b1, b2);
    if ((variant == 2 || variant == 5) && !meet(bb, top_minus(top_minus(a))).is_empty())
        return no("b1 ^ b2 ^ (1-(1-a)) != 0");
    if (variant == 4 && !meet(bb, top_minus(a)).is_empty())
        return no("b1 ^ b2 ^ (1-a) != 0");
    if (variant == 6 && !bb.is_empty()) return no("b1 ^ b2 != 0");
    return true;
}

bool splitting_witness_ok(const downset& a, const downset& b1, const downset& b2,
                          const downset& a1, const downset& a2) {
    return !a1.is_empty() && !a2.is_empty() && diff(a, a2) == a1 && diff(a, a1) == a2 &&
           leq(b1, a1) && leq(b2, a2) && meet(a1, a2) == meet(b1, b2);
}

namespace {

bool density_hypothesis_mask(const poset& E, int variant, mask_t a, mask_t c) {
    if (a == 0) return false;
    if (variant == 3 || variant == 4 || variant == 5)
        return c == 0 && top_minus_mask(E, top_minus_mask(E, a)) == a;
    return way_below_mask(E, c, a);
}

bool splitting_hypothesis_mask(const poset& E, int variant, mask_t a, mask_t b1, mask_t b2) {
    if (a == 0 || !way_below_mask(E, b1 | b2, a)) return false;
    mask_t bb = b1 & b2;
    if ((variant == 2 || variant == 5) && (bb & top_minus_mask(E, top_minus_mask(E, a))) != 0)
        return false;
    if (variant == 4 && (bb & top_minus_mask(E, a)) != 0) return false;
    if (variant == 6 && bb != 0) return false;
    return true;
}

bool splitting_witness_ok_mask(const poset& E, mask_t a, mask_t b1, mask_t b2, mask_t a1,
                               mask_t a2) {
    return a1 != 0 && a2 != 0 && diff_mask(E, a, a2) == a1 && diff_mask(E, a, a1) == a2 &&
           (b1 & ~a1) == 0 && (b2 & ~a2) == 0 && (a1 & a2) == (b1 & b2);
}

}

axiom_report check_density(const algebra& L, int variant, scan_mode mode) {
    require_variant(variant);
    axiom_report rep{'D', variant, true, {}};
    std::vector<downset> elems = L.elements();
    std::vector<mask_t> ms(elems.size());
    for (std::size_t i = 0; i < elems.size(); ++i) ms[i] = elems[i].bits;
    const poset& E = *L.pos();
    std::uint64_t n = ms.size();
    bool d3_family = variant == 3 || variant == 4 || variant == 5;
    std::uint64_t space = d3_family ? n : n * n;
    std::vector<int> result(space, -2);   // -2 no hypothesis, -1 fail, >= 0 witness index
    for_each_index(
        space,
        [&](std::uint64_t idx) {
            mask_t a = ms[d3_family ? idx : idx / n];
            mask_t c = d3_family ? 0 : ms[idx % n];
            if (!density_hypothesis_mask(E, variant, a, c)) return;
            for (std::uint64_t w = 0; w < n; ++w) {
                mask_t b = ms[w];
                if (b != 0 && way_below_mask(E, c, b) && way_below_mask(E, b, a)) {
                    result[idx] = static_cast<int>(w);
                    return;
                }
            }
            result[idx] = -1;
        },
        mode);
    for (std::uint64_t idx = 0; idx < space; ++idx) {
        if (result[idx] == -2) continue;
        const downset& a = elems[d3_family ? idx : idx / n];
        const downset& c = d3_family ? elems[0] : elems[idx % n];
        axiom_instance inst{{a, c}, std::nullopt};
        if (result[idx] >= 0)
            inst.witness = std::vector<downset>{elems[static_cast<std::size_t>(result[idx])]};
        else
            rep.holds = false;
        rep.instances.push_back(std::move(inst));
    }
    return rep;
}

axiom_report check_splitting(const algebra& L, int variant, scan_mode mode) {
    require_variant(variant);
    axiom_report rep{'S', variant, true, {}};
    std::vector<downset> elems = L.elements();
    std::vector<mask_t> ms(elems.size());
    for (std::size_t i = 0; i < elems.size(); ++i) ms[i] = elems[i].bits;
    const poset& E = *L.pos();
    std::uint64_t n = ms.size();
    std::uint64_t space = n * n * n;
    std::vector<long> result(space, -2);
    for_each_index(
        space,
        [&](std::uint64_t idx) {
            mask_t a = ms[idx / (n * n)];
            mask_t b1 = ms[(idx / n) % n];
            mask_t b2 = ms[idx % n];
            if (!splitting_hypothesis_mask(E, variant, a, b1, b2)) return;
            for (std::uint64_t w = 0; w < n * n; ++w) {
                if (splitting_witness_ok_mask(E, a, b1, b2, ms[w / n], ms[w % n])) {
                    result[idx] = static_cast<long>(w);
                    return;
                }
            }
            result[idx] = -1;
        },
        mode);
    for (std::uint64_t idx = 0; idx < space; ++idx) {
        if (result[idx] == -2) continue;
        axiom_instance inst{{elems[idx / (n * n)], elems[(idx / n) % n], elems[idx % n]},
                            std::nullopt};
        if (result[idx] >= 0) {
            std::uint64_t w = static_cast<std::uint64_t>(result[idx]);
            inst.witness = std::vector<downset>{elems[w / n], elems[w % n]};
        } else {
            rep.holds = false;
        }
        rep.instances.push_back(std::move(inst));
    }
    return rep;
}

extension_plan d1_plan(const algebra& L, const downset& a) {
    const poset& E = *L.pos();
    std::vector<unsigned> comps = mask_indices(E.maximal_of(a.bits));
    std::vector<std::string> names = E.names();
    std::vector<mask_t> below(E.size());
    for (unsigned i = 0; i < E.size(); ++i) below[i] = E.down(i) & ~mask_bit(i);
    std::vector<unsigned> pi(E.size());
    for (unsigned i = 0; i < E.size(); ++i) pi[i] = i;
    mask_t bmask = 0;
    for (unsigned k = 0; k < comps.size(); ++k) {
        unsigned ai = comps[k];
        unsigned alpha = static_cast<unsigned>(names.size());
        names.push_back(fresh(names, E.name(ai) + "#1"));
        below.push_back(E.down(ai) & ~mask_bit(ai));   // x < alpha iff x < a_i
        for (unsigned x = 0; x < E.size(); ++x)        // alpha < x iff a_i <= x
            if (E.leq(ai, x)) below[x] |= mask_bit(alpha);
        pi.push_back(ai);
        bmask |= mask_bit(alpha);
    }
    extension_plan plan;
    plan.index = build_poset_from_relation(std::move(names), std::move(below), max_poset_width);
    plan.pi = std::move(pi);
    plan.marks.emplace_back("b", plan.index->closure(bmask));
    return plan;
}

extension_plan s1_plan(const algebra& L, const downset& b1, const downset& b2) {
    const poset& E = *L.pos();
    mask_t both = b1.bits & b2.bits;
    std::vector<std::string> names;
    std::vector<unsigned> pi;
    std::vector<std::array<int, 3>> slot(E.size(), {-1, -1, -1});
    for (unsigned x = 0; x < E.size(); ++x) {
        auto add = [&](int j) {
            slot[x][j] = static_cast<int>(names.size());
            names.push_back(fresh(names, E.name(x) + "#" + std::to_string(j)));
            pi.push_back(x);
        };
        if (mask_test(both, x)) add(0);
        if (!mask_test(b2.bits, x)) add(1);
        if (!mask_test(b1.bits, x)) add(2);
    }
    std::vector<mask_t> below(names.size(), 0);
    for (unsigned x = 0; x < E.size(); ++x)
        for (int i = 0; i < 3; ++i) {
            if (slot[x][i] < 0) continue;
            for (unsigned y = 0; y < E.size(); ++y)
                for (int j = 0; j < 3; ++j) {
                    if (slot[y][j] < 0) continue;
                    bool excluded = (i == 1 && j == 2) || (i == 2 && j == 1);
                    if (excluded || !E.leq(y, x)) continue;
                    if (slot[y][j] != slot[x][i])
                        below[slot[x][i]] |= mask_bit(static_cast<unsigned>(slot[y][j]));
                }
        }
    extension_plan plan;
    plan.index = build_poset_from_relation(std::move(names), std::move(below), max_poset_width);
    plan.pi = std::move(pi);
    mask_t m1 = 0, m2 = 0;
    for (unsigned x = 0; x < E.size(); ++x) {
        if (slot[x][1] >= 0) m1 |= mask_bit(static_cast<unsigned>(slot[x][1]));
        if (slot[x][2] >= 0) m2 |= mask_bit(static_cast<unsigned>(slot[x][2]));
    }
    plan.marks.emplace_back("side1", m1);
    plan.marks.emplace_back("side2", m2);
    return plan;
}

namespace {

// --- per-factor machinery -------------------------------------------------

struct factor_view {
    std::vector<mask_t> comp_masks;
    std::vector<std::vector<unsigned>> pts;   // global points per factor
    std::vector<algebra> factors;
};

factor_view split_into_factors(const algebra& L) {
    factor_view fv;
    for (mask_t comp : L.pos()->components()) {
        fv.comp_masks.push_back(comp);
        fv.pts.push_back(mask_indices(comp));
        fv.factors.emplace_back(induced_subposet(*L.pos(), comp));
    }
    return fv;
}

downset restrict_to(const factor_view& fv, std::size_t k, const downset& d) {
    mask_t m = 0;
    for (unsigned l = 0; l < fv.pts[k].size(); ++l)
        if (mask_test(d.bits, fv.pts[k][l])) m |= mask_bit(l);
    return downset{fv.factors[k].pos(), m};
}

// unique maximal point of a connected factor with join irreducible top
int unique_top(const poset& P) {
    mask_t maxima = P.maximal_of(P.full());
    if (mask_popcount(maxima) != 1) return -1;
    return mask_lowest(maxima);
}

// detach the top point; the remaining downsets form the algebra x-down
struct stripped {
    algebra reduced;
    unsigned top_pt;
    std::vector<unsigned> pts;   // reduced index -> block index
};

stripped strip_top(const algebra& block) {
    int t = unique_top(*block.pos());
    if (t < 0) throw std::logic_error("strip_top needs a join irreducible 1");
    mask_t rest = block.pos()->full() & ~mask_bit(static_cast<unsigned>(t));
    stripped s{algebra(induced_subposet(*block.pos(), rest)), static_cast<unsigned>(t),
               mask_indices(rest)};
    return s;
}

downset restrict_to_reduced(const stripped& s, const downset& d) {
    mask_t m = 0;
    for (unsigned l = 0; l < s.pts.size(); ++l)
        if (mask_test(d.bits, s.pts[l])) m |= mask_bit(l);
    return downset{s.reduced.pos(), m};
}

// rebuild a block extension from an extension of the stripped algebra by
// putting a fresh point on top of everything
factor_witness re_add_top(const algebra& block, const stripped& s, const algebra& ext0,
                          const embedding& emb0, const std::vector<downset>& witnesses0) {
    std::vector<std::string> names = ext0.pos()->names();
    std::vector<mask_t> below;
    for (unsigned i = 0; i < ext0.pos()->size(); ++i)
        below.push_back(ext0.pos()->down(i) & ~mask_bit(i));
    names.push_back(fresh(names, block.pos()->name(s.top_pt)));
    below.push_back(ext0.pos()->full());
    poset_ptr P = build_poset_from_relation(std::move(names), std::move(below), max_poset_width);
    algebra ext(P);
    std::vector<downset> jimgs(block.pos()->size(), ext.bot());
    for (unsigned l = 0; l < s.pts.size(); ++l)
        jimgs[s.pts[l]] = downset{P, emb0.jir_images()[l].bits};
    jimgs[s.top_pt] = ext.top();
    embedding emb = embedding::full(block, ext, std::move(jimgs),
                                    emb0.provenance() + ";top-readded");
    factor_witness out{ext, std::move(emb), {}};
    for (const auto& w : witnesses0) out.witnesses.push_back(downset{P, w.bits});
    return out;
}

}

factor_witness product_lift_witness(const algebra& L, const std::vector<algebra>& factors,
                                    const std::vector<factor_witness>& per_factor) {
    factor_view fv = split_into_factors(L);
    if (factors.size() != fv.factors.size() || per_factor.size() != factors.size())
        raise(errc::factor_mismatch, "factor list does not match the component factorization");
    std::size_t nw = per_factor.empty() ? 0 : per_factor.front().witnesses.size();
    for (std::size_t k = 0; k < factors.size(); ++k) {
        if (factors[k].pos()->names() != fv.factors[k].pos()->names())
            raise(errc::factor_mismatch, "factor " + std::to_string(k) + " has unexpected points");
        if (per_factor[k].emb.src().pos().get() != factors[k].pos().get())
            raise(errc::factor_mismatch, "embedding source is not factor " + std::to_string(k));
        if (per_factor[k].witnesses.size() != nw)
            raise(errc::factor_mismatch, "uneven witness tuples");
    }
    std::vector<poset_ptr> parts;
    for (const auto& f : per_factor) parts.push_back(f.ext.pos());
    poset_ptr P = disjoint_union(parts);
    algebra ext(P);
    std::vector<unsigned> offset(parts.size(), 0);
    for (std::size_t k = 1; k < parts.size(); ++k)
        offset[k] = offset[k - 1] + parts[k - 1]->size();
    std::vector<downset> jimgs(L.pos()->size(), ext.bot());
    for (std::size_t k = 0; k < parts.size(); ++k)
        for (unsigned l = 0; l < fv.pts[k].size(); ++l) {
            mask_t local = per_factor[k].emb.jir_images()[l].bits;
            jimgs[fv.pts[k][l]] = downset{P, local << offset[k]};
        }
    embedding emb = embedding::full(L, ext, std::move(jimgs), "product-lift");
    factor_witness out{ext, std::move(emb), {}};
    for (std::size_t i = 0; i < nw; ++i) {
        mask_t m = 0;
        for (std::size_t k = 0; k < parts.size(); ++k)
            m |= per_factor[k].witnesses[i].bits << offset[k];
        out.witnesses.push_back(downset{P, m});
    }
    return out;
}

namespace {

// --- density constructions --------------------------------------------------

density_result density_v1_plan(const algebra& L, const downset& a, const downset&) {
    extension_plan plan = d1_plan(L, a);
    embedding emb = lifted_embedding(L, plan.index, plan.pi, "D1-plan");
    algebra ext = emb.dst();
    downset b{plan.index, plan.mark("b")};
    return density_result{ext, std::move(emb), b};
}

// V2 block with join irreducible top: insert one new element below 1
factor_witness density_v2_top_block(const algebra& block) {
    int t = unique_top(*block.pos());
    if (t < 0) throw std::logic_error("V2 block without join irreducible top");
    std::vector<std::string> names = block.pos()->names();
    std::vector<mask_t> below;
    for (unsigned i = 0; i < block.pos()->size(); ++i)
        below.push_back(block.pos()->down(i) & ~mask_bit(i));
    unsigned beta = static_cast<unsigned>(names.size());
    names.push_back(fresh(names, block.pos()->name(static_cast<unsigned>(t)) + "#1"));
    below.push_back(block.pos()->full() & ~mask_bit(static_cast<unsigned>(t)));
    below[static_cast<unsigned>(t)] |= mask_bit(beta);
    poset_ptr P = build_poset_from_relation(std::move(names), std::move(below), max_poset_width);
    algebra ext(P);
    std::vector<downset> jimgs;
    for (unsigned i = 0; i < block.pos()->size(); ++i) {
        mask_t m = block.pos()->down(i);
        if (static_cast<int>(i) == t) m = P->full();
        jimgs.push_back(downset{P, m});
    }
    embedding emb = embedding::full(block, ext, std::move(jimgs), "D2-top-insert");
    downset b = principal(P, beta);
    return factor_witness{ext, std::move(emb), {b}};
}

factor_witness density_block(const algebra& block, const downset& a, const downset& c,
                             int variant) {
    if (a.is_empty())
        return factor_witness{block, embedding::identity(block), {block.bot()}};
    if (variant == 2) {
        if (a.is_full()) return density_v2_top_block(block);
        // 0 != a <= x: run the unrestricted construction below the top
        stripped s = strip_top(block);
        downset a0 = restrict_to_reduced(s, a);
        downset c0 = restrict_to_reduced(s, c);
        density_result inner = density_v1_plan(s.reduced, a0, c0);
        return re_add_top(block, s, inner.ext, inner.emb, {inner.b});
    }
    density_result r = density_v1_plan(block, a, c);
    return factor_witness{r.ext, std::move(r.emb), {r.b}};
}

density_result density_d3_family(const algebra& L, const downset& a) {
    const poset& E = *L.pos();
    std::vector<unsigned> comps = mask_indices(E.maximal_of(a.bits));
    for (unsigned ai : comps)
        if (!E.point_maximal(ai))
            throw std::logic_error("D3 hypothesis holds but a component is not maximal");
    // reuse an existing join irreducible strictly below some component
    for (unsigned ai : comps) {
        mask_t strictly_below = E.down(ai) & ~mask_bit(ai);
        if (strictly_below != 0) {
            unsigned y = static_cast<unsigned>(mask_lowest(strictly_below));
            return density_result{L, embedding::identity(L), principal(L.pos(), y)};
        }
    }
    // all components both maximal and minimal: add one atom below each
    return density_v1_plan(L, a, L.bot());
}

// --- splitting constructions ------------------------------------------------

splitting_result splitting_s1_plan(const algebra& L, const downset& a, const downset& b1,
                                   const downset& b2, const char* tag) {
    extension_plan plan = s1_plan(L, b1, b2);
    embedding emb = lifted_embedding(L, plan.index, plan.pi, tag);
    algebra ext = emb.dst();
    mask_t side1 = plan.mark("side1"), side2 = plan.mark("side2");
    mask_t m1 = 0, m2 = 0;
    mask_for_each(L.pos()->maximal_of(a.bits), [&](unsigned ai) {
        for (unsigned z = 0; z < plan.index->size(); ++z) {
            if (plan.pi[z] != ai) continue;
            if (mask_test(side1, z)) m1 |= plan.index->down(z);
            if (mask_test(side2, z)) m2 |= plan.index->down(z);
        }
    });
    return splitting_result{ext, std::move(emb), downset{plan.index, m1},
                            downset{plan.index, m2}};
}

factor_witness splitting_block_v2(const algebra& block, const downset& a, const downset& b1,
                                  const downset& b2) {
    if (a.is_empty())
        return factor_witness{block, embedding::identity(block), {block.bot(), block.bot()}};
    if (a.is_full()) {
        if (!meet(b1, b2).is_empty())
            raise(errc::hypothesis_violated, "b1 ^ b2 != 0 on a block where a = 1");
        splitting_result r = splitting_s1_plan(block, a, b1, b2, "S2-top-split");
        return factor_witness{r.ext, std::move(r.emb), {r.a1, r.a2}};
    }
    stripped s = strip_top(block);
    downset a0 = restrict_to_reduced(s, a);
    downset b10 = restrict_to_reduced(s, b1);
    downset b20 = restrict_to_reduced(s, b2);
    splitting_result inner = splitting_s1_plan(s.reduced, a0, b10, b20, "S1-plan");
    return re_add_top(block, s, inner.ext, inner.emb, {inner.a1, inner.a2});
}

// the pair poset of fact V4-SP: every point sits over single-atom histories
struct v4_split {
    poset_ptr index;
    std::vector<unsigned> pi;
};

v4_split v4_pair_poset(const algebra& L) {
    const poset& E = *L.pos();
    std::vector<std::string> names;
    std::vector<unsigned> pi;
    std::vector<std::pair<unsigned, unsigned>> pts;   // (x1, x2)
    for (unsigned x1 = 0; x1 < E.size(); ++x1) {
        if (!E.point_minimal(x1)) continue;
        pts.emplace_back(x1, x1);
        names.push_back(fresh(names, E.name(x1)));
        pi.push_back(x1);
        for (unsigned x2 = 0; x2 < E.size(); ++x2)
            if (x1 != x2 && E.leq(x1, x2)) {
                pts.emplace_back(x1, x2);
                names.push_back(fresh(names, E.name(x2) + "#" + E.name(x1)));
                pi.push_back(x2);
            }
    }
    std::vector<mask_t> below(pts.size(), 0);
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = 0; j < pts.size(); ++j) {
            // (y1,y2) < (x1,x2) iff y1 = y2 = x1 < x2
            auto [y1, y2] = pts[j];
            auto [x1, x2] = pts[i];
            if (y1 == y2 && y1 == x1 && x1 != x2) below[i] |= mask_bit(static_cast<unsigned>(j));
        }
    v4_split out;
    out.index = build_poset_from_relation(std::move(names), std::move(below), max_poset_width);
    out.pi = std::move(pi);
    return out;
}

factor_witness splitting_block_v4(const algebra& block, const downset& a, const downset& b1,
                                  const downset& b2) {
    if (a.is_empty())
        return factor_witness{block, embedding::identity(block), {block.bot(), block.bot()}};
    const poset& P = *block.pos();
    // the L5 case where b1 = b2 = the unique atom forces a = 1; witnesses are
    // the two join irreducible components of 1, inside the block itself
    if (!b1.is_empty() && b1 == b2) {
        if (!a.is_full())
            raise(errc::hypothesis_violated, "b1 = b2 != 0 forces a = 1 on an L5 block");
        std::vector<unsigned> tops = mask_indices(P.maximal_of(P.full()));
        if (tops.size() == 2) {
            downset a1 = principal(block.pos(), tops[0]);
            downset a2 = principal(block.pos(), tops[1]);
            if (splitting_witness_ok(a, b1, b2, a1, a2))
                return factor_witness{block, embedding::identity(block), {a1, a2}};
        }
    }
    // remaining cases: smallest V4 extension found by exhaustive search
    bool need_nonzero = !a.is_empty();
    search_predicate pred = [&](const algebra& ext, const embedding& phi)
        -> std::optional<std::vector<downset>> {
        downset ia = phi.apply(a), ib1 = phi.apply(b1), ib2 = phi.apply(b2);
        for (const auto& a1 : ext.elements())
            for (const auto& a2 : ext.elements()) {
                if (need_nonzero && (a1.is_empty() || a2.is_empty())) continue;
                if (splitting_witness_ok(ia, ib1, ib2, a1, a2))
                    return std::vector<downset>{a1, a2};
            }
        return std::nullopt;
    };
    auto found = bounded_extension_search(block, pred, 3, variety_tag::V4);
    if (!found) throw std::logic_error("no V4 splitting extension within three new points");
    return factor_witness{found->ext, std::move(found->emb),
                          {found->witnesses[0], found->witnesses[1]}};
}

}

density_result density_extension(const algebra& L, const downset& a, const downset& c,
                                 int variant) {
    require_variant(variant);
    if (a.parent.get() != L.pos().get() || c.parent.get() != L.pos().get())
        raise(errc::parent_mismatch, "inputs outside L");
    std::string why;
    if (!density_hypothesis(L, variant, a, c, &why)) raise(errc::hypothesis_violated, why);
    variety_tag v = variety_of(variant);
    if (!variety_holds(L, v))
        raise(errc::variety_mismatch, std::string("L is not in ") + variety_name(v));

    density_result out = [&]() -> density_result {
        switch (variant) {
        case 1:
        case 6:
            return density_v1_plan(L, a, c);
        case 3:
        case 4:
        case 5:
            return density_d3_family(L, a);
        case 2: {
            factor_view fv = split_into_factors(L);
            std::vector<factor_witness> per;
            for (std::size_t k = 0; k < fv.factors.size(); ++k)
                per.push_back(density_block(fv.factors[k], restrict_to(fv, k, a),
                                            restrict_to(fv, k, c), 2));
            factor_witness lifted = product_lift_witness(L, fv.factors, per);
            return density_result{lifted.ext, std::move(lifted.emb), lifted.witnesses[0]};
        }
        }
        throw std::logic_error("unreachable");
    }();

    if (out.b.is_empty()) broken("b = 0");
    downset ia = out.emb.apply(a), ic = out.emb.apply(c);
    if (!strictly_way_below(ic, out.b) || !strictly_way_below(out.b, ia))
        broken("c << b << a fails in the extension");
    verify_extension(out.ext, out.emb, variant);
    return out;
}

splitting_result splitting_extension(const algebra& L, const downset& a, const downset& b1,
                                     const downset& b2, int variant) {
    require_variant(variant);
    if (a.parent.get() != L.pos().get() || b1.parent.get() != L.pos().get() ||
        b2.parent.get() != L.pos().get())
        raise(errc::parent_mismatch, "inputs outside L");
    std::string why;
    if (!splitting_hypothesis(L, variant, a, b1, b2, &why)) raise(errc::hypothesis_violated, why);
    variety_tag v = variety_of(variant);
    if (!variety_holds(L, v))
        raise(errc::variety_mismatch, std::string("L is not in ") + variety_name(v));

    splitting_result out = [&]() -> splitting_result {
        switch (variant) {
        case 1:
        case 3:
        case 6:
            return splitting_s1_plan(L, a, b1, b2, variant == 6 ? "S6-plan" : "S1-plan");
        case 2:
        case 5: {
            factor_view fv = split_into_factors(L);
            std::vector<factor_witness> per;
            for (std::size_t k = 0; k < fv.factors.size(); ++k)
                per.push_back(splitting_block_v2(fv.factors[k], restrict_to(fv, k, a),
                                                 restrict_to(fv, k, b1),
                                                 restrict_to(fv, k, b2)));
            factor_witness lifted = product_lift_witness(L, fv.factors, per);
            return splitting_result{lifted.ext, std::move(lifted.emb), lifted.witnesses[0],
                                    lifted.witnesses[1]};
        }
        case 4: {
            v4_split vs = v4_pair_poset(L);
            embedding psi = lifted_embedding(L, vs.index, vs.pi, "V4-SP");
            algebra M = psi.dst();
            downset ma = psi.apply(a), mb1 = psi.apply(b1), mb2 = psi.apply(b2);
            factor_view fv = split_into_factors(M);
            std::vector<factor_witness> per;
            for (std::size_t k = 0; k < fv.factors.size(); ++k)
                per.push_back(splitting_block_v4(fv.factors[k], restrict_to(fv, k, ma),
                                                 restrict_to(fv, k, mb1),
                                                 restrict_to(fv, k, mb2)));
            factor_witness lifted = product_lift_witness(M, fv.factors, per);
            embedding full_emb = compose(psi, lifted.emb);
            return splitting_result{lifted.ext, std::move(full_emb), lifted.witnesses[0],
                                    lifted.witnesses[1]};
        }
        }
        throw std::logic_error("unreachable");
    }();

    downset ia = out.emb.apply(a), ib1 = out.emb.apply(b1), ib2 = out.emb.apply(b2);
    if (!splitting_witness_ok(ia, ib1, ib2, out.a1, out.a2))
        broken("splitting equations fail in the extension");
    verify_extension(out.ext, out.emb, variant);
    return out;
}

// --- exhaustive bounded search ----------------------------------------------

namespace {

// depth-first enumeration of embeddings of L into LQ, assigning images to
// the source points along a linear extension
struct embed_enum {
    const algebra& L;
    const algebra& LQ;
    std::vector<downset> elems;              // all elements of LQ, canonical order
    std::vector<unsigned> order;             // linear extension of L's points
    std::vector<downset> img_down;           // accumulated images of principal downsets
    const std::function<bool(const embedding&)>& visit;

    bool try_point(unsigned k) {
        if (k == order.size()) {
            // images of all join irreducibles fixed; the top must be hit
            downset all = LQ.bot();
            for (unsigned x = 0; x < L.points(); ++x) all = join(all, img_down[x]);
            if (!all.is_full() && L.points() > 0) return false;
            if (L.points() == 0 && !LQ.trivial()) return false;
            std::vector<downset> jimgs(L.points(), LQ.bot());
            for (unsigned x = 0; x < L.points(); ++x) jimgs[x] = img_down[x];
            embedding cand = embedding::full(L, LQ, std::move(jimgs), "extension-search");
            if (!check_embedding(cand).ok) return false;
            return visit(cand);
        }
        unsigned x = order[k];
        for (const auto& u : elems) {
            if (u.is_empty()) continue;
            bool ok = true;
            for (unsigned k2 = 0; k2 < k && ok; ++k2) {
                unsigned y = order[k2];
                bool le_xy = L.pos()->leq(x, y), le_yx = L.pos()->leq(y, x);
                if (le_yx && !leq(img_down[y], u)) ok = false;
                if (le_xy && !leq(u, img_down[y])) ok = false;
                if (!le_xy && !le_yx) {
                    if (leq(u, img_down[y]) || leq(img_down[y], u)) ok = false;
                    // meets of principal downsets must be preserved; the
                    // points below both are already placed
                    if (ok) {
                        downset expect = LQ.bot();
                        mask_for_each(L.pos()->down(x) & L.pos()->down(y),
                                      [&](unsigned z) { expect = join(expect, img_down[z]); });
                        if (meet(u, img_down[y]) != expect) ok = false;
                    }
                }
            }
            if (!ok) continue;
            img_down[x] = u;
            if (try_point(k + 1)) return true;
        }
        return false;
    }
};

}

bool for_each_extension(const algebra& L, unsigned max_new_points,
                        std::optional<variety_tag> constraint,
                        const std::function<bool(const algebra&, const embedding&)>& visit) {
    std::size_t lsize = L.count_elements();
    for (unsigned extra = 0; extra <= max_new_points; ++extra) {
        unsigned n = L.points() + extra;
        for (const poset_ptr& Q : enumerate_posets(n)) {
            algebra LQ(Q);
            if (constraint && !variety_holds(LQ, *constraint)) continue;
            if (LQ.count_elements() < lsize) continue;
            bool stop = false;
            std::function<bool(const embedding&)> wrap = [&](const embedding& e) {
                stop = visit(LQ, e);
                return stop;
            };
            embed_enum en{L,
                          LQ,
                          LQ.elements(),
                          {},
                          std::vector<downset>(L.points(), LQ.bot()),
                          wrap};
            en.order.resize(L.points());
            for (unsigned i = 0; i < L.points(); ++i) en.order[i] = i;
            std::sort(en.order.begin(), en.order.end(), [&](unsigned a, unsigned b) {
                unsigned da = mask_popcount(L.pos()->down(a)), db = mask_popcount(L.pos()->down(b));
                if (da != db) return da < db;
                return a < b;
            });
            en.try_point(0);
            if (stop) return true;
        }
    }
    return false;
}

std::optional<search_result> bounded_extension_search(const algebra& L,
                                                      const search_predicate& pred,
                                                      unsigned max_new_points,
                                                      std::optional<variety_tag> constraint) {
    std::optional<search_result> out;
    for_each_extension(L, max_new_points, constraint,
                       [&](const algebra& ext, const embedding& phi) {
                           auto w = pred(ext, phi);
                           if (!w) return false;
                           out = search_result{ext, phi, std::move(*w)};
                           return true;
                       });
    return out;
}

}
