#include "coheyt/duality.hpp"

#include <algorithm>

namespace coheyt {

embedding embedding::full(algebra src, algebra dst, std::vector<downset> jir_images,
                          std::string provenance) {
    embedding e(std::move(src), std::move(dst));
    if (jir_images.size() != e.m_src.points())
        raise(errc::index_out_of_range, "one image per source point expected");
    for (auto& d : jir_images)
        if (d.parent.get() != e.m_dst.pos().get())
            raise(errc::parent_mismatch, "image outside target algebra");
    e.m_full = true;
    e.m_jir_images = std::move(jir_images);
    e.m_provenance = std::move(provenance);
    return e;
}

embedding embedding::on_carrier(algebra src, algebra dst, std::vector<downset> elems,
                                std::vector<downset> images, std::string provenance) {
    embedding e(std::move(src), std::move(dst));
    if (elems.size() != images.size()) raise(errc::index_out_of_range, "carrier/image size mismatch");
    for (auto& d : elems)
        if (d.parent.get() != e.m_src.pos().get()) raise(errc::parent_mismatch, "carrier element");
    for (auto& d : images)
        if (d.parent.get() != e.m_dst.pos().get()) raise(errc::parent_mismatch, "image element");
    e.m_full = false;
    e.m_elems = std::move(elems);
    e.m_images = std::move(images);
    e.m_provenance = std::move(provenance);
    return e;
}

embedding embedding::identity(const algebra& L) {
    std::vector<downset> imgs;
    for (unsigned i = 0; i < L.points(); ++i) imgs.push_back(L.jir(i));
    return full(L, L, std::move(imgs), "identity");
}

downset embedding::apply(const downset& d) const {
    if (d.parent.get() != m_src.pos().get()) raise(errc::parent_mismatch, "apply: foreign element");
    if (m_full) {
        downset out = m_dst.bot();
        mask_for_each(d.bits, [&](unsigned i) { out = join(out, m_jir_images[i]); });
        return out;
    }
    for (std::size_t k = 0; k < m_elems.size(); ++k)
        if (m_elems[k] == d) return m_images[k];
    raise(errc::not_in_carrier, to_text(d));
}

std::vector<downset> embedding::domain(std::size_t cap) const {
    if (m_full) return m_src.elements(cap);
    return m_elems;
}

embedding compose(const embedding& first, const embedding& second) {
    if (first.dst().pos().get() != second.src().pos().get())
        raise(errc::parent_mismatch, "compose: target/source mismatch");
    std::string prov = first.provenance() + ";" + second.provenance();
    if (first.is_full()) {
        std::vector<downset> imgs;
        for (const auto& d : first.jir_images()) imgs.push_back(second.apply(d));
        return embedding::full(first.src(), second.dst(), std::move(imgs), std::move(prov));
    }
    std::vector<downset> imgs;
    for (const auto& d : first.images()) imgs.push_back(second.apply(d));
    return embedding::on_carrier(first.src(), second.dst(), first.carrier(), std::move(imgs),
                                 std::move(prov));
}

check_result check_embedding(const embedding& e, std::size_t max_elements) {
    std::vector<downset> dom;
    try {
        dom = e.domain(max_elements);
    } catch (const error& err) {
        if (err.code() == errc::cap_exceeded) return {false, "source too large to verify"};
        throw;
    }
    std::vector<downset> img;
    img.reserve(dom.size());
    for (const auto& d : dom) img.push_back(e.apply(d));
    for (std::size_t i = 0; i < dom.size(); ++i) {
        if (dom[i].is_empty() && !img[i].is_empty()) return {false, "0 not preserved"};
        if (dom[i].is_full() && !img[i].is_full()) return {false, "1 not preserved"};
        for (std::size_t j = 0; j < i; ++j)
            if (img[i] == img[j])
                return {false, "not injective: " + to_text(dom[j]) + " and " + to_text(dom[i]) +
                                   " collapse"};
    }
    std::vector<std::size_t> by_canon(dom.size());
    for (std::size_t k = 0; k < dom.size(); ++k) by_canon[k] = k;
    std::sort(by_canon.begin(), by_canon.end(),
              [&](std::size_t a, std::size_t b) { return canonical_less(dom[a], dom[b]); });
    auto find_img = [&](const downset& d) -> const downset* {
        auto it = std::lower_bound(by_canon.begin(), by_canon.end(), d,
                                   [&](std::size_t k, const downset& x) {
                                       return canonical_less(dom[k], x);
                                   });
        if (it != by_canon.end() && dom[*it] == d) return &img[*it];
        return nullptr;
    };
    for (std::size_t i = 0; i < dom.size(); ++i)
        for (std::size_t j = 0; j < dom.size(); ++j) {
            struct {
                const char* name;
                downset lhs, rhs;
            } ops[3] = {{"join", join(dom[i], dom[j]), join(img[i], img[j])},
                        {"meet", meet(dom[i], dom[j]), meet(img[i], img[j])},
                        {"diff", diff(dom[i], dom[j]), diff(img[i], img[j])}};
            for (auto& op : ops) {
                const downset* mapped = find_img(op.lhs);
                if (!mapped)
                    return {false, "domain not operation closed at " + to_text(op.lhs)};
                if (*mapped != op.rhs)
                    return {false, std::string(op.name) + " not preserved at (" + to_text(dom[i]) +
                                       "," + to_text(dom[j]) + ")"};
            }
        }
    return {};
}

namespace {

void validate_table(const lattice_table& t, unsigned cap,
                    std::vector<std::vector<int>>* join_out,
                    std::vector<std::vector<int>>* meet_out, int* bot_out, int* top_out) {
    unsigned n = t.size;
    if (n == 0) raise(errc::not_bounded, "empty table has no bounds");
    if (n > cap) raise(errc::cap_exceeded, "table larger than cap " + std::to_string(cap));
    if (t.leq.size() != n) raise(errc::not_a_lattice, "leq matrix size mismatch");
    for (auto& row : t.leq)
        if (row.size() != n) raise(errc::not_a_lattice, "leq matrix not square");
    auto le = [&](unsigned a, unsigned b) { return t.leq[a][b]; };
    for (unsigned a = 0; a < n; ++a)
        if (!le(a, a)) raise(errc::not_a_lattice, "not reflexive");
    for (unsigned a = 0; a < n; ++a)
        for (unsigned b = 0; b < n; ++b) {
            if (a != b && le(a, b) && le(b, a)) raise(errc::not_a_lattice, "not antisymmetric");
            for (unsigned c = 0; c < n; ++c)
                if (le(a, b) && le(b, c) && !le(a, c)) raise(errc::not_a_lattice, "not transitive");
        }
    int bot = -1, top = -1;
    for (unsigned a = 0; a < n; ++a) {
        bool is_bot = true, is_top = true;
        for (unsigned b = 0; b < n; ++b) {
            is_bot = is_bot && le(a, b);
            is_top = is_top && le(b, a);
        }
        if (is_bot) bot = static_cast<int>(a);
        if (is_top) top = static_cast<int>(a);
    }
    if (bot < 0 || top < 0) raise(errc::not_bounded, "missing bottom or top");
    std::vector<std::vector<int>> jn(n, std::vector<int>(n, -1)), mt(n, std::vector<int>(n, -1));
    for (unsigned a = 0; a < n; ++a)
        for (unsigned b = 0; b < n; ++b) {
            for (unsigned c = 0; c < n; ++c) {
                if (le(a, c) && le(b, c) && (jn[a][b] < 0 || le(c, jn[a][b]))) jn[a][b] = c;
                if (le(c, a) && le(c, b) && (mt[a][b] < 0 || le(mt[a][b], c))) mt[a][b] = c;
            }
            // verify the chosen bound really is least/greatest
            for (unsigned c = 0; c < n; ++c) {
                if (le(a, c) && le(b, c) && !le(jn[a][b], c))
                    raise(errc::not_a_lattice, "no least upper bound");
                if (le(c, a) && le(c, b) && !le(c, mt[a][b]))
                    raise(errc::not_a_lattice, "no greatest lower bound");
            }
        }
    for (unsigned a = 0; a < n; ++a)
        for (unsigned b = 0; b < n; ++b)
            for (unsigned c = 0; c < n; ++c)
                if (mt[a][jn[b][c]] != jn[mt[a][b]][mt[a][c]])
                    raise(errc::not_distributive, "meet does not distribute over join");
    if (join_out) *join_out = jn;
    if (meet_out) *meet_out = mt;
    if (bot_out) *bot_out = bot;
    if (top_out) *top_out = top;
}

}

table_dual algebra_from_table(const lattice_table& t, unsigned cap) {
    std::vector<std::vector<int>> jn, mt;
    int bot = -1, top = -1;
    validate_table(t, cap, &jn, &mt, &bot, &top);
    unsigned n = t.size;
    auto le = [&](unsigned a, unsigned b) { return t.leq[a][b]; };
    // join irreducibles: a != bot and a != join of elements strictly below
    std::vector<unsigned> irr;
    for (unsigned a = 0; a < n; ++a) {
        if (a == static_cast<unsigned>(bot)) continue;
        int acc = bot;
        for (unsigned b = 0; b < n; ++b)
            if (b != a && le(b, a)) acc = jn[acc][b];
        if (static_cast<unsigned>(acc) != a) irr.push_back(a);
    }
    std::vector<std::string> names;
    std::vector<mask_t> below(irr.size(), 0);
    for (unsigned i = 0; i < irr.size(); ++i) {
        names.push_back("e" + std::to_string(irr[i]));
        for (unsigned j = 0; j < irr.size(); ++j)
            if (i != j && le(irr[j], irr[i])) below[i] |= mask_bit(j);
    }
    table_dual out;
    out.pos = build_poset_from_relation(std::move(names), std::move(below), max_poset_width);
    for (unsigned a = 0; a < n; ++a) {
        mask_t m = 0;
        for (unsigned i = 0; i < irr.size(); ++i)
            if (le(irr[i], a)) m |= mask_bit(i);
        out.iso.push_back(downset{out.pos, m});
    }
    return out;
}

embedding lifted_embedding(const algebra& L, poset_ptr I, const std::vector<unsigned>& pi,
                           std::string provenance) {
    const poset& E = *L.pos();
    const poset& J = *I;
    if (pi.size() != J.size()) raise(errc::index_out_of_range, "pi must map every point of I");
    for (unsigned z = 0; z < J.size(); ++z)
        if (pi[z] >= E.size()) raise(errc::index_out_of_range, "pi value out of range");
    for (unsigned z = 0; z < J.size(); ++z)
        for (unsigned x = 0; x < J.size(); ++x)
            if (J.leq(z, x) && !E.leq(pi[z], pi[x]))
                raise(errc::not_increasing,
                      J.name(z) + " <= " + J.name(x) + " but images are not ordered");
    std::vector<bool> hit(E.size(), false);
    for (unsigned z = 0; z < J.size(); ++z) hit[pi[z]] = true;
    for (unsigned x = 0; x < E.size(); ++x)
        if (!hit[x]) raise(errc::not_surjective, E.name(x) + " has no preimage");
    // lifting: pi(z) <= x  =>  exists xi >= z with pi(xi) = x
    for (unsigned z = 0; z < J.size(); ++z)
        for (unsigned x = 0; x < E.size(); ++x) {
            if (!E.leq(pi[z], x)) continue;
            bool found = false;
            for (unsigned xi = 0; xi < J.size() && !found; ++xi)
                if (pi[xi] == x && J.leq(z, xi)) found = true;
            if (!found)
                raise(errc::lifting_fails,
                      "no lift of " + J.name(z) + " to " + E.name(x));
        }
    algebra dst(I);
    std::vector<downset> imgs;
    for (unsigned x = 0; x < E.size(); ++x) {
        mask_t m = 0;
        for (unsigned z = 0; z < J.size(); ++z)
            if (E.leq(pi[z], x)) m |= mask_bit(z);
        imgs.push_back(downset{I, m});
    }
    return embedding::full(L, std::move(dst), std::move(imgs), std::move(provenance));
}

}
