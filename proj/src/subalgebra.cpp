#include "coheyt/subalgebra.hpp"

#include <algorithm>

namespace coheyt {

subalgebra::subalgebra(algebra parent, std::vector<downset> carrier)
    : m_parent(std::move(parent)), m_carrier(std::move(carrier)) {
    for (auto& d : m_carrier)
        if (d.parent.get() != m_parent.pos().get())
            raise(errc::parent_mismatch, "carrier element from another algebra");
    std::sort(m_carrier.begin(), m_carrier.end(), canonical_less);
    m_carrier.erase(std::unique(m_carrier.begin(), m_carrier.end()), m_carrier.end());
    bool has_bot = !m_carrier.empty() && m_carrier.front().is_empty();
    bool has_top = !m_carrier.empty() && m_carrier.back().is_full();
    if (!has_bot || !has_top) raise(errc::not_in_carrier, "carrier must contain 0 and 1");
}

int subalgebra::index_of(const downset& d) const {
    auto it = std::lower_bound(m_carrier.begin(), m_carrier.end(), d, canonical_less);
    if (it != m_carrier.end() && *it == d) return static_cast<int>(it - m_carrier.begin());
    return -1;
}

std::vector<downset> subalgebra::jir() const {
    std::vector<downset> out;
    for (const auto& s : m_carrier) {
        if (s.is_empty()) continue;
        if (predecessor_join(s) != s) out.push_back(s);
    }
    return out;
}

std::vector<downset> subalgebra::jir_components(const downset& a) const {
    if (index_of(a) < 0) raise(errc::not_in_carrier, to_text(a));
    std::vector<downset> irr = jir();
    std::vector<downset> below;
    for (const auto& s : irr)
        if (leq(s, a)) below.push_back(s);
    std::vector<downset> out;
    for (const auto& s : below) {
        bool maximal = true;
        for (const auto& t : below)
            if (t != s && leq(s, t)) maximal = false;
        if (maximal) out.push_back(s);
    }
    return out;
}

downset subalgebra::predecessor_join(const downset& a) const {
    if (index_of(a) < 0) raise(errc::not_in_carrier, to_text(a));
    downset acc = bottom(a.parent);
    for (const auto& s : m_carrier)
        if (s != a && leq(s, a)) acc = join(acc, s);
    return acc;
}

downset subalgebra::min_cover(const downset& x) const {
    if (x.parent.get() != m_parent.pos().get()) raise(errc::parent_mismatch, "foreign element");
    downset acc = m_parent.top();
    for (const auto& s : m_carrier)
        if (leq(x, s)) acc = meet(acc, s);
    return acc;
}

bool subalgebra::is_proper() const {
    return m_parent.count_elements(m_carrier.size() + 1) > m_carrier.size();
}

subalgebra generated_subalgebra(const algebra& L, std::vector<downset> gens) {
    std::vector<downset> carrier{L.bot(), L.top()};
    for (auto& g : gens) {
        if (g.parent.get() != L.pos().get()) raise(errc::parent_mismatch, "generator");
        carrier.push_back(g);
    }
    std::sort(carrier.begin(), carrier.end(), canonical_less);
    carrier.erase(std::unique(carrier.begin(), carrier.end()), carrier.end());
    // fixpoint closure under join, meet, diff
    for (bool changed = true; changed;) {
        changed = false;
        std::size_t n = carrier.size();
        std::vector<downset> fresh;
        auto consider = [&](const downset& d) {
            auto in = [&](const std::vector<downset>& v, const downset& x) {
                return std::binary_search(v.begin(), v.end(), x, canonical_less);
            };
            if (!in(carrier, d) && !in(fresh, d)) {
                fresh.insert(std::lower_bound(fresh.begin(), fresh.end(), d, canonical_less), d);
            }
        };
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                consider(join(carrier[i], carrier[j]));
                consider(meet(carrier[i], carrier[j]));
                consider(diff(carrier[i], carrier[j]));
            }
        if (!fresh.empty()) {
            changed = true;
            carrier.insert(carrier.end(), fresh.begin(), fresh.end());
            std::sort(carrier.begin(), carrier.end(), canonical_less);
        }
    }
    return subalgebra(L, std::move(carrier));
}

subalgebra full_subalgebra(const algebra& L) { return subalgebra(L, L.elements()); }

closure_report is_subalgebra(const algebra& L, const std::vector<downset>& carrier) {
    closure_report rep;
    auto in = [&](const downset& d) {
        for (const auto& c : carrier)
            if (c == d) return true;
        return false;
    };
    if (!in(L.bot())) return {false, "0 missing"};
    if (!in(L.top())) return {false, "1 missing"};
    const char* ops = "|&-";
    for (const auto& a : carrier)
        for (const auto& b : carrier)
            for (int op = 0; op < 3; ++op) {
                downset r = op == 0 ? join(a, b) : op == 1 ? meet(a, b) : diff(a, b);
                if (!in(r))
                    return {false, "(" + to_text(a) + "," + to_text(b) + "," +
                                       std::string(1, ops[op]) + ")"};
            }
    return rep;
}

downset dualization::iota(const subalgebra&, const downset& s) const {
    mask_t m = 0;
    for (unsigned i = 0; i < jirs.size(); ++i)
        if (leq(jirs[i], s)) m |= mask_bit(i);
    return downset{pos, m};
}

dualization dualize(const subalgebra& S) {
    std::vector<downset> jirs = S.jir();
    // name each join irreducible after the maximal points of its downset
    std::vector<std::string> names;
    for (const auto& s : jirs) {
        std::string nm;
        mask_for_each(s.parent->maximal_of(s.bits), [&](unsigned i) {
            if (!nm.empty()) nm += "+";
            nm += s.parent->name(i);
        });
        names.push_back(nm);
    }
    std::vector<mask_t> below(jirs.size(), 0);
    for (unsigned i = 0; i < jirs.size(); ++i)
        for (unsigned j = 0; j < jirs.size(); ++j)
            if (i != j && leq(jirs[i], jirs[j])) below[j] |= mask_bit(i);
    poset_ptr pos = build_poset_from_relation(std::move(names), std::move(below), max_poset_width);
    return dualization{pos, std::move(jirs), algebra(pos)};
}

}
