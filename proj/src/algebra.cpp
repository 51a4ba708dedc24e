#include "coheyt/algebra.hpp"

#include <algorithm>

namespace coheyt {

algebra::algebra(poset_ptr p) : m_poset(std::move(p)) {
    for (unsigned i = 0; i < m_poset->size(); ++i) m_jir.push_back(principal(m_poset, i));
}

std::vector<downset> algebra::jir_components(const downset& a) const {
    if (a.parent.get() != m_poset.get()) raise(errc::parent_mismatch, "foreign downset");
    std::vector<downset> out;
    mask_for_each(m_poset->maximal_of(a.bits), [&](unsigned i) { out.push_back(m_jir[i]); });
    return out;
}

namespace {

// depth-first generation of all downsets; points are visited in a linear
// extension so a point may enter only when all points below it are in
template <typename Emit>
void gen_downsets(const poset& p, const std::vector<unsigned>& order, unsigned k, mask_t cur,
                  Emit&& emit) {
    if (k == order.size()) {
        emit(cur);
        return;
    }
    unsigned i = order[k];
    gen_downsets(p, order, k + 1, cur, emit);
    if ((p.down(i) & ~mask_bit(i) & ~cur) == 0)
        gen_downsets(p, order, k + 1, cur | mask_bit(i), emit);
}

std::vector<unsigned> linear_extension(const poset& p) {
    std::vector<unsigned> order(p.size());
    for (unsigned i = 0; i < p.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](unsigned a, unsigned b) {
        unsigned da = mask_popcount(p.down(a)), db = mask_popcount(p.down(b));
        if (da != db) return da < db;
        return a < b;
    });
    return order;
}

struct enum_stop {};

}

std::vector<downset> algebra::elements(std::size_t cap) const {
    std::vector<downset> out;
    auto order = linear_extension(*m_poset);
    try {
        gen_downsets(*m_poset, order, 0, 0, [&](mask_t m) {
            if (out.size() >= cap) throw enum_stop{};
            out.push_back(downset{m_poset, m});
        });
    } catch (const enum_stop&) {
        raise(errc::cap_exceeded,
              "algebra has more than " + std::to_string(cap) + " elements");
    }
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

std::size_t algebra::count_elements(std::size_t cap) const {
    std::size_t n = 0;
    auto order = linear_extension(*m_poset);
    try {
        gen_downsets(*m_poset, order, 0, 0, [&](mask_t) {
            if (++n > cap) throw enum_stop{};
        });
    } catch (const enum_stop&) {
    }
    return n;
}

}
