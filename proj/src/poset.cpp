#include "coheyt/poset.hpp"

#include <algorithm>
#include <atomic>

namespace coheyt {

const char* errc_name(errc c) {
    switch (c) {
    case errc::duplicate_name: return "DuplicateName";
    case errc::unknown_name: return "UnknownName";
    case errc::cycle_detected: return "CycleDetected";
    case errc::index_out_of_range: return "IndexOutOfRange";
    case errc::parent_mismatch: return "ParentMismatch";
    case errc::unbound_variable: return "UnboundVariable";
    case errc::parse_error: return "ParseError";
    case errc::not_a_lattice: return "NotALattice";
    case errc::not_distributive: return "NotDistributive";
    case errc::not_bounded: return "NotBounded";
    case errc::not_increasing: return "NotIncreasing";
    case errc::not_surjective: return "NotSurjective";
    case errc::lifting_fails: return "LiftingFails";
    case errc::not_in_carrier: return "NotInCarrier";
    case errc::invalid_signature: return "InvalidSignature";
    case errc::not_proper: return "NotProper";
    case errc::hypothesis_violated: return "HypothesisViolated";
    case errc::variety_mismatch: return "VarietyMismatch";
    case errc::factor_mismatch: return "FactorMismatch";
    case errc::cap_exceeded: return "CapExceeded";
    }
    return "Error";
}

static std::atomic<unsigned> g_poset_cap{64};

unsigned poset_size_cap() { return g_poset_cap.load(); }

void set_poset_size_cap(unsigned cap) {
    if (cap > max_poset_width) cap = max_poset_width;
    if (cap == 0) cap = 1;
    g_poset_cap.store(cap);
}

poset::poset(std::vector<std::string> names, std::vector<mask_t> down)
    : m_names(std::move(names)), m_down(std::move(down)) {
    unsigned n = size();
    m_up.assign(n, 0);
    for (unsigned j = 0; j < n; ++j) {
        mask_for_each(m_down[j], [&](unsigned i) { m_up[i] |= mask_bit(j); });
        m_full |= mask_bit(j);
    }
}

int poset::index_of(const std::string& name) const {
    for (unsigned i = 0; i < size(); ++i)
        if (m_names[i] == name) return static_cast<int>(i);
    return -1;
}

mask_t poset::closure(mask_t s) const {
    mask_t out = 0;
    mask_for_each(s, [&](unsigned i) { out |= m_down[i]; });
    return out;
}

bool poset::is_downset(mask_t s) const {
    bool ok = true;
    mask_for_each(s, [&](unsigned i) { ok = ok && (m_down[i] & ~s) == 0; });
    return ok;
}

mask_t poset::maximal_of(mask_t s) const {
    mask_t out = 0;
    mask_for_each(s, [&](unsigned i) {
        if ((m_up[i] & s & ~mask_bit(i)) == 0) out |= mask_bit(i);
    });
    return out;
}

mask_t poset::minimal_of(mask_t s) const {
    mask_t out = 0;
    mask_for_each(s, [&](unsigned i) {
        if ((m_down[i] & s & ~mask_bit(i)) == 0) out |= mask_bit(i);
    });
    return out;
}

std::vector<std::pair<unsigned, unsigned>> poset::covers() const {
    std::vector<std::pair<unsigned, unsigned>> out;
    unsigned n = size();
    for (unsigned j = 0; j < n; ++j) {
        mask_t strictly_below = m_down[j] & ~mask_bit(j);
        mask_t lower_covers = maximal_of(strictly_below);
        mask_for_each(lower_covers, [&](unsigned i) { out.emplace_back(i, j); });
    }
    std::sort(out.begin(), out.end());
    return out;
}

unsigned poset::longest_chain() const {
    unsigned n = size();
    std::vector<unsigned> depth(n, 0);
    // points sorted by down-set size give a linear extension
    std::vector<unsigned> order(n);
    for (unsigned i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](unsigned a, unsigned b) { return mask_popcount(m_down[a]) < mask_popcount(m_down[b]); });
    unsigned best = 0;
    for (unsigned i : order) {
        unsigned d = 1;
        mask_for_each(m_down[i] & ~mask_bit(i), [&](unsigned j) { d = std::max(d, depth[j] + 1); });
        depth[i] = d;
        best = std::max(best, d);
    }
    return best;
}

std::vector<mask_t> poset::components() const {
    unsigned n = size();
    std::vector<mask_t> out;
    mask_t seen = 0;
    for (unsigned i = 0; i < n; ++i) {
        if (mask_test(seen, i)) continue;
        mask_t comp = mask_bit(i);
        for (;;) {
            mask_t grown = comp;
            mask_for_each(comp, [&](unsigned j) { grown |= m_down[j] | m_up[j]; });
            if (grown == comp) break;
            comp = grown;
        }
        seen |= comp;
        out.push_back(comp);
    }
    return out;
}

poset_ptr build_poset_from_relation(std::vector<std::string> names, std::vector<mask_t> below,
                                    unsigned cap) {
    unsigned n = static_cast<unsigned>(names.size());
    if (n > cap || n > max_poset_width)
        raise(errc::cap_exceeded, "poset size " + std::to_string(n) + " exceeds cap " +
                                      std::to_string(std::min<unsigned>(cap, max_poset_width)));
    for (unsigned i = 0; i < n; ++i) {
        if (names[i].empty()) raise(errc::unknown_name, "empty element name");
        for (unsigned j = i + 1; j < n; ++j)
            if (names[i] == names[j]) raise(errc::duplicate_name, names[i]);
    }
    std::vector<mask_t> down(n);
    for (unsigned i = 0; i < n; ++i) down[i] = below[i] | mask_bit(i);
    // transitive closure
    for (bool changed = true; changed;) {
        changed = false;
        for (unsigned j = 0; j < n; ++j) {
            mask_t acc = down[j];
            mask_for_each(down[j], [&](unsigned i) { acc |= down[i]; });
            if (acc != down[j]) {
                down[j] = acc;
                changed = true;
            }
        }
    }
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < i; ++j)
            if (mask_test(down[i], j) && mask_test(down[j], i))
                raise(errc::cycle_detected, names[i] + " and " + names[j] + " are mutually below");
    return std::make_shared<poset>(std::move(names), std::move(down));
}

poset_ptr build_poset(const std::vector<std::string>& names,
                      const std::vector<std::pair<std::string, std::string>>& covers,
                      unsigned cap) {
    std::vector<mask_t> below(names.size(), 0);
    auto find = [&](const std::string& s) -> unsigned {
        for (unsigned i = 0; i < names.size(); ++i)
            if (names[i] == s) return i;
        raise(errc::unknown_name, s);
    };
    std::vector<std::string> copy = names;
    // name validation happens in build_poset_from_relation; resolve covers here
    for (unsigned i = 0; i < names.size(); ++i)
        for (unsigned j = i + 1; j < names.size(); ++j)
            if (names[i] == names[j]) raise(errc::duplicate_name, names[i]);
    for (auto& [lo, hi] : covers) below[find(hi)] |= mask_bit(find(lo));
    return build_poset_from_relation(std::move(copy), std::move(below), cap);
}

poset_ptr induced_subposet(const poset& p, mask_t pts) {
    std::vector<unsigned> idx = mask_indices(pts);
    std::vector<std::string> names;
    std::vector<mask_t> below(idx.size(), 0);
    for (unsigned k = 0; k < idx.size(); ++k) {
        names.push_back(p.name(idx[k]));
        for (unsigned l = 0; l < idx.size(); ++l)
            if (l != k && p.leq(idx[l], idx[k])) below[k] |= mask_bit(l);
    }
    return build_poset_from_relation(std::move(names), std::move(below), max_poset_width);
}

poset_ptr disjoint_union(const std::vector<poset_ptr>& parts) {
    std::vector<std::string> names;
    std::vector<mask_t> below;
    unsigned off = 0;
    for (unsigned k = 0; k < parts.size(); ++k) {
        const poset& p = *parts[k];
        for (unsigned i = 0; i < p.size(); ++i) {
            std::string nm = p.name(i);
            for (const auto& existing : names)
                if (existing == nm) {
                    nm = p.name(i) + "@" + std::to_string(k);
                    break;
                }
            names.push_back(nm);
            below.push_back((p.down(i) & ~mask_bit(i)) << off);
        }
        off += p.size();
    }
    return build_poset_from_relation(std::move(names), std::move(below), max_poset_width);
}

}
