#include "coheyt/ambient.hpp"

#include <algorithm>

namespace coheyt {

ambient::ambient(subalgebra seed, variety_tag v)
    : m_variety(v), m_current(seed.parent()) {
    int k = static_cast<int>(v);
    if (k < 1 || k > 6)
        raise(errc::variety_mismatch, "ambient growth is defined for V1..V6 only");
    if (!variety_holds(m_current, v))
        raise(errc::variety_mismatch,
              std::string("seed algebra is not in ") + variety_name(v));
    for (const auto& d : seed.carrier()) track(to_text(d), d);
}

ambient ambient_new(const subalgebra& S, variety_tag v) { return ambient(S, v); }

void ambient::track(const std::string& name, const downset& d) {
    if (d.parent.get() != m_current.pos().get())
        raise(errc::parent_mismatch, "tracked element outside the current algebra");
    m_tracked[name] = d;
}

const downset& ambient::tracked(const std::string& name) const {
    auto it = m_tracked.find(name);
    if (it == m_tracked.end()) raise(errc::unknown_name, name);
    return it->second;
}

const embedding& ambient::last_step() const {
    if (m_history.empty()) raise(errc::index_out_of_range, "no growth step yet");
    return m_history.back().second;
}

void ambient::grow(const std::string& tag, const algebra& ext, embedding emb) {
    for (auto& [name, d] : m_tracked) d = emb.apply(d);
    m_history.emplace_back(tag, std::move(emb));
    m_current = ext;
}

downset ambient::density(const downset& a, const downset& c) {
    int variant = static_cast<int>(m_variety);
    std::string why;
    if (!density_hypothesis(m_current, variant, a, c, &why))
        raise(errc::hypothesis_violated, why);
    density_result r = density_extension(m_current, a, c, variant);
    grow(std::string("D") + std::to_string(variant), r.ext, std::move(r.emb));
    return r.b;
}

std::pair<downset, downset> ambient::splitting(const downset& a, const downset& b1,
                                               const downset& b2) {
    int variant = static_cast<int>(m_variety);
    std::string why;
    if (!splitting_hypothesis(m_current, variant, a, b1, b2, &why))
        raise(errc::hypothesis_violated, why);
    splitting_result r = splitting_extension(m_current, a, b1, b2, variant);
    grow(std::string("S") + std::to_string(variant), r.ext, std::move(r.emb));
    return {r.a1, r.a2};
}

namespace {

struct remapper {
    ambient& A;
    std::vector<downset>& carrier;
    signature& sig;

    // push everything through the latest growth step
    void operator()() {
        const embedding& e = A.last_step();
        for (auto& d : carrier) d = e.apply(d);
        sig.g = e.apply(sig.g);
        sig.h1 = e.apply(sig.h1);
        sig.h2 = e.apply(sig.h2);
    }
};

[[noreturn]] void derived_clause_failed(const std::string& clause) {
    raise(errc::hypothesis_violated,
          "derived clause failed: " + clause +
              " (signature not realizable in this variety, or construction bug)");
}

}

std::pair<downset, downset> realize_signature(ambient& A, std::vector<downset>& carrier,
                                              signature& sig) {
    int variant = static_cast<int>(A.variety());
    subalgebra S(A.current(), carrier);
    if (!signature_valid(S, sig)) raise(errc::invalid_signature, to_text(sig));
    remapper remap{A, carrier, sig};
    downset gm = S.predecessor_join(sig.g);
    bool d3_family = variant == 3 || variant == 4 || variant == 5;

    auto finish = [&](const downset& x1, const downset& x2) {
        subalgebra S2(A.current(), carrier);
        auto got = primitive_check(S2, x1, x2);
        if (!got || !(*got == sig))
            derived_clause_failed("primitive tuple does not carry the requested signature");
        return std::pair<downset, downset>{x1, x2};
    };

    if (sig.r == 2) {
        // derived preconditions of the variety's splitting axiom, evaluated
        // on the carrier (terms over L0 take the same value in any extension)
        downset hh = meet(sig.h1, sig.h2);
        if (variant == 2 || variant == 5) {
            if (!meet(hh, top_minus(top_minus(sig.g))).is_empty())
                derived_clause_failed("h1 ^ h2 ^ (1-(1-g)) = 0");
        } else if (variant == 4) {
            if (!meet(hh, top_minus(sig.g)).is_empty())
                derived_clause_failed("h1 ^ h2 ^ (1-g) = 0");
        } else if (variant == 6) {
            if (!hh.is_empty()) derived_clause_failed("h1 ^ h2 = 0");
        }
        auto [y1, y2] = A.splitting(sig.g, sig.h1, sig.h2);
        remap();
        downset gm2 = subalgebra(A.current(), carrier).predecessor_join(sig.g);
        if (meet(gm2, y1) != sig.h1 || meet(gm2, y2) != sig.h2)
            derived_clause_failed("g^- ^ y_i = h_i");
        return finish(y1, y2);
    }

    // r = 1
    if (d3_family) {
        if (!sig.h1.is_empty())
            derived_clause_failed("h1 = 0 (r = 1 signatures in V3/V4/V5 have h1 = 0)");
        if (top_minus(top_minus(sig.g)) != sig.g)
            derived_clause_failed("g = 1-(1-g) (g must be a component of 1)");
        auto [y1, y2] = A.splitting(sig.g, sig.h1, gm);
        remap();
        if (top_minus(top_minus(y1)) != y1)
            derived_clause_failed("y1 = 1-(1-y1) after the split");
        downset x = A.density(y1, A.current().bot());
        remap();
        downset gm2 = subalgebra(A.current(), carrier).predecessor_join(sig.g);
        if (!meet(gm2, x).is_empty()) derived_clause_failed("g^- ^ x = 0");
        return finish(x, x);
    }

    if (sig.h1 == gm) {
        // the density axiom alone realizes the signature
        downset x = A.density(sig.g, gm);
        remap();
        return finish(x, x);
    }

    downset split_base = sig.g;
    downset partner = gm;
    if (variant == 6) {
        // S6 requires disjoint sides; g^- - h1 completes h1 inside g^-
        partner = diff(gm, sig.h1);
        if (!meet(sig.h1, partner).is_empty())
            derived_clause_failed("h1 ^ (g^- - h1) = 0 (not a V6 signature)");
    } else if (variant == 2) {
        if (!meet(meet(sig.h1, gm), top_minus(top_minus(sig.g))).is_empty()) {
            // S2 does not apply to (g, h1, g^-); interpose a density step:
            // no component of 1 lies below the new b, so 1-(1-b) = 0
            downset b = A.density(sig.g, gm);
            remap();
            split_base = b;
            partner = subalgebra(A.current(), carrier).predecessor_join(sig.g);
            if (!meet(meet(sig.h1, partner), top_minus(top_minus(split_base))).is_empty())
                derived_clause_failed("h1 ^ g^- ^ (1-(1-b)) = 0");
        }
    }

    auto [y1, y2] = A.splitting(split_base, sig.h1, partner);
    remap();
    if (diff(y1, sig.h1) != y1) derived_clause_failed("h1 << y1");
    downset x = A.density(y1, sig.h1);
    remap();
    downset gm2 = subalgebra(A.current(), carrier).predecessor_join(sig.g);
    if (meet(gm2, x) != sig.h1) derived_clause_failed("g^- ^ x = h1");
    return finish(x, x);
}

embedding embed_over(ambient& A, std::vector<downset> s_images, const subalgebra& S,
                     const algebra& L1) {
    if (!variety_holds(L1, A.variety()))
        raise(errc::variety_mismatch,
              std::string("L1 is not in ") + variety_name(A.variety()));
    if (s_images.size() != S.carrier().size())
        raise(errc::index_out_of_range, "one image per carrier element expected");
    // current correspondence: elements of the growing subalgebra of L1 and
    // their images in the ambient, kept aligned
    std::vector<downset> side = S.carrier();
    std::vector<downset> imgs = std::move(s_images);

    auto image_of = [&](const downset& d) -> const downset& {
        for (std::size_t i = 0; i < side.size(); ++i)
            if (side[i] == d) return imgs[i];
        raise(errc::not_in_carrier, to_text(d));
    };

    for (auto& [Si, tuple] : primitive_tower(L1, S)) {
        // the signature's pair {h1,h2} is unordered, so remember which h the
        // first tuple coordinate carries
        downset gm_l1 = Si.predecessor_join(tuple.sig.g);
        downset h_of_x1 = meet(gm_l1, tuple.x1);
        signature img_sig = make_signature(image_of(tuple.sig.g), image_of(tuple.sig.h1),
                                           image_of(tuple.sig.h2), tuple.sig.r);
        auto [t1, t2] = realize_signature(A, imgs, img_sig);
        if (tuple.sig.r == 2) {
            // realign: x1 must pair with the witness meeting g^- in its own h
            downset gm_amb = subalgebra(A.current(), imgs).predecessor_join(img_sig.g);
            downset want = image_of(h_of_x1);
            if (meet(gm_amb, t1) != want) std::swap(t1, t2);
            if (meet(gm_amb, t1) != want)
                raise(errc::hypothesis_violated, "witness alignment failed");
        }
        // extend the correspondence to the next tower stage via join
        // irreducible components (corollary: same signature, same shape)
        std::vector<downset> gens = Si.carrier();
        gens.push_back(tuple.x1);
        gens.push_back(tuple.x2);
        subalgebra Snext = generated_subalgebra(L1, std::move(gens));
        std::vector<downset> nside, nimgs;
        std::vector<downset> next_jir = Snext.jir();
        std::vector<downset> jir_imgs;
        for (const auto& j : next_jir) {
            if (j == tuple.x1)
                jir_imgs.push_back(t1);
            else if (j == tuple.x2)
                jir_imgs.push_back(t2);
            else
                jir_imgs.push_back(image_of(j));
        }
        for (const auto& s : Snext.carrier()) {
            downset im = A.current().bot();
            for (const auto& comp : Snext.jir_components(s)) {
                for (std::size_t k = 0; k < next_jir.size(); ++k)
                    if (next_jir[k] == comp) im = join(im, jir_imgs[k]);
            }
            nside.push_back(s);
            nimgs.push_back(im);
        }
        side = std::move(nside);
        imgs = std::move(nimgs);
        // the extension step must transport operations exactly
        for (std::size_t i = 0; i < side.size(); ++i)
            for (std::size_t j = 0; j < side.size(); ++j) {
                if (image_of(join(side[i], side[j])) != join(imgs[i], imgs[j]) ||
                    image_of(meet(side[i], side[j])) != meet(imgs[i], imgs[j]) ||
                    image_of(diff(side[i], side[j])) != diff(imgs[i], imgs[j]))
                    raise(errc::hypothesis_violated,
                          "tower transport broke at (" + to_text(side[i]) + "," +
                              to_text(side[j]) + ")");
            }
    }

    // side now lists every element of L1
    std::vector<downset> jimgs(L1.points(), A.current().bot());
    for (unsigned x = 0; x < L1.points(); ++x) {
        downset px = principal(L1.pos(), x);
        jimgs[x] = image_of(px);
    }
    embedding emb = embedding::full(L1, A.current(), std::move(jimgs), "embed-over");
    check_result chk = check_embedding(emb);
    if (!chk.ok) raise(errc::hypothesis_violated, "final embedding invalid: " + chk.violation);
    return emb;
}

finite_embedding embed_finite(const algebra& L1, variety_tag v) {
    if (!variety_holds(L1, v))
        raise(errc::variety_mismatch, std::string("algebra is not in ") + variety_name(v));
    if (L1.trivial()) {
        ambient A(subalgebra(L1, {L1.bot()}), v);
        return finite_embedding{std::move(A), embedding::identity(L1)};
    }
    algebra two(build_poset({"u"}, {}));
    ambient A(full_subalgebra(two), v);
    subalgebra S(L1, {L1.bot(), L1.top()});
    std::vector<downset> imgs{A.current().bot(), A.current().top()};
    embedding emb = embed_over(A, std::move(imgs), S, L1);
    return finite_embedding{std::move(A), std::move(emb)};
}

}
