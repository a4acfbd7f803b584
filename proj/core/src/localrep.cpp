#include "gsp4/localrep.hpp"

#include <algorithm>
#include <sstream>

namespace gsp4 {

const char* to_string(RepType t) {
    switch (t) {
        case RepType::BorelOrdinary: return "borel-ordinary";
        case RepType::SiegelOrdinary: return "siegel-ordinary";
        case RepType::KlingenOrdinary: return "klingen-ordinary";
        case RepType::Endoscopic: return "endoscopic";
        case RepType::Irreducible: return "irreducible";
    }
    return "?";
}

namespace {

std::int64_t orbit_min(Prime p, int level, std::int64_t e) {
    const std::int64_t m = p.level_modulus(level);
    std::int64_t best = mod_reduce(e, m);
    std::int64_t cur = best;
    for (int i = 1; i < level; ++i) {
        cur = mod_reduce(cur * p.value(), m);
        best = std::min(best, cur);
    }
    return best;
}

// Splits reducible inductions: a level-2 orbit fixed by Frobenius is two equal
// characters, a level-4 orbit fixed by Frobenius^2 is two equal level-2 orbits.
void push_canonical(Prime p, int level, std::int64_t e, std::vector<PatternSlot>& out) {
    const std::int64_t pv = p.value();
    if (level == 1) {
        out.push_back({1, mod_reduce(e, pv - 1)});
        return;
    }
    if (level == 2) {
        const std::int64_t m = pv * pv - 1;
        e = mod_reduce(e, m);
        if (e % (pv + 1) == 0) {
            const std::int64_t c = e / (pv + 1);
            push_canonical(p, 1, c, out);
            push_canonical(p, 1, c, out);
        } else {
            out.push_back({2, orbit_min(p, 2, e)});
        }
        return;
    }
    const std::int64_t m = p.level_modulus(4);
    e = mod_reduce(e, m);
    if (e % (pv * pv + 1) == 0) {
        const std::int64_t c = e / (pv * pv + 1);
        push_canonical(p, 2, c, out);
        push_canonical(p, 2, mod_reduce(c * pv, pv * pv - 1), out);
    } else {
        out.push_back({4, orbit_min(p, 4, e)});
    }
}

}  // namespace

InertiaPattern::InertiaPattern(Prime p, std::vector<PatternSlot> raw_slots) : p_(p) {
    int dim = 0;
    for (const auto& s : raw_slots) {
        if (!is_valid_level(s.level))
            throw validation_error("pattern slot with invalid level");
        dim += s.level;
        push_canonical(p_, s.level, s.exponent, slots_);
    }
    if (dim != 4) throw validation_error("inertia pattern must have total dimension 4");
    std::sort(slots_.begin(), slots_.end());
}

std::string InertiaPattern::to_string() const {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < slots_.size(); ++i) {
        if (i) os << ", ";
        if (slots_[i].level == 1)
            os << "eps^" << slots_[i].exponent;
        else
            os << "w" << slots_[i].level << "^" << slots_[i].exponent;
    }
    os << "}";
    return os.str();
}

// --- construction -----------------------------------------------------------

LocalRepresentation::LocalRepresentation(Prime p, RepData data) : p_(p), data_(std::move(data)) {}

LocalRepresentation LocalRepresentation::borel(Prime p, std::int64_t x, std::int64_t y,
                                               std::int64_t w, ExtensionFlag tau0,
                                               ExtensionFlag tau1, std::string twist) {
    if (x < 0 || y < 0) throw validation_error("borel exponents must be nonnegative");
    if (mod_reduce(x + y - (w + 1), 2) != 0)
        throw parity_error("borel data requires x + y = w + 1 mod 2");
    const std::int64_t m = p.residue_modulus();
    require_flag_legal(p, tau0, mod_reduce(y, m), "tau0");
    require_flag_legal(p, tau1, mod_reduce(x - y, m), "tau1");

    LocalRepresentation rep(p, BorelData{x, y, w, tau0, tau1, twist});
    const std::int64_t delta = (w + 3 - x - y) / 2;
    rep.central_ = mod_reduce(delta, m);
    rep.similitude_ = mod_reduce(x + y + 2 * delta, m);
    rep.blocks_ = {{Block::Kind::Char, mod_reduce(x + y, m), {}},
                   {Block::Kind::Char, mod_reduce(x, m), {}},
                   {Block::Kind::Char, mod_reduce(y, m), {}},
                   {Block::Kind::Char, 0, {}}};
    rep.ext_flags_ = {{"tau0", tau0}, {"tau1", tau1}};
    return rep;
}

LocalRepresentation LocalRepresentation::siegel(Prime p, std::int64_t x, std::int64_t y,
                                                std::int64_t w,
                                                std::optional<ExtensionFlag> corner,
                                                std::string twist) {
    if (!(0 <= y && y < x && x <= p.value() - 1))
        throw validation_error("siegel data requires 0 <= y < x <= p-1");
    if (mod_reduce(x + y - (w + 1), 2) != 0)
        throw parity_error("siegel data requires x + y = w + 1 mod 2");
    const std::int64_t m = p.residue_modulus();
    if (corner) require_flag_legal(p, *corner, mod_reduce(x + y, m), "corner");

    LocalRepresentation rep(p, SiegelData{x, y, w, corner, twist});
    const std::int64_t delta = (w + 3 - x - y) / 2;
    rep.central_ = mod_reduce(delta, m);
    rep.similitude_ = mod_reduce(x + y + 2 * delta, m);
    rep.blocks_ = {{Block::Kind::Char, mod_reduce(x + y, m), {}},
                   {Block::Kind::Induced2, mod_reduce(y + x * p.value(), p.level_modulus(2)), {}},
                   {Block::Kind::Char, 0, {}}};
    if (corner) rep.ext_flags_ = {{"corner", *corner}};
    return rep;
}

LocalRepresentation LocalRepresentation::klingen(Prime p, std::int64_t x, std::int64_t y,
                                                 std::int64_t w) {
    if (!(0 <= y && y < x && x <= p.value() - 1))
        throw validation_error("klingen data requires 0 <= y < x <= p-1");
    if (w < 0 || w > p.value() - 2)
        throw validation_error("klingen data requires 0 <= w <= p-2");
    if (mod_reduce(x + y - (w + 1), 2) != 0)
        throw parity_error("klingen data requires x + y = w + 1 mod 2");

    LocalRepresentation rep(p, KlingenData{x, y, w});
    const std::int64_t m2 = p.level_modulus(2);
    const std::int64_t e1 = mod_reduce(y + x * p.value(), m2);
    const std::int64_t e2 = mod_reduce((w + 3) * (p.value() + 1) - e1, m2);
    rep.central_ = 0;
    rep.similitude_ = mod_reduce(w + 3, p.residue_modulus());
    rep.blocks_ = {{Block::Kind::Induced2, e1, {}}, {Block::Kind::Induced2, e2, {}}};
    return rep;
}

LocalRepresentation LocalRepresentation::endoscopic(Prime p, std::int64_t a, std::int64_t b,
                                                    std::int64_t c, std::int64_t d,
                                                    std::int64_t e) {
    if (!(0 <= b && b < a && a <= p.value() - 1) || !(0 <= d && d < c && c <= p.value() - 1))
        throw validation_error("endoscopic data requires 0 <= b < a <= p-1 and 0 <= d < c <= p-1");
    if (e < 0 || e > p.value() - 1)
        throw validation_error("endoscopic twist exponent must lie in [0, p-1]");
    if (mod_reduce(a + b - c - d, p.residue_modulus()) != 0)
        throw validation_error("endoscopic blocks must have equal determinants: a+b = c+d mod p-1");

    const std::int64_t m2 = p.level_modulus(2);
    const std::int64_t e1 = mod_reduce(b + a * p.value(), m2);
    const std::int64_t e2 = mod_reduce(d + c * p.value(), m2);
    for (std::int64_t k = 0; k < p.residue_modulus(); ++k) {
        const std::int64_t t1 = mod_reduce(e1 + k * (p.value() + 1), m2);
        const std::int64_t t2 = mod_reduce(e1 * p.value() + k * (p.value() + 1), m2);
        if (e2 == t1 || e2 == t2)
            throw validation_error("endoscopic blocks must not be twist-isomorphic");
    }

    bool swapped = false;
    std::int64_t A = a, B = b, C = c, D = d;
    if (a + b < c + d) {  // larger determinant-sum block first; ties keep input order
        std::swap(A, C);
        std::swap(B, D);
        swapped = true;
    }

    LocalRepresentation rep(p, EndoscopicData{A, B, C, D, e, swapped});
    rep.central_ = mod_reduce(e, p.residue_modulus());
    rep.similitude_ = mod_reduce(A + B + 2 * e, p.residue_modulus());
    rep.blocks_ = {{Block::Kind::Induced2, mod_reduce(B + A * p.value(), m2), {}},
                   {Block::Kind::Induced2, mod_reduce(D + C * p.value(), m2), {}}};
    return rep;
}

LocalRepresentation LocalRepresentation::irreducible(Prime p, std::int64_t exponent,
                                                     std::string twist) {
    const std::int64_t m4 = p.level_modulus(4);
    const std::int64_t e = mod_reduce(exponent, m4);
    if (e % (p.value() + 1) != 0)
        throw validation_error("irreducible symplectic data requires exponent = 0 mod p+1");
    if (e % (p.value() * p.value() + 1) == 0)
        throw validation_error("irreducible data requires exponent != 0 mod p^2+1");

    LocalRepresentation rep(p, IrreducibleData{e, twist});
    rep.central_ = 0;
    rep.similitude_ = mod_reduce(e / (p.value() + 1), p.residue_modulus());
    rep.blocks_ = {{Block::Kind::Induced4, e, twist}};
    return rep;
}

// --- classification and pattern ----------------------------------------------

RepType classify(const LocalRepresentation& rep) {
    int chars = 0, ind2 = 0, ind4 = 0;
    int dim = 0;
    for (const auto& b : rep.blocks()) {
        dim += b.dim();
        switch (b.kind) {
            case Block::Kind::Char: ++chars; break;
            case Block::Kind::Induced2: ++ind2; break;
            case Block::Kind::Induced4: ++ind4; break;
        }
    }
    if (dim != 4) throw validation_error("block list must have total dimension 4");

    if (chars == 4) return RepType::BorelOrdinary;
    if (chars == 2 && ind2 == 1) return RepType::SiegelOrdinary;
    if (ind2 == 2) {
        const Prime& p = rep.prime();
        const std::int64_t m2 = p.level_modulus(2);
        const std::int64_t shift = rep.central_exponent() * (p.value() + 1);
        const std::int64_t e1 = mod_reduce(rep.blocks()[0].exponent + shift, m2);
        const std::int64_t e2 = mod_reduce(rep.blocks()[1].exponent + shift, m2);
        const std::int64_t dual = mod_reduce(rep.similitude_exponent() * (p.value() + 1) - e1, m2);
        if (e2 == dual || e2 == mod_reduce(dual * p.value(), m2)) return RepType::KlingenOrdinary;
        if (mod_reduce(e1 - e2, p.residue_modulus()) == 0) return RepType::Endoscopic;
        throw validation_error("two induced blocks are neither similitude-dual nor of equal determinant");
    }
    if (ind4 == 1 && dim == 4 && chars == 0 && ind2 == 0) return RepType::Irreducible;
    throw validation_error("block list does not match any of the five shapes");
}

InertiaPattern inertia_pattern(const LocalRepresentation& rep) {
    const Prime& p = rep.prime();
    std::vector<PatternSlot> slots;
    for (const auto& b : rep.blocks()) {
        std::int64_t fold = 1;
        for (int i = 0; i < b.level(); ++i) fold *= p.value();
        fold = (fold - 1) / p.residue_modulus();  // 1 + p + ... + p^{level-1}
        slots.push_back({b.level(), b.exponent + rep.central_exponent() * fold});
    }
    return InertiaPattern(p, std::move(slots));
}

// --- weight association -------------------------------------------------------

namespace {

std::optional<HighestWeight> weight_if_restricted(Prime p, std::int64_t a, std::int64_t b,
                                                  std::int64_t c) {
    const HighestWeight lambda(a, b, c);
    if (!in_X1(p, lambda)) return std::nullopt;
    return lambda;
}

}  // namespace

std::optional<HighestWeight> associated_weight(const LocalRepresentation& rep) {
    const Prime& p = rep.prime();
    const std::int64_t pm = p.residue_modulus();

    if (const auto* bd = std::get_if<BorelData>(&rep.data())) {
        std::int64_t x = bd->x, w = bd->w;
        if (x <= bd->y) {  // raise x once; the twist exponent delta is unchanged
            x += pm;
            w += pm;
        }
        return weight_if_restricted(p, x - 2, bd->y - 1, w);
    }
    if (const auto* sd = std::get_if<SiegelData>(&rep.data())) {
        return weight_if_restricted(p, sd->x - 2, sd->y - 1, sd->w);
    }
    if (const auto* kd = std::get_if<KlingenData>(&rep.data())) {
        const std::int64_t s = kd->w + 3;
        const std::int64_t m1 = std::max(kd->x + kd->y - s, kd->x - kd->y);
        const std::int64_t m2 = std::min(kd->x + kd->y - s, kd->x - kd->y);
        if (m2 < 1) return std::nullopt;
        return weight_if_restricted(p, m1 - 2, m2 - 1, kd->w);
    }
    if (const auto* ed = std::get_if<EndoscopicData>(&rep.data())) {
        const std::int64_t w = ed->a + ed->b - 3 + 2 * ed->e;
        std::int64_t m1 = 0, m2 = 0;
        if (ed->a + ed->b == ed->c + ed->d) {
            if (ed->b < ed->d) {
                m1 = ed->c - ed->b;
                m2 = ed->d - ed->b;
            } else {
                m1 = ed->a - ed->d;
                m2 = ed->b - ed->d;
            }
        } else {  // a+b = c+d + (p-1); reindex (c, d) -> (c-1, d+p)
            m1 = ed->a - (ed->c - 1);
            m2 = ed->b - (ed->c - 1);
        }
        if (m2 < 1) return std::nullopt;
        return weight_if_restricted(p, m1 - 2, m2 - 1, w);
    }
    return std::nullopt;  // irreducible: no weight recipe
}

bool is_generic(const LocalRepresentation& rep, const HighestWeight& lambda) {
    const auto expected = associated_weight(rep);
    if (!expected || !(*expected == lambda))
        throw validation_error("is_generic requires the weight associated to the representation");
    const Prime& p = rep.prime();
    switch (shifted_alcove(p, lambda)) {
        case Alcove::C0:
            return true;
        case Alcove::C1: {
            const std::int64_t m1 = lambda.a + 2, m2 = lambda.b + 1;
            if (m1 + m2 <= p.value() + 1) return false;
            if (classify(rep) == RepType::KlingenOrdinary && m1 >= p.value() - 1) return false;
            return true;
        }
        default:
            return false;
    }
}

bool is_generic(const LocalRepresentation& rep) {
    const auto lambda = associated_weight(rep);
    if (!lambda) return false;
    return is_generic(rep, *lambda);
}

// --- Fontaine-Laffaille pattern comparison ------------------------------------

std::vector<InertiaPattern> fl_reduction_patterns(RepType type, Prime p,
                                                  const HighestWeight& lambda) {
    const std::int64_t m1 = lambda.a + 2, m2 = lambda.b + 1, w = lambda.c;
    if (shifted_alcove(p, lambda) != Alcove::C1)
        throw unsupported_weight("reduction patterns are defined for generic weights of type C1");
    if (m1 + m2 <= p.value() + 1 ||
        (type == RepType::KlingenOrdinary && m1 >= p.value() - 1))
        throw unsupported_weight("reduction patterns require a generic weight");

    // Weights of the reflected parameter (p-m2, p-m1; w+3).
    const std::int64_t dp = (w + 3 + m1 + m2) / 2 - p.value();
    const std::int64_t h_top = dp + 2 * p.value() - m1 - m2;
    const std::int64_t h_mid_hi = dp + p.value() - m2;
    const std::int64_t h_mid_lo = dp + p.value() - m1;
    const std::int64_t pv = p.value();

    switch (type) {
        case RepType::BorelOrdinary:
            return {InertiaPattern(
                p, {{1, h_top}, {1, h_mid_hi}, {1, h_mid_lo}, {1, dp}})};
        case RepType::SiegelOrdinary: {
            InertiaPattern outer(p, {{1, h_top}, {2, h_mid_lo + h_mid_hi * pv}, {1, dp}});
            InertiaPattern repeated(
                p, {{1, h_mid_hi}, {2, h_mid_lo + h_mid_hi * pv}, {1, h_mid_hi}});
            return {outer, repeated};
        }
        case RepType::KlingenOrdinary:
        case RepType::Endoscopic:
            return {InertiaPattern(
                p, {{2, h_mid_lo + h_mid_hi * pv}, {2, dp + h_top * pv}})};
        default:
            throw unsupported_weight("no reduction pattern for the irreducible shape");
    }
}

bool fl_obstruction_check(const LocalRepresentation& rep) {
    const auto lambda = associated_weight(rep);
    if (!lambda)
        throw unsupported_weight("representation has no associated restricted weight");
    if (!is_generic(rep, *lambda))
        throw unsupported_weight("obstruction check requires a generic instance");
    if (shifted_alcove(rep.prime(), *lambda) != Alcove::C1)
        throw unsupported_weight("lowest-alcove instances are outside the check's domain");

    const InertiaPattern actual = inertia_pattern(rep);
    for (const auto& predicted :
         fl_reduction_patterns(classify(rep), rep.prime(), *lambda))
        if (predicted == actual) return false;
    return true;
}

}  // namespace gsp4
