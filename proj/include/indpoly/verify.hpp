// Executable checks for the coefficient inequalities: each returns a
// Verdict with premise status, per-part results, and the first failed
// comparison. Raw-sequence variants allow checking printed coefficient
// sequences for graphs that are not available.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "classify.hpp"
#include "graph.hpp"
#include "independence.hpp"
#include "polyseq.hpp"
#include "verdict.hpp"

namespace indpoly {

// Exact ceiling of a/b on nonnegative integers.
inline int ceil_div(int a, int b) {
    if (b <= 0) throw std::invalid_argument("ceil_div: divisor must be positive");
    if (a < 0) throw std::invalid_argument("ceil_div: dividend must be nonnegative");
    return (a + b - 1) / b;
}

// One sub-statement of a multi-part check. violation stores the
// statement's left- and right-hand values at the failing index.
struct PartResult {
    std::string name;
    bool applicable = true;
    bool holds = true;
    std::optional<Violation> violation;
};

struct CheckVerdict : Verdict {
    std::vector<PartResult> parts;
};

namespace detail {

inline void finish_verdict(CheckVerdict& v) {
    v.conclusion_holds = true;
    std::string summary;
    for (const PartResult& p : v.parts) {
        if (!summary.empty()) summary += "; ";
        summary += p.name + ": " + (!p.applicable ? "n/a" : p.holds ? "holds" : "fails");
        if (p.applicable && !p.holds) {
            v.conclusion_holds = false;
            if (!v.first_violation) v.first_violation = p.violation;
            if (p.violation)
                summary += " at k=" + std::to_string(p.violation->index) + " (" +
                           p.violation->left.str() + " vs " + p.violation->right.str() + ")";
        }
    }
    if (v.notes.empty())
        v.notes = summary;
    else
        v.notes += "; " + summary;
}

// s_t >= s_{t+1} >= ... >= s_alpha
inline PartResult tail_part(const std::string& name, const CoeffSeq& s, int t) {
    PartResult p{name};
    for (int k = t; k < s.degree(); ++k) {
        if (s[k] < s[k + 1]) {
            p.holds = false;
            p.violation = Violation{k, s[k], s[k + 1]};
            return p;
        }
    }
    return p;
}

// s_0 <= s_1 <= ... <= s_t
inline PartResult head_part(const std::string& name, const CoeffSeq& s, int t) {
    PartResult p{name};
    for (int k = 0; k < t; ++k) {
        if (s[k] > s[k + 1]) {
            p.holds = false;
            p.violation = Violation{k, s[k], s[k + 1]};
            return p;
        }
    }
    return p;
}

}  // namespace detail

// (i) (alpha-k)*s_k <= (k+1)*s_{k+1} for 0 <= k < alpha;
// (ii) s_{k-1} <= s_k for 1 <= k <= (alpha+1)/2. Premise: well-covered.
inline CheckVerdict verify_prop2_seq(const CoeffSeq& s,
                                     PremiseStatus premise = PremiseStatus::Unknown) {
    CheckVerdict v;
    v.statement_id = "prop2";
    v.premise = premise;
    const int alpha = s.degree();

    PartResult pi{"i"};
    for (int k = 0; k < alpha; ++k) {
        BigInt left = (alpha - k) * s[k];
        BigInt right = (k + 1) * s[k + 1];
        if (left > right) {
            pi.holds = false;
            pi.violation = Violation{k, left, right};
            break;
        }
    }
    v.parts.push_back(pi);

    PartResult pii{"ii"};
    for (int k = 1; 2 * k <= alpha + 1; ++k) {
        if (s[k - 1] > s[k]) {
            pii.holds = false;
            pii.violation = Violation{k, s[k - 1], s[k]};
            break;
        }
    }
    v.parts.push_back(pii);

    detail::finish_verdict(v);
    return v;
}

inline CheckVerdict verify_prop2(const Graph& g, int max_n = kDefaultMaxVertices) {
    CoeffSeq s = independence_polynomial(g, max_n);
    bool wc = is_well_covered(g).value;
    return verify_prop2_seq(s, wc ? PremiseStatus::Holds : PremiseStatus::Fails);
}

// s_k <= s_{alpha-k} for 0 <= k <= alpha/2. Premise: well-covered.
inline CheckVerdict verify_cor1_seq(const CoeffSeq& s,
                                    PremiseStatus premise = PremiseStatus::Unknown) {
    CheckVerdict v;
    v.statement_id = "cor1";
    v.premise = premise;
    const int alpha = s.degree();
    PartResult p{"symmetry"};
    for (int k = 0; 2 * k <= alpha; ++k) {
        if (s[k] > s[alpha - k]) {
            p.holds = false;
            p.violation = Violation{k, s[k], s[alpha - k]};
            break;
        }
    }
    v.parts.push_back(p);
    detail::finish_verdict(v);
    return v;
}

inline CheckVerdict verify_cor1(const Graph& g, int max_n = kDefaultMaxVertices) {
    CoeffSeq s = independence_polynomial(g, max_n);
    bool wc = is_well_covered(g).value;
    return verify_cor1_seq(s, wc ? PremiseStatus::Holds : PremiseStatus::Fails);
}

// (k+1)*s_{k+1} <= omega_{alpha-k}*s_k for 0 <= k < alpha, and the top
// case alpha*s_alpha <= omega_1*s_{alpha-1} <= omega*s_{alpha-1}.
// Unconditional; a failure indicates an implementation bug.
inline CheckVerdict verify_lemma1_seq(const CoeffSeq& s, const OmegaProfile& prof) {
    CheckVerdict v;
    v.statement_id = "lemma1";
    v.premise = PremiseStatus::Holds;
    const int alpha = s.degree();

    PartResult pmain{"bound"};
    for (int k = 0; k < alpha; ++k) {
        BigInt left = (k + 1) * s[k + 1];
        BigInt right = prof.omega_for_size(k) * s[k];
        if (left > right) {
            pmain.holds = false;
            pmain.violation = Violation{k, left, right};
            break;
        }
    }
    v.parts.push_back(pmain);

    PartResult ptop{"top"};
    if (alpha >= 1) {
        BigInt omega1_bound = prof.omegas[1] * s[alpha - 1];
        if (alpha * s[alpha] > omega1_bound) {
            ptop.holds = false;
            ptop.violation = Violation{alpha - 1, alpha * s[alpha], omega1_bound};
        } else if (omega1_bound > prof.clique_number * s[alpha - 1]) {
            ptop.holds = false;
            ptop.violation =
                Violation{alpha - 1, omega1_bound, prof.clique_number * s[alpha - 1]};
        }
    }
    v.parts.push_back(ptop);

    detail::finish_verdict(v);
    if (!v.conclusion_holds) v.notes += "; proved statement failed: implementation bug suspected";
    return v;
}

inline CheckVerdict verify_lemma1(const Graph& g, int max_n = kDefaultMaxVertices) {
    return verify_lemma1_seq(independence_polynomial(g, max_n), omega_profile(g, max_n));
}

// For quasi-regularizable graphs of order 2*alpha:
// (i) omega_{alpha-k} <= 2(alpha-k); (ii) (k+1)*s_{k+1} <= 2(alpha-k)*s_k;
// (iii) nonincreasing tail from ceil((2*alpha-1)/3).
inline CheckVerdict verify_prop1_seq(const CoeffSeq& s,
                                     PremiseStatus premise = PremiseStatus::Unknown,
                                     const OmegaProfile* prof = nullptr) {
    CheckVerdict v;
    v.statement_id = "prop1";
    v.premise = premise;
    const int alpha = s.degree();

    PartResult pi{"i"};
    if (prof == nullptr) {
        pi.applicable = false;  // needs the graph, not just the sequence
    } else {
        for (int k = 0; k <= alpha; ++k) {
            BigInt left = prof->omega_for_size(k);
            BigInt right = 2 * (alpha - k);
            if (left > right) {
                pi.holds = false;
                pi.violation = Violation{k, left, right};
                break;
            }
        }
    }
    v.parts.push_back(pi);

    PartResult pii{"ii"};
    for (int k = 0; k < alpha; ++k) {
        BigInt left = (k + 1) * s[k + 1];
        BigInt right = 2 * (alpha - k) * s[k];
        if (left > right) {
            pii.holds = false;
            pii.violation = Violation{k, left, right};
            break;
        }
    }
    v.parts.push_back(pii);

    v.parts.push_back(detail::tail_part("iii", s, std::min(ceil_div(2 * alpha - 1, 3), alpha)));

    detail::finish_verdict(v);
    return v;
}

inline CheckVerdict verify_prop1(const Graph& g, int max_n = kDefaultMaxVertices) {
    CoeffSeq s = independence_polynomial(g, max_n);
    OmegaProfile prof = omega_profile(g, max_n);
    bool qr = is_quasi_regularizable(g).value;
    bool order_ok = g.order() == 2 * s.degree();
    auto premise = (qr && order_ok) ? PremiseStatus::Holds : PremiseStatus::Fails;
    CheckVerdict v = verify_prop1_seq(s, premise, &prof);
    if (!order_ok && g.order() > 2 * s.degree())
        v.notes += "; order exceeds 2*alpha, so parts (i)/(ii) must fail at k=0";
    return v;
}

// For very well-covered graphs of order >= 2:
// (i) (alpha-k)*s_k <= (k+1)*s_{k+1} <= 2(alpha-k)*s_k;
// (ii) nondecreasing head through ceil(alpha/2), nonincreasing tail from
//      ceil((2*alpha-1)/3);
// (iii) s_{alpha-2}*s_alpha <= s_{alpha-1}^2 (alpha >= 2);
// (iv) unimodal while alpha <= 9; (v) log-concave while alpha <= 5.
inline CheckVerdict verify_main_theorem_seq(const CoeffSeq& s,
                                            PremiseStatus premise = PremiseStatus::Unknown) {
    CheckVerdict v;
    v.statement_id = "theorem";
    v.premise = premise;
    const int alpha = s.degree();

    PartResult pi{"i"};
    for (int k = 0; k < alpha; ++k) {
        BigInt mid = (k + 1) * s[k + 1];
        BigInt lower = (alpha - k) * s[k];
        BigInt upper = 2 * (alpha - k) * s[k];
        if (lower > mid) {
            pi.holds = false;
            pi.violation = Violation{k, lower, mid};
            break;
        }
        if (mid > upper) {
            pi.holds = false;
            pi.violation = Violation{k, mid, upper};
            break;
        }
    }
    v.parts.push_back(pi);

    PartResult phead = detail::head_part("ii.head", s, std::min(ceil_div(alpha, 2), alpha));
    v.parts.push_back(phead);
    v.parts.push_back(detail::tail_part("ii.tail", s, std::min(ceil_div(2 * alpha - 1, 3), alpha)));

    PartResult piii{"iii"};
    if (alpha < 2) {
        piii.applicable = false;
    } else if (s[alpha - 2] * s[alpha] > s[alpha - 1] * s[alpha - 1]) {
        piii.holds = false;
        piii.violation = Violation{alpha - 1, s[alpha - 2] * s[alpha], s[alpha - 1] * s[alpha - 1]};
    }
    v.parts.push_back(piii);

    PartResult piv{"iv"};
    if (alpha > 9) {
        piv.applicable = false;
    } else {
        ShapeReport sh = shape(s);
        if (!sh.unimodal) {
            piv.holds = false;
            // witness: first ascent after the monotone head ends
            for (int k = sh.head_nondecreasing_through; k < alpha; ++k) {
                if (s[k] < s[k + 1]) {
                    piv.violation = Violation{k, s[k], s[k + 1]};
                    break;
                }
            }
        }
    }
    v.parts.push_back(piv);

    PartResult pv{"v"};
    if (alpha > 5) {
        pv.applicable = false;
    } else {
        ShapeReport sh = shape(s);
        if (!sh.log_concave) {
            pv.holds = false;
            int i = *sh.first_log_concavity_violation;
            pv.violation = Violation{i, s[i] * s[i], s[i - 1] * s[i + 1]};
        }
    }
    v.parts.push_back(pv);

    detail::finish_verdict(v);
    return v;
}

inline CheckVerdict verify_main_theorem(const Graph& g, int max_n = kDefaultMaxVertices) {
    CoeffSeq s = independence_polynomial(g, max_n);
    bool premise = g.order() >= 2 && is_very_well_covered(g);
    CheckVerdict v =
        verify_main_theorem_seq(s, premise ? PremiseStatus::Holds : PremiseStatus::Fails);
    if (g.order() < 2) v.notes += "; order < 2";
    return v;
}

// For perfect graphs: nonincreasing tail from
// ceil((omega*alpha-1)/(omega+1)).
inline CheckVerdict verify_prop3_seq(const CoeffSeq& s, int omega,
                                     PremiseStatus premise = PremiseStatus::Unknown) {
    CheckVerdict v;
    v.statement_id = "prop3";
    v.premise = premise;
    const int alpha = s.degree();
    int t = alpha == 0 ? 0 : std::min(ceil_div(omega * alpha - 1, omega + 1), alpha);
    v.parts.push_back(detail::tail_part("tail", s, t));
    detail::finish_verdict(v);
    v.notes += "; start index " + std::to_string(t) +
               (alpha >= omega ? " (nontrivial range: alpha >= omega)"
                               : " (empty range: alpha < omega)");
    return v;
}

inline CheckVerdict verify_prop3(const Graph& g, int max_n = kDefaultMaxVertices,
                                 int perfect_max_n = kDefaultPerfectMaxVertices) {
    CoeffSeq s = independence_polynomial(g, max_n);
    int omega = clique_number(g, max_n);
    PerfectResult pf = is_perfect(g, perfect_max_n);
    PremiseStatus premise = pf.status == PerfectStatus::Skipped ? PremiseStatus::Unknown
                            : pf.status == PerfectStatus::True  ? PremiseStatus::Holds
                                                                : PremiseStatus::Fails;
    CheckVerdict v = verify_prop3_seq(s, omega, premise);
    if (premise == PremiseStatus::Unknown)
        v.notes += "; perfection check skipped (instance too large)";
    return v;
}

// For bipartite graphs (trees in particular): nonincreasing tail from
// ceil((2*alpha-1)/3).
inline CheckVerdict verify_cor2_cor3_seq(const CoeffSeq& s,
                                         PremiseStatus premise = PremiseStatus::Unknown) {
    CheckVerdict v;
    v.statement_id = "cor2_cor3";
    v.premise = premise;
    const int alpha = s.degree();
    v.parts.push_back(detail::tail_part("tail", s, std::min(ceil_div(2 * alpha - 1, 3), alpha)));
    detail::finish_verdict(v);
    return v;
}

inline CheckVerdict verify_cor2_cor3(const Graph& g, int max_n = kDefaultMaxVertices) {
    CoeffSeq s = independence_polynomial(g, max_n);
    bool bip = is_bipartite(g);
    CheckVerdict v = verify_cor2_cor3_seq(s, bip ? PremiseStatus::Holds : PremiseStatus::Fails);
    v.notes += std::string("; tree: ") + (is_tree(g) ? "yes" : "no");
    return v;
}

inline CheckVerdict finbow_verdict(const Graph& g) {
    CheckVerdict v;
    static_cast<Verdict&>(v) = finbow_check(g);
    PartResult p{"agreement"};
    p.holds = v.conclusion_holds;
    p.violation = v.first_violation;
    v.parts.push_back(p);
    return v;
}

// Index range where the coefficient order stays unconstrained for
// well-covered graphs once the monotone head and tail are accounted for.
struct WindowReport {
    int alpha = 0;
    int lower = 0;  // ceil(alpha/2)
    int upper = 0;  // ceil((2*alpha-1)/3)
};

inline WindowReport roller_coaster_window(int alpha) {
    if (alpha < 1) throw std::invalid_argument("roller_coaster_window: alpha must be >= 1");
    return {alpha, ceil_div(alpha, 2), ceil_div(2 * alpha - 1, 3)};
}

// ---------------------------------------------------------------------
// Counterexample hunt: stream a corpus through a class predicate and a
// shape property, emitting evidence for every graph that satisfies the
// predicate but fails the property.

struct HuntOptions {
    int max_n = kDefaultMaxVertices;
    int perfect_max_n = kDefaultPerfectMaxVertices;
};

struct HuntRecord {
    std::size_t index = 0;
    std::string identity;
    CoeffSeq poly;
    ShapeReport poly_shape;
    ClassReport classes;
};

inline const std::vector<std::string>& hunt_predicate_names() {
    static const std::vector<std::string> names = {
        "any",  "well-covered", "very-well-covered", "quasi-regularizable",
        "tree", "bipartite",    "perfect"};
    return names;
}

inline const std::vector<std::string>& hunt_property_names() {
    static const std::vector<std::string> names = {"unimodal", "log-concave"};
    return names;
}

inline bool evaluate_hunt_predicate(const std::string& name, const Graph& g,
                                    const HuntOptions& opt) {
    if (name == "any") return true;
    if (name == "well-covered") return is_well_covered(g).value;
    if (name == "very-well-covered") return is_very_well_covered(g);
    if (name == "quasi-regularizable") return is_quasi_regularizable(g).value;
    if (name == "tree") return is_tree(g);
    if (name == "bipartite") return is_bipartite(g);
    if (name == "perfect") return is_perfect(g, opt.perfect_max_n).status == PerfectStatus::True;
    throw std::invalid_argument("hunt: unknown predicate '" + name + "'");
}

inline bool evaluate_hunt_property(const std::string& name, const ShapeReport& s) {
    if (name == "unimodal") return s.unimodal;
    if (name == "log-concave") return s.log_concave;
    throw std::invalid_argument("hunt: unknown property '" + name + "'");
}

// identity + graph, e.g. a graph6 line or a construction expression.
using GraphSource = std::pair<std::string, Graph>;

inline std::vector<HuntRecord> hunt(const std::vector<GraphSource>& corpus,
                                    const std::string& predicate, const std::string& property,
                                    const HuntOptions& opt = {}) {
    // validate names up front so an empty corpus still rejects typos
    evaluate_hunt_property(property, ShapeReport{});
    {
        Graph probe = Graph::make(1, {});
        evaluate_hunt_predicate(predicate, probe, opt);
    }
    std::vector<HuntRecord> out;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const auto& [identity, g] = corpus[i];
        if (g.order() == 0) continue;  // classifiers reject the empty graph
        if (!evaluate_hunt_predicate(predicate, g, opt)) continue;
        CoeffSeq poly = independence_polynomial(g, opt.max_n);
        ShapeReport sh = shape(poly);
        if (evaluate_hunt_property(property, sh)) continue;
        HuntRecord rec;
        rec.index = i;
        rec.identity = identity;
        rec.poly = poly;
        rec.poly_shape = sh;
        rec.classes = classify(g, opt.perfect_max_n);
        out.push_back(std::move(rec));
    }
    return out;
}

}  // namespace indpoly
