#pragma once

#include "gla/central_ext.hpp"

#include <functional>
#include <map>

namespace gla {

enum class EpsKind { eps_w, trivial, d3_variant, odd_variant };

std::string eps_kind_name(EpsKind k);
EpsKind eps_kind_from_name(const std::string& name);

/// Bilinear map Lambda x Lambda -> Q(zeta)^x attached to an extension datum.
/// The four kinds:
///   eps_w:       prod_{j=1}^{d-1} (1 - zeta^{-j})^{(w^j a, b)}
///   trivial:     1
///   d3_variant:  (-1)^{(a, w b)} <a, b>            (requires d = 3)
///   odd_variant: (-1)^{(a, sum_{j<=(d-1)/2} w^j b)} <a, b>^{(d-1)/2}
///                                                   (requires odd d)
/// where <a, b> is the commutator pairing of the supplied extension.
class EpsEvaluator {
public:
    EpsEvaluator(const ExtensionDatum& e, EpsKind kind);

    CycNum operator()(const Vec& a, const Vec& b) const;
    EpsKind kind() const { return kind_; }

private:
    const ExtensionDatum* e_;
    EpsKind kind_;
    std::vector<IMat> powers_; // w^0 .. w^{d-1}
    // Cached factors (1 - zeta^{-j})^k keyed by (j, k).
    mutable std::map<std::pair<long, long>, CycNum> cache_;
};

struct ValidationReport {
    bool property1 = false; // eps(a,b)/eps(b,a) = -<b,a> when (a,b) = -1
    bool property2 = false; // eps(wa, wb) = eps(a, b)
    std::vector<std::pair<Vec, Vec>> counterexamples;

    bool valid() const { return property1 && property2; }
};

using EpsFn = std::function<CycNum(const Vec&, const Vec&)>;

/// Checks the two defining properties of an input datum exhaustively over
/// all ordered root pairs; failures are recorded with witnessing pairs.
ValidationReport validate_input_datum(const ExtensionDatum& e,
                                      const EpsFn& eps);
ValidationReport validate_input_datum(const ExtensionDatum& e, EpsKind kind);

} // namespace gla
