#include "gla/epsilon.hpp"

namespace gla {

std::string eps_kind_name(EpsKind k)
{
    switch (k) {
    case EpsKind::eps_w: return "eps_w";
    case EpsKind::trivial: return "trivial";
    case EpsKind::d3_variant: return "d3_variant";
    case EpsKind::odd_variant: return "odd_variant";
    }
    throw std::logic_error("unreachable");
}

EpsKind eps_kind_from_name(const std::string& name)
{
    if (name == "eps_w") return EpsKind::eps_w;
    if (name == "trivial") return EpsKind::trivial;
    if (name == "d3_variant") return EpsKind::d3_variant;
    if (name == "odd_variant") return EpsKind::odd_variant;
    throw std::invalid_argument("unknown epsilon kind: " + name);
}

EpsEvaluator::EpsEvaluator(const ExtensionDatum& e, EpsKind kind)
    : e_(&e), kind_(kind)
{
    if (kind == EpsKind::d3_variant && e.d != 3)
        throw std::invalid_argument("d3_variant requires an order-3 datum");
    if (kind == EpsKind::odd_variant && e.d % 2 == 0)
        throw std::invalid_argument("odd_variant requires odd order");
    powers_.reserve(e.d);
    IMat p = imat_identity(e.lattice.rank);
    for (long j = 0; j < e.d; ++j) {
        powers_.push_back(p);
        p = imat_mul(e.w.matrix, p);
    }
}

CycNum EpsEvaluator::operator()(const Vec& a, const Vec& b) const
{
    const long d = e_->d;
    switch (kind_) {
    case EpsKind::trivial:
        return CycNum::one();
    case EpsKind::eps_w: {
        CycNum result = CycNum::one(d);
        for (long j = 1; j < d; ++j) {
            long k = e_->lattice.pair(imat_apply(powers_[j], a), b);
            if (k == 0)
                continue;
            auto it = cache_.find({j, k});
            if (it == cache_.end()) {
                CycNum base =
                    CycNum::one(d) - CycNum::root_of_unity(d, -j);
                it = cache_.emplace(std::make_pair(j, k), base.pow(k)).first;
            }
            result = result * it->second;
        }
        return result;
    }
    case EpsKind::d3_variant: {
        long sign = e_->lattice.pair(a, e_->w.apply(b));
        long comm = e_->cocycle.commutator(e_->project(a), e_->project(b));
        CycNum v = CycNum::root_of_unity(3, comm);
        return (sign % 2 == 0) ? v : -v;
    }
    case EpsKind::odd_variant: {
        const long h = (d - 1) / 2;
        Vec acc(b.size(), 0);
        for (long j = 1; j <= h; ++j) {
            Vec wb = imat_apply(powers_[j], b);
            for (size_t i = 0; i < acc.size(); ++i)
                acc[i] += wb[i];
        }
        long sign = e_->lattice.pair(a, acc);
        long comm = e_->cocycle.commutator(e_->project(a), e_->project(b));
        CycNum v = CycNum::root_of_unity(d, comm * h);
        return (sign % 2 == 0) ? v : -v;
    }
    }
    throw std::logic_error("unreachable");
}

ValidationReport validate_input_datum(const ExtensionDatum& e,
                                      const EpsFn& eps)
{
    ValidationReport report;
    report.property1 = true;
    report.property2 = true;
    const auto& roots = e.lattice.roots;
    for (const Vec& a : roots)
        for (const Vec& b : roots) {
            if (e.lattice.pair(a, b) == -1) {
                long comm =
                    e.cocycle.commutator(e.project(b), e.project(a));
                CycNum want = -CycNum::root_of_unity(e.d, comm);
                if (eps(a, b) / eps(b, a) != want) {
                    if (report.property1)
                        report.counterexamples.emplace_back(a, b);
                    report.property1 = false;
                }
            }
            if (eps(e.w.apply(a), e.w.apply(b)) != eps(a, b)) {
                if (report.property2)
                    report.counterexamples.emplace_back(a, b);
                report.property2 = false;
            }
        }
    return report;
}

ValidationReport validate_input_datum(const ExtensionDatum& e, EpsKind kind)
{
    EpsEvaluator eval(e, kind);
    return validate_input_datum(
        e, [&](const Vec& a, const Vec& b) { return eval(a, b); });
}

} // namespace gla
