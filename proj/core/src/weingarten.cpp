#include "desitter/weingarten.hpp"

namespace desitter {

double eval_f(const WeingartenRelation& rel, double lambda) {
    return detail::eval_f_k<double>(rel, lambda);
}

double denominator(const WeingartenRelation& rel, DenominatorKind kind,
                   int eps, double lambda) {
    return detail::denominator_k<double>(rel, kind, eps, lambda);
}

} // namespace desitter
