#include "mcube/xcheck.hpp"

#include "mcube/decision.hpp"
#include "mcube/kripke.hpp"
#include "mcube/random_formula.hpp"

namespace mcube {

XcheckReport xcheck(const Logic& logic, const XcheckConfig& config) {
    FormulaGenerator gen(config.seed, config.atoms);
    XcheckReport report;
    for (std::size_t i = 0; i < config.count; ++i) {
        Formula f = gen.next(config.max_depth);
        bool valid = decide(logic, f).valid;
        bool refuted = oracle_decide(logic, {}, f, config.max_worlds).countermodel_found;
        ++report.total;
        if (valid && refuted)
            report.disagreements.push_back(f);
        else if (refuted)
            ++report.refuted;
        else if (valid)
            ++report.unresolved;
        else
            ++report.invalid_unconfirmed;
    }
    return report;
}

}  // namespace mcube
