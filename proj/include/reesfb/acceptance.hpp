// The acceptance criteria as runnable checks, one result line each.

#ifndef REESFB_ACCEPTANCE_HPP_
#define REESFB_ACCEPTANCE_HPP_

#include <functional>
#include <string>
#include <vector>

namespace reesfb {

  struct CriterionResult {
    int         id = 0;
    std::string title;
    bool        passed  = false;
    bool        slow    = false;
    double      seconds = 0;
    std::string detail;
  };

  struct AcceptanceOptions {
    bool             include_slow = true;
    std::vector<int> only;  // empty: all
    std::function<void(CriterionResult const&)> progress;
  };

  constexpr int criterion_count = 14;

  CriterionResult              run_criterion(int id);
  std::vector<CriterionResult> run_acceptance(AcceptanceOptions const& options = {});
  // "[PASS] 3 title (0.41s): detail"
  std::string format(CriterionResult const& r);

}  // namespace reesfb

#endif  // REESFB_ACCEPTANCE_HPP_
