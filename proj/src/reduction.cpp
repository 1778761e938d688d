#include "subres/reduction.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace subres {

namespace {

int min_component(const DeltaIndex& x) {
  int m = x[0];
  for (std::size_t i = 1; i < x.size(); ++i) m = std::min(m, x[i]);
  return m;
}

ReductionStep make_step(const std::vector<std::size_t>& d, const DeltaIndex& w0,
                        std::size_t k) {
  ReductionStep s;
  s.params = derive_params(d, w0, k, 0);
  s.produces = s.params.u;
  for (std::size_t j = 0; j <= w0.size(); ++j) s.consumes.push_back(w0.plus_unit(j));
  return s;
}

}  // namespace

ReductionPlan plan_reduction(const std::vector<std::size_t>& d, const DeltaIndex& target,
                             Strategy strategy) {
  if (d.size() != target.size() + 1)
    throw std::invalid_argument("degree vector must have n+1 entries");
  if (static_cast<std::size_t>(target.sum()) > d[0])
    throw std::invalid_argument("target index weight exceeds deg F_0");

  ReductionPlan plan;
  plan.target = target;
  if (!target.interior()) {  /* already base, nothing to derive */
    plan.base.insert(target);
    return plan;
  }

  std::map<DeltaIndex, ReductionStep> steps;
  std::vector<DeltaIndex> work{target};
  while (!work.empty()) {
    DeltaIndex x = work.back();
    work.pop_back();
    if (steps.count(x)) continue;
    const std::size_t k =
        strategy == Strategy::A ? 1 : static_cast<std::size_t>(min_component(x));
    DeltaIndex w0 = x;
    for (std::size_t i = 1; i <= x.size(); ++i)
      for (std::size_t step = 0; step < k; ++step) w0 = w0.minus_unit(i);
    ReductionStep s = make_step(d, w0, k);
    for (const DeltaIndex& y : s.consumes) {
      if (y.interior())
        work.push_back(y);
      else
        plan.base.insert(y);
    }
    steps.emplace(x, std::move(s));
  }

  for (auto& [x, s] : steps) plan.steps.push_back(std::move(s));
  std::sort(plan.steps.begin(), plan.steps.end(),
            [](const ReductionStep& a, const ReductionStep& b) {
              if (a.params.w0.sum() != b.params.w0.sum())
                return a.params.w0.sum() < b.params.w0.sum();
              return a.params.w0.v < b.params.w0.v;
            });
  return plan;
}

std::string render_plan(const ReductionPlan& plan) {
  std::ostringstream os;
  os << "target R" << plan.target.str() << "\n";
  for (std::size_t i = 0; i < plan.steps.size(); ++i) {
    const ReductionStep& s = plan.steps[i];
    os << "step " << i + 1 << ": r" << s.params.w0.str() << "^" << s.params.epsilon
       << " * R" << s.produces.str() << " <-(k=" << s.params.k << ")- {";
    for (std::size_t j = 0; j < s.consumes.size(); ++j)
      os << (j ? ", " : " ") << "R" << s.consumes[j].str();
    os << " }\n";
  }
  os << "base:";
  for (const DeltaIndex& b : plan.base) os << " R" << b.str();
  os << "\n";
  return os.str();
}

std::map<DeltaIndex, VerificationReport> execute_plan(const PolySystem& f,
                                                      const ReductionPlan& plan) {
  std::map<DeltaIndex, VerificationReport> out;
  for (std::size_t i = 0; i < plan.steps.size(); ++i) {
    const ReductionStep& s = plan.steps[i];
    VerificationReport rep = verify_identity(f, s.params);
    if (!rep.applicable())
      throw PlanExecutionError("degree drop at step producing " + s.produces.str(),
                               s.produces, i);
    out.emplace(s.produces, std::move(rep));
  }
  return out;
}

}  // namespace subres
