#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "subres/habicht.hpp"

namespace subres {

/* One application of the scaled product identity inside a plan: the step
 * at w0 with width k (i = 0) produces u = w0 + (k,...,k) from the cluster
 * indices w0, w0+e_1, ..., w0+e_n. */
struct ReductionStep {
  HabichtParams params;
  DeltaIndex produces;
  std::vector<DeltaIndex> consumes;
};

/* Steps are ordered by increasing |w0|, lexicographically ascending within
 * a weight; for n >= 2 this is dependency order (every consumed interior
 * index is produced by an earlier step). `base` collects the consumed
 * indices with a zero component, which no step produces. */
struct ReductionPlan {
  DeltaIndex target;
  std::vector<ReductionStep> steps;
  std::set<DeltaIndex> base;
};

enum class Strategy {
  A,  /* width-1 steps only: w0 = x - (1,...,1) for every interior x reached */
  B,  /* greedy: widest step landing on the target, recurse on the cluster */
};

/* Plans how R_target follows from subresultants with a zero component.
 * A target with a zero component is already base: empty plan. Requires
 * |target| <= d0 and target.size() == d.size() - 1. */
ReductionPlan plan_reduction(const std::vector<std::size_t>& d, const DeltaIndex& target,
                             Strategy strategy);

/* Fixed-width diagram of the plan, one step per line. */
std::string render_plan(const ReductionPlan& plan);

/* Thrown when a step degenerates (inner degree drop); carries the step. */
struct PlanExecutionError : std::runtime_error {
  DeltaIndex produces;
  std::size_t step_index;
  PlanExecutionError(std::string msg, DeltaIndex prod, std::size_t idx)
      : std::runtime_error(std::move(msg)), produces(std::move(prod)), step_index(idx) {}
};

/* Verifies every step's identity on a concrete standard system; reports
 * are keyed by the produced index. Aborts on the first degenerate step. */
std::map<DeltaIndex, VerificationReport> execute_plan(const PolySystem& f,
                                                      const ReductionPlan& plan);

}  // namespace subres
