#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "hfdts/diagram.hpp"
#include "hfdts/error.hpp"

namespace hfdts {

/// One diagram on the shared complex: the alpha curves of the input, these
/// beta curves (by name) and basepoints.
struct NicifyView {
  std::vector<std::string> beta;
  std::set<std::string> basepoints;
};

struct NicifyOptions {
  int max_steps = 10000;
  std::uint64_t seed = 0;
  int max_hops = 3;
  bool parallel = true;
  /// Empty: the input diagram itself.
  std::vector<NicifyView> views;
};

struct FingerStep {
  std::string curve;                 // moved curve
  std::vector<std::string> crossed;  // curves crossed, in order
  int badness = 0;                   // total badness after the step
};

struct NicifyResult {
  HeegaardDiagram diagram;
  std::vector<FingerStep> audit;
  std::vector<HeegaardDiagram> path;  // diagram after each step of the audit
  int initial_badness = 0;
  int explored = 0;  // finger moves tried, including abandoned branches
};

class NicifyError : public Error {
 public:
  NicifyError(const std::string& what, HeegaardDiagram diagram, std::vector<FingerStep> audit, int badness)
      : Error(ErrorCode::StepBudgetExhausted, what),
        diagram_(std::move(diagram)),
        audit_(std::move(audit)),
        badness_(badness) {}
  /// The diagram reached when the search stopped.
  const HeegaardDiagram& diagram() const noexcept { return diagram_; }
  const std::vector<FingerStep>& audit() const noexcept { return audit_; }
  int badness() const noexcept { return badness_; }

 private:
  HeegaardDiagram diagram_;
  std::vector<FingerStep> audit_;
  int badness_;
};

/// The diagram as seen by one view.
HeegaardDiagram view_diagram(const HeegaardDiagram& d, const NicifyView& v);

/// Sum of DiagramView::badness over the views.
int total_badness(const HeegaardDiagram& d, const std::vector<NicifyView>& views);

/// Badness split by distance from the basepoint classes, counted in alpha
/// arcs crossed; entry k sums the bad classes at distance k over all views.
/// Classes with no such path count at distance num_classes.
using Grade = std::vector<int>;
Grade graded_badness(const HeegaardDiagram& d, const std::vector<NicifyView>& views);
/// Compares from the farthest distance down.
bool grade_less(const Grade& a, const Grade& b);

/// Finger moves of the views' beta curves over alpha and aux curves, each
/// step strictly lowering the graded badness, until every view is nice.
/// A step may not make an admissible view non-admissible. Throws NicifyError
/// when the budget runs out or every sequence of such steps gets stuck;
/// stuck branches are abandoned for the next best step.
NicifyResult nicify(const HeegaardDiagram& d, const NicifyOptions& opts = {});

}  // namespace hfdts
