#include "modeq/grid.hpp"

#include <algorithm>
#include <utility>

namespace modeq {

namespace {

using Task = std::pair<IdentityId, QPoint>;

// Identity tag order first, then ascending q; input order of the grid is
// irrelevant to the output.
std::vector<Task> catalog_tasks(const std::vector<IdentityId>& ids, const std::vector<QPoint>& grid) {
  std::vector<IdentityId> sorted_ids = ids;
  std::sort(sorted_ids.begin(), sorted_ids.end(),
            [](IdentityId a, IdentityId b) { return tag(a) < tag(b); });
  sorted_ids.erase(std::unique(sorted_ids.begin(), sorted_ids.end()), sorted_ids.end());
  std::vector<QPoint> sorted_grid = grid;
  std::sort(sorted_grid.begin(), sorted_grid.end());
  sorted_grid.erase(std::unique(sorted_grid.begin(), sorted_grid.end()), sorted_grid.end());

  std::vector<Task> tasks;
  tasks.reserve(sorted_ids.size() * sorted_grid.size());
  for (IdentityId id : sorted_ids) {
    for (const QPoint& q : sorted_grid) tasks.emplace_back(id, q);
  }
  return tasks;
}

std::vector<IdentityReport> run_serial(const std::vector<Task>& tasks, Precision prec, const ArbReal& tolerance) {
  std::vector<IdentityReport> out;
  out.reserve(tasks.size());
  for (const auto& [id, q] : tasks) out.push_back(evaluate(id, q, prec, tolerance));
  return out;
}

std::vector<IdentityReport> run_parallel(const std::vector<Task>& tasks, Precision prec,
                                         const ArbReal& tolerance) {
  std::vector<std::optional<IdentityReport>> slots(tasks.size());
  const long n = static_cast<long>(tasks.size());
  // Costs differ by an order of magnitude between tasks (EQ22_FD is the
  // heaviest), so hand them out one at a time.
#pragma omp parallel for schedule(dynamic, 1)
  for (long i = 0; i < n; ++i) {
    const auto& [id, q] = tasks[static_cast<std::size_t>(i)];
    slots[static_cast<std::size_t>(i)] = evaluate(id, q, prec, tolerance);
  }
  std::vector<IdentityReport> out;
  out.reserve(slots.size());
  for (auto& slot : slots) out.push_back(std::move(*slot));
  return out;
}

std::vector<Task> grid_tasks(IdentityId id, const std::vector<QPoint>& grid) {
  std::vector<Task> tasks;
  tasks.reserve(grid.size());
  for (const QPoint& q : grid) tasks.emplace_back(id, q);
  return tasks;
}

}  // namespace

std::vector<QPoint> default_grid() {
  return {QPoint(mpq_class(1, 50)), QPoint(mpq_class(1, 20)), QPoint(mpq_class(1, 10)), QPoint(mpq_class(3, 20)),
          QPoint(mpq_class(1, 5)),  QPoint(mpq_class(1, 4)),  QPoint(mpq_class(3, 10))};
}

std::vector<QPoint> hypergeom_grid() {
  return {QPoint(mpq_class(1, 50)), QPoint(mpq_class(1, 20)), QPoint(mpq_class(1, 10))};
}

std::vector<IdentityReport> verify_grid_serial(IdentityId id, const std::vector<QPoint>& grid, Precision prec,
                                               const ArbReal& tolerance) {
  if (grid.empty()) throw DomainError("verify_grid needs a non-empty grid");
  return run_serial(grid_tasks(id, grid), prec, tolerance);
}

std::vector<IdentityReport> verify_grid(IdentityId id, const std::vector<QPoint>& grid, Precision prec,
                                        const ArbReal& tolerance) {
  if (grid.empty()) throw DomainError("verify_grid needs a non-empty grid");
  return run_parallel(grid_tasks(id, grid), prec, tolerance);
}

std::vector<IdentityReport> verify_grid(IdentityId id, const std::vector<QPoint>& grid, Precision prec) {
  return verify_grid(id, grid, prec, default_tolerance(prec));
}

std::vector<IdentityReport> verify_catalog_serial(const std::vector<IdentityId>& ids,
                                                  const std::vector<QPoint>& grid, Precision prec,
                                                  const ArbReal& tolerance) {
  return run_serial(catalog_tasks(ids, grid), prec, tolerance);
}

std::vector<IdentityReport> verify_catalog(const std::vector<IdentityId>& ids, const std::vector<QPoint>& grid,
                                           Precision prec, const ArbReal& tolerance) {
  return run_parallel(catalog_tasks(ids, grid), prec, tolerance);
}

bool all_passed(const std::vector<IdentityReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const IdentityReport& r) { return r.passed; });
}

}  // namespace modeq
