#pragma once

#include <vector>

#include "modeq/identities.hpp"

namespace modeq {

/// q in {1/50, 1/20, 1/10, 3/20, 1/5, 1/4, 3/10}.
std::vector<QPoint> default_grid();
/// q in {1/50, 1/20, 1/10}: the range where the 2F1 series stays short.
std::vector<QPoint> hypergeom_grid();

/// One report per grid point, in grid order. Reference implementation.
std::vector<IdentityReport> verify_grid_serial(IdentityId id, const std::vector<QPoint>& grid, Precision prec,
                                               const ArbReal& tolerance);
/// Same reports, points evaluated concurrently with OpenMP.
std::vector<IdentityReport> verify_grid(IdentityId id, const std::vector<QPoint>& grid, Precision prec,
                                        const ArbReal& tolerance);
std::vector<IdentityReport> verify_grid(IdentityId id, const std::vector<QPoint>& grid, Precision prec);

/// Every (identity, q) pair, sorted by identity tag and then q.
std::vector<IdentityReport> verify_catalog_serial(const std::vector<IdentityId>& ids,
                                                  const std::vector<QPoint>& grid, Precision prec,
                                                  const ArbReal& tolerance);
std::vector<IdentityReport> verify_catalog(const std::vector<IdentityId>& ids, const std::vector<QPoint>& grid,
                                           Precision prec, const ArbReal& tolerance);

bool all_passed(const std::vector<IdentityReport>& reports);

}  // namespace modeq
