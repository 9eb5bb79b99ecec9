#include "pseudotri/oracle.hpp"

namespace pseudotri {

bool sees(const Polygon& p, int i, int j) {
    ValidationReport report = validate_polygon(p);
    if (!report.ok()) throw InvalidPolygonError(std::move(report));
    if (i == j) throw std::invalid_argument("sees: identical vertices");
    int n = p.size();
    if (std::abs(i - j) == 1 || std::abs(i - j) == n - 1) return true;
    return segment_inside_unchecked(p[i], p[j], p);
}

BoundaryGraph compute_visibility_graph(const Polygon& p) {
    ValidationReport report = validate_polygon(p);
    if (!report.ok()) throw InvalidPolygonError(std::move(report));
    const int n = p.size();
    std::vector<std::pair<int, int>> chords;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 2; j < n; ++j) {
            if (i == 0 && j == n - 1) continue;  // cycle edge
            if (segment_inside_unchecked(p[i], p[j], p)) chords.emplace_back(i, j);
        }
    }
    return BoundaryGraph(n, std::move(chords));
}

}  // namespace pseudotri
