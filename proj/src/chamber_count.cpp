#include "clband/chamber_count.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace clband {

std::pair<int, int> bound_pair(const FaceComplex& fc, int section) {
    auto [a, b] = fc.incident_chambers(section);
    return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
}

std::vector<BoundClass> bound_classes(const FaceComplex& fc, int h) {
    std::map<std::pair<int, int>, std::vector<int>> groups;
    for (int e : fc.edges_on_curve(h)) groups[bound_pair(fc, e)].push_back(e);
    std::vector<BoundClass> out;
    for (auto& [pair, secs] : groups) {
        std::sort(secs.begin(), secs.end());
        out.push_back({pair, secs});
    }
    std::sort(out.begin(), out.end(),
              [](const BoundClass& a, const BoundClass& b) { return a.sections[0] < b.sections[0]; });
    return out;
}

bool split_chamber_counts_ok(const FaceComplex& fc, const FaceComplex& deleted, int h) {
    // deleted-face id -> number of full chambers inside
    std::map<int, int> k_of;
    for (int c : fc.chambers()) {
        int host = deleted.locate(fc.face(c).sample);
        if (deleted.face(host).dim != 2)
            throw std::logic_error("chamber sample landed on a deleted curve");
        ++k_of[host];
    }
    // deleted-face id -> distinct bound pairs of sections inside
    std::map<int, std::set<std::pair<int, int>>> classes_of;
    for (int e : fc.edges_on_curve(h)) {
        int host = deleted.locate(fc.face(e).sample);
        if (deleted.face(host).dim != 2)
            throw std::logic_error("section sample landed on a deleted curve");
        classes_of[host].insert(bound_pair(fc, e));
    }
    for (auto& [host, k] : k_of) {
        int classes = classes_of.count(host) ? static_cast<int>(classes_of[host].size()) : 0;
        if (classes != k - 1) return false;
    }
    // no section may sit in a chamber that was not split
    for (auto& [host, cls] : classes_of)
        if (!k_of.count(host)) return false;
    return true;
}

std::vector<DeletionRestrictionRow> deletion_restriction_report(const FaceComplex& fc) {
    const Arrangement& arr = fc.arrangement();
    std::vector<DeletionRestrictionRow> rows;
    int full = static_cast<int>(fc.chambers().size());
    for (int h = 0; h < arr.size(); ++h) {
        DeletionRestrictionRow row;
        row.component = h;
        row.label = arr[h].label;
        row.chambers_full = full;
        FaceComplex del = decompose(deleted_arrangement(arr, h));
        row.chambers_deleted = static_cast<int>(del.chambers().size());
        row.restricted_sections = static_cast<int>(fc.edges_on_curve(h).size());
        row.bound_count = static_cast<int>(bound_classes(fc, h).size());
        row.cl_identity = row.chambers_full == row.chambers_deleted + row.bound_count;
        row.classical_identity =
            row.chambers_full == row.chambers_deleted + row.restricted_sections;
        row.split_counts_ok = split_chamber_counts_ok(fc, del, h);
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace clband
