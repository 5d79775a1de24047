#include "knotmosaic/gauss.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "knotmosaic/error.hpp"

namespace knotmosaic {

GaussCode invert_lists(const GaussCode& code) {
    validate_gauss(code);
    GaussCode out = code;
    std::set<int> labels;
    for (const GaussEntry& e : out.entries) labels.insert(e.label);
    for (int label : labels) {
        size_t first = 0, second = 0;
        bool found_first = false;
        for (size_t i = 0; i < out.entries.size(); ++i) {
            if (out.entries[i].label != label) continue;
            if (!found_first) {
                first = i;
                found_first = true;
            } else {
                second = i;
            }
        }
        std::reverse(out.entries.begin() + first + 1,
                     out.entries.begin() + second);
    }
    return out;
}

namespace {

// Interlacement graph over the labels of a double occurrence word.
std::vector<std::vector<bool>> interlacement(const GaussCode& code,
                                             std::vector<int>& labels) {
    std::map<int, std::pair<int, int>> pos;
    for (size_t i = 0; i < code.entries.size(); ++i) {
        int label = code.entries[i].label;
        auto [it, inserted] = pos.try_emplace(label, static_cast<int>(i), -1);
        if (!inserted) it->second.second = static_cast<int>(i);
    }
    labels.clear();
    for (const auto& [label, p] : pos) labels.push_back(label);

    const int c = static_cast<int>(labels.size());
    std::vector<std::vector<bool>> adj(c, std::vector<bool>(c, false));
    for (int i = 0; i < c; ++i) {
        auto [a1, a2] = pos[labels[i]];
        for (int j = i + 1; j < c; ++j) {
            auto [b1, b2] = pos[labels[j]];
            bool inside1 = a1 < b1 && b1 < a2;
            bool inside2 = a1 < b2 && b2 < a2;
            if (inside1 != inside2) adj[i][j] = adj[j][i] = true;
        }
    }
    return adj;
}

} // namespace

bool is_realizable(const GaussCode& code) {
    validate_gauss(code);
    if (code.empty()) return true;
    std::vector<int> labels;
    auto adj = interlacement(code, labels);
    const int c = static_cast<int>(labels.size());

    for (int i = 0; i < c; ++i) {
        int degree = 0;
        for (int j = 0; j < c; ++j)
            if (adj[i][j]) ++degree;
        if (degree % 2 != 0) return false;
    }
    for (int i = 0; i < c; ++i) {
        for (int j = i + 1; j < c; ++j) {
            if (adj[i][j]) continue;
            int common = 0;
            for (int k = 0; k < c; ++k)
                if (adj[i][k] && adj[j][k]) ++common;
            if (common % 2 != 0) return false;
        }
    }
    return true;
}

} // namespace knotmosaic
