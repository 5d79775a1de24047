#include "knotmosaic/gauss_code.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "knotmosaic/error.hpp"

namespace knotmosaic {

bool GaussCode::has_signs() const {
    return !entries.empty() &&
           std::all_of(entries.begin(), entries.end(),
                       [](const GaussEntry& e) { return e.sign != 0; });
}

std::string gauss_to_string(const GaussCode& code) {
    std::ostringstream out;
    for (const GaussEntry& e : code.entries) {
        out << (e.passage == Passage::Over ? 'O' : 'U') << e.label;
        if (e.sign > 0) out << '+';
        if (e.sign < 0) out << '-';
    }
    return out.str();
}

GaussCode parse_gauss(const std::string& text) {
    GaussCode code;
    size_t i = 0;
    while (i < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[i]))) {
            ++i;
            continue;
        }
        char p = text[i];
        if (p != 'O' && p != 'U')
            throw Error(ErrorCode::BadToken,
                        "expected 'O' or 'U' at position " + std::to_string(i));
        ++i;
        size_t start = i;
        while (i < text.size() &&
               std::isdigit(static_cast<unsigned char>(text[i])))
            ++i;
        if (i == start)
            throw Error(ErrorCode::BadToken,
                        "expected a label at position " + std::to_string(i));
        int label = std::stoi(text.substr(start, i - start));
        if (label <= 0)
            throw Error(ErrorCode::BadToken, "labels must be positive");
        int sign = 0;
        if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
            sign = text[i] == '+' ? 1 : -1;
            ++i;
        }
        code.entries.push_back(
            {label, p == 'O' ? Passage::Over : Passage::Under, sign});
    }
    validate_gauss(code);
    return code;
}

void validate_gauss(const GaussCode& code) {
    std::map<int, std::pair<int, int>> seen; // label -> (over count, under count)
    for (const GaussEntry& e : code.entries) {
        auto& [o, u] = seen[e.label];
        if (e.passage == Passage::Over)
            ++o;
        else
            ++u;
    }
    for (const auto& [label, cnt] : seen) {
        if (cnt.first != 1 || cnt.second != 1)
            throw Error(ErrorCode::LabelCountMismatch,
                        "label " + std::to_string(label) +
                            " must occur exactly once over and once under");
    }
}

namespace {

// Canonical shape of a code read from a fixed starting point/direction:
// labels renumbered in first-visit order, signs dropped.
std::vector<std::pair<int, Passage>> canonical_read(
    const std::vector<GaussEntry>& es, int start, int dir) {
    const int len = static_cast<int>(es.size());
    std::map<int, int> relabel;
    std::vector<std::pair<int, Passage>> out;
    out.reserve(len);
    for (int t = 0; t < len; ++t) {
        const GaussEntry& e =
            es[((start + dir * t) % len + len) % len];
        auto [it, inserted] =
            relabel.try_emplace(e.label, static_cast<int>(relabel.size()) + 1);
        out.emplace_back(it->second, e.passage);
    }
    return out;
}

std::vector<int> signs_read(const std::vector<GaussEntry>& es, int start,
                            int dir) {
    const int len = static_cast<int>(es.size());
    std::map<int, int> relabel;
    std::vector<int> by_label(len / 2 + 1, 0);
    for (int t = 0; t < len; ++t) {
        const GaussEntry& e =
            es[((start + dir * t) % len + len) % len];
        auto [it, inserted] =
            relabel.try_emplace(e.label, static_cast<int>(relabel.size()) + 1);
        by_label[it->second] = e.sign;
    }
    return by_label;
}

} // namespace

bool gauss_equivalent(const GaussCode& a, const GaussCode& b,
                      bool compare_signs) {
    if (a.entries.size() != b.entries.size()) return false;
    if (a.empty()) return true;
    const int len = static_cast<int>(a.entries.size());
    auto target = canonical_read(a.entries, 0, 1);
    auto target_signs = signs_read(a.entries, 0, 1);
    for (int dir : {1, -1}) {
        for (int start = 0; start < len; ++start) {
            if (canonical_read(b.entries, start, dir) != target) continue;
            if (!compare_signs) return true;
            auto s = signs_read(b.entries, start, dir);
            bool same = true, flipped = true;
            for (size_t i = 1; i < s.size(); ++i) {
                if (s[i] != target_signs[i]) same = false;
                if (s[i] != -target_signs[i]) flipped = false;
            }
            if (same || flipped) return true;
        }
    }
    return false;
}

} // namespace knotmosaic
