#include "fracext/intervals.hpp"

#include <algorithm>
#include <sstream>

#include "fracext/errors.hpp"

namespace fracext {

IntervalSet::IntervalSet(const Rational& lo, const Rational& hi) {
    if (lo < hi) parts_.push_back({canonical(lo), canonical(hi)});
}

IntervalSet IntervalSet::from_intervals(std::vector<Interval> soup) {
    for (auto& iv : soup) {
        iv.first.canonicalize();
        iv.second.canonicalize();
    }
    std::erase_if(soup, [](const Interval& iv) { return iv.first >= iv.second; });
    std::sort(soup.begin(), soup.end());
    IntervalSet out;
    for (auto& iv : soup) {
        if (!out.parts_.empty() && iv.first <= out.parts_.back().second) {
            if (iv.second > out.parts_.back().second) out.parts_.back().second = iv.second;
        } else {
            out.parts_.push_back(iv);
        }
    }
    return out;
}

Rational IntervalSet::measure() const {
    Rational total = 0;
    for (const auto& [a, b] : parts_) total += b - a;
    return total;
}

bool IntervalSet::contains_point(const Rational& x) const {
    for (const auto& [a, b] : parts_) {
        if (x < a) return false;
        if (x < b) return true;
    }
    return false;
}

bool IntervalSet::subset_of(const IntervalSet& other) const {
    return subtract(*this, other).empty();
}

bool IntervalSet::disjoint_with(const IntervalSet& other) const {
    // Merge-walk; avoids building the intersection.
    size_t i = 0, j = 0;
    while (i < parts_.size() && j < other.parts_.size()) {
        const auto& [a1, b1] = parts_[i];
        const auto& [a2, b2] = other.parts_[j];
        if (b1 <= a2) {
            ++i;
        } else if (b2 <= a1) {
            ++j;
        } else {
            return false;
        }
    }
    return true;
}

IntervalSet unite(const IntervalSet& s, const IntervalSet& t) {
    std::vector<IntervalSet::Interval> soup = s.intervals();
    soup.insert(soup.end(), t.intervals().begin(), t.intervals().end());
    return IntervalSet::from_intervals(std::move(soup));
}

IntervalSet intersect(const IntervalSet& s, const IntervalSet& t) {
    std::vector<IntervalSet::Interval> out;
    size_t i = 0, j = 0;
    const auto& a = s.intervals();
    const auto& b = t.intervals();
    while (i < a.size() && j < b.size()) {
        Rational lo = std::max(a[i].first, b[j].first);
        Rational hi = std::min(a[i].second, b[j].second);
        if (lo < hi) out.push_back({lo, hi});
        if (a[i].second < b[j].second)
            ++i;
        else
            ++j;
    }
    return IntervalSet::from_intervals(std::move(out));
}

IntervalSet subtract(const IntervalSet& s, const IntervalSet& t) {
    std::vector<IntervalSet::Interval> out;
    size_t j = 0;
    const auto& b = t.intervals();
    for (auto [lo, hi] : s.intervals()) {
        while (j < b.size() && b[j].second <= lo) ++j;
        size_t k = j;
        Rational cur = lo;
        while (k < b.size() && b[k].first < hi) {
            if (b[k].first > cur) out.push_back({cur, b[k].first});
            if (b[k].second >= hi) {
                cur = hi;
                break;
            }
            cur = b[k].second;
            ++k;
        }
        if (cur < hi) out.push_back({cur, hi});
    }
    return IntervalSet::from_intervals(std::move(out));
}

IntervalSet carve(const IntervalSet& s, const Rational& m) {
    if (m < 0) throw precondition_error("carve: negative measure requested");
    std::vector<IntervalSet::Interval> out;
    Rational want = canonical(m);
    for (const auto& [a, b] : s.intervals()) {
        if (want == 0) break;
        Rational len = b - a;
        if (len <= want) {
            out.push_back({a, b});
            want -= len;
        } else {
            out.push_back({a, a + want});
            want = 0;
        }
    }
    if (want > 0)
        throw deficit_error("carve: set of measure " + to_string(s.measure()) +
                                " cannot supply measure " + to_string(m) + " (short by " +
                                to_string(want) + ")",
                            "carve-deficit");
    return IntervalSet::from_intervals(std::move(out));
}

std::vector<IntervalSet> equipartition(const IntervalSet& s, int n) {
    if (n < 1) throw precondition_error("equipartition: n must be >= 1");
    Rational share = s.measure() / n;
    std::vector<IntervalSet> parts;
    parts.reserve(n);
    IntervalSet rest = s;
    for (int i = 0; i < n; ++i) {
        IntervalSet piece = carve(rest, i + 1 < n ? share : rest.measure());
        rest = subtract(rest, piece);
        parts.push_back(std::move(piece));
    }
    return parts;
}

std::string IntervalSet::to_text() const {
    std::ostringstream os;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ',';
        os << parts_[i].first.get_str() << ':' << parts_[i].second.get_str();
    }
    return os.str();
}

IntervalSet IntervalSet::from_text(const std::string& text) {
    std::vector<Interval> soup;
    if (text.empty()) return IntervalSet();
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto colon = item.find(':');
        if (colon == std::string::npos)
            throw precondition_error("bad interval literal: " + item);
        soup.push_back(
            {parse_rational(item.substr(0, colon)), parse_rational(item.substr(colon + 1))});
    }
    return from_intervals(std::move(soup));
}

}  // namespace fracext
