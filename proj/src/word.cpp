#include "vmstar/word.hpp"

#include <algorithm>
#include <map>

namespace vmstar {

Dow::Dow(std::vector<Label> letters) : letters_(std::move(letters)) {
    std::map<Label, int> count;
    for (const auto& l : letters_) ++count[l];
    for (const auto& [l, c] : count)
        if (c != 2)
            throw MalformedWord("letter '" + l.text() + "' occurs " + std::to_string(c) +
                                " times; a double occurrence word needs exactly 2");
}

std::vector<Label> Dow::letter_set() const {
    std::vector<Label> out(letters_);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool Dow::contains(const Label& v) const {
    return std::find(letters_.begin(), letters_.end(), v) != letters_.end();
}

Dow Dow::local_complement(const Label& v) const {
    if (!contains(v)) throw UnknownLetter("letter '" + v.text() + "' not in word");
    std::vector<Label> out(letters_);
    auto first = std::find(out.begin(), out.end(), v);
    auto second = std::find(first + 1, out.end(), v);
    std::reverse(first + 1, second);
    Dow w;
    w.letters_ = std::move(out);
    return w;
}

Dow Dow::erased(const Label& v) const {
    if (!contains(v)) throw UnknownLetter("letter '" + v.text() + "' not in word");
    std::vector<Label> out;
    out.reserve(letters_.size() - 2);
    for (const auto& l : letters_)
        if (!(l == v)) out.push_back(l);
    Dow w;
    w.letters_ = std::move(out);
    return w;
}

Dow Dow::induced(const std::vector<Label>& keep) const {
    std::vector<Label> out;
    for (const auto& l : letters_)
        if (std::find(keep.begin(), keep.end(), l) != keep.end()) out.push_back(l);
    Dow w;
    w.letters_ = std::move(out);
    return w;
}

Graph Dow::alternance_graph() const {
    std::vector<Label> verts = letter_set();
    Graph g(verts);
    std::map<Label, std::pair<int, int>> pos;
    for (int i = 0; i < length(); ++i) {
        auto it = pos.find(letters_[i]);
        if (it == pos.end())
            pos[letters_[i]] = {i, -1};
        else
            it->second.second = i;
    }
    // u,v alternate cyclically iff exactly one occurrence of v lies strictly
    // between the two occurrences of u; this test is rotation-invariant.
    for (size_t a = 0; a < verts.size(); ++a) {
        auto [u1, u2] = pos[verts[a]];
        for (size_t b = a + 1; b < verts.size(); ++b) {
            auto [v1, v2] = pos[verts[b]];
            bool in1 = u1 < v1 && v1 < u2;
            bool in2 = u1 < v2 && v2 < u2;
            if (in1 != in2) g.add_edge(verts[a], verts[b]);
        }
    }
    return g;
}

Dow Dow::reversed() const {
    Dow w;
    w.letters_.assign(letters_.rbegin(), letters_.rend());
    return w;
}

Dow Dow::rotated(int shift) const {
    int n = length();
    if (n == 0) return *this;
    shift = ((shift % n) + n) % n;
    Dow w;
    w.letters_.reserve(n);
    for (int i = 0; i < n; ++i) w.letters_.push_back(letters_[(i + shift) % n]);
    return w;
}

Dow Dow::canonical() const {
    if (length() == 0) return *this;
    Dow best = *this;
    for (int refl = 0; refl < 2; ++refl) {
        Dow base = refl ? reversed() : *this;
        for (int s = 0; s < length(); ++s) {
            Dow cand = base.rotated(s);
            if (std::lexicographical_compare(cand.letters_.begin(), cand.letters_.end(),
                                             best.letters_.begin(), best.letters_.end()))
                best = cand;
        }
    }
    return best;
}

bool Dow::equivalent(const Dow& other) const {
    return length() == other.length() && canonical() == other.canonical();
}

}  // namespace vmstar
