#pragma once

#include <vector>

#include "vmstar/graph.hpp"

namespace vmstar {

// A double occurrence word: a sequence of labels in which every distinct
// label occurs exactly twice. Words carry equivalence-class semantics under
// rotation and reflection; alternance_graph and canonical() are invariants
// of the class.
class Dow {
public:
    Dow() = default;
    explicit Dow(std::vector<Label> letters);

    const std::vector<Label>& letters() const { return letters_; }
    int length() const { return int(letters_.size()); }
    std::vector<Label> letter_set() const;  // sorted, unique
    bool contains(const Label& v) const;

    // tau~_v: with X = A v B v C, reverse the enclosed block B.
    Dow local_complement(const Label& v) const;
    Dow erased(const Label& v) const;
    Dow induced(const std::vector<Label>& keep) const;

    // Vertices are the letters; (u,v) is an edge iff the two occurrences of
    // u and v interleave cyclically (... u .. v .. u .. v ...).
    Graph alternance_graph() const;

    // Least representative over all rotations and the reflection.
    Dow canonical() const;
    bool equivalent(const Dow& other) const;

    Dow reversed() const;
    Dow rotated(int shift) const;

    friend bool operator==(const Dow& a, const Dow& b) { return a.letters_ == b.letters_; }
    friend bool operator!=(const Dow& a, const Dow& b) { return !(a == b); }

private:
    std::vector<Label> letters_;
};

}  // namespace vmstar
