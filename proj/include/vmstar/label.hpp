#pragma once

#include <cstdint>
#include <ostream>
#include <string>

namespace vmstar {

// A vertex label: an opaque token with a stable total order. Tokens that
// parse as decimal integers order numerically (so "10" > "9"); everything
// else orders lexicographically after all numbers. Numeric tokens are kept
// in canonical decimal form, so "007" and "7" are the same label.
class Label {
public:
    Label() = default;
    Label(const std::string& text) { init(text); }
    Label(const char* text) { init(text); }
    Label(int v) : text_(std::to_string(v)), numeric_(true), value_(v) {}
    Label(long long v) : text_(std::to_string(v)), numeric_(true), value_(v) {}

    const std::string& text() const { return text_; }
    bool numeric() const { return numeric_; }
    long long value() const { return value_; }

    friend bool operator==(const Label& a, const Label& b) {
        return a.numeric_ == b.numeric_ && (a.numeric_ ? a.value_ == b.value_ : a.text_ == b.text_);
    }
    friend bool operator!=(const Label& a, const Label& b) { return !(a == b); }
    friend bool operator<(const Label& a, const Label& b) {
        if (a.numeric_ != b.numeric_) return a.numeric_;
        if (a.numeric_) return a.value_ < b.value_;
        return a.text_ < b.text_;
    }
    friend bool operator<=(const Label& a, const Label& b) { return !(b < a); }
    friend bool operator>(const Label& a, const Label& b) { return b < a; }
    friend bool operator>=(const Label& a, const Label& b) { return !(a < b); }

    friend std::ostream& operator<<(std::ostream& os, const Label& l) { return os << l.text_; }

private:
    void init(const std::string& text) {
        text_ = text;
        size_t i = (!text.empty() && text[0] == '-') ? 1 : 0;
        if (i == text.size()) return;
        for (size_t j = i; j < text.size(); ++j)
            if (text[j] < '0' || text[j] > '9') return;
        if (text.size() - i > 18) return;  // too long to trust as int64
        numeric_ = true;
        value_ = std::stoll(text);
        text_ = std::to_string(value_);
    }

    std::string text_;
    bool numeric_ = false;
    long long value_ = 0;
};

}  // namespace vmstar
