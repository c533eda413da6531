#include "circhad/sign_vector.hpp"

#include <sstream>
#include <stdexcept>

namespace circhad {

void validate_sign_vector(const SignVector& row) {
    if (row.empty()) throw std::invalid_argument("sign vector: empty row");
    for (auto e : row)
        if (e != 1 && e != -1)
            throw std::invalid_argument("sign vector: entries must be +1 or -1");
}

namespace {

bool is_compact_form(const std::string& text) {
    if (text.empty()) return false;
    for (char c : text)
        if (c != '+' && c != '-') return false;
    return true;
}

}  // namespace

SignVector parse_sign_vector(const std::string& text) {
    SignVector row;
    if (is_compact_form(text)) {
        row.reserve(text.size());
        for (char c : text) row.push_back(c == '+' ? 1 : -1);
        return row;
    }
    std::istringstream in(text);
    std::string token;
    while (std::getline(in, token, ',')) {
        // strip blanks
        std::size_t b = token.find_first_not_of(" \t");
        std::size_t e = token.find_last_not_of(" \t");
        if (b == std::string::npos)
            throw std::invalid_argument("sign vector: empty entry in '" + text + "'");
        token = token.substr(b, e - b + 1);
        if (token == "1" || token == "+1" || token == "+")
            row.push_back(1);
        else if (token == "-1" || token == "-")
            row.push_back(-1);
        else
            throw std::invalid_argument("sign vector: bad entry '" + token + "'");
    }
    validate_sign_vector(row);
    return row;
}

std::string format_sign_vector(const SignVector& row) {
    std::ostringstream out;
    out << '[';
    for (std::size_t i = 0; i < row.size(); ++i) {
        if (i) out << ", ";
        out << int(row[i]);
    }
    out << ']';
    return out.str();
}

SignVector negated(const SignVector& row) {
    SignVector out(row.size());
    for (std::size_t i = 0; i < row.size(); ++i) out[i] = static_cast<std::int8_t>(-row[i]);
    return out;
}

SignVector reversed(const SignVector& row) { return SignVector(row.rbegin(), row.rend()); }

SignVector shifted(const SignVector& row, std::size_t k) {
    const std::size_t n = row.size();
    SignVector out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = row[(i + n - (k % n)) % n];
    return out;
}

SignVector alternating_flip(const SignVector& row) {
    SignVector out(row);
    for (std::size_t i = 1; i < row.size(); i += 2) out[i] = static_cast<std::int8_t>(-out[i]);
    return out;
}

}  // namespace circhad
