#include "nkstar/perm.hpp"

#include <sstream>
#include <stdexcept>

namespace nkstar {

void validate_spec(const GraphSpec& spec) {
    if (spec.n < 2 || spec.n > 20) {
        throw std::invalid_argument("GraphSpec: n must satisfy 2 <= n <= 20, got n=" +
                                    std::to_string(spec.n));
    }
    if (spec.k < 1 || spec.k > spec.n - 1) {
        throw std::invalid_argument("GraphSpec: k must satisfy 1 <= k <= n-1, got k=" +
                                    std::to_string(spec.k) + " with n=" + std::to_string(spec.n));
    }
}

void validate_label(const PermLabel& label, const GraphSpec& spec) {
    validate_spec(spec);
    if (label.size() != spec.k) {
        throw std::invalid_argument("PermLabel: expected " + std::to_string(spec.k) +
                                    " symbols, got " + std::to_string(label.size()));
    }
    unsigned seen = 0;
    for (int s : label.symbols) {
        if (s < 1 || s > spec.n) {
            throw std::invalid_argument("PermLabel: symbol " + std::to_string(s) +
                                        " outside 1.." + std::to_string(spec.n));
        }
        if (seen & (1u << s)) {
            throw std::invalid_argument("PermLabel: repeated symbol " + std::to_string(s));
        }
        seen |= 1u << s;
    }
}

namespace {

// P(m, j) = m!/(m-j)!: number of j-permutations of an m-set. Fits uint64 for m <= 20.
std::uint64_t falling_factorial(int m, int j) {
    std::uint64_t r = 1;
    for (int i = 0; i < j; ++i) r *= static_cast<std::uint64_t>(m - i);
    return r;
}

}  // namespace

std::uint64_t num_vertices(const GraphSpec& spec) {
    validate_spec(spec);
    return falling_factorial(spec.n, spec.k);
}

std::uint64_t rank(const PermLabel& label, const GraphSpec& spec) {
    validate_label(label, spec);
    std::uint64_t r = 0;
    unsigned used = 0;
    for (int pos = 0; pos < spec.k; ++pos) {
        int sym = label[pos];
        int smaller_free = 0;
        for (int s = 1; s < sym; ++s) {
            if (!(used & (1u << s))) ++smaller_free;
        }
        // completions of a fixed (pos+1)-prefix: P(n-pos-1, k-pos-1)
        r += smaller_free * falling_factorial(spec.n - pos - 1, spec.k - pos - 1);
        used |= 1u << sym;
    }
    return r;
}

PermLabel unrank(std::uint64_t index, const GraphSpec& spec) {
    validate_spec(spec);
    std::uint64_t total = num_vertices(spec);
    if (index >= total) {
        throw std::out_of_range("unrank: index " + std::to_string(index) + " >= vertex count " +
                                std::to_string(total));
    }
    PermLabel label;
    label.symbols.reserve(spec.k);
    unsigned used = 0;
    for (int pos = 0; pos < spec.k; ++pos) {
        std::uint64_t block = falling_factorial(spec.n - pos - 1, spec.k - pos - 1);
        int skip = static_cast<int>(index / block);
        index %= block;
        for (int s = 1; s <= spec.n; ++s) {
            if (used & (1u << s)) continue;
            if (skip == 0) {
                label.symbols.push_back(s);
                used |= 1u << s;
                break;
            }
            --skip;
        }
    }
    return label;
}

std::string format_label(const PermLabel& label, const GraphSpec& spec) {
    validate_label(label, spec);
    std::string out;
    for (int pos = 0; pos < label.size(); ++pos) {
        if (spec.n > 9 && pos > 0) out += ',';
        out += std::to_string(label[pos]);
    }
    return out;
}

PermLabel parse_label(const std::string& text, const GraphSpec& spec) {
    validate_spec(spec);
    PermLabel label;
    if (text.find(',') != std::string::npos) {
        std::istringstream in(text);
        std::string tok;
        while (std::getline(in, tok, ',')) {
            try {
                label.symbols.push_back(std::stoi(tok));
            } catch (const std::exception&) {
                throw std::invalid_argument("parse_label: bad symbol '" + tok + "' in '" + text + "'");
            }
        }
    } else {
        for (char c : text) {
            if (c < '1' || c > '9') {
                throw std::invalid_argument("parse_label: bad character '" + std::string(1, c) +
                                            "' in '" + text + "'");
            }
            label.symbols.push_back(c - '0');
        }
    }
    validate_label(label, spec);
    return label;
}

}  // namespace nkstar
