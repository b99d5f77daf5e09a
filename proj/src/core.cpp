#include "sumstruct/core.hpp"

#include "sumstruct/errors.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <numeric>
#include <sstream>

namespace sumstruct {

IntegerSet::IntegerSet(std::vector<long long> elements) : elements_(std::move(elements)) {
    if (elements_.size() < 2)
        throw InvalidInput("integer set needs at least 2 elements");
    if (elements_.front() != 0)
        throw InvalidInput("integer set must contain 0 as its minimum");
    long long g = 0;
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        if (i > 0 && elements_[i] <= elements_[i - 1])
            throw InvalidInput("integer set elements must be strictly increasing");
        g = std::gcd(g, elements_[i]);
    }
    if (g != 1)
        throw InvalidInput("integer set elements must have gcd 1");
    m_ = elements_.back();
    ell_ = static_cast<long long>(elements_.size()) - 2;
    a1_ = elements_[1];
    a_ell_ = elements_[elements_.size() - 2];
}

std::pair<IntegerSet, AffineRecord> IntegerSet::normalize(std::vector<long long> raw) {
    std::sort(raw.begin(), raw.end());
    raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
    if (raw.size() < 2)
        throw InvalidInput("normalize: need at least 2 distinct values");
    AffineRecord rec;
    rec.shift = raw.front();
    long long g = 0;
    for (long long v : raw)
        g = std::gcd(g, v - rec.shift);
    rec.scale = g; // nonzero: set has >= 2 distinct values
    std::vector<long long> elems;
    elems.reserve(raw.size());
    for (long long v : raw)
        elems.push_back((v - rec.shift) / rec.scale);
    return {IntegerSet(std::move(elems)), rec};
}

IntegerSet IntegerSet::reflect() const {
    std::vector<long long> r(elements_.rbegin(), elements_.rend());
    for (long long& v : r)
        v = m_ - v;
    return IntegerSet(std::move(r));
}

bool IntegerSet::contains(long long v) const {
    return std::binary_search(elements_.begin(), elements_.end(), v);
}

std::string IntegerSet::to_string() const { return format_int_list(elements_); }

std::vector<long long> parse_int_list(std::string_view text) {
    std::vector<long long> out;
    std::string token;
    auto flush = [&]() {
        if (token.empty())
            throw InvalidInput("empty entry in integer list");
        std::size_t pos = 0;
        long long v;
        try {
            v = std::stoll(token, &pos);
        } catch (...) {
            throw InvalidInput("bad integer '" + token + "'");
        }
        if (pos != token.size())
            throw InvalidInput("bad integer '" + token + "'");
        out.push_back(v);
        token.clear();
    };
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c)))
            continue;
        if (c == ',')
            flush();
        else
            token.push_back(c);
    }
    if (!token.empty())
        flush();
    if (out.empty())
        throw InvalidInput("empty integer list");
    return out;
}

std::vector<std::vector<long long>> read_sets_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw InvalidInput("cannot open '" + path + "'");
    std::vector<std::vector<long long>> out;
    std::string line;
    while (std::getline(in, line)) {
        bool blank = true;
        for (char c : line)
            if (!std::isspace(static_cast<unsigned char>(c)))
                blank = false;
        if (blank || line[0] == '#')
            continue;
        out.push_back(parse_int_list(line));
    }
    return out;
}

std::string format_int_list(const std::vector<long long>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            os << ',';
        os << v[i];
    }
    return os.str();
}

} // namespace sumstruct
