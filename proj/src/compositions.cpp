#include "emd/compositions.hpp"

#include <stdexcept>

namespace emd {

Composition::Composition(std::vector<long long> p) : parts(std::move(p)) {
    for (long long v : parts)
        if (v < 0) throw std::invalid_argument("composition part is negative");
}

Composition::Composition(std::initializer_list<long long> p)
    : Composition(std::vector<long long>(p)) {}

long long Composition::sum() const {
    long long s = 0;
    for (long long v : parts) s += v;
    return s;
}

std::string Composition::to_string() const {
    std::string out;
    for (int i = 0; i < size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts[i]);
    }
    return out;
}

namespace {

void emit(long long remaining, int slots, std::vector<long long>& acc,
          std::vector<Composition>& out) {
    if (slots == 1) {
        acc.push_back(remaining);
        out.push_back(Composition(acc));
        acc.pop_back();
        return;
    }
    for (long long v = remaining; v >= 0; --v) {
        acc.push_back(v);
        emit(remaining - v, slots - 1, acc, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<Composition> all_compositions(long long s, int n) {
    if (n < 1) throw std::invalid_argument("composition needs at least one part");
    if (s < 0) throw std::invalid_argument("composition sum is negative");
    std::vector<Composition> out;
    std::vector<long long> acc;
    acc.reserve(static_cast<std::size_t>(n));
    emit(s, n, acc, out);
    return out;
}

BigInt count_compositions(long long s, int n) {
    if (n < 1 || s < 0) return 0;
    return binomial(static_cast<unsigned long>(s + n - 1), n - 1);
}

}  // namespace emd
