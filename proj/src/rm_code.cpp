#include "sprld/rm_code.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace sprld {

RmCode build_code(int r, int m) {
    if (m < 1 || r < 0 || r > m)
        throw std::invalid_argument("build_code: need 0 <= r <= m and m >= 1, got r=" +
                                    std::to_string(r) + " m=" + std::to_string(m));
    RmCode code;
    code.r = r;
    code.m = m;
    code.N = 1 << m;
    code.d = 1 << (m - r);
    code.frozen.assign(code.N, false);
    for (int i = 0; i < code.N; ++i) {
        if (std::popcount(static_cast<unsigned>(i)) < m - r)
            code.frozen[i] = true;
        else
            code.info.push_back(i);
    }
    code.K = static_cast<int>(code.info.size());
    return code;
}

void kronecker_transform(HardVec& v) {
    const auto n = v.size();
    for (std::size_t len = 1; len < n; len <<= 1)
        for (std::size_t i = 0; i < n; i += 2 * len)
            for (std::size_t j = i; j < i + len; ++j)
                v[j] ^= v[j + len];
}

HardVec encode(const RmCode& code, const HardVec& u) {
    if (static_cast<int>(u.size()) != code.N)
        throw std::invalid_argument("encode: message length mismatch");
    for (int i = 0; i < code.N; ++i)
        if (code.frozen[i] && u[i] != 0)
            throw std::invalid_argument("encode: nonzero value at frozen index " + std::to_string(i));
    HardVec x = u;
    kronecker_transform(x);
    return x;
}

bool is_codeword(const RmCode& code, const HardVec& x) {
    if (static_cast<int>(x.size()) != code.N)
        return false;
    HardVec u = x;
    kronecker_transform(u);
    for (int i = 0; i < code.N; ++i)
        if (code.frozen[i] && u[i] != 0)
            return false;
    return true;
}

std::vector<HardVec> codeword_set(const RmCode& code) {
    if (code.K > 20)
        throw std::invalid_argument("codeword_set: K > 20 would enumerate too many words");
    const std::size_t count = std::size_t{1} << code.K;
    std::vector<HardVec> words;
    words.reserve(count);
    HardVec u(code.N, 0);
    for (std::size_t pattern = 0; pattern < count; ++pattern) {
        for (int k = 0; k < code.K; ++k)
            u[code.info[k]] = static_cast<Bit>((pattern >> k) & 1u);
        words.push_back(encode(code, u));
    }
    return words;
}

}  // namespace sprld
