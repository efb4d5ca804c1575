#include "sprld/gf2_perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace sprld {

namespace {

// Gauss-Jordan over GF(2) on bitmask rows; returns false when singular.
bool invert_rows(int s, std::vector<std::uint32_t> a, std::vector<std::uint32_t>& inv) {
    inv.assign(static_cast<std::size_t>(s), 0);
    for (int k = 0; k < s; ++k)
        inv[k] = 1u << k;
    for (int col = 0; col < s; ++col) {
        int pivot = -1;
        for (int row = col; row < s; ++row) {
            if ((a[row] >> col) & 1u) {
                pivot = row;
                break;
            }
        }
        if (pivot < 0)
            return false;
        std::swap(a[col], a[pivot]);
        std::swap(inv[col], inv[pivot]);
        for (int row = 0; row < s; ++row) {
            if (row != col && ((a[row] >> col) & 1u)) {
                a[row] ^= a[col];
                inv[row] ^= inv[col];
            }
        }
    }
    return true;
}

bool rows_invertible(int s, const std::vector<std::uint32_t>& a) {
    std::vector<std::uint32_t> scratch;
    return invert_rows(s, a, scratch);
}

}  // namespace

AffinePerm::AffinePerm(int s, std::vector<std::uint32_t> rows, std::uint32_t shift)
    : s_(s), rows_(std::move(rows)), shift_(shift) {
    if (s < 1 || s > 30 || static_cast<int>(rows_.size()) != s)
        throw std::invalid_argument("AffinePerm: bad dimension");
    if (!rows_invertible(s_, rows_))
        throw std::invalid_argument("AffinePerm: matrix is singular over GF(2)");
}

AffinePerm AffinePerm::identity(int s) {
    if (s < 1)
        throw std::invalid_argument("AffinePerm::identity: s >= 1 required");
    AffinePerm p;
    p.s_ = s;
    p.rows_.resize(static_cast<std::size_t>(s));
    for (int k = 0; k < s; ++k)
        p.rows_[k] = 1u << k;
    p.shift_ = 0;
    return p;
}

AffinePerm AffinePerm::sample_affine(int s, Rng& rng) {
    AffinePerm p = identity(s);
    const std::uint32_t mask = (s == 32) ? ~0u : ((1u << s) - 1u);
    std::uniform_int_distribution<std::uint32_t> dist(0, mask);
    do {
        for (int k = 0; k < s; ++k)
            p.rows_[k] = dist(rng);
    } while (!rows_invertible(s, p.rows_));
    p.shift_ = dist(rng);
    return p;
}

AffinePerm AffinePerm::sample_stage_perm(int s, Rng& rng) {
    std::vector<int> layer(static_cast<std::size_t>(s));
    std::iota(layer.begin(), layer.end(), 0);
    std::shuffle(layer.begin(), layer.end(), rng);
    AffinePerm p = identity(s);
    for (int k = 0; k < s; ++k)
        p.rows_[static_cast<std::size_t>(layer[k])] = 1u << k;  // input bit k feeds output bit layer[k]
    p.shift_ = 0;
    return p;
}

bool AffinePerm::is_identity() const {
    if (shift_ != 0)
        return false;
    for (int k = 0; k < s_; ++k)
        if (rows_[k] != (1u << k))
            return false;
    return true;
}

std::string AffinePerm::to_string() const {
    std::ostringstream os;
    os << std::hex;
    for (int k = 0; k < s_; ++k) {
        if (k)
            os << ',';
        os << rows_[k];
    }
    os << ';' << shift_;
    return os.str();
}

AffinePerm invert(const AffinePerm& p) {
    AffinePerm q;
    q.s_ = p.s_;
    if (!invert_rows(p.s_, p.rows_, q.rows_))
        throw std::logic_error("invert: permutation matrix became singular");
    std::uint32_t b = 0;
    for (int k = 0; k < p.s_; ++k)
        b ^= static_cast<std::uint32_t>(std::popcount(q.rows_[k] & p.shift_) & 1) << k;
    q.shift_ = b;
    return q;
}

AffinePerm compose(const AffinePerm& p, const AffinePerm& q) {
    if (p.s_ != q.s_)
        throw std::invalid_argument("compose: dimension mismatch");
    AffinePerm out;
    out.s_ = p.s_;
    out.rows_.assign(static_cast<std::size_t>(p.s_), 0);
    for (int k = 0; k < p.s_; ++k) {
        std::uint32_t row = 0;
        for (int j = 0; j < p.s_; ++j)
            if ((p.rows_[k] >> j) & 1u)
                row ^= q.rows_[j];
        out.rows_[k] = row;
    }
    std::uint32_t b = 0;
    for (int k = 0; k < p.s_; ++k)
        b ^= static_cast<std::uint32_t>(std::popcount(p.rows_[k] & q.shift_) & 1) << k;
    out.shift_ = b ^ p.shift_;
    return out;
}

bool operator==(const AffinePerm& a, const AffinePerm& b) {
    return a.s_ == b.s_ && a.shift_ == b.shift_ && a.rows_ == b.rows_;
}

}  // namespace sprld
