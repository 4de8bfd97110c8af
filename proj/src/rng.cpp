#include "lf/rng.hpp"

#include <string>

namespace lf {

namespace {

// Reference TinyMT32 parameter set (mat1, mat2, tmat). Streams share the
// parameter set and are separated by per-stream state seeding; the period of
// 2^127 - 1 makes trajectory overlap between well-mixed seeds negligible for
// any run length this toolkit produces.
constexpr std::uint32_t kTinyMat1 = 0x8F7011EEu;
constexpr std::uint32_t kTinyMat2 = 0xFC78FF1Fu;
constexpr std::uint32_t kTinyTmat = 0x3793FDFFu;

}  // namespace

const char* to_string(RngKind kind) {
    switch (kind) {
        case RngKind::lcg32: return "lcg32";
        case RngKind::lcg64_skip: return "lcg64";
        case RngKind::tiny_mt: return "tinymt";
    }
    return "?";
}

RngKind rng_kind_from_string(const std::string& name) {
    if (name == "lcg32") return RngKind::lcg32;
    if (name == "lcg64") return RngKind::lcg64_skip;
    if (name == "tinymt") return RngKind::tiny_mt;
    throw std::invalid_argument("unknown rng kind: " + name);
}

void RngStream::tinymt_init(std::uint64_t seed) {
    mt[0] = static_cast<std::uint32_t>(seed ^ (seed >> 32));
    mt[1] = mat1;
    mt[2] = mat2;
    mt[3] = tmat;
    for (unsigned i = 1; i < 8; ++i) {
        mt[i & 3] ^= i + 1812433253u * (mt[(i - 1) & 3] ^ (mt[(i - 1) & 3] >> 30));
    }
    if ((mt[0] & 0x7FFFFFFFu) == 0 && mt[1] == 0 && mt[2] == 0 && mt[3] == 0) {
        mt = {'T', 'I', 'N', 'Y'};  // forbidden all-zero state
    }
    for (int i = 0; i < 8; ++i) (void)tinymt_next();
}

RngStream RngStream::make(RngKind kind, std::uint64_t seed, std::uint32_t stream_id) {
    RngStream s;
    s.kind = kind;
    s.stream_id = stream_id;
    switch (kind) {
        case RngKind::lcg32:
            s.lcg = stream_id == 0 ? (seed & 0xFFFFFFFFull)
                                   : (detail::mix(seed, stream_id) & 0xFFFFFFFFull);
            break;
        case RngKind::lcg64_skip:
            s.lcg = seed;
            break;
        case RngKind::tiny_mt:
            s.mat1 = kTinyMat1;
            s.mat2 = kTinyMat2;
            s.tmat = kTinyTmat;
            s.tinymt_init(stream_id == 0 ? seed : detail::mix(seed, stream_id));
            break;
    }
    return s;
}

void RngStream::skip(std::uint64_t n) {
    if (kind != RngKind::lcg64_skip) {
        throw std::invalid_argument("skip_ahead: supported for lcg64 streams only");
    }
    // Compose x -> a x + c with itself n times by repeated squaring of the
    // affine map; the geometric sum for the additive term is folded into the
    // doubling, so no division is needed and mod-2^64 wraparound is exact.
    std::uint64_t acc_a = 1, acc_c = 0;
    std::uint64_t base_a = kLcg64Mult, base_c = kLcg64Add;
    while (n > 0) {
        if (n & 1u) {
            acc_a = base_a * acc_a;
            acc_c = base_a * acc_c + base_c;
        }
        base_c = (base_a + 1) * base_c;
        base_a = base_a * base_a;
        n >>= 1;
    }
    lcg = acc_a * lcg + acc_c;
}

RngStream skip_ahead(const RngStream& s, std::uint64_t n) {
    RngStream out = s;
    out.skip(n);
    return out;
}

std::vector<RngStream> split_streams(RngKind kind, std::uint64_t seed, int count,
                                     std::uint64_t stride) {
    if (count < 1) throw std::invalid_argument("split_streams: count must be >= 1");
    std::vector<RngStream> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int k = 0; k < count; ++k) {
        auto id = static_cast<std::uint32_t>(k);
        if (kind == RngKind::lcg64_skip) {
            RngStream s = RngStream::make(kind, seed, id);
            s.skip(stride * static_cast<std::uint64_t>(k));
            out.push_back(s);
        } else {
            out.push_back(RngStream::make(kind, seed, id));
        }
    }
    return out;
}

}  // namespace lf
