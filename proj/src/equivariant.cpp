#include "flipstiefel/equivariant.hpp"

#include <algorithm>
#include <stdexcept>

namespace flipstiefel {

C2Space C2Space::flip_stiefel(int n, int frame) {
    const FlipManifold m = FlipManifold::from_frame(n, frame);  // validates range
    return C2Space{Kind::FlipStiefel, m.n, m.k};
}

C2Space C2Space::antipodal_stiefel(int n, int k) {
    if (k < 1 || k > n)
        throw std::invalid_argument("pstiefel: requires 1 <= k <= n, got n=" + std::to_string(n) +
                                    " k=" + std::to_string(k));
    return C2Space{Kind::AntipodalStiefel, n, k};
}

C2Space C2Space::antipodal_sphere(int n) {
    if (n < 1) throw std::invalid_argument("sphere: requires n >= 1");
    return C2Space{Kind::AntipodalSphere, n, 1};
}

C2Space C2Space::flip_orthogonal(int frame) {
    if (frame < 2 || frame % 2 != 0)
        throw std::invalid_argument("o: requires an even frame 2k >= 2, got " +
                                    std::to_string(frame));
    return C2Space{Kind::FlipOrthogonal, frame, frame / 2};
}

C2Space C2Space::antipodal_so(int n) {
    if (n < 2) throw std::invalid_argument("so: requires n >= 2");
    return C2Space{Kind::AntipodalSO, n, n - 1};
}

namespace {

int parse_int(const std::string& text, const std::string& spec) {
    std::size_t used = 0;
    int value = 0;
    try {
        value = std::stoi(text, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("space spec '" + spec + "': malformed integer '" + text + "'");
    }
    if (used != text.size())
        throw std::invalid_argument("space spec '" + spec + "': malformed integer '" + text + "'");
    return value;
}

std::pair<int, int> parse_int_pair(const std::string& body, const std::string& spec) {
    const auto comma = body.find(',');
    if (comma == std::string::npos)
        throw std::invalid_argument("space spec '" + spec + "': expected two comma-separated integers");
    return {parse_int(body.substr(0, comma), spec), parse_int(body.substr(comma + 1), spec)};
}

}  // namespace

C2Space C2Space::parse(const std::string& spec) {
    const auto colon = spec.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("space spec '" + spec +
                                    "': expected flip:n,2k | pstiefel:n,k | sphere:n | so:n | o:2k");
    const std::string head = spec.substr(0, colon);
    const std::string body = spec.substr(colon + 1);
    if (head == "flip") {
        const auto [n, frame] = parse_int_pair(body, spec);
        return flip_stiefel(n, frame);
    }
    if (head == "pstiefel") {
        const auto [n, k] = parse_int_pair(body, spec);
        return antipodal_stiefel(n, k);
    }
    if (head == "sphere") return antipodal_sphere(parse_int(body, spec));
    if (head == "so") return antipodal_so(parse_int(body, spec));
    if (head == "o") return flip_orthogonal(parse_int(body, spec));
    throw std::invalid_argument("space spec '" + spec + "': unknown family '" + head + "'");
}

std::string C2Space::to_string() const {
    switch (kind) {
        case Kind::FlipStiefel:
            return "flip:" + std::to_string(n) + "," + std::to_string(2 * k);
        case Kind::AntipodalStiefel:
            return "pstiefel:" + std::to_string(n) + "," + std::to_string(k);
        case Kind::AntipodalSphere: return "sphere:" + std::to_string(n);
        case Kind::FlipOrthogonal: return "o:" + std::to_string(2 * k);
        case Kind::AntipodalSO: return "so:" + std::to_string(n);
    }
    return "?";
}

IndexIdeal index_exponent(const C2Space& s) {
    switch (s.kind) {
        case C2Space::Kind::FlipStiefel:
        case C2Space::Kind::FlipOrthogonal:
            return IndexIdeal{nf(s.n, s.k)};
        case C2Space::Kind::AntipodalStiefel:
        case C2Space::Kind::AntipodalSO:
            return IndexIdeal{np(s.n, s.k)};
        case C2Space::Kind::AntipodalSphere:
            return IndexIdeal{np(s.n, 1)};  // = n
    }
    throw std::logic_error("index_exponent: unhandled kind");
}

std::string to_string(Verdict v) { return v == Verdict::Forbidden ? "forbidden" : "unknown"; }

ObstructionVerdict obstruct(const C2Space& source, const C2Space& target) {
    const int src = index_exponent(source).exponent;
    const int dst = index_exponent(target).exponent;
    return ObstructionVerdict{dst < src ? Verdict::Forbidden : Verdict::Unknown, src, dst};
}

int coincidence_threshold(int n, int k) {
    return (nf(n, k) - 1) / k;  // nf validates the range
}

int rn(int n) {
    if (n < 7) throw std::invalid_argument("rn: requires n >= 7, got " + std::to_string(n));
    switch (n % 4) {
        case 1:
        case 2: return 5;
        case 0: return 4;
        default: return 3;
    }
}

bool nf_is_minimal(int n, int k) {
    if (k < 1 || 2 * k > n)
        throw std::invalid_argument("nf_is_minimal: requires 1 < 2k <= n");
    const Dyadic a = Dyadic::of(static_cast<std::uint64_t>(n - k));
    const Dyadic b = Dyadic::of(static_cast<std::uint64_t>(n - 2 * k + 1));
    for (std::size_t i = 0; i < b.size(); ++i)
        if (b.bit(i) && !a.bit(i)) return false;
    return true;
}

}  // namespace flipstiefel
