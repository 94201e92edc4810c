#include "qhash/fingerprint.hpp"

#include <bit>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "qhash/keyset.hpp"

namespace qhash {

LinearCode::LinearCode(BitMatrix generator) : generator_(std::move(generator)) {
    if (generator_.cols() < 1 || generator_.rows() < generator_.cols())
        throw std::invalid_argument("generator must be m x n with m >= n >= 1");
    if ((generator_.array() > 1).any()) throw std::invalid_argument("generator entries must be 0 or 1");
    if (generator_.rows() > (Eigen::Index{1} << kMaxQubits))
        throw std::invalid_argument("codeword length too large to simulate");
}

LinearCode random_linear_code(int n, int m, CounterRng& rng) {
    if (n < 1 || m < n) throw std::invalid_argument("random code requires m >= n >= 1");
    BitMatrix g(m, n);
    for (Eigen::Index r = 0; r < g.rows(); ++r)
        for (Eigen::Index c = 0; c < g.cols(); ++c) g(r, c) = static_cast<std::uint8_t>(rng() >> 63);
    return LinearCode(std::move(g));
}

BitVector encode(const LinearCode& code, const BitVector& message) {
    if (message.size() != code.n())
        throw std::invalid_argument("message has " + std::to_string(message.size()) + " bits, code expects " +
                                    std::to_string(code.n()));
    const Eigen::VectorXi product = code.generator().cast<int>() * message.cast<int>();
    return product.unaryExpr([](int x) { return static_cast<std::uint8_t>(x & 1); });
}

namespace {

int weight(const BitVector& w) { return w.cast<int>().sum(); }

int register_qubits(int m) { return std::max(1, static_cast<int>(std::bit_width(static_cast<unsigned>(m - 1)))); }

}  // namespace

std::optional<int> min_distance(const LinearCode& code) {
    if (code.n() > kMaxEnumerableBits) return std::nullopt;
    int best = code.m();
    for (std::uint64_t u = 1; u < (std::uint64_t{1} << code.n()); ++u)
        best = std::min(best, weight(encode(code, bits_of(u, code.n()))));
    return best;
}

State fingerprint_state(const LinearCode& code, const BitVector& message) {
    const BitVector word = encode(code, message);
    const int m = code.m();
    State::Amplitudes a = State::Amplitudes::Zero(Eigen::Index{1} << register_qubits(m));
    const double scale = 1.0 / std::sqrt(static_cast<double>(m));
    for (int i = 0; i < m; ++i) a(i) = word(i) ? -scale : scale;
    return State::from_amplitudes(std::move(a));
}

double fingerprint_inner_product(const LinearCode& code, const BitVector& u, const BitVector& v) {
    const BitVector eu = encode(code, u);
    const BitVector ev = encode(code, v);
    const int distance = (eu.array() != ev.array()).count();
    return static_cast<double>(code.m() - 2 * distance) / code.m();
}

double fingerprint_resistance(const LinearCode& code) {
    if (code.n() > kMaxEnumerableBits)
        throw std::domain_error("resistance needs exhaustive enumeration; n too large");
    double worst = 0;
    for (std::uint64_t u = 1; u < (std::uint64_t{1} << code.n()); ++u) {
        const int w = weight(encode(code, bits_of(u, code.n())));
        worst = std::max(worst, std::abs(1.0 - 2.0 * w / code.m()));
    }
    return worst;
}

FingerprintReverseResult fingerprint_reverse_test(const LinearCode& code, const BitVector& claimed, const State& psi,
                                                  CounterRng& rng) {
    const int qubits = register_qubits(code.m());
    if (psi.num_qubits() != qubits) throw std::invalid_argument("dimension mismatch: state does not match code");
    const BitVector word = encode(code, claimed);
    const auto m = static_cast<std::uint64_t>(code.m());
    const auto uncomputed = psi.transformed([&](auto& a) {
        for (int i = 0; i < code.m(); ++i)
            if (word(i)) a(i) = -a(i);
        if (std::has_single_bit(m) && m > 1) {
            for (int q = 0; q < qubits; ++q) kernels::hadamard(a, q);
        } else {
            kernels::uniform_prep(a, 0, qubits, m);
        }
    });
    const auto record = measure_all(uncomputed, rng);
    return {record.outcome == 0, record};
}

BitVector parse_bits(const std::string& text) {
    BitVector bits(static_cast<Eigen::Index>(text.size()));
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] != '0' && text[i] != '1') throw std::invalid_argument("bit string may only contain 0 and 1");
        bits(static_cast<Eigen::Index>(i)) = static_cast<std::uint8_t>(text[i] - '0');
    }
    return bits;
}

std::string format_bits(const BitVector& bits) {
    std::string s(static_cast<std::size_t>(bits.size()), '0');
    for (Eigen::Index i = 0; i < bits.size(); ++i) s[static_cast<std::size_t>(i)] = bits(i) ? '1' : '0';
    return s;
}

BitVector bits_of(std::uint64_t value, int n) {
    BitVector bits(n);
    for (int i = 0; i < n; ++i) bits(i) = static_cast<std::uint8_t>((value >> i) & 1U);
    return bits;
}

LinearCode parse_code(std::istream& in) {
    std::string raw;
    std::size_t line = 0;
    long n = -1;
    long m = -1;
    std::vector<std::string> rows;
    while (std::getline(in, raw)) {
        ++line;
        std::istringstream ss(raw);
        std::vector<std::string> tokens;
        for (std::string t; ss >> t;) tokens.push_back(t);
        if (tokens.empty() || tokens.front().front() == '#') continue;
        auto header = [&](const char* name, long& out) {
            if (tokens.size() != 2 || tokens[0] != name)
                throw ParseError(line, std::string("expected '") + name + " <value>'");
            try {
                std::size_t used = 0;
                out = std::stol(tokens[1], &used);
                if (used != tokens[1].size() || out < 1) throw std::invalid_argument("");
            } catch (const std::exception&) {
                throw ParseError(line, std::string("bad value for ") + name);
            }
        };
        if (n < 0) {
            header("n", n);
        } else if (m < 0) {
            header("m", m);
        } else {
            if (tokens.size() != 1 || static_cast<long>(tokens[0].size()) != n ||
                tokens[0].find_first_not_of("01") != std::string::npos)
                throw ParseError(line, "expected a generator row of " + std::to_string(n) + " bits");
            rows.push_back(tokens[0]);
        }
    }
    if (m < 0) throw ParseError(line + 1, "unexpected end of file in header");
    if (static_cast<long>(rows.size()) != m)
        throw ParseError(line + 1, "declared m " + std::to_string(m) + " but found " + std::to_string(rows.size()) +
                                       " rows");
    BitMatrix g(m, n);
    for (long r = 0; r < m; ++r)
        for (long c = 0; c < n; ++c) g(r, c) = static_cast<std::uint8_t>(rows[r][c] - '0');
    try {
        return LinearCode(std::move(g));
    } catch (const std::invalid_argument& e) {
        throw ParseError(0, e.what());
    }
}

LinearCode load_code(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot open code file '" + path + "'");
    return parse_code(in);
}

std::string format_code(const LinearCode& code) {
    std::string out = "n " + std::to_string(code.n()) + "\nm " + std::to_string(code.m()) + "\n";
    for (Eigen::Index r = 0; r < code.generator().rows(); ++r) {
        for (Eigen::Index c = 0; c < code.generator().cols(); ++c) out += code.generator()(r, c) ? '1' : '0';
        out += '\n';
    }
    return out;
}

void save_code(const LinearCode& code, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write code file '" + path + "'");
    out << format_code(code);
}

}  // namespace qhash
