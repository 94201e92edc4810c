#include "qhash/signature.hpp"

#include <stdexcept>

#include "qhash/bias.hpp"

namespace qhash {

ProtocolParams::ProtocolParams(HashParams hash_params, std::uint64_t level, std::size_t recipient_count)
    : hash(std::move(hash_params)), security_level(level), recipients(recipient_count) {
    if (security_level < 1 || security_level > hash.modulus())
        throw std::invalid_argument("security level must lie in [1, N]");
    if (recipients < 1) throw std::invalid_argument("at least one recipient is required");
}

std::uint64_t private_to_message(const ProtocolParams& params, std::uint64_t x) {
    if (x < 1 || x > params.security_level) throw std::invalid_argument("private number must lie in [1, L]");
    return x % params.hash.modulus();
}

namespace {

void check_bit(int bit) {
    if (bit != 0 && bit != 1) throw std::invalid_argument("message bit must be 0 or 1");
}

}  // namespace

SignatureKeyPair keygen(const ProtocolParams& params, CounterRng& rng) {
    SignatureKeyPair kp;
    for (auto& x : kp.private_key) x = 1 + rng.below(params.security_level);
    const PublicKey pk{hash_state(params.hash, private_to_message(params, kp.private_key[0])),
                       hash_state(params.hash, private_to_message(params, kp.private_key[1]))};
    kp.public_copies.assign(params.recipients, pk);
    return kp;
}

std::uint64_t sign(const SignatureKeyPair& keypair, int bit) {
    check_bit(bit);
    return keypair.private_key[static_cast<std::size_t>(bit)];
}

VerifyResult verify(const ProtocolParams& params, const PublicKey& public_key, int bit, std::uint64_t signature,
                    CounterRng& rng) {
    check_bit(bit);
    const auto result =
        reverse_test(params.hash, private_to_message(params, signature), public_key[static_cast<std::size_t>(bit)], rng);
    return {result.accepted, result.record};
}

double forgery_prediction(const ProtocolParams& params) {
    const auto& ks = params.hash.keyset();
    const auto n = ks.modulus();
    const auto by_diff = inner_product_by_difference<double>(ks);
    const std::uint64_t level = params.security_level;
    // Number of ordered pairs (x, x') in [1, L]^2 with x - x' = t, for t in (-L, L).
    double total = 0;
    for (std::uint64_t t = 0; t < level; ++t) {
        const double ip = by_diff[t % n];
        const double pairs = static_cast<double>(level - t) * (t == 0 ? 1.0 : 2.0);
        total += pairs * ip * ip;
    }
    const double l = static_cast<double>(level);
    return total / (l * l);
}

ForgeryReport forgery_experiment(const ProtocolParams& params, std::uint64_t trials, CounterRng& rng) {
    if (trials == 0) throw std::invalid_argument("trials must be positive");
    const CounterRng root = rng.split(rng());
    ForgeryReport report;
    report.trials.reserve(trials);
    std::uint64_t successes = 0;
    for (std::uint64_t t = 0; t < trials; ++t) {
        auto trial_rng = root.split(t);
        const auto kp = keygen(params, trial_rng);
        ForgeryTrial trial;
        trial.bit = static_cast<int>(trial_rng.below(2));
        trial.guess = 1 + trial_rng.below(params.security_level);
        trial.accepted = verify(params, kp.public_copies.front(), trial.bit, trial.guess, trial_rng).accepted;
        successes += trial.accepted ? 1 : 0;
        report.trials.push_back(trial);
    }
    report.rate = static_cast<double>(successes) / static_cast<double>(trials);
    report.predicted = forgery_prediction(params);
    return report;
}

PublicPairCheck public_pair_swap_test(const PublicKey& public_key, std::uint64_t shots, CounterRng& rng) {
    PublicPairCheck check;
    check.accept_probability = swap_test_accept_probability(public_key[0], public_key[1]);
    check.counts = swap_test(public_key[0], public_key[1], shots, rng);
    return check;
}

MultiBitSignature sign_message(const ProtocolParams& params, std::span<const std::uint8_t> bits, CounterRng& rng) {
    MultiBitSignature out;
    for (auto b : bits) {
        out.keypairs.push_back(keygen(params, rng));
        out.signatures.push_back(sign(out.keypairs.back(), b));
    }
    return out;
}

bool verify_message(const ProtocolParams& params, const MultiBitSignature& signed_message,
                    std::span<const std::uint8_t> bits, CounterRng& rng) {
    if (bits.size() != signed_message.signatures.size() || bits.size() != signed_message.keypairs.size())
        throw std::invalid_argument("signature length does not match message length");
    bool ok = true;
    for (std::size_t i = 0; i < bits.size(); ++i) {
        ok = verify(params, signed_message.keypairs[i].public_copies.front(), bits[i], signed_message.signatures[i], rng)
                 .accepted && ok;
    }
    return ok;
}

}  // namespace qhash
