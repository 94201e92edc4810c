#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "qhash/hash.hpp"
#include "qhash/random.hpp"
#include "qhash/state.hpp"

namespace qhash {

/// Public protocol parameters. Private numbers are drawn from [1, security_level].
struct ProtocolParams {
    HashParams hash;
    std::uint64_t security_level = 1;  // L
    std::size_t recipients = 1;

    ProtocolParams(HashParams hash_params, std::uint64_t level, std::size_t recipient_count = 1);
};

/// The pair (|h(x_0)>, |h(x_1)>) handed to one recipient.
using PublicKey = std::array<State, 2>;

struct SignatureKeyPair {
    std::array<std::uint64_t, 2> private_key{};  // (x_0, x_1)
    std::vector<PublicKey> public_copies;        // one per recipient
};

struct VerifyResult {
    bool accepted = false;
    MeasurementRecord record;
};

/// Private numbers are hashed as x mod N, so x = N shares its state with 0.
std::uint64_t private_to_message(const ProtocolParams& params, std::uint64_t x);

SignatureKeyPair keygen(const ProtocolParams& params, CounterRng& rng);

/// The signature on bit b is x_b itself. Revealing both halves exposes the whole key.
std::uint64_t sign(const SignatureKeyPair& keypair, int bit);

/// Uncomputes |h(signature)> from the recipient's public state for `bit`.
VerifyResult verify(const ProtocolParams& params, const PublicKey& public_key, int bit, std::uint64_t signature,
                    CounterRng& rng);

struct ForgeryTrial {
    int bit = 0;
    std::uint64_t guess = 0;
    bool accepted = false;
};

struct ForgeryReport {
    std::vector<ForgeryTrial> trials;
    double rate = 0;
    double predicted = 0;
};

/// Exact success probability of a uniform guess against a uniform key:
/// (1/L^2) sum_{x, x'} |<h(x)|h(x')>|^2 = 1/L + (1 - 1/L) E[|ip|^2 | x != x'].
double forgery_prediction(const ProtocolParams& params);

/// Each trial: fresh key pair, uniform bit, uniform guess in [1, L], verifier decides.
ForgeryReport forgery_experiment(const ProtocolParams& params, std::uint64_t trials, CounterRng& rng);

/// SWAP-test between the two halves of a public key.
struct PublicPairCheck {
    double accept_probability = 0;
    SwapTestCounts counts;
};
PublicPairCheck public_pair_swap_test(const PublicKey& public_key, std::uint64_t shots, CounterRng& rng);

/// Bit-by-bit signing with an independent key pair per bit.
struct MultiBitSignature {
    std::vector<SignatureKeyPair> keypairs;
    std::vector<std::uint64_t> signatures;
};
MultiBitSignature sign_message(const ProtocolParams& params, std::span<const std::uint8_t> bits, CounterRng& rng);
bool verify_message(const ProtocolParams& params, const MultiBitSignature& signed_message,
                    std::span<const std::uint8_t> bits, CounterRng& rng);

}  // namespace qhash
