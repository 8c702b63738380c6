// Copyright (c) 2026 The chaincx developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include "sha256.hpp"

#include <openssl/evp.h>

#include "errors.hpp"

namespace chaincx {

Digest256 sha256(const std::uint8_t* data, std::size_t size) {
    Digest256 out{};
    unsigned int out_len = 0;
    if (EVP_Digest(data, size, out.data(), &out_len, EVP_sha256(), nullptr) != 1 || out_len != 32)
        throw Error(ErrorCode::Internal, "SHA-256 digest failed");
    return out;
}

} // namespace chaincx
