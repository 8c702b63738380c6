// Copyright (c) 2026 The chaincx developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef CHAINCX_SHA256_HPP
#define CHAINCX_SHA256_HPP

#include <array>
#include <cstddef>
#include <cstdint>

namespace chaincx {

using Digest256 = std::array<std::uint8_t, 32>;

/// Single SHA-256 over a byte buffer (OpenSSL-backed).
Digest256 sha256(const std::uint8_t* data, std::size_t size);

} // namespace chaincx

#endif // CHAINCX_SHA256_HPP
