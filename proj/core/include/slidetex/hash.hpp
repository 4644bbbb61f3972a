#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace slidetex {

/// FNV-1a 64-bit. Used for feature-layout identity and input content hashes
/// recorded in output artifacts; not a cryptographic hash.
class Fnv1a64 {
public:
    Fnv1a64& update(const void* data, std::size_t size) {
        const auto* bytes = static_cast<const unsigned char*>(data);
        for (std::size_t i = 0; i < size; ++i) {
            hash_ ^= bytes[i];
            hash_ *= 0x100000001B3ull;
        }
        return *this;
    }

    Fnv1a64& update(std::string_view text) { return update(text.data(), text.size()); }

    std::uint64_t value() const { return hash_; }

private:
    std::uint64_t hash_ = 0xCBF29CE484222325ull;
};

inline std::uint64_t fnv1a64(std::string_view text) {
    return Fnv1a64().update(text).value();
}

std::string to_hex(std::uint64_t value);

/// Streaming FNV-1a of a file's bytes; throws DataError if unreadable.
std::uint64_t hash_file(const std::string& path);

}  // namespace slidetex
