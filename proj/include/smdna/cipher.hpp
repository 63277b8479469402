#pragma once

// Pixel-chained dynamic DNA cipher.
//
// For pixel i (raster order) the pad byte mixes the two keystream bytes with
// the mod-256 sum of all later plain pixels (feed-forward) and all earlier
// cipher pixels (feedback). Pad and plain pixel are DNA-encoded under rsq1
// and rsq2, added under rsq3, added again to the previous cipher quad under
// rsq3, and decoded under rsq4.
//
// Decryption runs in reverse raster order: the feed-forward term of pixel i
// needs the plain pixels after i, which are recovered first.

#include <cstdint>

#include "smdna/image.hpp"
#include "smdna/key_schedule.hpp"

namespace smdna {

constexpr std::uint8_t combine_dotp(std::uint8_t d1, std::uint8_t d2,
                                    std::uint8_t pidt, std::uint8_t cidt) {
  return static_cast<std::uint8_t>(((d1 ^ d2) ^ pidt) ^ cidt);
}

Image encrypt(const Image& plain, const SecretKey& key);
Image decrypt(const Image& cipher, const SecretKey& key);

/// Same as above with a precomputed schedule; its length must equal the
/// pixel count.
Image encrypt(const Image& plain, const KeySchedule& schedule);
Image decrypt(const Image& cipher, const KeySchedule& schedule);

}  // namespace smdna
