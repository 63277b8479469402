#include <doctest.h>

#include <random>
#include <vector>

#include "naive.hpp"
#include "smdna/cipher.hpp"
#include "smdna/metrics.hpp"
#include "test_images.hpp"

using namespace smdna;

namespace {

SecretKey reference_key() { return {1.0, 2.0, 20.0, 20.0, 20.0, 20.0, 20.0, 10}; }

Image from_values(int h, int w, const std::vector<int>& v) {
  Image img(h, w);
  for (int i = 0; i < h * w; ++i) img.data()[i] = static_cast<std::uint8_t>(v[static_cast<std::size_t>(i)]);
  return img;
}

std::vector<int> to_values(const Image& img) {
  return {img.data(), img.data() + img.size()};
}

}  // namespace

TEST_SUITE("cipher") {

TEST_CASE("pad combination") {
  static_assert(combine_dotp(0, 0, 0, 0) == 0);
  CHECK(combine_dotp(255, 0, 0, 0) == 255);
  CHECK(combine_dotp(0x0F, 0xF0, 0xFF, 0x00) == 0x00);
  CHECK(combine_dotp(1, 2, 4, 8) == 15);
}

TEST_CASE("reference key golden values") {
  // Traced step by step in Python from the schedule and rule tables.
  CHECK(encrypt(from_values(1, 1, {0}), reference_key())(0, 0) == 126);
  CHECK(to_values(encrypt(from_values(2, 2, {0, 1, 2, 3}), reference_key())) ==
        std::vector<int>{206, 10, 109, 18});
}

TEST_CASE("matches the step-by-step reference cipher") {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 40; ++t) {
    const int h = 1 + t % 7, w = 1 + (t * 3) % 9;
    const Image plain = testing::random_image(h, w, 1000 + static_cast<std::uint64_t>(t));
    const SecretKey key = generate_key(rng);
    const KeySchedule s = derive_schedule(key, static_cast<std::size_t>(h), static_cast<std::size_t>(w));
    REQUIRE(to_values(encrypt(plain, key)) == naive::encrypt(to_values(plain), s));
  }
}

TEST_CASE("every 1x1 image round-trips") {
  std::mt19937_64 rng(43);
  for (int k = 0; k < 4; ++k) {
    const SecretKey key = generate_key(rng);
    for (int v = 0; v < 256; ++v) {
      const Image p = from_values(1, 1, {v});
      REQUIRE(same_pixels(decrypt(encrypt(p, key), key), p));
    }
  }
}

TEST_CASE("random 2x2 images round-trip") {
  std::mt19937_64 rng(47);
  for (int t = 0; t < 2000; ++t) {
    const Image p = testing::random_image(2, 2, rng());
    const SecretKey key = generate_key(rng);
    REQUIRE(same_pixels(decrypt(encrypt(p, key), key), p));
  }
}

TEST_CASE("non-square images round-trip") {
  std::mt19937_64 rng(53);
  for (auto [h, w] : {std::pair{1, 17}, {13, 1}, {7, 31}, {64, 3}}) {
    const Image p = testing::random_image(h, w, rng());
    const SecretKey key = generate_key(rng);
    CHECK(same_pixels(decrypt(encrypt(p, key), key), p));
  }
}

TEST_CASE("encryption is deterministic") {
  const Image p = testing::smooth_portrait(40, 40);
  CHECK(same_pixels(encrypt(p, reference_key()), encrypt(p, reference_key())));
}

TEST_CASE("all-black plain image has no feed-forward term") {
  // With PIDT = 0 the first pixel depends only on the keystream, so
  // changing later plain pixels must change it on any non-black image.
  const Image black = testing::flat(0, 4, 4);
  Image touched = black;
  touched(3, 3) = 7;
  const Image c0 = encrypt(black, reference_key());
  const Image c1 = encrypt(touched, reference_key());
  const KeySchedule s = derive_schedule(reference_key(), 4, 4);
  const std::vector<int> oracle = naive::encrypt(to_values(black), s);
  CHECK(c0(0, 0) == oracle[0]);
  CHECK(c0(0, 0) != c1(0, 0));
}

TEST_CASE("re-encoding a decoded quad is the identity") {
  for (int r = 1; r <= 8; ++r)
    for (int v = 0; v < 256; ++v) {
      const DnaQuad q = encode_byte(static_cast<std::uint8_t>(v), RuleId(r));
      REQUIRE(encode_byte(decode_quad(q, RuleId(r)), RuleId(r)) == q);
    }
}

TEST_CASE("wrong key decryption is noise") {
  const Image plain = testing::smooth_portrait();
  const SecretKey key = reference_key();
  SecretKey wrong = key;
  wrong.x0 += 1e-14;
  const Image recovered = decrypt(encrypt(plain, key), wrong);
  const double psnr = perceptual_metrics(plain, recovered).psnr;
  CHECK(psnr > 4.5);
  CHECK(psnr < 11.0);
}

TEST_CASE("cipher pixel errors propagate forward, not backward") {
  // Measured: a low-bit flip in the first cipher pixel corrupts ~96% of the
  // recovered image; errors before the flipped pixel die out within a few
  // pixels, and a top-bit flip barely propagates at all because bit 7 of a
  // mod-256 sum and of a XOR agree.
  std::mt19937_64 rng(59);
  const Image plain = testing::smooth_portrait();
  for (int t = 0; t < 5; ++t) {
    const SecretKey key = generate_key(rng);
    const Image cipher = encrypt(plain, key);
    auto corrupted = [&](Eigen::Index pos, std::uint8_t flip) {
      Image c = cipher;
      c.data()[pos] ^= flip;
      return diff_metrics(plain, decrypt(c, key)).npcr;
    };
    CHECK(corrupted(0, 0x01) > 94.0);
    CHECK(corrupted(0, 0x01) < 98.0);
    CHECK(corrupted(20100, 0x01) == doctest::Approx(48.0).epsilon(0.03));
    CHECK(corrupted(39999, 0x01) < 1.0);
    CHECK(corrupted(0, 0x80) < 1.0);
  }
}

TEST_CASE("schedule length must match the image") {
  const KeySchedule s = derive_schedule(reference_key(), 2, 2);
  CHECK_THROWS_AS(encrypt(testing::flat(0, 3, 3), s), DimensionError);
  CHECK_THROWS_AS(decrypt(testing::flat(0, 1, 3), s), DimensionError);
  CHECK_THROWS_AS(encrypt(Image(0, 0), reference_key()), DimensionError);
}

}
