#include "smdna/cipher.hpp"

#include "smdna/dna.hpp"
#include "smdna/error.hpp"

namespace smdna {

namespace {

void require_schedule(const Image& img, const KeySchedule& ks) {
  require_nonempty(img);
  if (ks.size() != pixel_count(img) || ks.dotp2.size() != ks.size() ||
      ks.rsq1.size() != ks.size() || ks.rsq2.size() != ks.size() ||
      ks.rsq3.size() != ks.size() || ks.rsq4.size() != ks.size())
    throw DimensionError("key schedule length does not match the image");
}

std::uint32_t byte_sum(const std::uint8_t* p, std::size_t n) {
  std::uint32_t s = 0;
  for (std::size_t i = 0; i < n; ++i) s = (s + p[i]) & 0xFFu;
  return s;
}

}  // namespace

Image encrypt(const Image& plain, const KeySchedule& ks) {
  require_schedule(plain, ks);
  const std::size_t n = pixel_count(plain);
  const std::uint8_t* pi = plain.data();

  Image out(plain.rows(), plain.cols());
  std::uint8_t* ci = out.data();

  std::uint32_t suffix = byte_sum(pi, n);  // sum of PI_k for k >= i
  std::uint32_t cidt = 0;
  DnaQuad prev = kInitialQuad;

  for (std::size_t i = 0; i < n; ++i) {
    suffix = (suffix - pi[i]) & 0xFFu;
    const auto pidt = static_cast<std::uint8_t>(suffix);
    const std::uint8_t dotp =
        combine_dotp(ks.dotp1[i], ks.dotp2[i], pidt, static_cast<std::uint8_t>(cidt));

    const DnaQuad pad = encode_byte(dotp, ks.rsq1[i]);
    const DnaQuad pix = encode_byte(pi[i], ks.rsq2[i]);
    const DnaQuad mixed = dna_add(pad, pix, ks.rsq3[i]);
    const DnaQuad chained = dna_add(mixed, prev, ks.rsq3[i]);

    ci[i] = decode_quad(chained, ks.rsq4[i]);
    prev = chained;
    cidt = (cidt + ci[i]) & 0xFFu;
  }
  return out;
}

Image decrypt(const Image& cipher, const KeySchedule& ks) {
  require_schedule(cipher, ks);
  const std::size_t n = pixel_count(cipher);
  const std::uint8_t* ci = cipher.data();

  Image out(cipher.rows(), cipher.cols());
  std::uint8_t* pi = out.data();

  std::uint32_t prefix = byte_sum(ci, n);  // trimmed to sum of CI_k, k < i
  std::uint32_t pidt = 0;                  // sum of recovered PI_k for k > i

  for (std::size_t i = n; i-- > 0;) {
    prefix = (prefix - ci[i]) & 0xFFu;
    const std::uint8_t dotp = combine_dotp(ks.dotp1[i], ks.dotp2[i],
                                           static_cast<std::uint8_t>(pidt),
                                           static_cast<std::uint8_t>(prefix));

    const DnaQuad chained = encode_byte(ci[i], ks.rsq4[i]);
    const DnaQuad prev = i > 0 ? encode_byte(ci[i - 1], ks.rsq4[i - 1]) : kInitialQuad;
    const DnaQuad mixed = dna_sub(chained, prev, ks.rsq3[i]);
    const DnaQuad pad = encode_byte(dotp, ks.rsq1[i]);
    const DnaQuad pix = dna_sub(mixed, pad, ks.rsq3[i]);

    pi[i] = decode_quad(pix, ks.rsq2[i]);
    pidt = (pidt + pi[i]) & 0xFFu;
  }
  return out;
}

Image encrypt(const Image& plain, const SecretKey& key) {
  require_nonempty(plain);
  return encrypt(plain, derive_schedule(key, static_cast<std::size_t>(plain.rows()),
                                        static_cast<std::size_t>(plain.cols())));
}

Image decrypt(const Image& cipher, const SecretKey& key) {
  require_nonempty(cipher);
  return decrypt(cipher, derive_schedule(key, static_cast<std::size_t>(cipher.rows()),
                                         static_cast<std::size_t>(cipher.cols())));
}

}  // namespace smdna
