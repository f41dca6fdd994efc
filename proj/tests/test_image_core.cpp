/**
 * Copyright 2026 The medaugment-cpp Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#include <cstdio>

#include <jpeglib.h>

#include <fstream>

#include <doctest.h>

#include "medaug/codec.hpp"
#include "medaug/error.hpp"
#include "medaug/resize.hpp"
#include "medaug/rng.hpp"
#include "test_util.hpp"

using namespace medaug;
using medaug::testing::TempDir;

namespace {

// test-side JPEG writer so the decode check does not depend on the codec
// under test
void write_reference_jpeg(const std::filesystem::path& path, const Image& img,
                          int quality) {
  jpeg_compress_struct cinfo;
  jpeg_error_mgr jerr;
  cinfo.err = jpeg_std_error(&jerr);
  jpeg_create_compress(&cinfo);
  std::FILE* fp = std::fopen(path.string().c_str(), "wb");
  REQUIRE(fp != nullptr);
  jpeg_stdio_dest(&cinfo, fp);
  cinfo.image_width = static_cast<JDIMENSION>(img.width);
  cinfo.image_height = static_cast<JDIMENSION>(img.height);
  cinfo.input_components = img.channels;
  cinfo.in_color_space = img.channels == 1 ? JCS_GRAYSCALE : JCS_RGB;
  jpeg_set_defaults(&cinfo);
  jpeg_set_quality(&cinfo, quality, TRUE);
  jpeg_start_compress(&cinfo, TRUE);
  const std::size_t stride =
      static_cast<std::size_t>(img.width) * img.channels;
  while (cinfo.next_scanline < cinfo.image_height) {
    JSAMPROW row =
        const_cast<JSAMPROW>(img.data.data() + cinfo.next_scanline * stride);
    jpeg_write_scanlines(&cinfo, &row, 1);
  }
  jpeg_finish_compress(&cinfo);
  jpeg_destroy_compress(&cinfo);
  std::fclose(fp);
}

}  // namespace

TEST_CASE("decoding a hand-built 2x2 grayscale png") {
  // minimal PNG (8-bit gray, no filter) assembled byte by byte, so this
  // exercises the decoder without going through save_image
  static const unsigned char kPng[] = {
      0x89, 0x50, 0x4E, 0x47, 0x0D, 0x0A, 0x1A, 0x0A, 0x00, 0x00, 0x00, 0x0D,
      0x49, 0x48, 0x44, 0x52, 0x00, 0x00, 0x00, 0x02, 0x00, 0x00, 0x00, 0x02,
      0x08, 0x00, 0x00, 0x00, 0x00, 0x57, 0xDD, 0x52, 0xF8, 0x00, 0x00, 0x00,
      0x0E, 0x49, 0x44, 0x41, 0x54, 0x78, 0xDA, 0x63, 0x60, 0xF8, 0xCF, 0xD0,
      0xE0, 0x00, 0x00, 0x05, 0x42, 0x01, 0xC0, 0x6D, 0x5E, 0x78, 0xA0, 0x00,
      0x00, 0x00, 0x00, 0x49, 0x45, 0x4E, 0x44, 0xAE, 0x42, 0x60, 0x82};
  TempDir tmp;
  std::ofstream(tmp / "gray.png", std::ios::binary)
      .write(reinterpret_cast<const char*>(kPng), sizeof(kPng));
  const Image back = load_image(tmp / "gray.png");
  CHECK(back.width == 2);
  CHECK(back.height == 2);
  CHECK(back.channels == 1);
  CHECK(back.data == std::vector<std::uint8_t>{0, 255, 128, 64});

  // saving and reloading reproduces the same buffer
  save_image(back, tmp / "resaved.png");
  CHECK(load_image(tmp / "resaved.png") == back);
}

TEST_CASE("png round-trip is exact for random gray and color buffers") {
  TempDir tmp;
  Rng rng(41);
  for (int channels : {1, 3}) {
    const Image img = testing::random_image(224, 224, channels, rng);
    const auto path = tmp / ("rt" + std::to_string(channels) + ".png");
    save_image(img, path);
    CHECK(load_image(path) == img);
  }
}

TEST_CASE("png round-trip at saturation and a 1x1 edge case") {
  TempDir tmp;
  Image one(1, 1, 1);
  one.data = {7};
  save_image(one, tmp / "one.png");
  CHECK(load_image(tmp / "one.png").data == std::vector<std::uint8_t>{7});

  Image sat(5, 4, 3, 255);
  save_image(sat, tmp / "sat.png");
  const Image back = load_image(tmp / "sat.png");
  for (auto v : back.data) CHECK(v == 255);
}

TEST_CASE("uniform gray jpeg decodes within +/-2 of its value") {
  TempDir tmp;
  Image img(32, 32, 3, 128);
  write_reference_jpeg(tmp / "gray.jpg", img, 95);
  const Image back = load_image(tmp / "gray.jpg");
  REQUIRE(back.channels == 3);
  REQUIRE(back.width == 32);
  for (auto v : back.data) {
    CHECK(v >= 126);
    CHECK(v <= 130);
  }
}

TEST_CASE("grayscale jpeg keeps one channel") {
  TempDir tmp;
  Image img(16, 16, 1, 99);
  write_reference_jpeg(tmp / "g.jpg", img, 95);
  CHECK(load_image(tmp / "g.jpg").channels == 1);
}

TEST_CASE("codec error paths carry the path and the right category") {
  TempDir tmp;
  CHECK_THROWS_WITH_AS(load_image(tmp / "missing.png"),
                       doctest::Contains("missing.png"), Error);
  try {
    load_image(tmp / "missing.png");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::file_not_found);
  }

  std::ofstream(tmp / "noise.bin") << "this is not an image";
  try {
    load_image(tmp / "noise.bin");
    FAIL("expected UnsupportedFormat");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::unsupported_format);
  }

  // valid signature, truncated stream
  Image img(64, 64, 1, 200);
  save_image(img, tmp / "trunc.png");
  const auto full_size = std::filesystem::file_size(tmp / "trunc.png");
  std::filesystem::resize_file(tmp / "trunc.png", full_size / 2);
  try {
    load_image(tmp / "trunc.png");
    FAIL("expected CorruptStream");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::corrupt_stream);
  }
}

TEST_CASE("saving under an uncreatable parent reports IoFailure") {
  TempDir tmp;
  std::ofstream(tmp / "blocker") << "plain file";
  try {
    save_image(Image(2, 2, 1, 1), tmp / "blocker" / "sub" / "img.png");
    FAIL("expected IoFailure");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::io_failure);
  }
}

TEST_CASE("mask io: round-trip, label preservation, color rejection") {
  TempDir tmp;
  Mask mask(8, 8);
  for (int y = 0; y < 8; ++y)
    for (int x = 0; x < 8; ++x) mask.set(x, y, x < 4 ? 0 : 3);
  save_mask(mask, tmp / "m.png");
  const Mask back = load_mask(tmp / "m.png");
  CHECK(back == mask);
  CHECK(back.labels() == std::set<std::uint8_t>{0, 3});

  Image rgb(4, 4, 3, 10);
  save_image(rgb, tmp / "rgb.png");
  try {
    load_mask(tmp / "rgb.png");
    FAIL("expected UnsupportedFormat");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::unsupported_format);
  }
}

TEST_CASE("resize to the source size is the identity") {
  Rng rng(7);
  const Image img = testing::random_image(224, 224, 3, rng);
  CHECK(resize(img, 224, 224) == img);
}

TEST_CASE("resize samples pixel centers") {
  // rows [0,0] and [255,255]; collapsing the width samples x=0.5 per row
  Image img(2, 2, 1);
  img.data = {0, 0, 255, 255};

  const Image narrow = resize(img, 1, 2);
  CHECK(narrow.data == std::vector<std::uint8_t>{0, 255});

  // collapsing the height blends the rows at y=0.5 for bilinear
  const Image flat = resize(img, 2, 1);
  CHECK(flat.data == std::vector<std::uint8_t>{128, 128});

  // nearest on the mask path resolves the y=0.5 tie toward the lower row
  Mask mask(2, 2);
  mask.data = {0, 0, 255, 255};
  CHECK(resize_mask(mask, 2, 1).data == std::vector<std::uint8_t>{0, 0});
  CHECK(resize_mask(mask, 1, 2).data == std::vector<std::uint8_t>{0, 255});
}

TEST_CASE("constant images stay constant under both interpolation modes") {
  const Image img(4, 4, 1, 100);
  const Image up = resize(img, 224, 224);
  for (auto v : up.data) CHECK(v == 100);

  const Mask mask(4, 4, 100);
  const Mask up_mask = resize_mask(mask, 224, 224);
  for (auto v : up_mask.data) CHECK(v == 100);
}

TEST_CASE("resize is idempotent at the target size") {
  Rng rng(99);
  const Image img = testing::random_image(37, 51, 1, rng);
  const Image once = resize(img, 64, 48);
  CHECK(resize(once, 64, 48) == once);
}

TEST_CASE("mask resize never introduces new labels") {
  Rng rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    Mask mask(rng.uniform_int(2, 40), rng.uniform_int(2, 40));
    for (auto& v : mask.data)
      v = static_cast<std::uint8_t>(rng.uniform_int(0, 3) * 50);
    const auto before = mask.labels();
    const Mask resized =
        resize_mask(mask, rng.uniform_int(1, 50), rng.uniform_int(1, 50));
    for (auto label : resized.labels()) CHECK(before.contains(label));
  }
}

TEST_CASE("zero resize target is rejected") {
  const Image img(4, 4, 1, 1);
  CHECK_THROWS_AS(resize(img, 0, 4), Error);
  CHECK_THROWS_AS(resize_mask(Mask(4, 4), 4, 0), Error);
}
