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
#include "medaug/codec.hpp"

#include <jpeglib.h>
#include <png.h>

#include <csetjmp>
#include <cstdio>
#include <cstring>
#include <memory>
#include <string>
#include <vector>

#include "medaug/error.hpp"

namespace medaug {
namespace {

namespace fs = std::filesystem;

struct FileCloser {
  void operator()(std::FILE* f) const {
    if (f) std::fclose(f);
  }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

FilePtr open_for_read(const fs::path& path) {
  std::error_code ec;
  if (!fs::exists(path, ec))
    throw Error(Errc::file_not_found, path.string());
  FilePtr fp(std::fopen(path.string().c_str(), "rb"));
  if (!fp) throw Error(Errc::io_failure, "cannot open " + path.string());
  return fp;
}

enum class FileFormat { png, jpeg };

FileFormat sniff_format(std::FILE* fp, const fs::path& path) {
  unsigned char magic[8] = {};
  const std::size_t n = std::fread(magic, 1, sizeof(magic), fp);
  std::rewind(fp);
  if (n >= 8 && png_sig_cmp(magic, 0, 8) == 0) return FileFormat::png;
  if (n >= 2 && magic[0] == 0xFF && magic[1] == 0xD8) return FileFormat::jpeg;
  throw Error(Errc::unsupported_format,
              path.string() + " is neither PNG nor JPEG");
}

// libpng and libjpeg report errors via longjmp; each reader keeps its
// resources in plain locals and converts the jump into an exception.

[[noreturn]] void png_error_to_jmp(png_structp png, png_const_charp msg) {
  *static_cast<std::string*>(png_get_error_ptr(png)) = msg ? msg : "png error";
  png_longjmp(png, 1);
}

void png_warning_sink(png_structp, png_const_charp) {}

Image read_png(std::FILE* fp, const fs::path& path, bool mask_mode) {
  std::string errmsg;
  png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, &errmsg,
                                           png_error_to_jmp, png_warning_sink);
  if (!png) throw Error(Errc::io_failure, "png_create_read_struct failed");
  png_infop info = png_create_info_struct(png);
  if (!info) {
    png_destroy_read_struct(&png, nullptr, nullptr);
    throw Error(Errc::io_failure, "png_create_info_struct failed");
  }

  Image out;
  std::vector<png_bytep> row_ptrs;
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_read_struct(&png, &info, nullptr);
    throw Error(Errc::corrupt_stream, path.string() + ": " + errmsg);
  }

  png_init_io(png, fp);
  png_read_info(png, info);

  const png_byte color_type = png_get_color_type(png, info);
  const png_byte bit_depth = png_get_bit_depth(png, info);

  if (mask_mode && (color_type == PNG_COLOR_TYPE_PALETTE ||
                    (color_type & PNG_COLOR_MASK_COLOR) != 0)) {
    png_destroy_read_struct(&png, &info, nullptr);
    throw Error(Errc::unsupported_format,
                path.string() + ": mask files must be single-channel PNG");
  }

  if (color_type == PNG_COLOR_TYPE_PALETTE) png_set_palette_to_rgb(png);
  if (color_type == PNG_COLOR_TYPE_GRAY && bit_depth < 8)
    png_set_expand_gray_1_2_4_to_8(png);
  if (png_get_valid(png, info, PNG_INFO_tRNS)) png_set_tRNS_to_alpha(png);
  if (bit_depth == 16) png_set_strip_16(png);
  if ((color_type & PNG_COLOR_MASK_ALPHA) != 0 ||
      png_get_valid(png, info, PNG_INFO_tRNS))
    png_set_strip_alpha(png);
  png_read_update_info(png, info);

  out.width = static_cast<int>(png_get_image_width(png, info));
  out.height = static_cast<int>(png_get_image_height(png, info));
  out.channels = static_cast<int>(png_get_channels(png, info));
  if (out.channels != 1 && out.channels != 3) {
    png_destroy_read_struct(&png, &info, nullptr);
    throw Error(Errc::unsupported_format,
                path.string() + ": decoded channel count " +
                    std::to_string(out.channels) + " not in {1,3}");
  }

  out.data.resize(static_cast<std::size_t>(out.width) * out.height *
                  out.channels);
  row_ptrs.resize(static_cast<std::size_t>(out.height));
  const std::size_t stride =
      static_cast<std::size_t>(out.width) * out.channels;
  for (int y = 0; y < out.height; ++y)
    row_ptrs[static_cast<std::size_t>(y)] = out.data.data() + y * stride;
  png_read_image(png, row_ptrs.data());
  png_read_end(png, nullptr);
  png_destroy_read_struct(&png, &info, nullptr);
  return out;
}

struct JpegErrorMgr {
  jpeg_error_mgr pub;
  std::jmp_buf jmp;
  char message[JMSG_LENGTH_MAX] = {};
};

void jpeg_error_to_jmp(j_common_ptr cinfo) {
  auto* mgr = reinterpret_cast<JpegErrorMgr*>(cinfo->err);
  (*cinfo->err->format_message)(cinfo, mgr->message);
  std::longjmp(mgr->jmp, 1);
}

Image read_jpeg(std::FILE* fp, const fs::path& path) {
  jpeg_decompress_struct cinfo;
  JpegErrorMgr err;
  cinfo.err = jpeg_std_error(&err.pub);
  err.pub.error_exit = jpeg_error_to_jmp;

  Image out;
  if (setjmp(err.jmp)) {
    jpeg_destroy_decompress(&cinfo);
    throw Error(Errc::corrupt_stream,
                path.string() + ": " + std::string(err.message));
  }

  jpeg_create_decompress(&cinfo);
  jpeg_stdio_src(&cinfo, fp);
  jpeg_read_header(&cinfo, TRUE);
  cinfo.out_color_space =
      cinfo.num_components == 1 ? JCS_GRAYSCALE : JCS_RGB;
  jpeg_start_decompress(&cinfo);

  out.width = static_cast<int>(cinfo.output_width);
  out.height = static_cast<int>(cinfo.output_height);
  out.channels = static_cast<int>(cinfo.output_components);
  out.data.resize(static_cast<std::size_t>(out.width) * out.height *
                  out.channels);
  const std::size_t stride =
      static_cast<std::size_t>(out.width) * out.channels;
  while (cinfo.output_scanline < cinfo.output_height) {
    JSAMPROW row = out.data.data() + cinfo.output_scanline * stride;
    jpeg_read_scanlines(&cinfo, &row, 1);
  }
  jpeg_finish_decompress(&cinfo);
  jpeg_destroy_decompress(&cinfo);
  return out;
}

void write_png(const std::uint8_t* data, int width, int height, int channels,
               const fs::path& path) {
  std::error_code ec;
  if (path.has_parent_path())
    fs::create_directories(path.parent_path(), ec);

  FilePtr fp(std::fopen(path.string().c_str(), "wb"));
  if (!fp)
    throw Error(Errc::io_failure, "cannot write " + path.string());

  std::string errmsg;
  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, &errmsg,
                                            png_error_to_jmp, png_warning_sink);
  if (!png) throw Error(Errc::io_failure, "png_create_write_struct failed");
  png_infop info = png_create_info_struct(png);
  if (!info) {
    png_destroy_write_struct(&png, nullptr);
    throw Error(Errc::io_failure, "png_create_info_struct failed");
  }

  std::vector<png_bytep> row_ptrs(static_cast<std::size_t>(height));
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    throw Error(Errc::io_failure, path.string() + ": " + errmsg);
  }

  png_init_io(png, fp.get());
  png_set_IHDR(png, info, static_cast<png_uint_32>(width),
               static_cast<png_uint_32>(height), 8,
               channels == 1 ? PNG_COLOR_TYPE_GRAY : PNG_COLOR_TYPE_RGB,
               PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT,
               PNG_FILTER_TYPE_DEFAULT);
  const std::size_t stride = static_cast<std::size_t>(width) * channels;
  for (int y = 0; y < height; ++y)
    row_ptrs[static_cast<std::size_t>(y)] =
        const_cast<png_bytep>(data + y * stride);
  png_set_rows(png, info, row_ptrs.data());
  png_write_png(png, info, PNG_TRANSFORM_IDENTITY, nullptr);
  png_destroy_write_struct(&png, &info);
}

}  // namespace

Image load_image(const fs::path& path) {
  FilePtr fp = open_for_read(path);
  const FileFormat format = sniff_format(fp.get(), path);
  Image img = format == FileFormat::png ? read_png(fp.get(), path, false)
                                        : read_jpeg(fp.get(), path);
  if (!img.valid())
    throw Error(Errc::corrupt_stream, path.string() + ": invalid dimensions");
  return img;
}

void save_image(const Image& image, const fs::path& path) {
  if (!image.valid())
    throw Error(Errc::io_failure, "refusing to save invalid image");
  write_png(image.data.data(), image.width, image.height, image.channels,
            path);
}

Mask load_mask(const fs::path& path) {
  FilePtr fp = open_for_read(path);
  if (sniff_format(fp.get(), path) != FileFormat::png)
    throw Error(Errc::unsupported_format,
                path.string() + ": mask files must be PNG");
  Image img = read_png(fp.get(), path, true);
  Mask mask;
  mask.width = img.width;
  mask.height = img.height;
  mask.data = std::move(img.data);
  return mask;
}

void save_mask(const Mask& mask, const fs::path& path) {
  if (!mask.valid())
    throw Error(Errc::io_failure, "refusing to save invalid mask");
  write_png(mask.data.data(), mask.width, mask.height, 1, path);
}

}  // namespace medaug
