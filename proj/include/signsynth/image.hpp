#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "signsynth/errors.hpp"
#include "signsynth/geometry.hpp"

namespace signsynth {

// Planar-free float image, HWC layout, values in [0,1]. Channels: 1 (label
// or mask raster), 3 (RGB) or 4 (RGBA). 8-bit only at the file boundary.
class Image {
 public:
  Image() = default;
  Image(int h, int w, int c, float fill = 0.f) : h_(h), w_(w), c_(c), data_(static_cast<size_t>(h) * w * c, fill) {}

  int height() const { return h_; }
  int width() const { return w_; }
  int channels() const { return c_; }
  bool empty() const { return data_.empty(); }

  float& at(int y, int x, int ch) { return data_[(static_cast<size_t>(y) * w_ + x) * c_ + ch]; }
  float at(int y, int x, int ch) const { return data_[(static_cast<size_t>(y) * w_ + x) * c_ + ch]; }

  float* data() { return data_.data(); }
  const float* data() const { return data_.data(); }
  size_t size() const { return data_.size(); }

  bool same_shape(const Image& o) const { return h_ == o.h_ && w_ == o.w_ && c_ == o.c_; }

  bool operator==(const Image& o) const { return same_shape(o) && data_ == o.data_; }

  Image crop(const BBox& box) const {
    box.require_inside(w_, h_);
    Image out(box.h, box.w, c_);
    for (int y = 0; y < box.h; ++y)
      for (int x = 0; x < box.w; ++x)
        for (int ch = 0; ch < c_; ++ch)
          out.at(y, x, ch) = at(box.y + y, box.x + x, ch);
    return out;
  }

  void paste(const Image& src, int x0, int y0) {
    BBox{x0, y0, src.width(), src.height()}.require_inside(w_, h_);
    if (src.channels() != c_) throw shape_error("paste channel mismatch");
    for (int y = 0; y < src.height(); ++y)
      for (int x = 0; x < src.width(); ++x)
        for (int ch = 0; ch < c_; ++ch)
          at(y0 + y, x0 + x, ch) = src.at(y, x, ch);
  }

  // First three channels of an RGBA image.
  Image rgb() const {
    if (c_ == 3) return *this;
    if (c_ != 4) throw shape_error("rgb() needs 3 or 4 channels");
    Image out(h_, w_, 3);
    for (int y = 0; y < h_; ++y)
      for (int x = 0; x < w_; ++x)
        for (int ch = 0; ch < 3; ++ch) out.at(y, x, ch) = at(y, x, ch);
    return out;
  }

  Image alpha() const {
    if (c_ != 4) throw shape_error("alpha() needs 4 channels");
    Image out(h_, w_, 1);
    for (int y = 0; y < h_; ++y)
      for (int x = 0; x < w_; ++x) out.at(y, x, 0) = at(y, x, 3);
    return out;
  }

 private:
  int h_ = 0, w_ = 0, c_ = 0;
  std::vector<float> data_;
};

inline std::uint8_t to_u8(float v) {
  const float c = std::min(1.f, std::max(0.f, v));
  return static_cast<std::uint8_t>(std::lround(c * 255.f));
}

inline float from_u8(std::uint8_t v) { return static_cast<float>(v) / 255.f; }

// --- netpbm I/O: PGM (P5) for 1 channel, PPM (P6) for 3, PAM (P7) for 4 ---

namespace detail {

inline int pnm_read_token(std::istream& in) {
  // skips whitespace and '#' comments
  while (true) {
    int ch = in.peek();
    if (ch == '#') {
      std::string line;
      std::getline(in, line);
    } else if (std::isspace(ch)) {
      in.get();
    } else {
      break;
    }
  }
  int v = -1;
  in >> v;
  return v;
}

}  // namespace detail

inline void write_image(const Image& img, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw io_error("cannot open for write: " + path);
  const int h = img.height(), w = img.width(), c = img.channels();
  if (c == 1) {
    out << "P5\n" << w << " " << h << "\n255\n";
  } else if (c == 3) {
    out << "P6\n" << w << " " << h << "\n255\n";
  } else if (c == 4) {
    out << "P7\nWIDTH " << w << "\nHEIGHT " << h << "\nDEPTH 4\nMAXVAL 255\nTUPLTYPE RGB_ALPHA\nENDHDR\n";
  } else {
    throw shape_error("write_image: unsupported channel count " + std::to_string(c));
  }
  std::vector<std::uint8_t> row(static_cast<size_t>(w) * c);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x)
      for (int ch = 0; ch < c; ++ch) row[static_cast<size_t>(x) * c + ch] = to_u8(img.at(y, x, ch));
    out.write(reinterpret_cast<const char*>(row.data()), static_cast<std::streamsize>(row.size()));
  }
  if (!out) throw io_error("write failed: " + path);
}

inline Image read_image(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw io_error("cannot open: " + path);
  std::string magic;
  in >> magic;
  int w = 0, h = 0, c = 0, maxval = 0;
  if (magic == "P5" || magic == "P6") {
    c = (magic == "P5") ? 1 : 3;
    w = detail::pnm_read_token(in);
    h = detail::pnm_read_token(in);
    maxval = detail::pnm_read_token(in);
    in.get();  // single whitespace after header
  } else if (magic == "P7") {
    std::string key;
    while (in >> key && key != "ENDHDR") {
      if (key == "WIDTH") in >> w;
      else if (key == "HEIGHT") in >> h;
      else if (key == "DEPTH") in >> c;
      else if (key == "MAXVAL") in >> maxval;
      else if (key == "TUPLTYPE") { std::string t; in >> t; }
    }
    in.get();
  } else {
    throw io_error("unsupported image magic '" + magic + "' in " + path);
  }
  if (w <= 0 || h <= 0 || c <= 0 || maxval != 255)
    throw io_error("bad raster header in " + path);
  Image img(h, w, c);
  std::vector<std::uint8_t> row(static_cast<size_t>(w) * c);
  for (int y = 0; y < h; ++y) {
    in.read(reinterpret_cast<char*>(row.data()), static_cast<std::streamsize>(row.size()));
    if (!in) throw io_error("truncated raster: " + path);
    for (int x = 0; x < w; ++x)
      for (int ch = 0; ch < c; ++ch) img.at(y, x, ch) = from_u8(row[static_cast<size_t>(x) * c + ch]);
  }
  return img;
}

// Label rasters round-trip through PGM as raw small integers, not [0,1].
inline Image read_label_raster(const std::string& path) {
  Image img = read_image(path);
  if (img.channels() != 1) throw io_error("label raster must be single channel: " + path);
  for (size_t i = 0; i < img.size(); ++i) img.data()[i] = std::round(img.data()[i] * 255.f);
  return img;
}

// --- resampling ---

// Bilinear, all channels jointly (RGB and alpha together for icons).
inline Image resize_bilinear(const Image& src, int out_h, int out_w) {
  if (out_h <= 0 || out_w <= 0) throw geometry_error("resize to degenerate size");
  Image out(out_h, out_w, src.channels());
  const float sy = static_cast<float>(src.height()) / out_h;
  const float sx = static_cast<float>(src.width()) / out_w;
  for (int y = 0; y < out_h; ++y) {
    const float fy = (y + 0.5f) * sy - 0.5f;
    const int y0 = std::max(0, static_cast<int>(std::floor(fy)));
    const int y1 = std::min(src.height() - 1, y0 + 1);
    const float wy = std::min(1.f, std::max(0.f, fy - y0));
    for (int x = 0; x < out_w; ++x) {
      const float fx = (x + 0.5f) * sx - 0.5f;
      const int x0 = std::max(0, static_cast<int>(std::floor(fx)));
      const int x1 = std::min(src.width() - 1, x0 + 1);
      const float wx = std::min(1.f, std::max(0.f, fx - x0));
      for (int c = 0; c < src.channels(); ++c) {
        const float top = src.at(y0, x0, c) * (1 - wx) + src.at(y0, x1, c) * wx;
        const float bot = src.at(y1, x0, c) * (1 - wx) + src.at(y1, x1, c) * wx;
        out.at(y, x, c) = top * (1 - wy) + bot * wy;
      }
    }
  }
  return out;
}

// Area interpolation for downscaling (used for real-sign crops fed to the
// progressive critics).
inline Image resize_area(const Image& src, int out_h, int out_w) {
  if (out_h <= 0 || out_w <= 0) throw geometry_error("resize to degenerate size");
  Image out(out_h, out_w, src.channels());
  const double sy = static_cast<double>(src.height()) / out_h;
  const double sx = static_cast<double>(src.width()) / out_w;
  for (int y = 0; y < out_h; ++y) {
    const double fy0 = y * sy, fy1 = (y + 1) * sy;
    for (int x = 0; x < out_w; ++x) {
      const double fx0 = x * sx, fx1 = (x + 1) * sx;
      for (int c = 0; c < src.channels(); ++c) {
        double acc = 0.0, area = 0.0;
        for (int yy = static_cast<int>(fy0); yy < static_cast<int>(std::ceil(fy1)); ++yy) {
          const double hy = std::min<double>(fy1, yy + 1) - std::max<double>(fy0, yy);
          if (hy <= 0) continue;
          for (int xx = static_cast<int>(fx0); xx < static_cast<int>(std::ceil(fx1)); ++xx) {
            const double hx = std::min<double>(fx1, xx + 1) - std::max<double>(fx0, xx);
            if (hx <= 0) continue;
            acc += hy * hx * src.at(std::min(yy, src.height() - 1), std::min(xx, src.width() - 1), c);
            area += hy * hx;
          }
        }
        out.at(y, x, c) = static_cast<float>(acc / area);
      }
    }
  }
  return out;
}

inline Image resize_nearest(const Image& src, int out_h, int out_w) {
  if (out_h <= 0 || out_w <= 0) throw geometry_error("resize to degenerate size");
  Image out(out_h, out_w, src.channels());
  for (int y = 0; y < out_h; ++y) {
    const int yy = std::min(src.height() - 1, static_cast<int>(static_cast<long long>(y) * src.height() / out_h));
    for (int x = 0; x < out_w; ++x) {
      const int xx = std::min(src.width() - 1, static_cast<int>(static_cast<long long>(x) * src.width() / out_w));
      for (int c = 0; c < src.channels(); ++c) out.at(y, x, c) = src.at(yy, xx, c);
    }
  }
  return out;
}

}  // namespace signsynth
