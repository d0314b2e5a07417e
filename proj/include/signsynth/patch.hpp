#pragma once

#include <optional>
#include <string>

#include "signsynth/image.hpp"
#include "signsynth/manifest.hpp"

namespace signsynth {

constexpr int kPatchSize = 128;
constexpr int kMaxRemovalSide = 64;

// 128x128 training/inference unit cropped around a sign location. The
// removal mask, when present, is a single centered axis-aligned rectangle
// with each side <= 64.
struct Patch {
  Image pixels;                 // 128x128x3
  std::optional<BBox> removal;  // centered rect in patch coordinates
  std::string origin_frame;
  BBox origin_box;  // window the patch was cropped from, frame coordinates

  void validate() const {
    if (pixels.height() != kPatchSize || pixels.width() != kPatchSize || pixels.channels() != 3)
      throw shape_error("patch must be 128x128x3");
    if (removal) {
      const BBox& r = *removal;
      if (r.w < 1 || r.h < 1 || r.w > kMaxRemovalSide || r.h > kMaxRemovalSide)
        throw geometry_error("removal rect sides must be in [1,64]");
      if (r.x != (kPatchSize - r.w) / 2 || r.y != (kPatchSize - r.h) / 2)
        throw geometry_error("removal rect must be centered");
    }
  }
};

// Centered rect of the given side lengths in patch coordinates.
inline BBox centered_rect(int w, int h) {
  return BBox{(kPatchSize - w) / 2, (kPatchSize - h) / 2, w, h};
}

enum class EdgePolicy { kReject, kShiftInside };

// Cuts the 128x128 window centered on center_box out of the frame. Near the
// border the window is translated minimally to fit (or rejected, by policy);
// frames smaller than the window are always rejected.
inline Patch crop_patch(const Image& frame, const std::string& frame_id, const BBox& center_box,
                        EdgePolicy policy = EdgePolicy::kShiftInside, int patch_size = kPatchSize) {
  if (frame.channels() != 3) throw shape_error("crop_patch expects an RGB frame");
  if (frame.width() < patch_size || frame.height() < patch_size)
    throw geometry_error("frame smaller than patch window");
  const int cx = center_box.x + center_box.w / 2;
  const int cy = center_box.y + center_box.h / 2;
  int x0 = cx - patch_size / 2;
  int y0 = cy - patch_size / 2;
  if (policy == EdgePolicy::kReject) {
    if (x0 < 0 || y0 < 0 || x0 + patch_size > frame.width() || y0 + patch_size > frame.height())
      throw geometry_error("patch window exceeds frame");
  } else {
    x0 = std::min(std::max(0, x0), frame.width() - patch_size);
    y0 = std::min(std::max(0, y0), frame.height() - patch_size);
  }
  Patch p;
  p.origin_frame = frame_id;
  p.origin_box = BBox{x0, y0, patch_size, patch_size};
  p.pixels = frame.crop(p.origin_box);
  return p;
}

// Alpha blend of the icon, resized to target_rect, over the background:
// out = alpha * icon + (1 - alpha) * background inside the rect; pixels
// outside the rect are bit-identical to the background.
inline Patch composite(const SignIcon& icon, const Patch& background, const BBox& target_rect) {
  if (!target_rect.valid()) throw geometry_error("degenerate composite rect");
  target_rect.require_inside(background.pixels.width(), background.pixels.height());
  const Image resized = resize_bilinear(icon.pixels, target_rect.h, target_rect.w);
  Patch out = background;
  for (int y = 0; y < target_rect.h; ++y)
    for (int x = 0; x < target_rect.w; ++x) {
      const float a = resized.at(y, x, 3);
      for (int c = 0; c < 3; ++c) {
        const float bg = background.pixels.at(target_rect.y + y, target_rect.x + x, c);
        out.pixels.at(target_rect.y + y, target_rect.x + x, c) = a * resized.at(y, x, c) + (1.f - a) * bg;
      }
    }
  return out;
}

// out = generated where mask=1, original where mask=0; bit-exact selection.
inline Patch restore_outside_mask(const Patch& original, const Patch& generated, const Image& mask) {
  if (!original.pixels.same_shape(generated.pixels)) throw shape_error("patch shape mismatch");
  if (mask.height() != original.pixels.height() || mask.width() != original.pixels.width() || mask.channels() != 1)
    throw shape_error("mask shape mismatch");
  Patch out = original;
  for (int y = 0; y < mask.height(); ++y)
    for (int x = 0; x < mask.width(); ++x)
      if (mask.at(y, x, 0) != 0.f)
        for (int c = 0; c < 3; ++c) out.pixels.at(y, x, c) = generated.pixels.at(y, x, c);
  return out;
}

inline Image rect_mask(const BBox& rect, int h = kPatchSize, int w = kPatchSize) {
  Image m(h, w, 1, 0.f);
  for (int y = rect.y; y < rect.y2(); ++y)
    for (int x = rect.x; x < rect.x2(); ++x) m.at(y, x, 0) = 1.f;
  return m;
}

// Aspect-preserving fit of (w,h) so that max side equals max_side.
inline std::pair<int, int> aspect_fit(int w, int h, int max_side) {
  if (w <= 0 || h <= 0 || max_side <= 0) throw geometry_error("aspect_fit on degenerate size");
  int ow, oh;
  if (w >= h) {
    ow = max_side;
    oh = std::max(1, static_cast<int>(std::lround(static_cast<double>(h) * max_side / w)));
  } else {
    oh = max_side;
    ow = std::max(1, static_cast<int>(std::lround(static_cast<double>(w) * max_side / h)));
  }
  return {ow, oh};
}

}  // namespace signsynth
