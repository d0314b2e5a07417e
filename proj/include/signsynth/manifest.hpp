#pragma once

#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "signsynth/errors.hpp"
#include "signsynth/geometry.hpp"
#include "signsynth/image.hpp"

namespace signsynth {

enum class Provenance { kReal, kSynthetic };

inline const char* to_string(Provenance p) { return p == Provenance::kReal ? "real" : "synthetic"; }

inline Provenance provenance_from_string(const std::string& s) {
  if (s == "real") return Provenance::kReal;
  if (s == "synthetic") return Provenance::kSynthetic;
  throw io_error("unknown provenance token '" + s + "'");
}

struct Annotation {
  std::string frame_id;
  BBox bbox;
  int class_id = 0;
  Provenance provenance = Provenance::kReal;
};

// Class-labeled pictogram with alpha mask; the object every pipeline embeds.
struct SignIcon {
  int class_id = 0;
  Image pixels;  // HxWx4, RGB + alpha

  int height() const { return pixels.height(); }
  int width() const { return pixels.width(); }

  void validate(int taxonomy_total) const {
    if (class_id < 0 || class_id >= taxonomy_total)
      throw taxonomy_error("icon class id " + std::to_string(class_id) + " outside taxonomy");
    if (pixels.channels() != 4) throw shape_error("icon must be RGBA");
    if (height() < 8 || width() < 8) throw shape_error("icon smaller than 8px");
    for (size_t i = 3; i < pixels.size(); i += 4) {
      const float a = pixels.data()[i];
      if (a < 0.f || a > 1.f) throw shape_error("icon alpha outside [0,1]");
    }
  }
};

// Split of the class set into classes present in train and test-only (rare)
// classes.
struct ClassTaxonomy {
  int total = 0;
  std::set<int> train_present;
  std::set<int> rare;

  void validate() const {
    if (total < 1) throw taxonomy_error("taxonomy total must be >= 1");
    if (static_cast<int>(train_present.size() + rare.size()) != total)
      throw taxonomy_error("train_present and rare must partition all classes");
    for (int id : train_present)
      if (rare.count(id)) throw taxonomy_error("class " + std::to_string(id) + " in both groups");
    for (int id : train_present) check_id(id);
    for (int id : rare) check_id(id);
  }

  void check_id(int id) const {
    if (id < 0 || id >= total)
      throw taxonomy_error("class id " + std::to_string(id) + " outside [0," + std::to_string(total) + ")");
  }

  bool is_rare(int id) const {
    check_id(id);
    return rare.count(id) > 0;
  }
};

// Taxonomy file: three lines — "total N", "train_present: id...", "rare: id...".
inline ClassTaxonomy load_taxonomy(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open taxonomy: " + path);
  ClassTaxonomy tax;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string key;
    ls >> key;
    if (key == "total") {
      ls >> tax.total;
    } else if (key == "train_present:") {
      int id;
      while (ls >> id) tax.train_present.insert(id);
    } else if (key == "rare:") {
      int id;
      while (ls >> id) tax.rare.insert(id);
    } else if (!key.empty()) {
      throw io_error("unknown taxonomy line '" + line + "'");
    }
  }
  tax.validate();
  return tax;
}

inline void save_taxonomy(const ClassTaxonomy& tax, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw io_error("cannot open for write: " + path);
  out << "total " << tax.total << "\n";
  out << "train_present:";
  for (int id : tax.train_present) out << " " << id;
  out << "\nrare:";
  for (int id : tax.rare) out << " " << id;
  out << "\n";
}

struct FrameRecord {
  std::string frame_id;
  std::string image_path;  // relative to the manifest's directory
  std::vector<Annotation> annotations;
};

// Frame records with boxes, class ids and real/synthetic provenance.
// Text format, one record per line:
//   frame_id image_path [x y w h class_id provenance]...
// preceded by a single "# split=<name>" header line.
struct DatasetManifest {
  std::string split;
  std::vector<FrameRecord> frames;
  std::string base_dir;  // directory the image paths are relative to

  const FrameRecord* find(const std::string& frame_id) const {
    for (const auto& f : frames)
      if (f.frame_id == frame_id) return &f;
    return nullptr;
  }

  size_t annotation_count() const {
    size_t n = 0;
    for (const auto& f : frames) n += f.annotations.size();
    return n;
  }

  void validate() const {
    std::set<std::string> seen;
    for (const auto& f : frames) {
      if (!seen.insert(f.frame_id).second)
        throw io_error("duplicate frame_id '" + f.frame_id + "' in manifest");
      for (const auto& a : f.annotations) {
        if (a.frame_id != f.frame_id) throw io_error("annotation frame_id mismatch");
        if (!a.bbox.valid()) throw geometry_error("degenerate box in frame " + f.frame_id);
      }
    }
  }
};

inline DatasetManifest load_manifest(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open manifest: " + path);
  DatasetManifest m;
  const auto slash = path.find_last_of('/');
  m.base_dir = (slash == std::string::npos) ? "." : path.substr(0, slash);
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (first && line.rfind("# split=", 0) == 0) {
      m.split = line.substr(8);
      first = false;
      continue;
    }
    first = false;
    if (line[0] == '#') continue;
    std::istringstream ls(line);
    FrameRecord rec;
    ls >> rec.frame_id >> rec.image_path;
    if (rec.frame_id.empty() || rec.image_path.empty())
      throw io_error("malformed manifest line: " + line);
    Annotation a;
    std::string prov;
    while (ls >> a.bbox.x >> a.bbox.y >> a.bbox.w >> a.bbox.h >> a.class_id >> prov) {
      a.frame_id = rec.frame_id;
      a.provenance = provenance_from_string(prov);
      rec.annotations.push_back(a);
    }
    m.frames.push_back(std::move(rec));
  }
  if (m.split.empty()) throw io_error("manifest missing '# split=' header: " + path);
  m.validate();
  return m;
}

inline void save_manifest(const DatasetManifest& m, const std::string& path) {
  m.validate();
  std::ofstream out(path);
  if (!out) throw io_error("cannot open for write: " + path);
  out << "# split=" << m.split << "\n";
  for (const auto& f : m.frames) {
    out << f.frame_id << " " << f.image_path;
    for (const auto& a : f.annotations)
      out << " " << a.bbox.x << " " << a.bbox.y << " " << a.bbox.w << " " << a.bbox.h
          << " " << a.class_id << " " << to_string(a.provenance);
    out << "\n";
  }
  if (!out) throw io_error("write failed: " + path);
}

inline Image load_frame_image(const DatasetManifest& m, const FrameRecord& f) {
  return read_image(m.base_dir + "/" + f.image_path);
}

// --- taxonomy validation against manifests ---

struct ValidationReport {
  bool pass = true;
  std::vector<int> train_counts;  // per class
  std::vector<int> test_counts;
  std::vector<std::string> violations;
  int train_images = 0, test_images = 0;
  long long train_signs = 0, test_signs = 0;
};

inline ValidationReport validate_taxonomy(const DatasetManifest& train, const DatasetManifest& test,
                                          const ClassTaxonomy& tax) {
  tax.validate();
  ValidationReport rep;
  rep.train_counts.assign(tax.total, 0);
  rep.test_counts.assign(tax.total, 0);
  rep.train_images = static_cast<int>(train.frames.size());
  rep.test_images = static_cast<int>(test.frames.size());
  auto count = [&](const DatasetManifest& m, std::vector<int>& counts, long long& signs) {
    for (const auto& f : m.frames)
      for (const auto& a : f.annotations) {
        if (a.class_id < 0 || a.class_id >= tax.total)
          throw taxonomy_error("unknown class id " + std::to_string(a.class_id) + " in frame " + f.frame_id);
        ++counts[a.class_id];
        ++signs;
      }
  };
  count(train, rep.train_counts, rep.train_signs);
  count(test, rep.test_counts, rep.test_signs);
  for (int id : tax.rare) {
    if (rep.train_counts[id] > 0) {
      rep.pass = false;
      rep.violations.push_back("rare class " + std::to_string(id) + " has " +
                               std::to_string(rep.train_counts[id]) + " train instances");
    }
  }
  return rep;
}

// Icon directory layout: one RGBA image per class id, filename the
// zero-padded class id (e.g. 007.pam).
class IconPool {
 public:
  IconPool() = default;

  static IconPool load(const std::string& dir, const ClassTaxonomy& tax) {
    IconPool pool;
    pool.total_ = tax.total;
    for (int id = 0; id < tax.total; ++id) {
      const std::string path = dir + "/" + padded(id) + ".pam";
      std::ifstream probe(path);
      if (!probe) continue;
      SignIcon icon;
      icon.class_id = id;
      icon.pixels = read_image(path);
      icon.validate(tax.total);
      pool.icons_[id] = std::move(icon);
    }
    return pool;
  }

  static void save_icon(const SignIcon& icon, const std::string& dir) {
    write_image(icon.pixels, dir + "/" + padded(icon.class_id) + ".pam");
  }

  void add(SignIcon icon) {
    if (total_ <= icon.class_id) total_ = icon.class_id + 1;
    icons_[icon.class_id] = std::move(icon);
  }

  bool has(int class_id) const { return icons_.count(class_id) > 0; }

  const SignIcon& get(int class_id) const {
    auto it = icons_.find(class_id);
    if (it == icons_.end())
      throw taxonomy_error("no icon for class " + std::to_string(class_id));
    return it->second;
  }

  std::vector<int> class_ids() const {
    std::vector<int> ids;
    for (const auto& [id, _] : icons_) ids.push_back(id);
    return ids;
  }

  size_t size() const { return icons_.size(); }

  static std::string padded(int id) {
    std::string s = std::to_string(id);
    while (s.size() < 3) s = "0" + s;
    return s;
  }

 private:
  int total_ = 0;
  std::map<int, SignIcon> icons_;
};

}  // namespace signsynth
