#pragma once

#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <string>

#include "signsynth/errors.hpp"
#include "signsynth/rng.hpp"

namespace signsynth {

// Dotted-key/value configuration. Every key must be registered with a
// default; unknown keys are rejected so typos fail loudly.
class Config {
 public:
  Config() { register_defaults(); }

  double get(const std::string& key) const {
    auto it = values_.find(key);
    if (it == values_.end()) throw config_error("unknown config key '" + key + "'");
    return it->second;
  }

  int get_int(const std::string& key) const { return static_cast<int>(get(key)); }

  void set(const std::string& key, double value) {
    if (!values_.count(key)) throw config_error("unknown config key '" + key + "'");
    values_[key] = value;
  }

  // "key=value" text, one per line; '#' comments allowed.
  void load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open config: " + path);
    std::string line;
    while (std::getline(in, line)) {
      apply_line(line, path);
    }
  }

  void apply_override(const std::string& kv) { apply_line(kv, "--set"); }

  // Canonical serialization: sorted keys, fixed float format.
  std::string serialize() const {
    std::ostringstream out;
    char buf[64];
    for (const auto& [k, v] : values_) {
      std::snprintf(buf, sizeof(buf), "%.17g", v);
      out << k << "=" << buf << "\n";
    }
    return out.str();
  }

  std::uint64_t hash() const { return fnv1a64(serialize()); }

  std::string hash_hex() const {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(hash()));
    return buf;
  }

  const std::map<std::string, double>& values() const { return values_; }

 private:
  void apply_line(const std::string& raw, const std::string& origin) {
    std::string line = raw;
    const auto hashpos = line.find('#');
    if (hashpos != std::string::npos) line = line.substr(0, hashpos);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) return;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw config_error("malformed config line in " + origin + ": " + raw);
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      return (b == std::string::npos) ? std::string() : s.substr(b, e - b + 1);
    };
    const std::string key = trim(line.substr(0, eq));
    const std::string val = trim(line.substr(eq + 1));
    try {
      size_t pos = 0;
      const double v = std::stod(val, &pos);
      if (pos != val.size()) throw std::invalid_argument(val);
      set(key, v);
    } catch (const config_error&) {
      throw;
    } catch (const std::exception&) {
      throw config_error("bad value '" + val + "' for key '" + key + "'");
    }
  }

  void register_defaults() {
    auto d = [&](const char* k, double v) { values_[k] = v; };
    // core
    d("core.crop_context_ratio", 2.0);  // patch-window side as a multiple of the sign's max side
    // loss library
    d("losses.extractor.seed", 7);
    d("losses.extractor.taps", 3);
    d("losses.extractor.base_width", 8);
    d("losses.gp_weight", 10.0);
    // inpainting
    d("inpaint.min_mask_side", 16);
    d("inpaint.fill_value", 0.5);
    d("inpaint.width", 8);
    d("inpaint.adv_weight", 1.0);
    d("inpaint.l1_weight", 1.0);
    d("inpaint.perc_weight", 1.0);
    d("inpaint.style_weight", 1.0);
    d("inpaint.lr", 2e-4);
    d("inpaint.beta1", 0.5);
    d("inpaint.beta2", 0.9);
    d("inpaint.batch", 2);
    // joint embed pipeline (Pasted / Cycled)
    d("embed.delta_max", 16);
    d("embed.width", 8);
    d("embed.adv_weight", 1.0);
    d("embed.bg_l1_weight", 1.0);
    d("embed.perc_weight", 1.0);
    d("embed.style_weight", 1.0);
    d("embed.cycle_l1_weight", 1.0);
    d("embed.cycle_perc_weight", 1.0);
    d("embed.cycle_style_weight", 1.0);
    d("embed.lr", 2e-4);
    d("embed.beta1", 0.5);
    d("embed.beta2", 0.9);
    d("embed.batch", 2);
    // styled pipeline
    d("styled.icon_code_len", 548);
    d("styled.bg_code_len", 64);
    d("styled.base_width", 32);
    d("styled.critic_width", 16);
    d("styled.encoder_width", 8);
    d("styled.fade_steps", 2000);
    d("styled.stage_steps", 2000);
    d("styled.classifier_weight", 1.0);
    d("styled.perc_icon_weight", 1.0);
    d("styled.perc_bg_weight", 0.1);
    d("styled.gp_weight", 10.0);
    d("styled.lr", 1e-3);
    d("styled.beta1", 0.5);
    d("styled.beta2", 0.9);
    d("styled.batch", 4);
    d("styled.classes", 205);
    // placement
    d("placement.map_size", 32);
    d("placement.palette", 19);
    d("placement.z_dim", 8);
    d("placement.width", 16);
    d("placement.kl_weight", 0.05);
    d("placement.recon_weight", 1.0);
    d("placement.affine_l1_weight", 10.0);
    d("placement.adv_weight", 1.0);
    d("placement.lr", 1e-3);
    d("placement.beta1", 0.5);
    d("placement.beta2", 0.9);
    d("placement.batch", 16);
    d("placement.diversity_eps", 1e-3);
    d("placement.reject_budget", 100);
    d("placement.max_count", 10);
    // dataset generation
    d("datagen.replace_delta_max", 0);
    d("datagen.rare_share", 0.4809);  // rare fraction of emitted synthetic signs
    // evaluation
    d("eval.iou_threshold", 0.5);
    d("eval.knn_k", 1);
    d("eval.mask_absent_classes", 0);  // softmax over full head (0) or train-present classes only (1)
    d("eval.feature_dim", 48);
    d("eval.classifier_width", 12);
    d("eval.classifier_lr", 1e-3);
    d("eval.classifier_batch", 8);
    // run
    d("run.seed", 1);
  }

  std::map<std::string, double> values_;
};

}  // namespace signsynth
