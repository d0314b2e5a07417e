#pragma once

#include <stdexcept>
#include <string>

namespace signsynth {

struct io_error : std::runtime_error {
  explicit io_error(const std::string& msg) : std::runtime_error(msg) {}
};

struct shape_error : std::invalid_argument {
  explicit shape_error(const std::string& msg) : std::invalid_argument(msg) {}
};

struct geometry_error : std::invalid_argument {
  explicit geometry_error(const std::string& msg) : std::invalid_argument(msg) {}
};

struct taxonomy_error : std::invalid_argument {
  explicit taxonomy_error(const std::string& msg) : std::invalid_argument(msg) {}
};

struct config_error : std::invalid_argument {
  explicit config_error(const std::string& msg) : std::invalid_argument(msg) {}
};

struct metric_error : std::invalid_argument {
  explicit metric_error(const std::string& msg) : std::invalid_argument(msg) {}
};

}  // namespace signsynth
