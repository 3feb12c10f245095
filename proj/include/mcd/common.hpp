#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace mcd {

// A block is a strictly increasing list of point labels.  Points are dense
// integers 0..v-1 throughout the library; presentation labels (letters for
// stem points and the like) live in DesignInstance::label_map only.
using Block = std::vector<int>;

// Exit-code conventions shared by the library and the CLI:
//   0  success / verification passed
//   1  verification failed (a witness is printed)
//   2  usage error, malformed input, or missing/invalid ingredient
constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

// Base error for anything that is wrong before verification even starts:
// malformed files, bad parameters, missing ingredients.  Maps to exit 2.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

// An ingredient handed to a construction failed its own certification or
// does not have the shape the construction needs.  Maps to exit 2.
class IngredientError : public InputError {
 public:
  explicit IngredientError(const std::string& msg) : InputError(msg) {}
};

// A request outside the supported parameter range (kept deliberately
// explicit so unsupported cases never silently degrade).  Maps to exit 2.
class CapabilityError : public InputError {
 public:
  explicit CapabilityError(const std::string& msg) : InputError(msg) {}
};

std::string join_ints(const std::vector<int>& xs, const char* sep = " ");
std::string block_str(const Block& b);

}  // namespace mcd
