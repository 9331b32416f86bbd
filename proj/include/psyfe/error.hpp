// include/psyfe/error.hpp

// Copyright 2026  The psyfe Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef PSYFE_ERROR_HPP_
#define PSYFE_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace psyfe {

// Problems with user-supplied input (missing files, unsupported formats,
// malformed manifests). Contract violations on arguments use
// std::invalid_argument; everything else is a plain std::runtime_error.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string &what) : std::runtime_error(what) {}
};

}  // namespace psyfe

#endif  // PSYFE_ERROR_HPP_
