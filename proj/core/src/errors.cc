// Copyright 2026 The Hushwave Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hushwave/errors.h"

namespace hushwave {

SingularityError::SingularityError(std::size_t point_index,
                                   std::size_t element_index)
    : ParameterError("field point " + std::to_string(point_index) +
                     " coincides with element " +
                     std::to_string(element_index)),
      point_index_(point_index),
      element_index_(element_index) {}

}  // namespace hushwave
