// Copyright 2026 The decomp Authors
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

#ifndef DECOMP_DESCRIPTOR_HPP
#define DECOMP_DESCRIPTOR_HPP

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "decomp/extension.hpp"
#include "decomp/field.hpp"

namespace decomp {

using FieldDescriptor = std::variant<RationalField, PrimeField, ExtensionField<PrimeField>>;

/// `q`, `fp:<p>` or `ext:<p>:<c0,...,c_{n-1},1>`.
FieldDescriptor parse_field(std::string_view text);
std::string field_name(const FieldDescriptor& f);

/// Splits on commas; empty input gives an empty list.
std::vector<std::string> split_list(std::string_view text);

/// The field with four elements, F_2[y]/(y^2 + y + 1).
ExtensionField<PrimeField> gf4();

}  // namespace decomp

#endif  // DECOMP_DESCRIPTOR_HPP
