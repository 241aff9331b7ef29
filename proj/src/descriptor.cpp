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

#include "decomp/descriptor.hpp"

namespace decomp {

std::vector<std::string> split_list(std::string_view text) {
  std::vector<std::string> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    out.emplace_back(text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

namespace {

std::uint64_t parse_modulus(std::string_view s) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string_view::npos) {
    throw Error(ErrorCode::ParseError, "invalid prime '" + std::string(s) + "'");
  }
  try {
    return std::stoull(std::string(s));
  } catch (const std::out_of_range&) {
    throw Error(ErrorCode::ParseError, "prime '" + std::string(s) + "' does not fit in 64 bits");
  }
}

}  // namespace

FieldDescriptor parse_field(std::string_view text) {
  if (text == "q") return RationalField{};
  if (text.starts_with("fp:")) return PrimeField(parse_modulus(text.substr(3)));
  if (text.starts_with("ext:")) {
    const auto rest = text.substr(4);
    const auto colon = rest.find(':');
    if (colon == std::string_view::npos) {
      throw Error(ErrorCode::ParseError, "extension descriptor needs ext:<p>:<c0,...,1>");
    }
    PrimeField base(parse_modulus(rest.substr(0, colon)));
    std::vector<Fp> c;
    for (const auto& tok : split_list(rest.substr(colon + 1))) c.push_back(base.parse(tok));
    return ExtensionField<PrimeField>(base, Polynomial<PrimeField>(base, std::move(c)));
  }
  throw Error(ErrorCode::ParseError, "unknown field '" + std::string(text) + "' (expected q, fp:<p> or ext:<p>:<coeffs>)");
}

std::string field_name(const FieldDescriptor& f) {
  return std::visit([](const auto& x) { return x.name(); }, f);
}

ExtensionField<PrimeField> gf4() {
  PrimeField f2(2);
  return ExtensionField<PrimeField>(f2, Polynomial<PrimeField>::from_ints(f2, {1, 1, 1}));
}

}  // namespace decomp
