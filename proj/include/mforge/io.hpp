// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MFORGE_IO_HPP_
#define MFORGE_IO_HPP_

#include <string>

#include "json.hpp"
#include "mforge/construct.hpp"
#include "mforge/field.hpp"
#include "mforge/matrix.hpp"
#include "mforge/matroid.hpp"
#include "mforge/subfield.hpp"
#include "mforge/witness.hpp"

namespace mforge {

using Json = nlohmann::ordered_json;

// Parses text; syntax errors raise FormatError naming the byte offset.
Json parse_json(const std::string& text, const std::string& source);
Json read_json_file(const std::string& path);
std::string read_file(const std::string& path);
// Two-space indented, trailing newline.
std::string dump(const Json& j);

// Structural errors below raise FormatError naming the JSON path.
Json field_to_json(const FieldSpec& field);
FieldSpec field_from_json(const Json& j, const std::string& path = "");

Json matrix_to_json(const Matrix& a);
Matrix matrix_from_json(const Json& j, const std::string& path = "");

// Linear, relaxed and minor matroids; other kinds raise FormatError.
Json matroid_to_json(const Matroid& m);
MatroidPtr matroid_from_json(const Json& j, const std::string& path = "");

Json minor_spec_to_json(const MinorSpec& spec);
MinorSpec minor_spec_from_json(const Json& j, const std::string& path = "");

Json certificate_to_json(const Certificate& cert);
Certificate certificate_from_json(const Json& j, const std::string& path = "");

Json scaling_to_json(const ScalingCertificate& cert);
Json trace_to_json(const WitnessTrace& trace);

}  // namespace mforge

#endif  // MFORGE_IO_HPP_
