// Copyright 2026 The qconv Authors
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
#ifndef QCONV_REPORT_H
#define QCONV_REPORT_H

#include <json.hpp>

#include "qconv/channel.h"
#include "qconv/circuit.h"
#include "qconv/code.h"
#include "qconv/decoder.h"
#include "qconv/simulate.h"
#include "qconv/structure.h"

/// JSON documents emitted by the command-line tool. Every document carries
/// "schema": 1 and a "command" field. Keys keep insertion order so output is
/// byte-stable for fixed inputs.
namespace qconv::report {

using Json = nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;

/// Finite values as numbers, infinities as the strings "-inf" / "inf".
Json real(double v);
/// Inverse of real().
double parse_real(const Json &j);

Json header(const char *command);
Json code_json(const CodeSpec &c);
Json channel_json(const ChannelModel &ch);
Json logical_ops_json(const LogicalOps &lo);

Json validate_json(const CodeSpec &c, const ValidationReport &rep);
/// lo may be null when the standard form is not diagonal.
Json standard_form_json(const StandardForm &sf, const LogicalOps *lo);
Json logicals_json(const CodeSpec &c, const LogicalOps &lo);
Json catastrophic_json(const CodeSpec &c, const LogicalOps &lo);
Json encode_json(const Circuit &circ, const VerifyReport &rep);
Json decode_json(const CodeSpec &c, const ChannelModel &ch, const SyndromeStream &s, const DecodeResult &res,
                 const DecodeOptions &opts);
/// Wall time appears only when timing is set. Per-trial records only when records is set.
Json simulate_json(const CodeSpec &c, const RunSummary &sum, bool timing, bool records);

/// Throws std::invalid_argument unless j has "schema": 1 and the keys its
/// command requires.
void check_schema(const Json &j);

}  // namespace qconv::report

#endif
