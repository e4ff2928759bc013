/* Copyright 2026 The latscat Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "latscat/error.hpp"

namespace latscat {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::BandEdge: return "BandEdge";
    case ErrorKind::NoResonance: return "NoResonance";
    case ErrorKind::DegenerateSpacing: return "DegenerateSpacing";
    case ErrorKind::BarrierOutOfRange: return "BarrierOutOfRange";
    case ErrorKind::PacketOutOfRange: return "PacketOutOfRange";
    case ErrorKind::NotResonant: return "NotResonant";
    case ErrorKind::BoundaryWrap: return "BoundaryWrap";
    case ErrorKind::InvalidConfig: return "InvalidConfig";
    case ErrorKind::Io: return "Io";
  }
  return "Unknown";
}

}  // namespace latscat
