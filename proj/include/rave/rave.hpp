// Copyright 2026 The RAVE Authors
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

#pragma once

#include "rave/analyzer.hpp"
#include "rave/bounded_queue.hpp"
#include "rave/decode.hpp"
#include "rave/error.hpp"
#include "rave/isa.hpp"
#include "rave/marker_protocol.hpp"
#include "rave/metrics.hpp"
#include "rave/paraver.hpp"
#include "rave/paraver_codes.hpp"
#include "rave/report.hpp"
#include "rave/synthetic.hpp"
#include "rave/trace_io.hpp"
#include "rave/vector_state.hpp"
