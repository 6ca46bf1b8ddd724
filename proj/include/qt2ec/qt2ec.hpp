// Copyright 2026 The qt2ec Authors
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

#ifndef QT2EC_QT2EC_HPP_
#define QT2EC_QT2EC_HPP_

#include "qt2ec/colouring.hpp"
#include "qt2ec/dot.hpp"
#include "qt2ec/edge_classes.hpp"
#include "qt2ec/errors.hpp"
#include "qt2ec/families.hpp"
#include "qt2ec/graph.hpp"
#include "qt2ec/graph_io.hpp"
#include "qt2ec/oracle.hpp"
#include "qt2ec/orientation.hpp"
#include "qt2ec/report.hpp"
#include "qt2ec/structure.hpp"
#include "qt2ec/union_find.hpp"

#endif  // QT2EC_QT2EC_HPP_
