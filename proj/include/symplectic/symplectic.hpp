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

#ifndef SYMPLECTIC_SYMPLECTIC_HPP_
#define SYMPLECTIC_SYMPLECTIC_HPP_

#include "symplectic/axioms.hpp"
#include "symplectic/enumeration.hpp"
#include "symplectic/family_io.hpp"
#include "symplectic/greedy.hpp"
#include "symplectic/ordering.hpp"
#include "symplectic/signed_set.hpp"
#include "symplectic/witness.hpp"
#include "symplectic/wxyz.hpp"

#endif  // SYMPLECTIC_SYMPLECTIC_HPP_
