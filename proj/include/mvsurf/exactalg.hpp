/*
   Copyright 2026 The mvsurf Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// Exact arithmetic kernels: F_p, F_p[t], Z[c_ia] and their determinants.

#ifndef MVSURF_EXACTALG_HPP
#define MVSURF_EXACTALG_HPP

#include "exactalg/field_matrix.hpp"
#include "exactalg/int_multi_poly.hpp"
#include "exactalg/prime_field.hpp"
#include "exactalg/uni_poly.hpp"

#endif  // MVSURF_EXACTALG_HPP
