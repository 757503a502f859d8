// Copyright 2026 The qcq Authors
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

#include "qcq/reference.h"

namespace qcq {

Qc2Spec ReferenceConstruction::spec() const {
    Qc2Spec s{n, parse_coeff_string(g1), parse_coeff_string(g2), parse_coeff_string(nu)};
    s.validate();
    return s;
}

const std::vector<ReferenceConstruction> &reference_constructions() {
    static const std::vector<ReferenceConstruction> rows{
        {"[42,26,9]", 21, "1101", "3^{2}1^{2}(31)^{2}12(21)^{2}", "1020231213^{2}23^{2}0332^{3}", 26, 9, 10, 9, 16, 12, true, {0, 1}, {5, 7}},
        {"[70,55,7]", 35, "13(23)^{2}0(23)^{2}21", "1331",
         "1302^{2}03230^{2}20(23)^{2}121^{2}0213^{2}231(12)^{2}1", 55, 7, 40, 7, 40, 7, true, {1, 3}, {0, 14}},
        {"[74,55,9]", 37, "131^{2}3^{2}2(13)^{2}123^{2}1^{2}31", "1^{2}",
         "101^{3}2(31)^{2}2^{3}3^{2}12^{2}3203^{2}1^{3}3123(12)^{2}201", 55, 9, 36, 9, -1, -1, true, {1}, {0}},
        {"[78,59,9]", 39, "31", "13102301(03)^{2}01^{2}02^{2}1",
         "22010312(03)^{2}2^{4}303^{2}213^{3}03^{2}123^{2}1020323", 59, 9, 40, 9, -1, -1, false, {1, 2, 6}, {26}},
    };
    return rows;
}

}  // namespace qcq
