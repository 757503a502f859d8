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

#ifndef QCQ_COSETS_H
#define QCQ_COSETS_H

#include <vector>

namespace qcq {

/// A 4-cyclotomic coset {i, 4i, 16i, ...} mod n. `rep` is the smallest member.
struct Coset {
    int n = 1;
    int rep = 0;
    std::vector<int> members;  // sorted ascending

    size_t size() const {
        return members.size();
    }
    bool contains(int residue) const;
    bool operator==(const Coset &) const = default;
};

/// Throws UnsupportedLength for even or non-positive n, std::out_of_range for i outside [0, n).
Coset coset_of(int i, int n);
/// Partition of {0, ..., n-1} into cosets, ordered by representative.
std::vector<Coset> all_cosets(int n);

struct CosetClass {
    bool skew_symmetric = false;
    /// Representative of C_{n-2i}; equals the coset's own rep iff skew-symmetric.
    int partner_rep = 0;
};

CosetClass classify(const Coset &c);

/// A union of whole cosets modulo n, identified by their canonical representatives.
class DefiningSet {
   public:
    DefiningSet() = default;
    /// Any member of a coset selects the whole coset.
    DefiningSet(int n, const std::vector<int> &coset_members);
    /// Throws SpecError unless `elements` is exactly a union of full cosets.
    static DefiningSet from_elements(int n, const std::vector<int> &elements);

    int n() const {
        return n_;
    }
    const std::vector<int> &reps() const {
        return reps_;
    }
    std::vector<int> elements() const;
    size_t size() const;
    bool contains(int residue) const;
    bool empty() const {
        return reps_.empty();
    }
    bool operator==(const DefiningSet &) const = default;

   private:
    int n_ = 1;
    std::vector<int> reps_;
};

/// T^{-2} = {-2t mod n : t in T}, sorted.
std::vector<int> minus_two_image(const DefiningSet &t);

/// T and T^{-2} are disjoint; the cyclic code with defining set T then contains its Hermitian dual.
bool defset_dual_containing(const DefiningSet &t);

/// The two-clause form: no member coset is skew-symmetric and no two member cosets form a
/// skew-asymmetric pair. Equivalent to defset_dual_containing.
bool defset_no_skew_symmetric_or_pairs(const DefiningSet &t);

}  // namespace qcq

#endif
