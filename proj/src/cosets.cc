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

#include "qcq/cosets.h"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "qcq/errors.h"

namespace qcq {

namespace {

void require_odd(int n) {
    if (n < 1 || n % 2 == 0) {
        throw UnsupportedLength("cyclotomic cosets need an odd positive modulus, got " + std::to_string(n));
    }
}

int mod(long long a, int n) {
    long long r = a % n;
    return static_cast<int>(r < 0 ? r + n : r);
}

}  // namespace

bool Coset::contains(int residue) const {
    return std::binary_search(members.begin(), members.end(), residue);
}

Coset coset_of(int i, int n) {
    require_odd(n);
    if (i < 0 || i >= n) {
        throw std::out_of_range("residue " + std::to_string(i) + " outside [0, " + std::to_string(n) + ")");
    }
    Coset c;
    c.n = n;
    int x = i;
    do {
        c.members.push_back(x);
        x = mod(4LL * x, n);
    } while (x != i);
    std::sort(c.members.begin(), c.members.end());
    c.rep = c.members.front();
    return c;
}

std::vector<Coset> all_cosets(int n) {
    require_odd(n);
    std::vector<Coset> out;
    std::vector<bool> seen(n, false);
    for (int i = 0; i < n; ++i) {
        if (seen[i]) {
            continue;
        }
        Coset c = coset_of(i, n);
        for (int m : c.members) {
            seen[m] = true;
        }
        out.push_back(std::move(c));
    }
    return out;
}

CosetClass classify(const Coset &c) {
    int image = mod(static_cast<long long>(c.n) - 2LL * c.rep, c.n);
    if (c.contains(image)) {
        return {true, c.rep};
    }
    return {false, coset_of(image, c.n).rep};
}

DefiningSet::DefiningSet(int n, const std::vector<int> &coset_members) : n_(n) {
    require_odd(n);
    std::set<int> reps;
    for (int m : coset_members) {
        reps.insert(coset_of(mod(m, n), n).rep);
    }
    reps_.assign(reps.begin(), reps.end());
}

DefiningSet DefiningSet::from_elements(int n, const std::vector<int> &elements) {
    DefiningSet t(n, elements);
    std::vector<int> given(elements);
    for (auto &e : given) {
        e = mod(e, n);
    }
    std::sort(given.begin(), given.end());
    given.erase(std::unique(given.begin(), given.end()), given.end());
    if (given != t.elements()) {
        throw SpecError("defining set is not a union of full 4-cyclotomic cosets");
    }
    return t;
}

std::vector<int> DefiningSet::elements() const {
    std::vector<int> out;
    for (int r : reps_) {
        Coset c = coset_of(r, n_);
        out.insert(out.end(), c.members.begin(), c.members.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

size_t DefiningSet::size() const {
    return elements().size();
}

bool DefiningSet::contains(int residue) const {
    return std::binary_search(reps_.begin(), reps_.end(), coset_of(mod(residue, n_), n_).rep);
}

std::vector<int> minus_two_image(const DefiningSet &t) {
    std::vector<int> out;
    for (int e : t.elements()) {
        out.push_back(mod(-2LL * e, t.n()));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool defset_dual_containing(const DefiningSet &t) {
    for (int x : minus_two_image(t)) {
        if (t.contains(x)) {
            return false;
        }
    }
    return true;
}

bool defset_no_skew_symmetric_or_pairs(const DefiningSet &t) {
    for (int r : t.reps()) {
        CosetClass cls = classify(coset_of(r, t.n()));
        if (cls.skew_symmetric) {
            return false;
        }
        if (std::binary_search(t.reps().begin(), t.reps().end(), cls.partner_rep)) {
            return false;
        }
    }
    return true;
}

}  // namespace qcq
