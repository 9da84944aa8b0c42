/*
   Copyright 2026 The ictn authors

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

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ictn/cyclotomic.hpp"
#include "ictn/rational.hpp"

namespace ictn {

/// Dense square matrix over Rat, row-major.
class RatMatrix {
public:
    RatMatrix() : size_(0) {}
    explicit RatMatrix(std::size_t size) : size_(size), data_(size * size, Rat(0)) {}

    static RatMatrix identity(std::size_t size);

    std::size_t size() const { return size_; }
    Rat& at(std::size_t i, std::size_t j) { return data_[i * size_ + j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return data_[i * size_ + j]; }

    friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
    friend bool operator==(const RatMatrix& a, const RatMatrix& b) = default;

    RatMatrix transpose() const;

private:
    std::size_t size_;
    std::vector<Rat> data_;
};

/// Exact inverse by Gauss-Jordan elimination with first-nonzero pivoting.
/// Throws std::domain_error on a singular matrix.
RatMatrix invert_rat_matrix(const RatMatrix& m);

/// Dense square matrix over CycElem of a common order.
class CycMatrix {
public:
    CycMatrix() : size_(0), order_(1) {}
    CycMatrix(std::size_t size, long order)
        : size_(size), order_(order), data_(size * size, CycElem(order)) {}

    static CycMatrix identity(std::size_t size, long order);

    std::size_t size() const { return size_; }
    long order() const { return order_; }
    CycElem& at(std::size_t i, std::size_t j) { return data_[i * size_ + j]; }
    const CycElem& at(std::size_t i, std::size_t j) const { return data_[i * size_ + j]; }

    friend CycMatrix operator*(const CycMatrix& a, const CycMatrix& b);

    CycMatrix transpose() const;
    bool is_identity() const;

private:
    std::size_t size_;
    long order_;
    std::vector<CycElem> data_;
};

/// Exact inverse over the field Q(zeta_order), Gauss-Jordan with
/// first-canonically-nonzero pivoting. Throws std::domain_error if singular.
CycMatrix invert_cyc_matrix(const CycMatrix& m);

/// Solves the (possibly overdetermined) exact system A x = b, A row-major
/// rows x cols with rows >= cols and full column rank. Returns std::nullopt
/// when the system is inconsistent.
std::optional<std::vector<Rat>> solve_rat_system(std::size_t rows, std::size_t cols,
                                                 std::vector<Rat> a, std::vector<Rat> b);

}  // namespace ictn
