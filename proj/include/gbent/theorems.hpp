#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gbent/classify.hpp"
#include "gbent/tables.hpp"
#include "gbent/transform.hpp"

namespace gbent {

// Outcome of one characterization check: per-point bookkeeping of which
// case/tuple matched, plus the first failing observation when it does not
// hold. holds == true iff detail covers every checked point.
struct TheoremVerdict {
    struct Witness {
        std::uint32_t u = 0;
        std::string observed;
    };

    bool holds = false;
    std::map<std::uint32_t, int> detail;
    std::optional<Witness> failure;
};

// Integer Walsh spectra of all component combinations
// g_c = c_1 a_1 ^ ... ^ c_{k-1} a_{k-1} ^ a_k, indexed by the mask c
// (bit i-1 of c selects a_i).
struct ComponentSpectra {
    int n = 0;
    int k = 0;
    std::vector<IntSpectrum> by_mask;  // 2^{k-1} spectra
};

ComponentSpectra component_spectra(const GbfTable& f);

// k = 2: even n — a_2 and a_1^a_2 both bent (with the equivalent Gray-image
// form asserted to agree); odd n — the Gray image is bent.
TheoremVerdict check_k2(const GbfTable& f);

// k = 3: per-point membership of the normalized component-spectrum
// quadruple in the admissible tuple lists.
TheoremVerdict check_k3(const GbfTable& f);

// k = 4 gbent characterization via the eight component spectra; checked
// both as product identities and as tuple membership (which must agree).
TheoremVerdict check_k4_gbent(const GbfTable& f);

// k = 4 gbent characterization via the four Z_4-valued digit combinations
// b_2, b_1+b_2, 2b_1+b_2, 3b_1+b_2 and their level-2 spectra.
TheoremVerdict check_k4_z4(const GbfTable& f);

// k = 4 gsemibent (odd n) / generalized 2-plateaued (even n)
// characterization: per point the eight spectra are all zero or form an
// admissible tuple at the semibent magnitude.
TheoremVerdict check_k4_gsemibent(const GbfTable& f);

// Inductive split f = g + 2h: condition (ii) — h and h + 2^{k-2} g both
// gbent one level down, with conj(H_h(u)) * H_{h+2^{k-2}g}(u) real at
// every u (checked as exact self-conjugacy).
TheoremVerdict check_inductive(const GbfTable& f);

// Even n: gbent implies every component combination g_c is bent.
// (Necessary only; not sufficient.)
TheoremVerdict components_bent_necessary(const GbfTable& f);

// Exact identity: 2^{k-1} H_f(u) = sum_c alpha_c W_{g_c}(u), with each
// alpha_c built from its root-of-unity sum. k in {2,3,4}.
bool verify_walsh_decomposition(const GbfTable& f, std::uint32_t u);
bool verify_walsh_decomposition_all(const GbfTable& f);

// Exact identity: 2 H_f(u) = (1+zeta) H_h(u) + (1-zeta) H_{h+2^{k-2}g}(u),
// lifted from level k-1 via the ring embedding. k >= 2.
bool verify_recursive_split(const GbfTable& f, std::uint32_t u);
bool verify_recursive_split_all(const GbfTable& f);

// Exact identity: W_{psi(f)}(u,v) = sum_c (-1)^{<c,v>} W_{g_c}(u).
bool verify_gray_wht(const GbfTable& f, std::uint32_t u, std::uint32_t v);
bool verify_gray_wht_all(const GbfTable& f);

// Boolean class of the Gray image psi(f).
BooleanClass gray_classify(const GbfTable& f);

// True iff any applicable characterization checker disagrees with the
// spectral ground truth for f. Search suites require zero emissions.
bool theorem_discrepancy(const GbfTable& f);

}  // namespace gbent
