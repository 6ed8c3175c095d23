// Copyright 2026 The uncert authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "uncert/tracial_map.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "uncert/random.hpp"

namespace uncert {

std::string_view map_kind_name(MapKind kind) {
    switch (kind) {
    case MapKind::UsualTrace:
        return "usual-trace";
    case MapKind::ScaledBlockTrace:
        return "scaled-block-trace";
    case MapKind::CenterExpectation:
        return "center-expectation";
    case MapKind::Composite:
        return "composite";
    }
    return "unknown";
}

MapKind map_kind_from_string(std::string_view name) {
    if (name == "usual-trace")
        return MapKind::UsualTrace;
    if (name == "scaled-block-trace")
        return MapKind::ScaledBlockTrace;
    if (name == "center-expectation")
        return MapKind::CenterExpectation;
    if (name == "composite")
        return MapKind::Composite;
    throw ConfigError("unknown map kind: " + std::string(name));
}

PositiveAssignment::PositiveAssignment(BlockAlgebra cod, std::vector<AlgebraElement> tgts)
    : codomain(std::move(cod)), targets(std::move(tgts)) {
    if (targets.empty())
        throw DimensionError("positive assignment needs at least one target");
    for (const auto &q : targets) {
        if (!(q.algebra() == codomain))
            throw DimensionError("assignment target lives outside the codomain");
        if (q.hermitian_defect() > 1e-10 * (1.0 + element_spectral_norm(q)))
            throw DomainError("assignment targets must be Hermitian");
        if (!element_is_psd(q))
            throw DomainError("assignment targets must be PSD");
    }
}

AlgebraElement PositiveAssignment::apply(const AlgebraElement &diag) const {
    if (diag.num_blocks() != points())
        throw DimensionError("assignment applied to an element with the wrong point count");
    AlgebraElement out = AlgebraElement::zero(codomain);
    for (int j = 0; j < points(); ++j) {
        if (diag.block(j).dim() != 1)
            throw DimensionError("assignment input must live in +^k M_1");
        AlgebraElement term = targets[static_cast<std::size_t>(j)];
        term *= diag.block(j).at(0, 0);
        out += term;
    }
    return out;
}

double PositiveAssignment::unital_defect() const {
    AlgebraElement sum = AlgebraElement::zero(codomain);
    for (const auto &q : targets)
        sum += q;
    return element_spectral_norm(sum - AlgebraElement::identity(codomain));
}

double PositiveAssignment::commutativity_defect() const {
    double defect = 0.0;
    for (std::size_t i = 0; i < targets.size(); ++i)
        for (std::size_t j = i + 1; j < targets.size(); ++j) {
            const AlgebraElement comm = targets[i] * targets[j] - targets[j] * targets[i];
            defect = std::max(defect, element_spectral_norm(comm));
        }
    return defect;
}

TracialMap::TracialMap(MapKind kind, BlockAlgebra domain, BlockAlgebra codomain,
                       std::vector<std::vector<double>> coeffs, std::optional<PositiveAssignment> outer)
    : kind_(kind), domain_(std::move(domain)), codomain_(std::move(codomain)),
      coeffs_(std::move(coeffs)), outer_(std::move(outer)) {}

TracialMap TracialMap::usual_trace(BlockAlgebra domain) {
    const int nb = domain.num_blocks();
    std::vector<std::vector<double>> coeffs{std::vector<double>(static_cast<std::size_t>(nb), 1.0)};
    return TracialMap(MapKind::UsualTrace, std::move(domain), BlockAlgebra::single(1),
                      std::move(coeffs), std::nullopt);
}

namespace {
void validate_coeffs(const BlockAlgebra &domain, const std::vector<std::vector<double>> &coeffs,
                     bool require_nonneg) {
    if (coeffs.empty())
        throw DimensionError("scaled block trace needs at least one coefficient row");
    for (const auto &row : coeffs) {
        if (static_cast<int>(row.size()) != domain.num_blocks())
            throw DimensionError("coefficient row length must match the number of blocks");
        for (double c : row) {
            if (!std::isfinite(c))
                throw DomainError("coefficients must be finite");
            if (require_nonneg && c < 0.0)
                throw DomainError("scaled block trace coefficients must be nonnegative");
        }
    }
}
} // namespace

TracialMap TracialMap::scaled_block_trace(BlockAlgebra domain, std::vector<std::vector<double>> coeffs) {
    validate_coeffs(domain, coeffs, /*require_nonneg=*/true);
    const BlockAlgebra codomain(std::vector<int>(coeffs.size(), 1));
    return TracialMap(MapKind::ScaledBlockTrace, std::move(domain), codomain, std::move(coeffs),
                      std::nullopt);
}

TracialMap TracialMap::scaled_block_trace_unchecked(BlockAlgebra domain,
                                                    std::vector<std::vector<double>> coeffs) {
    validate_coeffs(domain, coeffs, /*require_nonneg=*/false);
    const BlockAlgebra codomain(std::vector<int>(coeffs.size(), 1));
    return TracialMap(MapKind::ScaledBlockTrace, std::move(domain), codomain, std::move(coeffs),
                      std::nullopt);
}

TracialMap TracialMap::center_expectation(BlockAlgebra domain) {
    BlockAlgebra codomain = domain;
    return TracialMap(MapKind::CenterExpectation, std::move(domain), std::move(codomain), {},
                      std::nullopt);
}

TracialMap TracialMap::composite(BlockAlgebra domain, std::vector<std::vector<double>> coeffs,
                                 PositiveAssignment outer) {
    validate_coeffs(domain, coeffs, /*require_nonneg=*/true);
    if (static_cast<int>(coeffs.size()) != outer.points())
        throw DimensionError("composite: inner rows and outer targets must agree in count");
    BlockAlgebra codomain = outer.codomain;
    return TracialMap(MapKind::Composite, std::move(domain), std::move(codomain), std::move(coeffs),
                      std::move(outer));
}

AlgebraElement TracialMap::apply(const AlgebraElement &x) const {
    if (!(x.algebra() == domain_))
        throw DimensionError("element is not in the map's domain");

    const AlgebraElement *input = &x;
    AlgebraElement conjugated = x;
    if (!unitary_.empty()) {
        for (int i = 0; i < x.num_blocks(); ++i) {
            const ComplexMatrix &u = unitary_[static_cast<std::size_t>(i)];
            conjugated.block(i) = u.adjoint() * x.block(i) * u;
        }
        input = &conjugated;
    }

    switch (kind_) {
    case MapKind::CenterExpectation: {
        AlgebraElement out = AlgebraElement::zero(codomain_);
        for (int i = 0; i < input->num_blocks(); ++i) {
            const int n = domain_.block_dims[static_cast<std::size_t>(i)];
            const cplx c = input->block(i).trace() / static_cast<double>(n);
            for (int d = 0; d < n; ++d)
                out.block(i).at(d, d) = c;
        }
        return out;
    }
    case MapKind::UsualTrace:
    case MapKind::ScaledBlockTrace: {
        AlgebraElement out = AlgebraElement::zero(codomain_);
        for (std::size_t j = 0; j < coeffs_.size(); ++j) {
            cplx v(0.0, 0.0);
            for (int i = 0; i < input->num_blocks(); ++i)
                v += coeffs_[j][static_cast<std::size_t>(i)] * input->block(i).trace();
            out.block(static_cast<int>(j)).at(0, 0) = v;
        }
        return out;
    }
    case MapKind::Composite: {
        AlgebraElement out = AlgebraElement::zero(codomain_);
        for (std::size_t j = 0; j < coeffs_.size(); ++j) {
            cplx v(0.0, 0.0);
            for (int i = 0; i < input->num_blocks(); ++i)
                v += coeffs_[j][static_cast<std::size_t>(i)] * input->block(i).trace();
            AlgebraElement term = outer_->targets[j];
            term *= v;
            out += term;
        }
        return out;
    }
    }
    throw DomainError("unknown map kind");
}

double TracialMap::unital_defect() const {
    const AlgebraElement img = apply(AlgebraElement::identity(domain_));
    return element_spectral_norm(img - AlgebraElement::identity(codomain_));
}

bool TracialMap::is_unital(const Tolerance &tol) const { return unital_defect() <= tol.bound(1.0); }

TracialMap TracialMap::conjugate(const std::vector<ComplexMatrix> &u) const {
    if (static_cast<int>(u.size()) != domain_.num_blocks())
        throw DimensionError("conjugate: one unitary per domain block required");
    for (int i = 0; i < domain_.num_blocks(); ++i) {
        const ComplexMatrix &ui = u[static_cast<std::size_t>(i)];
        if (ui.dim() != domain_.block_dims[static_cast<std::size_t>(i)])
            throw DimensionError("conjugate: unitary dimension mismatch");
        const ComplexMatrix gram = ui.adjoint() * ui - ComplexMatrix::identity(ui.dim());
        if (spectral_norm(gram) > 1e-10)
            throw DomainError("conjugate: block is not unitary within 1e-10");
    }
    TracialMap out = *this;
    if (out.unitary_.empty()) {
        out.unitary_ = u;
    } else {
        // apply(X) = base((WV)^dagger X (WV)) when conjugating V-first by W
        for (int i = 0; i < domain_.num_blocks(); ++i)
            out.unitary_[static_cast<std::size_t>(i)] =
                u[static_cast<std::size_t>(i)] * unitary_[static_cast<std::size_t>(i)];
    }
    return out;
}

MapFactorization TracialMap::factorize() const {
    const int nb = domain_.num_blocks();
    std::vector<std::vector<double>> inner_coeffs;
    std::vector<AlgebraElement> targets;
    BlockAlgebra codomain = codomain_;

    switch (kind_) {
    case MapKind::UsualTrace:
    case MapKind::ScaledBlockTrace: {
        inner_coeffs = coeffs_;
        const int k = static_cast<int>(coeffs_.size());
        for (int j = 0; j < k; ++j) {
            AlgebraElement q = AlgebraElement::zero(codomain);
            q.block(j).at(0, 0) = cplx(1.0, 0.0);
            targets.push_back(std::move(q));
        }
        break;
    }
    case MapKind::CenterExpectation: {
        inner_coeffs.resize(static_cast<std::size_t>(nb));
        for (int j = 0; j < nb; ++j) {
            inner_coeffs[static_cast<std::size_t>(j)].assign(static_cast<std::size_t>(nb), 0.0);
            inner_coeffs[static_cast<std::size_t>(j)][static_cast<std::size_t>(j)] =
                1.0 / domain_.block_dims[static_cast<std::size_t>(j)];
            AlgebraElement q = AlgebraElement::zero(codomain);
            q.block(j) = ComplexMatrix::identity(domain_.block_dims[static_cast<std::size_t>(j)]);
            targets.push_back(std::move(q));
        }
        break;
    }
    case MapKind::Composite: {
        inner_coeffs = coeffs_;
        targets = outer_->targets;
        break;
    }
    }

    TracialMap phi1 =
        kind_ == MapKind::UsualTrace
            ? TracialMap::usual_trace(domain_)
            : TracialMap::scaled_block_trace(domain_, inner_coeffs);
    phi1.unitary_ = unitary_; // conjugation belongs to the first factor

    const int k = static_cast<int>(inner_coeffs.size());
    std::vector<std::vector<double>> id_coeffs(static_cast<std::size_t>(k));
    for (int j = 0; j < k; ++j) {
        id_coeffs[static_cast<std::size_t>(j)].assign(static_cast<std::size_t>(k), 0.0);
        id_coeffs[static_cast<std::size_t>(j)][static_cast<std::size_t>(j)] = 1.0;
    }
    PositiveAssignment assignment(codomain, targets);
    TracialMap phi2 = TracialMap::composite(phi1.codomain(), std::move(id_coeffs),
                                            PositiveAssignment(codomain, std::move(targets)));
    return MapFactorization{std::move(phi1), std::move(phi2), std::move(assignment)};
}

double check_tracial(const TracialMap &map, int trials, std::uint64_t seed) {
    if (trials < 1)
        throw DomainError("check_tracial: trials must be >= 1");
    double worst = 0.0;
    for (int t = 0; t < trials; ++t) {
        const std::uint64_t s = rng::derive_seed(seed, static_cast<std::uint64_t>(t));
        const AlgebraElement a = random_element(map.domain(), rng::mix64(s ^ 0x1));
        const AlgebraElement b = random_element(map.domain(), rng::mix64(s ^ 0x2));
        const AlgebraElement diff = map.apply(a * b) - map.apply(b * a);
        worst = std::max(worst, element_spectral_norm(diff));
    }
    return worst;
}

std::pair<bool, double> check_positive_unital(const TracialMap &map, int trials, std::uint64_t seed) {
    if (trials < 1)
        throw DomainError("check_positive_unital: trials must be >= 1");
    const Tolerance psd_tol{1e-9, 1e-12};
    bool positive = true;
    for (int t = 0; t < trials && positive; ++t) {
        const std::uint64_t s = rng::derive_seed(seed, static_cast<std::uint64_t>(t));
        const AlgebraElement x = random_positive_element(map.domain(), s);
        positive = element_is_psd(map.apply(x), psd_tol);
    }
    // Deterministic probes supported on a single block catch sign defects
    // that random full-support samples can average away.
    for (int i = 0; i < map.domain().num_blocks() && positive; ++i) {
        AlgebraElement probe = AlgebraElement::zero(map.domain());
        probe.block(i) = ComplexMatrix::identity(map.domain().block_dims[static_cast<std::size_t>(i)]);
        positive = element_is_psd(map.apply(probe), psd_tol);
    }
    return {positive, map.unital_defect()};
}

double range_commutativity_defect(const TracialMap &map, int trials, std::uint64_t seed) {
    if (trials < 1)
        throw DomainError("range_commutativity_defect: trials must be >= 1");
    double worst = 0.0;
    if (map.kind() == MapKind::Composite)
        worst = map.outer()->commutativity_defect();
    for (int t = 0; t < trials; ++t) {
        const std::uint64_t s = rng::derive_seed(seed, static_cast<std::uint64_t>(t));
        const AlgebraElement x = map.apply(random_element(map.domain(), rng::mix64(s ^ 0x5)));
        const AlgebraElement y = map.apply(random_element(map.domain(), rng::mix64(s ^ 0x6)));
        worst = std::max(worst, element_spectral_norm(x * y - y * x));
    }
    return worst;
}

namespace {

/// Real vectorization of a Hermitian element (diagonal, then re/im of the
/// strict upper triangle, blockwise).
std::vector<double> vec_hermitian(const AlgebraElement &x) {
    std::vector<double> v;
    for (int b = 0; b < x.num_blocks(); ++b) {
        const ComplexMatrix &m = x.block(b);
        for (int i = 0; i < m.dim(); ++i)
            v.push_back(m.at(i, i).real());
        for (int r = 0; r < m.dim(); ++r)
            for (int c = r + 1; c < m.dim(); ++c) {
                v.push_back(m.at(r, c).real());
                v.push_back(m.at(r, c).imag());
            }
    }
    return v;
}

/// Gaussian elimination with partial pivoting for small dense systems.
/// Returns false when the system is numerically singular.
bool solve_dense(std::vector<std::vector<double>> a, std::vector<double> b, std::vector<double> &out) {
    const std::size_t n = b.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::abs(a[r][col]) > std::abs(a[pivot][col]))
                pivot = r;
        if (std::abs(a[pivot][col]) < 1e-14)
            return false;
        std::swap(a[pivot], a[col]);
        std::swap(b[pivot], b[col]);
        for (std::size_t r = col + 1; r < n; ++r) {
            const double f = a[r][col] / a[col][col];
            for (std::size_t c = col; c < n; ++c)
                a[r][c] -= f * a[col][c];
            b[r] -= f * b[col];
        }
    }
    out.assign(n, 0.0);
    for (std::size_t ri = n; ri-- > 0;) {
        double s = b[ri];
        for (std::size_t c = ri + 1; c < n; ++c)
            s -= a[ri][c] * out[c];
        out[ri] = s / a[ri][ri];
    }
    return true;
}

/// Nonnegative least squares min ||A t - b||_2, t >= 0, by enumerating
/// supports. The block counts here are small, so the 2^n sweep is exact
/// and deterministic.
struct NnlsResult {
    std::vector<double> t;
    double residual = 0.0;
};

NnlsResult nnls_enumerate(const std::vector<std::vector<double>> &cols, const std::vector<double> &b) {
    const std::size_t nvars = cols.size();
    const std::size_t rows = b.size();
    if (nvars > 16)
        throw DomainError("nnls: too many blocks for support enumeration");

    auto residual_of = [&](const std::vector<double> &t) {
        double r2 = 0.0;
        for (std::size_t r = 0; r < rows; ++r) {
            double v = -b[r];
            for (std::size_t j = 0; j < nvars; ++j)
                v += cols[j][r] * t[j];
            r2 += v * v;
        }
        return std::sqrt(r2);
    };

    NnlsResult best;
    best.t.assign(nvars, 0.0);
    best.residual = residual_of(best.t);

    for (std::uint32_t mask = 1; mask < (1u << nvars); ++mask) {
        std::vector<std::size_t> support;
        for (std::size_t j = 0; j < nvars; ++j)
            if (mask & (1u << j))
                support.push_back(j);
        const std::size_t s = support.size();

        // Normal equations on the support.
        std::vector<std::vector<double>> gram(s, std::vector<double>(s, 0.0));
        std::vector<double> rhs(s, 0.0);
        for (std::size_t i = 0; i < s; ++i) {
            for (std::size_t j = 0; j < s; ++j)
                for (std::size_t r = 0; r < rows; ++r)
                    gram[i][j] += cols[support[i]][r] * cols[support[j]][r];
            for (std::size_t r = 0; r < rows; ++r)
                rhs[i] += cols[support[i]][r] * b[r];
        }
        std::vector<double> ts;
        if (!solve_dense(std::move(gram), std::move(rhs), ts))
            continue;
        bool ok = true;
        for (double &v : ts) {
            if (v < -1e-12) {
                ok = false;
                break;
            }
            v = std::max(v, 0.0);
        }
        if (!ok)
            continue;
        std::vector<double> full(nvars, 0.0);
        for (std::size_t i = 0; i < s; ++i)
            full[support[i]] = ts[i];
        const double res = residual_of(full);
        if (res < best.residual - 1e-15) {
            best.t = std::move(full);
            best.residual = res;
        }
    }
    return best;
}

} // namespace

AlgebraElement make_phi_density(const TracialMap &map, std::uint64_t seed) {
    const BlockAlgebra &domain = map.domain();
    const int nb = domain.num_blocks();

    // Random definite candidates, one per block, each normalized to unit trace.
    rng::Stream s(seed);
    std::vector<ComplexMatrix> candidate;
    candidate.reserve(static_cast<std::size_t>(nb));
    for (int d : domain.block_dims) {
        ComplexMatrix g(d);
        for (int r = 0; r < d; ++r)
            for (int c = 0; c < d; ++c)
                g.at(r, c) = s.next_cgauss();
        ComplexMatrix w = g * g.adjoint();
        w *= cplx(1.0 / w.trace().real(), 0.0);
        candidate.push_back(std::move(w));
    }

    // Target block traces.
    std::vector<double> traces(static_cast<std::size_t>(nb), 0.0);
    switch (map.kind()) {
    case MapKind::UsualTrace:
        for (auto &t : traces)
            t = 1.0 / nb;
        break;
    case MapKind::CenterExpectation:
        for (int i = 0; i < nb; ++i)
            traces[static_cast<std::size_t>(i)] = domain.block_dims[static_cast<std::size_t>(i)];
        break;
    case MapKind::ScaledBlockTrace:
    case MapKind::Composite: {
        // Phi(rho) depends on rho only through its block traces t:
        // Phi(rho) = sum_i t_i R_i with R_i = sum_j c_ji Q_j. Solve
        // sum_i t_i vec(R_i) = vec(I) over t >= 0.
        const auto factor = map.factorize();
        const auto &coeffs = map.coeffs();
        const AlgebraElement id = AlgebraElement::identity(map.codomain());
        std::vector<std::vector<double>> cols;
        cols.reserve(static_cast<std::size_t>(nb));
        for (int i = 0; i < nb; ++i) {
            AlgebraElement r_i = AlgebraElement::zero(map.codomain());
            for (std::size_t j = 0; j < coeffs.size(); ++j) {
                AlgebraElement term = factor.assignment.targets[j];
                term *= cplx(coeffs[j][static_cast<std::size_t>(i)], 0.0);
                r_i += term;
            }
            cols.push_back(vec_hermitian(r_i));
        }
        const NnlsResult fit = nnls_enumerate(cols, vec_hermitian(id));
        if (fit.residual > 1e-9) {
            std::ostringstream msg;
            msg << "make_phi_density: constraint system infeasible, best residual " << fit.residual;
            throw FeasibilityError(msg.str());
        }
        traces = fit.t;
        break;
    }
    }

    std::vector<ComplexMatrix> blocks;
    blocks.reserve(static_cast<std::size_t>(nb));
    for (int i = 0; i < nb; ++i) {
        ComplexMatrix b = candidate[static_cast<std::size_t>(i)];
        b *= cplx(traces[static_cast<std::size_t>(i)], 0.0);
        blocks.push_back(std::move(b));
    }
    AlgebraElement rho(domain, std::move(blocks));

    const double defect =
        element_spectral_norm(map.apply(rho) - AlgebraElement::identity(map.codomain()));
    if (defect > 1e-9) {
        std::ostringstream msg;
        msg << "make_phi_density: residual " << defect << " exceeds 1e-9";
        throw FeasibilityError(msg.str());
    }
    return rho;
}

bool is_phi_density(const TracialMap &map, const AlgebraElement &rho, const Tolerance &tol) {
    if (!(rho.algebra() == map.domain()))
        throw DimensionError("is_phi_density: rho is not in the map's domain");
    if (!element_is_psd(rho, tol))
        return false;
    const double defect =
        element_spectral_norm(map.apply(rho) - AlgebraElement::identity(map.codomain()));
    return defect <= tol.bound(1.0);
}

namespace {
BlockAlgebra doubled(const BlockAlgebra &alg) {
    std::vector<int> dims = alg.block_dims;
    for (int &d : dims)
        d *= 2;
    return BlockAlgebra(std::move(dims));
}

std::vector<std::vector<double>> halved(const std::vector<std::vector<double>> &coeffs) {
    auto out = coeffs;
    for (auto &row : out)
        for (double &c : row)
            c *= 0.5;
    return out;
}
} // namespace

TracialMap dilate(const TracialMap &map) {
    const BlockAlgebra dil = doubled(map.domain());
    TracialMap out = [&]() {
        switch (map.kind()) {
        case MapKind::UsualTrace:
        case MapKind::ScaledBlockTrace:
            return TracialMap::scaled_block_trace(dil, halved(map.coeffs()));
        case MapKind::CenterExpectation:
            return TracialMap::center_expectation(dil);
        case MapKind::Composite:
            return TracialMap::composite(dil, halved(map.coeffs()), *map.outer());
        }
        throw DomainError("dilate: unknown map kind");
    }();
    if (!map.conjugation().empty()) {
        std::vector<ComplexMatrix> u;
        u.reserve(map.conjugation().size());
        for (const auto &ui : map.conjugation()) {
            ComplexMatrix d(2 * ui.dim());
            for (int r = 0; r < ui.dim(); ++r)
                for (int c = 0; c < ui.dim(); ++c) {
                    d.at(r, c) = ui.at(r, c);
                    d.at(ui.dim() + r, ui.dim() + c) = ui.at(r, c);
                }
            u.push_back(std::move(d));
        }
        out = out.conjugate(u);
    }
    return out;
}

AlgebraElement dilate_offdiag(const AlgebraElement &a) {
    const BlockAlgebra dil = doubled(a.algebra());
    AlgebraElement out = AlgebraElement::zero(dil);
    for (int b = 0; b < a.num_blocks(); ++b) {
        const ComplexMatrix &m = a.block(b);
        const int n = m.dim();
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) {
                out.block(b).at(r, n + c) = std::conj(m.at(c, r)); // A^dagger
                out.block(b).at(n + r, c) = m.at(r, c);            // A
            }
    }
    return out;
}

AlgebraElement dilate_diag(const AlgebraElement &x) {
    const BlockAlgebra dil = doubled(x.algebra());
    AlgebraElement out = AlgebraElement::zero(dil);
    for (int b = 0; b < x.num_blocks(); ++b) {
        const ComplexMatrix &m = x.block(b);
        const int n = m.dim();
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) {
                out.block(b).at(r, c) = m.at(r, c);
                out.block(b).at(n + r, n + c) = m.at(r, c);
            }
    }
    return out;
}

std::vector<cplx> central_coefficients(const AlgebraElement &x) {
    std::vector<cplx> out;
    out.reserve(static_cast<std::size_t>(x.num_blocks()));
    for (int b = 0; b < x.num_blocks(); ++b)
        out.push_back(x.block(b).trace() / static_cast<double>(x.block(b).dim()));
    return out;
}

} // namespace uncert
