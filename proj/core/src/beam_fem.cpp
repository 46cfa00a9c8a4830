#include "dgcap/beam_fem.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include "dgcap/errors.hpp"

namespace dgcap {

namespace {

// Two transverse DOFs per node coupled across one element: half-bandwidth 3.
constexpr std::size_t kBand = 3;

// Symmetric positive-definite band matrix, upper triangle stored by rows:
// entry (i, i+k) at a[i*(kBand+1) + k]. Cholesky A = R^T R in place; a
// non-positive pivot means the matrix lost positive definiteness.
class BandedSpd {
public:
    explicit BandedSpd(std::size_t n) : n_(n), a_(n * (kBand + 1), 0.0) {}

    double& at(std::size_t i, std::size_t j_offset) { return a_[i * (kBand + 1) + j_offset]; }
    double at(std::size_t i, std::size_t j_offset) const { return a_[i * (kBand + 1) + j_offset]; }
    std::size_t size() const { return n_; }

    bool factorize() {
        const std::size_t w = kBand + 1;
        for (std::size_t i = 0; i < n_; ++i) {
            const std::size_t m_lo = (i > kBand) ? i - kBand : 0;
            double s = a_[i * w];
            for (std::size_t m = m_lo; m < i; ++m) {
                const double rmi = a_[m * w + (i - m)];
                s -= rmi * rmi;
            }
            if (!(s > 0.0)) return false;
            const double rii = std::sqrt(s);
            a_[i * w] = rii;
            const std::size_t k_hi = std::min(kBand, n_ - 1 - i);
            for (std::size_t k = 1; k <= k_hi; ++k) {
                const std::size_t j = i + k;
                const std::size_t lo = (j > kBand) ? j - kBand : 0;
                double t = a_[i * w + k];
                for (std::size_t m = lo; m < i; ++m)
                    t -= a_[m * w + (i - m)] * a_[m * w + (j - m)];
                a_[i * w + k] = t / rii;
            }
        }
        return true;
    }

    // Solves R^T R x = b in place (after factorize()).
    void solve(std::vector<double>& b) const {
        const std::size_t w = kBand + 1;
        for (std::size_t i = 0; i < n_; ++i) {
            const std::size_t m_lo = (i > kBand) ? i - kBand : 0;
            double s = b[i];
            for (std::size_t m = m_lo; m < i; ++m) s -= a_[m * w + (i - m)] * b[m];
            b[i] = s / a_[i * w];
        }
        for (std::size_t ii = n_; ii-- > 0;) {
            const std::size_t k_hi = std::min(kBand, n_ - 1 - ii);
            double s = b[ii];
            for (std::size_t k = 1; k <= k_hi; ++k) s -= a_[ii * w + k] * b[ii + k];
            b[ii] = s / a_[ii * w];
        }
    }

private:
    std::size_t n_;
    std::vector<double> a_;
};

// Clamped-clamped constraint: drop both DOFs of the first and last node.
// Returns the reduced index or npos for a constrained DOF.
std::size_t reduced_index(std::size_t full_dof, std::size_t n_dof_full) {
    if (full_dof < 2 || full_dof >= n_dof_full - 2) return std::string::npos;
    return full_dof - 2;
}

struct ElementMatrix {
    std::array<std::array<double, 4>, 4> k{};
};

ElementMatrix element_stiffness(double ei, double axial, double h) {
    ElementMatrix m;
    const double b = ei / (h * h * h);
    const double kb[4][4] = {{12, 6 * h, -12, 6 * h},
                             {6 * h, 4 * h * h, -6 * h, 2 * h * h},
                             {-12, -6 * h, 12, -6 * h},
                             {6 * h, 2 * h * h, -6 * h, 4 * h * h}};
    // Consistent geometric stiffness of the cubic element.
    const double g = axial / (30.0 * h);
    const double kg[4][4] = {{36, 3 * h, -36, 3 * h},
                             {3 * h, 4 * h * h, -3 * h, -h * h},
                             {-36, -3 * h, 36, -3 * h},
                             {3 * h, -h * h, -3 * h, 4 * h * h}};
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) m.k[r][c] = b * kb[r][c] + g * kg[r][c];
    return m;
}

struct Shapes {
    double n1, n2, n3, n4;
};

Shapes hermite(double xi, double h) {
    const double xi2 = xi * xi;
    const double xi3 = xi2 * xi;
    return {1.0 - 3.0 * xi2 + 2.0 * xi3, h * (xi - 2.0 * xi2 + xi3), 3.0 * xi2 - 2.0 * xi3,
            h * (xi3 - xi2)};
}

std::array<std::size_t, 4> element_dofs(const BeamElement& e) {
    return {2 * e.node_i, 2 * e.node_i + 1, 2 * e.node_j, 2 * e.node_j + 1};
}

BandedSpd build_stiffness(const BeamMesh& mesh) {
    const std::size_t n_dof = 2 * mesh.n_nodes();
    BandedSpd K(n_dof - 4);
    for (const auto& e : mesh.elements) {
        const double h = mesh.node_positions[e.node_j] - mesh.node_positions[e.node_i];
        const ElementMatrix m = element_stiffness(e.ei, e.axial_force, h);
        const auto dofs = element_dofs(e);
        for (int r = 0; r < 4; ++r) {
            const std::size_t gr = reduced_index(dofs[static_cast<std::size_t>(r)], n_dof);
            if (gr == std::string::npos) continue;
            for (int c = 0; c < 4; ++c) {
                const std::size_t gc = reduced_index(dofs[static_cast<std::size_t>(c)], n_dof);
                if (gc == std::string::npos || gc < gr) continue;
                K.at(gr, gc - gr) += m.k[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
            }
        }
    }
    return K;
}

// 4-point Gauss rule on [0, 1].
constexpr std::array<double, 4> kGaussXi = {0.069431844202973712, 0.33000947820757187,
                                            0.66999052179242813, 0.93056815579702629};
constexpr std::array<double, 4> kGaussW = {0.17392742256872693, 0.32607257743127307,
                                           0.32607257743127307, 0.17392742256872693};

std::size_t element_containing(const BeamMesh& mesh, double x) {
    const auto& nodes = mesh.node_positions;
    auto it = std::upper_bound(nodes.begin(), nodes.end(), x);
    std::size_t idx = (it == nodes.begin()) ? 0 : static_cast<std::size_t>(it - nodes.begin()) - 1;
    if (idx >= mesh.elements.size()) idx = mesh.elements.size() - 1;
    return idx;
}

void add_to_load(std::vector<double>& f, std::size_t n_dof, const std::array<std::size_t, 4>& dofs,
                 const Shapes& n, double scale) {
    const double vals[4] = {n.n1, n.n2, n.n3, n.n4};
    for (int r = 0; r < 4; ++r) {
        const std::size_t g = reduced_index(dofs[static_cast<std::size_t>(r)], n_dof);
        if (g != std::string::npos) f[g] += scale * vals[r];
    }
}

std::vector<double> build_load_vector(const BeamMesh& mesh, const LoadCase& load) {
    const std::size_t n_dof = 2 * mesh.n_nodes();
    std::vector<double> f(n_dof - 4, 0.0);
    const double length = mesh.length();

    for (const auto& p : load.point_loads) {
        if (p.position < 0.0 || p.position > length)
            throw PhysicsError("load case: point load outside the beam span");
        const std::size_t e_idx = element_containing(mesh, p.position);
        const auto& e = mesh.elements[e_idx];
        const double x_i = mesh.node_positions[e.node_i];
        const double h = mesh.node_positions[e.node_j] - x_i;
        add_to_load(f, n_dof, element_dofs(e), hermite((p.position - x_i) / h, h), p.force);
    }

    if (!load.distributed_load.empty()) {
        // Piecewise-linear intensity, integrated element by element.
        auto intensity = [&](double x) {
            const auto& s = load.distributed_load;
            if (x <= s.front().position) return s.front().intensity;
            if (x >= s.back().position) return s.back().intensity;
            for (std::size_t i = 0; i + 1 < s.size(); ++i) {
                if (x <= s[i + 1].position) {
                    const double t = (x - s[i].position) / (s[i + 1].position - s[i].position);
                    return s[i].intensity * (1.0 - t) + s[i + 1].intensity * t;
                }
            }
            return s.back().intensity;
        };
        for (const auto& e : mesh.elements) {
            const double x_i = mesh.node_positions[e.node_i];
            const double h = mesh.node_positions[e.node_j] - x_i;
            const auto dofs = element_dofs(e);
            for (int gq = 0; gq < 4; ++gq) {
                const double xi = kGaussXi[static_cast<std::size_t>(gq)];
                const double q = intensity(x_i + xi * h);
                add_to_load(f, n_dof, dofs, hermite(xi, h),
                            q * h * kGaussW[static_cast<std::size_t>(gq)]);
            }
        }
    }

    if (load.distributed_moment != 0.0) {
        // Consistent load of a uniform moment density: integral of m N' over an
        // element is m [-1, 0, +1, 0], which telescopes to the clamped ends.
        for (const auto& e : mesh.elements) {
            const auto dofs = element_dofs(e);
            const double vals[4] = {-1.0, 0.0, 1.0, 0.0};
            for (int r = 0; r < 4; ++r) {
                const std::size_t g = reduced_index(dofs[static_cast<std::size_t>(r)], n_dof);
                if (g != std::string::npos) f[g] += load.distributed_moment * vals[r];
            }
        }
    }
    return f;
}

DeflectionField expand_solution(const BeamMesh& mesh, const std::vector<double>& reduced) {
    DeflectionField field;
    const std::size_t n = mesh.n_nodes();
    field.displacement.assign(n, 0.0);
    field.rotation.assign(n, 0.0);
    for (std::size_t node = 1; node + 1 < n; ++node) {
        field.displacement[node] = reduced[2 * node - 2];
        field.rotation[node] = reduced[2 * node - 1];
    }
    return field;
}

DeflectionField solve_reduced(const BeamMesh& mesh, std::vector<double> f) {
    BandedSpd K = build_stiffness(mesh);
    if (!K.factorize())
        throw SingularSystem(
            "beam stiffness lost positive definiteness (compressive prestress at or beyond "
            "the buckling load)");
    K.solve(f);
    return expand_solution(mesh, f);
}

}  // namespace

void validate(const BeamMesh& mesh) {
    if (mesh.n_nodes() < 3 || mesh.elements.size() < 2)
        throw TooFewElements("beam mesh: at least 2 elements required");
    if (mesh.node_positions.front() != 0.0)
        throw PhysicsError("beam mesh: first node must sit at 0");
    for (std::size_t i = 0; i + 1 < mesh.n_nodes(); ++i)
        if (!(mesh.node_positions[i] < mesh.node_positions[i + 1]))
            throw PhysicsError("beam mesh: node positions must strictly increase");
    for (const auto& e : mesh.elements) {
        if (e.node_j != e.node_i + 1 || e.node_j >= mesh.n_nodes())
            throw PhysicsError("beam mesh: elements must join consecutive nodes");
        if (!(e.ei > 0.0)) throw PhysicsError("beam mesh: element EI must be > 0");
    }
}

BeamMesh build_mesh(const BeamGeometry& beam, const Material& material,
                    std::size_t n_elements) {
    validate(beam);
    validate(material);
    if (n_elements < 2) throw TooFewElements("build_mesh: at least 2 elements required");

    const double ei = material.youngs_modulus * second_moment(beam);
    const double axial = material.residual_stress * beam.width * beam.thickness;

    BeamMesh mesh;
    mesh.node_positions.resize(n_elements + 1);
    for (std::size_t i = 0; i <= n_elements; ++i)
        mesh.node_positions[i] =
            beam.length * static_cast<double>(i) / static_cast<double>(n_elements);
    mesh.elements.resize(n_elements);
    for (std::size_t i = 0; i < n_elements; ++i) mesh.elements[i] = {i, i + 1, ei, axial};
    return mesh;
}

DeflectionField assemble_and_solve(const BeamMesh& mesh, const LoadCase& load) {
    validate(mesh);
    return solve_reduced(mesh, build_load_vector(mesh, load));
}

double evaluate_deflection(const BeamMesh& mesh, const DeflectionField& field, double x) {
    const double length = mesh.length();
    const double xc = std::clamp(x, 0.0, length);
    const auto& e = mesh.elements[element_containing(mesh, xc)];
    const double x_i = mesh.node_positions[e.node_i];
    const double h = mesh.node_positions[e.node_j] - x_i;
    const Shapes n = hermite((xc - x_i) / h, h);
    return n.n1 * field.displacement[e.node_i] + n.n2 * field.rotation[e.node_i] +
           n.n3 * field.displacement[e.node_j] + n.n4 * field.rotation[e.node_j];
}

double numeric_spring_constant(const BeamMesh& mesh) {
    validate(mesh);
    const double centre = mesh.length() / 2.0;
    std::size_t centre_node = std::string::npos;
    for (std::size_t i = 0; i < mesh.n_nodes(); ++i)
        if (std::abs(mesh.node_positions[i] - centre) <= 1e-12 * mesh.length()) {
            centre_node = i;
            break;
        }
    if (centre_node == std::string::npos)
        throw MeshMisaligned("numeric_spring_constant: no node at the beam centre");

    LoadCase load;
    load.point_loads.push_back({mesh.node_positions[centre_node], 1.0});
    const DeflectionField field = assemble_and_solve(mesh, load);
    const double delta = field.displacement[centre_node];
    if (!(delta > 0.0))
        throw NumericalError("numeric_spring_constant: centre deflection not positive");
    return 1.0 / delta;
}

DeflectionField release_profile(const BeamMesh& mesh, const Material& material) {
    validate(mesh);
    validate(material);
    const double length = mesh.length();

    // Mean section inertia recovered from the element EI values.
    double inertia = 0.0;
    for (const auto& e : mesh.elements) inertia += e.ei;
    inertia /= static_cast<double>(mesh.elements.size()) * material.youngs_modulus;

    const double pi = std::numbers::pi;
    const double q = pi * pi * material.stress_gradient * inertia / (length * length);

    LoadCase load;
    load.distributed_load = {{0.0, q}, {length, q}};
    return assemble_and_solve(mesh, load);
}

double calibrate_stress_gradient(const BeamMesh& mesh, const Material& material,
                                 double target_center_deflection) {
    validate(mesh);
    const double centre = mesh.length() / 2.0;
    auto centre_deflection = [&](double gradient) {
        Material m = material;
        m.stress_gradient = gradient;
        const DeflectionField field = release_profile(mesh, m);
        return evaluate_deflection(mesh, field, centre);
    };

    double lo = -1e10, hi = 1e10;
    double f_lo = centre_deflection(lo) - target_center_deflection;
    double f_hi = centre_deflection(hi) - target_center_deflection;
    for (int grow = 0; grow < 12 && f_lo * f_hi > 0.0; ++grow) {
        lo *= 16.0;
        hi *= 16.0;
        f_lo = centre_deflection(lo) - target_center_deflection;
        f_hi = centre_deflection(hi) - target_center_deflection;
    }
    if (f_lo * f_hi > 0.0)
        throw NoConvergence("calibrate_stress_gradient: target deflection not bracketed");

    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double f_mid = centre_deflection(mid) - target_center_deflection;
        if (std::abs(f_mid) < 1e-15 || hi - lo < std::abs(mid) * 1e-15) return mid;
        if ((f_mid < 0.0) == (f_lo < 0.0)) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

HeightProfile gap_function(const BeamMesh& mesh, const DeflectionField& release,
                           const HeightProfile& initial_gap_profile) {
    validate(mesh);
    validate(initial_gap_profile);
    const double span = initial_gap_profile.span();
    if (std::abs(span - mesh.length()) > initial_gap_profile.x_step)
        throw SpanMismatch("gap_function: profile span disagrees with the beam span");

    HeightProfile gap;
    gap.x_start = initial_gap_profile.x_start;
    gap.x_step = initial_gap_profile.x_step;
    gap.heights.resize(initial_gap_profile.size());
    for (std::size_t i = 0; i < gap.heights.size(); ++i) {
        const double x = initial_gap_profile.position(i) - initial_gap_profile.x_start;
        const double g = initial_gap_profile.heights[i] + evaluate_deflection(mesh, release, x);
        if (g < 0.0)
            throw PhysicsError("gap_function: membrane crosses the substrate");
        gap.heights[i] = g;
    }
    return gap;
}

DeflectionField coupled_electrostatic_solve(
    const BeamMesh& mesh, const HeightProfile& gap_profile, double voltage,
    const std::vector<std::pair<double, double>>& actuation_spans, double beam_width,
    const CoupledSolveOptions& options) {
    validate(mesh);
    validate(gap_profile);
    if (voltage < 0.0) throw PhysicsError("coupled solve: voltage must be >= 0");
    if (!(beam_width > 0.0)) throw PhysicsError("coupled solve: beam width must be > 0");
    for (double h : gap_profile.heights)
        if (!(h > 0.0)) throw PhysicsError("coupled solve: gap must be positive everywhere");

    const std::size_t n_dof = 2 * mesh.n_nodes();
    BandedSpd K = build_stiffness(mesh);
    if (!K.factorize())
        throw SingularSystem("coupled solve: prestress at or beyond the buckling load");

    DeflectionField field;
    field.displacement.assign(mesh.n_nodes(), 0.0);
    field.rotation.assign(mesh.n_nodes(), 0.0);

    const double coeff = beam_width * options.permittivity * voltage * voltage / 2.0;
    double previous_change = std::numeric_limits<double>::infinity();
    int growing_changes = 0;

    for (int iter = 0; iter < options.max_iterations; ++iter) {
        std::vector<double> f(n_dof - 4, 0.0);
        for (const auto& e : mesh.elements) {
            const double x_i = mesh.node_positions[e.node_i];
            const double x_j = mesh.node_positions[e.node_j];
            const double h = x_j - x_i;
            const auto dofs = element_dofs(e);
            for (const auto& [span_a, span_b] : actuation_spans) {
                const double a = std::max(x_i, span_a);
                const double b = std::min(x_j, span_b);
                if (!(b > a)) continue;
                for (int gq = 0; gq < 4; ++gq) {
                    const double x = a + kGaussXi[static_cast<std::size_t>(gq)] * (b - a);
                    const double gap = gap_profile.value_at(gap_profile.x_start + x) +
                                       evaluate_deflection(mesh, field, x);
                    if (!(gap > 0.0))
                        throw PullIn("coupled solve: gap collapsed during iteration");
                    const double q = -coeff / (gap * gap); // toward the substrate
                    add_to_load(f, n_dof, dofs, hermite((x - x_i) / h, h),
                                q * (b - a) * kGaussW[static_cast<std::size_t>(gq)]);
                }
            }
        }

        std::vector<double> u = f;
        K.solve(u);
        const DeflectionField next = expand_solution(mesh, u);

        double change = 0.0;
        for (std::size_t i = 0; i < next.displacement.size(); ++i)
            change = std::max(change, std::abs(next.displacement[i] - field.displacement[i]));
        field = next;

        if (change < options.tolerance) return field;
        growing_changes = (change > previous_change) ? growing_changes + 1 : 0;
        if (growing_changes >= 3)
            throw PullIn("coupled solve: displacement iteration diverges (gap collapse)");
        previous_change = change;
    }
    throw NoConvergence("coupled solve: no fixed point within the iteration limit");
}

}  // namespace dgcap
