"""radosc: ladder algebras, coherent states and squeezing for the radial oscillator.

The 3D isotropic oscillator at fixed orbital number l reduces to the
radial Hamiltonian H_l = -d^2/dr^2 + l(l+1)/r^2 + r^2 (stiffness lambda
fixed to 1).  This package implements the operator families that ladder
its (s, l) lattice of eigenstates, the su(1,1)/su(2) structures they
generate, three coherent-state families with their squeezing analysis,
and the time evolution of the wavepacket densities, all cross-checked
against independent series, quadrature and matrix oracles in the test
suite.
"""

from ._version import __version__
from .coherent import (
    CoherentSpec,
    Family,
    Group,
    bg_state,
    bg_wavefunction_closed,
    su11_perelomov_state,
    su11_perelomov_wavefunction_closed,
    su2_perelomov_state,
    transition_probability,
    xi_to_z,
)
from .dynamics import EvolutionSpec, density_evolution, evolve_z, quadrature_trajectory, tau_of
from .errors import (
    ConvergenceError,
    DomainError,
    NoClassicalRegionError,
    RadOscError,
    UnphysicalStateError,
)
from .grids import GridResult
from .observables import (
    Classification,
    VarianceReport,
    concurrence,
    mean_energy,
    squeezing_map,
    su2_variances_closed,
    su2_variances_matrix,
    su11_perelomov_variances_closed,
    su11_variances_series,
    turning_points,
)
from .operators import (
    DickeBasis,
    DickeCase,
    OpKind,
    RepMatrices,
    apply,
    commutator_residual,
    commutator_suite,
    dicke_basis,
    hubbard_su2_on_basis,
    su2_rep_matrices,
    su2_weight,
)
from .specfun import (
    SeriesControl,
    assoc_laguerre,
    bessel_i,
    bessel_j_complex,
    hyp1f1,
    legendre_p,
    log_gamma,
)
from .statespace import (
    HierarchyId,
    HierarchyKind,
    QNums,
    StateVector,
    angular_wavefunction,
    degeneracy,
    energy,
    enumerate_hierarchy,
    evaluate_density,
    general_u_residual,
    inner_product,
    radial_wavefunction,
)
