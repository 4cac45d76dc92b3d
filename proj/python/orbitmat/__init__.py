"""Cycle indicators, height partitions, and sparse inverses for iterations
of fixed-point-free integer functions.

The heavy lifting lives in the compiled extension; this package re-exports
its surface. Typical use:

    >>> import orbitmat
    >>> report = orbitmat.analyze("collatz", 50, verify=True)
    >>> report["degree_m"], report["inverse_nnz"], report["det"]
    (18, 348, 1)
"""

from ._orbitmat import (
    OrbitmatError,
    CycleReport,
    EigenvectorCertificate,
    FunctionSpec,
    HeightProfile,
    LocalFunction,
    OrbitDecomposition,
    PartialMapMatrix,
    SparseSignMatrix,
    analyze,
    apply_basis,
    bareiss_det,
    build_ihat,
    build_m,
    cycle_eigenvector,
    cycle_threshold,
    decompose,
    detect_cycle,
    en_product,
    eval,
    heights,
    intersect_count,
    inverse_via_neumann,
    inverse_via_orbits,
    j_nk,
    localize,
    nilpotency_degree,
    nnz,
    orbit,
    parse_spec,
    power,
    render_svg,
    scan_for_cycle,
    verify_inverse,
)

__version__ = "0.1.0"

__all__ = [
    "OrbitmatError",
    "CycleReport",
    "EigenvectorCertificate",
    "FunctionSpec",
    "HeightProfile",
    "LocalFunction",
    "OrbitDecomposition",
    "PartialMapMatrix",
    "SparseSignMatrix",
    "analyze",
    "apply_basis",
    "bareiss_det",
    "build_ihat",
    "build_m",
    "cycle_eigenvector",
    "cycle_threshold",
    "decompose",
    "detect_cycle",
    "en_product",
    "eval",
    "heights",
    "intersect_count",
    "inverse_via_neumann",
    "inverse_via_orbits",
    "j_nk",
    "localize",
    "nilpotency_degree",
    "nnz",
    "orbit",
    "parse_spec",
    "power",
    "render_svg",
    "scan_for_cycle",
    "verify_inverse",
]
