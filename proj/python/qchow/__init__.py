"""Exact inertia, Riemann-Roch and quantum Chow ring computations for P(a,b)."""

from ._qchow import (  # noqa: F401
    BasisClass,
    CheckResult,
    ClassKind,
    CorrelatorKey,
    CorrelatorTable,
    Football,
    InertiaComponent,
    Insertion,
    PairingMatrix,
    PicClass,
    Polynomial,
    Provenance,
    RewriteSystem,
    RingContext,
    RingPresentation,
    RingReport,
    Sector,
    SectorType,
    SheafClass,
    StructureConstants,
    Weights,
    WpsSector,
    age,
    census,
    classical_presentation,
    confluence_smoke_check,
    denominator_bound_check,
    dilaton_reduce,
    divisor_reduce,
    euler_char,
    h0_genus0,
    involution_sector,
    monomial_sector,
    normal_form,
    p1_reconstruct,
    pairing_matrix,
    pic_canonical,
    pic_degree,
    quantum_presentation,
    ring_rewrite_system,
    seed_from_ring,
    solve_map_picard,
    string_reduce,
    stringy_basis,
    stringy_pairing,
    structure_constants,
    tables_isomorphic,
    three_point_xy,
    torsion_class,
    verify_ring,
    virtual_dim,
    wdvv_residual,
    wps_census,
)

__version__ = "0.1.0"
