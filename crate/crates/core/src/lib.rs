//! Mod-2 cohomology of small finite groups, and parity certificates for the
//! cohomology of GL_r(F_2) assembled from its parabolic subgroups.
//!
//! The pipeline, bottom to top:
//!
//! * [`f2la`]: dense exact linear algebra over F_2.
//! * [`grpcore`]: finite groups as breadth-first enumerated element tables,
//!   from permutation or invertible-matrix generators.
//! * [`parabolic`]: compositions of an integer and the standard parabolic
//!   subgroups of GL_r(F_q) they determine, with exact orders and, for
//!   q = 2 and r <= 8, explicit matrix generators.
//! * [`cohom`]: free resolutions over the group algebra F_2[G] and the
//!   cohomology dimensions they yield, plus an independent bar-complex
//!   oracle for small groups.
//! * [`webb`]: the parity certificate. dim H^d(GL_r(F_2)) has the same
//!   parity as the sum of dim H^d over the parabolic subgroups attached to
//!   palindromic proper compositions of r, so an odd total proves
//!   nonvanishing. Dimension ledgers let expensive inputs be recorded once
//!   and reused.
//!
//! Everything is deterministic: group elements are indexed in discovery
//! order, eliminations pivot on lowest indices, and reports render byte for
//! byte identically across runs.

pub mod cohom;
pub mod f2la;
pub mod grpcore;
pub mod parabolic;
pub mod webb;

pub use cohom::{
    bar_oracle, build_resolution, cohomology_dim, cohomology_dim_oracle, BuildOptions,
    CohomError, CohomologyResult, FreeModuleMap, Method, Resolution, DEFAULT_MAX_MATRIX_BITS,
};
pub use f2la::{BitMatrix, BitVec, EchelonBuilder, EchelonForm};
pub use grpcore::{close_generators, ElemKind, ElementTable, GeneratorSet, GroupError, GroupLabel};
pub use parabolic::{
    compositions, gl_order, parabolic_generators, parabolic_order, symmetric_compositions,
    Composition, ParabolicSpec,
};
pub use webb::{
    factored_order, ledger_append, parity_sum, render_report, render_report_tsv, AppendOutcome,
    DimResolver, DimSource, Ledger, LedgerEntry, MapResolver, Parity, ParityReport, ReportRow,
    ResolvedDim, Verdict, WebbError,
};
