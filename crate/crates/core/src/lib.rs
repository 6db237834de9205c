//! Exact computations with Hopf algebra structures on the truncated loop
//! path coalgebra `k↻_N` over `GF(p^k)`.
//!
//! ```
//! use loop_hopf::{build_lnd, classify, verify, FamilyParams, Prime};
//!
//! let params = FamilyParams::new(Prime::new(2)?, 2, 1, 1)?;
//! let table = build_lnd(&params)?;
//! assert!(verify(&table).all_passed());
//! assert_eq!(classify(&table).to_string(), "L(2,1)");
//! # Ok::<(), loop_hopf::Error>(())
//! ```

pub mod endo;
pub mod error;
pub mod families;
pub mod hopf;
pub mod linalg;
pub mod loop_coalgebra;
pub mod quivers;
pub mod scalars;
pub mod table_file;

pub use endo::{is_coalgebra_map, LambdaSeq};
pub use error::{Error, Result};
pub use families::{
    build_dual_cyclic, build_graded, build_lnd, build_nc2, relation_suite, FamilyParams, RelationReport,
};
pub use hopf::{
    antipode, classify, enumerate_bialgebras, frobenius, integral, is_local, is_semisimple, normalize_dim_p, verify, verify_bialgebra,
    verify_uniserial, Check, Classification, FamilyTag, HopfReport, MultTable,
};
pub use linalg::Matrix;
pub use loop_coalgebra::{LoopElement, TensorElement};
pub use scalars::{Field, FieldElement, Prime};
